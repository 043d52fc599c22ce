//! Finite commutative unital rings as dense operation tables.
//!
//! Every ring is built from a [`RingDef`] recipe and compiled down to full
//! addition and multiplication tables over the element indices
//! `0..order`. Everything downstream works on the tables only.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bitset::BitSet;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

pub type Elem = u32;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed ring. Ideals and automorphisms carry the id of
/// their host so mixing hosts is caught.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u64);

impl RingId {
    fn fresh() -> Self {
        RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// Construction recipe. This is also the on-disk ring definition format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDef {
    Cyclic {
        n: u64,
    },
    /// `F_p[x]/(f)` with `coeffs` listed low to high; `f` must be monic.
    PolyQuotient {
        p: u64,
        coeffs: Vec<u64>,
    },
    Product {
        factors: Vec<RingDef>,
    },
    Quotient {
        base: Box<RingDef>,
        ideal_generators: Vec<Value>,
    },
}

/// How element indices map back to the recipe's natural encoding.
#[derive(Debug, Clone)]
enum Shape {
    Cyclic { n: u64 },
    Poly { p: u64, deg: usize },
    Product { factors: Vec<(usize, Shape)> },
    Quotient {
        base: Box<Shape>,
        base_order: usize,
        reps: Vec<Elem>,
        projection: Vec<Elem>,
    },
}

#[derive(Clone)]
pub struct FiniteRing {
    id: RingId,
    order: usize,
    add: Arc<[Elem]>,
    mul: Arc<[Elem]>,
    neg: Arc<[Elem]>,
    zero: Elem,
    one: Elem,
    recipe: RingDef,
    shape: Shape,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("recipe", &self.recipe)
            .finish()
    }
}

/// Result of [`FiniteRing::quotient`]: the ring `R/I` and the projection
/// `R -> R/I` as an element-index function.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    pub projection: Vec<Elem>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_order(order: u128, bounds: &Bounds) -> Result<usize> {
    if order > bounds.order as u128 {
        return Err(Error::capacity(
            "ring order",
            order.min(usize::MAX as u128) as usize,
            bounds.order,
        ));
    }
    Ok(order as usize)
}

impl FiniteRing {
    fn assemble(
        order: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
        recipe: RingDef,
        shape: Shape,
    ) -> Self {
        let mut neg = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == zero {
                    neg[a] = b as Elem;
                    break;
                }
            }
        }
        Self {
            id: RingId::fresh(),
            order,
            add: add.into(),
            mul: mul.into(),
            neg: neg.into(),
            zero,
            one,
            recipe,
            shape,
        }
    }

    /// `Z/nZ`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::cyclic_bounded(n, &Bounds::default())
    }

    pub fn cyclic_bounded(n: u64, bounds: &Bounds) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("cyclic modulus must be positive", None));
        }
        let order = check_order(n as u128, bounds)?;
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as Elem);
                mul.push(((a * b) % n) as Elem);
            }
        }
        Ok(Self::assemble(
            order,
            add,
            mul,
            0,
            (1 % n) as Elem,
            RingDef::Cyclic { n },
            Shape::Cyclic { n },
        ))
    }

    /// `F_p[x]/(f)`, coefficients of `f` listed low to high.
    pub fn poly_quotient(p: u64, coeffs: &[u64]) -> Result<Self> {
        Self::poly_quotient_bounded(p, coeffs, &Bounds::default())
    }

    pub fn poly_quotient_bounded(p: u64, coeffs: &[u64], bounds: &Bounds) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::validation(format!("{p} is not prime"), None));
        }
        if coeffs.len() < 2 {
            return Err(Error::validation("modulus must have degree at least 1", None));
        }
        let f: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
        if *f.last().unwrap() != 1 {
            return Err(Error::validation("modulus is not monic", None));
        }
        let deg = f.len() - 1;
        let order = check_order((p as u128).saturating_pow(deg as u32), bounds)?;

        let digits = |mut a: usize| -> Vec<u64> {
            let mut d = vec![0; deg];
            for slot in d.iter_mut() {
                *slot = a as u64 % p;
                a /= p as usize;
            }
            d
        };
        let index = |d: &[u64]| -> Elem {
            d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as Elem
        };
        let mul_reduce = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut prod = vec![0u64; 2 * deg];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for top in (deg..2 * deg).rev() {
                let c = prod[top];
                if c == 0 {
                    continue;
                }
                prod[top] = 0;
                for (j, &fj) in f[..deg].iter().enumerate() {
                    let k = top - deg + j;
                    prod[k] = (prod[k] + c * (p - fj) % p) % p;
                }
            }
            prod.truncate(deg);
            prod
        };

        let all_digits: Vec<Vec<u64>> = (0..order).map(digits).collect();
        let mut add = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                let s: Vec<u64> = all_digits[a]
                    .iter()
                    .zip(&all_digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * order + b] = index(&s);
            }
        }
        // Multiplication by bilinearity: peel the leading monomial off `a`
        // and reuse the already computed row for the remainder.
        let mut mul = vec![0; order * order];
        let pu = p as usize;
        for b in 0..order {
            let mut mono = vec![vec![0 as Elem; pu]; deg];
            for (i, row) in mono.iter_mut().enumerate() {
                for (c, slot) in row.iter_mut().enumerate().skip(1) {
                    let mut m = vec![0u64; deg];
                    m[i] = c as u64;
                    *slot = index(&mul_reduce(&m, &all_digits[b]));
                }
            }
            for a in 1..order {
                let d = &all_digits[a];
                let top = (0..deg).rev().find(|&i| d[i] != 0).unwrap();
                let c = d[top] as usize;
                let low = a - c * pu.pow(top as u32);
                let partial = mul[low * order + b];
                mul[a * order + b] = add[partial as usize * order + mono[top][c] as usize];
            }
        }
        let one = if order == 1 { 0 } else { 1 };
        Ok(Self::assemble(
            order,
            add,
            mul,
            0,
            one,
            RingDef::PolyQuotient {
                p,
                coeffs: coeffs.to_vec(),
            },
            Shape::Poly { p, deg },
        ))
    }

    /// Direct product; element index is mixed radix with the first factor
    /// most significant.
    pub fn product(factors: &[&FiniteRing]) -> Result<Self> {
        Self::product_bounded(factors, &Bounds::default())
    }

    pub fn product_bounded(factors: &[&FiniteRing], bounds: &Bounds) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::validation("product needs at least one factor", None));
        }
        let total: u128 = factors.iter().map(|r| r.order as u128).product();
        let order = check_order(total, bounds)?;
        let orders: Vec<usize> = factors.iter().map(|r| r.order).collect();
        let strides = strides(&orders);
        let split = |x: usize| -> Vec<usize> {
            orders
                .iter()
                .zip(&strides)
                .map(|(&n, &s)| (x / s) % n)
                .collect()
        };
        let comps: Vec<Vec<usize>> = (0..order).map(split).collect();
        let mut add = vec![0; order * order];
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                let mut s = 0usize;
                let mut m = 0usize;
                for (k, r) in factors.iter().enumerate() {
                    let (x, y) = (comps[a][k], comps[b][k]);
                    s += r.add[x * r.order + y] as usize * strides[k];
                    m += r.mul[x * r.order + y] as usize * strides[k];
                }
                add[a * order + b] = s as Elem;
                mul[a * order + b] = m as Elem;
            }
        }
        let combine = |pick: &dyn Fn(&FiniteRing) -> Elem| -> Elem {
            factors
                .iter()
                .zip(&strides)
                .map(|(r, &s)| pick(r) as usize * s)
                .sum::<usize>() as Elem
        };
        let zero = combine(&|r| r.zero);
        let one = combine(&|r| r.one);
        Ok(Self::assemble(
            order,
            add,
            mul,
            zero,
            one,
            RingDef::Product {
                factors: factors.iter().map(|r| r.recipe.clone()).collect(),
            },
            Shape::Product {
                factors: factors.iter().map(|r| (r.order, r.shape.clone())).collect(),
            },
        ))
    }

    /// `R/I`. Cosets are numbered by their smallest representative.
    pub fn quotient(&self, ideal: &Ideal) -> Result<Quotient> {
        self.check_host(ideal.host())?;
        ideal.validate(self)?;
        let n = self.order;
        let members: Vec<usize> = ideal.members().iter().collect();
        let mut projection = vec![Elem::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if projection[x] != Elem::MAX {
                continue;
            }
            let c = reps.len() as Elem;
            reps.push(x as Elem);
            for &i in &members {
                projection[self.add[x * n + i] as usize] = c;
            }
        }
        let m = reps.len();
        let mut add = vec![0; m * m];
        let mut mul = vec![0; m * m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                add[a * m + b] = projection[self.add(ra, rb) as usize];
                mul[a * m + b] = projection[self.mul(ra, rb) as usize];
            }
        }
        let generators = ideal
            .small_generating_set(self)
            .into_iter()
            .map(|x| self.encode(x))
            .collect();
        let ring = Self::assemble(
            m,
            add,
            mul,
            projection[self.zero as usize],
            projection[self.one as usize],
            RingDef::Quotient {
                base: Box::new(self.recipe.clone()),
                ideal_generators: generators,
            },
            Shape::Quotient {
                base: Box::new(self.shape.clone()),
                base_order: n,
                reps,
                projection: projection.clone(),
            },
        );
        Ok(Quotient { ring, projection })
    }

    /// Builds a ring from its definition, honouring the configured bounds.
    pub fn from_def(def: &RingDef, bounds: &Bounds) -> Result<Self> {
        match def {
            RingDef::Cyclic { n } => Self::cyclic_bounded(*n, bounds),
            RingDef::PolyQuotient { p, coeffs } => Self::poly_quotient_bounded(*p, coeffs, bounds),
            RingDef::Product { factors } => {
                let built = factors
                    .iter()
                    .map(|f| Self::from_def(f, bounds))
                    .collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteRing> = built.iter().collect();
                Self::product_bounded(&refs, bounds)
            }
            RingDef::Quotient {
                base,
                ideal_generators,
            } => {
                let base = Self::from_def(base, bounds)?;
                let gens = ideal_generators
                    .iter()
                    .map(|v| base.decode(v))
                    .collect::<Result<Vec<_>>>()?;
                let ideal = Ideal::generated(&base, gens.iter().copied());
                Ok(base.quotient(&ideal)?.ring)
            }
        }
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn recipe(&self) -> &RingDef {
        &self.recipe
    }

    /// The zero ring, where `0 = 1`.
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> u64 {
        let mut x = self.one;
        let mut c = 1;
        while x != self.zero {
            x = self.add(x, self.one);
            c += 1;
        }
        c
    }

    pub(crate) fn check_host(&self, other: RingId) -> Result<()> {
        if other == self.id {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    /// Factor orders when the ring was built as a product.
    pub fn product_factor_orders(&self) -> Option<Vec<usize>> {
        match &self.shape {
            Shape::Product { factors } => Some(factors.iter().map(|(n, _)| *n).collect()),
            _ => None,
        }
    }

    /// Checks the commutative unital ring axioms. Exhaustive over triples up
    /// to order 256; above that, triples are sampled with the given seed.
    pub fn check_axioms(&self, seed: u64) -> Result<()> {
        let n = self.order as Elem;
        let fail = |law: &str, a: Elem, b: Elem| Err(Error::validation(law, Some((a, b))));
        if self.order == 1 && self.zero != self.one {
            return fail("trivial ring must have zero = one", 0, 0);
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", a, self.zero);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", a, self.one);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", a, self.neg(a));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", a, b);
                }
            }
        }
        let check_triple = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", a, b);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", a, b);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("distributivity", a, b);
            }
            Ok(())
        };
        if self.order <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..200_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                check_triple(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Natural encoding of an element: an integer for cyclic rings, a
    /// coefficient list for polynomial quotients, a tuple for products and
    /// the smallest representative for quotients.
    pub fn encode(&self, x: Elem) -> Value {
        encode_shape(&self.shape, x as usize)
    }

    pub fn decode(&self, v: &Value) -> Result<Elem> {
        decode_shape(&self.shape, v).map(|x| x as Elem)
    }
}

fn strides(orders: &[usize]) -> Vec<usize> {
    let mut s = vec![1; orders.len()];
    for k in (0..orders.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * orders[k + 1];
    }
    s
}

fn encode_shape(shape: &Shape, x: usize) -> Value {
    match shape {
        Shape::Cyclic { .. } => Value::from(x as u64),
        Shape::Poly { p, deg } => {
            let mut a = x as u64;
            let mut out = Vec::with_capacity(*deg);
            for _ in 0..*deg {
                out.push(Value::from(a % p));
                a /= p;
            }
            Value::Array(out)
        }
        Shape::Product { factors } => {
            let orders: Vec<usize> = factors.iter().map(|(n, _)| *n).collect();
            let st = strides(&orders);
            Value::Array(
                factors
                    .iter()
                    .zip(&st)
                    .map(|((n, s), &stride)| encode_shape(s, (x / stride) % n))
                    .collect(),
            )
        }
        Shape::Quotient { base, reps, .. } => encode_shape(base, reps[x] as usize),
    }
}

fn decode_shape(shape: &Shape, v: &Value) -> Result<usize> {
    let bad = || Error::Parse(format!("cannot decode element {v}"));
    match shape {
        Shape::Cyclic { n } => {
            let k = v.as_i64().ok_or_else(bad)?;
            Ok(k.rem_euclid(*n as i64) as usize)
        }
        Shape::Poly { p, deg } => {
            let arr = v.as_array().ok_or_else(bad)?;
            if arr.len() > *deg {
                return Err(bad());
            }
            let mut x = 0u64;
            for c in arr.iter().rev() {
                let c = c.as_i64().ok_or_else(bad)?.rem_euclid(*p as i64) as u64;
                x = x * p + c;
            }
            Ok(x as usize)
        }
        Shape::Product { factors } => {
            let arr = v.as_array().ok_or_else(bad)?;
            if arr.len() != factors.len() {
                return Err(bad());
            }
            let orders: Vec<usize> = factors.iter().map(|(n, _)| *n).collect();
            let st = strides(&orders);
            let mut x = 0;
            for ((_, s), (item, stride)) in factors.iter().zip(arr.iter().zip(&st)) {
                x += decode_shape(s, item)? * stride;
            }
            Ok(x)
        }
        Shape::Quotient {
            base,
            base_order,
            projection,
            ..
        } => {
            let b = decode_shape(base, v)?;
            if b >= *base_order {
                return Err(bad());
            }
            Ok(projection[b] as usize)
        }
    }
}

/// A validated ring automorphism, stored with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingAutomorphism {
    ring: RingId,
    image: Vec<Elem>,
    inverse: Vec<Elem>,
}

impl RingAutomorphism {
    /// Validates `image` as an automorphism of `ring`. On failure the error
    /// names the violated law and a witness pair.
    pub fn new(ring: &FiniteRing, image: Vec<Elem>) -> Result<Self> {
        let n = ring.order;
        if image.len() != n {
            return Err(Error::validation(
                format!("image has length {} but ring has order {n}", image.len()),
                None,
            ));
        }
        let mut inverse = vec![Elem::MAX; n];
        for (x, &y) in image.iter().enumerate() {
            if y as usize >= n {
                return Err(Error::validation("image out of range", Some((x as Elem, y))));
            }
            if inverse[y as usize] != Elem::MAX {
                return Err(Error::validation(
                    "not bijective",
                    Some((inverse[y as usize], x as Elem)),
                ));
            }
            inverse[y as usize] = x as Elem;
        }
        if image[ring.one as usize] != ring.one {
            return Err(Error::validation(
                "unit not preserved",
                Some((ring.one, image[ring.one as usize])),
            ));
        }
        if image[ring.zero as usize] != ring.zero {
            return Err(Error::validation(
                "zero not preserved",
                Some((ring.zero, image[ring.zero as usize])),
            ));
        }
        for a in ring.elements() {
            for b in ring.elements() {
                let (fa, fb) = (image[a as usize], image[b as usize]);
                if image[ring.add(a, b) as usize] != ring.add(fa, fb) {
                    return Err(Error::validation("additivity", Some((a, b))));
                }
                if image[ring.mul(a, b) as usize] != ring.mul(fa, fb) {
                    return Err(Error::validation("multiplicativity", Some((a, b))));
                }
            }
        }
        Ok(Self {
            ring: ring.id,
            image,
            inverse,
        })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        let image: Vec<Elem> = ring.elements().collect();
        Self {
            ring: ring.id,
            inverse: image.clone(),
            image,
        }
    }

    /// `x -> x^c` where `c` is the (prime) characteristic.
    pub fn frobenius(ring: &FiniteRing) -> Result<Self> {
        let c = ring.characteristic();
        if !is_prime(c) {
            return Err(Error::Domain(format!(
                "Frobenius needs prime characteristic, found {c}"
            )));
        }
        Self::new(ring, ring.elements().map(|x| ring.pow(x, c)).collect())
    }

    /// Exchanges product factors `i` and `j`, which must have equal recipes.
    pub fn swap(ring: &FiniteRing, i: usize, j: usize) -> Result<Self> {
        let (factors, defs) = match (&ring.shape, &ring.recipe) {
            (Shape::Product { factors }, RingDef::Product { factors: defs }) => (factors, defs),
            _ => return Err(Error::Domain("swap needs a product ring".into())),
        };
        if i >= factors.len() || j >= factors.len() {
            return Err(Error::Domain(format!(
                "swap indices {i},{j} out of range for {} factors",
                factors.len()
            )));
        }
        if defs[i] != defs[j] {
            return Err(Error::Domain(format!("factors {i} and {j} differ")));
        }
        let orders: Vec<usize> = factors.iter().map(|(n, _)| *n).collect();
        let st = strides(&orders);
        let image = (0..ring.order)
            .map(|x| {
                let mut c: Vec<usize> = orders.iter().zip(&st).map(|(&n, &s)| (x / s) % n).collect();
                c.swap(i, j);
                c.iter().zip(&st).map(|(a, s)| a * s).sum::<usize>() as Elem
            })
            .collect();
        Self::new(ring, image)
    }

    /// `a_1 x ... x a_n` on a product ring built from the automorphisms'
    /// hosts in order.
    pub fn product(ring: &FiniteRing, parts: &[&RingAutomorphism]) -> Result<Self> {
        let orders = ring
            .product_factor_orders()
            .ok_or_else(|| Error::Domain("product automorphism needs a product ring".into()))?;
        if orders.len() != parts.len() || orders.iter().zip(parts).any(|(&n, a)| a.image.len() != n)
        {
            return Err(Error::HostMismatch);
        }
        let st = strides(&orders);
        let image = (0..ring.order)
            .map(|x| {
                orders
                    .iter()
                    .zip(&st)
                    .zip(parts)
                    .map(|((&n, &s), a)| a.image[(x / s) % n] as usize * s)
                    .sum::<usize>() as Elem
            })
            .collect();
        Self::new(ring, image)
    }

    /// The automorphism induced on `R/I`. Fails unless `a(I) = I`.
    pub fn induced(&self, base: &FiniteRing, ideal: &Ideal, quotient: &Quotient) -> Result<Self> {
        base.check_host(self.ring)?;
        if !self.preserves(ideal) {
            return Err(Error::Domain("ideal is not invariant".into()));
        }
        let q = &quotient.ring;
        let mut image = vec![0; q.order];
        for x in base.elements() {
            image[quotient.projection[x as usize] as usize] =
                quotient.projection[self.apply(x) as usize];
        }
        Self::new(q, image)
    }

    pub fn host(&self) -> RingId {
        self.ring
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x as usize]
    }

    #[inline]
    pub fn preimage(&self, x: Elem) -> Elem {
        self.inverse[x as usize]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &y)| i as Elem == y)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::HostMismatch);
        }
        let image: Vec<Elem> = other.image.iter().map(|&x| self.image[x as usize]).collect();
        let inverse: Vec<Elem> = self.inverse.iter().map(|&x| other.inverse[x as usize]).collect();
        Ok(Self {
            ring: self.ring,
            image,
            inverse,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            ring: self.ring,
            image: self.inverse.clone(),
            inverse: self.image.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self {
            ring: self.ring,
            image: (0..self.image.len() as Elem).collect(),
            inverse: (0..self.image.len() as Elem).collect(),
        };
        for _ in 0..e.unsigned_abs() {
            acc = base.compose(&acc).expect("same host");
        }
        acc
    }

    /// Least `p >= 1` with `a^p = id`.
    pub fn period(&self) -> usize {
        let mut lcm = 1usize;
        let mut seen = vec![false; self.image.len()];
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x] as usize;
                len += 1;
            }
            lcm = lcm / gcd(lcm, len) * len;
        }
        lcm
    }

    /// Whether `a(I) = I`.
    pub fn preserves(&self, ideal: &Ideal) -> bool {
        ideal.members().iter().all(|x| ideal.contains(self.apply(x as Elem)))
    }

    /// Elementwise image `a(S)` of an element set.
    pub fn map_set(&self, s: &BitSet) -> BitSet {
        s.iter().map(|x| self.image[x] as usize).collect()
    }

    /// Elementwise preimage `a^{-1}(S)`.
    pub fn pull_set(&self, s: &BitSet) -> BitSet {
        s.iter().map(|x| self.inverse[x] as usize).collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Backtracking search for ring homomorphisms `src -> dst` that are
/// bijective and unital, with constraint propagation through the tables.
/// `visit` returns `false` to stop the search.
fn search_isomorphisms(src: &FiniteRing, dst: &FiniteRing, visit: &mut dyn FnMut(&[Elem]) -> bool) {
    if src.order != dst.order {
        return;
    }
    let n = src.order;
    let mut map = vec![Elem::MAX; n];
    let mut used = vec![false; n];
    let mut assigned = Vec::new();
    if !assign(src, dst, &mut map, &mut used, &mut assigned, src.zero, dst.zero)
        || !assign(src, dst, &mut map, &mut used, &mut assigned, src.one, dst.one)
    {
        return;
    }
    branch(src, dst, &mut map, &mut used, &mut assigned, visit);
}

fn branch(
    src: &FiniteRing,
    dst: &FiniteRing,
    map: &mut Vec<Elem>,
    used: &mut Vec<bool>,
    assigned: &mut Vec<Elem>,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> bool {
    let Some(x) = map.iter().position(|&y| y == Elem::MAX) else {
        return visit(map);
    };
    for t in 0..dst.order {
        if used[t] {
            continue;
        }
        let (saved_map, saved_used, saved_len) = (map.clone(), used.clone(), assigned.len());
        if assign(src, dst, map, used, assigned, x as Elem, t as Elem)
            && !branch(src, dst, map, used, assigned, visit)
        {
            return false;
        }
        *map = saved_map;
        *used = saved_used;
        assigned.truncate(saved_len);
    }
    true
}

/// Sets `map[x] = t` and propagates through sums and products of all
/// assigned pairs. Returns `false` on conflict.
fn assign(
    src: &FiniteRing,
    dst: &FiniteRing,
    map: &mut [Elem],
    used: &mut [bool],
    assigned: &mut Vec<Elem>,
    x: Elem,
    t: Elem,
) -> bool {
    let mut work = vec![(x, t)];
    while let Some((x, t)) = work.pop() {
        let cur = map[x as usize];
        if cur != Elem::MAX {
            if cur != t {
                return false;
            }
            continue;
        }
        if used[t as usize] {
            return false;
        }
        map[x as usize] = t;
        used[t as usize] = true;
        assigned.push(x);
        for i in 0..assigned.len() {
            let y = assigned[i];
            let fy = map[y as usize];
            work.push((src.add(x, y), dst.add(t, fy)));
            work.push((src.mul(x, y), dst.mul(t, fy)));
        }
    }
    true
}

/// All automorphisms, identity first, in lexicographic order of images.
pub fn enumerate_automorphisms(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<RingAutomorphism>> {
    if ring.order > bounds.automorphisms {
        return Err(Error::Capacity {
            what: "ring order for automorphism search",
            actual: ring.order,
            bound: bounds.automorphisms,
            hint: "; supply automorphisms explicitly",
        });
    }
    let mut images = Vec::new();
    search_isomorphisms(ring, ring, &mut |m| {
        images.push(m.to_vec());
        true
    });
    images.sort();
    Ok(images
        .into_iter()
        .map(|image| {
            let mut inverse = vec![0; image.len()];
            for (x, &y) in image.iter().enumerate() {
                inverse[y as usize] = x as Elem;
            }
            RingAutomorphism {
                ring: ring.id,
                image,
                inverse,
            }
        })
        .collect())
}

/// Finds some ring isomorphism `a -> b` by backtracking. A test utility:
/// it says nothing about canonical forms.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<Elem>> {
    let mut found = None;
    search_isomorphisms(a, b, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cyclic() {
        let r = FiniteRing::cyclic(1).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.zero(), r.one());
        r.check_axioms(0).unwrap();
    }

    #[test]
    fn cyclic_bound() {
        let bounds = Bounds {
            order: 10,
            ..Bounds::default()
        };
        assert!(matches!(
            FiniteRing::cyclic_bounded(11, &bounds),
            Err(Error::Capacity { .. })
        ));
        assert!(FiniteRing::cyclic(4097).is_err());
    }

    #[test]
    fn poly_validation() {
        assert!(FiniteRing::poly_quotient(4, &[1, 1]).is_err());
        assert!(FiniteRing::poly_quotient(2, &[1, 1, 0]).is_err());
        let f3 = FiniteRing::poly_quotient(3, &[0, 1]).unwrap();
        let z3 = FiniteRing::cyclic(3).unwrap();
        assert_eq!(f3.add, z3.add);
        assert_eq!(f3.mul, z3.mul);
    }

    #[test]
    fn dual_numbers_nilpotent() {
        let r = FiniteRing::poly_quotient(2, &[0, 0, 1]).unwrap();
        let x = r.decode(&serde_json::json!([0, 1])).unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        r.check_axioms(0).unwrap();
    }

    #[test]
    fn product_crt() {
        let z2 = FiniteRing::cyclic(2).unwrap();
        let z3 = FiniteRing::cyclic(3).unwrap();
        let p = FiniteRing::product(&[&z2, &z3]).unwrap();
        p.check_axioms(0).unwrap();
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert!(find_isomorphism(&p, &z6).is_some());
        let z4 = FiniteRing::cyclic(4).unwrap();
        let f2sq = FiniteRing::product(&[&z2, &z2]).unwrap();
        assert!(find_isomorphism(&z4, &f2sq).is_none());
    }

    #[test]
    fn encode_roundtrip() {
        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        let z3 = FiniteRing::cyclic(3).unwrap();
        let p = FiniteRing::product(&[&f4, &z3]).unwrap();
        for x in p.elements() {
            assert_eq!(p.decode(&p.encode(x)).unwrap(), x);
        }
        assert_eq!(p.encode(p.one()), serde_json::json!([[1, 0], 1]));
    }

    #[test]
    fn rejects_non_unital_map() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let err = RingAutomorphism::new(&z6, vec![0, 2, 1, 3, 4, 5]).unwrap_err();
        assert!(matches!(err, Error::Validation { ref law, .. } if law.contains("unit")));
        let err = RingAutomorphism::new(&z6, vec![0, 1, 1, 3, 4, 5]).unwrap_err();
        assert!(matches!(err, Error::Validation { ref law, .. } if law.contains("bijective")));
    }

    #[test]
    fn frobenius_f4() {
        let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap();
        let fr = RingAutomorphism::frobenius(&f4).unwrap();
        assert!(!fr.is_identity());
        assert_eq!(fr.period(), 2);
        assert!(fr.pow(2).is_identity());
        let autos = enumerate_automorphisms(&f4, &Bounds::default()).unwrap();
        assert_eq!(autos.len(), 2);
        assert!(autos[0].is_identity());
        assert_eq!(autos[1], fr);
    }

    #[test]
    fn cyclic_has_only_identity() {
        for n in 1..=16 {
            let r = FiniteRing::cyclic(n).unwrap();
            let autos = enumerate_automorphisms(&r, &Bounds::default()).unwrap();
            assert_eq!(autos.len(), 1, "Z/{n}");
            assert!(autos[0].is_identity());
        }
    }

    #[test]
    fn automorphism_bound() {
        let r = FiniteRing::cyclic(17).unwrap();
        let err = enumerate_automorphisms(&r, &Bounds::default()).unwrap_err();
        assert!(err.to_string().contains("explicitly"));
    }

    #[test]
    fn swap_on_square() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let r = FiniteRing::product(&[&f2, &f2]).unwrap();
        let s = RingAutomorphism::swap(&r, 0, 1).unwrap();
        let autos = enumerate_automorphisms(&r, &Bounds::default()).unwrap();
        assert_eq!(autos, vec![RingAutomorphism::identity(&r), s]);
        let z3 = FiniteRing::cyclic(3).unwrap();
        let mixed = FiniteRing::product(&[&f2, &z3]).unwrap();
        assert!(RingAutomorphism::swap(&mixed, 0, 1).is_err());
    }
}
