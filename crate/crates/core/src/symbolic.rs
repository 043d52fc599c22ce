//! Symbolic model of a principal ideal domain with `k` primes (such as the
//! integers localized away from all but `k` primes).
//!
//! Nonzero ideals are `(p_1^{a_1} ... p_k^{a_k})` and are stored as the
//! exponent vector `a`; the zero ideal is `Bottom`. Which primes are used
//! never matters, so the ring is described by `k` alone.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::verdict::{Scope, Status, Verdict};

/// Largest supported prime count.
pub const MAX_PRIMES: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentIdeal {
    k: u8,
    bottom: bool,
    e: [u32; MAX_PRIMES],
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_PRIMES {
        return Err(Error::Domain(format!(
            "prime count must be in 1..={MAX_PRIMES}, got {k}"
        )));
    }
    Ok(())
}

impl ExponentIdeal {
    pub fn bottom(k: usize) -> Self {
        Self {
            k: k as u8,
            bottom: true,
            e: [0; MAX_PRIMES],
        }
    }

    pub fn exponents(exps: &[u32]) -> Result<Self> {
        check_k(exps.len())?;
        let mut e = [0; MAX_PRIMES];
        e[..exps.len()].copy_from_slice(exps);
        Ok(Self {
            k: exps.len() as u8,
            bottom: false,
            e,
        })
    }

    /// The unit ideal `R`, all exponents zero.
    pub fn whole(k: usize) -> Self {
        Self {
            k: k as u8,
            bottom: false,
            e: [0; MAX_PRIMES],
        }
    }

    /// The maximal ideal `(p_c)`.
    pub fn unit_vector(k: usize, c: usize) -> Self {
        let mut x = Self::whole(k);
        x.e[c] = 1;
        x
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn is_bottom(&self) -> bool {
        self.bottom
    }

    pub fn is_whole(&self) -> bool {
        !self.bottom && self.exps().iter().all(|&a| a == 0)
    }

    /// Exponents; empty for `Bottom`.
    pub fn exps(&self) -> &[u32] {
        if self.bottom {
            &[]
        } else {
            &self.e[..self.k as usize]
        }
    }

    fn same_k(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Domain(format!(
                "exponent vectors of length {} and {}",
                self.k, other.k
            )));
        }
        Ok(())
    }

    /// `self ⊆ other`: divisibility of generators, reversed.
    pub fn contained_in(&self, other: &Self) -> bool {
        if self.bottom {
            return true;
        }
        if other.bottom {
            return false;
        }
        self.exps().iter().zip(other.exps()).all(|(a, b)| a >= b)
    }

    /// `I + J`: componentwise minimum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_k(other)?;
        Ok(match (self.bottom, other.bottom) {
            (true, _) => *other,
            (_, true) => *self,
            _ => {
                let mut x = *self;
                for c in 0..self.k() {
                    x.e[c] = self.e[c].min(other.e[c]);
                }
                x
            }
        })
    }

    /// `IJ`: componentwise sum, `Bottom` absorbing.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_k(other)?;
        if self.bottom || other.bottom {
            return Ok(Self::bottom(self.k()));
        }
        let mut x = *self;
        for c in 0..self.k() {
            x.e[c] = self.e[c].saturating_add(other.e[c]);
        }
        Ok(x)
    }

    pub fn radical(&self) -> Self {
        let mut x = *self;
        for c in 0..self.k() {
            x.e[c] = x.e[c].min(1);
        }
        x
    }

    /// Whether every coordinate in `coords` is zero.
    pub fn vanishes_on(&self, coords: &[usize]) -> bool {
        !self.bottom && coords.iter().all(|&c| self.e[c] == 0)
    }

    /// Preimage under the automorphism permuting primes by `perm`:
    /// coordinate `c` of the result is coordinate `perm[c]` of `self`.
    pub fn pullback(&self, perm: &[usize]) -> Self {
        if self.bottom {
            return *self;
        }
        let mut x = *self;
        for (c, &pc) in perm.iter().enumerate() {
            x.e[c] = self.e[pc];
        }
        x
    }
}

impl fmt::Debug for ExponentIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bottom {
            write!(f, "⊥")
        } else {
            write!(f, "{:?}", self.exps())
        }
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bottom: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponents: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

impl Serialize for ExponentIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = if self.bottom {
            IdealRepr {
                bottom: Some(true),
                exponents: None,
                k: Some(self.k()),
            }
        } else {
            IdealRepr {
                bottom: None,
                exponents: Some(self.exps().to_vec()),
                k: None,
            }
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = IdealRepr::deserialize(d)?;
        match (repr.bottom, repr.exponents) {
            (Some(true), None) => {
                let k = repr.k.ok_or_else(|| D::Error::custom("bottom needs k"))?;
                check_k(k).map_err(D::Error::custom)?;
                Ok(Self::bottom(k))
            }
            (None | Some(false), Some(e)) => Self::exponents(&e).map_err(D::Error::custom),
            _ => Err(D::Error::custom("expected {\"bottom\": true} or {\"exponents\": [...]}")),
        }
    }
}

/// A finite set of symbolic ideals summing to `R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymGenerator {
    k: usize,
    members: Vec<ExponentIdeal>,
}

fn canonical(mut members: Vec<ExponentIdeal>) -> Vec<ExponentIdeal> {
    members.sort_unstable();
    members.dedup();
    members
}

impl SymGenerator {
    pub fn new(k: usize, members: Vec<ExponentIdeal>) -> Result<Self> {
        if !sym_is_generator(k, &members)? {
            return Err(Error::Domain("ideals do not sum to the whole ring".into()));
        }
        Ok(Self {
            k,
            members: canonical(members),
        })
    }

    /// Builds from exponent vectors; `None` is `Bottom`.
    pub fn from_vectors(k: usize, vectors: &[Option<&[u32]>]) -> Result<Self> {
        let members = vectors
            .iter()
            .map(|v| match v {
                Some(e) => ExponentIdeal::exponents(e),
                None => Ok(ExponentIdeal::bottom(k)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, members)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[ExponentIdeal] {
        &self.members
    }

    pub fn contains_whole(&self) -> bool {
        self.members.iter().any(|m| m.is_whole())
    }

    /// Largest exponent over non-`Bottom` members.
    pub fn max_exponent(&self) -> u32 {
        self.members
            .iter()
            .flat_map(|m| m.exps().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn pullback(&self, perm: &[usize]) -> Self {
        Self {
            k: self.k,
            members: canonical(self.members.iter().map(|m| m.pullback(perm)).collect()),
        }
    }

    /// Drops members strictly contained in another member.
    pub fn normalized(&self) -> Self {
        let keep = self
            .members
            .iter()
            .filter(|x| !self.members.iter().any(|y| y != *x && x.contained_in(y)))
            .copied()
            .collect();
        Self {
            k: self.k,
            members: keep,
        }
    }
}

/// Generator test: the componentwise minimum over non-`Bottom` members is
/// the zero vector.
pub fn sym_is_generator(k: usize, members: &[ExponentIdeal]) -> Result<bool> {
    check_k(k)?;
    if let Some(m) = members.iter().find(|m| m.k() != k) {
        return Err(Error::Domain(format!(
            "member of length {} in a ring with {k} primes",
            m.k()
        )));
    }
    Ok((0..k).all(|c| members.iter().any(|m| !m.is_bottom() && m.e[c] == 0)))
}

/// `A ≺ B`.
pub fn sym_refines(a: &SymGenerator, b: &SymGenerator) -> Result<bool> {
    if a.k != b.k {
        return Err(Error::Domain("prime counts differ".into()));
    }
    Ok(refines_members(&a.members, &b.members))
}

fn refines_members(a: &[ExponentIdeal], b: &[ExponentIdeal]) -> bool {
    a.iter().all(|x| b.iter().any(|y| x.contained_in(y)))
}

/// All pairwise products, not normalized.
pub fn sym_product(a: &SymGenerator, b: &SymGenerator) -> Result<SymGenerator> {
    if a.k != b.k {
        return Err(Error::Domain("prime counts differ".into()));
    }
    let members = a
        .members
        .iter()
        .flat_map(|x| b.members.iter().map(move |y| x.product(y)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymGenerator {
        k: a.k,
        members: canonical(members),
    })
}

pub fn sym_radical(i: &ExponentIdeal) -> ExponentIdeal {
    i.radical()
}

/// `Bottom` and the `k` maximal ideals.
pub fn sym_primes(k: usize) -> Result<Vec<ExponentIdeal>> {
    check_k(k)?;
    let mut v = vec![ExponentIdeal::bottom(k)];
    v.extend((0..k).map(|c| ExponentIdeal::unit_vector(k, c)));
    Ok(v)
}

/// `{K_1, ..., K_k}` with `K_i` the product of every maximal ideal but the
/// `i`-th; `{R}` when `k = 1`.
pub fn complementary_family(k: usize) -> Result<SymGenerator> {
    check_k(k)?;
    let members = (0..k)
        .map(|i| {
            let e: Vec<u32> = (0..k).map(|c| u32::from(c != i)).collect();
            ExponentIdeal::exponents(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    SymGenerator::new(k, members)
}

/// For a candidate with largest exponent `m`, the generator with one member
/// per coordinate `c`: zero at `c` and `m + 1` elsewhere. For `k >= 2` the
/// candidate never refines it.
pub fn minimal_generator_refuter(candidate: &SymGenerator) -> SymGenerator {
    let k = candidate.k;
    let m = candidate.max_exponent() + 1;
    let members = (0..k)
        .map(|c| {
            let e: Vec<u32> = (0..k).map(|d| if d == c { 0 } else { m }).collect();
            ExponentIdeal::exponents(&e).expect("valid k")
        })
        .collect();
    SymGenerator::new(k, members).expect("has a zero in each coordinate")
}

/// Whether a `≺`-minimal generator exists. With one prime the ring is
/// local and `{R}` is minimal; with two or more, every candidate is
/// defeated by [`minimal_generator_refuter`], and the returned verdict lists
/// sample candidates (all antichain generators with exponents at most 1)
/// with their refuters.
pub fn sym_minimal_generator_exists(k: usize) -> Result<Verdict<SymGenerator>> {
    check_k(k)?;
    let unit = SymGenerator::new(k, vec![ExponentIdeal::whole(k)])?;
    if k == 1 {
        return Ok(Verdict::proved(unit, Scope::Exact));
    }
    let samples = sample_antichain_generators(k, 1);
    let rejected: Vec<_> = samples
        .into_iter()
        .map(|c| crate::verdict::Rejection {
            refuter: minimal_generator_refuter(&c),
            candidate: c,
        })
        .collect();
    let mut v = Verdict::refuted(None, rejected[0].refuter.clone(), Scope::Exact);
    v.rejected = rejected;
    Ok(v)
}

/// Antichain generators with all exponents at most `bound`, no `Bottom`.
pub fn sample_antichain_generators(k: usize, bound: u32) -> Vec<SymGenerator> {
    let grid = Grid::new(k, bound);
    let mut out = Vec::new();
    grid.antichains(|points| {
        let members: Vec<ExponentIdeal> = points.iter().map(|&p| grid.ideal(p)).collect();
        if let Ok(g) = SymGenerator::new(k, members) {
            out.push(g);
        }
        true
    });
    out.sort();
    out
}

/// Identity-expansivity test: every non-`Bottom` member has at most one
/// zero coordinate.
///
/// A member vanishing on two coordinates `a, b` is never pushed into
/// `{..., 0 at a, 0 at b, ...}`-free adversaries such as the generator with
/// members zero at one coordinate and large elsewhere. Conversely, if every
/// member misses at most one coordinate, long products grow in all but at
/// most one coordinate.
pub fn sym_identity_expansivity_criterion(i: &SymGenerator) -> Result<bool> {
    if !sym_is_generator(i.k, &i.members)? {
        return Err(Error::Domain("not a generator".into()));
    }
    Ok(i
        .members
        .iter()
        .filter(|m| !m.is_bottom())
        .all(|m| m.exps().iter().filter(|&&a| a == 0).count() <= 1))
}

/// Fixed-size point set over a grid of at most 256 points.
type Mask = [u64; 4];

fn mask_insert(m: &mut Mask, p: usize) {
    m[p / 64] |= 1 << (p % 64);
}

fn mask_subset(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn mask_or(a: &mut Mask, b: &Mask) {
    for (x, y) in a.iter_mut().zip(b) {
        *x |= y;
    }
}


/// The exponent grid `{0..=bound}^k`.
struct Grid {
    k: usize,
    bound: u32,
    size: usize,
    up: Vec<Mask>,
    comparable: Vec<Mask>,
}

impl Grid {
    fn new(k: usize, bound: u32) -> Self {
        let size = (bound as usize + 1).pow(k as u32);
        assert!(size <= 256);
        let coords: Vec<Vec<u32>> = (0..size).map(|p| Self::decode(k, bound, p)).collect();
        let ge = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x >= y);
        let mut up = vec![[0u64; 4]; size];
        let mut comparable = vec![[0u64; 4]; size];
        for p in 0..size {
            for q in 0..size {
                if ge(&coords[q], &coords[p]) {
                    mask_insert(&mut up[p], q);
                }
                if ge(&coords[q], &coords[p]) || ge(&coords[p], &coords[q]) {
                    mask_insert(&mut comparable[p], q);
                }
            }
        }
        Self {
            k,
            bound,
            size,
            up,
            comparable,
        }
    }

    fn decode(k: usize, bound: u32, mut p: usize) -> Vec<u32> {
        let base = bound as usize + 1;
        (0..k)
            .map(|_| {
                let c = (p % base) as u32;
                p /= base;
                c
            })
            .collect()
    }

    fn point(&self, e: &[u32]) -> usize {
        let base = self.bound as usize + 1;
        e.iter()
            .rev()
            .fold(0, |acc, &c| acc * base + c.min(self.bound) as usize)
    }

    fn ideal(&self, p: usize) -> ExponentIdeal {
        ExponentIdeal::exponents(&Self::decode(self.k, self.bound, p)).expect("valid k")
    }

    fn zero_coords(&self, p: usize) -> u32 {
        Self::decode(self.k, self.bound, p)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Visits every nonempty antichain; `visit` returns `false` to abort.
    fn antichains(&self, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let mut chosen = Vec::new();
        self.antichains_from(0, [0; 4], &mut chosen, &mut visit)
    }

    fn antichains_from(
        &self,
        start: usize,
        blocked: Mask,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if !chosen.is_empty() && !visit(chosen) {
            return false;
        }
        for p in start..self.size {
            if blocked[p / 64] >> (p % 64) & 1 == 1 {
                continue;
            }
            let mut b = blocked;
            mask_or(&mut b, &self.comparable[p]);
            chosen.push(p);
            let go_on = self.antichains_from(p + 1, b, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Parameters of the bounded oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleBounds {
    pub max_steps: usize,
    pub adversary_bound: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        Self {
            max_steps: 12,
            adversary_bound: 3,
        }
    }
}

/// Oracle output: the verdict and, for exact refutations, the set of
/// coordinates on which some member of every pulled-back factor vanishes
/// while no adversary member does.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub verdict: Verdict<SymGenerator>,
    pub escape: Option<Vec<usize>>,
}

#[derive(Clone)]
struct Outcome {
    /// First adversary (by index) not refined within the step bound.
    unrefined: Option<usize>,
    max_n: usize,
}

/// Bounded brute-force decider over every adversary antichain generator
/// with exponents at most the adversary bound. Reusable across candidates.
pub struct SymOracle {
    grid: Grid,
    bounds: OracleBounds,
    /// Up-closure of each adversary.
    adversary_up: Vec<Mask>,
    adversary_points: Vec<Vec<u16>>,
    cache: Mutex<HashMap<Vec<Mask>, Outcome>>,
}

/// Adversary enumeration is abandoned past this many antichains.
const MAX_ADVERSARIES: usize = 2_000_000;

impl SymOracle {
    pub fn new(k: usize, bounds: OracleBounds) -> Result<Self> {
        check_k(k)?;
        if bounds.max_steps == 0 || bounds.adversary_bound == 0 {
            return Err(Error::Domain("oracle bounds must be positive".into()));
        }
        let size = (bounds.adversary_bound as u128 + 1).pow(k as u32);
        if size > 256 {
            return Err(Error::capacity("oracle grid points", size as usize, 256));
        }
        let grid = Grid::new(k, bounds.adversary_bound);
        let full = (1u32 << k) - 1;
        let mut adversary_up = Vec::new();
        let mut adversary_points = Vec::new();
        let mut seen = 0usize;
        let completed = grid.antichains(|points| {
            seen += 1;
            if seen > MAX_ADVERSARIES {
                return false;
            }
            let zeros = points.iter().fold(0, |acc, &p| acc | grid.zero_coords(p));
            if zeros == full {
                let mut up = [0u64; 4];
                for &p in points {
                    mask_or(&mut up, &grid.up[p]);
                }
                adversary_up.push(up);
                adversary_points.push(points.iter().map(|&p| p as u16).collect());
            }
            true
        });
        if !completed {
            return Err(Error::capacity("oracle adversary count", seen, MAX_ADVERSARIES));
        }
        Ok(Self {
            grid,
            bounds,
            adversary_up,
            adversary_points,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn k(&self) -> usize {
        self.grid.k
    }

    pub fn bounds(&self) -> OracleBounds {
        self.bounds
    }

    pub fn adversary_count(&self) -> usize {
        self.adversary_up.len()
    }

    pub fn adversary(&self, idx: usize) -> SymGenerator {
        let members = self.adversary_points[idx]
            .iter()
            .map(|&p| self.grid.ideal(p as usize))
            .collect();
        SymGenerator::new(self.grid.k, members).expect("adversaries are generators")
    }

    fn scope(&self) -> Scope {
        Scope::Grid {
            adversary_bound: self.bounds.adversary_bound,
            max_steps: self.bounds.max_steps,
        }
    }

    /// Window products `P_0..=P_{max_steps}` as capped point sets.
    /// `Bottom` members are dropped: they and their products lie in every
    /// ideal.
    pub(crate) fn window_masks(&self, i: &SymGenerator, perm: &[usize], positive: bool) -> Vec<Mask> {
        let factors = pulled_factors(i, perm);
        let p = factors.len();
        let pts = |g: &SymGenerator| -> Vec<Vec<u32>> {
            g.members
                .iter()
                .filter(|m| !m.is_bottom())
                .map(|m| m.exps().iter().map(|&a| a.min(self.grid.bound)).collect())
                .collect()
        };
        let factor_pts: Vec<Vec<Vec<u32>>> = factors.iter().map(pts).collect();
        let mul = |set: &[Vec<u32>], f: &[Vec<u32>]| -> Vec<Vec<u32>> {
            let mut out: Vec<Vec<u32>> = set
                .iter()
                .flat_map(|x| {
                    f.iter().map(move |y| {
                        x.iter()
                            .zip(y)
                            .map(|(a, b)| (a + b).min(self.grid.bound))
                            .collect()
                    })
                })
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        };
        let to_mask = |set: &[Vec<u32>]| -> Mask {
            let mut m = [0u64; 4];
            for x in set {
                mask_insert(&mut m, self.grid.point(x));
            }
            m
        };
        let mut current = factor_pts[0].clone();
        let mut masks = vec![to_mask(&current)];
        for n in 1..=self.bounds.max_steps {
            current = mul(&current, &factor_pts[n % p]);
            if !positive {
                current = mul(&current, &factor_pts[(p - n % p) % p]);
            }
            masks.push(to_mask(&current));
        }
        masks
    }

    fn outcome(&self, masks: &[Mask]) -> Outcome {
        if let Some(o) = self.cache.lock().unwrap().get(masks) {
            return o.clone();
        }
        let mut max_n = 0;
        let mut unrefined = None;
        for (j, up) in self.adversary_up.iter().enumerate() {
            match masks.iter().position(|m| mask_subset(m, up)) {
                Some(n) => max_n = max_n.max(n),
                None => {
                    unrefined = Some(j);
                    break;
                }
            }
        }
        let o = Outcome { unrefined, max_n };
        self.cache.lock().unwrap().insert(masks.to_vec(), o.clone());
        o
    }

    /// Decides `I` against every adversary. Proved results hold on the
    /// tested grid only; refutations come with an escape certificate and are
    /// exact.
    pub fn decide(&self, i: &SymGenerator, perm: &[usize], positive: bool) -> Result<OracleVerdict> {
        if i.k != self.grid.k {
            return Err(Error::Domain("prime counts differ".into()));
        }
        if !sym_is_generator(i.k, &i.members)? {
            return Err(Error::Domain("not a generator".into()));
        }
        check_perm(perm, i.k)?;
        let masks = self.window_masks(i, perm, positive);
        let o = self.outcome(&masks);
        let period = perm_period(perm);
        match o.unrefined {
            Some(first) => {
                // Prefer an adversary that comes with an exact certificate.
                let certified = std::iter::once(first)
                    .chain(0..self.adversary_count())
                    .map(|j| (j, find_escape(i, perm, &self.adversary(j))))
                    .find(|(_, e)| e.is_some());
                let (j, escape) = certified.unwrap_or((first, None));
                let refuter = self.adversary(j);
                let mut v = Verdict::refuted(Some(i.clone()), refuter, Scope::Exact);
                v.cycle_length = Some(period);
                if escape.is_none() {
                    v.status = Status::UnknownAtBound;
                    v.scope = self.scope();
                }
                Ok(OracleVerdict { verdict: v, escape })
            }
            None => {
                let mut v = Verdict::proved(i.clone(), self.scope());
                v.uniform_n = Some(o.max_n);
                v.cycle_length = Some(period);
                if o.max_n >= self.bounds.max_steps {
                    v.status = Status::UnknownAtBound;
                }
                Ok(OracleVerdict { verdict: v, escape: None })
            }
        }
    }

    /// The hardest adversary on the grid: one member per coordinate, zero
    /// there and at the bound elsewhere. Its up-closure lies inside that of
    /// every other adversary.
    pub fn hardest_adversary(&self) -> SymGenerator {
        hardest_adversary(self.grid.k, self.grid.bound)
    }
}

pub fn hardest_adversary(k: usize, bound: u32) -> SymGenerator {
    let members = (0..k)
        .map(|c| {
            let e: Vec<u32> = (0..k).map(|d| if d == c { 0 } else { bound }).collect();
            ExponentIdeal::exponents(&e).expect("valid k")
        })
        .collect();
    SymGenerator::new(k, members).expect("generator")
}

/// One-shot oracle call.
pub fn sym_bounded_oracle(
    i: &SymGenerator,
    perm: &[usize],
    positive: bool,
    max_steps: usize,
    adversary_bound: u32,
) -> Result<OracleVerdict> {
    let oracle = SymOracle::new(
        i.k,
        OracleBounds {
            max_steps,
            adversary_bound,
        },
    )?;
    oracle.decide(i, perm, positive)
}

pub fn check_perm(perm: &[usize], k: usize) -> Result<()> {
    let mut seen = vec![false; k];
    if perm.len() != k {
        return Err(Error::Domain(format!("permutation of length {} for {k} primes", perm.len())));
    }
    for &p in perm {
        if p >= k || seen[p] {
            return Err(Error::Domain("not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

pub fn perm_period(perm: &[usize]) -> usize {
    let mut x: Vec<usize> = perm.to_vec();
    let mut n = 1;
    while x.iter().enumerate().any(|(i, &y)| i != y) {
        x = x.iter().map(|&y| perm[y]).collect();
        n += 1;
    }
    n
}

/// `pullback^r(I)` for `r` in `0..period`.
pub fn pulled_factors(i: &SymGenerator, perm: &[usize]) -> Vec<SymGenerator> {
    let p = perm_period(perm);
    let mut out = Vec::with_capacity(p);
    let mut cur = i.clone();
    for _ in 0..p {
        out.push(cur.clone());
        cur = cur.pullback(perm);
    }
    out
}

/// Smallest coordinate set `C` (size at least 2, then lexicographic) such
/// that every pulled-back factor has a member vanishing on `C` and no
/// member of `refuter` does. Products of vanishing members vanish, so the
/// window products never refine `refuter`.
pub fn find_escape(i: &SymGenerator, perm: &[usize], refuter: &SymGenerator) -> Option<Vec<usize>> {
    let k = i.k;
    let factors = pulled_factors(i, perm);
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << k)
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..k).filter(|&c| m >> c & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
        .into_iter()
        .find(|c| check_escape(&factors, refuter, c))
}

pub fn check_escape(factors: &[SymGenerator], refuter: &SymGenerator, coords: &[usize]) -> bool {
    coords.len() >= 2
        && factors
            .iter()
            .all(|f| f.members.iter().any(|m| m.vanishes_on(coords)))
        && !refuter.members.iter().any(|m| m.vanishes_on(coords))
}

/// `P_n` for the symbolic window product, normalized.
pub fn sym_window_product(i: &SymGenerator, perm: &[usize], positive: bool, n: usize) -> SymGenerator {
    let factors = pulled_factors(i, perm);
    let p = factors.len();
    let mut g = factors[0].normalized();
    for step in 1..=n {
        g = sym_product(&g, &factors[step % p]).expect("same k").normalized();
        if !positive {
            g = sym_product(&g, &factors[(p - step % p) % p])
                .expect("same k")
                .normalized();
        }
    }
    g
}

/// Whether `P_n` with all exponents capped at `bound` refines `target`.
/// Capping is harmless when `target` has exponents at most `bound`.
pub fn capped_window_refines(
    i: &SymGenerator,
    perm: &[usize],
    positive: bool,
    n: usize,
    bound: u32,
    target: &SymGenerator,
) -> bool {
    let cap = |g: &SymGenerator| -> SymGenerator {
        let members = g
            .members
            .iter()
            .map(|m| {
                if m.is_bottom() {
                    *m
                } else {
                    let e: Vec<u32> = m.exps().iter().map(|&a| a.min(bound)).collect();
                    ExponentIdeal::exponents(&e).expect("valid k")
                }
            })
            .collect();
        SymGenerator {
            k: g.k,
            members: canonical(members),
        }
    };
    let factors: Vec<SymGenerator> = pulled_factors(i, perm).iter().map(cap).collect();
    let p = factors.len();
    let mut g = factors[0].normalized();
    for step in 1..=n {
        g = cap(&sym_product(&g, &factors[step % p]).expect("same k")).normalized();
        if !positive {
            g = cap(&sym_product(&g, &factors[(p - step % p) % p]).expect("same k")).normalized();
        }
    }
    refines_members(&g.members, &target.members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32]) -> ExponentIdeal {
        ExponentIdeal::exponents(e).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(v(&[1, 0]).product(&v(&[0, 1])).unwrap(), v(&[1, 1]));
        assert_eq!(v(&[2, 3]).radical(), v(&[1, 1]));
        assert_eq!(v(&[2, 0]).sum(&v(&[1, 4])).unwrap(), v(&[1, 0]));
        let b = ExponentIdeal::bottom(2);
        assert_eq!(b.product(&v(&[0, 0])).unwrap(), b);
        assert_eq!(b.sum(&v(&[3, 1])).unwrap(), v(&[3, 1]));
        assert!(b.contained_in(&v(&[5, 5])));
        assert!(v(&[2, 1]).contained_in(&v(&[1, 1])));
        assert!(v(&[1]).product(&v(&[1, 1])).is_err());
    }

    #[test]
    fn generators() {
        assert!(sym_is_generator(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap());
        assert!(!sym_is_generator(2, &[v(&[1, 1])]).unwrap());
        assert!(!sym_is_generator(2, &[ExponentIdeal::bottom(2)]).unwrap());
        assert!(SymGenerator::new(2, vec![v(&[1, 1])]).is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(sym_primes(2).unwrap().len(), 3);
        assert_eq!(sym_primes(1).unwrap().len(), 2);
        assert_eq!(sym_primes(3).unwrap().len(), 4);
    }

    #[test]
    fn serde_shape() {
        let b = ExponentIdeal::bottom(2);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"bottom":true,"k":2}"#);
        assert_eq!(serde_json::to_string(&v(&[1, 2])).unwrap(), r#"{"exponents":[1,2]}"#);
        let back: ExponentIdeal = serde_json::from_str(r#"{"exponents":[1,2]}"#).unwrap();
        assert_eq!(back, v(&[1, 2]));
    }

    #[test]
    fn minimal_generator() {
        assert!(sym_minimal_generator_exists(1).unwrap().is_proved());
        let verdict = sym_minimal_generator_exists(2).unwrap();
        assert_eq!(verdict.status, Status::Refuted);
        let cand = SymGenerator::new(2, vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        let j = minimal_generator_refuter(&cand);
        assert_eq!(j, SymGenerator::new(2, vec![v(&[2, 0]), v(&[0, 2])]).unwrap());
        assert!(!sym_refines(&cand, &j).unwrap());
    }

    #[test]
    fn criterion_anchors() {
        let k2 = SymGenerator::new(2, vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert!(sym_identity_expansivity_criterion(&k2).unwrap());
        let units = SymGenerator::new(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(!sym_identity_expansivity_criterion(&units).unwrap());
        assert!(sym_identity_expansivity_criterion(&complementary_family(3).unwrap()).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let id2 = [0, 1];
        let unit = SymGenerator::new(2, vec![ExponentIdeal::whole(2)]).unwrap();
        let o = sym_bounded_oracle(&unit, &id2, true, 12, 3).unwrap();
        assert_eq!(o.verdict.status, Status::Refuted);
        assert_eq!(
            o.verdict.refuter,
            Some(SymGenerator::new(2, vec![v(&[1, 0]), v(&[0, 1])]).unwrap())
        );
        let k1 = SymGenerator::new(1, vec![ExponentIdeal::whole(1)]).unwrap();
        assert!(sym_bounded_oracle(&k1, &[0], true, 12, 3).unwrap().verdict.is_proved());
        let units = SymGenerator::new(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let o = sym_bounded_oracle(&units, &[0, 1, 2], true, 12, 3).unwrap();
        assert_eq!(o.verdict.status, Status::Refuted);
        assert!(o.escape.is_some());
    }

    #[test]
    fn hardest_adversary_dominates() {
        let oracle = SymOracle::new(2, OracleBounds::default()).unwrap();
        let hard = oracle.hardest_adversary();
        for j in 0..oracle.adversary_count() {
            let adv = oracle.adversary(j);
            assert!(sym_refines(&hard, &adv).unwrap());
        }
    }
}
