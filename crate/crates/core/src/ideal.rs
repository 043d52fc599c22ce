//! Ideals of a finite ring and the complete ideal lattice.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, RingAutomorphism, RingId};

/// An ideal, stored as the set of its element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal {
    host: RingId,
    members: BitSet,
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl Ideal {
    /// The smallest ideal containing `gens`.
    pub fn generated(ring: &FiniteRing, gens: impl IntoIterator<Item = Elem>) -> Self {
        let mut acc = Self::zero(ring);
        for g in gens {
            if !acc.contains(g) {
                acc = sumset(ring, &acc, &Self::principal(ring, g));
            }
        }
        acc
    }

    /// `R·a`.
    pub fn principal(ring: &FiniteRing, a: Elem) -> Self {
        Self {
            host: ring.id(),
            members: ring.elements().map(|r| ring.mul(r, a) as usize).collect(),
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self {
            host: ring.id(),
            members: BitSet::singleton(ring.zero() as usize),
        }
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Self {
            host: ring.id(),
            members: BitSet::full(ring.order()),
        }
    }

    /// Wraps an element set after checking the ideal axioms.
    pub fn from_members(ring: &FiniteRing, members: BitSet) -> Result<Self> {
        let ideal = Self {
            host: ring.id(),
            members,
        };
        ideal.validate(ring)?;
        Ok(ideal)
    }

    pub fn validate(&self, ring: &FiniteRing) -> Result<()> {
        ring.check_host(self.host)?;
        if self.members.iter().any(|x| x >= ring.order()) {
            return Err(Error::validation("member out of range", None));
        }
        if !self.contains(ring.zero()) {
            return Err(Error::validation("ideal must contain zero", None));
        }
        let elems: Vec<Elem> = self.elements().collect();
        for &a in &elems {
            if !self.contains(ring.neg(a)) {
                return Err(Error::validation("not closed under negation", Some((a, a))));
            }
            for &b in &elems {
                if !self.contains(ring.add(a, b)) {
                    return Err(Error::validation("not closed under addition", Some((a, b))));
                }
            }
            for r in ring.elements() {
                if !self.contains(ring.mul(r, a)) {
                    return Err(Error::validation("does not absorb multiplication", Some((r, a))));
                }
            }
        }
        Ok(())
    }

    pub fn host(&self) -> RingId {
        self.host
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().map(|x| x as Elem)
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x as usize)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_whole(&self, ring: &FiniteRing) -> bool {
        self.members.len() == ring.order()
    }

    /// `α^{-1}(I)`.
    pub fn pullback(&self, alpha: &RingAutomorphism) -> Self {
        Self {
            host: self.host,
            members: alpha.pull_set(&self.members),
        }
    }

    /// `α(I)`.
    pub fn image(&self, alpha: &RingAutomorphism) -> Self {
        Self {
            host: self.host,
            members: alpha.map_set(&self.members),
        }
    }

    /// Greedy generating set: scan elements in index order and keep the ones
    /// not yet generated.
    pub fn small_generating_set(&self, ring: &FiniteRing) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut acc = Self::zero(ring);
        for x in self.elements() {
            if !acc.contains(x) {
                gens.push(x);
                acc = sumset(ring, &acc, &Self::principal(ring, x));
            }
        }
        gens
    }
}

/// `{i + j}` for two ideals; already an ideal.
fn sumset(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    let mut out = a.members.clone();
    for i in a.elements() {
        for j in b.elements() {
            out.insert(ring.add(i, j) as usize);
        }
    }
    Ideal {
        host: a.host,
        members: out,
    }
}

/// Additive subgroup generated by an `R`-stable set.
fn additive_closure(ring: &FiniteRing, gens: &BitSet) -> BitSet {
    let mut acc = BitSet::singleton(ring.zero() as usize);
    for g in gens.iter() {
        if acc.contains(g) {
            continue;
        }
        let mut cyclic = vec![ring.zero()];
        let mut x = g as Elem;
        while x != ring.zero() {
            cyclic.push(x);
            x = ring.add(x, g as Elem);
        }
        let current: Vec<usize> = acc.iter().collect();
        for s in current {
            for &c in &cyclic {
                acc.insert(ring.add(s as Elem, c) as usize);
            }
        }
    }
    acc
}

impl FiniteRing {
    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_host(a.host)?;
        self.check_host(b.host)?;
        Ok(sumset(self, a, b))
    }

    pub fn ideal_product(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_host(a.host)?;
        self.check_host(b.host)?;
        let mut prods = BitSet::new();
        for i in a.elements() {
            for j in b.elements() {
                prods.insert(self.mul(i, j) as usize);
            }
        }
        Ok(Ideal {
            host: self.id(),
            members: additive_closure(self, &prods),
        })
    }

    pub fn ideal_intersect(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_host(a.host)?;
        self.check_host(b.host)?;
        Ok(Ideal {
            host: self.id(),
            members: a.members.intersection(&b.members),
        })
    }

    /// `{x | x^n ∈ I for some n >= 1}`.
    pub fn radical(&self, ideal: &Ideal) -> Result<Ideal> {
        self.check_host(ideal.host)?;
        let members = self
            .elements()
            .filter(|&x| {
                let mut seen = BitSet::new();
                let mut p = x;
                while seen.insert(p as usize) {
                    if ideal.contains(p) {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                false
            })
            .map(|x| x as usize)
            .collect();
        Ok(Ideal {
            host: self.id(),
            members,
        })
    }

    pub fn annihilator(&self, ideal: &Ideal) -> Result<Ideal> {
        self.check_host(ideal.host)?;
        let members = self
            .elements()
            .filter(|&a| ideal.elements().all(|x| self.mul(a, x) == self.zero()))
            .map(|a| a as usize)
            .collect();
        Ok(Ideal {
            host: self.id(),
            members,
        })
    }

    fn require_proper(&self, ideal: &Ideal) -> Result<()> {
        self.check_host(ideal.host)?;
        if ideal.is_whole(self) {
            return Err(Error::Domain("the unit ideal is neither prime nor maximal".into()));
        }
        Ok(())
    }

    /// Exhaustive pair check: `ab ∈ I` implies `a ∈ I` or `b ∈ I`.
    pub fn is_prime_ideal(&self, ideal: &Ideal) -> Result<bool> {
        self.require_proper(ideal)?;
        let outside: Vec<Elem> = self.elements().filter(|&x| !ideal.contains(x)).collect();
        Ok(outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !ideal.contains(self.mul(a, b)))))
    }

    /// Inclusion-maximal among proper ideals. Uses the fact that `I` is
    /// maximal iff `I + Rx = R` for every `x ∉ I`.
    pub fn is_maximal_ideal(&self, ideal: &Ideal) -> Result<bool> {
        self.require_proper(ideal)?;
        Ok(self
            .elements()
            .filter(|&x| !ideal.contains(x))
            .all(|x| sumset(self, ideal, &Ideal::principal(self, x)).is_whole(self)))
    }

    /// `{e | e^2 = e}`.
    pub fn idempotents(&self) -> BitSet {
        self.elements()
            .filter(|&e| self.mul(e, e) == e)
            .map(|e| e as usize)
            .collect()
    }

    /// Splits `1` into primitive orthogonal idempotents, always splitting
    /// off the lowest-index idempotent first. Sorted by element index; empty
    /// for the trivial ring.
    pub fn primitive_orthogonal_idempotents(&self) -> Vec<Elem> {
        if self.is_trivial() {
            return Vec::new();
        }
        let idem: Vec<Elem> = self.idempotents().iter().map(|e| e as Elem).collect();
        let mut done = Vec::new();
        let mut todo = vec![self.one()];
        while let Some(e) = todo.pop() {
            let split = idem
                .iter()
                .copied()
                .find(|&f| f != self.zero() && f != e && self.mul(f, e) == f);
            match split {
                Some(f) => {
                    todo.push(self.sub(e, f));
                    todo.push(f);
                }
                None => done.push(e),
            }
        }
        done.sort_unstable();
        done
    }

    /// The complete ideal lattice.
    pub fn enumerate_ideals(&self, bounds: &Bounds) -> Result<IdealLattice> {
        IdealLattice::new(self, bounds)
    }
}

/// All ideals of a ring, sorted by their element bit-vectors, with ids
/// `0..len`. Sum and product tables over ids are built on first use.
#[derive(Debug)]
pub struct IdealLattice {
    host: RingId,
    ideals: Vec<Ideal>,
    index: HashMap<BitSet, u32>,
    /// `up[i]` holds every `j` with `I_i ⊆ I_j`.
    up: Vec<BitSet>,
    zero_id: u32,
    whole_id: u32,
    maximal: Vec<u32>,
    sum_table: OnceLock<Vec<u32>>,
    product_table: OnceLock<Vec<u32>>,
    ring: FiniteRing,
}

impl IdealLattice {
    fn new(ring: &FiniteRing, bounds: &Bounds) -> Result<Self> {
        let mut found: HashMap<BitSet, ()> = HashMap::new();
        let mut list: Vec<Ideal> = Vec::new();
        for a in ring.elements() {
            let p = Ideal::principal(ring, a);
            if found.insert(p.members.clone(), ()).is_none() {
                list.push(p);
                if list.len() > bounds.lattice {
                    return Err(Error::capacity("ideal count", list.len(), bounds.lattice));
                }
            }
        }
        // Close under pairwise sums. Every ideal of a finite ring is a finite
        // sum of principal ideals, so this reaches the full lattice.
        let mut i = 0;
        while i < list.len() {
            let mut j = 0;
            while j <= i {
                let s = sumset(ring, &list[i], &list[j]);
                if found.insert(s.members.clone(), ()).is_none() {
                    list.push(s);
                    if list.len() > bounds.lattice {
                        return Err(Error::capacity("ideal count", list.len(), bounds.lattice));
                    }
                }
                j += 1;
            }
            i += 1;
        }
        list.sort_by(|a, b| a.members.cmp(&b.members));
        let index: HashMap<BitSet, u32> = list
            .iter()
            .enumerate()
            .map(|(i, x)| (x.members.clone(), i as u32))
            .collect();
        let n = list.len();
        let up: Vec<BitSet> = (0..n)
            .map(|i| (0..n).filter(|&j| list[i].is_subset(&list[j])).collect())
            .collect();
        let zero_id = index[&Ideal::zero(ring).members];
        let whole_id = index[&Ideal::whole(ring).members];
        let maximal = if ring.is_trivial() {
            Vec::new()
        } else {
            (0..n as u32)
                .filter(|&i| i != whole_id && up[i as usize].len() == 2)
                .collect()
        };
        Ok(Self {
            host: ring.id(),
            ideals: list,
            index,
            up,
            zero_id,
            whole_id,
            maximal,
            sum_table: OnceLock::new(),
            product_table: OnceLock::new(),
            ring: ring.clone(),
        })
    }

    pub fn host(&self) -> RingId {
        self.host
    }

    /// The ring this lattice was computed for.
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, id: u32) -> &Ideal {
        &self.ideals[id as usize]
    }

    pub fn id_of(&self, ideal: &Ideal) -> Result<u32> {
        if ideal.host != self.host {
            return Err(Error::HostMismatch);
        }
        self.index
            .get(&ideal.members)
            .copied()
            .ok_or_else(|| Error::validation("not an ideal of this ring", None))
    }

    pub fn zero_id(&self) -> u32 {
        self.zero_id
    }

    pub fn whole_id(&self) -> u32 {
        self.whole_id
    }

    #[inline]
    pub fn le(&self, a: u32, b: u32) -> bool {
        self.up[a as usize].contains(b as usize)
    }

    /// Ids of the maximal ideals, in lattice order.
    pub fn maximal_ids(&self) -> &[u32] {
        &self.maximal
    }

    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        self.maximal.iter().map(|&i| self.ideal(i).clone()).collect()
    }

    /// Ids of the prime ideals by the exhaustive pair check.
    pub fn prime_ids(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&i| i != self.whole_id && self.ring.is_prime_ideal(self.ideal(i)).unwrap())
            .collect()
    }

    /// A ring with at most one maximal ideal. The trivial ring counts.
    pub fn is_local(&self) -> bool {
        self.maximal.len() <= 1
    }

    fn table<'a>(&'a self, which: &'a OnceLock<Vec<u32>>, op: impl Fn(&Ideal, &Ideal) -> Ideal) -> &'a [u32] {
        which.get_or_init(|| {
            let n = self.len();
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let id = self.index[&op(&self.ideals[i], &self.ideals[j]).members];
                    t[i * n + j] = id;
                    t[j * n + i] = id;
                }
            }
            t
        })
    }

    #[inline]
    pub fn sum_id(&self, a: u32, b: u32) -> u32 {
        let t = self.table(&self.sum_table, |x, y| sumset(&self.ring, x, y));
        t[a as usize * self.len() + b as usize]
    }

    #[inline]
    pub fn product_id(&self, a: u32, b: u32) -> u32 {
        let t = self.table(&self.product_table, |x, y| {
            self.ring.ideal_product(x, y).expect("same host")
        });
        t[a as usize * self.len() + b as usize]
    }

    /// `ids[i]` is the id of `α^{-1}(I_i)`.
    pub fn pullback_perm(&self, alpha: &RingAutomorphism) -> Result<Vec<u32>> {
        if alpha.host() != self.host {
            return Err(Error::HostMismatch);
        }
        Ok(self
            .ideals
            .iter()
            .map(|x| self.index[&alpha.pull_set(&x.members)])
            .collect())
    }

    /// Covering pairs `(smaller, larger)` of the inclusion order.
    pub fn hasse_edges(&self) -> Vec<(u32, u32)> {
        let n = self.len() as u32;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.le(a, b) {
                    continue;
                }
                let covered = (0..n).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b));
                if !covered {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ideals {\n  rankdir=BT;\n");
        for (i, ideal) in self.ideals.iter().enumerate() {
            let gens: Vec<String> = ideal
                .small_generating_set(&self.ring)
                .iter()
                .map(|&g| self.ring.encode(g).to_string())
                .collect();
            let _ = writeln!(
                out,
                "  i{i} [label=\"({})\\n|I|={}\"];",
                gens.join(","),
                ideal.len()
            );
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  i{a} -> i{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ideals": self.ideals,
            "maximal": self.maximal,
            "hasse": self.hasse_edges(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteRing {
        FiniteRing::cyclic(n).unwrap()
    }

    fn elems(i: &Ideal) -> Vec<Elem> {
        i.elements().collect()
    }

    #[test]
    fn generated_examples() {
        let r = z(6);
        assert_eq!(elems(&Ideal::generated(&r, [2])), vec![0, 2, 4]);
        assert_eq!(elems(&Ideal::generated(&r, [])), vec![0]);
        assert!(Ideal::generated(&r, [1]).is_whole(&r));
        assert!(Ideal::generated(&r, [2, 3]).is_whole(&r));
    }

    #[test]
    fn lattice_counts() {
        let b = Bounds::default();
        assert_eq!(z(6).enumerate_ideals(&b).unwrap().len(), 4);
        assert_eq!(z(12).enumerate_ideals(&b).unwrap().len(), 6);
        assert_eq!(z(7).enumerate_ideals(&b).unwrap().len(), 2);
        assert_eq!(z(1).enumerate_ideals(&b).unwrap().len(), 1);
        let tight = Bounds {
            lattice: 5,
            ..Bounds::default()
        };
        assert!(matches!(
            z(12).enumerate_ideals(&tight),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let r = z(6);
        let i2 = Ideal::principal(&r, 2);
        let i3 = Ideal::principal(&r, 3);
        assert_eq!(r.ideal_product(&i2, &i3).unwrap(), Ideal::zero(&r));
        assert_eq!(r.ideal_intersect(&i2, &i3).unwrap(), Ideal::zero(&r));
        assert_eq!(r.annihilator(&i2).unwrap(), i3);
        assert_eq!(r.annihilator(&Ideal::whole(&r)).unwrap(), Ideal::zero(&r));
        let r12 = z(12);
        assert_eq!(
            r12.radical(&Ideal::principal(&r12, 4)).unwrap(),
            Ideal::principal(&r12, 2)
        );
        assert!(!r12.is_prime_ideal(&Ideal::principal(&r12, 4)).unwrap());
        let r4 = z(4);
        assert_eq!(r4.radical(&Ideal::zero(&r4)).unwrap(), Ideal::principal(&r4, 2));
        assert!(r.is_prime_ideal(&Ideal::whole(&r)).is_err());
    }

    #[test]
    fn maximal_ideals() {
        let b = Bounds::default();
        let r = z(6);
        let lat = r.enumerate_ideals(&b).unwrap();
        let max = lat.maximal_ideals();
        assert_eq!(max.len(), 2);
        assert!(max.contains(&Ideal::principal(&r, 2)));
        assert!(max.contains(&Ideal::principal(&r, 3)));
        let r8 = z(8);
        let lat8 = r8.enumerate_ideals(&b).unwrap();
        assert_eq!(lat8.maximal_ideals(), vec![Ideal::principal(&r8, 2)]);
        for r in [z(30), z(12), z(9)] {
            let lat = r.enumerate_ideals(&b).unwrap();
            assert_eq!(lat.prime_ids(), lat.maximal_ids());
        }
    }

    #[test]
    fn idempotent_examples() {
        let r = z(6);
        assert_eq!(r.idempotents().to_vec(), vec![0, 1, 3, 4]);
        assert_eq!(r.primitive_orthogonal_idempotents(), vec![3, 4]);
        let r12 = z(12);
        assert_eq!(r12.idempotents().to_vec(), vec![0, 1, 4, 9]);
        assert_eq!(r12.primitive_orthogonal_idempotents(), vec![4, 9]);
        let f = z(5);
        assert_eq!(f.primitive_orthogonal_idempotents(), vec![1]);
    }

    #[test]
    fn quotient_by_ideal() {
        let r = z(12);
        let q = r.quotient(&Ideal::principal(&r, 4)).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert!(crate::ring::find_isomorphism(&q.ring, &z(4)).is_some());
        let rebuilt = FiniteRing::from_def(q.ring.recipe(), &Bounds::default()).unwrap();
        assert_eq!(rebuilt.order(), 4);
        let bad = Ideal::from_members(&r, [0, 4].into_iter().collect());
        assert!(bad.is_err());
    }

    #[test]
    fn dot_export() {
        let lat = z(6).enumerate_ideals(&Bounds::default()).unwrap();
        let dot = lat.to_dot();
        assert_eq!(dot.matches("->").count(), 4);
    }
}
