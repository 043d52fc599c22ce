//! Generators: finite sets of ideals summing to the whole ring, with
//! refinement, products, pullbacks and enumeration.
//!
//! A generator is stored as sorted ideal ids of an [`IdealLattice`].

use crate::bounds::Bounds;
use crate::dynamics::{self, MeetAlgebra};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{Elem, RingAutomorphism, RingId};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet {
    host: RingId,
    ids: Vec<u32>,
}

impl GeneratorSet {
    pub fn host(&self) -> RingId {
        self.host
    }

    /// Sorted lattice ids of the members.
    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains_id(&self, id: u32) -> bool {
        self.ids.binary_search(&id).is_ok()
    }
}

impl MeetAlgebra for IdealLattice {
    type Member = u32;

    #[inline]
    fn meet(&self, a: u32, b: u32) -> u32 {
        self.product_id(a, b)
    }

    #[inline]
    fn contained(&self, a: u32, b: u32) -> bool {
        self.le(a, b)
    }
}

impl IdealLattice {
    fn check(&self, g: &GeneratorSet) -> Result<()> {
        if g.host != self.host() {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    pub(crate) fn sum_of_ids(&self, ids: &[u32]) -> u32 {
        ids.iter().fold(self.zero_id(), |acc, &i| self.sum_id(acc, i))
    }

    pub fn ids_generate(&self, ids: &[u32]) -> bool {
        self.sum_of_ids(ids) == self.whole_id()
    }

    pub fn is_generator(&self, ideals: &[Ideal]) -> Result<bool> {
        let ids = ideals
            .iter()
            .map(|i| self.id_of(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(!ids.is_empty() && self.ids_generate(&ids))
    }

    /// Builds a generator from ideals; fails unless they sum to `R`.
    pub fn generator(&self, ideals: &[Ideal]) -> Result<GeneratorSet> {
        let ids = ideals
            .iter()
            .map(|i| self.id_of(i))
            .collect::<Result<Vec<_>>>()?;
        self.generator_from_ids(ids)
    }

    pub fn generator_from_ids(&self, mut ids: Vec<u32>) -> Result<GeneratorSet> {
        ids.sort_unstable();
        ids.dedup();
        if ids.iter().any(|&i| i as usize >= self.len()) {
            return Err(Error::validation("ideal id out of range", None));
        }
        if ids.is_empty() || !self.ids_generate(&ids) {
            return Err(Error::Domain("ideals do not sum to the whole ring".into()));
        }
        Ok(GeneratorSet {
            host: self.host(),
            ids,
        })
    }

    /// Generator whose members are the principal ideals of the given
    /// elements.
    pub fn generator_from_elements(&self, elems: &[Elem]) -> Result<GeneratorSet> {
        let ideals: Vec<Ideal> = elems
            .iter()
            .map(|&e| Ideal::principal(self.ring(), e))
            .collect();
        self.generator(&ideals)
    }

    pub(crate) fn wrap(&self, ids: Vec<u32>) -> GeneratorSet {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        GeneratorSet {
            host: self.host(),
            ids,
        }
    }

    /// `{R}`.
    pub fn unit_generator(&self) -> GeneratorSet {
        self.wrap(vec![self.whole_id()])
    }

    pub fn members<'a>(&'a self, g: &'a GeneratorSet) -> impl Iterator<Item = &'a Ideal> + 'a {
        g.ids.iter().map(|&i| self.ideal(i))
    }

    pub fn refines(&self, a: &GeneratorSet, b: &GeneratorSet) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(dynamics::refines(self, &a.ids, &b.ids))
    }

    /// Certificate for `A ≺ B`: for each member of `A` the index of a
    /// containing member of `B`.
    pub fn refinement_map(&self, a: &GeneratorSet, b: &GeneratorSet) -> Result<Option<Vec<usize>>> {
        self.check(a)?;
        self.check(b)?;
        Ok(dynamics::refinement_map(self, &a.ids, &b.ids))
    }

    /// All pairwise ideal products, not normalized.
    pub fn gen_product(&self, a: &GeneratorSet, b: &GeneratorSet) -> Result<GeneratorSet> {
        self.check(a)?;
        self.check(b)?;
        let mut ids: Vec<u32> = a
            .ids
            .iter()
            .flat_map(|&x| b.ids.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.product_id(x, y))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        Ok(self.wrap(ids))
    }

    /// `α^{-1}(A)`.
    pub fn pullback(&self, alpha: &RingAutomorphism, a: &GeneratorSet) -> Result<GeneratorSet> {
        self.check(a)?;
        let perm = self.pullback_perm(alpha)?;
        let mut ids: Vec<u32> = a.ids.iter().map(|&i| perm[i as usize]).collect();
        ids.sort_unstable();
        Ok(self.wrap(ids))
    }

    /// Drops members strictly contained in another member.
    pub fn normalize_antichain(&self, a: &GeneratorSet) -> GeneratorSet {
        self.wrap(dynamics::normalize(self, a.ids.iter().copied()))
    }

    pub fn is_antichain(&self, a: &GeneratorSet) -> bool {
        self.normalize_antichain(a) == *a
    }

    /// Generators sorted lexicographically by member ids. With
    /// `antichains_only`, only inclusion-antichains are produced.
    pub fn enumerate_generators(&self, antichains_only: bool, bounds: &Bounds) -> Result<Vec<GeneratorSet>> {
        let n = self.len();
        if n > bounds.search {
            return Err(Error::capacity("ideal count for generator search", n, bounds.search));
        }
        let mut out = Vec::new();
        if antichains_only {
            let mut chosen = Vec::new();
            self.antichains(0, &mut chosen, self.zero_id(), &mut out);
        } else {
            for mask in 1u64..(1u64 << n) {
                let ids: Vec<u32> = (0..n as u32).filter(|&i| mask >> i & 1 == 1).collect();
                if self.ids_generate(&ids) {
                    out.push(self.wrap(ids));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn antichains(&self, start: u32, chosen: &mut Vec<u32>, sum: u32, out: &mut Vec<GeneratorSet>) {
        if sum == self.whole_id() && !chosen.is_empty() {
            out.push(self.wrap(chosen.clone()));
        }
        for i in start..self.len() as u32 {
            if chosen.iter().any(|&c| self.le(c, i) || self.le(i, c)) {
                continue;
            }
            chosen.push(i);
            self.antichains(i + 1, chosen, self.sum_id(sum, i), out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn setup(n: u64) -> IdealLattice {
        FiniteRing::cyclic(n)
            .unwrap()
            .enumerate_ideals(&Bounds::default())
            .unwrap()
    }

    fn gen(lat: &IdealLattice, elems: &[Elem]) -> GeneratorSet {
        lat.generator_from_elements(elems).unwrap()
    }

    #[test]
    fn z6_generators() {
        let lat = setup(6);
        assert!(lat.generator_from_elements(&[2]).is_err());
        let g = gen(&lat, &[2, 3]);
        let sq = lat.gen_product(&g, &g).unwrap();
        assert_eq!(sq, gen(&lat, &[0, 2, 3]));
        assert_eq!(lat.normalize_antichain(&sq), g);
        assert_eq!(lat.normalize_antichain(&gen(&lat, &[0, 2, 3, 1])), lat.unit_generator());
        let all = lat.enumerate_generators(true, &Bounds::default()).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&g));
        assert!(all.contains(&lat.unit_generator()));
    }

    #[test]
    fn refinement_examples() {
        let lat = setup(6);
        let g = gen(&lat, &[2, 3]);
        let zero_only = lat.wrap(vec![lat.zero_id()]);
        assert!(lat.refines(&g, &g).unwrap());
        assert!(lat.refines(&zero_only, &g).unwrap());
        let two = lat.wrap(vec![lat.id_of(&Ideal::principal(lat.ring(), 2)).unwrap()]);
        assert!(!lat.refines(&g, &two).unwrap());
    }

    #[test]
    fn z12_product() {
        let lat = setup(12);
        let g = gen(&lat, &[4, 9]);
        let sq = lat.gen_product(&g, &g).unwrap();
        assert_eq!(sq, gen(&lat, &[0, 3, 4]));
    }

    #[test]
    fn host_mismatch() {
        let a = setup(6);
        let b = setup(6);
        assert!(matches!(
            a.refines(&a.unit_generator(), &b.unit_generator()),
            Err(Error::HostMismatch)
        ));
    }

    #[test]
    fn all_subsets() {
        let lat = setup(6);
        let all = lat.enumerate_generators(false, &Bounds::default()).unwrap();
        // Subsets of {0,(2),(3),R} that generate: any containing R (8) plus
        // {(2),(3)} and {0,(2),(3)}.
        assert_eq!(all.len(), 10);
    }
}
