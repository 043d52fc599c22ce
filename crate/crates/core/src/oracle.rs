//! Brute-force replay of the expansivity definitions on finite rings.
//!
//! Works on element sets directly: window products are recomputed from the
//! definition as unnormalized families, pullbacks are applied power by
//! power, and refinement is plain subset testing. Nothing here uses the
//! lattice tables, normalization or cycle detection of the engine, so the
//! two can be compared.

use std::collections::{BTreeSet, HashMap};

use crate::bitset::BitSet;
use crate::ideal::Ideal;
use crate::ring::{FiniteRing, RingAutomorphism};

pub struct RawReplay<'a> {
    ring: &'a FiniteRing,
    alpha: &'a RingAutomorphism,
    products: HashMap<(BitSet, BitSet), BitSet>,
}

/// Family of ideals as element sets.
pub type RawFamily = BTreeSet<BitSet>;

impl<'a> RawReplay<'a> {
    pub fn new(ring: &'a FiniteRing, alpha: &'a RingAutomorphism) -> Self {
        Self {
            ring,
            alpha,
            products: HashMap::new(),
        }
    }

    fn product(&mut self, a: &BitSet, b: &BitSet) -> BitSet {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(p) = self.products.get(&key) {
            return p.clone();
        }
        let ring = self.ring;
        let gens: Vec<u32> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| ring.mul(x as u32, y as u32)))
            .collect();
        let p = Ideal::generated(ring, gens).members().clone();
        self.products.insert(key, p.clone());
        p
    }

    fn family_product(&mut self, a: &RawFamily, b: &RawFamily) -> RawFamily {
        let mut out = RawFamily::new();
        for x in a {
            for y in b {
                out.insert(self.product(x, y));
            }
        }
        out
    }

    /// `α^{-s}(I)` for every member, `s` any integer.
    fn shifted(&self, fam: &RawFamily, s: i64) -> RawFamily {
        fam.iter()
            .map(|m| {
                let mut cur = m.clone();
                for _ in 0..s.unsigned_abs() {
                    cur = if s > 0 {
                        self.alpha.pull_set(&cur)
                    } else {
                        self.alpha.map_set(&cur)
                    };
                }
                cur
            })
            .collect()
    }

    /// `G_0, ..., G_{n_max}` straight from the definition: the product of
    /// `α^{-i}(I)` over `0 <= i <= n` (positive) or `|i| <= n`.
    pub fn window_products(&mut self, i: &RawFamily, positive: bool, n_max: usize) -> Vec<RawFamily> {
        let mut out = vec![i.clone()];
        let mut g = i.clone();
        for n in 1..=n_max as i64 {
            let f = self.shifted(i, n);
            g = self.family_product(&g, &f);
            if !positive {
                let f = self.shifted(i, -n);
                g = self.family_product(&g, &f);
            }
            out.push(g.clone());
        }
        out
    }
}

pub fn raw_refines(a: &RawFamily, b: &RawFamily) -> bool {
    a.iter().all(|x| b.iter().any(|y| x.is_subset(y)))
}

pub fn raw_family<'b>(ideals: impl IntoIterator<Item = &'b Ideal>) -> RawFamily {
    ideals.into_iter().map(|i| i.members().clone()).collect()
}

/// For each target, the least `n <= n_max` with `G_n ≺ target`.
pub fn raw_least_n(
    ring: &FiniteRing,
    alpha: &RingAutomorphism,
    candidate: &RawFamily,
    targets: &[RawFamily],
    positive: bool,
    n_max: usize,
) -> Vec<Option<usize>> {
    let mut replay = RawReplay::new(ring, alpha);
    let seq = replay.window_products(candidate, positive, n_max);
    targets
        .iter()
        .map(|t| seq.iter().position(|g| raw_refines(g, t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;

    #[test]
    fn z6_identity_window() {
        let r = FiniteRing::cyclic(6).unwrap();
        let id = RingAutomorphism::identity(&r);
        let two = Ideal::principal(&r, 2);
        let three = Ideal::principal(&r, 3);
        let cand = raw_family([&two, &three]);
        let mut rep = RawReplay::new(&r, &id);
        let seq = rep.window_products(&cand, true, 2);
        // {(2),(3)}^2 = {(2), (0), (3)}
        assert_eq!(seq[1].len(), 3);
        let lat = r.enumerate_ideals(&Bounds::default()).unwrap();
        let unit = raw_family([lat.ideal(lat.whole_id())]);
        assert_eq!(raw_least_n(&r, &id, &unit, std::slice::from_ref(&cand), true, 4), vec![None]);
        assert_eq!(raw_least_n(&r, &id, &cand, &[unit], true, 4), vec![Some(0)]);
    }
}
