//! Families of lattice elements under a meet operation: refinement,
//! products, antichain normalization and the window-product sequence used
//! by every expansivity decider.
//!
//! Ideals under ideal product and opens under intersection both fit here.
//! A family is kept as a sorted, duplicate-free antichain.

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

pub trait MeetAlgebra {
    type Member: Copy + Ord + Eq + Hash + Debug;

    fn meet(&self, a: Self::Member, b: Self::Member) -> Self::Member;
    fn contained(&self, a: Self::Member, b: Self::Member) -> bool;
}

/// Keeps the inclusion-maximal members, sorted.
pub fn normalize<A: MeetAlgebra>(
    alg: &A,
    items: impl IntoIterator<Item = A::Member>,
) -> Vec<A::Member> {
    let mut v: Vec<A::Member> = items.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    let keep: Vec<bool> = v
        .iter()
        .map(|&x| !v.iter().any(|&y| y != x && alg.contained(x, y)))
        .collect();
    v.into_iter()
        .zip(keep)
        .filter_map(|(x, k)| k.then_some(x))
        .collect()
}

/// Normalized family of all pairwise meets.
pub fn product<A: MeetAlgebra>(alg: &A, a: &[A::Member], b: &[A::Member]) -> Vec<A::Member> {
    normalize(alg, a.iter().flat_map(|&x| b.iter().map(move |&y| alg.meet(x, y))))
}

/// `A ≺ B`: every member of `A` lies in some member of `B`.
pub fn refines<A: MeetAlgebra>(alg: &A, a: &[A::Member], b: &[A::Member]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| alg.contained(x, y)))
}

/// For each member of `a`, the index of the first member of `b` containing
/// it, if `a ≺ b`.
pub fn refinement_map<A: MeetAlgebra>(
    alg: &A,
    a: &[A::Member],
    b: &[A::Member],
) -> Option<Vec<usize>> {
    a.iter()
        .map(|&x| b.iter().position(|&y| alg.contained(x, y)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Window {
    /// `i = 0..=n`.
    Positive,
    /// `|i| <= n`.
    TwoSided,
}

/// The normalized sequence `G_0, G_1, ...` up to the point where it is
/// provably constant.
#[derive(Debug, Clone)]
pub struct Trace<M> {
    pub families: Vec<Vec<M>>,
    /// First index from which the sequence is constant.
    pub stable_from: usize,
    /// Number of consecutive unchanged steps required to certify stability
    /// (the period of the pulled-back factors).
    pub period: usize,
}

impl<M: Clone> Trace<M> {
    pub fn stable(&self) -> &[M] {
        &self.families[self.stable_from]
    }

    pub fn at(&self, n: usize) -> &[M] {
        &self.families[n.min(self.families.len() - 1)]
    }
}

/// Runs the window-product sequence. `factors[r]` is the normalized family
/// `α^{-r}(I)` for `r` in `0..p`, where `p` is the period of `α`.
///
/// The sequence only ever shrinks under `≺`, and normalized families that
/// refine each other are equal, so it is eventually constant. Once it is
/// unchanged across `p` consecutive steps every factor has been absorbed
/// and it stays constant forever.
pub fn run_sequence<A: MeetAlgebra>(alg: &A, factors: &[Vec<A::Member>], window: Window) -> Trace<A::Member> {
    let p = factors.len();
    assert!(p > 0);
    let mut families = vec![factors[0].clone()];
    let mut unchanged = 0;
    let mut n = 0;
    while unchanged < p {
        n += 1;
        let prev = &families[n - 1];
        let mut next = product(alg, prev, &factors[n % p]);
        if window == Window::TwoSided {
            next = product(alg, &next, &factors[(p - n % p) % p]);
        }
        if next == *prev {
            unchanged += 1;
        } else {
            unchanged = 0;
        }
        families.push(next);
    }
    Trace {
        stable_from: n - p,
        families,
        period: p,
    }
}

/// Least `n` in the trace with `G_n ≺ target`.
pub fn first_refining<A: MeetAlgebra>(
    alg: &A,
    trace: &Trace<A::Member>,
    target: &[A::Member],
) -> Option<usize> {
    if !refines(alg, trace.stable(), target) {
        return None;
    }
    (0..=trace.stable_from).find(|&n| refines(alg, &trace.families[n], target))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subsets of a small set under intersection.
    struct Masks;

    impl MeetAlgebra for Masks {
        type Member = u8;
        fn meet(&self, a: u8, b: u8) -> u8 {
            a & b
        }
        fn contained(&self, a: u8, b: u8) -> bool {
            a & !b == 0
        }
    }

    #[test]
    fn normalize_drops_contained() {
        assert_eq!(normalize(&Masks, [0b001, 0b011, 0b100, 0b011]), vec![0b011, 0b100]);
        assert_eq!(normalize(&Masks, [0b111, 0b001]), vec![0b111]);
    }

    #[test]
    fn product_and_refines() {
        let a = [0b011, 0b110];
        let p = product(&Masks, &a, &a);
        assert_eq!(p, vec![0b011, 0b110]);
        assert!(refines(&Masks, &[0b001], &a));
        assert!(!refines(&Masks, &[0b101], &a));
        assert_eq!(refinement_map(&Masks, &[0b010, 0b100], &a), Some(vec![0, 1]));
    }

    #[test]
    fn rotating_factors_stabilize() {
        // Rotation of three points; the cover {01, 12} shrinks to singletons.
        let rot = |m: u8| ((m << 1) | (m >> 2)) & 0b111;
        let f0 = vec![0b011u8, 0b110];
        let f1 = normalize(&Masks, f0.iter().map(|&m| rot(m)));
        let f2 = normalize(&Masks, f1.iter().map(|&m| rot(m)));
        let t = run_sequence(&Masks, &[f0, f1, f2], Window::Positive);
        assert_eq!(t.stable(), &[0b001, 0b010, 0b100]);
        assert_eq!(first_refining(&Masks, &t, &[0b001, 0b010, 0b100]), Some(t.stable_from));
    }
}
