//! Finite spaces, spectra and the chain space against brute force.

use proptest::prelude::*;

use ringdyn::bounds::Bounds;
use ringdyn::catalog::catalog_automorphisms;
use ringdyn::ring::FiniteRing;
use ringdyn::topology::chain::{
    shift_map, wedge_sequence, window_covers, ChainCover, ChainOpen, ChainPoint, Cut, Side,
};
use ringdyn::topology::space::{enumerate_posets, homeomorphisms, FiniteSpace, SpaceAnalysis, SpaceMap};
use ringdyn::topology::zariski::{spec_map, spec_space};
use ringdyn::verdict::Status;

#[test]
fn poset_counts() {
    // Unlabeled posets on n points.
    let expected = [1usize, 1, 2, 5, 16, 63, 318];
    for (n, &count) in expected.iter().enumerate() {
        assert_eq!(enumerate_posets(n).unwrap().len(), count, "{n} points");
    }
}

fn brute_opens(space: &FiniteSpace) -> Vec<u64> {
    let n = space.len();
    (0u64..1 << n)
        .filter(|&m| {
            (0..n).all(|q| m >> q & 1 == 0 || (0..n).all(|p| !space.le(p, q) || m >> p & 1 == 1))
        })
        .collect()
}

fn brute_homeomorphisms(space: &FiniteSpace) -> usize {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        perms(n - 1)
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    q
                })
            })
            .collect()
    }
    let n = space.len();
    perms(n)
        .into_iter()
        .filter(|f| (0..n).all(|p| (0..n).all(|q| space.le(p, q) == space.le(f[p], f[q]))))
        .count()
}

#[test]
fn opens_and_homeomorphisms_match_brute_force() {
    let b = Bounds::default();
    for n in 1..=5 {
        for space in enumerate_posets(n).unwrap() {
            assert_eq!(space.opens(&b).unwrap(), brute_opens(&space));
            assert_eq!(homeomorphisms(&space).len(), brute_homeomorphisms(&space));
        }
    }
}

/// Every cover, as a list of opens.
fn all_covers(space: &FiniteSpace) -> Vec<Vec<u64>> {
    let opens: Vec<u64> = brute_opens(space).into_iter().filter(|&o| o != 0).collect();
    (1u32..1 << opens.len())
        .map(|mask| (0..opens.len()).filter(|&i| mask >> i & 1 == 1).map(|i| opens[i]).collect::<Vec<u64>>())
        .filter(|c| c.iter().fold(0, |a, &m| a | m) == space.full())
        .collect()
}

fn refines(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| x & !y == 0))
}

fn wedge(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = a.iter().flat_map(|&x| b.iter().map(move |&y| x & y)).filter(|&m| m != 0).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Positive expansivity straight from the definition, with windows up to
/// the number of opens (the wedge sequence refines monotonically, so it
/// stabilizes within that many strict steps).
fn brute_positive(space: &FiniteSpace, h: &SpaceMap, covers: &[Vec<u64>]) -> bool {
    let steps = brute_opens(space).len() * h.period();
    covers.iter().any(|u| {
        let mut g = u.clone();
        let mut pulled = u.clone();
        let mut windows = vec![g.clone()];
        for _ in 0..steps {
            pulled = pulled.iter().map(|&m| h.preimage(m)).collect();
            g = wedge(&g, &pulled);
            windows.push(g.clone());
        }
        covers.iter().all(|v| windows.iter().any(|w| refines(w, v)))
    })
}

#[test]
fn positive_expansivity_matches_definition() {
    let b = Bounds::default();
    for n in 1..=4 {
        for space in enumerate_posets(n).unwrap() {
            let covers = all_covers(&space);
            let analysis = SpaceAnalysis::new(&space, &b).unwrap();
            for h in homeomorphisms(&space) {
                let v = analysis.is_positively_expansive_top(&h).unwrap();
                assert_eq!(v.is_proved(), brute_positive(&space, &h, &covers));
            }
            let minimal = covers.iter().any(|u| covers.iter().all(|v| refines(u, v)));
            assert_eq!(analysis.has_minimal_cover().unwrap().is_proved(), minimal);
        }
    }
}

fn ring_strategy() -> impl Strategy<Value = FiniteRing> {
    let small = prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9]);
    prop::collection::vec(small, 1..=3).prop_map(|ns| {
        let factors: Vec<FiniteRing> = ns.iter().map(|&n| FiniteRing::cyclic(n).unwrap()).collect();
        let refs: Vec<&FiniteRing> = factors.iter().collect();
        FiniteRing::product(&refs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spectrum_is_a_functor(ring in ring_strategy()) {
        let b = Bounds::default();
        let lat = ring.enumerate_ideals(&b).unwrap();
        let spec = spec_space(&lat, &b).unwrap();
        let autos = catalog_automorphisms(&ring, &b).unwrap();
        for a in autos.iter().take(6) {
            for c in autos.iter().take(6) {
                let lhs = spec_map(&lat, &spec, &a.compose(c).unwrap()).unwrap();
                let rhs = spec_map(&lat, &spec, c).unwrap().compose(&spec_map(&lat, &spec, a).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
        // Points are primes: one maximal ideal per factor ring.
        prop_assert_eq!(spec.space().maximal_points().len(), lat.maximal_ids().len());
    }

    #[test]
    fn chain_preimage_is_pointwise(neg in -6i64..6, pos in -6i64..6, inf_neg: bool, inf_pos: bool, dir in -1i64..=1, n in 0usize..4) {
        let cut = |inf: bool, c: i64| if inf { Cut::Inf } else { Cut::At(c) };
        let o = ChainOpen::new(cut(inf_neg, neg), cut(inf_pos, pos));
        let h = shift_map(dir);
        let pre = h.preimage_n(o, n);
        let mut points = vec![ChainPoint::Zero, ChainPoint::End(Side::Neg), ChainPoint::End(Side::Pos)];
        for i in -12..=12 {
            points.push(ChainPoint::Inner(Side::Neg, i));
            points.push(ChainPoint::Inner(Side::Pos, i));
        }
        for p in points {
            let mut image = p;
            for _ in 0..n {
                image = h.apply(image);
            }
            prop_assert_eq!(pre.contains(p), o.contains(image));
        }
    }
}

#[test]
fn chain_windows_are_covers_and_wedges_refine() {
    for c in window_covers(4) {
        assert!(ChainCover::new(c.members().to_vec()).is_ok());
    }
    let seq = wedge_sequence(shift_map(1), &ChainCover::standard(), 6);
    for w in seq.windows(2) {
        assert!(w[1].iter().all(|x| w[0].iter().any(|y| x.neg <= y.neg && x.pos <= y.pos)));
    }
}

#[test]
fn discrete_spaces_are_positively_expansive() {
    let b = Bounds::default();
    let s = FiniteSpace::discrete(4);
    let a = SpaceAnalysis::new(&s, &b).unwrap();
    for h in homeomorphisms(&s) {
        assert_eq!(a.is_positively_expansive_top(&h).unwrap().status, Status::Proved);
    }
}
