//! Ideals and automorphisms of finite rings against independent models:
//! divisors of `n` for `ℤ/n` (gcd arithmetic on big integers) and
//! brute-force closure checks over all subsets of small rings.

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use ringdyn::bounds::Bounds;
use ringdyn::ideal::Ideal;
use ringdyn::ring::{enumerate_automorphisms, FiniteRing, RingAutomorphism};

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The ideal of `ℤ/n` generated by `a` is generated by `gcd(a, n)`.
fn gcd_model(n: u64, a: u64) -> u64 {
    let g = BigUint::from(a).gcd(&BigUint::from(n));
    u64::try_from(g).unwrap()
}

#[test]
fn cyclic_ideals_are_divisors() {
    for n in 2..=60u64 {
        let ring = FiniteRing::cyclic(n).unwrap();
        let lat = ring.enumerate_ideals(&Bounds::default()).unwrap();
        let divs = divisors(n);
        assert_eq!(lat.len(), divs.len(), "Z/{n}");
        for &d in &divs {
            let ideal = Ideal::principal(&ring, (d % n) as u32);
            assert_eq!(ideal.len() as u64, n / d, "Z/{n} ideal ({d})");
            assert!(lat.id_of(&ideal).is_ok());
        }
        let primes: Vec<u64> = divs.iter().copied().filter(|&d| d > 1 && divisors(d).len() == 2).collect();
        assert_eq!(lat.maximal_ids().len(), primes.len(), "Z/{n} maximal ideals");
    }
}

#[test]
fn cyclic_sums_products_match_gcd() {
    for n in [12u64, 30, 36, 60] {
        let ring = FiniteRing::cyclic(n).unwrap();
        let lat = ring.enumerate_ideals(&Bounds::default()).unwrap();
        for a in divisors(n) {
            for b in divisors(n) {
                let ia = lat.id_of(&Ideal::principal(&ring, (a % n) as u32)).unwrap();
                let ib = lat.id_of(&Ideal::principal(&ring, (b % n) as u32)).unwrap();
                let sum = Ideal::principal(&ring, (gcd_model(n, a.gcd(&b)) % n) as u32);
                let prod = Ideal::principal(&ring, (gcd_model(n, a * b) % n) as u32);
                assert_eq!(lat.ideal(lat.sum_id(ia, ib)), &sum, "Z/{n}: ({a}) + ({b})");
                assert_eq!(lat.ideal(lat.product_id(ia, ib)), &prod, "Z/{n}: ({a})({b})");
            }
        }
    }
}

fn is_ideal(ring: &FiniteRing, set: &[bool]) -> bool {
    if !set[ring.zero() as usize] {
        return false;
    }
    ring.elements().all(|x| {
        !set[x as usize]
            || ring.elements().all(|y| {
                (!set[y as usize] || set[ring.add(x, y) as usize]) && set[ring.mul(x, y) as usize]
            })
    })
}

fn subset_ideal_count(ring: &FiniteRing) -> usize {
    let n = ring.order();
    (0u32..1 << n)
        .filter(|mask| {
            let set: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            is_ideal(ring, &set)
        })
        .count()
}

fn small_rings() -> Vec<FiniteRing> {
    let f2 = FiniteRing::cyclic(2).unwrap();
    let z4 = FiniteRing::cyclic(4).unwrap();
    vec![
        FiniteRing::cyclic(8).unwrap(),
        FiniteRing::cyclic(12).unwrap(),
        FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap(),
        FiniteRing::poly_quotient(2, &[0, 0, 0, 1]).unwrap(),
        FiniteRing::poly_quotient(3, &[0, 0, 1]).unwrap(),
        FiniteRing::product(&[&f2, &f2, &f2]).unwrap(),
        FiniteRing::product(&[&z4, &f2]).unwrap(),
        FiniteRing::product(&[&f2, &FiniteRing::poly_quotient(2, &[0, 0, 1]).unwrap()]).unwrap(),
    ]
}

#[test]
fn ideal_enumeration_matches_subsets() {
    for ring in small_rings() {
        let lat = ring.enumerate_ideals(&Bounds::default()).unwrap();
        assert_eq!(lat.len(), subset_ideal_count(&ring), "{:?}", ring.recipe());
    }
}

fn is_automorphism(ring: &FiniteRing, img: &[u32]) -> bool {
    img[ring.one() as usize] == ring.one()
        && ring.elements().all(|x| {
            ring.elements().all(|y| {
                img[ring.add(x, y) as usize] == ring.add(img[x as usize], img[y as usize])
                    && img[ring.mul(x, y) as usize] == ring.mul(img[x as usize], img[y as usize])
            })
        })
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

#[test]
fn automorphisms_match_permutation_search() {
    let f2 = FiniteRing::cyclic(2).unwrap();
    let rings = [
        FiniteRing::poly_quotient(2, &[1, 1, 1]).unwrap(),
        FiniteRing::product(&[&f2, &f2, &f2]).unwrap(),
        FiniteRing::product(&[&f2, &f2]).unwrap(),
        FiniteRing::cyclic(8).unwrap(),
        FiniteRing::poly_quotient(2, &[0, 0, 0, 1]).unwrap(),
    ];
    for ring in &rings {
        let expected = permutations(ring.order()).into_iter().filter(|p| is_automorphism(ring, p)).count();
        let got = enumerate_automorphisms(ring, &Bounds::default()).unwrap();
        assert_eq!(got.len(), expected, "{:?}", ring.recipe());
    }
}

fn ring_strategy() -> impl Strategy<Value = FiniteRing> {
    prop_oneof![
        (2u64..=40).prop_map(|n| FiniteRing::cyclic(n).unwrap()),
        prop::sample::select(vec![
            (2u64, vec![1u64, 1, 1]),
            (2, vec![0, 0, 1]),
            (2, vec![0, 1, 1]),
            (3, vec![1, 0, 1]),
            (3, vec![2, 0, 1]),
            (2, vec![1, 0, 0, 1]),
        ])
        .prop_map(|(p, c)| FiniteRing::poly_quotient(p, &c).unwrap()),
        ((2u64..=6), (2u64..=6)).prop_map(|(a, b)| {
            FiniteRing::product(&[&FiniteRing::cyclic(a).unwrap(), &FiniteRing::cyclic(b).unwrap()]).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold(ring in ring_strategy(), seed in any::<u64>()) {
        prop_assert!(ring.check_axioms(seed).is_ok());
    }

    #[test]
    fn lattice_operations_are_monotone(ring in ring_strategy()) {
        let lat = ring.enumerate_ideals(&Bounds::default()).unwrap();
        let n = lat.len() as u32;
        for a in 0..n {
            for b in 0..n {
                let s = lat.sum_id(a, b);
                let p = lat.product_id(a, b);
                prop_assert!(lat.le(a, s) && lat.le(b, s));
                prop_assert!(lat.le(p, a) && lat.le(p, b));
                prop_assert_eq!(s, lat.sum_id(b, a));
                prop_assert_eq!(p, lat.product_id(b, a));
            }
        }
    }

    #[test]
    fn generator_refinement_is_a_preorder(ring in ring_strategy()) {
        let b = Bounds::default();
        let lat = ring.enumerate_ideals(&b).unwrap();
        let Ok(gens) = lat.enumerate_generators(true, &b) else { return Ok(()); };
        let gens: Vec<_> = gens.into_iter().take(12).collect();
        for x in &gens {
            prop_assert!(lat.refines(x, x).unwrap());
            for y in &gens {
                let xy = lat.gen_product(x, y).unwrap();
                prop_assert!(lat.refines(&xy, x).unwrap() && lat.refines(&xy, y).unwrap());
                for z in &gens {
                    if lat.refines(x, y).unwrap() && lat.refines(y, z).unwrap() {
                        prop_assert!(lat.refines(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_preserves_generation(ring in ring_strategy()) {
        let b = Bounds::default();
        let lat = ring.enumerate_ideals(&b).unwrap();
        let Ok(gens) = lat.enumerate_generators(true, &b) else { return Ok(()); };
        let autos = enumerate_automorphisms(&ring, &b)
            .unwrap_or_else(|_| vec![RingAutomorphism::identity(&ring)]);
        for alpha in &autos {
            for g in gens.iter().take(10) {
                let p = lat.pullback(alpha, g).unwrap();
                prop_assert!(lat.ids_generate(p.ids()));
                prop_assert_eq!(p.len(), g.len());
            }
        }
    }
}
