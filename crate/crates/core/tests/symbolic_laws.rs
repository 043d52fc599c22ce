//! Symbolic ideals of the semilocal PID against integers: `(p_1^a_1 ...)`
//! is modelled by the big integer `p_1^a_1 ...`, with containment as
//! divisibility, sums as gcd and products as products.

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use ringdyn::symbolic::{sym_is_generator, sym_product, sym_refines, ExponentIdeal, SymGenerator};

const PRIMES: [u32; 3] = [2, 3, 5];

/// `None` is the zero ideal.
fn model(i: &ExponentIdeal) -> Option<BigUint> {
    if i.is_bottom() {
        return None;
    }
    Some(
        i.exps()
            .iter()
            .zip(PRIMES)
            .fold(BigUint::from(1u32), |acc, (&e, p)| acc * BigUint::from(p).pow(e)),
    )
}

fn model_contained(a: &Option<BigUint>, b: &Option<BigUint>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x.is_multiple_of(y),
    }
}

fn ideal(k: usize) -> impl Strategy<Value = ExponentIdeal> {
    prop_oneof![
        1 => Just(ExponentIdeal::bottom(k)),
        6 => prop::collection::vec(0u32..5, k).prop_map(|e| ExponentIdeal::exponents(&e).unwrap()),
    ]
}

fn members(k: usize) -> impl Strategy<Value = Vec<ExponentIdeal>> {
    prop::collection::vec(ideal(k), 1..5)
}

fn model_generates(ms: &[ExponentIdeal]) -> bool {
    ms.iter()
        .filter_map(model)
        .fold(None::<BigUint>, |g, x| Some(g.map_or(x.clone(), |g| g.gcd(&x))))
        .is_some_and(|g| g == BigUint::from(1u32))
}

fn generator(k: usize) -> impl Strategy<Value = SymGenerator> {
    members(k)
        .prop_filter("generator", move |m| sym_is_generator(k, m).unwrap())
        .prop_map(move |m| SymGenerator::new(k, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sum_product_containment((a, b) in (1usize..=3).prop_flat_map(|k| (ideal(k), ideal(k)))) {
        let (ma, mb) = (model(&a), model(&b));
        prop_assert_eq!(a.contained_in(&b), model_contained(&ma, &mb));
        let sum = match (&ma, &mb) {
            (None, x) | (x, None) => x.clone(),
            (Some(x), Some(y)) => Some(x.gcd(y)),
        };
        let prod = match (&ma, &mb) {
            (Some(x), Some(y)) => Some(x * y),
            _ => None,
        };
        prop_assert_eq!(model(&a.sum(&b).unwrap()), sum);
        prop_assert_eq!(model(&a.product(&b).unwrap()), prod);
    }

    #[test]
    fn generators_are_coprime_families(k in 1usize..=3, ms in members(3)) {
        let ms: Vec<ExponentIdeal> = ms
            .iter()
            .map(|m| if m.is_bottom() { ExponentIdeal::bottom(k) } else { ExponentIdeal::exponents(&m.exps()[..k]).unwrap() })
            .collect();
        prop_assert_eq!(sym_is_generator(k, &ms).unwrap(), model_generates(&ms));
    }

    #[test]
    fn product_refines_factors(a in generator(2), b in generator(2)) {
        let ab = sym_product(&a, &b).unwrap();
        prop_assert!(sym_refines(&ab, &a).unwrap());
        prop_assert!(sym_refines(&ab, &b).unwrap());
        prop_assert!(sym_is_generator(2, ab.members()).unwrap());
    }

    #[test]
    fn refinement_matches_model(a in generator(2), b in generator(2)) {
        let expected = a.members().iter().all(|x| {
            b.members().iter().any(|y| model_contained(&model(x), &model(y)))
        });
        prop_assert_eq!(sym_refines(&a, &b).unwrap(), expected);
    }
}
