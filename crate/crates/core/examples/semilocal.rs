//! The semilocal principal ideal domain with `k` primes: generator tests,
//! the closed-form identity criterion and the bounded oracle.
//!
//! `cargo run --release --example semilocal`

use ringdyn::symbolic::{
    complementary_family, sym_identity_expansivity_criterion, sym_minimal_generator_exists, OracleBounds,
    SymGenerator, SymOracle,
};

fn main() -> ringdyn::error::Result<()> {
    let v = sym_minimal_generator_exists(2)?;
    println!("two primes, generator refining every generator: {:?}", v.status);
    if let Some(r) = &v.refuter {
        println!("  first refuter {}", serde_json::to_string(r).unwrap());
    }

    let oracle = SymOracle::new(2, OracleBounds::default())?;
    println!("two primes: {} adversary generators", oracle.adversary_count());
    let g = complementary_family(2)?;
    for perm in [[0usize, 1], [1, 0]] {
        let o = oracle.decide(&g, &perm, true)?;
        println!("perm {perm:?}: {:?}, n = {:?}", o.verdict.status, o.verdict.uniform_n);
    }

    for vecs in [
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
    ] {
        let refs: Vec<Option<&[u32]>> = vecs.iter().map(|v| Some(v.as_slice())).collect();
        let g = SymGenerator::from_vectors(3, &refs)?;
        println!("{vecs:?}: identity criterion {}", sym_identity_expansivity_criterion(&g)?);
    }
    Ok(())
}
