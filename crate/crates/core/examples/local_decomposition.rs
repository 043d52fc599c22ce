//! Splits rings into local factors with orthogonal idempotents and checks
//! the doubling refinements of a positive witness.
//!
//! `cargo run --example local_decomposition`

use ringdyn::bounds::Bounds;
use ringdyn::engine::{Engine, MinimalOutcome, Mode};
use ringdyn::ring::{FiniteRing, RingAutomorphism};

fn main() -> ringdyn::error::Result<()> {
    let b = Bounds::default();
    for n in [6u64, 12, 30, 60] {
        let ring = FiniteRing::cyclic(n)?;
        let eng = Engine::new(&ring, &b)?;
        match eng.strong_minimal_generator()? {
            MinimalOutcome::Decomposition(d) => {
                let orders: Vec<usize> = d.factors.iter().map(FiniteRing::order).collect();
                println!("Z/{n}: idempotents {:?}, factor orders {orders:?}", d.idempotents);
            }
            MinimalOutcome::NotMinimal { property, .. } => println!("Z/{n}: failed at {property}"),
        }
    }

    let ring = FiniteRing::cyclic(12)?;
    let eng = Engine::new(&ring, &b)?;
    let id = RingAutomorphism::identity(&ring);
    let v = eng.decide(&id, Mode::Positive)?;
    if let Some(w) = &v.witness {
        let report = eng.verify_doubling_lemma(&id, w, 4)?;
        println!("Z/12 doubling: base n {}, {} steps verified", report.base_n, report.steps.len());
    }
    let k = eng.build_complementary_generator();
    println!("Z/12 complementary generator ids {:?}", k.ids());
    Ok(())
}
