//! Decides expansivity and positive expansivity for every automorphism of
//! a few rings, printing witnesses and window indices.
//!
//! `cargo run --example expansivity`

use ringdyn::bounds::Bounds;
use ringdyn::engine::{Engine, Mode};
use ringdyn::ring::{enumerate_automorphisms, FiniteRing};

fn main() -> ringdyn::error::Result<()> {
    let b = Bounds::default();
    let f2 = FiniteRing::cyclic(2)?;
    let rings = [
        ("Z/6", FiniteRing::cyclic(6)?),
        ("Z/8", FiniteRing::cyclic(8)?),
        ("F2^3", FiniteRing::product(&[&f2, &f2, &f2])?),
    ];
    for (name, ring) in &rings {
        let eng = Engine::new(ring, &b)?;
        let lat = eng.lattice();
        for alpha in enumerate_automorphisms(ring, &b)? {
            for mode in [Mode::Expansive, Mode::Positive] {
                let v = eng.decide(&alpha, mode)?;
                let witness = v.witness.as_ref().map(|w| w.ids().to_vec());
                let worst = v.n_table.iter().map(|e| e.n).max();
                println!(
                    "{name} period {} {mode:?}: {:?} witness ids {witness:?} largest n {worst:?}",
                    alpha.period(),
                    v.status
                );
            }
        }
        let zero = eng.decide(&ringdyn::ring::RingAutomorphism::identity(ring), Mode::Zero)?;
        println!("{name}: generator refining every generator {:?} ({} ideals)", zero.status, lat.len());
    }
    Ok(())
}
