//! Enumerates the ideals of a ring and exports the inclusion lattice.
//!
//! `cargo run --example ideal_lattice > ideals.dot`

use ringdyn::bounds::Bounds;
use ringdyn::ring::FiniteRing;

fn main() -> ringdyn::error::Result<()> {
    let ring = FiniteRing::cyclic(36)?;
    let lat = ring.enumerate_ideals(&Bounds::default())?;
    eprintln!("Z/36 has {} ideals, {} maximal", lat.len(), lat.maximal_ids().len());
    for (id, ideal) in lat.ideals().iter().enumerate() {
        let radical = ring.radical(ideal)?;
        let ann = ring.annihilator(ideal)?;
        let prime = !ideal.is_whole(&ring) && ring.is_prime_ideal(ideal)?;
        eprintln!(
            "  ideal {id}: {} elements, radical {} elements, annihilator {} elements, prime {prime}",
            ideal.len(),
            radical.len(),
            ann.len(),
        );
    }
    print!("{}", lat.to_dot());
    Ok(())
}
