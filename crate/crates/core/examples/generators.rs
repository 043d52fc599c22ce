//! Generators of a ring: refinement, products and pullbacks.
//!
//! `cargo run --example generators`

use ringdyn::bounds::Bounds;
use ringdyn::ring::{FiniteRing, RingAutomorphism};

fn main() -> ringdyn::error::Result<()> {
    let ring = FiniteRing::cyclic(12)?;
    let lat = ring.enumerate_ideals(&Bounds::default())?;
    let a = lat.generator_from_elements(&[2, 3])?;
    let b = lat.generator_from_elements(&[4, 3])?;
    println!("{{(2),(3)}} refines {{(4),(3)}}: {}", lat.refines(&a, &b)?);
    println!("{{(4),(3)}} refines {{(2),(3)}}: {}", lat.refines(&b, &a)?);
    if let Some(map) = lat.refinement_map(&b, &a)? {
        println!("refinement map {map:?}");
    }
    let ab = lat.gen_product(&a, &b)?;
    println!("product has {} members, antichain form {}", ab.len(), lat.normalize_antichain(&ab).len());

    let all = lat.enumerate_generators(true, &Bounds::default())?;
    println!("Z/12 has {} antichain generators", all.len());

    let id = RingAutomorphism::identity(&ring);
    println!("pullback by the identity is unchanged: {}", lat.pullback(&id, &a)? == a);
    Ok(())
}
