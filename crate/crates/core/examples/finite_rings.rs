//! Builds rings from recipes and prints their basic arithmetic.
//!
//! `cargo run --example finite_rings`

use ringdyn::bounds::Bounds;
use ringdyn::ring::{enumerate_automorphisms, FiniteRing, RingAutomorphism};
use ringdyn::schema::parse_ring_def;

fn main() -> ringdyn::error::Result<()> {
    let z12 = FiniteRing::cyclic(12)?;
    println!("Z/12: 5 * 7 = {}", z12.encode(z12.mul(5, 7)));

    // F_4 = F_2[x]/(x^2 + x + 1); elements are coefficient lists.
    let f4 = FiniteRing::poly_quotient(2, &[1, 1, 1])?;
    let x = f4.decode(&serde_json::json!([0, 1]))?;
    println!("F4: x^3 = {}", f4.encode(f4.pow(x, 3)));
    let frob = RingAutomorphism::frobenius(&f4)?;
    println!("F4: Frobenius sends x to {}", f4.encode(frob.apply(x)));

    let def = parse_ring_def(r#"{"kind":"product","factors":[{"kind":"cyclic","n":4},{"kind":"cyclic","n":2}]}"#)?;
    let p = FiniteRing::from_def(&def, &Bounds::default())?;
    println!("Z/4 x Z/2: order {} characteristic {}", p.order(), p.characteristic());
    p.check_axioms(7)?;

    for ring in [&z12, &f4, &p] {
        let autos = enumerate_automorphisms(ring, &Bounds::default())?;
        let periods: Vec<usize> = autos.iter().map(RingAutomorphism::period).collect();
        println!("{:?}: {} automorphisms, periods {periods:?}", ring.recipe(), autos.len());
    }
    Ok(())
}
