//! Prime spectra of finite rings, spectrum maps of automorphisms and the
//! extension property of the maximal spectrum.
//!
//! `cargo run --example zariski`

use ringdyn::bounds::Bounds;
use ringdyn::engine::{Engine, Mode};
use ringdyn::ring::{FiniteRing, RingAutomorphism};
use ringdyn::topology::space::{SpaceAnalysis, TopMode};
use ringdyn::topology::zariski::{is_extension_closed, spec_map, spec_space, sym_spec};

fn main() -> ringdyn::error::Result<()> {
    let b = Bounds::default();
    let f2 = FiniteRing::cyclic(2)?;
    let ring = FiniteRing::product(&[&f2, &f2, &f2])?;
    let eng = Engine::new(&ring, &b)?;
    let lat = eng.lattice();
    let spec = spec_space(lat, &b)?;
    println!("Spec F2^3: {} points {:?}", spec.space().len(), spec.space().labels());

    let alpha = RingAutomorphism::swap(&ring, 0, 1)?;
    let h = spec_map(lat, &spec, &alpha)?;
    println!("swap acts on primes as {:?}", h.points());
    let analysis = SpaceAnalysis::new(spec.space(), &b)?;
    let algebraic = eng.decide(&alpha, Mode::Expansive)?;
    let topological = analysis.decide(&h, TopMode::Expansive)?;
    println!("expansive: algebraic {:?}, topological {:?}", algebraic.status, topological.status);

    let ext = is_extension_closed(spec.space(), spec.maximal_mask(), &b)?;
    println!("maximal spectrum extension closed: {:?}", ext.status);

    let x = sym_spec(3)?;
    let ext = is_extension_closed(&x, x.full() & !1, &b)?;
    println!("three primes: {:?} after {} covers", ext.status, ext.covers_checked);
    print!("{}", x.to_dot());
    Ok(())
}
