//! Emits a certificate, checks it, then tampers with it and checks again.
//!
//! `cargo run --example certificates`

use ringdyn::bounds::Bounds;
use ringdyn::certificate::Certificate;
use ringdyn::engine::{Engine, Mode};
use ringdyn::ring::{FiniteRing, RingAutomorphism};

fn main() -> ringdyn::error::Result<()> {
    let b = Bounds::default();
    let ring = FiniteRing::cyclic(12)?;
    let eng = Engine::new(&ring, &b)?;
    let id = RingAutomorphism::identity(&ring);
    let v = eng.decide(&id, Mode::Positive)?;
    let cert = Certificate::ring_verdict(&eng, &id, Mode::Positive, &v);
    let text = serde_json::to_string(&cert).unwrap();
    println!("{text}");
    println!("check: {:?}", cert.check(&b));

    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    if let Some(entry) = value["verdict"]["n_table"].get_mut(0) {
        entry["n"] = 0.into();
        entry["map"] = serde_json::json!([]);
    }
    let tampered: Certificate = serde_json::from_value(value).unwrap();
    match tampered.check(&b) {
        Ok(()) => println!("tampered certificate accepted"),
        Err(e) => println!("tampered certificate: {e}"),
    }
    Ok(())
}
