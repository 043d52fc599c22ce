//! Expansivity of homeomorphisms of small finite spaces.
//!
//! `cargo run --release --example finite_spaces`

use ringdyn::bounds::Bounds;
use ringdyn::topology::space::{enumerate_posets, homeomorphisms, FiniteSpace, SpaceAnalysis};
use ringdyn::verdict::Status;

fn main() -> ringdyn::error::Result<()> {
    let b = Bounds::default();
    let s = FiniteSpace::sierpinski();
    let a = SpaceAnalysis::new(&s, &b)?;
    let id = ringdyn::topology::space::SpaceMap::identity(&s);
    println!("Sierpinski identity positively expansive: {:?}", a.is_positively_expansive_top(&id)?.status);

    for n in 1..=4 {
        let mut proved = 0;
        let mut total = 0;
        for space in enumerate_posets(n)? {
            let a = SpaceAnalysis::new(&space, &b)?;
            for h in homeomorphisms(&space) {
                total += 1;
                if a.is_positively_expansive_top(&h)?.status == Status::Proved {
                    proved += 1;
                }
            }
        }
        println!("{n} points: {proved} of {total} homeomorphisms positively expansive");
    }
    Ok(())
}
