//! The two-ended chain space: shifts, window products and the absence of
//! a cover refining every cover.
//!
//! `cargo run --example chain_space`

use ringdyn::topology::chain::{
    chain_has_minimal_cover, chain_positively_expansive, shift_map, wedge_sequence, ChainCover,
};

fn main() -> ringdyn::error::Result<()> {
    let u = ChainCover::standard();
    println!("cover {}", serde_json::to_string(&u).unwrap());
    for (n, g) in wedge_sequence(shift_map(1), &u, 3).iter().enumerate() {
        println!("  G_{n} = {}", serde_json::to_string(g).unwrap());
    }
    for m in [2, 5, 8] {
        let v = chain_positively_expansive(shift_map(1), &u, m, (2 * m + 2) as usize)?;
        println!("shift, window {m}: {:?} with n = {:?}", v.status, v.uniform_n);
    }
    let v = chain_positively_expansive(shift_map(-1), &u, 5, 12)?;
    println!("inverse shift: {:?}, stable from {:?}", v.status, v.stable_from);
    let v = chain_has_minimal_cover(4)?;
    println!("minimal cover: {:?}, {} candidates rejected", v.status, v.rejected.len());
    Ok(())
}
