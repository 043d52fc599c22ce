//! Finite T0 spaces, prime spectra and the chain space.

pub mod chain;
pub mod space;
pub mod zariski;

pub use chain::{
    chain_has_minimal_cover, chain_positively_expansive, make_chain_space, shift_map, ChainCover, ChainOpen,
    ChainSpace, Cut, ShiftMap,
};
pub use space::{
    cover_refines, cover_wedge, enumerate_posets, homeomorphisms, irredundant_covers, maximal_point_cover,
    preimage_cover, FiniteSpace, OpenCover, SpaceAnalysis, SpaceMap, TopMode,
};
pub use zariski::{is_extension_closed, spec_map, spec_space, specm_space, sym_spec, SpecSpace};
