//! Expansivity of automorphisms of commutative rings, decided with
//! checkable certificates.
//!
//! Finite rings are handled exactly through their ideal lattices; rings
//! with finitely many primes are handled symbolically; spectra are modelled
//! as finite posets or as a symbolic chain space.

pub mod bitset;
pub mod bounds;
pub mod catalog;
pub mod certificate;
pub mod cli;
pub mod dynamics;
pub mod engine;
pub mod error;
pub mod generator;
pub mod ideal;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod schema;
pub mod suites;
pub mod symbolic;
pub mod topology;
pub mod verdict;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use generator::GeneratorSet;
pub use ideal::{Ideal, IdealLattice};
pub use ring::{enumerate_automorphisms, find_isomorphism, Elem, FiniteRing, RingAutomorphism, RingDef};
pub use engine::{Engine, LocalDecomposition, MinimalOutcome, Mode};
pub use verdict::{Scope, Status, Verdict};
