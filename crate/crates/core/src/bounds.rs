use serde::{Deserialize, Serialize};

/// Size limits for the exhaustive procedures. Every enumeration checks its
/// bound up front and fails with [`Error::Capacity`](crate::Error::Capacity)
/// instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    /// Largest ring order accepted by the constructors.
    pub order: usize,
    /// Largest ring order for which automorphisms are enumerated.
    pub automorphisms: usize,
    /// Largest number of ideals `enumerate_ideals` will produce.
    pub lattice: usize,
    /// Largest ideal lattice over which generators are enumerated.
    pub search: usize,
    /// Largest finite space (in points) over which covers are enumerated.
    pub space_points: usize,
    /// Largest number of covers a single enumeration may produce.
    pub covers: usize,
    /// Window limit for the symbolic oracle.
    pub oracle_steps: usize,
    /// Largest exponent used by symbolic adversary generators.
    pub oracle_exponent: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            order: 4096,
            automorphisms: 16,
            lattice: 4096,
            search: 24,
            space_points: 12,
            covers: 1_000_000,
            oracle_steps: 12,
            oracle_exponent: 3,
        }
    }
}
