//! Resource caps shared by the expensive operations.
//!
//! Exceeding a cap is a hard [`Error::Resource`](crate::Error::Resource);
//! nothing is ever silently truncated.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Ambient size for homology and Betti computations.
    pub max_vars: usize,
    /// Ambient size for the Cohen-Macaulay test.
    pub max_cm_vars: usize,
    /// Minimal generators accepted by the Betti computation.
    pub max_generators: usize,
    /// Size of the lcm lattice explored by the Betti computation.
    pub max_lattice: usize,
    /// Facets accepted by the shelling search.
    pub max_facets: usize,
    /// Generator count up to which the linear-quotients search runs without a node budget.
    pub lq_exhaustive: usize,
    /// Search nodes allowed above `lq_exhaustive` (and for shellings).
    pub search_budget: u64,
    /// How far above the least generator degree a graded component may be taken.
    pub degree_cap: u32,
    /// Vertices accepted by clique enumeration.
    pub max_clique_vertices: usize,
    /// Faces accepted when building boundary matrices.
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vars: 16,
            max_cm_vars: 14,
            max_generators: 12,
            max_lattice: 1 << 18,
            max_facets: 12,
            lq_exhaustive: 12,
            search_budget: 2_000_000,
            degree_cap: 8,
            max_clique_vertices: 24,
            max_faces: 20_000,
        }
    }
}

impl Limits {
    /// Caps used for powers of ideals, whose generator counts grow quickly.
    pub fn for_powers() -> Self {
        Limits { max_generators: 4096, ..Limits::default() }
    }
}
