//! Small named complexes used in tests, docs and the verification suites.

use crate::complexes::SimplicialComplex;

/// The quasi-tree `⟨123, 234, 345, 346⟩` on six vertices.
pub fn delta_q() -> SimplicialComplex {
    SimplicialComplex::from_lists(6, &[[1, 2, 3], [2, 3, 4], [3, 4, 5], [3, 4, 6]]).expect("valid complex")
}

/// `⟨123, 345, 246⟩`: not a quasi-tree, although the facet ideal of its
/// pure complement has linear quotients.
pub fn delta_n() -> SimplicialComplex {
    SimplicialComplex::from_lists(6, &[[1, 2, 3], [3, 4, 5], [2, 4, 6]]).expect("valid complex")
}
