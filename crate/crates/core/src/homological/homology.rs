use super::linalg::rank;
use super::FieldChoice;
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Ranks of reduced homology `H̃_{-1}, H̃_0, ..., H̃_{dim}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    /// `ranks[k]` is the rank of `H̃_{k-1}`.
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H̃_dim`; zero outside the stored range.
    pub fn reduced(&self, dim: isize) -> usize {
        if dim < -1 {
            return 0;
        }
        self.ranks.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced simplicial homology over `field`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldChoice, limits: &Limits) -> Result<HomologyProfile> {
    if complex.ambient() > limits.max_vars {
        return Err(Error::resource(format!(
            "homology on {} vertices exceeds the cap of {}",
            complex.ambient(),
            limits.max_vars
        )));
    }
    let layers = complex.faces_by_size();
    reduced_homology_of_faces(&layers, field, limits)
}

/// Reduced homology of a complex given by all of its faces as masks,
/// grouped by cardinality and sorted within each layer. An empty slice is
/// the void complex.
pub fn reduced_homology_of_faces(layers: &[Vec<u64>], field: FieldChoice, limits: &Limits) -> Result<HomologyProfile> {
    let total: usize = layers.iter().map(Vec::len).sum();
    if total > limits.max_faces {
        return Err(Error::resource(format!("{total} faces exceed the cap of {}", limits.max_faces)));
    }
    if layers.is_empty() {
        return Ok(HomologyProfile { ranks: vec![0] });
    }
    // boundary_rank[s] is the rank of the map from s-faces to (s-1)-faces.
    let mut boundary_rank = vec![0usize; layers.len() + 1];
    for s in 1..layers.len() {
        boundary_rank[s] = boundary_rank_between(&layers[s - 1], &layers[s], field);
    }
    let ranks = (0..layers.len())
        .map(|s| layers[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    Ok(HomologyProfile { ranks })
}

fn boundary_rank_between(lower: &[u64], upper: &[u64], field: FieldChoice) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let mut matrix = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, &face) in upper.iter().enumerate() {
        let mut rest = face;
        let mut position = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let row = lower.binary_search(&(face & !bit)).expect("face set is not closed under subsets");
            matrix[row][col] = if position % 2 == 0 { 1 } else { -1 };
            position += 1;
        }
    }
    rank(&matrix, field)
}
