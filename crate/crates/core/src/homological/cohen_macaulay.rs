use super::homology::reduced_homology;
use super::FieldChoice;
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vertex::VertexSet;

/// Reisner's criterion: `K[Δ]` is Cohen-Macaulay iff for every face `F`
/// (including `∅`) the link of `F` has vanishing reduced homology below its
/// dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldChoice, limits: &Limits) -> Result<bool> {
    let n = complex.ambient();
    if n > limits.max_cm_vars {
        return Err(Error::resource(format!("{n} vertices exceed the Cohen-Macaulay cap of {}", limits.max_cm_vars)));
    }
    if complex.is_void() {
        return Err(Error::domain("the void complex has no face ring"));
    }
    for layer in complex.faces_by_size() {
        for face in layer {
            let face = VertexSet::from_bits_unchecked(n, face);
            let link = complex.link(&face).expect("enumerated faces have links");
            let dim = link.dim()?;
            let h = reduced_homology(&link, field, limits)?;
            if (-1..dim).any(|i| h.reduced(i) != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
