//! Simplicial complexes, squarefree monomial ideals and their resolutions:
//! Alexander duality, linear quotients, Betti numbers, quasi-trees and
//! chordal graphs.

pub mod complexes;
pub mod examples;
pub mod error;
pub mod graphs;
pub mod homological;
pub mod ideals;
pub mod io;
pub mod limits;
pub mod quasitrees;
pub mod verify;
pub mod vertex;

pub use complexes::{AlexanderDual, MinimalNonfaces, SimplicialComplex};
pub use error::{Error, Result};
pub use homological::FieldChoice;
pub use ideals::{Monomial, MonomialIdeal};
pub use limits::Limits;
pub use vertex::VertexSet;
