//! Vietoris-Rips persistent homology over Z_2.
//!
//! [`vietoris_rips`] builds a clique filtration from a [`DistanceMatrix`],
//! [`reduce`] pairs its simplices by column reduction of the boundary matrix
//! and [`persistence_diagram`] reads a diagram off the pairing.
//! [`h0_single_linkage`] computes the zero-dimensional diagram directly with
//! union-find and gives the same multiset.

mod diagram;
mod filtration;
mod h0;
mod matrix;
mod reduction;

use thiserror::Error;

pub use diagram::{
    format_diagrams, parse_diagrams, persistence_diagram, DiagramFile, DiagramPoint,
    PersistenceDiagram,
};
pub use filtration::{vietoris_rips, FilteredSimplex, Filtration, Simplex};
pub use h0::{h0_single_linkage, h0_single_linkage_capped, UnionFind};
pub use matrix::{DistanceMatrix, Metric};
pub use reduction::{reduce, reduce_with, Pairing, ReductionOptions};

use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum TdaError {
    #[error("invalid distance matrix: {0}")]
    InvalidDistanceMatrix(String),
    #[error("cosine distance undefined: {0:?} embeds to the zero vector")]
    ZeroVector(String),
    #[error("unknown metric {0:?}")]
    UnknownMetric(String),
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("invalid diagram point {0}")]
    InvalidPoint(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension {0} needs a finite max_value")]
    UnboundedHigherDimension(usize),
}

/// Diagrams for dimensions `0..=max_dim` of the Rips filtration of `dm`.
///
/// Dimension 0 alone goes through union-find; anything higher builds the
/// filtration up to `max_dim + 1` and reduces it, which requires a finite
/// `max_value`.
pub fn rips_diagrams<T: Scalar>(
    dm: &DistanceMatrix<T>,
    max_dim: usize,
    max_value: T,
) -> Result<Vec<PersistenceDiagram<T>>, TdaError> {
    if max_dim == 0 {
        return Ok(vec![h0_single_linkage_capped(dm, max_value)]);
    }
    if !max_value.is_finite() {
        return Err(TdaError::UnboundedHigherDimension(max_dim));
    }
    let f = vietoris_rips(dm, max_dim + 1, max_value);
    let pairing = reduce_with(&f, ReductionOptions { clearing: true });
    Ok((0..=max_dim).map(|d| persistence_diagram(&f, &pairing, d)).collect())
}
