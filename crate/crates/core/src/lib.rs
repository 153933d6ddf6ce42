//! Stylistic distance between poets from the topology of their word
//! embeddings.
//!
//! A sonnet corpus is tokenized and stemmed ([`corpus`]), embedded with a
//! skipgram model ([`embedding`]), turned into one point cloud per poet whose
//! Vietoris-Rips persistence diagrams are computed ([`tda`]) and compared
//! with the bottleneck distance ([`distance`]). Repeating this over seeds
//! gives the trials analysed in [`stats`].
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the precision.

pub mod corpus;
pub mod distance;
pub mod embedding;
pub mod scalar;
pub mod stats;
pub mod synthetic;
pub mod tda;

pub use scalar::Scalar;

pub type EmbeddingMatrixF64 = embedding::EmbeddingMatrix<f64>;
pub type EmbeddingMatrixF32 = embedding::EmbeddingMatrix<f32>;
pub type CheckpointF64 = embedding::Checkpoint<f64>;
pub type CheckpointF32 = embedding::Checkpoint<f32>;
pub type PointCloudF64 = embedding::PointCloud<f64>;
pub type PointCloudF32 = embedding::PointCloud<f32>;
pub type DistanceMatrixF64 = tda::DistanceMatrix<f64>;
pub type DistanceMatrixF32 = tda::DistanceMatrix<f32>;
pub type FiltrationF64 = tda::Filtration<f64>;
pub type FiltrationF32 = tda::Filtration<f32>;
pub type DiagramPointF64 = tda::DiagramPoint<f64>;
pub type DiagramPointF32 = tda::DiagramPoint<f32>;
pub type PersistenceDiagramF64 = tda::PersistenceDiagram<f64>;
pub type PersistenceDiagramF32 = tda::PersistenceDiagram<f32>;
pub type TrialResultsF64 = stats::TrialResults<f64>;
pub type TrialResultsF32 = stats::TrialResults<f32>;
pub type AnovaReportF64 = stats::AnovaReport<f64>;
pub type AnovaReportF32 = stats::AnovaReport<f32>;
pub type PairwiseComparisonF64 = stats::PairwiseComparison<f64>;
pub type BoxPlotSummaryF64 = stats::BoxPlotSummary<f64>;
