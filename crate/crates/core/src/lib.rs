//! Computational toolkit for Dyer groups: validation of Dyer graphs, the
//! word problem, the Coxeter-group embeddings, the complex of groups over
//! spherical subsets and its development, Coxeter polytopes, and the
//! piecewise Euclidean complex Σ with a local CAT(0) certificate.

pub mod error;
pub mod fixtures;
pub mod graph;
mod linalg;
pub mod polytope;
pub mod presentation;
pub mod scwol;
pub mod sigma;
pub mod word;

pub use error::{Error, Result};
pub use graph::{DyerGraph, Order, VertexSet};
pub use word::{Budget, Syllable, SyllableWord, WordEngine};
