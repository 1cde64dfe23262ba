//! Laboratory for the planted dense subhypergraph detection problem.
//!
//! The crate provides reproducible samplers for the null, planted and
//! rank-one-spike models, the signed edge-count and balanced-motif
//! detection statistics, and exact calculators for the squared norm of the
//! low-degree likelihood ratio (unconditional, brute force, and conditioned
//! on the absence of overly dense planted subgraphs).
//!
//! Vertices are 0-based everywhere in this API. The text and JSON formats
//! written by [`hypergraph::text`] use 1-based ids.

pub mod balanced;
pub mod error;
pub mod hypergraph;
pub mod ldlr;
pub mod models;
pub mod params;
pub mod rng;
pub mod stats;

mod parallel;

pub use error::{Error, Result};
pub use params::{ExactParams, ProblemParams};
