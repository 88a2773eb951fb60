//! Exact Lin–Lu–Yau curvature of regular graphs, local matching
//! certificates, parameter-only sharpness certificates for strongly regular
//! graphs, and their spectral and number-theoretic companions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod assignment;
pub mod certify;
pub mod error;
pub mod field;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod numtheory;
pub mod regularity;
pub mod spectral;
pub mod transport;

pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use graph::{EdgeNeighborhood, Graph, VertexId};
pub use regularity::{classify_regularity, RegularityClass, SrgParams};
pub use transport::{CurvatureReport, Rational};
