//! Equiangular line families and the spectral graph machinery behind
//! them, at desk scale and with exact rational ground truth.
//!
//! The library builds spherical codes with prescribed pairwise inner
//! products, maps them to their corresponding graphs, normalizes codes by
//! switching, evaluates eigenvalue-multiplicity bound instances into
//! machine-checkable certificates, and cross-checks everything against an
//! exhaustive search oracle whose feasibility decisions are fully exact.

pub mod bounds;
pub mod campaign;
pub mod cert;
pub mod code;
pub mod eigen;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod search;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::{Ball, Graph};
