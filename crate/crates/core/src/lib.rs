//! Einstein metrics on SU(N) built from generalized flag-manifold decompositions.
//!
//! The crate has two independent curvature pipelines (a Koszul-formula oracle
//! working on explicit matrices, and closed forms in terms of triple structure
//! constants) together with an exact-arithmetic solver for the symmetric
//! Einstein system in the six unknowns `(y1, y2, x1, x2, x12, x23)`.
//!
//! Modules:
//! - [`liealg`]: su(N), the Killing form, module decompositions.
//! - [`structconst`]: triple constants `[k;ij]`, brute force and closed forms.
//! - [`curvature`]: Ricci tensors.
//! - [`exactpoly`]: rational polynomials, Sturm isolation, refinement.
//! - [`einstein`]: the polynomial system, root certification and classification.
//! - [`verify`]: the oracle suite run on one partition.
//! - [`report`]: serializable records shared by the CLI and the bindings.

pub mod curvature;
pub mod einstein;
pub mod error;
pub mod exactpoly;
pub mod liealg;
pub mod report;
pub mod structconst;
pub mod verify;

pub use error::{Error, Result};
