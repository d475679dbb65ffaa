//! Exact, parameter-level checks for totally geodesic embeddings of
//! 7-dimensional Eschenburg spaces `E_{a,b}` into 13-dimensional Bazaikin
//! spaces `B_q`.
//!
//! - [`eschenburg`]: freeness, curvature and `|H^4|` of `(a, b)`.
//! - [`bazaikin`]: freeness, curvature, `|H^6|` of `q`, and its ten
//!   totally geodesic Eschenburg subspaces.
//! - [`embedding`]: the candidate host `q^c` for a shift `c`, curvature
//!   windows, shift families with distinct `|H^6|`, and duality.
//! - [`survey`]: tabulated counterexamples and exhaustive box scans.
//!
//! All arithmetic is on [`num_bigint::BigInt`].

pub mod arith;
pub mod bazaikin;
pub mod embedding;
pub mod error;
pub mod eschenburg;
pub mod sample;
pub mod survey;

pub use bazaikin::{BazParams, OffendingPair, Submanifold};
pub use embedding::{EmbeddingCertificate, ShiftWindow, Sign, WindowReport};
pub use error::{Error, Result};
pub use eschenburg::{Cohom2Variant, EschParams};
pub use survey::{ScanConfig, ScanReport, ScanStats, SurveyRow};
