//! Exact integer-polynomial machinery for Lehmer's problem and its
//! geometric counterpart: Mahler measures with certified error radii,
//! Salem/Pisot classification, hyperbolic translation lengths derived from
//! traces, systole-volume bound evaluation, and an exhaustive search for
//! minimal measures over bounded families.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `mahler` binary, which exposes every capability as a subcommand.

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod geodesic;
pub mod measure;
mod modp;
pub mod poly;
pub mod resultant;
pub mod roots;
pub mod search;
pub mod sturm;

pub use bounds::BoundConstants;
pub use classify::{classify, PolyKind, PolynomialClass};
pub use cyclotomic::{is_cyclotomic_product, strip_cyclotomic_factors};
pub use error::{Error, Result};
pub use geodesic::{displacement_from_trace, displacement_from_u_polynomial, DisplacementResult};
pub use measure::{jensen_measure, log_mahler, mahler_measure, MeasureMethod, MeasureResult};
pub use poly::{IntPolynomial, TracePolynomial};
pub use roots::complex_roots;
pub use search::{search_min_measure, SearchRecord, SearchSpec};
