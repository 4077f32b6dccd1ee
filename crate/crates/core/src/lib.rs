//! Exact symbolic engine for the higher-rank Askey-Wilson algebra `aw(n)`.

pub mod algebra;
pub mod casimir;
pub mod morphisms;
pub mod racah;
pub mod relations;
pub mod rewriter;
pub mod scalar;
pub mod syntax;
pub mod uq;

pub use algebra::{Label, NCPoly, Poly};
pub use scalar::{CentralPoly, HSeries, QRat};

/// Polynomials with central letters moved into the coefficients.
pub type AbsorbedPoly = NCPoly<CentralPoly>;
