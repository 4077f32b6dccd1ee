//! Exact scalars: rational functions of `q`, series in `h = q - 1`, and
//! polynomials in the central letters.

mod central;
mod hseries;
mod parse;
mod qrat;
mod zpoly;

pub use central::CentralPoly;
pub use hseries::{qrat_hseries, HSeries, DEFAULT_PRECISION};
pub use parse::parse_qrat;
pub use qrat::QRat;
pub use zpoly::ZPoly;

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    PoleAt(String),
    #[error("q = {0} is not admissible (q must avoid 0 and +-1)")]
    InadmissibleQ(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exact field arithmetic shared by the matrix layer.
pub trait Field: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_ref(&self) -> Option<Self>;
    fn from_qrat(x: &QRat, q: &Self) -> Result<Self, ScalarError>;
}

impl Field for QRat {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn from_qrat(x: &QRat, _q: &Self) -> Result<Self, ScalarError> {
        Ok(x.clone())
    }
}

impl Field for BigRational {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_qrat(x: &QRat, q: &Self) -> Result<Self, ScalarError> {
        x.eval(q)
    }
}
