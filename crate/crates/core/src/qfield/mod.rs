//! Exact arithmetic in `Q(q)`.
//!
//! [`Poly`] and [`RatFunc`] are generic over an exact field scalar; the crate
//! root fixes the scalar to arbitrary-precision rationals. [`TruncatedMultiPoly`]
//! holds the finitely many coefficients of a multivariate kernel series that
//! matter for a coefficient extraction.

mod poly;
mod ratfunc;
mod series;

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};
use thiserror::Error;

pub use poly::Poly;
pub use ratfunc::{IntegralReport, RatFunc, RatFuncJson};
pub use series::{Caps, KernelFactor, KernelSpec, TruncatedMultiPoly};

/// Coefficient field for polynomials in `q`.
///
/// Implementations must be exact: equality is used for canonical forms and
/// gcd computations.
pub trait Scalar:
    Clone + PartialEq + Num + Neg<Output = Self> + Debug + Display + FromStr + Send + Sync
{
    /// True when the value is an integer.
    fn is_integral(&self) -> bool;

    fn from_i64(value: i64) -> Self;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Clone + Signed + Debug + Display + FromStr + Send + Sync + From<i64>,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from(value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QFieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("not a polynomial: residual denominator {residual}")]
    NotPolynomial { residual: String },
    #[error("exponent {0:?} lies outside the truncation caps")]
    OutsideCaps(Vec<i64>),
    #[error("factor term {0:?} would decrease a capped grading")]
    NonMonotoneFactor(Vec<i64>),
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("malformed coefficient string {0:?}")]
    Parse(String),
}
