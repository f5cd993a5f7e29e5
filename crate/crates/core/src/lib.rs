//! Exact character values of `GL_n(F_q)` on unipotent classes.
//!
//! Values are rational functions of `q` with rational coefficients. The
//! [`mnrule`] engine computes them by a Murnaghan–Nakayama style recursion
//! over colored partitions; [`fock`] computes the same numbers by expanding
//! vertex operators on a Fock space and serves as an independent check.
//!
//! ```
//! use chartab_core::{ColoredPattern, Engine, Partition};
//!
//! let label: ColoredPattern = r#"[{"d":1,"parts":[1]},{"d":1,"parts":[1]}]"#.parse().unwrap();
//! let engine = Engine::new();
//! let value = engine.char_value(&label, &Partition::from_parts([1, 1])).unwrap();
//! assert_eq!(value.to_string(), "q + 1");
//! ```

pub mod fock;
pub mod mnrule;
pub mod partitions;
pub mod qfield;

use num_rational::BigRational;

pub use fock::{oracle_char, Alphabet, FockVector};
pub use mnrule::{Engine, EngineStats, MemoKey, MnError};
pub use partitions::{ClassType, ColoredPattern, Composition, Partition, PatternEntry};
pub use qfield::{QFieldError, Scalar};

/// Coefficient field used throughout: arbitrary-precision rationals.
pub type Rational = BigRational;
/// Polynomial in `q` over [`Rational`].
pub type PolyQ = qfield::Poly<Rational>;
/// Rational function in `q` over [`Rational`]; the universal value type.
pub type RationalFunctionQ = qfield::RatFunc<Rational>;
/// Truncated multivariate series over [`RationalFunctionQ`].
pub type TruncatedMultiPoly = qfield::TruncatedMultiPoly<Rational>;
