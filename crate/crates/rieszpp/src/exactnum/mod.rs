//! Exact rational scalars, univariate polynomial arithmetic, and real root
//! isolation. Everything downstream (lattice operations, ideal membership,
//! refutation certificates) reduces to the primitives in this module, and
//! nothing here ever touches floating point.

mod poly;
mod roots;

pub use poly::Polynomial;
pub use roots::{isolate_roots, sign_on_interval, IntervalSign, RootInterval};

pub(crate) use roots::RootCounter;

use num_bigint::BigInt;

/// The only scalar type in the core: arbitrary-precision rationals, always
/// reduced, with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An integer as a rational.
pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}
