//! Exact Gaussian polynomial (q-binomial) arithmetic with mechanical checks
//! of a family of q-binomial identities, WZ certificates and positivity
//! conjectures.
//!
//! Polynomial and rational-function arithmetic is generic over the
//! coefficient ring ([`Coeff`]); everything built on top of it works over
//! arbitrary-precision integers through the [`IntPoly`] and [`RatFun`]
//! aliases.

pub mod error;
pub mod identities;
pub mod poly;
pub mod qkernel;
pub mod ratfun;
pub mod report;
pub mod scalar;
pub mod selftest;
pub mod verify;

pub use error::{Error, Result};
pub use poly::Poly;
pub use qkernel::{q_binomial, q_binomial_at_one, QBinom};
pub use ratfun::RationalFunction;
pub use report::{CheckReport, Status, ToReport};
pub use scalar::Coeff;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Polynomial in `q` with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;

/// Polynomial in `q` with machine-integer coefficients.
pub type SmallPoly = Poly<i64>;

/// Polynomial in `q` with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;

/// Quotient of two [`IntPoly`] values, compared by cross-multiplication.
pub type RatFun = RationalFunction<BigInt>;
