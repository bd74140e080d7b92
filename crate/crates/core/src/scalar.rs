//! Coefficient rings accepted by [`Poly`](crate::poly::Poly).

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// An exact, ordered, signed coefficient ring.
///
/// Division is only used by exact polynomial division, which checks that
/// every quotient coefficient multiplies back to the dividend, so truncating
/// integer division is fine here.
pub trait Coeff:
    Num + Clone + PartialOrd + Neg<Output = Self> + Debug + Display + Send + Sync
{
    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.clone() + a.clone() * b.clone();
    }

    /// `self -= a * b`.
    fn sub_product(&mut self, a: &Self, b: &Self) {
        *self = self.clone() - a.clone() * b.clone();
    }
}

macro_rules! by_reference {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn add_product(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }
            fn sub_product(&mut self, a: &Self, b: &Self) {
                *self -= a * b;
            }
        }
    )*};
}

by_reference!(i32, i64, i128, BigInt, BigRational);

impl Coeff for Ratio<i64> {}
