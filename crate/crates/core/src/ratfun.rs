//! Quotients of polynomials, never reduced to lowest terms.
//!
//! Equality is decided by cross-multiplication, so no polynomial gcd is
//! needed anywhere.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Coeff;

#[derive(Clone)]
pub struct RationalFunction<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> RationalFunction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        Poly::zero().into()
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    /// `q^e` for any integer `e`; negative powers go to the denominator.
    pub fn q_pow(e: i64) -> Self {
        let m = e.unsigned_abs() as usize;
        if e >= 0 {
            Poly::q_pow(m).into()
        } else {
            RationalFunction {
                num: Poly::one(),
                den: Poly::q_pow(m),
            }
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `x.num * y.den == y.num * x.den`.
    pub fn rat_equal(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Returns the polynomial this represents, if the division is exact.
    pub fn to_poly(&self) -> Result<Poly<C>> {
        self.num.exact_div(&self.den)
    }
}

impl RationalFunction<BigInt> {
    /// Value at `q = 1`, cancelling common factors of `(1 - q)` first.
    /// `None` if a pole remains.
    pub fn value_at_one(&self) -> Option<BigRational> {
        let root = Poly::<BigInt>::from_ints(&[1, -1]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while den.eval_at_one().is_zero() {
            if num.is_zero() {
                return Some(BigRational::zero());
            }
            if !num.eval_at_one().is_zero() {
                return None;
            }
            num = num.exact_div(&root).ok()?;
            den = den.exact_div(&root).ok()?;
        }
        Some(BigRational::new(num.eval_at_one(), den.eval_at_one()))
    }
}

impl<C: Coeff> From<Poly<C>> for RationalFunction<C> {
    fn from(num: Poly<C>) -> Self {
        RationalFunction {
            num,
            den: Poly::one(),
        }
    }
}

impl<C: Coeff> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.rat_equal(other)
    }
}

impl<C: Coeff> Eq for RationalFunction<C> {}

impl<C: Coeff> Add<&RationalFunction<C>> for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn add(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl<C: Coeff> Sub<&RationalFunction<C>> for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn sub(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul<&RationalFunction<C>> for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn mul(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

/// Panics when dividing by a zero rational function.
impl<C: Coeff> Div<&RationalFunction<C>> for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

impl<C: Coeff> Neg for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: RationalFunction<C>) -> RationalFunction<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&RationalFunction<C>> for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<C: Coeff> std::iter::Sum for RationalFunction<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl<C: Coeff> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<C: Coeff> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
