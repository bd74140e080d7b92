//! Dense univariate polynomials in `q` with exact coefficients.
//!
//! Index `j` of the coefficient vector holds the coefficient of `q^j`. The
//! vector never carries trailing zeros, so the zero polynomial is the empty
//! vector and its degree is `None`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from low-to-high coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        trim(&mut coeffs);
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^m`.
    pub fn monomial(c: C, m: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); m + 1];
        coeffs[m] = c;
        Poly { coeffs }
    }

    /// `q^m`.
    pub fn q_pow(m: usize) -> Self {
        Self::monomial(C::one(), m)
    }

    /// `1 - q^m`; zero when `m == 0`.
    pub fn one_minus_q_pow(m: usize) -> Self {
        Self::one() - Self::q_pow(m)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> C {
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Multiplies by `q^m`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + m);
        coeffs.resize(m, C::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Returns `t` with `self = t * divisor`, or [`Error::NotDivisible`]
    /// when schoolbook long division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let dlen = divisor.coeffs.len();
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return Err(Error::NotDivisible {
                remainder: self.to_string(),
            });
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![C::zero(); qlen];
        for idx in (0..qlen).rev() {
            let top = &rem[idx + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let t = top.clone() / lead.clone();
            if t.clone() * lead.clone() != *top {
                return Err(Error::NotDivisible {
                    remainder: Poly::new(rem[..idx + dlen].to_vec()).to_string(),
                });
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[idx + j].sub_product(&t, dc);
                }
            }
            quot[idx] = t;
        }
        rem.truncate(dlen - 1);
        trim(&mut rem);
        if !rem.is_empty() {
            return Err(Error::NotDivisible {
                remainder: Poly { coeffs: rem }.to_string(),
            });
        }
        Ok(Poly::new(quot))
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Least exponent carrying a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c < C::zero())
    }

    /// `self >= 0` in the coefficientwise order.
    pub fn is_nonneg(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Palindromic about the stored degree; the zero polynomial counts.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Palindromic about a fixed ambient degree `d`: `coeff(j) == coeff(d - j)`
    /// for `0 <= j <= d`. False if the polynomial has terms above `d`.
    pub fn is_symmetric_about(&self, d: usize) -> bool {
        if self.coeffs.len() > d + 1 {
            return false;
        }
        (0..=d / 2).all(|j| self.coeff(j) == self.coeff(d - j))
    }

    /// Index of the first coefficient that strictly rises after an earlier
    /// strict fall.
    pub fn unimodality_violation(&self) -> Option<usize> {
        let mut fallen = false;
        for (j, w) in self.coeffs.windows(2).enumerate() {
            if w[1] < w[0] {
                fallen = true;
            } else if fallen && w[1] > w[0] {
                return Some(j + 1);
            }
        }
        None
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodality_violation().is_none()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff + FromPrimitive> Poly<C> {
    /// Convenience constructor from machine integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| C::from_i64(c).expect("coefficient ring holds every i64"))
                .collect(),
        )
    }
}

fn trim<C: Coeff>(coeffs: &mut Vec<C>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Schoolbook convolution. Kept separate so a faster kernel can replace it.
fn convolve<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j].add_product(x, y);
            }
        }
    }
    out
}

fn zip_with<C: Coeff>(a: &[C], b: &[C], f: impl Fn(C, C) -> C) -> Vec<C> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|j| {
            let x = a.get(j).cloned().unwrap_or_else(C::zero);
            let y = b.get(j).cloned().unwrap_or_else(C::zero);
            f(x, y)
        })
        .collect()
}

impl<C: Coeff> Add<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::new(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x + y))
    }
}

impl<C: Coeff> Sub<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::new(zip_with(&self.coeffs, &rhs.coeffs, |x, y| x - y))
    }
}

impl<C: Coeff> Mul<&Poly<C>> for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coeff> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (s, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *s = s.clone() + r.clone();
        }
        trim(&mut self.coeffs);
    }
}

impl<C: Coeff> AddAssign for Poly<C> {
    fn add_assign(&mut self, rhs: Poly<C>) {
        *self += &rhs;
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        *self += &(-rhs);
    }
}

impl<C: Coeff> Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a, C: Coeff> Sum<&'a Poly<C>> for Poly<C> {
    fn sum<I: Iterator<Item = &'a Poly<C>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coeff> From<C> for Poly<C> {
    fn from(c: C) -> Self {
        Poly::constant(c)
    }
}

/// Sparse rendering in ascending powers, e.g. `1 - q^2 + 3q^5`.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < C::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match j {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{j}")?,
                _ => write!(f, "{mag}q^{j}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Dense array of decimal strings, index = exponent.
impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| {
                C::from_str_radix(s, 10)
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let p = Poly::new(coeffs);
        if p.coeffs.len() != raw.len() {
            return Err(D::Error::custom("trailing zero coefficient"));
        }
        Ok(p)
    }
}
