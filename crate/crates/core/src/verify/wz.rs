//! WZ pairs behind the two `sum_k F(i, k) = 1` identities.
//!
//! For `q = 1` the pair lives in exact rationals; for general `q` every term
//! is a [`RatFun`] with the concrete `a`, `i`, `k` substituted into the
//! exponents. In both cases the check is instance-level: the pair relation
//! `F(i+1,k) - F(i,k) = G(i,k+1) - G(i,k)` for each `k` in a range that
//! overshoots the support, the telescoped sum, and the `i = 1` anchor.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qkernel::{q_binomial as qb, q_binomial_at_one as cb};
use crate::{IntPoly, RatFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzVariant {
    /// Ordinary binomials.
    Q1,
    /// Gaussian polynomials.
    Q,
}

#[derive(Debug, Clone)]
pub struct WzCheck {
    pub variant: WzVariant,
    pub a: i64,
    pub i: i64,
    pub k_range: RangeInclusive<i64>,
    pub relation_ok: bool,
    /// `A(i,k) = B(i,k)` from the closed forms; `None` for the `q = 1` pair.
    pub certificate_ok: Option<bool>,
    pub telescope_ok: bool,
    /// Term-by-term match of the `i = 1` evaluation; `None` when `i != 1`.
    pub anchor_ok: Option<bool>,
    /// Human-readable description of each failed sub-check.
    pub failures: Vec<String>,
    /// Numerator of the first failing difference, if any.
    pub witness: Option<IntPoly>,
}

impl WzCheck {
    pub fn holds(&self) -> bool {
        self.relation_ok
            && self.certificate_ok.unwrap_or(true)
            && self.telescope_ok
            && self.anchor_ok.unwrap_or(true)
    }
}

/// `-1 ..= min(a, i) + 2`, one step past the support on each side.
pub fn default_k_range(a: i64, i: i64) -> RangeInclusive<i64> {
    -1..=a.min(i) + 2
}

fn check_params(a: i64, i: i64) -> Result<()> {
    if a < 1 || i < 1 {
        return Err(Error::BadParams(format!(
            "WZ checks need a, i >= 1 (a = {a}, i = {i})"
        )));
    }
    Ok(())
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `F(i,k) = (i+3k)/(i+k) C(i+k,2k) C(3a+i,a-k) / C(3a+i,a+i)`.
pub fn f_q1(a: i64, i: i64, k: i64) -> BigRational {
    let central = cb(i + k, 2 * k);
    let tail = cb(3 * a + i, a - k);
    if central.is_zero() || tail.is_zero() {
        return BigRational::zero();
    }
    ratio(BigInt::from(i + 3 * k), BigInt::from(i + k))
        * ratio(central * tail, cb(3 * a + i, a + i))
}

/// `G(i,k) = -C(i+k-1,2k-2) C(3a+i,a-k) / C(3a+i,a+i)`.
pub fn g_q1(a: i64, i: i64, k: i64) -> BigRational {
    -ratio(
        cb(i + k - 1, 2 * k - 2) * cb(3 * a + i, a - k),
        cb(3 * a + i, a + i),
    )
}

pub fn wz_check_q1(a: i64, i: i64, k_range: Option<RangeInclusive<i64>>) -> Result<WzCheck> {
    check_params(a, i)?;
    let k_range = k_range.unwrap_or_else(|| default_k_range(a, i));
    let mut failures = Vec::new();
    let mut witness = None;
    let mut note = |msg: String, diff: BigRational, witness: &mut Option<IntPoly>| {
        failures.push(msg);
        witness.get_or_insert_with(|| IntPoly::constant(diff.numer().clone()));
    };

    let mut relation_ok = true;
    for k in k_range.clone() {
        let lhs = f_q1(a, i + 1, k) - f_q1(a, i, k);
        let rhs = g_q1(a, i, k + 1) - g_q1(a, i, k);
        if lhs != rhs {
            relation_ok = false;
            note(
                format!("pair relation fails at k = {k}: {lhs} != {rhs}"),
                lhs - rhs,
                &mut witness,
            );
        }
    }

    let total: BigRational = k_range.clone().map(|k| f_q1(a, i, k)).sum();
    let telescope_ok = total.is_one();
    if !telescope_ok {
        note(
            format!("sum_k F(i,k) = {total}"),
            total - BigRational::one(),
            &mut witness,
        );
    }

    let anchor_ok = (i == 1).then(|| {
        let first = ratio(BigInt::from(a + 1), BigInt::from(2 * a + 1));
        let second = ratio(BigInt::from(a), BigInt::from(2 * a + 1));
        let ok = f_q1(a, 1, 0) == first && f_q1(a, 1, 1) == second && (&first + &second).is_one();
        if !ok {
            note(
                format!(
                    "i = 1 anchor: F(1,0) = {}, F(1,1) = {}",
                    f_q1(a, 1, 0),
                    f_q1(a, 1, 1)
                ),
                f_q1(a, 1, 0) - first,
                &mut witness,
            );
        }
        ok
    });

    Ok(WzCheck {
        variant: WzVariant::Q1,
        a,
        i,
        k_range,
        relation_ok,
        certificate_ok: None,
        telescope_ok,
        anchor_ok,
        failures,
        witness,
    })
}

fn one_minus(e: i64) -> IntPoly {
    assert!(e >= 0, "1 - q^{e} with negative exponent");
    IntPoly::one_minus_q_pow(e as usize)
}

/// `(1 - q^x) / (1 - q^y)`.
fn frac(x: i64, y: i64) -> RatFun {
    RatFun::new(one_minus(x), one_minus(y)).expect("1 - q^y with y > 0")
}

/// `F(i,k) = q^{(a-k)(i-k)} [1 + q^{a+i}(1-q^{2k})/(1-q^{i+k})]
///   [i+k,2k] [3a+i,a-k] / [3a+i,a+i]`.
pub fn f_q(a: i64, i: i64, k: i64) -> RatFun {
    let central = qb(i + k, 2 * k);
    let tail = qb(3 * a + i, a - k);
    if central.is_zero() || tail.is_zero() {
        return RatFun::zero();
    }
    let bracket = &RatFun::one() + &(&RatFun::q_pow(a + i) * &frac(2 * k, i + k));
    let body = RatFun::new(central * tail, qb(3 * a + i, a + i)).expect("nonzero binomial");
    &(&RatFun::q_pow((a - k) * (i - k)) * &bracket) * &body
}

/// `G(i,k) = -q^{(a-k+1)(i-k+1)} [i+k-1,2k-2] [3a+i,a-k] / [3a+i,a+i]`.
pub fn g_q(a: i64, i: i64, k: i64) -> RatFun {
    let inner = qb(i + k - 1, 2 * k - 2);
    let tail = qb(3 * a + i, a - k);
    if inner.is_zero() || tail.is_zero() {
        return RatFun::zero();
    }
    let body = RatFun::new(-(inner * tail), qb(3 * a + i, a + i)).expect("nonzero binomial");
    &RatFun::q_pow((a - k + 1) * (i - k + 1)) * &body
}

/// Closed form of `A(i,k) = F(i+1,k)/F(i,k) - 1`, valid for
/// `0 <= k <= min(a, i)`.
pub fn certificate_a(a: i64, i: i64, k: i64) -> RatFun {
    // 1 - q^{i+k+1} + q^{a+i+1} - q^{a+i+2k+1}
    let shifted = IntPoly::one() - IntPoly::q_pow((i + k + 1) as usize)
        + IntPoly::q_pow((a + i + 1) as usize)
        - IntPoly::q_pow((a + i + 2 * k + 1) as usize);
    let base = bracket_den(a, i, k);
    let num = (one_minus(i + k) * one_minus(a + i + 1) * shifted).shift((a - k) as usize);
    let den = one_minus(i - k + 1) * one_minus(2 * a + i + k + 1) * base;
    &RatFun::new(num, den).expect("nonzero denominator inside the support") - &RatFun::one()
}

/// `1 - q^{i+k} + q^{a+i} - q^{a+i+2k}`.
fn bracket_den(a: i64, i: i64, k: i64) -> IntPoly {
    IntPoly::one() - IntPoly::q_pow((i + k) as usize) + IntPoly::q_pow((a + i) as usize)
        - IntPoly::q_pow((a + i + 2 * k) as usize)
}

/// Closed form of `B(i,k) = (G(i,k+1) - G(i,k)) / F(i,k)`, valid for
/// `0 <= k <= min(a, i)`.
pub fn certificate_b(a: i64, i: i64, k: i64) -> RatFun {
    let first = -&frac(a - k, 2 * a + i + k + 1);
    // at k = 0 the factor 1 - q^{2k} vanishes and 1 - q^{2k-1} is not a polynomial
    let second = if k == 0 {
        RatFun::zero()
    } else {
        RatFun::new(
            (one_minus(2 * k) * one_minus(2 * k - 1)).shift((a + i - 2 * k + 1) as usize),
            one_minus(i + k) * one_minus(i - k + 1),
        )
        .expect("nonzero denominator inside the support")
    };
    let factor = RatFun::new(one_minus(i + k), bracket_den(a, i, k)).expect("nonzero");
    &(&first + &second) * &factor
}

fn numerator_of_difference(x: &RatFun, y: &RatFun) -> IntPoly {
    x.num() * y.den() - y.num() * x.den()
}

pub fn wz_check_q(a: i64, i: i64, k_range: Option<RangeInclusive<i64>>) -> Result<WzCheck> {
    check_params(a, i)?;
    let k_range = k_range.unwrap_or_else(|| default_k_range(a, i));
    let mut failures = Vec::new();
    let mut witness: Option<IntPoly> = None;
    let mut record = |msg: String, x: &RatFun, y: &RatFun| {
        failures.push(msg);
        witness.get_or_insert_with(|| numerator_of_difference(x, y));
    };

    let f: Vec<(i64, RatFun, RatFun)> = k_range
        .clone()
        .map(|k| (k, f_q(a, i, k), f_q(a, i + 1, k)))
        .collect();

    let mut relation_ok = true;
    for (k, f_here, f_next) in &f {
        let lhs = f_next - f_here;
        let rhs = &g_q(a, i, k + 1) - &g_q(a, i, *k);
        if lhs != rhs {
            relation_ok = false;
            record(format!("pair relation fails at k = {k}"), &lhs, &rhs);
        }
    }

    let mut certificate_ok = true;
    for (k, f_here, f_next) in f.iter().filter(|(k, _, _)| (0..=a.min(i)).contains(k)) {
        let k = *k;
        let closed_a = certificate_a(a, i, k);
        let closed_b = certificate_b(a, i, k);
        let ratio_a = &(f_next / f_here) - &RatFun::one();
        let ratio_b = &(&g_q(a, i, k + 1) - &g_q(a, i, k)) / f_here;
        for (label, x, y) in [
            ("A != B", &closed_a, &closed_b),
            ("A closed form != F(i+1,k)/F(i,k) - 1", &closed_a, &ratio_a),
            (
                "B closed form != (G(i,k+1) - G(i,k))/F(i,k)",
                &closed_b,
                &ratio_b,
            ),
        ] {
            if x != y {
                certificate_ok = false;
                record(format!("certificate at k = {k}: {label}"), x, y);
            }
        }
    }

    let total: RatFun = f.iter().map(|(_, fk, _)| fk.clone()).sum();
    let telescope_ok = total == RatFun::one();
    if !telescope_ok {
        record("sum_k F(i,k) != 1".to_string(), &total, &RatFun::one());
    }

    let anchor_ok = (i == 1).then(|| {
        // q^a (1 - q^{a+1}) / (1 - q^{2a+1}) and (1 - q^a) / (1 - q^{2a+1})
        let first = &RatFun::q_pow(a) * &frac(a + 1, 2 * a + 1);
        let second = frac(a, 2 * a + 1);
        let f0 = f_q(a, 1, 0);
        let f1 = f_q(a, 1, 1);
        let ok = f0 == first && f1 == second && &first + &second == RatFun::one();
        if !ok {
            record(
                "i = 1 anchor mismatch".to_string(),
                &(&f0 + &f1),
                &(&first + &second),
            );
        }
        ok
    });

    Ok(WzCheck {
        variant: WzVariant::Q,
        a,
        i,
        k_range,
        relation_ok,
        certificate_ok: Some(certificate_ok),
        telescope_ok,
        anchor_ok,
        failures,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_anchor_and_range() {
        for a in 1..=5 {
            let c = wz_check_q1(a, 1, None).unwrap();
            assert_eq!(c.anchor_ok, Some(true));
            assert!(c.holds(), "{:?}", c.failures);
        }
        let c = wz_check_q1(2, 3, Some(0..=4)).unwrap();
        assert!(c.relation_ok && c.telescope_ok);
        assert!(wz_check_q1(0, 1, None).is_err());
    }

    #[test]
    fn q1_terms_vanish_outside_support() {
        let (a, i) = (2, 3);
        for k in [-3, -1, 3, 7] {
            assert!(f_q1(a, i, k).is_zero());
        }
        assert!(g_q1(a, i, 0).is_zero());
        assert!(g_q1(a, i, a + 1).is_zero());
    }

    #[test]
    fn q_examples() {
        let c = wz_check_q(1, 2, Some(1..=1)).unwrap();
        assert_eq!(c.certificate_ok, Some(true));
        let c = wz_check_q(3, 2, Some(0..=0)).unwrap();
        assert_eq!(c.certificate_ok, Some(true));
        let c = wz_check_q(2, 1, None).unwrap();
        assert_eq!(c.anchor_ok, Some(true));
        assert!(c.holds(), "{:?}", c.failures);
    }

    #[test]
    fn certificate_a_matches_ratio_at_sample() {
        let (a, i, k) = (2, 2, 1);
        let direct = &(&f_q(a, i + 1, k) / &f_q(a, i, k)) - &RatFun::one();
        assert_eq!(certificate_a(a, i, k), direct);
        assert_eq!(certificate_a(a, i, k), certificate_b(a, i, k));
    }

    #[test]
    fn q_case_specializes_to_q1() {
        for a in 1..=4 {
            for i in 1..=4 {
                for k in -1..=a.min(i) + 1 {
                    assert_eq!(
                        f_q(a, i, k).value_at_one(),
                        Some(f_q1(a, i, k)),
                        "F a={a} i={i} k={k}"
                    );
                    assert_eq!(
                        g_q(a, i, k).value_at_one(),
                        Some(g_q1(a, i, k)),
                        "G a={a} i={i} k={k}"
                    );
                }
            }
        }
    }
}
