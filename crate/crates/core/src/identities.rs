//! Each identity is returned as a pair of independently computed sides so
//! that a failure can be shown with both witnesses.
//!
//! Sums "over all k >= 0" are taken over a range that overshoots the support
//! and rely on out-of-range Gaussian polynomials being zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qkernel::{q_binomial as qb, q_binomial_at_one as cb};
use crate::{IntPoly, RatFun};

pub type Params = Vec<(&'static str, i64)>;

/// Both sides of one instance of an identity.
#[derive(Debug, Clone)]
pub struct IdentityCheck<T> {
    pub name: &'static str,
    pub params: Params,
    pub lhs: T,
    pub rhs: T,
    pub equal: bool,
}

impl<T: PartialEq> IdentityCheck<T> {
    pub fn new(name: &'static str, params: Params, lhs: T, rhs: T) -> Self {
        let equal = lhs == rhs;
        IdentityCheck {
            name,
            params,
            lhs,
            rhs,
            equal,
        }
    }
}

pub type PolyIdentity = IdentityCheck<IntPoly>;
pub type IntIdentity = IdentityCheck<BigInt>;
pub type RatIdentity = IdentityCheck<RatFun>;

/// A polynomial claimed to have non-negative coefficients.
#[derive(Debug, Clone)]
pub struct NonnegCheck {
    pub name: &'static str,
    pub params: Params,
    pub poly: IntPoly,
    pub first_negative: Option<usize>,
}

impl NonnegCheck {
    pub fn new(name: &'static str, params: Params, poly: IntPoly) -> Self {
        let first_negative = poly.first_negative();
        NonnegCheck {
            name,
            params,
            poly,
            first_negative,
        }
    }

    pub fn holds(&self) -> bool {
        self.first_negative.is_none()
    }
}

/// `q^e * p`. A nonzero `p` with `e < 0` would be a Laurent term, which none
/// of the sums here can produce inside their support.
fn q_times(e: i64, p: IntPoly) -> IntPoly {
    if p.is_zero() {
        return p;
    }
    assert!(e >= 0, "negative power q^{e} on a nonzero term {p}");
    p.shift(e as usize)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParams(msg()))
    }
}

/// `sum_j [X, Z-j] [Y, j] q^{j(X-Z+j)} = [X+Y, Z]`.
pub fn vandermonde_form_j(x: i64, y: i64, z: i64) -> PolyIdentity {
    let lhs = (0..=y.max(0))
        .map(|j| q_times(j * (x - z + j), qb(x, z - j) * qb(y, j)))
        .sum();
    IdentityCheck::new(
        "vandermonde-j",
        vec![("X", x), ("Y", y), ("Z", z)],
        lhs,
        qb(x + y, z),
    )
}

/// `sum_k q^{(Z-k)(X-k)} [X, k] [Y, Z-k] = [X+Y, Z]`.
pub fn vandermonde_form_k(x: i64, y: i64, z: i64) -> PolyIdentity {
    let lhs = (0..=x.max(0))
        .map(|k| q_times((z - k) * (x - k), qb(x, k) * qb(y, z - k)))
        .sum();
    IdentityCheck::new(
        "vandermonde-k",
        vec![("X", x), ("Y", y), ("Z", z)],
        lhs,
        qb(x + y, z),
    )
}

fn square_weighted_sum(m: i64, n: i64) -> IntPoly {
    (0..=m).map(|k| q_times(k * k, qb(m, k) * qb(n, k))).sum()
}

/// Both sides of a Bergeron instance expanded as
/// `[b+c, b] = sum_{k=0}^{b} [b,k][c,k] q^{k^2}` (and likewise for `a, d`).
pub fn remark1_expansion(a: i64, b: i64, c: i64, d: i64) -> Result<(PolyIdentity, PolyIdentity)> {
    if a.min(b).min(c).min(d) < 0 {
        return Err(Error::BadQuadruple {
            a,
            b,
            c,
            d,
            reason: "entries must be non-negative",
        });
    }
    if a * d != b * c {
        return Err(Error::BadQuadruple {
            a,
            b,
            c,
            d,
            reason: "ad != bc",
        });
    }
    let params = vec![("a", a), ("b", b), ("c", c), ("d", d)];
    let big = IdentityCheck::new(
        "remark1-bc",
        params.clone(),
        qb(b + c, b),
        square_weighted_sum(b, c),
    );
    let small = IdentityCheck::new(
        "remark1-ad",
        params,
        qb(a + d, a),
        square_weighted_sum(a, d),
    );
    Ok((big, small))
}

/// One entry `c_k(i)` of the coefficient triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CkCoefficient {
    pub i: i64,
    pub k: i64,
    pub value: BigInt,
}

/// `(i + 3k) / (i + k) * C(i+k, 2k)`, with the division checked to be exact.
pub fn weighted_central(i: i64, k: i64) -> Result<BigInt> {
    let top = BigInt::from(i + 3 * k) * cb(i + k, 2 * k);
    if top.is_zero() {
        return Ok(top);
    }
    let den = BigInt::from(i + k);
    let (q, r) = top.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::FormMismatch {
            i,
            k,
            detail: format!("(i+3k) C(i+k,2k) = {top} is not divisible by i+k = {den}"),
        });
    }
    Ok(q)
}

/// `c_k(i)` computed three ways, which must agree:
/// `C(i+k-1,2k) + 2C(i+k-1,2k-1) - C(i,k)`,
/// `(i+3k)/(i+k) C(i+k,2k) - C(i,k)` and
/// `C(i+k,2k) + C(i+k-1,2k-1) - C(i,k)`.
pub fn ck_coefficient(i: i64, k: i64) -> Result<CkCoefficient> {
    ensure(i >= 1 && k >= 0, || {
        format!("c_k(i) needs i >= 1, k >= 0 (i = {i}, k = {k})")
    })?;
    let two = BigInt::from(2);
    let form_a = cb(i + k - 1, 2 * k) + &two * cb(i + k - 1, 2 * k - 1) - cb(i, k);
    let form_b = weighted_central(i, k)? - cb(i, k);
    let form_c = cb(i + k, 2 * k) + cb(i + k - 1, 2 * k - 1) - cb(i, k);
    if form_a != form_b || form_b != form_c {
        return Err(Error::FormMismatch {
            i,
            k,
            detail: format!("forms give {form_a}, {form_b}, {form_c}"),
        });
    }
    Ok(CkCoefficient {
        i,
        k,
        value: form_a,
    })
}

/// Rows `i = 1..=max_i`, entries `k = 1..=i`.
pub fn ck_table(max_i: i64) -> Result<Vec<Vec<BigInt>>> {
    ensure(max_i >= 1, || {
        format!("max_i must be positive, got {max_i}")
    })?;
    (1..=max_i)
        .map(|i| {
            (1..=i)
                .map(|k| ck_coefficient(i, k).map(|c| c.value))
                .collect()
        })
        .collect()
}

/// The two routes to `c_k(i) >= 0`: the telescoped form
/// `C(i+k-1,2k-1) = C(i,k) + sum_{r=1}^{k-1} C(i+r-1,k+r)`, and
/// `c_k(i) = C(i+k,2k) + sum_{r=0}^{k-2} C(i+r,k+1+r)`.
pub fn lemma3_check(i: i64, k: i64) -> Result<(IntIdentity, IntIdentity)> {
    ensure(i >= 1 && k >= 1, || {
        format!("lemma3 needs i, k >= 1 (i = {i}, k = {k})")
    })?;
    let params = vec![("i", i), ("k", k)];
    let tele_rhs = cb(i, k) + (1..k).map(|r| cb(i + r - 1, k + r)).sum::<BigInt>();
    let telescoped = IdentityCheck::new(
        "lemma3-telescope",
        params.clone(),
        cb(i + k - 1, 2 * k - 1),
        tele_rhs,
    );
    let positive_rhs = cb(i + k, 2 * k) + (0..=k - 2).map(|r| cb(i + r, k + 1 + r)).sum::<BigInt>();
    let positive = IdentityCheck::new(
        "lemma3-positive-form",
        params,
        ck_coefficient(i, k)?.value,
        positive_rhs,
    );
    Ok((telescoped, positive))
}

/// `C(3a+1, a+1) - C(3a+2, a) = C(3a+1, a-1)`.
pub fn i1_special_case(a: i64) -> Result<IntIdentity> {
    ensure(a >= 1, || format!("a must be positive, got {a}"))?;
    Ok(IdentityCheck::new(
        "i1-special",
        vec![("a", a)],
        cb(3 * a + 1, a + 1) - cb(3 * a + 2, a),
        cb(3 * a + 1, a - 1),
    ))
}

fn ensure_ai(a: i64, i: i64) -> Result<()> {
    ensure(a >= 1 && i >= 1, || {
        format!("a, i must be positive (a = {a}, i = {i})")
    })
}

/// `C(3a+2i, a) = sum_k C(i,k) C(3a+i, a-k)`.
pub fn lemma1_check(a: i64, i: i64) -> Result<IntIdentity> {
    ensure_ai(a, i)?;
    let rhs = (0..=i).map(|k| cb(i, k) * cb(3 * a + i, a - k)).sum();
    Ok(IdentityCheck::new(
        "lemma1",
        vec![("a", a), ("i", i)],
        cb(3 * a + 2 * i, a),
        rhs,
    ))
}

/// `C(3a+i, a+i)` against both displayed right-hand sides: the
/// `(i+3k)/(i+k)` form and the bracket form
/// `sum_k [C(i+k,2k) + C(i+k-1,2k-1)] C(3a+i, a-k)`.
pub fn lemma2_check(a: i64, i: i64) -> Result<(IntIdentity, IntIdentity)> {
    ensure_ai(a, i)?;
    let params = vec![("a", a), ("i", i)];
    let lhs = cb(3 * a + i, a + i);
    let mut fraction = BigInt::zero();
    for k in 0..=a {
        fraction += weighted_central(i, k)? * cb(3 * a + i, a - k);
    }
    let bracket = (0..=a)
        .map(|k| (cb(i + k, 2 * k) + cb(i + k - 1, 2 * k - 1)) * cb(3 * a + i, a - k))
        .sum();
    Ok((
        IdentityCheck::new("lemma2", params.clone(), lhs.clone(), fraction),
        IdentityCheck::new("lemma2-bracket", params, lhs, bracket),
    ))
}

/// `C(3a+i, a+i) - C(3a+2i, a) = sum_{k>=1} c_k(i) C(3a+i, a-k)`.
pub fn theorem2_check(a: i64, i: i64) -> Result<IntIdentity> {
    ensure_ai(a, i)?;
    let mut rhs = BigInt::zero();
    for k in 1..=a {
        rhs += ck_coefficient(i, k)?.value * cb(3 * a + i, a - k);
    }
    Ok(IdentityCheck::new(
        "theorem2",
        vec![("a", a), ("i", i)],
        cb(3 * a + i, a + i) - cb(3 * a + 2 * i, a),
        rhs,
    ))
}

/// `[3a+2i, a] = sum_k q^{(a-k)(i-k)} [i,k] [3a+i, a-k]`.
pub fn lemma4_check(a: i64, i: i64) -> Result<PolyIdentity> {
    ensure_ai(a, i)?;
    Ok(IdentityCheck::new(
        "lemma4",
        vec![("a", a), ("i", i)],
        qb(3 * a + 2 * i, a),
        lemma4_rhs(a, i),
    ))
}

fn lemma4_rhs(a: i64, i: i64) -> IntPoly {
    (0..=a)
        .map(|k| q_times((a - k) * (i - k), qb(i, k) * qb(3 * a + i, a - k)))
        .sum()
}

/// `[i+k, 2k] + q^{a+i} [i+k-1, 2k-1]`.
fn lemma5_bracket(a: i64, i: i64, k: i64) -> IntPoly {
    qb(i + k, 2 * k) + q_times(a + i, qb(i + k - 1, 2 * k - 1))
}

/// `[3a+i, a+i] = sum_k q^{(a-k)(i-k)} ([i+k,2k] + q^{a+i}[i+k-1,2k-1]) [3a+i, a-k]`.
pub fn lemma5_check(a: i64, i: i64) -> Result<PolyIdentity> {
    ensure_ai(a, i)?;
    let rhs = (0..=a)
        .map(|k| {
            q_times(
                (a - k) * (i - k),
                lemma5_bracket(a, i, k) * qb(3 * a + i, a - k),
            )
        })
        .sum();
    Ok(IdentityCheck::new(
        "lemma5",
        vec![("a", a), ("i", i)],
        qb(3 * a + i, a + i),
        rhs,
    ))
}

/// `[i+k, 2k] + q^{a+i} [i+k-1, 2k-1] - [i, k]`, the summand bracket of the
/// positive expansion of `[3a+i, a+i] - [3a+2i, a]`.
pub fn theorem3_bracket_poly(a: i64, i: i64, k: i64) -> IntPoly {
    lemma5_bracket(a, i, k) - qb(i, k)
}

pub fn theorem3_bracket(a: i64, i: i64, k: i64) -> Result<NonnegCheck> {
    ensure(a >= 1 && i >= 1 && k >= 1, || {
        format!("a, i, k must be positive (a = {a}, i = {i}, k = {k})")
    })?;
    Ok(NonnegCheck::new(
        "theorem3-bracket",
        vec![("a", a), ("i", i), ("k", k)],
        theorem3_bracket_poly(a, i, k),
    ))
}

/// The bracket with complemented lower indices,
/// `[i+k, i-k] - [i, i-k] + q^{a+i} [i+k-1, 2k-1]`, equals the original.
pub fn theorem3_bracket_complement(a: i64, i: i64, k: i64) -> PolyIdentity {
    let complemented = qb(i + k, i - k) - qb(i, i - k) + q_times(a + i, qb(i + k - 1, 2 * k - 1));
    IdentityCheck::new(
        "theorem3-complement",
        vec![("a", a), ("i", i), ("k", k)],
        theorem3_bracket_poly(a, i, k),
        complemented,
    )
}

/// `P(q) = [3a+i, a+i] - [3a+2i, a]`.
pub fn theorem3_difference(a: i64, i: i64) -> IntPoly {
    qb(3 * a + i, a + i) - qb(3 * a + 2 * i, a)
}

/// `P(q) = sum_{k>=1} q^{(a-k)(i-k)} bracket_k [3a+i, a-k]`.
pub fn theorem3_check(a: i64, i: i64) -> Result<PolyIdentity> {
    ensure_ai(a, i)?;
    let rhs = (1..=a.min(i))
        .map(|k| {
            q_times(
                (a - k) * (i - k),
                theorem3_bracket_poly(a, i, k) * qb(3 * a + i, a - k),
            )
        })
        .sum();
    Ok(IdentityCheck::new(
        "theorem3",
        vec![("a", a), ("i", i)],
        theorem3_difference(a, i),
        rhs,
    ))
}

/// Non-negativity of `P(q)` itself.
pub fn theorem3_positivity(a: i64, i: i64) -> Result<NonnegCheck> {
    ensure_ai(a, i)?;
    Ok(NonnegCheck::new(
        "theorem3",
        vec![("a", a), ("i", i)],
        theorem3_difference(a, i),
    ))
}

/// `[i+k, 2k] = [i, k] + sum_{r=1}^{k} q^{k+r} [i+r-1, k+r]`.
pub fn lemma6_check(i: i64, k: i64) -> Result<PolyIdentity> {
    ensure(i >= 1 && k >= 1, || {
        format!("lemma6 needs i, k >= 1 (i = {i}, k = {k})")
    })?;
    Ok(IdentityCheck::new(
        "lemma6",
        vec![("i", i), ("k", k)],
        qb(i + k, 2 * k),
        qb(i, k) + lemma6_tail(i, k),
    ))
}

/// `sum_{r=1}^{k} q^{k+r} [i+r-1, k+r]`.
pub fn lemma6_tail(i: i64, k: i64) -> IntPoly {
    (1..=k).map(|r| q_times(k + r, qb(i + r - 1, k + r))).sum()
}

/// `[i+k, i-k] - [i, i-k] >= 0`.
pub fn lemma7_check(i: i64, k: i64) -> Result<NonnegCheck> {
    ensure(0 <= k && k <= i, || {
        format!("lemma7 needs 0 <= k <= i (i = {i}, k = {k})")
    })?;
    Ok(NonnegCheck::new(
        "lemma7",
        vec![("i", i), ("k", k)],
        qb(i + k, i - k) - qb(i, i - k),
    ))
}

fn rf(p: IntPoly) -> RatFun {
    p.into()
}

fn one_minus(m: i64) -> IntPoly {
    IntPoly::one_minus_q_pow(m as usize)
}

/// Summands `i = 1..=k` of the partial-fraction expansion of
/// `1/[a+k, k] - 1/[b+k, k]`:
/// `q^{a+i} (1-q^{b-a}) / (1-q^{b+i}) * prod_{j=i}^{k} (1-q^j)/(1-q^{a+j})
///  * prod_{j=1}^{i-1} (1-q^j)/(1-q^{b+j})`.
pub fn lemma8_terms(a: i64, b: i64, k: i64) -> Result<Vec<RatFun>> {
    ensure(0 <= k && k <= a && a < b, || {
        format!("lemma8 needs 0 <= k <= a < b (a = {a}, b = {b}, k = {k})")
    })?;
    let terms = (1..=k)
        .map(|i| {
            let mut num = one_minus(b - a).shift((a + i) as usize);
            let mut den = one_minus(b + i);
            for j in i..=k {
                num = &num * &one_minus(j);
                den = &den * &one_minus(a + j);
            }
            for j in 1..i {
                num = &num * &one_minus(j);
                den = &den * &one_minus(b + j);
            }
            RatFun::new(num, den)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(terms)
}

/// `1/[a+k, k] - 1/[b+k, k]` against the sum of [`lemma8_terms`].
pub fn lemma8_check(a: i64, b: i64, k: i64) -> Result<RatIdentity> {
    let rhs = lemma8_terms(a, b, k)?.into_iter().sum();
    let lhs = &rf(qb(a + k, k)).recip()? - &rf(qb(b + k, k)).recip()?;
    Ok(IdentityCheck::new(
        "lemma8",
        vec![("a", a), ("b", b), ("k", k)],
        lhs,
        rhs,
    ))
}

/// `sum_{t=0}^{m-1} q^{t k}`, i.e. `(1 - q^{mk}) / (1 - q^k)`; zero when `m = 0`.
pub fn geometric(m: i64, k: i64) -> IntPoly {
    (0..m.max(0))
        .map(|t| IntPoly::q_pow((t * k) as usize))
        .sum()
}

/// Outcome of the `[n, k] - [n, k-1] >= 0` check and its decomposition
/// `q^k U geom + q^{(alpha-1)k} U (1-q^{d+1})/(1-q^k)` with
/// `U = [n, k-1]`, `n = alpha k + d`, `0 <= d < k`.
#[derive(Debug, Clone)]
pub struct Lemma9Check {
    pub n: i64,
    pub k: i64,
    pub alpha: i64,
    pub d: i64,
    pub difference: IntPoly,
    pub decomposition: IntPoly,
    pub first_negative: Option<usize>,
    pub u_unimodal: bool,
    pub u_symmetric: bool,
}

impl Lemma9Check {
    pub fn decomposition_ok(&self) -> bool {
        self.difference == self.decomposition
    }

    pub fn holds(&self) -> bool {
        self.first_negative.is_none()
            && self.decomposition_ok()
            && self.u_unimodal
            && self.u_symmetric
    }
}

/// Fails with [`Error::NotDivisible`] if `U (1 - q^{d+1})` is not a
/// multiple of `1 - q^k`.
pub fn lemma9_check(n: i64, k: i64) -> Result<Lemma9Check> {
    ensure(k >= 1 && 2 * k <= n, || {
        format!("lemma9 needs 1 <= k, 2k <= n (n = {n}, k = {k})")
    })?;
    let (alpha, d) = n.div_rem(&k);
    let u = qb(n, k - 1);
    let difference = qb(n, k) - &u;
    let first = (&u * &geometric(alpha - 2, k)).shift(k as usize);
    let second = (&u * &one_minus(d + 1))
        .exact_div(&one_minus(k))?
        .shift(((alpha - 1) * k) as usize);
    let first_negative = difference.first_negative();
    Ok(Lemma9Check {
        n,
        k,
        alpha,
        d,
        decomposition: first + second,
        first_negative,
        difference,
        u_unimodal: u.is_unimodal(),
        u_symmetric: u.is_symmetric(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn vandermonde_examples() {
        let c = vandermonde_form_j(0, 0, 0);
        assert!(c.equal);
        assert_eq!(c.lhs, IntPoly::one());
        let c = vandermonde_form_j(1, 1, 1);
        assert_eq!(c.lhs, p(&[1, 1]));
        assert!(c.equal);
        assert!(vandermonde_form_j(3, 4, 2).equal);
        assert!(vandermonde_form_k(0, 0, 0).equal);
        assert!(vandermonde_form_k(1, 4, 1).equal);
        assert!(vandermonde_form_k(2, 3, 2).equal);
        // Z beyond X + Y: both sides vanish
        assert!(vandermonde_form_k(2, 1, 5).rhs.is_zero());
        assert!(vandermonde_form_j(2, 1, 5).equal);
    }

    #[test]
    fn remark1_examples() {
        let (x, y) = remark1_expansion(1, 1, 1, 1).unwrap();
        assert_eq!(x.rhs, p(&[1, 1]));
        assert!(x.equal && y.equal);
        let (x, y) = remark1_expansion(1, 2, 2, 4).unwrap();
        assert!(x.equal && y.equal);
        let (x, y) = remark1_expansion(2, 3, 6, 9).unwrap();
        assert!(x.equal && y.equal);
        assert!(matches!(
            remark1_expansion(1, 2, 3, 4),
            Err(Error::BadQuadruple { .. })
        ));
    }

    #[test]
    fn ck_examples() {
        assert_eq!(ck_coefficient(1, 1).unwrap().value, int(1));
        assert_eq!(ck_coefficient(4, 2).unwrap().value, int(19));
        assert_eq!(ck_coefficient(4, 3).unwrap().value, int(9));
        for i in 1..=8 {
            assert_eq!(ck_coefficient(i, 0).unwrap().value, int(0));
        }
        assert!(ck_coefficient(0, 1).is_err());
        let t = ck_table(2).unwrap();
        assert_eq!(t, vec![vec![int(1)], vec![int(3), int(1)]]);
        assert!(ck_table(0).is_err());
    }

    #[test]
    fn section_two_examples() {
        let c = i1_special_case(1).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(1), int(1)));
        let c = i1_special_case(2).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(7), int(7)));
        assert!(i1_special_case(20).unwrap().equal);

        let c = lemma1_check(1, 1).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(5), int(5)));
        assert!(lemma1_check(3, 2).unwrap().equal);
        assert!(lemma1_check(1, 5).unwrap().equal);

        let (f, b) = lemma2_check(1, 1).unwrap();
        assert_eq!((f.lhs.clone(), f.rhs.clone()), (int(6), int(6)));
        assert!(b.equal);
        for (a, i) in [(4, 3), (2, 6)] {
            let (f, b) = lemma2_check(a, i).unwrap();
            assert!(f.equal && b.equal);
        }

        let c = theorem2_check(2, 1).unwrap();
        assert_eq!(c.lhs, int(7));
        assert!(c.equal);
        assert!(theorem2_check(3, 3).unwrap().equal);
        assert!(theorem2_check(1, 8).unwrap().equal);
    }

    #[test]
    fn section_three_examples() {
        let c = lemma4_check(1, 1).unwrap();
        assert_eq!(c.lhs, p(&[1, 1, 1, 1, 1]));
        assert!(c.equal);
        assert!(lemma4_check(2, 3).unwrap().equal);
        assert!(lemma4_check(5, 2).unwrap().equal);

        let c = lemma5_check(1, 1).unwrap();
        assert_eq!(c.lhs, p(&[1, 1, 2, 1, 1]));
        assert!(c.equal);
        assert!(lemma5_check(3, 2).unwrap().equal);
        assert!(lemma5_check(2, 4).unwrap().equal);

        let c = lemma6_check(1, 1).unwrap();
        assert_eq!(c.rhs, IntPoly::one());
        assert!(c.equal);
        assert!(lemma6_check(4, 2).unwrap().equal);
        assert!(lemma6_check(8, 5).unwrap().equal);

        assert!(lemma7_check(5, 0).unwrap().poly.is_zero());
        let c = lemma7_check(3, 1).unwrap();
        assert_eq!(c.poly, p(&[0, 0, 1, 1, 1]));
        assert!(c.holds());
        assert!(lemma7_check(8, 4).unwrap().holds());
        assert!(lemma7_check(3, 4).is_err());

        let c = theorem3_bracket(1, 1, 1).unwrap();
        assert_eq!(c.poly, p(&[0, 0, 1]));
        assert!(c.holds());
        assert!(theorem3_bracket(2, 3, 2).unwrap().holds());
        assert!(theorem3_bracket(1, 5, 5).unwrap().holds());
        assert!(theorem3_bracket_complement(2, 3, 2).equal);
    }

    #[test]
    fn lemma8_examples() {
        // k = 0: empty sum against 1 - 1
        let c = lemma8_check(2, 3, 0).unwrap();
        assert!(c.equal && c.lhs.is_zero());
        for (a, b, k) in [(1, 2, 1), (2, 3, 2), (3, 5, 3)] {
            assert!(lemma8_check(a, b, k).unwrap().equal);
        }
        assert!(lemma8_check(3, 3, 1).is_err());
    }

    #[test]
    fn lemma9_examples() {
        let c = lemma9_check(2, 1).unwrap();
        assert_eq!(c.difference, p(&[0, 1]));
        assert!(c.holds());
        let c = lemma9_check(4, 2).unwrap();
        assert_eq!(c.difference, p(&[0, 0, 1, 0, 1]));
        assert_eq!((c.alpha, c.d), (2, 0));
        assert!(c.holds());
        let c = lemma9_check(30, 15).unwrap();
        assert!(c.holds());
        assert!(lemma9_check(3, 2).is_err());
    }

    #[test]
    fn geometric_edge_cases() {
        assert!(geometric(0, 3).is_zero());
        assert_eq!(geometric(3, 2), p(&[1, 0, 1, 0, 1]));
    }
}
