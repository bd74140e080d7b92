use std::fmt;

use crate::error::{Error, Result};
use crate::identities::Params;
use crate::qkernel::q_binomial as qb;
use crate::{IntPoly, RatFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conjecture {
    /// `[b+c, b] >= [a+d, a]` for `0 < a <= b < c <= d`, `ad = bc`.
    C1,
    /// C1 plus unimodality of the difference.
    C2,
    /// `[b+beta a, b] >= [a+beta b, a]` for `0 < a < b`, `beta >= 1`.
    C3,
    /// `[a,k][a+b, b-k] >= [b,k][a+b, a-k]` for `0 <= k <= a < b`.
    C4,
}

impl Conjecture {
    pub fn number(self) -> u8 {
        match self {
            Conjecture::C1 => 1,
            Conjecture::C2 => 2,
            Conjecture::C3 => 3,
            Conjecture::C4 => 4,
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conjecture{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Quadruple {
    pub fn product(&self) -> i64 {
        self.a * self.d
    }

    /// `a = b` forces `c = d`, and the two binomials coincide.
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn validate(&self) -> Result<()> {
        let Quadruple { a, b, c, d } = *self;
        let bad = |reason| Err(Error::BadQuadruple { a, b, c, d, reason });
        if a <= 0 {
            return bad("a must be positive");
        }
        if !(a <= b && b < c && c <= d) {
            return bad("need a <= b < c <= d");
        }
        if a * d != b * c {
            return bad("ad != bc");
        }
        Ok(())
    }
}

/// One evaluated conjecture instance with its verdict flags.
#[derive(Debug, Clone)]
pub struct ConjectureInstance {
    pub which: Conjecture,
    pub params: Params,
    pub diff: IntPoly,
    /// Common degree of the two sides; symmetry is judged about this degree
    /// rather than the stored degree of `diff`.
    pub ambient_degree: usize,
    pub first_negative: Option<usize>,
    pub symmetric: bool,
    pub unimodality_violation: Option<usize>,
    pub degenerate: bool,
    /// C4 only: whether the product form and the reciprocal form agree.
    pub forms_agree: Option<bool>,
}

impl ConjectureInstance {
    fn new(
        which: Conjecture,
        params: Params,
        diff: IntPoly,
        ambient_degree: usize,
        degenerate: bool,
    ) -> Self {
        ConjectureInstance {
            which,
            params,
            first_negative: diff.first_negative(),
            symmetric: diff.is_symmetric_about(ambient_degree),
            unimodality_violation: diff.unimodality_violation(),
            diff,
            ambient_degree,
            degenerate,
            forms_agree: None,
        }
    }

    pub fn nonneg(&self) -> bool {
        self.first_negative.is_none()
    }

    pub fn unimodal(&self) -> bool {
        self.unimodality_violation.is_none()
    }

    /// Whether this instance is consistent with the conjecture it belongs to.
    pub fn passes(&self) -> bool {
        match self.which {
            Conjecture::C1 => self.nonneg() && self.symmetric,
            Conjecture::C2 => self.nonneg() && self.symmetric && self.unimodal(),
            Conjecture::C3 => self.nonneg(),
            Conjecture::C4 => self.nonneg() && self.forms_agree == Some(true),
        }
    }

    /// The exponent to point at when the instance fails.
    pub fn failing_index(&self) -> Option<usize> {
        self.first_negative.or(match self.which {
            Conjecture::C2 => self.unimodality_violation,
            _ => None,
        })
    }
}

/// `[b+c, b] - [a+d, a]`.
pub fn bergeron_diff(a: i64, b: i64, c: i64, d: i64) -> Result<IntPoly> {
    Quadruple { a, b, c, d }.validate()?;
    Ok(qb(b + c, b) - qb(a + d, a))
}

pub fn check_c1_c2(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    which: Conjecture,
) -> Result<ConjectureInstance> {
    if !matches!(which, Conjecture::C1 | Conjecture::C2) {
        return Err(Error::BadParams(format!(
            "{which} is not a quadruple conjecture"
        )));
    }
    let diff = bergeron_diff(a, b, c, d)?;
    Ok(ConjectureInstance::new(
        which,
        vec![("a", a), ("b", b), ("c", c), ("d", d)],
        diff,
        (a * d) as usize,
        a == b,
    ))
}

/// Every `0 < a <= b < c <= d` with `ad = bc = n`, lexicographically.
pub fn quadruples_with_product(n: i64) -> Vec<Quadruple> {
    let mut out = Vec::new();
    for a in (1..=n).filter(|a| n % a == 0) {
        let d = n / a;
        for b in (a..=n).filter(|b| n % b == 0) {
            let c = n / b;
            if b < c && c <= d {
                out.push(Quadruple { a, b, c, d });
            }
        }
    }
    out
}

/// All quadruples with `ad = bc <= max_n`, by increasing product and then
/// lexicographically.
pub fn enumerate_quadruples(max_n: i64) -> Vec<Quadruple> {
    (1..=max_n).flat_map(quadruples_with_product).collect()
}

/// The C1 quadruple `(a, b, beta a, beta b)` a C3 instance maps to, when it
/// satisfies `b < beta a`.
pub fn c3_induced_quadruple(a: i64, b: i64, beta: i64) -> Option<Quadruple> {
    let q = Quadruple {
        a,
        b,
        c: beta * a,
        d: beta * b,
    };
    q.validate().ok().map(|_| q)
}

/// `[b + beta a, b] - [a + beta b, a]`.
pub fn check_c3(a: i64, b: i64, beta: i64) -> Result<ConjectureInstance> {
    if !(0 < a && a < b && beta >= 1) {
        return Err(Error::BadParams(format!(
            "conjecture 3 needs 0 < a < b, beta >= 1 (a = {a}, b = {b}, beta = {beta})"
        )));
    }
    let diff = qb(b + beta * a, b) - qb(a + beta * b, a);
    Ok(ConjectureInstance::new(
        Conjecture::C3,
        vec![("beta", beta), ("a", a), ("b", b)],
        diff,
        (beta * a * b) as usize,
        beta == 1,
    ))
}

/// `[a,k][a+b, b-k] - [b,k][a+b, a-k]`, cross-checked against
/// `[a,k][b,k][a+b,b] (1/[a+k,k] - 1/[b+k,k])`.
pub fn check_c4(a: i64, b: i64, k: i64) -> Result<ConjectureInstance> {
    if !(0 <= k && k <= a && a < b) {
        return Err(Error::BadParams(format!(
            "conjecture 4 needs 0 <= k <= a < b (a = {a}, b = {b}, k = {k})"
        )));
    }
    let left = qb(a, k) * qb(a + b, b - k);
    let right = qb(b, k) * qb(a + b, a - k);
    let diff = &left - &right;
    let ambient = [&left, &right]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);

    let scale: RatFun = (qb(a, k) * qb(b, k) * qb(a + b, b)).into();
    let reciprocals = &RatFun::from(qb(a + k, k)).recip()? - &RatFun::from(qb(b + k, k)).recip()?;
    let second_form = &scale * &reciprocals;

    let mut inst = ConjectureInstance::new(
        Conjecture::C4,
        vec![("a", a), ("b", b), ("k", k)],
        diff.clone(),
        ambient,
        k == 0,
    );
    inst.forms_agree = Some(RatFun::from(diff).rat_equal(&second_form));
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c)
    }

    /// Independent enumeration over a box.
    fn quadruple_oracle(max_n: i64) -> Vec<Quadruple> {
        let mut out = Vec::new();
        for a in 1..=max_n {
            for b in 1..=max_n {
                for c in 1..=max_n {
                    for d in 1..=max_n {
                        if a <= b && b < c && c <= d && a * d == b * c && a * d <= max_n {
                            out.push(Quadruple { a, b, c, d });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|q| (q.product(), *q));
        out
    }

    #[test]
    fn enumeration_matches_oracle() {
        assert!(enumerate_quadruples(1).is_empty());
        let four = enumerate_quadruples(4);
        assert!(four.contains(&Quadruple {
            a: 1,
            b: 1,
            c: 2,
            d: 2
        }));
        // b < c excludes (1, 2, 2, 4)
        assert!(!four.contains(&Quadruple {
            a: 1,
            b: 2,
            c: 2,
            d: 4
        }));
        for max_n in [1, 4, 12, 24, 36] {
            assert_eq!(
                enumerate_quadruples(max_n),
                quadruple_oracle(max_n),
                "max_n = {max_n}"
            );
        }
        for q in enumerate_quadruples(64) {
            assert_eq!(q.a * q.d, q.b * q.c);
        }
    }

    #[test]
    fn bergeron_examples() {
        assert!(bergeron_diff(1, 1, 5, 5).unwrap().is_zero());
        assert_eq!(
            bergeron_diff(1, 2, 4, 8).unwrap().eval_at_one(),
            BigInt::from(6)
        );
        assert_eq!(
            bergeron_diff(2, 3, 6, 9).unwrap().eval_at_one(),
            BigInt::from(29)
        );
        assert!(matches!(
            bergeron_diff(1, 2, 3, 4),
            Err(Error::BadQuadruple { .. })
        ));
        assert!(matches!(
            bergeron_diff(1, 2, 2, 4),
            Err(Error::BadQuadruple { .. })
        ));
        assert!(matches!(
            bergeron_diff(0, 1, 2, 0),
            Err(Error::BadQuadruple { .. })
        ));
    }

    #[test]
    fn c1_c2_examples() {
        let inst = check_c1_c2(2, 3, 6, 9, Conjecture::C2).unwrap();
        assert!(inst.nonneg() && inst.symmetric && inst.unimodal() && inst.passes());
        assert_eq!(inst.ambient_degree, 18);

        let inst = check_c1_c2(1, 1, 3, 3, Conjecture::C1).unwrap();
        assert!(inst.diff.is_zero() && inst.degenerate && inst.passes());
        assert!(check_c1_c2(1, 1, 3, 3, Conjecture::C3).is_err());
    }

    #[test]
    fn c3_examples() {
        for (a, b) in [(1, 2), (2, 5), (3, 4)] {
            assert!(check_c3(a, b, 1).unwrap().diff.is_zero());
        }
        let inst = check_c3(1, 2, 2).unwrap();
        assert_eq!(inst.diff, p(&[0, 0, 1]));
        assert!(inst.passes() && inst.symmetric);
        assert!(check_c3(2, 3, 3).unwrap().passes());
        assert!(check_c3(2, 2, 2).is_err());
        assert_eq!(
            c3_induced_quadruple(2, 3, 2),
            Some(Quadruple {
                a: 2,
                b: 3,
                c: 4,
                d: 6
            })
        );
        assert_eq!(c3_induced_quadruple(1, 3, 2), None);
    }

    #[test]
    fn c4_examples() {
        let inst = check_c4(2, 3, 0).unwrap();
        assert!(inst.diff.is_zero() && inst.passes());
        let inst = check_c4(1, 2, 1).unwrap();
        assert_eq!(inst.diff, p(&[0, 0, 1]));
        assert!(inst.passes());
        let inst = check_c4(3, 5, 2).unwrap();
        assert!(inst.nonneg() && inst.forms_agree == Some(true));
        assert!(check_c4(3, 3, 1).is_err());
        assert!(check_c4(2, 3, 3).is_err());
    }
}
