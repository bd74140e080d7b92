use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("not divisible: remainder {remainder} is nonzero")]
    NotDivisible { remainder: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("enumeration bound exceeded: n = {n} > {max}")]
    TooLarge { n: i64, max: i64 },
    #[error("invalid quadruple (a, b, c, d) = ({a}, {b}, {c}, {d}): {reason}")]
    BadQuadruple {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        reason: &'static str,
    },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("c_k(i) forms disagree at i = {i}, k = {k}: {detail}")]
    FormMismatch { i: i64, k: i64, detail: String },
}
