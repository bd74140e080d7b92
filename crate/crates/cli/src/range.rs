//! Inclusive integer ranges whose bounds may refer to outer loop variables.
//!
//! ```text
//! range := expr | expr ".." expr
//! expr  := ["+" | "-"] term (("+" | "-") term)*
//! term  := identifier | integer
//! ```

use std::fmt;
use std::str::FromStr;

use qgauss_core::identities::Params;

/// Largest absolute value any bound may evaluate to.
pub const BOUND_CAP: i64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Term {
    Lit(i64),
    Var(String),
}

/// A signed sum of literals and variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    terms: Vec<(i64, Term)>,
}

impl Expr {
    pub fn eval(&self, env: &Params) -> Result<i64, String> {
        let mut total: i64 = 0;
        for (sign, term) in &self.terms {
            let v = match term {
                Term::Lit(v) => *v,
                Term::Var(name) => env
                    .iter()
                    .find(|(k, _)| k == name)
                    .map(|(_, v)| *v)
                    .ok_or_else(|| format!("unknown variable `{name}`"))?,
            };
            total = total
                .checked_add(sign * v)
                .ok_or_else(|| "range bound overflows".to_string())?;
        }
        Ok(total)
    }
}

impl FromStr for Expr {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut terms = Vec::new();
        let mut chars = s.chars().peekable();
        let mut sign = 1;
        let mut expect_term = true;
        loop {
            while chars.next_if(|c| c.is_whitespace()).is_some() {}
            let Some(&c) = chars.peek() else { break };
            match c {
                '+' | '-' => {
                    chars.next();
                    if c == '-' {
                        sign = -sign;
                    }
                    // a leading sign is allowed; otherwise signs join terms
                    if expect_term && !terms.is_empty() {
                        return Err(format!("doubled operator in `{s}`"));
                    }
                    expect_term = true;
                }
                '0'..='9' => {
                    if !expect_term {
                        return Err(format!("missing operator in `{s}`"));
                    }
                    let mut digits = String::new();
                    while let Some(d) = chars.next_if(char::is_ascii_digit) {
                        digits.push(d);
                    }
                    let v = digits
                        .parse()
                        .map_err(|_| format!("integer `{digits}` is out of range"))?;
                    terms.push((sign, Term::Lit(v)));
                    sign = 1;
                    expect_term = false;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    if !expect_term {
                        return Err(format!("missing operator in `{s}`"));
                    }
                    let mut name = String::new();
                    while let Some(d) = chars.next_if(|d| d.is_ascii_alphanumeric() || *d == '_') {
                        name.push(d);
                    }
                    terms.push((sign, Term::Var(name)));
                    sign = 1;
                    expect_term = false;
                }
                other => return Err(format!("unexpected `{other}` in `{s}`")),
            }
        }
        if expect_term {
            return Err(format!("incomplete expression `{s}`"));
        }
        Ok(Expr { terms })
    }
}

/// `lo..hi` (both ends included) or a single value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSpec {
    source: String,
    lo: Expr,
    hi: Expr,
}

impl RangeSpec {
    /// The values of the range under `env`, empty when `lo > hi`.
    pub fn values(&self, env: &Params) -> Result<std::ops::RangeInclusive<i64>, String> {
        let check = |v: i64| {
            if v.abs() > BOUND_CAP {
                Err(format!(
                    "bound {v} in `{}` exceeds the cap of {BOUND_CAP}",
                    self.source
                ))
            } else {
                Ok(v)
            }
        };
        let lo = check(
            self.lo
                .eval(env)
                .map_err(|e| format!("{e} in `{}`", self.source))?,
        )?;
        let hi = check(
            self.hi
                .eval(env)
                .map_err(|e| format!("{e} in `{}`", self.source))?,
        )?;
        Ok(lo..=hi)
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo.parse()?, hi.parse()?),
            None => {
                let e: Expr = s.parse()?;
                (e.clone(), e)
            }
        };
        Ok(RangeSpec {
            source: s.trim().to_string(),
            lo,
            hi,
        })
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// Expands nested ranges into parameter tuples in lexicographic loop order.
/// Each range may refer to variables bound by the ranges before it.
pub fn grid(prefix: &Params, specs: &[(&'static str, RangeSpec)]) -> Result<Vec<Params>, String> {
    let mut out = Vec::new();
    let mut env = prefix.clone();
    expand(&mut env, specs, &mut out)?;
    Ok(out)
}

/// Upper bound on the number of instances a single command may expand to.
pub const GRID_CAP: usize = 1_000_000;

fn expand(
    env: &mut Params,
    specs: &[(&'static str, RangeSpec)],
    out: &mut Vec<Params>,
) -> Result<(), String> {
    let Some(((name, spec), rest)) = specs.split_first() else {
        if out.len() >= GRID_CAP {
            return Err(format!("more than {GRID_CAP} instances requested"));
        }
        out.push(env.clone());
        return Ok(());
    };
    for v in spec.values(env).map_err(|e| format!("--{name}: {e}"))? {
        env.push((name, v));
        expand(env, rest, out)?;
        env.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RangeSpec {
        s.parse().unwrap()
    }

    #[test]
    fn literals_and_single_values() {
        assert_eq!(r("1..12").values(&vec![]).unwrap(), 1..=12);
        assert_eq!(r("5").values(&vec![]).unwrap(), 5..=5);
        assert_eq!(r(" -1 .. 3 ").values(&vec![]).unwrap(), -1..=3);
    }

    #[test]
    fn dependent_bounds() {
        let env = vec![("a", 3), ("i", 4)];
        assert_eq!(r("a+1..8").values(&env).unwrap(), 4..=8);
        assert_eq!(r("0..a").values(&env).unwrap(), 0..=3);
        assert_eq!(r("-1..a+i-2+1").values(&env).unwrap(), -1..=6);
        assert_eq!(r("k+k..30").values(&vec![("k", 7)]).unwrap(), 14..=30);
    }

    #[test]
    fn rejects_bad_syntax() {
        for bad in [
            "", "1..", "..3", "a*2", "1..2..3", "3 4", "a b", "1++2", "2-",
        ] {
            assert!(bad.parse::<RangeSpec>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn unknown_variable_and_cap() {
        assert!(r("1..z").values(&vec![("a", 1)]).is_err());
        assert!(r("1..20000").values(&vec![]).is_err());
    }

    #[test]
    fn grid_order_and_empty_inner() {
        let specs = vec![("a", r("1..3")), ("b", r("a+1..3"))];
        let g = grid(&vec![], &specs).unwrap();
        let flat: Vec<_> = g.iter().map(|p| (p[0].1, p[1].1)).collect();
        assert_eq!(flat, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn later_variable_is_unknown() {
        let specs = vec![("a", r("1..b")), ("b", r("1..3"))];
        assert!(grid(&vec![], &specs).is_err());
    }
}
