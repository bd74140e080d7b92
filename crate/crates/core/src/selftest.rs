//! The acceptance criteria, runnable from tests and from `qgauss selftest`.
//!
//! Each criterion returns the number of instances it checked, or a
//! description of the first instance that failed.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::identities::{self as id, IdentityCheck};
use crate::qkernel::{brute_force_qbinomial, q_binomial, q_binomial_by_factorials, Statistic};
use crate::verify::{self, Conjecture};
use crate::{IntPoly, RatFun};

/// The `c_k(i)` triangle for `1 <= k <= i <= 8` as printed in the source.
pub const CK_TABLE_PRINTED: [&[i64]; 8] = [
    &[1],
    &[3, 1],
    &[6, 6, 1],
    &[10, 19, 9, 1],
    &[15, 45, 39, 12, 1],
    &[21, 90, 120, 66, 15, 1],
    &[28, 161, 301, 250, 100, 18, 1],
    &[36, 266, 658, 755, 450, 141, 21, 1],
];

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub budget: Duration,
    run: fn() -> Result<usize, String>,
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub budget: Duration,
    pub elapsed: Duration,
    pub result: Result<usize, String>,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok() && self.elapsed <= self.budget
    }

    /// One summary line, e.g. `PASS  [1] c_k(i) table ... (36 checks, 0.01s / 1s)`.
    pub fn line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let detail = match &self.result {
            Ok(n) => format!("{n} checks"),
            Err(e) => e.clone(),
        };
        format!(
            "{tag}  [{:>2}] {} ({detail}, {:.2}s / {}s)",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionOutcome {
        let start = Instant::now();
        let result = (self.run)();
        CriterionOutcome {
            id: self.id,
            title: self.title,
            budget: self.budget,
            elapsed: start.elapsed(),
            result,
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "c_k(i) table reproduction",
            budget: secs(1),
            run: table_reproduction,
        },
        Criterion {
            id: 2,
            title: "kernel oracle equivalence",
            budget: secs(10),
            run: kernel_oracles,
        },
        Criterion {
            id: 3,
            title: "q-Vandermonde-Chu, both forms",
            budget: secs(30),
            run: vandermonde,
        },
        Criterion {
            id: 4,
            title: "ordinary binomial suite",
            budget: secs(10),
            run: integer_suite,
        },
        Criterion {
            id: 5,
            title: "Gaussian polynomial suite",
            budget: secs(120),
            run: gaussian_suite,
        },
        Criterion {
            id: 6,
            title: "conjectures 1 and 2 scan",
            budget: secs(300),
            run: scan_c1_c2,
        },
        Criterion {
            id: 7,
            title: "conjecture 3 scan",
            budget: secs(120),
            run: scan_c3,
        },
        Criterion {
            id: 8,
            title: "conjecture 4 scan",
            budget: secs(300),
            run: scan_c4,
        },
        Criterion {
            id: 9,
            title: "WZ certification",
            budget: secs(120),
            run: wz_certification,
        },
        Criterion {
            id: 10,
            title: "partial fraction identity",
            budget: secs(60),
            run: partial_fractions,
        },
        Criterion {
            id: 11,
            title: "central-difference positivity",
            budget: secs(60),
            run: central_difference,
        },
    ]
}

pub fn run_all() -> Vec<CriterionOutcome> {
    criteria().iter().map(Criterion::run).collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity<T: std::fmt::Debug>(c: &IdentityCheck<T>) -> Result<(), String> {
    check(c.equal, || {
        format!(
            "{} {:?}: lhs {:?} != rhs {:?}",
            c.name, c.params, c.lhs, c.rhs
        )
    })
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn table_reproduction() -> Result<usize, String> {
    let table = lift(id::ck_table(8))?;
    let mut n = 0;
    for (row, printed) in table.iter().zip(CK_TABLE_PRINTED) {
        let printed: Vec<BigInt> = printed.iter().map(|&v| BigInt::from(v)).collect();
        check(*row == printed, || {
            format!("row {row:?} != printed {printed:?}")
        })?;
        n += row.len();
    }
    check(table.len() == 8, || "expected 8 rows".into())?;
    for i in 1..=8 {
        check(
            lift(id::ck_coefficient(i, 0))?.value == BigInt::from(0),
            || format!("c_0({i}) != 0"),
        )?;
    }
    Ok(n)
}

fn kernel_oracles() -> Result<usize, String> {
    let mut n = 0;
    for total in 0..=10 {
        for k in 0..=total {
            let fast = q_binomial(total, k);
            for mode in [Statistic::Inversion, Statistic::Area] {
                let slow = lift(brute_force_qbinomial(total, k, mode))?;
                check(fast == slow, || {
                    format!("[{total},{k}] != {mode:?} enumeration")
                })?;
                n += 1;
            }
        }
    }
    for total in 0..=30 {
        for k in 0..=total {
            let by_div = lift(q_binomial_by_factorials(total, k))?;
            check(q_binomial(total, k) == by_div, || {
                format!("[{total},{k}] != factorial quotient")
            })?;
            n += 1;
        }
    }
    Ok(n)
}

fn vandermonde() -> Result<usize, String> {
    let mut n = 0;
    for x in 0..=8 {
        for y in 0..=8 {
            for z in 0..=x + y {
                identity(&id::vandermonde_form_j(x, y, z))?;
                identity(&id::vandermonde_form_k(x, y, z))?;
                n += 2;
            }
        }
    }
    Ok(n)
}

fn integer_suite() -> Result<usize, String> {
    let mut n = 0;
    for a in 1..=20 {
        identity(&lift(id::i1_special_case(a))?)?;
        n += 1;
    }
    for a in 1..=10 {
        for i in 1..=10 {
            identity(&lift(id::lemma1_check(a, i))?)?;
            let (fraction, bracket) = lift(id::lemma2_check(a, i))?;
            identity(&fraction)?;
            identity(&bracket)?;
            identity(&lift(id::theorem2_check(a, i))?)?;
            n += 4;
        }
    }
    for i in 1..=12 {
        for k in 1..=i {
            let c = lift(id::ck_coefficient(i, k))?;
            check(c.value >= BigInt::from(0), || {
                format!("c_{k}({i}) = {} < 0", c.value)
            })?;
            let (telescoped, positive) = lift(id::lemma3_check(i, k))?;
            identity(&telescoped)?;
            identity(&positive)?;
            n += 3;
        }
    }
    Ok(n)
}

fn gaussian_suite() -> Result<usize, String> {
    let mut n = 0;
    for a in 1..=8 {
        for i in 1..=8 {
            identity(&lift(id::lemma4_check(a, i))?)?;
            identity(&lift(id::lemma5_check(a, i))?)?;
            identity(&lift(id::theorem3_check(a, i))?)?;
            let p = lift(id::theorem3_positivity(a, i))?;
            check(p.holds(), || format!("P(q) negative at a={a}, i={i}"))?;
            n += 4;
            for k in 1..=i {
                let b = lift(id::theorem3_bracket(a, i, k))?;
                check(b.holds(), || {
                    format!("bracket negative at a={a}, i={i}, k={k}")
                })?;
                identity(&id::theorem3_bracket_complement(a, i, k))?;
                n += 2;
            }
        }
    }
    for i in 1..=8 {
        for k in 1..=i {
            identity(&lift(id::lemma6_check(i, k))?)?;
            check(id::lemma6_tail(i, k).is_nonneg(), || {
                format!("lemma6 tail negative at i={i}, k={k}")
            })?;
            n += 2;
        }
        for k in 0..=i {
            let c = lift(id::lemma7_check(i, k))?;
            check(c.holds(), || format!("lemma7 negative at i={i}, k={k}"))?;
            n += 1;
        }
    }
    Ok(n)
}

fn scan_c1_c2() -> Result<usize, String> {
    let quads = verify::enumerate_quadruples(64);
    for q in &quads {
        let inst = lift(verify::check_c1_c2(q.a, q.b, q.c, q.d, Conjecture::C2))?;
        check(inst.symmetric && inst.nonneg() && inst.unimodal(), || {
            format!("counterexample at {q:?}: {}", inst.diff)
        })?;
    }
    check(!quads.is_empty(), || "no quadruples enumerated".into())?;
    Ok(quads.len())
}

fn scan_c3() -> Result<usize, String> {
    let mut n = 0;
    for a in 1..=9 {
        for b in a + 1..=9 {
            check(lift(verify::check_c3(a, b, 1))?.diff.is_zero(), || {
                format!("beta = 1 nonzero at a={a}, b={b}")
            })?;
            for beta in [2, 3] {
                let inst = lift(verify::check_c3(a, b, beta))?;
                check(inst.nonneg(), || {
                    format!("negative at beta={beta}, a={a}, b={b}")
                })?;
            }
            n += 3;
        }
    }
    Ok(n)
}

fn scan_c4() -> Result<usize, String> {
    let mut n = 0;
    for a in 0..=9 {
        for b in a + 1..=10 {
            for k in 0..=a {
                let inst = lift(verify::check_c4(a, b, k))?;
                check(inst.nonneg(), || format!("negative at a={a}, b={b}, k={k}"))?;
                check(inst.forms_agree == Some(true), || {
                    format!("forms disagree at a={a}, b={b}, k={k}")
                })?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn wz_certification() -> Result<usize, String> {
    let mut n = 0;
    for a in 1..=8 {
        for i in 1..=8 {
            let c = lift(verify::wz_check_q1(a, i, None))?;
            check(c.holds(), || {
                format!("q = 1 pair at a={a}, i={i}: {:?}", c.failures)
            })?;
            check(i != 1 || c.anchor_ok == Some(true), || {
                format!("q = 1 anchor at a={a}")
            })?;
            n += 1;
        }
    }
    for a in 1..=5 {
        for i in 1..=5 {
            let c = lift(verify::wz_check_q(a, i, None))?;
            check(c.holds(), || {
                format!("q pair at a={a}, i={i}: {:?}", c.failures)
            })?;
            check(c.certificate_ok == Some(true), || {
                format!("A != B at a={a}, i={i}")
            })?;
            check(i != 1 || c.anchor_ok == Some(true), || {
                format!("q anchor at a={a}")
            })?;
            n += 1;
        }
    }
    Ok(n)
}

fn om(m: i64) -> IntPoly {
    IntPoly::one_minus_q_pow(m as usize)
}

fn product(factors: &[IntPoly]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * f)
}

/// The displayed `k = 1, 2, 3` expansions, transcribed term by term.
pub fn printed_lemma8_terms(a: i64, b: i64, k: i64) -> Option<Vec<RatFun>> {
    let term = |shift: i64, num: &[IntPoly], den: &[IntPoly]| {
        RatFun::new(product(num).shift(shift as usize), product(den)).expect("nonzero")
    };
    let terms = match k {
        1 => vec![term(a + 1, &[om(1), om(b - a)], &[om(a + 1), om(b + 1)])],
        2 => vec![
            term(
                a + 1,
                &[om(1), om(2), om(b - a)],
                &[om(a + 1), om(a + 2), om(b + 1)],
            ),
            term(
                a + 2,
                &[om(1), om(2), om(b - a)],
                &[om(a + 2), om(b + 1), om(b + 2)],
            ),
        ],
        3 => vec![
            term(
                a + 1,
                &[om(1), om(2), om(3), om(b - a)],
                &[om(a + 1), om(a + 2), om(a + 3), om(b + 1)],
            ),
            term(
                a + 2,
                &[om(1), om(2), om(3), om(b - a)],
                &[om(a + 2), om(a + 3), om(b + 1), om(b + 2)],
            ),
            term(
                a + 3,
                &[om(1), om(2), om(3), om(b - a)],
                &[om(a + 3), om(b + 1), om(b + 2), om(b + 3)],
            ),
        ],
        _ => return None,
    };
    Some(terms)
}

fn partial_fractions() -> Result<usize, String> {
    let mut n = 0;
    for b in 2..=8 {
        for a in 1..b {
            for k in 1..=a {
                identity(&lift(id::lemma8_check(a, b, k))?)?;
                n += 1;
                if let Some(printed) = printed_lemma8_terms(a, b, k) {
                    let general = lift(id::lemma8_terms(a, b, k))?;
                    check(general.len() == printed.len(), || {
                        format!("term count at k={k}")
                    })?;
                    for (t, (g, p)) in general.iter().zip(&printed).enumerate() {
                        check(g == p, || {
                            format!("term {} differs at a={a}, b={b}, k={k}", t + 1)
                        })?;
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

fn central_difference() -> Result<usize, String> {
    let mut n = 0;
    for total in 2..=30 {
        for k in 1..=total / 2 {
            let c = lift(id::lemma9_check(total, k))?;
            check(c.holds(), || format!("n={total}, k={k}: {:?}", c))?;
            n += 1;
        }
    }
    Ok(n)
}
