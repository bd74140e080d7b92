use qgauss_core::identities::{self as id, NonnegCheck, Params};
use qgauss_core::qkernel::q_binomial;
use qgauss_core::verify::quadruples_with_product;
use qgauss_core::{CheckReport, ToReport};

use crate::exec::Task;

/// A named identity with its loop variables (outermost first), the default
/// range of each, and the check run per tuple.
pub struct IdentitySpec {
    pub name: &'static str,
    pub vars: &'static [(&'static str, &'static str)],
    pub task: Task,
    /// Turns one loop tuple into the tuples actually checked.
    pub expand: Option<fn(&Params) -> Vec<Params>>,
}

fn get(p: &Params, name: &str) -> i64 {
    p.iter()
        .find(|(k, _)| *k == name)
        .map(|(_, v)| *v)
        .unwrap_or_else(|| panic!("missing parameter {name}"))
}

fn one<R: ToReport>(r: R) -> Vec<CheckReport> {
    vec![r.to_report()]
}

fn two<R: ToReport, S: ToReport>((r, s): (R, S)) -> Vec<CheckReport> {
    vec![r.to_report(), s.to_report()]
}

fn quadruples(p: &Params) -> Vec<Params> {
    quadruples_with_product(get(p, "n"))
        .into_iter()
        .map(|q| vec![("a", q.a), ("b", q.b), ("c", q.c), ("d", q.d)])
        .collect()
}

const XYZ: &[(&str, &str)] = &[("x", "0..8"), ("y", "0..8"), ("z", "0..x+y")];
const AI10: &[(&str, &str)] = &[("a", "1..10"), ("i", "1..10")];
const AI8: &[(&str, &str)] = &[("a", "1..8"), ("i", "1..8")];
const IK12: &[(&str, &str)] = &[("i", "1..12"), ("k", "1..i")];

pub const IDENTITIES: &[IdentitySpec] = &[
    IdentitySpec {
        name: "vandermonde-j",
        vars: XYZ,
        task: |p| {
            Ok(one(id::vandermonde_form_j(
                get(p, "x"),
                get(p, "y"),
                get(p, "z"),
            )))
        },
        expand: None,
    },
    IdentitySpec {
        name: "vandermonde-k",
        vars: XYZ,
        task: |p| {
            Ok(one(id::vandermonde_form_k(
                get(p, "x"),
                get(p, "y"),
                get(p, "z"),
            )))
        },
        expand: None,
    },
    IdentitySpec {
        name: "remark1",
        vars: &[("n", "1..64")],
        task: |p| {
            id::remark1_expansion(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "d")).map(two)
        },
        expand: Some(quadruples),
    },
    IdentitySpec {
        name: "lemma1",
        vars: AI10,
        task: |p| id::lemma1_check(get(p, "a"), get(p, "i")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "lemma2",
        vars: AI10,
        task: |p| id::lemma2_check(get(p, "a"), get(p, "i")).map(two),
        expand: None,
    },
    IdentitySpec {
        name: "lemma3",
        vars: IK12,
        task: |p| {
            let (i, k) = (get(p, "i"), get(p, "k"));
            let mut out = two(id::lemma3_check(i, k)?);
            let c = id::ck_coefficient(i, k)?;
            out.push(NonnegCheck::new("ck-nonneg", p.clone(), c.value.into()).to_report());
            Ok(out)
        },
        expand: None,
    },
    IdentitySpec {
        name: "theorem2",
        vars: AI10,
        task: |p| id::theorem2_check(get(p, "a"), get(p, "i")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "i1-special",
        vars: &[("a", "1..20")],
        task: |p| id::i1_special_case(get(p, "a")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "lemma4",
        vars: AI8,
        task: |p| id::lemma4_check(get(p, "a"), get(p, "i")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "lemma5",
        vars: AI8,
        task: |p| id::lemma5_check(get(p, "a"), get(p, "i")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "lemma6",
        vars: IK12,
        task: |p| {
            let (i, k) = (get(p, "i"), get(p, "k"));
            let check = id::lemma6_check(i, k)?;
            let excess = &check.lhs - &q_binomial(i, k);
            let nonneg = NonnegCheck::new("lemma6-nonneg", p.clone(), excess);
            Ok(vec![check.to_report(), nonneg.to_report()])
        },
        expand: None,
    },
    IdentitySpec {
        name: "lemma7",
        vars: &[("i", "1..12"), ("k", "0..i")],
        task: |p| id::lemma7_check(get(p, "i"), get(p, "k")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "theorem3-bracket",
        vars: &[("a", "1..8"), ("i", "1..8"), ("k", "1..i")],
        task: |p| {
            let (a, i, k) = (get(p, "a"), get(p, "i"), get(p, "k"));
            Ok(vec![
                id::theorem3_bracket(a, i, k)?.to_report(),
                id::theorem3_bracket_complement(a, i, k).to_report(),
            ])
        },
        expand: None,
    },
    IdentitySpec {
        name: "theorem3",
        vars: AI8,
        task: |p| {
            let (a, i) = (get(p, "a"), get(p, "i"));
            Ok(vec![
                id::theorem3_check(a, i)?.to_report(),
                id::theorem3_positivity(a, i)?.to_report(),
            ])
        },
        expand: None,
    },
    IdentitySpec {
        name: "lemma8",
        vars: &[("a", "1..7"), ("b", "a+1..8"), ("k", "0..a")],
        task: |p| id::lemma8_check(get(p, "a"), get(p, "b"), get(p, "k")).map(one),
        expand: None,
    },
    IdentitySpec {
        name: "lemma9",
        vars: &[("k", "1..15"), ("n", "k+k..30")],
        task: |p| id::lemma9_check(get(p, "n"), get(p, "k")).map(one),
        expand: None,
    },
];

pub fn lookup(name: &str) -> Option<&'static IdentitySpec> {
    IDENTITIES.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|s| s.name).collect()
}
