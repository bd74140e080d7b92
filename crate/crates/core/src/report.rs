//! Machine-readable outcome of one check.

use std::time::Duration;

use indexmap::IndexMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::identities::{IdentityCheck, Lemma9Check, NonnegCheck, Params};
use crate::verify::{ConjectureInstance, WzCheck, WzVariant};
use crate::{IntPoly, RatFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Field order is fixed so that serialized reports are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: IndexMap<String, i64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub wall_time_us: u64,
}

fn to_map(params: &Params) -> IndexMap<String, i64> {
    params.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

impl CheckReport {
    pub fn pass(check: impl Into<String>, params: &Params) -> Self {
        CheckReport {
            check: check.into(),
            params: to_map(params),
            status: Status::Pass,
            witness: None,
            failing_index: None,
            note: None,
            wall_time_us: 0,
        }
    }

    pub fn fail(
        check: impl Into<String>,
        params: &Params,
        witness: IntPoly,
        failing_index: Option<usize>,
    ) -> Self {
        CheckReport {
            status: Status::Fail,
            witness: Some(witness),
            failing_index,
            ..Self::pass(check, params)
        }
    }

    pub fn error(check: impl Into<String>, params: &Params, message: impl Into<String>) -> Self {
        CheckReport {
            status: Status::Error,
            note: Some(message.into()),
            ..Self::pass(check, params)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_wall_time(mut self, elapsed: Duration) -> Self {
        self.wall_time_us = elapsed.as_micros() as u64;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

pub trait ToReport {
    fn to_report(&self) -> CheckReport;
}

fn lowest_nonzero(p: &IntPoly) -> Option<usize> {
    p.coeffs().iter().position(|c| *c != BigInt::from(0))
}

fn identity_report<T>(c: &IdentityCheck<T>, witness: impl FnOnce() -> IntPoly) -> CheckReport {
    if c.equal {
        CheckReport::pass(c.name, &c.params)
    } else {
        let w = witness();
        let idx = lowest_nonzero(&w);
        CheckReport::fail(c.name, &c.params, w, idx)
    }
}

impl ToReport for IdentityCheck<IntPoly> {
    fn to_report(&self) -> CheckReport {
        identity_report(self, || &self.lhs - &self.rhs)
    }
}

impl ToReport for IdentityCheck<BigInt> {
    fn to_report(&self) -> CheckReport {
        identity_report(self, || IntPoly::constant(&self.lhs - &self.rhs))
    }
}

impl ToReport for IdentityCheck<RatFun> {
    fn to_report(&self) -> CheckReport {
        identity_report(self, || {
            self.lhs.num() * self.rhs.den() - self.rhs.num() * self.lhs.den()
        })
    }
}

impl ToReport for NonnegCheck {
    fn to_report(&self) -> CheckReport {
        if self.holds() {
            CheckReport::pass(self.name, &self.params)
        } else {
            CheckReport::fail(
                self.name,
                &self.params,
                self.poly.clone(),
                self.first_negative,
            )
        }
    }
}

impl ToReport for Lemma9Check {
    fn to_report(&self) -> CheckReport {
        let params = vec![("n", self.n), ("k", self.k)];
        if self.holds() {
            return CheckReport::pass("lemma9", &params);
        }
        let mut why = Vec::new();
        if self.first_negative.is_some() {
            why.push("negative coefficient");
        }
        if !self.decomposition_ok() {
            why.push("decomposition differs");
        }
        if !self.u_unimodal {
            why.push("U not unimodal");
        }
        if !self.u_symmetric {
            why.push("U not symmetric");
        }
        let witness = if self.decomposition_ok() {
            self.difference.clone()
        } else {
            &self.difference - &self.decomposition
        };
        CheckReport::fail("lemma9", &params, witness, self.first_negative).with_note(why.join(", "))
    }
}

impl ToReport for ConjectureInstance {
    fn to_report(&self) -> CheckReport {
        let name = self.which.to_string();
        let mut flags = vec![
            format!("nonneg={}", self.nonneg()),
            format!("symmetric={}", self.symmetric),
            format!("unimodal={}", self.unimodal()),
        ];
        if let Some(agree) = self.forms_agree {
            flags.push(format!("forms_agree={agree}"));
        }
        if self.degenerate {
            flags.push("degenerate".to_string());
        }
        let note = flags.join(" ");
        let report = if self.passes() {
            CheckReport::pass(name, &self.params)
        } else {
            CheckReport::fail(name, &self.params, self.diff.clone(), self.failing_index())
        };
        report.with_note(note)
    }
}

impl ToReport for WzCheck {
    fn to_report(&self) -> CheckReport {
        let name = match self.variant {
            WzVariant::Q1 => "wz-q1",
            WzVariant::Q => "wz-q",
        };
        let params = vec![("a", self.a), ("i", self.i)];
        let mut flags = vec![format!("relation_ok={}", self.relation_ok)];
        if let Some(c) = self.certificate_ok {
            flags.push(format!("certificate_ok={c}"));
        }
        flags.push(format!("telescope_ok={}", self.telescope_ok));
        if let Some(c) = self.anchor_ok {
            flags.push(format!("anchor_ok={c}"));
        }
        let mut note = flags.join(" ");
        if self.holds() {
            CheckReport::pass(name, &params).with_note(note)
        } else {
            note.push_str("; ");
            note.push_str(&self.failures.join("; "));
            let witness = self.witness.clone().unwrap_or_else(IntPoly::zero);
            let idx = lowest_nonzero(&witness);
            CheckReport::fail(name, &params, witness, idx).with_note(note)
        }
    }
}
