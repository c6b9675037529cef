//! Check reports and the audit accumulator the checks write into.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use tcorelab_qseries::{Ring, Series};

use crate::render::Render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    CounterexampleFound,
    /// A search exhausted its bounds without a witness. Not a pass.
    NotFound,
}

impl Status {
    /// Suite-level success. Search checks only ever report
    /// `CounterexampleFound` when a witness is the expected outcome.
    pub fn is_success(self) -> bool {
        matches!(self, Status::Pass | Status::CounterexampleFound)
    }
}

/// Result of one registry check. `Fail` and `NotFound` always carry a
/// witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    /// Number of individual equalities or congruences evaluated.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// What a check body produces before the registry attaches id and params.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub status: Status,
    pub checked: u64,
    pub witness: Option<Value>,
    pub notes: BTreeMap<String, Value>,
}

/// Counts comparisons and keeps the first failure in evaluation order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Audit {
    checked: u64,
    failure: Option<Value>,
    notes: BTreeMap<String, Value>,
}

impl Audit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn equal<T: PartialEq + Serialize>(&mut self, what: &str, left: T, right: T, at: Value) {
        let ok = left == right;
        self.check(ok, || {
            json!({ "claim": what, "at": at, "left": left, "right": right })
        });
    }

    /// Coefficientwise equality of two series of the same order.
    pub fn series_eq<R: Ring + Render>(&mut self, identity: &str, left: &Series<R>, right: &Series<R>) {
        if left.order() != right.order() {
            self.check(false, || {
                json!({ "identity": identity, "left_order": left.order(), "right_order": right.order() })
            });
            return;
        }
        self.checked += left.order() as u64;
        if self.failure.is_some() {
            return;
        }
        if let Some(k) = left.first_difference(right) {
            self.failure = Some(json!({
                "identity": identity,
                "q_power": k,
                "left": left.coeff(k).render(),
                "right": right.coeff(k).render(),
            }));
        }
    }

    pub fn note(&mut self, key: &str, value: Value) {
        self.notes.insert(key.to_string(), value);
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn checked(&self) -> u64 {
        self.checked
    }

    /// Appends `later`; a failure already recorded here wins.
    pub fn merge(mut self, later: Audit) -> Audit {
        self.checked += later.checked;
        if self.failure.is_none() {
            self.failure = later.failure;
        }
        self.notes.extend(later.notes);
        self
    }

    pub fn finish(self) -> Finding {
        let status = if self.failure.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        Finding {
            status,
            checked: self.checked,
            witness: self.failure,
            notes: self.notes,
        }
    }
}

impl FromIterator<Audit> for Audit {
    fn from_iter<I: IntoIterator<Item = Audit>>(iter: I) -> Self {
        iter.into_iter().fold(Audit::new(), Audit::merge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_wins() {
        let mut a = Audit::new();
        a.check(true, || json!(0));
        a.check(false, || json!(1));
        a.check(false, || json!(2));
        let mut b = Audit::new();
        b.check(false, || json!(3));
        let f = a.merge(b).finish();
        assert_eq!(f.status, Status::Fail);
        assert_eq!(f.checked, 4);
        assert_eq!(f.witness, Some(json!(1)));
    }

    #[test]
    fn success_statuses() {
        assert!(Status::Pass.is_success());
        assert!(Status::CounterexampleFound.is_success());
        assert!(!Status::Fail.is_success());
        assert!(!Status::NotFound.is_success());
        assert_eq!(serde_json::to_value(Status::NotFound).unwrap(), json!("not-found"));
    }
}
