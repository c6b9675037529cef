//! Counterexample search for the 5-core analogue of the BG-rank
//! congruences.
//!
//! `ab5jr`: for `r ∈ {0,1,2,3}` and each BG-rank `j` in the class where the
//! partition congruence holds, test whether the number of 5-cores of
//! `5n+r` with BG-rank `j` is divisible by 5. The first failure, scanning
//! weights upward and then `j` upward, is the witness.

use std::collections::BTreeMap;

use serde_json::json;
use tcorelab_core::cores::{for_each_nvector, phi2_inv};
use tcorelab_core::stats::bg_rank;
use tcorelab_core::NVector;

use crate::checks::counting::bg_class_applies;
use crate::checks::Ctx;
use crate::report::{CheckReport, Finding, Status};
use crate::{Result, VerifyError};

pub const AB5JR: &str = "ab5jr";

/// `counts[w][j]` = 5-cores of weight `w` with BG-rank `j`.
fn bg_counts(max_weight: usize) -> Result<Vec<BTreeMap<i64, u64>>> {
    let mut counts = vec![BTreeMap::new(); max_weight + 1];
    for_each_nvector(5, max_weight, |c, w| {
        let core = phi2_inv(&NVector::new(c.to_vec()).expect("zero sum"));
        *counts[w].entry(bg_rank(&core)).or_insert(0u64) += 1;
    })?;
    Ok(counts)
}

fn ab5jr(max_weight: usize) -> Result<Finding> {
    let counts = bg_counts(max_weight)?;
    let mut examined = 0u64;
    for (w, by_j) in counts.iter().enumerate() {
        let r = w % 5;
        if r == 4 {
            continue;
        }
        for (&j, &count) in by_j {
            if !bg_class_applies(r, j) {
                continue;
            }
            examined += 1;
            if count % 5 != 0 {
                return Ok(Finding {
                    status: Status::CounterexampleFound,
                    checked: examined,
                    witness: Some(json!({
                        "n": w / 5,
                        "r": r,
                        "j": j,
                        "weight": w,
                        "count": count,
                        "residue": count % 5,
                    })),
                    notes: Default::default(),
                });
            }
        }
    }
    Ok(Finding {
        status: Status::NotFound,
        checked: examined,
        witness: Some(json!({ "searched_max_weight": max_weight, "classes_examined": examined })),
        notes: Default::default(),
    })
}

pub(crate) fn ab5jr_check(ctx: &Ctx) -> Result<Finding> {
    ab5jr(ctx.max_n)
}

/// Runs a named search up to `max_weight`.
pub fn search_counterexample(family: &str, max_weight: usize) -> Result<CheckReport> {
    if !family.eq_ignore_ascii_case(AB5JR) {
        return Err(VerifyError::UnknownFamily(family.to_string()));
    }
    let f = ab5jr(max_weight)?;
    let mut params = BTreeMap::new();
    params.insert("family".to_string(), json!(AB5JR));
    params.insert("max_weight".to_string(), json!(max_weight));
    Ok(CheckReport { id: "SEARCH-AB5JR".into(), params, status: f.status, checked: f.checked, witness: f.witness })
}
