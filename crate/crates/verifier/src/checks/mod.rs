//! The check registry. Each entry binds an identifier to a deterministic
//! verification with default bounds.

mod bijections;
pub(crate) mod cores;
pub(crate) mod counting;
pub(crate) mod series;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};
use tcorelab_core::enumerate::DEFAULT_MAX_N;

use crate::report::{CheckReport, Finding, Status};
use crate::{Result, VerifyError};

/// Per-run overrides. `None` keeps the registry default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_n: Option<usize>,
    pub order: Option<usize>,
    /// Largest weight any check may enumerate partitions of.
    pub bound: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: None,
            order: None,
            bound: DEFAULT_MAX_N,
        }
    }
}

/// Resolved bounds handed to a check body.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Ctx {
    pub max_n: usize,
    pub order: usize,
    pub bound: usize,
}

pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub max_n: Option<usize>,
    pub order: Option<usize>,
    run: fn(&Ctx) -> Result<Finding>,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("id", &self.id)
            .field("max_n", &self.max_n)
            .field("order", &self.order)
            .finish()
    }
}

const fn spec(
    id: &'static str,
    summary: &'static str,
    max_n: Option<usize>,
    order: Option<usize>,
    run: fn(&Ctx) -> Result<Finding>,
) -> CheckSpec {
    CheckSpec {
        id,
        summary,
        max_n,
        order,
        run,
    }
}

static REGISTRY: &[CheckSpec] = &[
    spec("CHK-RAM5", "p(5n+4) ≡ 0 (mod 5)", Some(49), Some(200), counting::ram5),
    spec("CHK-RAM7", "p(7n+5) ≡ 0 (mod 7)", Some(47), Some(200), counting::ram7),
    spec("CHK-RAM11", "p(11n+6) ≡ 0 (mod 11)", Some(50), Some(200), counting::ram11),
    spec("CHK-RAMBEST", "Σ p(5n+4) qⁿ = 5 (q⁵;q⁵)⁵/(q;q)⁶", None, Some(30), series::rambest),
    spec("CHK-DYSON", "Dyson rank splits p(5n+4) and p(7n+5) evenly", Some(49), None, counting::dyson),
    spec("CHK-AG", "crank splits p(5n+4), p(7n+5), p(11n+6) evenly", Some(50), None, counting::ag),
    spec("CHK-CRANKGF", "crank generating function", None, Some(30), series::crankgf),
    spec("CHK-GREF5", "crank mod 10 refines crank mod 2 on 5n+4", Some(49), None, counting::gref5),
    spec("CHK-RSGF", "odd parts of π and π' trivariate product", None, Some(20), series::rsgf),
    spec("CHK-P02PROD", "Σ (p0 - p2) qⁿ product", None, Some(30), series::p02prod),
    spec("CHK-ANDREWS", "p0(5n+4) ≡ p2(5n+4) ≡ 0 (mod 5), p2 ≡ 0 (mod 10)", Some(49), None, counting::andrews),
    spec("CHK-SRANKPROD", "srank over partitions without repeated even parts", None, Some(25), series::srankprod),
    spec("CHK-LEMMA1", "St-crank and srank bivariate product", None, Some(20), series::lemma1),
    spec("CHK-JTPA", "Jacobi triple product and its specializations", None, Some(1000), series::jtpa),
    spec("CHK-COEFFZ", "q^(5n+4) coefficients of g(ξ,±1,q) and g(ξ,√-1,q) vanish", Some(29), Some(60), series::coeffz),
    spec("CHK-THM1", "St-crank splits p_i(5n+4) into five classes", Some(49), None, counting::thm1),
    spec("CHK-TCOREGF", "t-core counts by series, n-vectors and enumeration", Some(30), Some(200), cores::tcoregf),
    spec("CHK-THM2", "2-quotient-rank splits p_i(5n+4) into five classes", Some(49), None, counting::thm2),
    spec("CHK-STCTQR", "St-crank and 2-quotient-rank agree within srank classes", Some(30), None, counting::stctqr),
    spec("CHK-G2", "G2(x,√±1,q) = g(x,√±1,q)", None, Some(25), series::g2),
    spec("CHK-G3", "3-cores and the crank", Some(19), Some(40), series::g3),
    spec("CHK-5CORE", "5-core counts, θ and the α-vector sums", Some(104), None, cores::five_core),
    spec("CHK-ORBIT", "orbits of Ô and Ô_s on partitions of 5n+4", Some(49), None, cores::orbit),
    spec("CHK-ELEGANT", "srank of a partition from its 5-core and quotient", Some(29), None, bijections::elegant),
    spec("CHK-THM3", "5-core crank splits p_i(5n+4) into five classes", Some(49), None, counting::thm3),
    spec("CHK-REFINE", "5-core counts refined by srank", Some(100), None, cores::refine),
    spec("CHK-A50", "a_{5,0} in the four classes mod 4", Some(200), None, cores::a50),
    spec("CHK-THM4", "srank of t-cores from n-vectors", Some(30), None, bijections::thm4),
    spec("CHK-SRTQ", "srank from t-core and t-quotient", Some(24), None, bijections::srtq),
    spec("CHK-STRIP", "srank increments of cells and border strips", Some(18), None, bijections::strip),
    spec("CHK-BGRALT", "BG-rank from the 2-core", Some(25), None, counting::bgralt),
    spec("CHK-FJ", "BG-rank and 2-quotient-rank generating functions", None, Some(25), series::fj),
    spec("CHK-THM5", "2-quotient-rank splits BG-rank classes", Some(45), None, counting::thm5),
    spec("CHK-COR5", "BG-rank class congruences mod 5", Some(45), None, counting::cor5),
    spec("CHK-AB5JR", "5-cores by BG-rank off 5n+4: counterexample search", Some(60), None, crate::search::ab5jr_check),
    spec("CHK-AB5J4", "5-cores of 5n+4 by BG-rank ≡ 0 (mod 5)", Some(104), None, cores::ab5j4),
    spec("CHK-BIJ", "bijection round trips", Some(25), None, bijections::bij),
    spec("CHK-STRIPCORE", "hook stripping agrees with the abacus core", Some(18), None, bijections::stripcore),
];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|s| s.id.eq_ignore_ascii_case(id))
}

pub fn run_check(id: &str, cfg: &RunConfig) -> Result<CheckReport> {
    let spec = find_check(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    let ctx = Ctx {
        max_n: cfg.max_n.or(spec.max_n).unwrap_or(0),
        order: cfg.order.or(spec.order).unwrap_or(0),
        bound: cfg.bound,
    };
    let finding = (spec.run)(&ctx)?;
    let mut params: BTreeMap<String, Value> = BTreeMap::new();
    if spec.max_n.is_some() || cfg.max_n.is_some() {
        params.insert("max_n".into(), json!(ctx.max_n));
    }
    if spec.order.is_some() || cfg.order.is_some() {
        params.insert("order".into(), json!(ctx.order));
    }
    params.extend(finding.notes);
    Ok(CheckReport {
        id: spec.id.to_string(),
        params,
        status: finding.status,
        checked: finding.checked,
        witness: finding.witness,
    })
}

/// Every registry check at its default bounds, in registry order. A check
/// that errors (e.g. its range exceeds `bound`) is reported as a failure
/// carrying the error.
pub fn verify_all(bound: usize) -> Vec<CheckReport> {
    let cfg = RunConfig {
        bound,
        ..RunConfig::default()
    };
    REGISTRY
        .par_iter()
        .map(|spec| {
            run_check(spec.id, &cfg).unwrap_or_else(|e| CheckReport {
                id: spec.id.to_string(),
                params: BTreeMap::new(),
                status: Status::Fail,
                checked: 0,
                witness: Some(json!({ "error": e.to_string() })),
            })
        })
        .collect()
}
