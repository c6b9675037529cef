//! Check registry, table reproduction and counterexample search over the
//! partition and q-series engines.
//!
//! Every check is deterministic: parallel work is collected in input order
//! and the first failure in that order becomes the witness, so reports do
//! not depend on the thread count.

pub mod checks;
pub mod counts;
pub mod expr;
pub mod render;
pub mod report;
pub mod search;
pub mod tables;

pub use checks::{find_check, registry, run_check, verify_all, CheckSpec, RunConfig};
pub use counts::{class_counts, Filter};
pub use report::{Audit, CheckReport, Finding, Status};
pub use search::search_counterexample;

use tcorelab_core::enumerate::DEFAULT_MAX_N;
use tcorelab_core::CoreError;
use tcorelab_qseries::QSeriesError;

/// Environment variable overriding the global enumeration bound.
pub const MAX_N_ENV: &str = "TCORELAB_MAX_N";

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check id {0}")]
    UnknownCheck(String),
    #[error("unknown search family {0} (known: ab5jr)")]
    UnknownFamily(String),
    #[error("unknown series expression {0}")]
    UnknownExpr(String),
    #[error("unknown table {0} (known: table1, table2)")]
    UnknownTable(String),
    #[error("unknown filter {0}")]
    UnknownFilter(String),
    #[error("{var} must be a nonnegative integer, got {value:?}")]
    BadEnv { var: &'static str, value: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Series(#[from] QSeriesError),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

/// The enumeration bound: `TCORELAB_MAX_N` when set, else the default 60.
pub fn enumeration_bound_from_env() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| VerifyError::BadEnv {
            var: MAX_N_ENV,
            value: v,
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}
