//! Truncated formal power series in `q` over exact coefficient rings:
//! big integers, sparse Laurent polynomials, `Z[ξ]` with `ξ` a primitive
//! fifth root of unity, and `Z[y]/(y⁴ - 1)`.

pub mod products;
pub mod ring;
pub mod series;

pub use products::{partition_series, poch_inf, theta_jtp, theta_jtp_product, triangular_sum, Product};
pub use ring::{Cyclotomic5, FourthRoot, Laurent, Monomial, Ring, NVARS, VAR_NAMES};
pub use series::Series;

pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QSeriesError {
    #[error("leading coefficient is not a unit")]
    NonUnit,
    #[error("product step must be positive")]
    ZeroStep,
    #[error("invalid progression {r} mod {m}")]
    BadProgression { m: usize, r: usize },
}

pub type Result<T> = std::result::Result<T, QSeriesError>;

/// Integer series.
pub type IntSeries = Series<BigInt>;
