//! Partitions, t-cores and t-quotients, and the statistics that refine the
//! Ramanujan-type congruences through them.

pub mod cores;
pub mod enumerate;
pub mod error;
pub mod orbits;
pub mod partition;
pub mod stats;

pub use cores::{AlphaVector, CoreQuotient, NVector};
pub use error::{CoreError, Result};
pub use orbits::Orbit;
pub use partition::{Cell, Partition, StripRemoval};
pub use stats::Statistic;
