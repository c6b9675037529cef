use thiserror::Error;

use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("modulus t must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("enumeration of n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("cell ({}, {}) is not an addable corner of {partition}", .cell.row, .cell.col)]
    NotAddable { partition: Partition, cell: Cell },

    #[error("{partition} is not a {t}-core")]
    NotACore { partition: Partition, t: usize },

    #[error("n-vector {coords:?} does not sum to zero")]
    InvalidNVector { coords: Vec<i64> },

    #[error("n-vector {coords:?} has n.b = {dot} (mod 5), expected 4")]
    CongruenceViolation { coords: Vec<i64>, dot: i64 },

    #[error("alpha-vector {coords:?} sums to {sum}, expected 1")]
    InvalidAlpha { coords: [i64; 5], sum: i64 },

    #[error("weight {weight} is not congruent to 4 mod 5")]
    WrongResidue { weight: usize },

    #[error("{0} has a repeated even part")]
    RepeatedEvenPart(Partition),

    #[error("{0} is not of type A")]
    NotTypeA(Partition),

    #[error("{0} is not of type B")]
    NotTypeB(Partition),

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("quotient has {got} components, expected {t}")]
    QuotientLength { got: usize, t: usize },

    #[error("count overflowed 64 bits")]
    Overflow,

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
