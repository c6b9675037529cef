//! Exhaustive partition enumeration and partition counts.

use crate::error::{CoreError, Result};
use crate::partition::Partition;

/// Default largest `n` accepted by [`enumerate_partitions`].
pub const DEFAULT_MAX_N: usize = 60;

/// Partitions of `n` in reverse lexicographic order: `(n)`, `(n-1,1)`,
/// `(n-2,2)`, `(n-2,1,1)`, ..., `(1^n)`.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    current: Option<Vec<usize>>,
}

impl PartitionIter {
    fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        PartitionIter {
            current: Some(first),
        }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted(cur.clone());

        // rightmost part > 1 is decremented, the tail is refilled greedily
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rest = cur[k + 1..].iter().sum::<usize>() + 1;
            next.push(v);
            while rest > 0 {
                let part = rest.min(v);
                next.push(part);
                rest -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Enumerates the partitions of `n` subject to [`DEFAULT_MAX_N`].
pub fn enumerate_partitions(n: usize) -> Result<PartitionIter> {
    enumerate_partitions_bounded(n, DEFAULT_MAX_N)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<PartitionIter> {
    if n > bound {
        return Err(CoreError::BoundExceeded { n, bound });
    }
    Ok(PartitionIter::new(n))
}

/// p(n) for every n up to `max`, by Euler's pentagonal recurrence, with
/// overflow detection.
pub fn partition_counts(max: usize) -> Result<Vec<u64>> {
    let mut p: Vec<u64> = Vec::with_capacity(max + 1);
    p.push(1);
    for n in 1..=max {
        let mut acc: i128 = 0;
        for k in 1.. {
            let k = k as usize;
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2] as i128;
            }
        }
        let v = u64::try_from(acc).map_err(|_| CoreError::Overflow)?;
        p.push(v);
    }
    Ok(p)
}

pub fn partition_count(n: usize) -> Result<u64> {
    Ok(partition_counts(n)?[n])
}
