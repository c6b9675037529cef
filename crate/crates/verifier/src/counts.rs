//! Exhaustive tallies over the partitions of `n`.

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::stats::{has_repeated_even_part, is_type_a, is_type_b, srank};
use tcorelab_core::{Partition, Statistic};
use tcorelab_qseries::{Ring, Series};

use crate::{Result, VerifyError};

/// Named restrictions for [`class_counts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    /// srank ≡ k (mod 4).
    SrankMod4(i64),
    FiveCore,
    TypeA,
    TypeB,
    /// No even part occurs twice.
    DistinctEven,
}

impl Filter {
    pub const NAMES: [&'static str; 6] = ["srank0", "srank2", "five-core", "type-a", "type-b", "distinct-even"];

    pub fn accepts(self, p: &Partition) -> bool {
        match self {
            Filter::SrankMod4(k) => srank(p).rem_euclid(4) == k,
            Filter::FiveCore => p.is_core(5),
            Filter::TypeA => is_type_a(p),
            Filter::TypeB => is_type_b(p),
            Filter::DistinctEven => !has_repeated_even_part(p),
        }
    }
}

impl FromStr for Filter {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "srank0" => Filter::SrankMod4(0),
            "srank2" => Filter::SrankMod4(2),
            "five-core" => Filter::FiveCore,
            "type-a" => Filter::TypeA,
            "type-b" => Filter::TypeB,
            "distinct-even" => Filter::DistinctEven,
            _ => return Err(VerifyError::UnknownFilter(s.to_string())),
        })
    }
}

/// Number of partitions of `n` (passing `filter`) in each residue class of
/// `statistic` mod `modulus`. Every residue `0..modulus` is present.
///
/// The empty partition has every statistic equal to 0, the 5-core crank
/// included.
pub fn class_counts(
    n: usize,
    statistic: Statistic,
    modulus: u32,
    filter: Option<Filter>,
    bound: usize,
) -> Result<BTreeMap<i64, u64>> {
    if modulus == 0 {
        return Err(VerifyError::Core(tcorelab_core::CoreError::InvalidModulus(0)));
    }
    let m = i64::from(modulus);
    let mut counts: BTreeMap<i64, u64> = (0..m).map(|k| (k, 0)).collect();
    for p in enumerate_partitions_bounded(n, bound)? {
        if filter.is_some_and(|f| !f.accepts(&p)) {
            continue;
        }
        let v = if p.is_empty() { 0 } else { statistic.evaluate(&p)? };
        *counts.get_mut(&v.rem_euclid(m)).expect("all residues present") += 1;
    }
    Ok(counts)
}

/// `key` may emit any number of keys per partition; each is counted once.
pub fn tally<K, F>(n: usize, bound: usize, key: &F) -> Result<BTreeMap<K, u64>>
where
    K: Ord,
    F: Fn(&Partition, &mut Vec<K>) -> Result<()>,
{
    let mut out = BTreeMap::new();
    let mut keys = Vec::new();
    for p in enumerate_partitions_bounded(n, bound)? {
        keys.clear();
        key(&p, &mut keys)?;
        for k in keys.drain(..) {
            *out.entry(k).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// [`tally`] for every weight in `weights`, in parallel, in input order.
pub fn tally_weights<K, F>(weights: &[usize], bound: usize, key: F) -> Result<Vec<BTreeMap<K, u64>>>
where
    K: Ord + Send,
    F: Fn(&Partition, &mut Vec<K>) -> Result<()> + Sync,
{
    weights.par_iter().map(|&n| tally(n, bound, &key)).collect()
}

/// Turns per-weight tallies into a series: the coefficient of `q^n` is
/// `Σ count · monomial(key)`.
pub fn tally_series<K, R: Ring>(tallies: &[BTreeMap<K, u64>], monomial: impl Fn(&K) -> R) -> Series<R> {
    Series::from_coeffs(
        tallies
            .iter()
            .map(|t| {
                t.iter().fold(R::zero(), |acc, (k, &c)| {
                    acc.plus(&monomial(k).scaled(i64::try_from(c).expect("count fits in i64")))
                })
            })
            .collect(),
    )
}

/// Weights `m·k + r` not exceeding `max`.
pub fn progression(m: usize, r: usize, max: usize) -> Vec<usize> {
    (0..).map(|k| m * k + r).take_while(|&w| w <= max).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use tcorelab_core::enumerate::DEFAULT_MAX_N;

    #[test]
    fn table_one_class_sizes() {
        for (filter, size) in [(Filter::SrankMod4(0), 4), (Filter::SrankMod4(2), 2)] {
            let c = class_counts(9, Statistic::StCrank, 5, Some(filter), DEFAULT_MAX_N).unwrap();
            assert!(c.values().all(|&v| v == size), "{c:?}");
        }
    }

    #[test]
    fn weight_zero() {
        for st in Statistic::ALL {
            let c = class_counts(0, st, 5, None, DEFAULT_MAX_N).unwrap();
            assert_eq!(c, BTreeMap::from([(0, 1), (1, 0), (2, 0), (3, 0), (4, 0)]));
        }
    }

    #[test]
    fn errors() {
        assert!("nope".parse::<Filter>().is_err());
        assert!(class_counts(61, Statistic::Srank, 2, None, DEFAULT_MAX_N).is_err());
        assert!(class_counts(8, Statistic::FiveCoreCrank, 5, None, DEFAULT_MAX_N).is_err());
        for name in Filter::NAMES {
            assert!(name.parse::<Filter>().is_ok());
        }
    }

    #[test]
    fn progressions() {
        assert_eq!(progression(5, 4, 20), [4, 9, 14, 19]);
        assert_eq!(progression(5, 4, 3), Vec::<usize>::new());
    }
}
