use std::collections::BTreeSet;

use proptest::prelude::*;
use tcorelab::{class_counts, find_check, registry, run_check, Filter, RunConfig, Status, VerifyError};
use tcorelab_core::enumerate::{partition_counts, DEFAULT_MAX_N};
use tcorelab_core::Statistic;

fn cfg(max_n: Option<usize>, order: Option<usize>) -> RunConfig {
    RunConfig { max_n, order, bound: DEFAULT_MAX_N }
}

#[test]
fn ids_unique_and_prefixed() {
    let ids: BTreeSet<&str> = registry().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), registry().len());
    assert!(ids.iter().all(|id| id.starts_with("CHK-")));
    assert!(find_check("chk-thm1").is_some());
    assert!(matches!(run_check("CHK-NOPE", &cfg(None, None)), Err(VerifyError::UnknownCheck(_))));
}

#[test]
fn st_crank_classes_at_nine() {
    let zero = class_counts(9, Statistic::StCrank, 5, Some(Filter::SrankMod4(0)), DEFAULT_MAX_N).unwrap();
    assert!(zero.values().all(|&c| c == 4), "{zero:?}");
    let two = class_counts(9, Statistic::StCrank, 5, Some("srank2".parse().unwrap()), DEFAULT_MAX_N).unwrap();
    assert!(two.values().all(|&c| c == 2), "{two:?}");
    let empty = class_counts(0, Statistic::Srank, 4, None, DEFAULT_MAX_N).unwrap();
    assert_eq!(empty.into_iter().collect::<Vec<_>>(), [(0, 1), (1, 0), (2, 0), (3, 0)]);
    assert!("odd".parse::<Filter>().is_err());
}

#[test]
fn bound_exceeded_is_an_error() {
    let small = RunConfig { max_n: Some(49), order: None, bound: 20 };
    assert!(run_check("CHK-THM1", &small).is_err());
}

#[test]
fn explicit_bounds_are_echoed() {
    let r = run_check("CHK-RAM5", &cfg(Some(9), None)).unwrap();
    assert_eq!(r.params["max_n"], 9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn class_counts_partition_the_weight(n in 0usize..22, m in 1u32..8, which in 0usize..4) {
        let stat = [Statistic::Srank, Statistic::DysonRank, Statistic::AgCrank, Statistic::StCrank][which];
        let counts = class_counts(n, stat, m, None, DEFAULT_MAX_N).unwrap();
        prop_assert_eq!(counts.len(), m as usize);
        prop_assert_eq!(counts.values().sum::<u64>(), partition_counts(n).unwrap()[n]);
    }

    #[test]
    fn conjugation_negates_srank_classes(n in 0usize..20) {
        let c = class_counts(n, Statistic::Srank, 4, None, DEFAULT_MAX_N).unwrap();
        prop_assert_eq!(c[&1] + c[&3], 0);
    }

    #[test]
    fn checks_are_idempotent(which in 0usize..6, max_n in 4usize..16) {
        let id = ["CHK-RAM5", "CHK-THM1", "CHK-BGRALT", "CHK-SRTQ", "CHK-STRIP", "CHK-THM4"][which];
        let a = run_check(id, &cfg(Some(max_n), None)).unwrap();
        let b = run_check(id, &cfg(Some(max_n), None)).unwrap();
        prop_assert_eq!(a.status, Status::Pass);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn series_checks_pass_at_small_orders(which in 0usize..5, order in 1usize..14) {
        let id = ["CHK-CRANKGF", "CHK-RSGF", "CHK-P02PROD", "CHK-LEMMA1", "CHK-G2"][which];
        prop_assert_eq!(run_check(id, &cfg(None, Some(order))).unwrap().status, Status::Pass);
    }
}
