use proptest::prelude::*;
use tcorelab_core::cores::phi1;
use tcorelab_core::enumerate::{enumerate_partitions_bounded, partition_counts};
use tcorelab_core::partition::{Cell, Partition};

fn all_upto(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(move |n| enumerate_partitions_bounded(n, max).unwrap())
}

fn partition_strategy(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_parts)
}

/// Removes `t`-strips in the order given by `pick` until none remain.
fn strip_with(p: &Partition, t: usize, pick: impl Fn(usize) -> usize) -> Partition {
    let mut cur = p.clone();
    loop {
        let r = cur.rim_hook_removals(t);
        if r.is_empty() {
            return cur;
        }
        let k = pick(r.len());
        cur = r[k].result.clone();
    }
}

#[test]
fn conjugation_is_an_involution() {
    for p in all_upto(30) {
        let c = p.conjugate();
        assert_eq!(c.weight(), p.weight());
        assert_eq!(c.conjugate(), p);
        assert_eq!(p.conjugate_odd_part_count(), c.odd_part_count());
    }
}

#[test]
fn residue_counts_sum_to_weight() {
    for p in all_upto(25) {
        for t in 2..=9 {
            let r = p.residue_counts(t).unwrap();
            assert_eq!(r.len(), t);
            assert_eq!(r.iter().sum::<usize>(), p.weight());
        }
    }
}

#[test]
fn strips_reattach_cell_by_cell() {
    for p in all_upto(16) {
        for len in 1..=p.weight() {
            for r in p.rim_hook_removals(len) {
                assert_eq!(r.result.weight() + len, p.weight());
                assert_eq!(r.cells.len(), len);
                assert!(r.cells.contains(&r.head));
                let mut cur = r.result.clone();
                for &c in &r.cells {
                    cur = cur.add_cell(c).unwrap();
                }
                assert_eq!(cur, p);
            }
        }
    }
}

#[test]
fn strip_removal_order_is_irrelevant() {
    for p in all_upto(18) {
        for t in [2, 3, 5] {
            let first = strip_with(&p, t, |_| 0);
            let last = strip_with(&p, t, |n| n - 1);
            let middle = strip_with(&p, t, |n| n / 2);
            assert_eq!(first, last);
            assert_eq!(first, middle);
            assert_eq!(first, p.strip_to_core(t).unwrap());
            assert!(first.is_core(t));
        }
    }
}

#[test]
fn enumeration_counts_match_recurrence() {
    let p = partition_counts(40).unwrap();
    for n in 0..=40 {
        let got = enumerate_partitions_bounded(n, 40).unwrap().count() as u64;
        assert_eq!(got, p[n], "n = {n}");
    }
}

#[test]
fn hook_lengths_are_strip_lengths() {
    for p in all_upto(14) {
        let mut hooks: Vec<usize> = p.cells().map(|c| p.hook_length(c).unwrap()).collect();
        hooks.sort_unstable();
        let mut strips = Vec::new();
        for len in 1..=p.weight() {
            strips.extend(std::iter::repeat_n(len, p.rim_hook_removals(len).len()));
        }
        assert_eq!(hooks, strips);
        assert_eq!(p.hook_length(Cell::new(p.len() + 1, 1)), None);
    }
}

proptest! {
    #[test]
    fn parse_display_round_trip(p in partition_strategy(12, 15)) {
        let text = p.to_csv();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn core_by_stripping_matches_abacus(p in partition_strategy(10, 12), t in 2usize..8) {
        prop_assert_eq!(p.strip_to_core(t).unwrap(), phi1(&p, t).unwrap().core);
    }

    #[test]
    fn durfee_square_is_self_conjugate(p in partition_strategy(12, 12)) {
        let d = p.durfee_size();
        prop_assert_eq!(d, p.conjugate().durfee_size());
        prop_assert!(p.part(d) >= d);
        prop_assert!(p.part(d + 1) <= d);
    }
}
