use proptest::prelude::*;
use tcorelab_core::cores::{
    alpha_from_n, capital_phi, capital_phi_inv, count_t_cores, is_t_core, n_from_alpha,
    nvectors_up_to, phi1, phi1_inv, phi2, phi2_inv, quotient_growth, words, AlphaVector,
    CoreQuotient, NVector,
};
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::partition::Partition;

fn all_upto(max: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(move |n| enumerate_partitions_bounded(n, max).unwrap())
}

fn t_cores_upto(t: usize, max: usize) -> Vec<Partition> {
    nvectors_up_to(t, max).unwrap().iter().map(phi2_inv).collect()
}

#[test]
fn phi1_round_trip_and_weight() {
    for p in all_upto(20) {
        for t in [2, 3, 4, 5, 7] {
            let cq = phi1(&p, t).unwrap();
            assert!(is_t_core(&cq.core, t));
            assert_eq!(cq.weight(), p.weight());
            assert_eq!(cq.core.weight() + t * cq.quotient_weight(), p.weight());
            assert_eq!(phi1_inv(&cq).unwrap(), p);
        }
    }
}

#[test]
fn abacus_and_hook_core_tests_agree() {
    for p in all_upto(18) {
        for t in 2..=6 {
            assert_eq!(is_t_core(&p, t), p.is_core(t));
            assert_eq!(words(&p, t).unwrap().is_core_form(), p.is_core(t));
        }
    }
}

#[test]
fn phi2_round_trip_and_weight() {
    for t in 2..=7 {
        let cores = t_cores_upto(t, 25);
        for c in &cores {
            let n = phi2(c, t).unwrap();
            assert_eq!(&phi2_inv(&n), c);
            assert_eq!(n.weight(), c.weight() as i64);
            // n-vector of the conjugate is reversed and negated
            assert_eq!(phi2(&c.conjugate(), t).unwrap(), n.conjugate());
        }
        let direct: usize = all_upto(25).filter(|p| p.is_core(t)).count();
        assert_eq!(cores.len(), direct, "t = {t}");
    }
}

#[test]
fn word_form_marks_the_n_vector() {
    // the last exposed region of color i is n_i
    for t in 2..=6 {
        for c in t_cores_upto(t, 20) {
            let n = phi2(&c, t).unwrap();
            let w = words(&c, t).unwrap();
            for i in 0..t {
                assert_eq!(w.last_exposed(i), Some(n.coords()[i]), "{c} t={t}");
            }
        }
    }
}

#[test]
fn core_counts_three_ways() {
    for t in 2..=7 {
        let mut by_enumeration = vec![0u64; 31];
        for p in all_upto(30).filter(|p| is_t_core(p, t)) {
            by_enumeration[p.weight()] += 1;
        }
        for (n, &expected) in by_enumeration.iter().enumerate() {
            assert_eq!(count_t_cores(n, t).unwrap(), expected, "a_{t}({n})");
        }
    }
}

#[test]
fn alpha_vectors_biject_with_five_cores_of_4_mod_5() {
    for c in t_cores_upto(5, 49) {
        let n = phi2(&c, 5).unwrap();
        match alpha_from_n(&n) {
            Ok(a) => {
                assert_eq!(c.weight() % 5, 4);
                assert_eq!(n_from_alpha(&a), n);
                assert_eq!(a.q_form() as usize, (c.weight() + 1) / 5);
            }
            Err(_) => assert_ne!(c.weight() % 5, 4),
        }
    }
}

#[test]
fn growth_strips_have_predicted_heads() {
    // the k-th strip grown on slot i has head content t(n_i + k - 1) + i
    for p in all_upto(18) {
        for t in [3, 5] {
            let cq = phi1(&p, t).unwrap();
            let n = phi2(&cq.core, t).unwrap();
            for i in 0..t {
                for (k, step) in quotient_growth(&cq, i).unwrap().iter().enumerate() {
                    let expected = t as i64 * (n.coords()[i] + k as i64) + i as i64;
                    assert_eq!(step.head.content(), expected);
                    let (x, y) = (step.head.row as i64, step.head.col as i64);
                    assert_eq!(
                        (x + y).rem_euclid(2),
                        (n.coords()[i] + i as i64 + k as i64).rem_euclid(2)
                    );
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn capital_phi_round_trip(
        parts in prop::collection::vec(1usize..12, 0..12),
        pad in 0usize..5,
    ) {
        let mut parts = parts;
        let w: usize = parts.iter().sum();
        let need = (4 + 5 * 5 - w % 5) % 5 + 5 * pad;
        parts.extend(std::iter::repeat_n(1, need));
        let p = Partition::from_parts(parts);
        let (alpha, q) = capital_phi(&p).unwrap();
        prop_assert_eq!(alpha.coords().iter().sum::<i64>(), 1);
        prop_assert_eq!(capital_phi_inv(&alpha, &q).unwrap(), p);
    }

    #[test]
    fn alpha_inverse_is_exact(a in prop::array::uniform4(-6i64..6)) {
        let coords = [a[0], a[1], a[2], a[3], 1 - a.iter().sum::<i64>()];
        let alpha = AlphaVector::new(coords).unwrap();
        let n = n_from_alpha(&alpha);
        prop_assert_eq!(n.dot_b().rem_euclid(5), 4);
        prop_assert_eq!(alpha_from_n(&n).unwrap(), alpha);
    }

    #[test]
    fn nvector_conjugation(n in prop::collection::vec(-4i64..4, 1..7), t in 2usize..8) {
        let mut c: Vec<i64> = n.into_iter().take(t - 1).collect();
        c.resize(t - 1, 0);
        c.push(-c.iter().sum::<i64>());
        let n = NVector::new(c).unwrap();
        let core = phi2_inv(&n);
        prop_assert_eq!(core.weight() as i64, n.weight());
        prop_assert_eq!(phi2(&core.conjugate(), t).unwrap(), n.conjugate());
    }

    #[test]
    fn phi1_inv_rejects_non_cores(t in 2usize..6) {
        let bad = CoreQuotient {
            t,
            core: Partition::from_parts([t]),
            quotient: vec![Partition::empty(); t],
        };
        prop_assert!(phi1_inv(&bad).is_err());
    }
}
