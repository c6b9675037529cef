use std::collections::BTreeSet;

use tcorelab_core::cores::{count_t_cores, nvectors_up_to, phi2_inv};
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::orbits::{map_4n_plus_3, orbit, orbit_map, orbit_map_s, orbits_of_weight, theta};
use tcorelab_core::partition::Partition;
use tcorelab_core::stats::{five_core_crank, srank};

#[test]
fn orbit_maps_are_order_five_bijections() {
    for w in [4, 9, 14, 19, 24] {
        let all: Vec<Partition> = enumerate_partitions_bounded(w, 24).unwrap().collect();
        for step in [orbit_map, orbit_map_s] {
            let images: BTreeSet<Partition> = all.iter().map(|p| step(p).unwrap()).collect();
            assert_eq!(images.len(), all.len());
            for p in &all {
                let mut q = p.clone();
                for _ in 0..5 {
                    let c = five_core_crank(&q).unwrap();
                    q = step(&q).unwrap();
                    assert_eq!(q.weight(), w);
                    assert_eq!(five_core_crank(&q).unwrap(), (c + 1) % 5);
                }
                assert_eq!(&q, p);
            }
        }
    }
}

#[test]
fn shifted_orbits_are_srank_homogeneous() {
    for w in [4, 9, 14, 19, 24] {
        let orbits = orbits_of_weight(w, true, 24).unwrap();
        let covered: usize = orbits.iter().map(|o| o.members.len()).sum();
        assert_eq!(covered, enumerate_partitions_bounded(w, 24).unwrap().count());
        for o in &orbits {
            let k = o.srank_mod4.expect("homogeneous");
            for m in &o.members {
                assert_eq!(srank(m).rem_euclid(4), k);
            }
            assert_eq!(&orbit(&o.members[3], true).unwrap(), o);
        }
    }
}

#[test]
fn five_cores_equidistribute_over_c5() {
    for n in 0..=9 {
        let w = 5 * n + 4;
        let mut counts = [0u64; 5];
        for v in nvectors_up_to(5, w).unwrap() {
            let c = phi2_inv(&v);
            if c.weight() == w {
                counts[five_core_crank(&c).unwrap() as usize] += 1;
            }
        }
        let a = count_t_cores(n, 5).unwrap();
        assert_eq!(counts, [a; 5], "weight {w}");
    }
}

#[test]
fn theta_is_a_bijection_onto_crank_zero_cores() {
    for n in 0..=20 {
        let sources: Vec<Partition> = nvectors_up_to(5, n)
            .unwrap()
            .iter()
            .map(phi2_inv)
            .filter(|c| c.weight() == n)
            .collect();
        let images: BTreeSet<Partition> = sources.iter().map(|c| theta(c).unwrap()).collect();
        assert_eq!(images.len(), sources.len());
        let w = 5 * n + 4;
        let targets: BTreeSet<Partition> = nvectors_up_to(5, w)
            .unwrap()
            .iter()
            .map(phi2_inv)
            .filter(|c| c.weight() == w && five_core_crank(c).unwrap() == 0)
            .collect();
        assert_eq!(images, targets, "n = {n}");
    }
}

#[test]
fn map_4n_plus_3_is_a_bijection_onto_srank_zero_cores() {
    for n in 0..=25 {
        let sources: Vec<Partition> = nvectors_up_to(5, n)
            .unwrap()
            .iter()
            .map(phi2_inv)
            .filter(|c| c.weight() == n)
            .collect();
        let images: BTreeSet<Partition> =
            sources.iter().map(|c| map_4n_plus_3(c).unwrap()).collect();
        assert_eq!(images.len(), sources.len());
        let w = 4 * n + 3;
        let targets: BTreeSet<Partition> = nvectors_up_to(5, w)
            .unwrap()
            .iter()
            .map(phi2_inv)
            .filter(|c| c.weight() == w && srank(c).rem_euclid(4) == 0)
            .collect();
        assert_eq!(images, targets, "n = {n}");
    }
}
