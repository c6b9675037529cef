//! Orbit maps on partitions of `5n+4` and the n-vector maps on 5-cores.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cores::{capital_phi, capital_phi_inv, phi2, phi2_inv, AlphaVector, NVector};
use crate::enumerate::enumerate_partitions_bounded;
use crate::error::{CoreError, Result};
use crate::partition::Partition;
use crate::stats::{five_core_crank_alpha, srank};

/// `(α0,…,α4) ↦ (α4,α0,α1,α2,α3)`.
pub fn c1_shift(a: &AlphaVector) -> AlphaVector {
    a.rotate()
}

/// `(q0,q1,q2,q3,q4) ↦ (q4,q2,q3,q0,q1)`.
pub fn c2_shift(q: &[Partition; 5]) -> [Partition; 5] {
    [
        q[4].clone(),
        q[2].clone(),
        q[3].clone(),
        q[0].clone(),
        q[1].clone(),
    ]
}

/// Rotates the α-vector of the 5-core and keeps the 5-quotient.
pub fn orbit_map(p: &Partition) -> Result<Partition> {
    let (alpha, quotient) = capital_phi(p)?;
    capital_phi_inv(&c1_shift(&alpha), &quotient)
}

/// Rotates the α-vector and permutes the 5-quotient by [`c2_shift`].
pub fn orbit_map_s(p: &Partition) -> Result<Partition> {
    let (alpha, quotient) = capital_phi(p)?;
    let q: [Partition; 5] = quotient.try_into().expect("5-quotient has 5 slots");
    capital_phi_inv(&c1_shift(&alpha), &c2_shift(&q))
}

fn five_core_nvector(core: &Partition) -> Result<NVector> {
    phi2(core, 5)
}

/// 5-cores of `n` to 5-cores of `5n+4` with 5-core crank 0.
pub fn theta(core: &Partition) -> Result<Partition> {
    Ok(phi2_inv(&theta_nvector(&five_core_nvector(core)?)?))
}

/// [`theta`] on n-vectors.
pub fn theta_nvector(n: &NVector) -> Result<NVector> {
    let [_, n1, n2, n3, n4] = five_coords(n)?;
    NVector::new(vec![
        n1 + 2 * n2 + 2 * n4 + 1,
        -n1 - n2 + n3 + n4 + 1,
        2 * n1 + n2 + 2 * n3,
        -2 * n2 - 2 * n3 - n4 - 1,
        -2 * n1 - n3 - 2 * n4 - 1,
    ])
}

/// 5-cores of `n` to 5-cores of `4n+3` with srank ≡ 0 (mod 4).
pub fn map_4n_plus_3(core: &Partition) -> Result<Partition> {
    Ok(phi2_inv(&map_4n_plus_3_nvector(&five_core_nvector(core)?)?))
}

/// [`map_4n_plus_3`] on n-vectors.
pub fn map_4n_plus_3_nvector(n: &NVector) -> Result<NVector> {
    let [n0, n1, n2, n3, n4] = five_coords(n)?;
    NVector::new(vec![2 * n1, 1 + 2 * n4, 2 * n2, -1 + 2 * n0, 2 * n3])
}

fn five_coords(n: &NVector) -> Result<[i64; 5]> {
    <[i64; 5]>::try_from(n.coords()).map_err(|_| CoreError::InvalidModulus(n.t()))
}

/// Five partitions closed under an orbit map, indexed by 5-core crank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orbit {
    /// `members[k]` has 5-core crank `k`.
    pub members: [Partition; 5],
    /// Common srank mod 4, when all members agree.
    pub srank_mod4: Option<i64>,
}

impl Orbit {
    pub fn weight(&self) -> usize {
        self.members[0].weight()
    }

    /// Member with 5-core crank 0.
    pub fn representative(&self) -> &Partition {
        &self.members[0]
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.contains(p)
    }
}

impl Serialize for Orbit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Orbit", 3)?;
        st.serialize_field("members", &self.members)?;
        st.serialize_field("c5", &[0, 1, 2, 3, 4])?;
        st.serialize_field("srank_mod4", &self.srank_mod4)?;
        st.end()
    }
}

/// The orbit of `p` under [`orbit_map`] or, if `shifted`, [`orbit_map_s`].
pub fn orbit(p: &Partition, shifted: bool) -> Result<Orbit> {
    let step = if shifted { orbit_map_s } else { orbit_map };
    let mut slots: [Option<Partition>; 5] = Default::default();
    let mut cur = p.clone();
    for _ in 0..5 {
        let (alpha, _) = capital_phi(&cur)?;
        let c5 = five_core_crank_alpha(&alpha) as usize;
        debug_assert!(slots[c5].is_none(), "c5 repeats inside an orbit");
        let next = step(&cur)?;
        slots[c5] = Some(cur);
        cur = next;
    }
    debug_assert_eq!(&cur, p, "orbit map does not have order 5");
    let members = slots.map(|m| m.expect("c5 takes every residue"));
    let first = srank(&members[0]).rem_euclid(4);
    let srank_mod4 = members
        .iter()
        .all(|m| srank(m).rem_euclid(4) == first)
        .then_some(first);
    Ok(Orbit {
        members,
        srank_mod4,
    })
}

/// Splits all partitions of `weight` into orbits, ordered by representative
/// in reverse lexicographic order.
pub fn orbits_of_weight(weight: usize, shifted: bool, bound: usize) -> Result<Vec<Orbit>> {
    if weight % 5 != 4 {
        return Err(CoreError::WrongResidue { weight });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in enumerate_partitions_bounded(weight, bound)? {
        if seen.contains(&p) {
            continue;
        }
        let o = orbit(&p, shifted)?;
        seen.extend(o.members.iter().cloned());
        out.push(o);
    }
    out.sort_by(|a, b| b.representative().cmp(a.representative()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::{is_t_core, nvectors_up_to};
    use crate::stats::five_core_crank;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn c1_examples() {
        let a = AlphaVector::new([1, 0, 0, 0, 0]).unwrap();
        assert_eq!(c1_shift(&a).coords(), [0, 1, 0, 0, 0]);
        for coords in [[1, 0, 0, 0, 0], [2, -1, 3, 0, -3], [-2, 2, 1, -1, 1]] {
            let a = AlphaVector::new(coords).unwrap();
            let mut b = a;
            for _ in 0..5 {
                assert_eq!(b.q_form(), a.q_form());
                b = c1_shift(&b);
            }
            assert_eq!(b, a);
        }
    }

    #[test]
    fn c2_examples() {
        let q = [p(&[1]), p(&[2]), p(&[3]), p(&[4]), p(&[5])];
        assert_eq!(c2_shift(&q), [p(&[5]), p(&[3]), p(&[4]), p(&[1]), p(&[2])]);
        let mut r = q.clone();
        for _ in 0..5 {
            r = c2_shift(&r);
        }
        assert_eq!(r, q);
        let e: [Partition; 5] = Default::default();
        assert_eq!(c2_shift(&e), e);
    }

    #[test]
    fn orbit_map_examples() {
        assert_eq!(orbit_map(&p(&[5, 1, 1, 1, 1])).unwrap(), p(&[3, 3, 1, 1, 1]));
        assert_eq!(
            orbit_map_s(&p(&[2, 2, 1, 1, 1, 1, 1])).unwrap(),
            p(&[3, 2, 2, 2])
        );
        assert!(matches!(
            orbit_map(&p(&[5])),
            Err(CoreError::WrongResidue { weight: 5 })
        ));
    }

    #[test]
    fn order_five_on_nine() {
        for q in enumerate_partitions_bounded(9, 9).unwrap() {
            for step in [orbit_map, orbit_map_s] {
                let mut r = q.clone();
                for k in 1..=5 {
                    let c_prev = five_core_crank(&r).unwrap();
                    r = step(&r).unwrap();
                    assert_eq!(five_core_crank(&r).unwrap(), (c_prev + 1) % 5);
                    assert_eq!(r == q, k == 5);
                }
            }
            assert_eq!(
                srank(&orbit_map_s(&q).unwrap()).rem_euclid(4),
                srank(&q).rem_euclid(4)
            );
        }
    }

    #[test]
    fn nine_splits_into_six_orbits() {
        let orbits = orbits_of_weight(9, true, 9).unwrap();
        assert_eq!(orbits.len(), 6);
        assert!(orbits.iter().all(|o| o.srank_mod4.is_some()));
        let o = orbit(&p(&[3, 3, 3]), true).unwrap();
        assert!(o.contains(&p(&[1, 1, 1, 1, 1, 1, 1, 1, 1])));
        let json = serde_json::to_value(&o).unwrap();
        assert_eq!(json["c5"], serde_json::json!([0, 1, 2, 3, 4]));
        assert_eq!(json["srank_mod4"], 0);
    }

    #[test]
    fn theta_examples() {
        let img = theta(&Partition::empty()).unwrap();
        assert_eq!(phi2(&img, 5).unwrap().coords(), [1, 1, 0, -1, -1]);
        assert_eq!(img.weight(), 4);
        assert!(matches!(theta(&p(&[5])), Err(CoreError::NotACore { .. })));
        for n in nvectors_up_to(5, 20).unwrap() {
            let core = phi2_inv(&n);
            let img = theta(&core).unwrap();
            assert!(is_t_core(&img, 5));
            assert_eq!(img.weight(), 5 * core.weight() + 4);
            assert_eq!(five_core_crank(&img).unwrap(), 0);
            assert_eq!(srank(&img).rem_euclid(4), srank(&core).rem_euclid(4));
        }
    }

    #[test]
    fn map_4n_plus_3_examples() {
        let img = map_4n_plus_3(&Partition::empty()).unwrap();
        assert_eq!(phi2(&img, 5).unwrap().coords(), [0, 1, 0, -1, 0]);
        assert_eq!(img.weight(), 3);
        for n in nvectors_up_to(5, 25).unwrap() {
            let core = phi2_inv(&n);
            let img = map_4n_plus_3(&core).unwrap();
            assert_eq!(img.weight(), 4 * core.weight() + 3);
            let parity: Vec<i64> = phi2(&img, 5)
                .unwrap()
                .coords()
                .iter()
                .map(|x| x.rem_euclid(2))
                .collect();
            assert_eq!(parity, [0, 1, 0, 1, 0]);
            assert_eq!(srank(&img).rem_euclid(4), 0);
        }
    }
}
