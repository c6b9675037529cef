//! Scalar partition statistics and the closed-form srank congruences.
//!
//! The empty partition is a valid input everywhere: its srank, Dyson rank,
//! crank, St-crank, 2-quotient-rank and BG-rank are all 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cores::{alpha_from_n, capital_phi, phi1, phi2, AlphaVector, CoreQuotient, NVector};
use crate::error::{CoreError, Result};
use crate::partition::Partition;

/// `O(π) - O(π')`, always even.
pub fn srank(p: &Partition) -> i64 {
    p.odd_part_count() as i64 - p.conjugate_odd_part_count() as i64
}

/// Largest part minus number of parts.
pub fn dyson_rank(p: &Partition) -> i64 {
    p.largest() as i64 - p.len() as i64
}

/// Crank: the largest part when there are no ones, otherwise
/// the number of parts larger than the number of ones, minus the number of
/// ones.
pub fn ag_crank(p: &Partition) -> i64 {
    let ones = p.frequency(1);
    if ones == 0 {
        p.largest() as i64
    } else {
        p.parts().iter().filter(|&&x| x > ones).count() as i64 - ones as i64
    }
}

/// Splits off the maximal even number of copies of each even part.
///
/// Returns `(π1, π2)` where `π1` has `⌊f_{2i}/2⌋` copies of `i` and `π2`
/// keeps the odd parts and at most one copy of each even part, so that
/// `|π| = 4|π1| + |π2|`.
pub fn bijection1(p: &Partition) -> (Partition, Partition) {
    let f = p.frequencies();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (v, &m) in f.iter().enumerate().skip(1) {
        if v % 2 == 0 {
            first.extend(std::iter::repeat_n(v / 2, m / 2));
            second.extend(std::iter::repeat_n(v, m % 2));
        } else {
            second.extend(std::iter::repeat_n(v, m));
        }
    }
    (Partition::from_parts(first), Partition::from_parts(second))
}

pub fn has_repeated_even_part(p: &Partition) -> bool {
    p.frequencies()
        .iter()
        .enumerate()
        .any(|(v, &m)| v > 0 && v % 2 == 0 && m > 1)
}

pub fn bijection1_inv(first: &Partition, second: &Partition) -> Result<Partition> {
    if has_repeated_even_part(second) {
        return Err(CoreError::RepeatedEvenPart(second.clone()));
    }
    let doubled = first.parts().iter().flat_map(|&x| [2 * x, 2 * x]);
    Ok(Partition::from_parts(
        second.parts().iter().copied().chain(doubled),
    ))
}

/// Type A: the even-pair extraction of Bijection 1 yields exactly `(1)`.
pub fn is_type_a(p: &Partition) -> bool {
    let f = p.frequencies();
    let f_at = |v: usize| f.get(v).copied().unwrap_or(0);
    matches!(f_at(2), 2 | 3) && (4..f.len()).step_by(2).all(|v| f_at(v) <= 1)
}

/// Type B: `(3,1)`, or weight other than 4 with `λ1 - λ2 ≥ 2`,
/// `λ1' - λ2' ≥ 2`, not `λ1 - 2 = λ2` even, and no repeated even part.
pub fn is_type_b(p: &Partition) -> bool {
    if p.parts() == [3, 1] {
        return true;
    }
    if p.weight() == 4 || p.is_empty() {
        return false;
    }
    let conj = p.conjugate();
    let (l1, l2) = (p.part(1), p.part(2));
    l1 >= l2 + 2
        && conj.part(1) >= conj.part(2) + 2
        && !(l1 - 2 == l2 && l2 % 2 == 0)
        && !has_repeated_even_part(p)
}

/// Maps a type-A partition to a type-B partition of the same weight and
/// srank.
pub fn bijection2(pa: &Partition) -> Result<Partition> {
    if !is_type_a(pa) {
        return Err(CoreError::NotTypeA(pa.clone()));
    }
    let mut f = pa.frequencies();
    let m = pa.largest();
    if m > 2 {
        f.resize(m + 3, 0);
        f[1] += 2;
        f[2] -= 2;
        f[m] -= 1;
        f[m + 2] += 1;
        Ok(from_frequencies(&f))
    } else if f[2] == 3 {
        Ok(from_frequencies(&[0, f[1] + 2, 0, 0, 1]))
    } else {
        Ok(from_frequencies(&[0, f[1] + 1, 0, 1]))
    }
}

pub fn bijection2_inv(pb: &Partition) -> Result<Partition> {
    let not_b = || CoreError::NotTypeB(pb.clone());
    if !is_type_b(pb) {
        return Err(not_b());
    }
    let mut f = pb.frequencies();
    let top = pb.largest();
    let ones = f[1];
    let candidate = if top == 3 && pb.len() == ones + 1 {
        from_frequencies(&[0, ones - 1, 2])
    } else if top == 4 && pb.len() == ones + 1 && ones >= 2 {
        from_frequencies(&[0, ones - 2, 3])
    } else if top >= 5 && ones >= 2 {
        let m = top - 2;
        f[1] -= 2;
        f[2] += 2;
        f[m] += 1;
        f[top] -= 1;
        from_frequencies(&f)
    } else {
        return Err(not_b());
    };
    match bijection2(&candidate) {
        Ok(image) if &image == pb => Ok(candidate),
        _ => Err(not_b()),
    }
}

fn from_frequencies(f: &[usize]) -> Partition {
    Partition::from_parts(
        f.iter()
            .enumerate()
            .flat_map(|(v, &m)| std::iter::repeat_n(v, m)),
    )
}

/// `crank(π1) + srank(π)/2 + Ψ(π)`, with `Ψ = 1` exactly on type B.
pub fn st_crank(p: &Partition) -> i64 {
    let (first, _) = bijection1(p);
    ag_crank(&first) + srank(p) / 2 + i64::from(is_type_b(p))
}

/// `ν(π̂0) - ν(π̂1)` for the 2-quotient.
pub fn two_quotient_rank(p: &Partition) -> i64 {
    let cq = phi1(p, 2).expect("t = 2 is valid");
    cq.quotient[0].len() as i64 - cq.quotient[1].len() as i64
}

/// `1 + Σ i·α_i (mod 5)`, for weights ≡ 4 (mod 5).
pub fn five_core_crank(p: &Partition) -> Result<i64> {
    let (alpha, _) = capital_phi(p)?;
    Ok(five_core_crank_alpha(&alpha))
}

pub fn five_core_crank_alpha(alpha: &AlphaVector) -> i64 {
    let a = alpha.coords();
    (1 + (0..5).map(|i| i as i64 * a[i]).sum::<i64>()).rem_euclid(5)
}

/// `2(1 + n0 - n1 - n2 + n3) (mod 5)`.
pub fn five_core_crank_nvector_form(n: &NVector) -> i64 {
    let c = n.coords();
    (2 * (1 + c[0] - c[1] - c[2] + c[3])).rem_euclid(5)
}

/// `2 + Σ_{i=-2}^{2} i·r_{2-i} (mod 5)`, residue counts of the 5-core taken
/// with indices mod 5.
pub fn five_core_crank_residue_form(core: &Partition) -> Result<i64> {
    let r = core.residue_counts(5)?;
    let s: i64 = (-2i64..=2)
        .map(|i| i * r[(2 - i).rem_euclid(5) as usize] as i64)
        .sum();
    Ok((2 + s).rem_euclid(5))
}

/// Alternating sum of part parities.
pub fn bg_rank(p: &Partition) -> i64 {
    p.parts()
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let par = (x % 2) as i64;
            if j % 2 == 0 {
                par
            } else {
                -par
            }
        })
        .sum()
}

/// `t²n³/3 + (ti - t(t-1)/2)n² + (i² - i(t-1) + t²/6 - t/2)n`, computed as
/// an exact division of `6g`.
pub fn g_tni(t: i64, n: i64, i: i64) -> i64 {
    let six_g = 2 * t * t * n * n * n
        + (6 * t * i - 3 * t * (t - 1)) * n * n
        + (6 * i * i - 6 * i * (t - 1) + t * t - 3 * t) * n;
    assert_eq!(six_g % 6, 0, "g({t},{n},{i}) is not an integer");
    six_g / 6
}

/// Closed form for `srank(φ2⁻¹(n)) (mod 4)`, by the class of `t` mod 4.
pub fn thm4_rhs(n: &NVector) -> i64 {
    let t = n.t() as i64;
    let c = n.coords();
    let s: i64 = match t % 4 {
        1 | 3 => {
            let a = (t % 4 == 3) as i64;
            (0..t)
                .map(|i| {
                    let x = c[i as usize] + (1 - 2 * a) * i + a;
                    x * x * x
                })
                .sum()
        }
        _ => {
            let a = (t % 4 == 2) as i64;
            (0..t)
                .map(|i| {
                    let x = c[i as usize];
                    a * x * x + (i * i + i) * x
                })
                .sum()
        }
    };
    s.rem_euclid(4)
}

/// `Σ g(t, n_i, i) (mod 4)`.
pub fn g_sum_rhs(n: &NVector) -> i64 {
    let t = n.t() as i64;
    n.coords()
        .iter()
        .enumerate()
        .map(|(i, &x)| g_tni(t, x, i as i64))
        .sum::<i64>()
        .rem_euclid(4)
}

/// Closed form for `srank(φ1⁻¹(cq)) (mod 4)` from the core and quotient.
pub fn srtq_rhs(cq: &CoreQuotient) -> Result<i64> {
    let t = cq.t as i64;
    let base = srank(&cq.core);
    let value = match t % 4 {
        0 | 2 => {
            let a = (t % 4 == 2) as i64;
            base + 2 * a * cq.quotient_weight() as i64
        }
        _ => {
            let a = (t % 4 == 3) as i64;
            let n = phi2(&cq.core, cq.t)?;
            let cross: i64 = cq
                .quotient
                .iter()
                .enumerate()
                .map(|(i, q)| (n.coords()[i] + i as i64 + a) * q.weight() as i64)
                .sum();
            let inner: i64 = cq.quotient.iter().map(srank).sum();
            base + 2 * cross + inner
        }
    };
    Ok(value.rem_euclid(4))
}

/// `Σ (λ_j² + (1 - 2j)λ_j) (mod 4)`.
pub fn srank_part_criterion(p: &Partition) -> i64 {
    p.parts()
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let (x, j) = (x as i64, j as i64 + 1);
            x * x + (1 - 2 * j) * x
        })
        .sum::<i64>()
        .rem_euclid(4)
}

/// `Σ α_i α_{i+1} (α_i - α_{i+1}) (mod 4)`, indices cyclic.
pub fn srank_alpha_form(alpha: &AlphaVector) -> i64 {
    let a = alpha.coords();
    (0..5)
        .map(|i| {
            let (x, y) = (a[i], a[(i + 1) % 5]);
            x * y * (x - y)
        })
        .sum::<i64>()
        .rem_euclid(4)
}

/// Alpha-vector form of the srank of a partition of weight ≡ 4 (mod 5).
pub fn srank_alpha_quotient_form(alpha: &AlphaVector, quotient: &[Partition]) -> i64 {
    let a = alpha.coords();
    let w: Vec<i64> = quotient.iter().map(|q| q.weight() as i64).collect();
    let cross = (a[0] + a[4]) * w[0]
        + (a[2] + a[3]) * w[1]
        + (a[1] + a[2]) * w[2]
        + (a[0] + a[1]) * w[3]
        + (a[3] + a[4]) * w[4];
    let inner: i64 = quotient.iter().map(srank).sum();
    (srank_alpha_form(alpha) + inner + 2 * cross).rem_euclid(4)
}

/// The 5-core crank of a 5-core from its n-vector.
pub fn five_core_crank_of_nvector(n: &NVector) -> Result<i64> {
    Ok(five_core_crank_alpha(&alpha_from_n(n)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    Srank,
    DysonRank,
    AgCrank,
    StCrank,
    TwoQuotientRank,
    FiveCoreCrank,
    BgRank,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Srank,
        Statistic::DysonRank,
        Statistic::AgCrank,
        Statistic::StCrank,
        Statistic::TwoQuotientRank,
        Statistic::FiveCoreCrank,
        Statistic::BgRank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Srank => "srank",
            Statistic::DysonRank => "dyson-rank",
            Statistic::AgCrank => "ag-crank",
            Statistic::StCrank => "st-crank",
            Statistic::TwoQuotientRank => "two-quotient-rank",
            Statistic::FiveCoreCrank => "five-core-crank",
            Statistic::BgRank => "bg-rank",
        }
    }

    pub fn evaluate(self, p: &Partition) -> Result<i64> {
        Ok(match self {
            Statistic::Srank => srank(p),
            Statistic::DysonRank => dyson_rank(p),
            Statistic::AgCrank => ag_crank(p),
            Statistic::StCrank => st_crank(p),
            Statistic::TwoQuotientRank => two_quotient_rank(p),
            Statistic::FiveCoreCrank => five_core_crank(p)?,
            Statistic::BgRank => bg_rank(p),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| CoreError::UnknownStatistic(s.to_string()))
    }
}

/// A named statistic value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatisticValue {
    pub name: Statistic,
    pub value: i64,
}
