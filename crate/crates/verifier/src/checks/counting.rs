//! Class-size identities checked by exhaustive enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;
use tcorelab_core::cores::{phi1, phi2};
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::stats::{bg_rank, five_core_crank, srank, st_crank, two_quotient_rank};
use tcorelab_core::{Partition, Statistic};
use tcorelab_qseries::partition_series;

use super::Ctx;
use crate::counts::{class_counts, progression, tally_weights};
use crate::report::{Audit, Finding};
use crate::Result;

/// Whether the BG-rank class `j` is claimed equidistributed on weights
/// `≡ r (mod 5)`.
pub(crate) fn bg_class_applies(r: usize, j: i64) -> bool {
    let jm = j.rem_euclid(5);
    match r % 5 {
        0 => jm == 1 || jm == 2,
        1 => !(jm == 1 || jm == 2),
        2 => !(jm == 0 || jm == 3),
        3 => jm == 0 || jm == 3,
        _ => true,
    }
}

/// Every residue class of `counts` holds exactly `total / m` members.
fn equinumerous(a: &mut Audit, claim: &str, weight: usize, counts: &BTreeMap<i64, u64>, m: u64) {
    let total: u64 = counts.values().sum();
    for (&k, &c) in counts {
        a.check(c * m == total, || {
            json!({ "claim": claim, "weight": weight, "residue": k, "count": c, "total": total })
        });
    }
}

fn ramanujan(ctx: &Ctx, m: usize, r: usize) -> Result<Finding> {
    let weights = progression(m, r, ctx.max_n);
    let counts: Vec<u64> = weights
        .par_iter()
        .map(|&w| Ok(enumerate_partitions_bounded(w, ctx.bound)?.count() as u64))
        .collect::<Result<_>>()?;
    let series = partition_series::<BigInt>(ctx.order);
    let mut a = Audit::new();
    for (&w, &c) in weights.iter().zip(&counts) {
        a.check(c % m as u64 == 0, || json!({ "weight": w, "p": c }));
        if w < series.order() {
            let coeff = series.coeff(w).to_u64();
            a.check(coeff == Some(c), || {
                json!({ "claim": "enumeration = series coefficient", "weight": w, "enumerated": c })
            });
        }
    }
    let sifted = series.sift(m, r)?;
    let modulus = BigInt::from(m);
    for (k, c) in sifted.coeffs().iter().enumerate() {
        a.check((c % &modulus) == BigInt::from(0), || {
            json!({ "claim": "sifted coefficient divisible", "weight": m * k + r, "p": c.to_string() })
        });
    }
    Ok(a.finish())
}

pub fn ram5(ctx: &Ctx) -> Result<Finding> {
    ramanujan(ctx, 5, 4)
}

pub fn ram7(ctx: &Ctx) -> Result<Finding> {
    ramanujan(ctx, 7, 5)
}

pub fn ram11(ctx: &Ctx) -> Result<Finding> {
    ramanujan(ctx, 11, 6)
}

fn statistic_splits(ctx: &Ctx, statistic: Statistic, progressions: &[(usize, usize)]) -> Result<Finding> {
    let jobs: Vec<(usize, usize)> = progressions
        .iter()
        .flat_map(|&(m, r)| progression(m, r, ctx.max_n).into_iter().map(move |w| (m, w)))
        .collect();
    let counts: Vec<BTreeMap<i64, u64>> = jobs
        .par_iter()
        .map(|&(m, w)| class_counts(w, statistic, m as u32, None, ctx.bound))
        .collect::<Result<_>>()?;
    let mut a = Audit::new();
    for (&(m, w), c) in jobs.iter().zip(&counts) {
        equinumerous(&mut a, statistic.name(), w, c, m as u64);
    }
    Ok(a.finish())
}

pub fn dyson(ctx: &Ctx) -> Result<Finding> {
    statistic_splits(ctx, Statistic::DysonRank, &[(5, 4), (7, 5)])
}

pub fn ag(ctx: &Ctx) -> Result<Finding> {
    statistic_splits(ctx, Statistic::AgCrank, &[(5, 4), (7, 5), (11, 6)])
}

pub fn gref5(ctx: &Ctx) -> Result<Finding> {
    let weights = progression(5, 4, ctx.max_n);
    let tallies = tally_weights(&weights, ctx.bound, |p, keys| {
        keys.push(Statistic::AgCrank.evaluate(p)?.rem_euclid(10));
        Ok(())
    })?;
    let mut a = Audit::new();
    for (&w, t) in weights.iter().zip(&tallies) {
        let c10 = |k: i64| t.get(&k).copied().unwrap_or(0);
        for alpha in 0..2 {
            let c2: u64 = (0..5).map(|k| c10(2 * k + alpha)).sum();
            a.check(c2.is_multiple_of(5), || json!({ "claim": "M(α,2,n) ≡ 0 (mod 5)", "weight": w, "alpha": alpha, "count": c2 }));
            for k in 0..5 {
                let c = c10(2 * k + alpha);
                a.check(5 * c == c2, || {
                    json!({ "claim": "5 M(2k+α,10,n) = M(α,2,n)", "weight": w, "k": k, "alpha": alpha, "count": c, "total": c2 })
                });
            }
        }
    }
    Ok(a.finish())
}

pub fn andrews(ctx: &Ctx) -> Result<Finding> {
    let weights = progression(5, 4, ctx.max_n);
    let counts: Vec<BTreeMap<i64, u64>> = weights
        .par_iter()
        .map(|&w| class_counts(w, Statistic::Srank, 4, None, ctx.bound))
        .collect::<Result<_>>()?;
    let mut a = Audit::new();
    for (&w, c) in weights.iter().zip(&counts) {
        let (p0, p2) = (c[&0], c[&2]);
        a.check(c[&1] == 0 && c[&3] == 0, || json!({ "claim": "srank even", "weight": w, "counts": c }));
        a.check(p0 % 5 == 0, || json!({ "claim": "p0 ≡ 0 (mod 5)", "weight": w, "p0": p0 }));
        a.check(p2 % 5 == 0, || json!({ "claim": "p2 ≡ 0 (mod 5)", "weight": w, "p2": p2 }));
        a.check(p2 % 10 == 0, || json!({ "claim": "p2 ≡ 0 (mod 10)", "weight": w, "p2": p2 }));
    }
    Ok(a.finish())
}

/// Five equal classes of `stat mod 5` inside each srank class mod 4, on
/// every weight `5n+4 ≤ max_n`.
fn srank_class_split(
    ctx: &Ctx,
    claim: &str,
    stat: impl Fn(&Partition) -> Result<i64> + Sync,
    extra: impl Fn(&Partition, &mut Audit) + Sync,
) -> Result<Audit> {
    let weights = progression(5, 4, ctx.max_n);
    let per_weight: Vec<(BTreeMap<(i64, i64), u64>, Audit)> = weights
        .par_iter()
        .map(|&w| {
            let mut counts = BTreeMap::new();
            let mut a = Audit::new();
            for p in enumerate_partitions_bounded(w, ctx.bound)? {
                extra(&p, &mut a);
                *counts.entry((srank(&p).rem_euclid(4), stat(&p)?.rem_euclid(5))).or_insert(0u64) += 1;
            }
            Ok((counts, a))
        })
        .collect::<Result<_>>()?;
    let mut audit = Audit::new();
    for (&w, (counts, a)) in weights.iter().zip(per_weight) {
        audit = audit.merge(a);
        for i in [1, 3] {
            let odd: u64 = (0..5).map(|k| counts.get(&(i, k)).copied().unwrap_or(0)).sum();
            audit.check(odd == 0, || json!({ "claim": "srank even", "weight": w, "srank_class": i }));
        }
        for i in [0, 2] {
            let class: BTreeMap<i64, u64> = (0..5).map(|k| (k, counts.get(&(i, k)).copied().unwrap_or(0))).collect();
            let total: u64 = class.values().sum();
            for (&k, &c) in &class {
                audit.check(5 * c == total, || {
                    json!({ "claim": claim, "weight": w, "srank_class": i, "residue": k, "count": c, "p_i": total })
                });
            }
        }
    }
    Ok(audit)
}

pub fn thm1(ctx: &Ctx) -> Result<Finding> {
    Ok(srank_class_split(ctx, "5 P_i(k,5,n) = p_i(n), St-crank", |p| Ok(st_crank(p)), |_, _| {})?.finish())
}

pub fn thm2(ctx: &Ctx) -> Result<Finding> {
    let audit = srank_class_split(
        ctx,
        "5 classes of 2-quotient-rank within srank classes",
        |p| Ok(two_quotient_rank(p)),
        |p, a| {
            let s = srank(p);
            match phi1(p, 2) {
                Ok(cq) => {
                    let core_w = cq.core.weight() as i64;
                    let qw = cq.quotient_weight() as i64;
                    a.check((s - (p.weight() as i64 - core_w)).rem_euclid(4) == 0, || {
                        json!({ "claim": "srank ≡ |π| - |2-core| (mod 4)", "partition": p.to_csv() })
                    });
                    a.check((s - 2 * qw).rem_euclid(4) == 0, || {
                        json!({ "claim": "srank ≡ 2|2-quotient| (mod 4)", "partition": p.to_csv() })
                    });
                }
                Err(e) => a.check(false, || json!({ "partition": p.to_csv(), "error": e.to_string() })),
            }
        },
    )?;
    Ok(audit.finish())
}

pub fn thm3(ctx: &Ctx) -> Result<Finding> {
    let mut audit = srank_class_split(ctx, "5 classes of 5-core crank within srank classes", |p| Ok(five_core_crank(p)?), |_, _| {})?;
    let rendered = crate::tables::table2_text(ctx.bound)?;
    audit.check(rendered == crate::tables::TABLE2_GOLDEN, || {
        json!({ "claim": "Table 2 matches the golden file", "rendered": rendered })
    });
    Ok(audit.finish())
}

/// Joint distribution `(srank mod 4, value)` of two statistics agrees on
/// every weight `≤ max_n`.
pub fn stctqr(ctx: &Ctx) -> Result<Finding> {
    let weights: Vec<usize> = (0..=ctx.max_n).collect();
    let tallies = tally_weights(&weights, ctx.bound, |p, keys| {
        let i = srank(p).rem_euclid(4);
        keys.push((0u8, i, if p.is_empty() { 0 } else { st_crank(p) }));
        keys.push((1u8, i, two_quotient_rank(p)));
        Ok(())
    })?;
    let mut a = Audit::new();
    for (&w, t) in weights.iter().zip(&tallies) {
        let side = |s: u8| -> BTreeMap<(i64, i64), u64> {
            t.iter().filter(|(k, _)| k.0 == s).map(|(k, &c)| ((k.1, k.2), c)).collect()
        };
        let (stc, tqr) = (side(0), side(1));
        for key in stc.keys().chain(tqr.keys()) {
            let (l, r) = (stc.get(key).copied().unwrap_or(0), tqr.get(key).copied().unwrap_or(0));
            a.check(l == r, || {
                json!({ "claim": "p~_i(m,n) = p*_i(m,n)", "weight": w, "srank_class": key.0, "m": key.1, "st_crank_count": l, "two_quotient_rank_count": r })
            });
        }
    }
    Ok(a.finish())
}

pub fn bgralt(ctx: &Ctx) -> Result<Finding> {
    let weights: Vec<usize> = (0..=ctx.max_n).collect();
    let audits: Vec<Audit> = weights
        .par_iter()
        .map(|&w| {
            let mut a = Audit::new();
            for p in enumerate_partitions_bounded(w, ctx.bound)? {
                let cq = phi1(&p, 2)?;
                let n0 = phi2(&cq.core, 2)?.coords()[0];
                let r = p.residue_counts(2)?;
                let bg = bg_rank(&p);
                a.check(bg == n0 && n0 == r[0] as i64 - r[1] as i64, || {
                    json!({ "claim": "bg-rank = n0 = r0 - r1", "partition": p.to_csv(), "bg_rank": bg, "n0": n0, "r": r })
                });
                let rhs = w as i64 - n0 * (2 * n0 - 1);
                a.check((srank(&p) - rhs).rem_euclid(4) == 0, || {
                    json!({ "claim": "srank ≡ |π| - n0(2n0-1) (mod 4)", "partition": p.to_csv() })
                });
            }
            Ok(a)
        })
        .collect::<Result<_>>()?;
    Ok(audits.into_iter().collect::<Audit>().finish())
}

/// Per weight `≤ max_n`: counts keyed by `(bg-rank, 2-quotient-rank mod 5)`.
fn bg_tallies(ctx: &Ctx) -> Result<Vec<BTreeMap<(i64, i64), u64>>> {
    let weights: Vec<usize> = (0..=ctx.max_n).collect();
    tally_weights(&weights, ctx.bound, |p, keys| {
        keys.push((bg_rank(p), two_quotient_rank(p).rem_euclid(5)));
        Ok(())
    })
}

fn by_bg_rank(t: &BTreeMap<(i64, i64), u64>) -> BTreeMap<i64, [u64; 5]> {
    let mut out: BTreeMap<i64, [u64; 5]> = BTreeMap::new();
    for (&(j, m), &c) in t {
        out.entry(j).or_default()[m as usize] += c;
    }
    out
}

pub fn thm5(ctx: &Ctx) -> Result<Finding> {
    let tallies = bg_tallies(ctx)?;
    let mut a = Audit::new();
    let mut applied = 0u64;
    for (w, t) in tallies.iter().enumerate() {
        for (j, classes) in by_bg_rank(t) {
            if !bg_class_applies(w % 5, j) {
                continue;
            }
            applied += 1;
            let total: u64 = classes.iter().sum();
            for (m, &c) in classes.iter().enumerate() {
                a.check(5 * c == total, || {
                    json!({ "claim": "5 P̄_j(m,5,n) = p̄_j(n)", "weight": w, "j": j, "m": m, "count": c, "total": total })
                });
            }
        }
    }
    a.note("classes", json!(applied));
    Ok(a.finish())
}

pub fn cor5(ctx: &Ctx) -> Result<Finding> {
    let tallies = bg_tallies(ctx)?;
    let mut a = Audit::new();
    for (w, t) in tallies.iter().enumerate() {
        for (j, classes) in by_bg_rank(t) {
            let total: u64 = classes.iter().sum();
            if bg_class_applies(w % 5, j) {
                a.check(total.is_multiple_of(5), || json!({ "claim": "p̄_j(n) ≡ 0 (mod 5)", "weight": w, "j": j, "count": total }));
            }
        }
    }
    Ok(a.finish())
}
