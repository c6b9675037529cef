//! t-core counting through n-vectors, the 5-core maps and orbit structure.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;
use tcorelab_core::cores::{alpha_from_n, capital_phi, capital_phi_inv, for_each_nvector, phi2_inv, t_core_counts};
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::orbits::{c1_shift, c2_shift, map_4n_plus_3_nvector, theta, theta_nvector};
use tcorelab_core::stats::{bg_rank, five_core_crank_alpha, srank};
use tcorelab_core::{AlphaVector, NVector, Partition};
use tcorelab_qseries::{partition_series, Product, Series};

use super::Ctx;
use crate::report::{Audit, Finding};
use crate::Result;

fn m4(v: i64) -> i64 {
    v.rem_euclid(4)
}

/// All `t`-core n-vectors of weight `≤ max_weight`, with weights.
fn nvectors(t: usize, max_weight: usize) -> Result<Vec<(Vec<i64>, usize)>> {
    let mut out = Vec::new();
    for_each_nvector(t, max_weight, |c, w| out.push((c.to_vec(), w)))?;
    Ok(out)
}

fn nvec(c: &[i64]) -> NVector {
    NVector::new(c.to_vec()).expect("enumerated n-vectors sum to zero")
}

/// `1 + Σ i·α_i (mod 5)` of a 5-core of weight ≡ 4 (mod 5).
fn c5_of(c: &[i64]) -> Result<i64> {
    Ok(five_core_crank_alpha(&alpha_from_n(&nvec(c))?))
}

pub fn tcoregf(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let partitions = partition_series::<BigInt>(n);
    let enum_max = ctx.max_n.min(n.saturating_sub(1));
    let by_weight: Vec<Vec<Partition>> = (0..=enum_max)
        .into_par_iter()
        .map(|w| Ok(enumerate_partitions_bounded(w, ctx.bound)?.collect()))
        .collect::<Result<_>>()?;
    for t in 2..=7usize {
        let series = Product::<BigInt>::new().plain(t, t, t as i32).plain(1, 1, -1).expand(n)?;
        let counts = t_core_counts(t, n - 1)?;
        for (w, &c) in counts.iter().enumerate() {
            a.check(series.coeff(w).to_u64() == Some(c), || {
                json!({ "claim": "tcoregfid = tcoregfid2", "t": t, "weight": w, "nvector_count": c, "series": series.coeff(w).to_string() })
            });
        }
        for (w, parts) in by_weight.iter().enumerate() {
            let e = parts.iter().filter(|p| p.is_core(t)).count() as u64;
            a.check(e == counts[w], || {
                json!({ "claim": "enumeration = n-vector count", "t": t, "weight": w, "enumerated": e, "nvector_count": counts[w] })
            });
        }

        // n-vectors split by b·n mod t land on weights ≡ b·n (mod t)
        let mut sifted = vec![vec![0u64; n]; t];
        for_each_nvector(t, n - 1, |c, w| {
            let dot: i64 = c.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
            sifted[dot.rem_euclid(t as i64) as usize][w] += 1;
        })?;
        for (delta, row) in sifted.iter().enumerate() {
            for (w, &c) in row.iter().enumerate() {
                let expected = if w % t == delta { counts[w] } else { 0 };
                a.check(c == expected, || {
                    json!({ "claim": "tcoresift", "t": t, "delta": delta, "weight": w, "count": c, "expected": expected })
                });
            }
        }

        // Σ p(tn+δ) qⁿ = (q;q)^{-t} Σ a_t(tn+δ) qⁿ
        let m = n / t - 1;
        for delta in 0..t {
            let lhs = partitions.sift(t, delta)?.truncate(m);
            let cores = series.sift(t, delta)?.truncate(m);
            let rhs = Product::<BigInt>::new().plain(1, 1, -(t as i32)).expand_onto(cores)?;
            a.series_eq(&format!("psift t={t} delta={delta}"), &lhs, &rhs);
        }
    }
    a.note("enumeration_max", json!(enum_max));
    Ok(a.finish())
}

/// `Σ_{α·1 = 1} q^{Q(α)}` modulo `q^order`, and whether any α attaining an
/// exponent below `order` touches the search box boundary.
fn alpha_sum(order: usize) -> (Series<BigInt>, i64, bool) {
    // |α_i - 1/5| ≤ 2·max|α_i - α_{i+1}| ≤ 2√(2Q)
    let q_max = order as i64 - 1;
    let radius = (0..).find(|r: &i64| r * r >= 8 * q_max).unwrap_or(0) + 1;
    let limit = 2 * q_max;
    let mut counts = vec![0i64; order];
    let mut touched = false;
    for a0 in -radius..=radius {
        for a1 in -radius..=radius {
            let d1 = (a0 - a1).pow(2);
            if d1 > limit {
                continue;
            }
            for a2 in -radius..=radius {
                let d2 = d1 + (a1 - a2).pow(2);
                if d2 > limit {
                    continue;
                }
                for a3 in -radius..=radius {
                    let d3 = d2 + (a2 - a3).pow(2);
                    if d3 > limit {
                        continue;
                    }
                    let a4 = 1 - a0 - a1 - a2 - a3;
                    let twice = d3 + (a3 - a4).pow(2) + (a4 - a0).pow(2);
                    if twice <= limit {
                        counts[(twice / 2) as usize] += 1;
                        touched |= [a0, a1, a2, a3, a4].iter().any(|v| v.abs() >= radius);
                    }
                }
            }
        }
    }
    (Series::from_coeffs(counts.into_iter().map(BigInt::from).collect()), radius, touched)
}

pub fn five_core(ctx: &Ctx) -> Result<Finding> {
    let n_max = ctx.max_n;
    let top = 5 * n_max + 4;
    let mut a = Audit::new();
    let vectors = nvectors(5, top)?;
    let mut a5 = vec![0u64; top + 1];
    let mut a5j = vec![[0u64; 5]; top + 1];
    for (c, w) in &vectors {
        a5[*w] += 1;
        if w % 5 == 4 {
            a5j[*w][c5_of(c)? as usize] += 1;
        }
    }
    let counts = t_core_counts(5, top)?;
    a.equal("n-vector tally = t_core_counts", &a5, &counts, json!({ "max_weight": top }));
    for n in 0..=n_max {
        let (w, big) = (n, 5 * n + 4);
        a.equal("a5(5n+4) = 5 a5(n)", a5[big], 5 * a5[w], json!({ "n": n }));
        a.check(a5[big].is_multiple_of(5), || json!({ "claim": "a5(5n+4) ≡ 0 (mod 5)", "n": n }));
        for j in 0..5 {
            a.equal("5 a5^j(5n+4) = a5(5n+4)", 5 * a5j[big][j], a5[big], json!({ "n": n, "j": j }));
        }
    }

    // θ on n-vectors: weight n → 5n+4, crank 0, injective, onto by count
    let mut images = HashSet::new();
    let mut image_count = vec![0u64; n_max + 1];
    for (c, w) in vectors.iter().filter(|(_, w)| *w <= n_max) {
        let img = theta_nvector(&nvec(c))?;
        let iw = img.weight() as usize;
        a.equal("|θ(n)| = 5|n| + 4", iw, 5 * w + 4, json!({ "n": c }));
        a.equal("c5(θ(n)) = 0", c5_of(img.coords())?, 0, json!({ "n": c }));
        a.check(images.insert(img.coords().to_vec()), || json!({ "claim": "θ injective", "n": c }));
        image_count[*w] += 1;
    }
    for n in 0..=n_max {
        a.equal("a5(n) = a5^0(5n+4)", image_count[n], a5j[5 * n + 4][0], json!({ "n": n }));
    }
    let partition_max = n_max.min(20);
    for (c, w) in vectors.iter().filter(|(_, w)| *w <= partition_max) {
        let core = phi2_inv(&nvec(c));
        let img = theta(&core)?;
        let via_n = phi2_inv(&theta_nvector(&nvec(c))?);
        a.check(img == via_n && img.is_core(5) && img.weight() == 5 * w + 4, || {
            json!({ "claim": "θ on partitions", "core": core.to_csv(), "image": img.to_csv() })
        });
    }

    // Σ a5(5n+4) q^{n+1} = Σ_α q^{Q(α)};  Σ p(5n+4) q^{n+1} = (q)^{-5} Σ_α q^{Q(α)}
    let order = n_max + 2;
    let (alphas, radius, touched) = alpha_sum(order);
    a.check(!touched, || json!({ "claim": "α search box large enough", "radius": radius }));
    let sifted_cores = Series::from_terms(order, (0..=n_max).map(|n| (n + 1, BigInt::from(a5[5 * n + 4]))));
    a.series_eq("5coresift", &sifted_cores, &alphas);
    let p_sift = partition_series::<BigInt>(5 * order).sift(5, 4)?.truncate(order).shift(1);
    let rhs = Product::<BigInt>::new().plain(1, 1, -5).expand_onto(alphas)?;
    a.series_eq("psift5", &p_sift, &rhs);

    let enum_max = n_max.min(30);
    let enumerated: Vec<u64> = (0..=enum_max)
        .into_par_iter()
        .map(|w| Ok(enumerate_partitions_bounded(w, ctx.bound)?.filter(|p| p.is_core(5)).count() as u64))
        .collect::<Result<_>>()?;
    for (w, &e) in enumerated.iter().enumerate() {
        a.equal("enumerated 5-cores = n-vector count", e, a5[w], json!({ "weight": w }));
    }
    a.note("alpha_radius", json!(radius));
    a.note("theta_partition_max", json!(partition_max));
    a.note("enumeration_max", json!(enum_max));
    Ok(a.finish())
}

/// Orbit decomposition of the partitions of one weight under Ô or Ô_s.
fn orbit_weight(w: usize, shifted: bool, bound: usize) -> Result<Audit> {
    let parts: Vec<Partition> = enumerate_partitions_bounded(w, bound)?.collect();
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; parts.len()];
    let mut per_class: BTreeMap<i64, (u64, u64)> = BTreeMap::new();
    let mut a = Audit::new();
    let map_name = if shifted { "Ô_s" } else { "Ô" };
    for start in 0..parts.len() {
        if seen[start] {
            continue;
        }
        let p0 = &parts[start];
        let s0 = m4(srank(p0));
        let (mut alpha, quotient) = capital_phi(p0)?;
        let mut quotient: [Partition; 5] = quotient.try_into().expect("5-quotient");
        let mut cur = start;
        seen[start] = true;
        for step in 1..=5 {
            let next_alpha: AlphaVector = c1_shift(&alpha);
            let next_q = if shifted { c2_shift(&quotient) } else { quotient.clone() };
            let next = capital_phi_inv(&next_alpha, &next_q)?;
            let (back_alpha, back_q) = capital_phi(&next)?;
            let witness = || json!({ "map": map_name, "from": parts[cur].to_csv(), "to": next.to_csv(), "step": step });
            a.check(next.weight() == w, witness);
            a.check(back_alpha == next_alpha && back_q[..] == next_q[..], witness);
            a.check(
                five_core_crank_alpha(&back_alpha) == (five_core_crank_alpha(&alpha) + 1).rem_euclid(5),
                witness,
            );
            if shifted {
                a.check(m4(srank(&next)) == s0, witness);
            }
            if parts[cur].is_core(5) {
                a.check(next.is_core(5), witness);
            }
            let Some(&j) = index.get(&next) else {
                a.check(false, witness);
                break;
            };
            if step < 5 {
                a.check(j != start && !seen[j], witness);
                seen[j] = true;
            } else {
                a.check(j == start, witness);
            }
            cur = j;
            alpha = back_alpha;
            quotient = back_q.try_into().expect("5-quotient");
        }
        let e = per_class.entry(s0).or_default();
        e.0 += 1;
    }
    for p in &parts {
        per_class.entry(m4(srank(p))).or_default().1 += 1;
    }
    let orbits: u64 = per_class.values().map(|v| v.0).sum();
    a.equal("5 · orbits = p(n)", 5 * orbits, parts.len() as u64, json!({ "map": map_name, "weight": w }));
    if shifted {
        for (&i, &(o, p)) in &per_class {
            a.equal("5 · orbits = p_i(n)", 5 * o, p, json!({ "weight": w, "srank_class": i }));
        }
    }
    Ok(a)
}

pub fn orbit(ctx: &Ctx) -> Result<Finding> {
    let jobs: Vec<(usize, bool)> = crate::counts::progression(5, 4, ctx.max_n)
        .into_iter()
        .flat_map(|w| [(w, false), (w, true)])
        .collect();
    let audits: Vec<Audit> = jobs
        .par_iter()
        .map(|&(w, s)| orbit_weight(w, s, ctx.bound))
        .collect::<Result<_>>()?;
    Ok(audits.into_iter().collect::<Audit>().finish())
}

/// Per weight: `[count with srank ≡ 0, ≡ 2]` and, on weights ≡ 4 (mod 5),
/// the same split by 5-core crank.
struct Refined {
    a5i: Vec<[u64; 2]>,
    a5ij: Vec<[[u64; 5]; 2]>,
}

fn refined_counts(vectors: &[(Vec<i64>, usize)], top: usize) -> Result<(Refined, Vec<i64>)> {
    let sranks: Vec<i64> = vectors.par_iter().map(|(c, _)| m4(srank(&phi2_inv(&nvec(c))))).collect();
    let mut r = Refined {
        a5i: vec![[0; 2]; top + 1],
        a5ij: vec![[[0; 5]; 2]; top + 1],
    };
    for ((c, w), &s) in vectors.iter().zip(&sranks) {
        let i = (s / 2) as usize;
        r.a5i[*w][i] += 1;
        if w % 5 == 4 {
            r.a5ij[*w][i][c5_of(c)? as usize] += 1;
        }
    }
    Ok((r, sranks))
}

pub fn refine(ctx: &Ctx) -> Result<Finding> {
    let n_max = ctx.max_n;
    let top = 5 * n_max + 4;
    let mut a = Audit::new();
    let vectors = nvectors(5, top)?;
    let (r, sranks) = refined_counts(&vectors, top)?;
    a.check(sranks.iter().all(|s| s % 2 == 0), || json!({ "claim": "srank of 5-cores even" }));
    for n in 0..=n_max {
        let big = 5 * n + 4;
        for i in 0..2 {
            for j in 0..5 {
                a.equal(
                    "5 a_{5,i}^j(5n+4) = a_{5,i}(5n+4)",
                    5 * r.a5ij[big][i][j],
                    r.a5i[big][i],
                    json!({ "n": n, "srank_class": 2 * i, "j": j }),
                );
            }
            a.equal("a_{5,i}(n) = a_{5,i}^0(5n+4)", r.a5i[n][i], r.a5ij[big][i][0], json!({ "n": n, "srank_class": 2 * i }));
            a.equal("a_{5,i}(5n+4) = 5 a_{5,i}(n)", r.a5i[big][i], 5 * r.a5i[n][i], json!({ "n": n, "srank_class": 2 * i }));
        }
    }
    for ((c, w), &s) in vectors.iter().zip(&sranks).filter(|((_, w), _)| *w <= n_max) {
        let img = theta_nvector(&nvec(c))?;
        let t = img.coords();
        a.equal("θ preserves srank mod 4", m4(srank(&phi2_inv(&img))), s, json!({ "n": c, "weight": w }));
        let cube = |v: &[i64]| -> i64 { v.iter().enumerate().map(|(i, x)| (x + i as i64).pow(3)).sum() };
        let diff = cube(c) - cube(t);
        let rhs = 2 * (c[0] * c[2] * (c[0] + c[2])
            + c[1] * c[3] * (c[1] + c[3])
            + c[2] * c[3] * (c[2] + c[3])
            + c[1] * (c[1] + 1)
            + c[2] * (c[2] + 1)
            + c[3] * (c[3] + 1));
        a.check(m4(diff - rhs) == 0 && m4(rhs) == 0, || json!({ "claim": "invarmod4", "n": c }));
    }
    // srank of 5-cores of 5n+4 is invariant under the cyclic shift of α
    for ((c, w), &s) in vectors.iter().zip(&sranks).filter(|((_, w), _)| w % 5 == 4 && *w <= n_max) {
        let alpha = alpha_from_n(&nvec(c))?;
        let shifted = phi2_inv(&tcorelab_core::cores::n_from_alpha(&c1_shift(&alpha)));
        a.equal("Ĉ1 preserves srank mod 4", m4(srank(&shifted)), s, json!({ "n": c, "weight": w }));
    }
    Ok(a.finish())
}

pub fn a50(ctx: &Ctx) -> Result<Finding> {
    let n_max = ctx.max_n;
    let top = 4 * n_max + 3;
    let mut a = Audit::new();
    let vectors = nvectors(5, top)?;
    let (r, sranks) = refined_counts(&vectors, top)?;
    let a5 = |w: usize| r.a5i[w][0] + r.a5i[w][1];
    let a50 = |w: usize| r.a5i[w][0];
    for n in 0..=n_max {
        a.equal("a_{5,0}(4n) = a5(4n)", a50(4 * n), a5(4 * n), json!({ "n": n }));
        a.equal("a_{5,0}(4n+1) = a5(4n+1)", a50(4 * n + 1), a5(4 * n + 1), json!({ "n": n }));
        a.equal("a_{5,0}(4n+2) = 0", a50(4 * n + 2), 0, json!({ "n": n }));
        a.equal("a_{5,0}(4n+3) = a5(n)", a50(4 * n + 3), a5(n), json!({ "n": n }));
    }
    let mut images = HashSet::new();
    for (c, w) in vectors.iter().filter(|(_, w)| *w <= n_max) {
        let img = map_4n_plus_3_nvector(&nvec(c))?;
        a.equal("|φ2⁻¹(n')| = 4|φ2⁻¹(n)| + 3", img.weight() as usize, 4 * w + 3, json!({ "n": c }));
        a.equal("image srank ≡ 0 (mod 4)", m4(srank(&phi2_inv(&img))), 0, json!({ "n": c }));
        a.check(images.insert(img.coords().to_vec()), || json!({ "claim": "4n+3 map injective", "n": c }));
    }
    for ((c, w), &s) in vectors.iter().zip(&sranks).filter(|((_, w), _)| w % 4 == 3) {
        let parity: Vec<i64> = c.iter().map(|x| x.rem_euclid(2)).collect();
        a.equal("srank ≡ 0 iff n ≡ (0,1,0,1,0) (mod 2)", s == 0, parity == [0, 1, 0, 1, 0], json!({ "n": c, "weight": w }));
    }
    a.note("max_weight", json!(top));
    Ok(a.finish())
}

pub fn ab5j4(ctx: &Ctx) -> Result<Finding> {
    let mut a = Audit::new();
    let mut tally: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    for (c, w) in nvectors(5, ctx.max_n)? {
        if w % 5 == 4 {
            *tally.entry((w, bg_rank(&phi2_inv(&nvec(&c))))).or_default() += 1;
        }
    }
    for (&(w, j), &count) in &tally {
        a.check(count % 5 == 0, || json!({ "claim": "ā_{5,j}(5n+4) ≡ 0 (mod 5)", "weight": w, "j": j, "count": count }));
    }
    a.note("classes", json!(tally.len()));
    Ok(a.finish())
}
