//! Bijection round trips and the srank formulas for cores, quotients and
//! border strips.

use rayon::prelude::*;
use serde_json::json;
use tcorelab_core::cores::{
    alpha_from_n, capital_phi, capital_phi_inv, n_from_alpha, nvectors_up_to, phi1, phi1_inv, phi2, phi2_inv,
    quotient_growth,
};
use tcorelab_core::enumerate::enumerate_partitions_bounded;
use tcorelab_core::stats::{
    bijection1, bijection1_inv, bijection2, bijection2_inv, g_tni, has_repeated_even_part, is_type_a, is_type_b,
    srank, srank_part_criterion, srtq_rhs, thm4_rhs,
};
use tcorelab_core::{AlphaVector, Cell, Partition};

use super::Ctx;
use crate::report::{Audit, Finding};
use crate::Result;

fn m4(v: i64) -> i64 {
    v.rem_euclid(4)
}

/// Runs `body` on every partition of every weight `0..=max`, in parallel
/// over weights, merging audits in weight order.
fn each_partition(max: usize, bound: usize, body: impl Fn(&Partition, &mut Audit) -> Result<()> + Sync) -> Result<Audit> {
    let audits: Vec<Audit> = (0..=max)
        .into_par_iter()
        .map(|w| {
            let mut a = Audit::new();
            for p in enumerate_partitions_bounded(w, bound)? {
                body(&p, &mut a)?;
            }
            Ok(a)
        })
        .collect::<Result<_>>()?;
    Ok(audits.into_iter().collect())
}

/// `srank(φ2⁻¹(n)) (mod 4)` by the class of `t` mod 4, written out directly.
fn srank_of_core_formula(n: &[i64]) -> i64 {
    let t = n.len() as i64;
    let terms = n.iter().enumerate().map(|(i, &x)| {
        let i = i as i64;
        match t % 4 {
            1 => (x + i).pow(3),
            3 => (x - i + 1).pow(3),
            0 => (i * i + i) * x,
            _ => x * x + (i * i + i) * x,
        }
    });
    m4(terms.sum())
}

pub fn elegant(ctx: &Ctx) -> Result<Finding> {
    let mut a = Audit::new();
    let n_max = ctx.max_n;
    for n in nvectors_up_to(5, n_max)? {
        let c = n.coords();
        let core = phi2_inv(&n);
        let s = m4(srank(&core));
        let cubes: i64 = c.iter().enumerate().map(|(i, x)| (x + i as i64).pow(3)).sum();
        a.equal("elegant1", s, m4(cubes), json!({ "n": c }));
        if n.dot_b().rem_euclid(5) == 4 {
            let al = alpha_from_n(&n)?.coords();
            let form: i64 = (0..5).map(|i| al[i] * al[(i + 1) % 5] * (al[i] - al[(i + 1) % 5])).sum();
            a.equal("sravec", s, m4(form), json!({ "alpha": al }));
        }
    }
    let rest = each_partition(n_max, ctx.bound, |p, a| {
        let cq = phi1(p, 5)?;
        let n = phi2(&cq.core, 5)?;
        let c = n.coords();
        let mut rhs = srank(&cq.core);
        for (i, q) in cq.quotient.iter().enumerate() {
            rhs += srank(q) + 2 * q.weight() as i64 * (c[i] + i as i64);
        }
        a.equal("elegant2", m4(srank(p)), m4(rhs), json!({ "partition": p.to_csv() }));
        if p.weight() % 5 == 4 {
            let (alpha, quot) = capital_phi(p)?;
            let al = alpha.coords();
            let w = |k: usize| quot[k].weight() as i64;
            let mut form: i64 = (0..5).map(|i| al[i] * al[(i + 1) % 5] * (al[i] - al[(i + 1) % 5])).sum();
            form += quot.iter().map(srank).sum::<i64>();
            form += 2
                * ((al[0] + al[4]) * w(0)
                    + (al[2] + al[3]) * w(1)
                    + (al[1] + al[2]) * w(2)
                    + (al[0] + al[1]) * w(3)
                    + (al[3] + al[4]) * w(4));
            a.equal("sravec2", m4(srank(p)), m4(form), json!({ "partition": p.to_csv() }));
        }
        Ok(())
    })?;
    Ok(a.merge(rest).finish())
}

pub fn thm4(ctx: &Ctx) -> Result<Finding> {
    let mut a = Audit::new();
    for t in 2..=9usize {
        for n in nvectors_up_to(t, ctx.max_n)? {
            let c = n.coords();
            let core = phi2_inv(&n);
            let s = m4(srank(&core));
            let at = json!({ "t": t, "n": c });
            a.equal("srank of t-core closed form", s, srank_of_core_formula(c), at.clone());
            a.equal("library closed form", s, thm4_rhs(&n), at.clone());
            let g: i64 = c.iter().enumerate().map(|(i, &x)| g_tni(t as i64, x, i as i64)).sum();
            a.equal("Σ g(t,n_i,i)", s, m4(g), at.clone());
            let durfee: i64 = c.iter().filter(|&&x| x > 0).sum();
            a.equal("Durfee size = Σ_{n_i>0} n_i", core.durfee_size() as i64, durfee, at.clone());
            let conj: Vec<i64> = c.iter().rev().map(|x| -x).collect();
            a.equal("φ2(π') = -reverse(n)", phi2(&core.conjugate(), t)?.coords().to_vec(), conj, at);
        }
    }
    for t in 2..=9i64 {
        for n in -20..=20i64 {
            for i in 0..t {
                let g = g_tni(t, n, i);
                let six_g = 2 * t * t * n.pow(3) + (6 * t * i - 3 * t * (t - 1)) * n * n + (6 * i * i - 6 * i * (t - 1) + t * t - 3 * t) * n;
                let at = json!({ "t": t, "n": n, "i": i });
                a.equal("6g(t,n,i)", 6 * g, six_g, at.clone());
                a.equal("g(t,n,i) even", g.rem_euclid(2), 0, at.clone());
                a.equal("g(t,n,i) + g(t,-n,t-1-i) = 0", g + g_tni(t, -n, t - 1 - i), 0, at.clone());
                a.equal("g(t,n,i) ≡ g(t,-n,t-1-i) (mod 4)", m4(g), m4(g_tni(t, -n, t - 1 - i)), at);
            }
        }
    }
    Ok(a.finish())
}

pub fn srtq(ctx: &Ctx) -> Result<Finding> {
    let audit = each_partition(ctx.max_n, ctx.bound, |p, a| {
        let s = srank(p);
        let crit: i64 = p
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &l)| {
                let (l, j) = (l as i64, j as i64 + 1);
                l * l + (2 * j - 3) * l
            })
            .sum();
        let at = || json!({ "partition": p.to_csv() });
        a.equal("srankcrit", m4(s), m4(crit), at());
        a.equal("library srankcrit", m4(s), srank_part_criterion(p), at());
        a.equal("srank even", s.rem_euclid(2), 0, at());
        a.equal("srank(π') = -srank(π)", srank(&p.conjugate()), -s, at());
        for t in 2..=9usize {
            let cq = phi1(p, t)?;
            let n = phi2(&cq.core, t)?;
            let tq = t as i64;
            let mut rhs = srank(&cq.core);
            if tq % 2 == 0 {
                let a2 = (tq % 4) / 2;
                rhs += 2 * a2 * cq.quotient_weight() as i64;
            } else {
                let a2 = (tq % 4) / 2;
                for (i, q) in cq.quotient.iter().enumerate() {
                    rhs += 2 * (n.coords()[i] + i as i64 + a2) * q.weight() as i64 + srank(q);
                }
            }
            let at = json!({ "partition": p.to_csv(), "t": t });
            a.equal("srtq", m4(s), m4(rhs), at.clone());
            a.equal("library srtq", m4(s), srtq_rhs(&cq)?, at);
        }
        Ok(())
    })?;
    Ok(audit.finish())
}

fn addable_cells(p: &Partition) -> Vec<Cell> {
    (1..=p.len() + 1)
        .filter(|&r| r == 1 || p.part(r - 1) > p.part(r))
        .map(|r| Cell::new(r, p.part(r) + 1))
        .collect()
}

pub fn strip(ctx: &Ctx) -> Result<Finding> {
    let n_max = ctx.max_n;
    let mut audit = each_partition(n_max, ctx.bound, |p, a| {
        if p.weight() < n_max {
            for c in addable_cells(p) {
                let q = p.add_cell(c)?;
                let d = srank(&q) - srank(p);
                a.equal("srpistar", m4(d), m4(2 * (c.row + c.col) as i64), json!({ "partition": p.to_csv(), "cell": [c.row, c.col] }));
            }
        }
        for len in 1..=p.weight() {
            for r in p.rim_hook_removals(len) {
                let (x, y, l) = (r.head.row as i64, r.head.col as i64, len as i64);
                let d = srank(p) - srank(&r.result);
                let at = || json!({ "partition": p.to_csv(), "length": len, "head": [x, y] });
                a.equal("srpiss", m4(d), m4(2 * l * (x + y) + l * l - l), at());
                // reattach cell by cell; each increment is 2(x+y) for the added cell
                let mut cur = r.result.clone();
                let mut summed = 0;
                for &c in &r.cells {
                    let next = cur.add_cell(c)?;
                    summed += srank(&next) - srank(&cur);
                    a.equal("cellwise increment", m4(srank(&next) - srank(&cur)), m4(2 * (c.row + c.col) as i64), at());
                    cur = next;
                }
                a.check(cur == *p && m4(summed) == m4(d), || json!({ "claim": "strip reattachment", "partition": p.to_csv(), "length": len }));
            }
        }
        for t in [3usize, 5] {
            let cq = phi1(p, t)?;
            let n = phi2(&cq.core, t)?;
            let a2 = (t as i64 % 4) / 2;
            for i in 0..t {
                for (k, step) in quotient_growth(&cq, i)?.iter().enumerate() {
                    let (x, y) = (step.head.row as i64, step.head.col as i64);
                    let base = n.coords()[i] + i as i64 + k as i64;
                    let lam = cq.quotient[i].part(k + 1) as i64;
                    let at = || json!({ "partition": p.to_csv(), "t": t, "slot": i, "strip": k + 1 });
                    a.equal("bsh head parity", (x + y).rem_euclid(2), base.rem_euclid(2), at());
                    let d = srank(&step.after) - srank(&step.before);
                    a.equal("strip increment", m4(d), m4(2 * lam * (base + a2) + lam * lam - lam), at());
                }
            }
        }
        Ok(())
    })?;
    // ℓ = tλ reduces to the two closed forms
    for t in 2..=9i64 {
        for lam in 0..=12i64 {
            for s in 0..=24i64 {
                let l = t * lam;
                let full = m4(2 * l * s + l * l - l);
                let a2 = (t % 4) / 2;
                let reduced = if t % 2 == 0 { m4(2 * a2 * lam) } else { m4(2 * lam * (s + a2) + lam * lam - lam) };
                audit.equal("srpissa/srpissb", full, reduced, json!({ "t": t, "lambda": lam, "x+y": s }));
            }
        }
    }
    Ok(audit.finish())
}

pub fn bij(ctx: &Ctx) -> Result<Finding> {
    let n_max = ctx.max_n;
    let mut audit = each_partition(n_max, ctx.bound, |p, a| {
        let w = p.weight();
        let at = || json!({ "partition": p.to_csv() });
        if w <= 20 {
            for t in [2usize, 3, 4, 5, 7] {
                let cq = phi1(p, t)?;
                a.check(phi1_inv(&cq)? == *p, at);
                a.equal("|π| = |core| + t|quotient|", w, cq.core.weight() + t * cq.quotient_weight(), at());
            }
        }
        for t in 2..=9usize {
            if p.is_core(t) {
                let n = phi2(p, t)?;
                a.check(phi2_inv(&n) == *p && n.weight() as usize == w, at);
            }
        }
        let (p1, p2) = bijection1(p);
        a.check(bijection1_inv(&p1, &p2)? == *p, at);
        a.equal("|π| = 4|π1| + |π2|", w, 4 * p1.weight() + p2.weight(), at());
        a.equal("srank(π) = srank(π2)", srank(p), srank(&p2), at());
        a.check(!has_repeated_even_part(&p2), at);
        if w <= 20 {
            if is_type_a(p) {
                let b = bijection2(p)?;
                a.check(is_type_b(&b) && b.weight() == w && srank(&b) == srank(p), at);
                a.check(bijection2_inv(&b)? == *p, at);
            }
            if is_type_b(p) {
                let back = bijection2_inv(p)?;
                a.check(is_type_a(&back) && bijection2(&back)? == *p, at);
            }
        }
        if [9, 14, 19].contains(&w) {
            let (alpha, quot) = capital_phi(p)?;
            a.check(capital_phi_inv(&alpha, &quot)? == *p, at);
            let qw: usize = quot.iter().map(Partition::weight).sum();
            a.equal("|π| = 5Q(α) - 1 + 5|quotient|", w as i64, 5 * alpha.q_form() - 1 + 5 * qw as i64, at());
        }
        Ok(())
    })?;
    for t in 2..=9usize {
        for n in nvectors_up_to(t, n_max)? {
            let core = phi2_inv(&n);
            audit.check(core.is_core(t) && phi2(&core, t)? == n, || json!({ "t": t, "n": n.coords() }));
        }
    }
    for a0 in -2..=2i64 {
        for a1 in -2..=2 {
            for a2 in -2..=2 {
                for a3 in -2..=2 {
                    let a4 = 1 - a0 - a1 - a2 - a3;
                    if a4.abs() > 2 {
                        continue;
                    }
                    let alpha = AlphaVector::new([a0, a1, a2, a3, a4])?;
                    let n = n_from_alpha(&alpha);
                    let dot: i64 = n.coords().iter().enumerate().map(|(i, x)| i as i64 * x).sum();
                    let at = || json!({ "alpha": alpha.coords() });
                    audit.check(alpha_from_n(&n)? == alpha && dot.rem_euclid(5) == 4, at);
                    audit.equal("|core| = 5Q(α) - 1", n.weight(), 5 * alpha.q_form() - 1, at());
                }
            }
        }
    }
    Ok(audit.finish())
}

pub fn stripcore(ctx: &Ctx) -> Result<Finding> {
    let audit = each_partition(ctx.max_n, ctx.bound, |p, a| {
        for t in [2usize, 3, 5] {
            let core = phi1(p, t)?.core;
            let stripped = p.strip_to_core(t)?;
            // remove the South-West-most strip each time instead
            let mut alt = p.clone();
            while let Some(r) = alt.rim_hook_removals(t).pop() {
                alt = r.result;
            }
            a.check(stripped == core && alt == core && core.is_core(t), || {
                json!({ "partition": p.to_csv(), "t": t, "abacus": core.to_csv(), "stripped": stripped.to_csv(), "alternate": alt.to_csv() })
            });
        }
        Ok(())
    })?;
    Ok(audit.finish())
}
