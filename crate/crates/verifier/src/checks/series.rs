//! Generating-function identities, each compared coefficientwise against an
//! exhaustive tally or a second closed form.

use num_bigint::BigInt;
use serde_json::json;
use tcorelab_core::cores::{phi1, phi2};
use tcorelab_core::stats::{ag_crank, bg_rank, has_repeated_even_part, srank, st_crank, two_quotient_rank};
use tcorelab_core::Partition;
use tcorelab_qseries::{
    partition_series, theta_jtp, theta_jtp_product, triangular_sum, Cyclotomic5, FourthRoot, Laurent, Product, Ring,
    Series,
};

use super::Ctx;
use crate::counts::{tally_series, tally_weights};
use crate::render::Render;
use crate::report::{Audit, Finding};
use crate::Result;

type Z = BigInt;
type L = Laurent<Z>;
type C5 = Cyclotomic5<Z>;
type F4 = FourthRoot<Z>;
type LF = Laurent<F4>;
type CF = Cyclotomic5<F4>;

fn int(v: i64) -> Z {
    Z::from(v)
}

fn below(order: usize) -> Vec<usize> {
    (0..order).collect()
}

/// `x^a y^b z^c`.
pub(crate) fn xyz(a: i32, b: i32, c: i32) -> L {
    L::monomial([a, b, c], int(1))
}

fn crank0(p: &Partition) -> i64 {
    if p.is_empty() {
        0
    } else {
        ag_crank(p)
    }
}

fn st_crank0(p: &Partition) -> i64 {
    if p.is_empty() {
        0
    } else {
        st_crank(p)
    }
}

/// `x + x⁻¹ - 1`, the weight of the partition `(1)` in the crank series.
fn one_weight() -> L {
    xyz(1, 0, 0).plus(&xyz(-1, 0, 0)).minus(&L::one())
}

/// `(q;q)_∞ / ((xq;q)_∞ (q/x;q)_∞)`.
pub(crate) fn crank_product(order: usize) -> Result<Series<L>> {
    Ok(Product::<L>::new()
        .plain(1, 1, 1)
        .factor(xyz(1, 0, 0), 1, 1, -1)
        .factor(xyz(-1, 0, 0), 1, 1, -1)
        .expand(order)?)
}

/// Crank tally with the term of `(1)` replaced by `x + x⁻¹ - 1`.
fn crank_tally(order: usize, bound: usize, a: &mut Audit) -> Result<Series<L>> {
    let tallies = tally_weights(&below(order), bound, |p, keys| {
        keys.push(crank0(p));
        Ok(())
    })?;
    let mut coeffs = tally_series(&tallies, |&k| xyz(k as i32, 0, 0)).into_coeffs();
    if coeffs.len() > 1 {
        let raw = coeffs[1].clone();
        a.check(raw == xyz(-1, 0, 0), || json!({ "claim": "crank((1)) = -1", "term": raw.render() }));
        coeffs[1] = one_weight();
    }
    Ok(Series::from_coeffs(coeffs))
}

pub fn crankgf(ctx: &Ctx) -> Result<Finding> {
    let mut a = Audit::new();
    let lhs = crank_tally(ctx.order, ctx.bound, &mut a)?;
    a.series_eq("crankgf", &lhs, &crank_product(ctx.order)?);
    Ok(a.finish())
}

pub fn rambest(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let sifted = partition_series::<Z>(5 * n).sift(5, 4)?.truncate(n);
    let rhs = Product::<Z>::new().plain(5, 5, 5).plain(1, 1, -6).expand(n)?.scale(&int(5));
    let mut a = Audit::new();
    a.series_eq("rambest", &sifted, &rhs);
    Ok(a.finish())
}

pub fn rsgf(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        keys.push((p.odd_part_count() as i32, p.conjugate_odd_part_count() as i32));
        Ok(())
    })?;
    // z marks O(π), y marks O(π')
    let lhs = tally_series(&tallies, |&(r, s)| xyz(0, s, r));
    let rhs = Product::<L>::new()
        .factor(xyz(0, 1, 1).negated(), 1, 2, 1)
        .plain(4, 4, -1)
        .factor(xyz(0, 0, 2), 2, 4, -1)
        .factor(xyz(0, 2, 0), 2, 4, -1)
        .expand(n)?;
    let mut a = Audit::new();
    a.series_eq("rsgf", &lhs, &rhs);
    Ok(a.finish())
}

pub fn p02prod(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        keys.push(srank(p).rem_euclid(4));
        Ok(())
    })?;
    let lhs = tally_series(&tallies, |&k| match k {
        0 => int(1),
        2 => int(-1),
        _ => int(0),
    });
    let rhs = Product::<Z>::new()
        .factor(int(-1), 1, 2, 1)
        .plain(4, 4, -1)
        .factor(int(-1), 2, 4, -2)
        .expand(n)?;
    let mut a = Audit::new();
    a.series_eq("p02prod", &lhs, &rhs);
    Ok(a.finish())
}

/// `Σ q^|π| (x y²)^{srank/2}` over partitions without repeated even parts,
/// as a product with `u = x y²`.
pub(crate) fn distinct_even_product(u: L, u_inv: L, order: usize) -> Result<Series<L>> {
    Ok(Product::<L>::new()
        .factor(L::from_i64(-1), 1, 2, 1)
        .factor(u, 2, 4, -1)
        .factor(u_inv, 2, 4, -1)
        .expand(order)?)
}

pub fn srankprod(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        // (restricted?, srank)
        let s = srank(p);
        keys.push((false, s));
        if !has_repeated_even_part(p) {
            keys.push((true, s));
        }
        Ok(())
    })?;
    let pick = |restricted: bool| -> Series<L> {
        let filtered: Vec<_> = tallies
            .iter()
            .map(|t| t.iter().filter(|(k, _)| k.0 == restricted).map(|(&k, &c)| (k, c)).collect())
            .collect();
        tally_series(&filtered, |&(_, s)| xyz(0, s as i32, 0))
    };
    let rhs = distinct_even_product(xyz(0, 2, 0), xyz(0, -2, 0), n)?;
    let mut a = Audit::new();
    a.series_eq("srankprodid", &pick(true), &rhs);
    let full = Product::<L>::new().plain(4, 4, -1).expand_onto(rhs)?;
    a.series_eq("bij1gf", &pick(false), &full);
    Ok(a.finish())
}

/// `g(x,y,q)` with `x` and `y` given as ring elements:
/// `(q⁴;q⁴)(-q;q²) / (xq⁴, q⁴/x, xy²q², q²/(xy²); q⁴)`.
pub(crate) fn g_product<R: Ring>(x: R, x_inv: R, y2: R, y2_inv: R, order: usize) -> Result<Series<R>> {
    Ok(Product::<R>::new()
        .plain(4, 4, 1)
        .factor(R::from_i64(-1), 1, 2, 1)
        .factor(x.clone(), 4, 4, -1)
        .factor(x_inv.clone(), 4, 4, -1)
        .factor(x.times(&y2), 2, 4, -1)
        .factor(x_inv.times(&y2_inv), 2, 4, -1)
        .expand(order)?)
}

pub fn lemma1(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        keys.push((st_crank0(p), srank(p)));
        Ok(())
    })?;
    let lhs = tally_series(&tallies, |&(c, s)| xyz(c as i32, s as i32, 0));
    let rhs = g_product(xyz(1, 0, 0), xyz(-1, 0, 0), xyz(0, 2, 0), xyz(0, -2, 0), n)?;
    a.series_eq("lemma1", &lhs, &rhs);

    // Σ_{π1} q^{4|π1|} w(x,π1) · Σ_{π2} q^{|π2|} (xy²)^{srank(π2)/2}
    let quarter = n.div_ceil(4);
    let crank = crank_tally(quarter, ctx.bound, &mut a)?;
    let first = Series::from_terms(n, crank.coeffs().iter().enumerate().map(|(k, c)| (4 * k, c.clone())));
    let restricted = tally_weights(&below(n), ctx.bound, |p, keys| {
        if !has_repeated_even_part(p) {
            keys.push(srank(p) / 2);
        }
        Ok(())
    })?;
    let second = tally_series(&restricted, |&h| xyz(h as i32, 2 * h as i32, 0));
    a.series_eq("stcrankgfid", &lhs, &first.times(&second));
    Ok(a.finish())
}

/// `(1 - ξ^{4m+2}) / (1 - ξ²)` as the geometric sum `Σ_{l=0}^{2m} ξ^{2l}`.
fn xi_quotient(m: i64) -> C5 {
    (0..=2 * m).fold(C5::zero(), |acc, l| acc.plus(&C5::xi_pow(2 * l)))
}

/// `Σ_{m≥0} (-1)^m q^{e(m)} ξ^{-2m} Σ_{l=0}^{2m} ξ^{2l}`.
fn xi_theta(order: usize, e: impl Fn(i64) -> usize) -> Series<C5> {
    let terms = (0..)
        .map(|m: i64| (m, e(m)))
        .take_while(|&(_, k)| k < order)
        .map(|(m, k)| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            (k, xi_quotient(m).times(&C5::xi_pow(-2 * m)).scaled(sign))
        });
    Series::from_terms(order, terms)
}

pub fn jtpa(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let small = n.min(100);
    let (z, zi) = (xyz(0, 0, 1), xyz(0, 0, -1));
    a.series_eq("jtp symbolic z", &theta_jtp(&z, &zi, small), &theta_jtp_product(&z, &zi, small)?);
    for v in [1, -1] {
        let c = int(v);
        a.series_eq(&format!("jtp z={v}"), &theta_jtp(&c, &c, small), &theta_jtp_product(&c, &c, small)?);
    }

    let lhs = Product::<Z>::new().plain(4, 4, 1).factor(int(-1), 1, 2, 1).expand(n)?;
    let mid = Product::<Z>::new()
        .plain(4, 4, 1)
        .factor(int(-1), 3, 4, 1)
        .factor(int(-1), 1, 4, 1)
        .expand(n)?;
    let bilateral = Series::from_terms(
        n,
        (-(n as i64)..=n as i64)
            .map(|k| 2 * k * k + k)
            .filter(|&e| e < n as i64)
            .map(|e| (e as usize, int(1))),
    );
    a.series_eq("jtpa product forms", &lhs, &mid);
    a.series_eq("jtpa bilateral sum", &lhs, &bilateral);
    a.series_eq("jtpa triangular sum", &lhs, &triangular_sum(n));

    let b = n.min(60);
    let prod = Product::<C5>::new()
        .factor(C5::xi_pow(2), 2, 2, 1)
        .factor(C5::xi_pow(-2), 2, 2, 1)
        .plain(2, 2, 1)
        .expand(b)?;
    a.series_eq("jtpb", &prod, &xi_theta(b, |m| (m * (m + 1)) as usize));
    a.note("jtp_order", json!(small));
    a.note("jtpb_order", json!(b));
    Ok(a.finish())
}

fn vanishing_5n4<R: Ring + Render>(a: &mut Audit, what: &str, s: &Series<R>) {
    for k in (4..s.order()).step_by(5) {
        a.check(s.coeff(k).is_zero(), || {
            json!({ "claim": what, "q_power": k, "coeff": s.coeff(k).render() })
        });
    }
}

pub fn coeffz(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let (xi, xi_inv) = (C5::xi_pow(1), C5::xi_pow(-1));

    // y = 1
    let g1 = g_product(xi.clone(), xi_inv.clone(), C5::one(), C5::one(), n)?;
    vanishing_5n4(&mut a, "coefficient of q^(5n+4) in g(ξ,1,q)", &g1);
    let mid = Product::<C5>::new()
        .factor(C5::xi_pow(2), 2, 2, 1)
        .factor(C5::xi_pow(-2), 2, 2, 1)
        .plain(2, 2, 1)
        .plain(10, 10, -1)
        .expand_onto(triangular_sum(n))?;
    a.series_eq("gz1id product form", &g1, &mid);
    let theta = xi_theta(n, |m| (m * (m + 1)) as usize);
    let double = (0..n)
        .map(|k| k * (k + 1) / 2)
        .take_while(|&t| t < n)
        .fold(Series::<C5>::zero(n), |acc, t| acc.plus(&theta.shift(t)));
    let double = Product::<C5>::new().plain(10, 10, -1).expand_onto(double)?;
    a.series_eq("gz1id double sum", &g1, &double);

    // y = √-1, so y² = -1
    let minus = C5::from_i64(-1);
    let gi = g_product(xi.clone(), xi_inv.clone(), minus.clone(), minus, n)?;
    vanishing_5n4(&mut a, "coefficient of q^(5n+4) in g(ξ,√-1,q)", &gi);

    // y a formal fourth root of unity: both specializations at once
    let cxi = CF::from_coeffs(C5::xi_pow(1).coeffs().clone().map(F4::embed));
    let cxi_inv = CF::from_coeffs(C5::xi_pow(-1).coeffs().clone().map(F4::embed));
    let y2 = CF::embed(F4::y_pow(2));
    let y2_inv = CF::embed(F4::y_pow(-2));
    let gy = g_product(cxi.clone(), cxi_inv, y2, y2_inv, n)?;
    vanishing_5n4(&mut a, "coefficient of q^(5n+4) in g(ξ,y,q), y⁴ = 1", &gy);

    let m = n.min(ctx.max_n + 1);
    let tallies = tally_weights(&below(m), ctx.bound, |p, keys| {
        keys.push((st_crank0(p).rem_euclid(5), srank(p).rem_euclid(4)));
        Ok(())
    })?;
    let tally = tally_series(&tallies, |&(k, s)| {
        CF::from_coeffs(C5::xi_pow(k).coeffs().clone().map(|c| F4::embed(c).times(&F4::y_pow(s))))
    });
    a.series_eq("Σ ξ^stc y^srank tally", &tally, &gy.truncate(m));
    a.note("tally_order", json!(m));
    Ok(a.finish())
}

pub fn g2(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        keys.push((two_quotient_rank(p), st_crank0(p), srank(p)));
        Ok(())
    })?;
    let x = |k: i32| LF::monomial([k, 0, 0], F4::one());
    let one_f = |v: F4| LF::constant(v);
    for e in [0i64, 1] {
        let label = if e == 0 { "ω=1" } else { "ω=√-1" };
        let w = |k: i64| F4::y_pow(e * k);
        let tqr = tally_series(&tallies, |&(t, _, s)| LF::monomial([t as i32, 0, 0], w(s)));
        let stc = tally_series(&tallies, |&(_, c, s)| LF::monomial([c as i32, 0, 0], w(s)));

        // Σ q^{T_k} / Π_{j≥1} (1 - x ω^{2j} q^{2j})(1 - x⁻¹ ω^{2j} q^{2j})
        let mut mid = triangular_sum::<LF>(n);
        for j in (2..n).step_by(2) {
            let wj = one_f(w(j as i64));
            mid = mid.div_binomial(&x(1).times(&wj), j)?.div_binomial(&x(-1).times(&wj), j)?;
        }
        let w2 = one_f(w(2));
        let prod2 = Product::<LF>::new()
            .plain(4, 4, 1)
            .factor(LF::from_i64(-1), 1, 2, 1)
            .factor(x(1).times(&w2), 2, 4, -1)
            .factor(x(1), 4, 4, -1)
            .factor(x(-1).times(&w2), 2, 4, -1)
            .factor(x(-1), 4, 4, -1)
            .expand(n)?;
        let g = g_product(x(1), x(-1), w2.clone(), w2, n)?;
        a.series_eq(&format!("G2prod {label}"), &tqr, &mid);
        a.series_eq(&format!("G2prod2 {label}"), &tqr, &prod2);
        a.series_eq(&format!("G2gid {label}"), &tqr, &g);
        a.series_eq(&format!("St-crank tally {label}"), &stc, &g);
    }
    Ok(a.finish())
}

fn q3(n1: i64, n2: i64) -> i64 {
    3 * (n1 * n1 + n1 * n2 + n2 * n2) + n1 + 2 * n2
}

/// Smallest `r` with `r² ≥ v`.
fn ceil_sqrt(v: usize) -> i64 {
    (0..).find(|r: &i64| (r * r) as usize >= v).unwrap_or(0)
}

pub fn g3(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let x = |k: i64| xyz(k as i32, 0, 0);
    let denom = Product::<L>::new().plain(3, 3, -1).factor(x(3), 3, 3, -1).factor(x(-3), 3, 3, -1);

    // Q3 ≥ 1.5M² - 3M for M = max|n_i|
    let b = ceil_sqrt(n) + 2;
    let mut terms = Vec::new();
    for n1 in -b..=b {
        for n2 in -b..=b {
            let e = q3(n1, n2);
            if (0..n as i64).contains(&e) {
                for k in [3 * n1, 3 * n2 + 1, -3 * n2 - 1] {
                    terms.push((e as usize, x(k)));
                }
            }
        }
    }
    let g3id = denom.expand_onto(Series::from_terms(n, terms))?;

    // The substitution 3n1 = i - j, 3n2 = i + 2j (and its two shifts) sends
    // Q3 to i² + ij + j² + i + j; without the linear term the constant
    // coefficient is 1 rather than x + 1 + 1/x.
    let b2 = ceil_sqrt(2 * n) + 2;
    let (mut quad, mut bare) = (Vec::new(), Vec::new());
    for i in -b2..=b2 {
        for j in -b2..=b2 {
            let e = i * i + i * j + j * j;
            if (0..n as i64).contains(&(e + i + j)) {
                quad.push(((e + i + j) as usize, x(i - j)));
            }
            if e < n as i64 {
                bare.push((e as usize, x(i - j)));
            }
        }
    }
    let numerator = Series::from_terms(n, quad);
    a.series_eq("G3id2", &g3id, &denom.expand_onto(numerator.clone())?);

    let around = x(1).plus(&L::one()).plus(&x(-1));
    let hgb = Product::<L>::new()
        .plain(1, 1, 1)
        .plain(3, 3, 1)
        .factor(x(3), 3, 3, 1)
        .factor(x(-3), 3, 3, 1)
        .factor(x(1), 1, 1, -1)
        .factor(x(-1), 1, 1, -1)
        .expand(n)?
        .scale(&around);
    a.series_eq("HGBid", &numerator, &hgb);
    let bare = Series::from_terms(n, bare);
    a.note("quadratic_only_numerator_first_difference", json!(bare.first_difference(&hgb)));
    let g3id3 = crank_product(n)?.scale(&around);
    a.series_eq("G3id3", &g3id, &g3id3);

    let m = n.min(ctx.max_n + 1);
    let tallies = tally_weights(&below(m), ctx.bound, |p, keys| {
        let cq = phi1(p, 3)?;
        let nv = phi2(&cq.core, 3)?;
        let (n1, n2) = (nv.coords()[1], nv.coords()[2]);
        let shift = 3 * (cq.quotient[1].len() as i64 - cq.quotient[2].len() as i64);
        for k in [3 * n1, 3 * n2 + 1, -3 * n2 - 1] {
            keys.push(k + shift);
        }
        Ok(())
    })?;
    let tally = tally_series(&tallies, |&k| x(k));
    a.series_eq("G3def tally", &tally, &g3id3.truncate(m));
    a.note("tally_order", json!(m));
    Ok(a.finish())
}

pub fn fj(ctx: &Ctx) -> Result<Finding> {
    let n = ctx.order;
    let mut a = Audit::new();
    let tallies = tally_weights(&below(n), ctx.bound, |p, keys| {
        keys.push((bg_rank(p), two_quotient_rank(p)));
        Ok(())
    })?;
    let base = Product::<L>::new()
        .factor(xyz(1, 0, 0), 2, 2, -1)
        .factor(xyz(-1, 0, 0), 2, 2, -1)
        .expand(n)?;
    let xi_base = Product::<C5>::new()
        .factor(C5::xi_pow(1), 2, 2, -1)
        .factor(C5::xi_pow(-1), 2, 2, -1)
        .expand(n)?;
    let core = |j: i64| (2 * j - 1) * j;
    let js: Vec<i64> = (-(n as i64)..=n as i64).filter(|&j| core(j) < n as i64).collect();
    for &j in &js {
        let per: Vec<_> = tallies
            .iter()
            .map(|t| t.iter().filter(|(k, _)| k.0 == j).map(|(&k, &c)| (k, c)).collect())
            .collect();
        let lhs = tally_series(&per, |&(_, m)| xyz(m as i32, 0, 0));
        a.series_eq(&format!("fjdef j={j}"), &lhs, &base.shift(core(j) as usize));
        let lhs_xi = tally_series(&per, |&(_, m)| C5::xi_pow(m));
        a.series_eq(&format!("fjxi2 j={j}"), &lhs_xi, &xi_base.shift(core(j) as usize));
    }
    let total: u64 = tallies.iter().flat_map(|t| t.values()).sum();
    let covered: u64 = tallies
        .iter()
        .flat_map(|t| t.iter().filter(|(k, _)| js.contains(&k.0)).map(|(_, &c)| c))
        .sum();
    a.equal("every BG-rank class covered", total, covered, json!({ "order": n }));

    let m = n.max(40);
    let xi_prod = Product::<C5>::new()
        .factor(C5::xi_pow(1), 2, 2, -1)
        .factor(C5::xi_pow(-1), 2, 2, -1)
        .expand(m)?;
    let xi_sum = Product::<C5>::new()
        .plain(10, 10, -1)
        .expand_onto(xi_theta(m, |k| (k * k + k) as usize))?;
    a.series_eq("fjxi", &xi_prod, &xi_sum);

    for k in 0..100i64 {
        let r = (k * k + k).rem_euclid(5);
        let expected = match k.rem_euclid(5) {
            0 | 4 => 0,
            1 | 3 => 2,
            _ => 1,
        };
        a.equal("n² + n mod 5", r, expected, json!({ "n": k }));
        a.check(k.rem_euclid(5) != 2 || xi_quotient(k).is_zero(), || {
            json!({ "claim": "1 - ξ^(4n+2) = 0 for n ≡ 2 (mod 5)", "n": k })
        });
    }
    for j in -100..100i64 {
        let expected = match j.rem_euclid(5) {
            0 | 3 => 0,
            1 | 2 => 1,
            _ => 3,
        };
        a.equal("(2j-1)j mod 5", core(j).rem_euclid(5), expected, json!({ "j": j }));
    }
    a.note("cyclotomic_order", json!(m));
    Ok(a.finish())
}
