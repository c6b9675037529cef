//! Infinite products and theta sums truncated to a fixed order.

use crate::ring::Ring;
use crate::series::Series;
use crate::{QSeriesError, Result};

/// `Π_{j≥0} (1 - a·q^{offset + step·j})^exponent` modulo `q^order`.
///
/// Only factors with `offset + step·j < order` are applied. A factor with
/// q-power 0 is the constant `1 - a`, which must be a unit when
/// `exponent < 0`.
pub fn poch_inf<R: Ring>(
    a: &R,
    offset: usize,
    step: usize,
    exponent: i32,
    order: usize,
) -> Result<Series<R>> {
    if step == 0 {
        return Err(QSeriesError::ZeroStep);
    }
    let mut s = Series::one(order);
    apply_poch(&mut s, a, offset, step, exponent)?;
    Ok(s)
}

/// Multiplies `s` in place by `(a; q^step)` shifted by `q^offset`, raised to
/// `exponent`.
pub fn apply_poch<R: Ring>(
    s: &mut Series<R>,
    a: &R,
    offset: usize,
    step: usize,
    exponent: i32,
) -> Result<()> {
    if step == 0 {
        return Err(QSeriesError::ZeroStep);
    }
    let order = s.order();
    let mut k = offset;
    while k < order {
        for _ in 0..exponent.unsigned_abs() {
            *s = if exponent > 0 {
                s.mul_binomial(a, k)
            } else {
                s.div_binomial(a, k)?
            };
        }
        k += step;
    }
    Ok(())
}

/// A product of Pochhammer factors `(a_i q^{k_i}; q^{s_i})_∞^{e_i}`.
#[derive(Debug, Clone)]
pub struct Product<R> {
    factors: Vec<(R, usize, usize, i32)>,
}

impl<R: Ring> Default for Product<R> {
    fn default() -> Self {
        Product {
            factors: Vec::new(),
        }
    }
}

impl<R: Ring> Product<R> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `(a·q^offset; q^step)_∞^exponent`.
    pub fn factor(mut self, a: R, offset: usize, step: usize, exponent: i32) -> Self {
        self.factors.push((a, offset, step, exponent));
        self
    }

    /// Appends `(q^offset; q^step)_∞^exponent`.
    pub fn plain(self, offset: usize, step: usize, exponent: i32) -> Self {
        self.factor(R::one(), offset, step, exponent)
    }

    pub fn expand(&self, order: usize) -> Result<Series<R>> {
        self.expand_onto(Series::one(order))
    }

    /// Multiplies `s` by the product.
    pub fn expand_onto(&self, mut s: Series<R>) -> Result<Series<R>> {
        // positive exponents first keeps intermediate coefficients small
        let mut factors: Vec<_> = self.factors.iter().collect();
        factors.sort_by_key(|f| std::cmp::Reverse(f.3.signum()));
        for (a, offset, step, exponent) in factors {
            apply_poch(&mut s, a, *offset, *step, *exponent)?;
        }
        Ok(s)
    }
}

/// `Σ_{n∈Z} z^n q^{n²}` modulo `q^order`.
pub fn theta_jtp<R: Ring>(z: &R, z_inv: &R, order: usize) -> Series<R> {
    let mut s = Series::monomial(R::one(), 0, order);
    let mut n = 1usize;
    let (mut zp, mut zm) = (z.clone(), z_inv.clone());
    while n * n < order {
        s = s.plus(&Series::monomial(zp.plus(&zm), n * n, order));
        zp = zp.times(z);
        zm = zm.times(z_inv);
        n += 1;
    }
    s
}

/// `(q², -qz, -q/z; q²)_∞`, the product side of the triple product.
pub fn theta_jtp_product<R: Ring>(z: &R, z_inv: &R, order: usize) -> Result<Series<R>> {
    Product::new()
        .plain(2, 2, 1)
        .factor(z.negated(), 1, 2, 1)
        .factor(z_inv.negated(), 1, 2, 1)
        .expand(order)
}

/// `Σ_{k≥0} q^{k(k+1)/2}`.
pub fn triangular_sum<R: Ring>(order: usize) -> Series<R> {
    Series::from_terms(
        order,
        (0..).map(|k: usize| k * (k + 1) / 2).take_while(|&t| t < order).map(|t| (t, R::one())),
    )
}

/// `1/(q;q)_∞`, the partition generating function.
pub fn partition_series<R: Ring>(order: usize) -> Series<R> {
    poch_inf(&R::one(), 1, 1, -1, order).expect("constant term 1 is a unit")
}
