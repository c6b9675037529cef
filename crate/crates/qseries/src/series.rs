//! Truncated power series in `q`.

use crate::ring::Ring;
use crate::{QSeriesError, Result};

/// `Σ_{n<N} c_n q^n`, exact modulo `q^N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    /// `c·q^k`, which is zero when `k ≥ order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        Series { coeffs }
    }

    /// Builds a series from `(exponent, coefficient)` terms, dropping those
    /// at or past `order`.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in terms {
            if k < order {
                s.coeffs[k] = s.coeffs[k].plus(&c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `q^n`; panics when `n` is not below the order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|k| self.coeffs[k].minus(&other.coeffs[k])).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn times(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0 = self.coeffs[0].unit_inverse().ok_or(QSeriesError::NonUnit)?;
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
                }
            }
            out.push(acc.negated().times(&c0));
        }
        Ok(Series { coeffs: out })
    }

    /// `self / other`.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.inverse()?))
    }

    /// Multiplies by `(1 - a·q^k)`.
    pub fn mul_binomial(&self, a: &R, k: usize) -> Self {
        let mut out = self.coeffs.clone();
        for n in (k..out.len()).rev() {
            if !self.coeffs[n - k].is_zero() {
                out[n] = out[n].minus(&a.times(&self.coeffs[n - k]));
            }
        }
        Series { coeffs: out }
    }

    /// Divides by `(1 - a·q^k)`; for `k = 0` the factor `1 - a` must be a
    /// unit.
    pub fn div_binomial(&self, a: &R, k: usize) -> Result<Self> {
        if k == 0 {
            let inv = R::one()
                .minus(a)
                .unit_inverse()
                .ok_or(QSeriesError::NonUnit)?;
            return Ok(self.scale(&inv));
        }
        let mut out = self.coeffs.clone();
        for n in k..out.len() {
            if !out[n - k].is_zero() {
                out[n] = out[n].plus(&a.times(&out[n - k]));
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Coefficients of `q^{m·n + r}`, reindexed by `n`.
    pub fn sift(&self, m: usize, r: usize) -> Result<Self> {
        if m == 0 || r >= m {
            return Err(QSeriesError::BadProgression { m, r });
        }
        Ok(Series {
            coeffs: self.coeffs.iter().skip(r).step_by(m).cloned().collect(),
        })
    }

    /// Substitutes `q → q^k`, keeping the same order.
    pub fn dilate(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_terms(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .take(if k == 0 { 1 } else { n.div_ceil(k) })
                .map(|(i, c)| (i * k, c.clone())),
        )
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); k.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        Series { coeffs }
    }

    /// Equality of the first `n` coefficients; both orders must reach `n`.
    pub fn eq_upto(&self, other: &Self, n: usize) -> bool {
        n <= self.order() && n <= other.order() && self.coeffs[..n] == other.coeffs[..n]
    }

    /// Smallest index below both orders where the series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}
