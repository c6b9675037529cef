//! Exact coefficient rings for truncated q-series.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative ring with decidable equality.
///
/// Elements are always kept in a canonical form so that `==` is ring
/// equality.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;

    /// Multiplicative inverse, when `self` is a unit the ring can certify.
    fn unit_inverse(&self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    fn scaled(&self, k: i64) -> Self {
        self.times(&Self::from_i64(k))
    }
}

/// Inverse of an element of finite multiplicative order at most `bound`.
fn torsion_inverse<R: Ring>(x: &R, bound: u32) -> Option<R> {
    let mut acc = R::one();
    for _ in 0..bound {
        let next = acc.times(x);
        if next == R::one() {
            return Some(acc);
        }
        acc = next;
    }
    None
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs() == One::one()).then(|| self.clone())
    }
}

/// Number of auxiliary variables in a [`Laurent`] monomial.
pub const NVARS: usize = 3;

/// Default variable names for display.
pub const VAR_NAMES: [&str; NVARS] = ["x", "y", "z"];

/// Exponent vector of a Laurent monomial.
pub type Monomial = [i32; NVARS];

/// Sparse Laurent polynomial in `x, y, z` with coefficients in `R`.
/// No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> Laurent<R> {
    pub fn monomial(exponents: Monomial, coeff: R) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Laurent { terms }
    }

    /// `v^k` for variable index `v`.
    pub fn var_pow(v: usize, k: i32) -> Self {
        let mut e = [0; NVARS];
        e[v] = k;
        Self::monomial(e, R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Monomial) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, e: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(R::zero);
        *slot = slot.plus(&c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Ring homomorphism sending each monomial to `image(exponents)`.
    pub fn evaluate<S: Ring>(&self, coeff: impl Fn(&R) -> S, image: impl Fn(&Monomial) -> S) -> S {
        self.terms
            .iter()
            .fold(S::zero(), |acc, (e, c)| acc.plus(&coeff(c).times(&image(e))))
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(*e, c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn negated(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.negated())).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = [0; NVARS];
                for k in 0..NVARS {
                    e[k] = e1[k] + e2[k];
                }
                out.accumulate(e, c1.times(c2));
            }
        }
        out
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv = c.unit_inverse()?;
        Some(Self::monomial(e.map(|k| -k), inv))
    }
}

/// `Z[ξ]`-style ring `R[ξ]/(1+ξ+ξ²+ξ³+ξ⁴)`. Stored as coefficients of
/// `1, ξ, …, ξ⁴` normalized so that the `ξ⁴` coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic5<R> {
    c: [R; 5],
}

impl<R: Ring> Cyclotomic5<R> {
    /// Reduces an arbitrary combination of `1, ξ, …, ξ⁴`.
    pub fn from_coeffs(c: [R; 5]) -> Self {
        let top = c[4].clone();
        Cyclotomic5 {
            c: c.map(|x| x.minus(&top)),
        }
    }

    /// `ξ^k` for any integer `k`.
    pub fn xi_pow(k: i64) -> Self {
        let mut c: [R; 5] = std::array::from_fn(|_| R::zero());
        c[k.rem_euclid(5) as usize] = R::one();
        Self::from_coeffs(c)
    }

    pub fn embed(r: R) -> Self {
        let mut c: [R; 5] = std::array::from_fn(|_| R::zero());
        c[0] = r;
        Cyclotomic5 { c }
    }

    /// Reduced coefficients of `1, ξ, ξ², ξ³` (the `ξ⁴` one is zero).
    pub fn coeffs(&self) -> &[R; 5] {
        &self.c
    }
}

impl<R: Ring> Ring for Cyclotomic5<R> {
    fn zero() -> Self {
        Self::embed(R::zero())
    }
    fn one() -> Self {
        Self::embed(R::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::embed(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        Cyclotomic5 {
            c: std::array::from_fn(|k| self.c[k].plus(&other.c[k])),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        Cyclotomic5 {
            c: std::array::from_fn(|k| self.c[k].minus(&other.c[k])),
        }
    }
    fn negated(&self) -> Self {
        Cyclotomic5 {
            c: std::array::from_fn(|k| self.c[k].negated()),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let mut c: [R; 5] = std::array::from_fn(|_| R::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                let k = (i + j) % 5;
                c[k] = c[k].plus(&self.c[i].times(&other.c[j]));
            }
        }
        Self::from_coeffs(c)
    }
    fn unit_inverse(&self) -> Option<Self> {
        torsion_inverse(self, 40)
    }
}

/// `R[y]/(y⁴ - 1)`; equality here is equality at all four fourth roots of
/// unity simultaneously.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourthRoot<R> {
    c: [R; 4],
}

impl<R: Ring> FourthRoot<R> {
    pub fn from_coeffs(c: [R; 4]) -> Self {
        FourthRoot { c }
    }

    /// `y^k` for any integer `k`.
    pub fn y_pow(k: i64) -> Self {
        let mut c: [R; 4] = std::array::from_fn(|_| R::zero());
        c[k.rem_euclid(4) as usize] = R::one();
        FourthRoot { c }
    }

    pub fn embed(r: R) -> Self {
        let mut c: [R; 4] = std::array::from_fn(|_| R::zero());
        c[0] = r;
        FourthRoot { c }
    }

    pub fn coeffs(&self) -> &[R; 4] {
        &self.c
    }
}

impl<R: Ring> Ring for FourthRoot<R> {
    fn zero() -> Self {
        Self::embed(R::zero())
    }
    fn one() -> Self {
        Self::embed(R::one())
    }
    fn from_i64(v: i64) -> Self {
        Self::embed(R::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        FourthRoot {
            c: std::array::from_fn(|k| self.c[k].plus(&other.c[k])),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        FourthRoot {
            c: std::array::from_fn(|k| self.c[k].minus(&other.c[k])),
        }
    }
    fn negated(&self) -> Self {
        FourthRoot {
            c: std::array::from_fn(|k| self.c[k].negated()),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let mut c: [R; 4] = std::array::from_fn(|_| R::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                let k = (i + j) % 4;
                c[k] = c[k].plus(&self.c[i].times(&other.c[j]));
            }
        }
        FourthRoot { c }
    }
    fn unit_inverse(&self) -> Option<Self> {
        torsion_inverse(self, 40)
    }
}
