//! t-cores, t-quotients, n-vectors and alpha-vectors.
//!
//! The core/quotient split is computed on the t-runner abacus. Row `j` of a
//! partition contributes the bead `λ_j - j` (its exposed content); bead `c`
//! sits on runner `c mod t` in region `⌊c/t⌋ + 1`. The charge of runner `i`
//! relative to the empty partition is the n-vector entry `n_i`.
//!
//! Quotient slot `i` holds the partition read off the *gaps* of runner `i`,
//! i.e. the conjugate of the partition formed by its beads. With this
//! labelling `(9)` at `t = 5` splits as core `(4)` with `(1)` in slot 3, and
//! the 2-quotient of `(5,4,1)` has part counts differing by one.

use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::partition::{check_modulus, Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoreQuotient {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    /// Total weight `|core| + t·Σ|quotient_i|`.
    pub fn weight(&self) -> usize {
        self.core.weight() + self.t * self.quotient_weight()
    }

    pub fn quotient_weight(&self) -> usize {
        self.quotient.iter().map(Partition::weight).sum()
    }
}

/// Integer t-tuple with zero sum encoding a t-core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NVector(Vec<i64>);

impl NVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(CoreError::InvalidModulus(coords.len()));
        }
        if coords.iter().sum::<i64>() != 0 {
            return Err(CoreError::InvalidNVector { coords });
        }
        Ok(NVector(coords))
    }

    pub fn zero(t: usize) -> Self {
        NVector(vec![0; t])
    }

    pub fn t(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// `n · (0, 1, ..., t-1)`.
    pub fn dot_b(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, x)| i as i64 * x).sum()
    }

    /// Weight of the encoded core, `(t/2)·‖n‖² + n·b`.
    pub fn weight(&self) -> i64 {
        let t = self.t() as i64;
        let twice = t * self.norm_sq() + 2 * self.dot_b();
        debug_assert_eq!(twice % 2, 0);
        twice / 2
    }

    /// The n-vector of the conjugate core, `(-n_{t-1}, ..., -n_0)`.
    pub fn conjugate(&self) -> NVector {
        NVector(self.0.iter().rev().map(|x| -x).collect())
    }
}

/// Integer 5-tuple with coordinate sum 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AlphaVector([i64; 5]);

impl AlphaVector {
    pub fn new(coords: [i64; 5]) -> Result<Self> {
        let sum: i64 = coords.iter().sum();
        if sum != 1 {
            return Err(CoreError::InvalidAlpha { coords, sum });
        }
        Ok(AlphaVector(coords))
    }

    pub fn coords(&self) -> [i64; 5] {
        self.0
    }

    /// `‖α‖² - (α0α1 + α1α2 + α2α3 + α3α4 + α4α0)`.
    pub fn q_form(&self) -> i64 {
        let a = self.0;
        let sq: i64 = a.iter().map(|x| x * x).sum();
        let cross: i64 = (0..5).map(|i| a[i] * a[(i + 1) % 5]).sum();
        sq - cross
    }

    /// Cyclic shift `(α4, α0, α1, α2, α3)`.
    pub fn rotate(&self) -> AlphaVector {
        let a = self.0;
        AlphaVector([a[4], a[0], a[1], a[2], a[3]])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    /// Exposed.
    E,
    /// Not exposed.
    N,
}

/// Exposure words of the extended t-residue diagram over a finite window of
/// regions. Left of the window every word reads `E`, right of it `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorWords {
    pub t: usize,
    pub base_region: i64,
    pub window: Vec<Vec<Letter>>,
}

impl ColorWords {
    pub fn letter(&self, color: usize, region: i64) -> Letter {
        let offset = region - self.base_region;
        if offset < 0 {
            Letter::E
        } else {
            self.window[color]
                .get(offset as usize)
                .copied()
                .unwrap_or(Letter::N)
        }
    }

    /// Region of the last `E` when the word has the shape `...E E N N...`.
    pub fn last_exposed(&self, color: usize) -> Option<i64> {
        let w = &self.window[color];
        let k = w.iter().take_while(|&&l| l == Letter::E).count();
        if w[k..].iter().all(|&l| l == Letter::N) {
            Some(self.base_region + k as i64 - 1)
        } else {
            None
        }
    }

    pub fn is_core_form(&self) -> bool {
        (0..self.t).all(|i| self.last_exposed(i).is_some())
    }
}

/// Exposure words of `p`. A cell is exposed when it ends its row; rows past
/// the last part end in column 0, and row 0 never ends.
pub fn words(p: &Partition, t: usize) -> Result<ColorWords> {
    check_modulus(t)?;
    let ti = t as i64;
    let len = p.len() as i64;
    let region = |c: i64| c.div_euclid(ti) + 1;
    let lo = region(-len - 1) - 1;
    let hi = region(p.largest() as i64 - 1) + 1;
    let exposed = |c: i64| -> bool {
        if c < -len {
            return true;
        }
        (1..=p.len()).any(|j| p.part(j) as i64 - j as i64 == c)
    };
    let window = (0..t)
        .map(|i| {
            (lo..=hi)
                .map(|r| {
                    if exposed(ti * (r - 1) + i as i64) {
                        Letter::E
                    } else {
                        Letter::N
                    }
                })
                .collect()
        })
        .collect();
    Ok(ColorWords {
        t,
        base_region: lo,
        window,
    })
}

/// Runner charges and bead partitions of `p` on the t-abacus.
fn abacus(p: &Partition, t: usize) -> (Vec<i64>, Vec<Partition>) {
    let m = p.len().div_ceil(t);
    let k = t * m;
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); t];
    for j in 1..=k {
        let b = p.part(j) + k - j;
        levels[b % t].push(b / t);
    }
    let mut charges = Vec::with_capacity(t);
    let mut beads = Vec::with_capacity(t);
    for lv in levels {
        // already decreasing: bead positions fall as j grows
        let count = lv.len();
        charges.push(count as i64 - m as i64);
        let parts = lv.iter().enumerate().map(|(j, &l)| l - (count - 1 - j));
        beads.push(Partition::from_parts(parts));
    }
    (charges, beads)
}

/// Inverse of [`abacus`].
fn assemble(t: usize, charges: &[i64], beads: &[Partition]) -> Partition {
    let m = charges
        .iter()
        .zip(beads)
        .map(|(&n, b)| (b.len() as i64 - n).max(0))
        .max()
        .unwrap_or(0) as usize;
    let k = t * m;
    let mut positions = Vec::with_capacity(k);
    for (i, (&n, b)) in charges.iter().zip(beads).enumerate() {
        let count = (m as i64 + n) as usize;
        for j in 1..=count {
            let level = count - j + b.part(j);
            positions.push(t * level + i);
        }
    }
    debug_assert_eq!(positions.len(), k);
    positions.sort_unstable_by(|a, b| b.cmp(a));
    let parts = positions.iter().enumerate().map(|(j, &b)| b + j + 1 - k);
    Partition::from_parts(parts)
}

/// The Littlewood decomposition of `p` into its t-core and t-quotient.
pub fn phi1(p: &Partition, t: usize) -> Result<CoreQuotient> {
    check_modulus(t)?;
    let (charges, beads) = abacus(p, t);
    let empties = vec![Partition::empty(); t];
    Ok(CoreQuotient {
        t,
        core: assemble(t, &charges, &empties),
        quotient: beads.iter().map(Partition::conjugate).collect(),
    })
}

pub fn phi1_inv(cq: &CoreQuotient) -> Result<Partition> {
    check_modulus(cq.t)?;
    if cq.quotient.len() != cq.t {
        return Err(CoreError::QuotientLength {
            got: cq.quotient.len(),
            t: cq.t,
        });
    }
    let (charges, core_beads) = abacus(&cq.core, cq.t);
    if core_beads.iter().any(|b| !b.is_empty()) {
        return Err(CoreError::NotACore {
            partition: cq.core.clone(),
            t: cq.t,
        });
    }
    let beads: Vec<Partition> = cq.quotient.iter().map(Partition::conjugate).collect();
    Ok(assemble(cq.t, &charges, &beads))
}

/// True when `p` has no rim hook of length `t` (abacus test).
pub fn is_t_core(p: &Partition, t: usize) -> bool {
    t >= 2 && abacus(p, t).1.iter().all(Partition::is_empty)
}

/// n-vector of a t-core from its residue counts: `n_i = r_i - r_{i+1}`.
pub fn phi2(core: &Partition, t: usize) -> Result<NVector> {
    check_modulus(t)?;
    if !is_t_core(core, t) {
        return Err(CoreError::NotACore {
            partition: core.clone(),
            t,
        });
    }
    let r = core.residue_counts(t)?;
    let coords = (0..t).map(|i| r[i] as i64 - r[(i + 1) % t] as i64).collect();
    Ok(NVector(coords))
}

pub fn phi2_inv(n: &NVector) -> Partition {
    let t = n.t();
    assemble(t, n.coords(), &vec![Partition::empty(); t])
}

/// Solves `n0 = α0+α4, n1 = -α0+α1+α4, n2 = -α1+α2, n3 = -α2+α3-α4,
/// n4 = -α3-α4` with `Σα = 1`.
pub fn alpha_from_n(n: &NVector) -> Result<AlphaVector> {
    if n.t() != 5 {
        return Err(CoreError::InvalidModulus(n.t()));
    }
    let dot = n.dot_b().rem_euclid(5);
    if dot != 4 {
        return Err(CoreError::CongruenceViolation {
            coords: n.coords().to_vec(),
            dot,
        });
    }
    let c = n.coords();
    let a4 = (-n.dot_b() - 1) / 5;
    let a0 = c[0] - a4;
    let a1 = c[1] + a0 - a4;
    let a2 = c[2] + a1;
    let a3 = c[3] + a2 + a4;
    AlphaVector::new([a0, a1, a2, a3, a4])
}

pub fn n_from_alpha(a: &AlphaVector) -> NVector {
    let [a0, a1, a2, a3, a4] = a.coords();
    NVector(vec![
        a0 + a4,
        -a0 + a1 + a4,
        -a1 + a2,
        -a2 + a3 - a4,
        -a3 - a4,
    ])
}

pub fn q_alpha(a: &AlphaVector) -> i64 {
    a.q_form()
}

/// Weight of the 3-core with n-vector `(-n1-n2, n1, n2)`.
pub fn q3(n1: i64, n2: i64) -> i64 {
    3 * (n1 * n1 + n1 * n2 + n2 * n2) + n1 + 2 * n2
}

/// Combined 5-core/quotient bijection for weights ≡ 4 (mod 5).
pub fn capital_phi(p: &Partition) -> Result<(AlphaVector, Vec<Partition>)> {
    let weight = p.weight();
    if weight % 5 != 4 {
        return Err(CoreError::WrongResidue { weight });
    }
    let cq = phi1(p, 5)?;
    let alpha = alpha_from_n(&phi2(&cq.core, 5)?)?;
    Ok((alpha, cq.quotient))
}

pub fn capital_phi_inv(alpha: &AlphaVector, quotient: &[Partition]) -> Result<Partition> {
    let core = phi2_inv(&n_from_alpha(alpha));
    phi1_inv(&CoreQuotient {
        t: 5,
        core,
        quotient: quotient.to_vec(),
    })
}

/// All n-vectors of length `t` whose core weight is at most `max_weight`,
/// in lexicographic order.
pub fn nvectors_up_to(t: usize, max_weight: usize) -> Result<Vec<NVector>> {
    let mut out = Vec::new();
    for_each_nvector(t, max_weight, |c, _| out.push(NVector(c.to_vec())))?;
    Ok(out)
}

/// Calls `visit(coords, weight)` for every n-vector of core weight at most
/// `max_weight`, in lexicographic order.
///
/// Writing `2·weight = Σ (t·n_i² + (2i - t + 1)·n_i)` (valid because the
/// coordinates sum to zero) splits the weight into per-coordinate terms,
/// each bounded below; the search prunes on the sum of those lower bounds.
pub fn for_each_nvector(
    t: usize,
    max_weight: usize,
    mut visit: impl FnMut(&[i64], usize),
) -> Result<()> {
    check_modulus(t)?;
    let ti = t as i64;
    let term = |i: usize, x: i64| ti * x * x + (2 * i as i64 - ti + 1) * x;
    // over the integers each term is minimized at -1, 0 or 1
    let min_term: Vec<i64> = (0..t)
        .map(|i| (-1..=1).map(|x| term(i, x)).min().unwrap())
        .collect();
    let mut suffix = vec![0i64; t + 1];
    for i in (0..t).rev() {
        suffix[i] = suffix[i + 1] + min_term[i];
    }
    let mut search = Search {
        t,
        budget: 2 * max_weight as i64,
        suffix,
        term: &term,
        coords: vec![0; t],
        visit: &mut visit,
    };
    search.run(0, 0, 0);
    Ok(())
}

struct Search<'a> {
    t: usize,
    budget: i64,
    suffix: Vec<i64>,
    term: &'a dyn Fn(usize, i64) -> i64,
    coords: Vec<i64>,
    visit: &'a mut dyn FnMut(&[i64], usize),
}

impl Search<'_> {
    fn run(&mut self, i: usize, partial: i64, sum: i64) {
        let t = self.t;
        if i == t - 1 {
            let last = -sum;
            let total = partial + (self.term)(i, last);
            if total <= self.budget {
                self.coords[i] = last;
                (self.visit)(&self.coords, (total / 2) as usize);
            }
            return;
        }
        let room = self.budget - partial - self.suffix[i + 1];
        // t·x² + c·x ≤ room with |c| < 2t gives |x| ≤ sqrt(room/t) + 2
        let reach = ((room.max(0) as f64 / t as f64).sqrt() as i64) + 2;
        for x in -reach..=reach {
            let v = (self.term)(i, x);
            if v > room {
                continue;
            }
            self.coords[i] = x;
            self.run(i + 1, partial + v, sum + x);
        }
    }
}

/// a_t(n) by n-vector enumeration.
pub fn count_t_cores(n: usize, t: usize) -> Result<u64> {
    Ok(t_core_counts(t, n)?[n])
}

/// `[a_t(0), …, a_t(max_weight)]` by n-vector enumeration.
pub fn t_core_counts(t: usize, max_weight: usize) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_weight + 1];
    for_each_nvector(t, max_weight, |_, w| counts[w] += 1)?;
    Ok(counts)
}

/// One border strip attached while growing a quotient slot part by part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthStep {
    pub before: Partition,
    pub after: Partition,
    pub head: Cell,
    pub length: usize,
}

/// Rebuilds `phi1_inv(cq)` from the partition whose slot `slot` is empty by
/// attaching one border strip of length `t·μ_k` per part `μ_k` of that slot.
/// The k-th strip moves a single bead of runner `slot` into region
/// `n_slot + k`.
pub fn quotient_growth(cq: &CoreQuotient, slot: usize) -> Result<Vec<GrowthStep>> {
    let target = cq.quotient.get(slot).cloned().ok_or(CoreError::QuotientLength {
        got: cq.quotient.len(),
        t: cq.t,
    })?;
    let mut partial = cq.clone();
    partial.quotient[slot] = Partition::empty();
    let mut before = phi1_inv(&partial)?;
    let mut steps = Vec::with_capacity(target.len());
    for k in 1..=target.len() {
        partial.quotient[slot] = Partition::from_parts(target.parts()[..k].iter().copied());
        let after = phi1_inv(&partial)?;
        let length = cq.t * target.part(k);
        let removal = after
            .rim_hook_removals(length)
            .into_iter()
            .find(|r| r.result == before)
            .expect("consecutive quotient growth differs by one border strip");
        steps.push(GrowthStep {
            before,
            after: after.clone(),
            head: removal.head,
            length,
        });
        before = after;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    fn nv(c: &[i64]) -> NVector {
        NVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn words_of_small_partitions() {
        let w = words(&Partition::empty(), 2).unwrap();
        assert_eq!(w.last_exposed(0), Some(0));
        assert_eq!(w.last_exposed(1), Some(0));
        let w = words(&p(&[2, 1]), 2).unwrap();
        assert_eq!(w.last_exposed(0), Some(-1));
        assert_eq!(w.last_exposed(1), Some(1));
        let w = words(&p(&[9]), 5).unwrap();
        assert!(!w.is_core_form());
        assert_eq!(w.letter(3, 2), Letter::E);
        assert_eq!(w.letter(3, 1), Letter::N);
        assert_eq!(w.letter(0, -100), Letter::E);
        assert_eq!(w.letter(0, 100), Letter::N);
    }

    #[test]
    fn littlewood_examples() {
        let cq = phi1(&p(&[9]), 5).unwrap();
        assert_eq!(cq.core, p(&[4]));
        assert_eq!(cq.quotient[3], p(&[1]));
        assert_eq!(cq.quotient_weight(), 1);

        let cq = phi1(&p(&[5, 4, 1]), 2).unwrap();
        assert_eq!(cq.quotient[0].len() as i64 - cq.quotient[1].len() as i64, 1);

        let c = p(&[3, 1]);
        let cq = phi1(&c, 5).unwrap();
        assert_eq!(cq.core, c);
        assert!(cq.quotient.iter().all(Partition::is_empty));

        let mut q = vec![Partition::empty(); 5];
        q[3] = p(&[1]);
        let back = phi1_inv(&CoreQuotient { t: 5, core: p(&[4]), quotient: q }).unwrap();
        assert_eq!(back, p(&[9]));
    }

    #[test]
    fn phi1_inv_rejects_bad_input() {
        let bad = CoreQuotient { t: 5, core: p(&[5]), quotient: vec![Partition::empty(); 5] };
        assert!(matches!(phi1_inv(&bad), Err(CoreError::NotACore { .. })));
        let short = CoreQuotient { t: 5, core: p(&[4]), quotient: vec![Partition::empty(); 3] };
        assert!(matches!(phi1_inv(&short), Err(CoreError::QuotientLength { got: 3, t: 5 })));
    }

    #[test]
    fn nvector_examples() {
        let n = phi2(&p(&[2, 1]), 2).unwrap();
        assert_eq!(n.coords(), &[-1, 1]);
        assert_eq!(n.weight(), 3);
        assert_eq!(phi2(&Partition::empty(), 7).unwrap(), NVector::zero(7));
        assert_eq!(phi2_inv(&nv(&[-1, 1])), p(&[2, 1]));
        assert_eq!(phi2_inv(&NVector::zero(4)), Partition::empty());
        let c = phi2_inv(&nv(&[1, 1, 0, -1, -1]));
        assert_eq!(c.weight(), 4);
        assert!(is_t_core(&c, 5));
        assert!(matches!(phi2(&p(&[5]), 5), Err(CoreError::NotACore { .. })));
        assert!(NVector::new(vec![1, 0]).is_err());
    }

    #[test]
    fn alpha_examples() {
        let a = AlphaVector::new([1, 0, 0, 0, 0]).unwrap();
        assert_eq!(n_from_alpha(&a).coords(), &[1, -1, 0, 0, 0]);
        assert_eq!(q_alpha(&a), 1);
        let e4 = AlphaVector::new([0, 0, 0, 0, 1]).unwrap();
        assert_eq!(n_from_alpha(&e4).coords(), &[1, 1, 0, -1, -1]);
        assert_eq!(alpha_from_n(&nv(&[1, 1, 0, -1, -1])).unwrap(), e4);
        assert_eq!(q_alpha(&AlphaVector::new([1, 1, -1, 0, 0]).unwrap()), 3);
        assert!(AlphaVector::new([1, 1, 0, 0, 0]).is_err());
        assert!(matches!(
            alpha_from_n(&NVector::zero(5)),
            Err(CoreError::CongruenceViolation { dot: 0, .. })
        ));
    }

    #[test]
    fn q3_values() {
        assert_eq!(q3(0, 0), 0);
        assert_eq!(q3(0, -1), 1);
        assert_eq!(q3(1, 0), 4);
        let core = phi2_inv(&nv(&[1, 0, -1]));
        assert_eq!(core.weight() as i64, q3(0, -1));
    }

    #[test]
    fn capital_phi_examples() {
        let (alpha, q) = capital_phi(&p(&[4])).unwrap();
        assert!(q.iter().all(Partition::is_empty));
        assert_eq!(phi2_inv(&n_from_alpha(&alpha)), p(&[4]));
        let (alpha, q) = capital_phi(&p(&[9])).unwrap();
        assert_eq!(phi2_inv(&n_from_alpha(&alpha)), p(&[4]));
        assert_eq!(q[3], p(&[1]));
        assert_eq!(capital_phi_inv(&alpha, &q).unwrap(), p(&[9]));
        assert!(matches!(capital_phi(&p(&[5])), Err(CoreError::WrongResidue { weight: 5 })));
        for n in [9, 14] {
            for part in enumerate_partitions(n).unwrap() {
                let (a, q) = capital_phi(&part).unwrap();
                let qw: usize = q.iter().map(Partition::weight).sum();
                assert_eq!(n as i64, 5 * a.q_form() - 1 + 5 * qw as i64);
            }
        }
    }

    #[test]
    fn core_counts() {
        for n in 0..40usize {
            let triangular = (0..10).any(|k| k * (k + 1) / 2 == n);
            assert_eq!(count_t_cores(n, 2).unwrap(), triangular as u64, "n={n}");
        }
        assert_eq!(count_t_cores(4, 5).unwrap(), 5);
        assert_eq!(count_t_cores(9, 5).unwrap(), 5);
    }

    #[test]
    fn growth_heads() {
        let cq = phi1(&p(&[9]), 5).unwrap();
        let steps = quotient_growth(&cq, 3).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].before, p(&[4]));
        assert_eq!(steps[0].after, p(&[9]));
        assert_eq!(steps[0].head, Cell::new(1, 9));
        assert_eq!(steps[0].length, 5);
    }
}
