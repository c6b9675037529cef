//! Canonical integer partitions and Young-diagram surgery.
//!
//! A [`Partition`] is stored as its nonincreasing list of positive parts.
//! Cells use 1-based English coordinates: `row` counts down from the top,
//! `col` counts right from the left edge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// One way of removing a border strip from a partition.
///
/// `cells` lists the removed cells in an order in which they can be
/// attached back to `result` one at a time with every intermediate shape a
/// partition: rows top to bottom, each row left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StripRemoval {
    pub result: Partition,
    pub head: Cell,
    pub length: usize,
    pub cells: Vec<Cell>,
}

impl Partition {
    /// Canonicalizes an arbitrary list: zeros dropped, parts sorted
    /// nonincreasing.
    pub fn from_parts<I: IntoIterator<Item = usize>>(raw: I) -> Self {
        let mut parts: Vec<usize> = raw.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds from parts already known to be nonincreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `j`-th part (1-based); 0 past the end.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// Multiplicity of `value` as a part.
    pub fn frequency(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// `f[v]` = multiplicity of `v`, for `v` in `0..=largest`.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut f = vec![0; self.largest() + 1];
        for &p in &self.parts {
            f[p] += 1;
        }
        f
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.largest());
        for j in 1..=self.largest() {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts }
    }

    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// `O(π')` without building the conjugate: columns of odd length `j`
    /// number `λ_j - λ_{j+1}`.
    pub fn conjugate_odd_part_count(&self) -> usize {
        (1..=self.len())
            .step_by(2)
            .map(|j| self.part(j) - self.part(j + 1))
            .sum()
    }

    /// Side of the Durfee square: the largest `j` with `part(j) >= j`.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row) >= cell.col
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Number of cells of each residue `col - row (mod t)`.
    pub fn residue_counts(&self, t: usize) -> Result<Vec<usize>> {
        check_modulus(t)?;
        let mut r = vec![0; t];
        for cell in self.cells() {
            r[cell.content().rem_euclid(t as i64) as usize] += 1;
        }
        Ok(r)
    }

    /// Hook length of a cell inside the diagram.
    pub fn hook_length(&self, cell: Cell) -> Option<usize> {
        if !self.contains_cell(cell) {
            return None;
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        Some(arm + leg + 1)
    }

    pub fn add_cell(&self, at: Cell) -> Result<Partition> {
        let addable = at.row >= 1
            && at.row <= self.len() + 1
            && at.col == self.part(at.row) + 1
            && (at.row == 1 || self.part(at.row - 1) >= at.col);
        if !addable {
            return Err(CoreError::NotAddable {
                partition: self.clone(),
                cell: at,
            });
        }
        let mut parts = self.parts.clone();
        if at.row > parts.len() {
            parts.push(1);
        } else {
            parts[at.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Every border strip of `len` cells whose removal leaves a partition.
    ///
    /// Strips correspond to cells of hook length `len`; the strip of cell
    /// `(i, j)` runs along the rim from the end of row `i` down to the
    /// bottom of column `j`. Results are ordered by head row, i.e. walking
    /// the rim from North-East to South-West.
    pub fn rim_hook_removals(&self, len: usize) -> Vec<StripRemoval> {
        if len == 0 {
            return Vec::new();
        }
        let conj = self.conjugate();
        let mut out = Vec::new();
        for i in 1..=self.len() {
            for j in 1..=self.part(i) {
                let foot = conj.part(j);
                let hook = self.part(i) - j + foot - i + 1;
                if hook != len {
                    continue;
                }
                let mut parts = self.parts.clone();
                for r in i..foot {
                    parts[r - 1] = self.part(r + 1) - 1;
                }
                parts[foot - 1] = j - 1;
                let result = Partition::from_sorted(parts.into_iter().filter(|&p| p > 0).collect());
                let mut cells = Vec::with_capacity(len);
                for r in i..=foot {
                    for c in (result.part(r) + 1)..=self.part(r) {
                        cells.push(Cell::new(r, c));
                    }
                }
                debug_assert_eq!(cells.len(), len);
                out.push(StripRemoval {
                    result,
                    head: Cell::new(i, self.part(i)),
                    length: len,
                    cells,
                });
            }
        }
        out
    }

    /// Removes `t`-rim hooks until none is left, always taking the first
    /// strip in rim order.
    pub fn strip_to_core(&self, t: usize) -> Result<Partition> {
        check_modulus(t)?;
        let mut current = self.clone();
        while let Some(r) = current.rim_hook_removals(t).into_iter().next() {
            current = r.result;
        }
        Ok(current)
    }

    /// True when no hook length equals `t`.
    pub fn is_core(&self, t: usize) -> bool {
        let conj = self.conjugate();
        !(1..=self.len()).any(|i| {
            (1..=self.part(i)).any(|j| self.part(i) - j + conj.part(j) - i + 1 == t)
        })
    }

    /// Comma-separated parts; empty string for the empty partition.
    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Multiplicity notation with increasing part sizes, e.g. `(1^2,3^1)`.
    pub fn frequency_notation(&self) -> String {
        let f = self.frequencies();
        let body: Vec<String> = f
            .iter()
            .enumerate()
            .filter(|&(v, &m)| v > 0 && m > 0)
            .map(|(v, m)| format!("{v}^{m}"))
            .collect();
        format!("({})", body.join(","))
    }
}

pub(crate) fn check_modulus(t: usize) -> Result<()> {
    if t < 2 {
        Err(CoreError::InvalidModulus(t))
    } else {
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let v: usize = tok.trim().parse().map_err(|_| CoreError::Parse {
                input: s.to_string(),
                reason: format!("{:?} is not a nonnegative integer", tok.trim()),
            })?;
            parts.push(v);
        }
        Ok(Partition::from_parts(parts))
    }
}

impl From<Vec<usize>> for Partition {
    fn from(raw: Vec<usize>) -> Self {
        Partition::from_parts(raw)
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<usize>,
    weight: usize,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionRepr {
            parts: self.parts.clone(),
            weight: self.weight(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PartitionRepr::deserialize(deserializer)?;
        let p = Partition::from_parts(repr.parts);
        if p.weight() != repr.weight {
            return Err(serde::de::Error::custom(format!(
                "weight {} does not match parts summing to {}",
                repr.weight,
                p.weight()
            )));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.iter().copied())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 4, 0, 1]).parts(), &[4, 1, 1]);
        assert!(p(&[]).is_empty());
        assert_eq!(p(&[3, 3, 3]).parts(), &[3, 3, 3]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(p(&[5, 4, 3, 3, 1, 1]).conjugate(), p(&[6, 4, 4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn odd_parts_and_durfee() {
        assert_eq!(p(&[5, 4, 3, 3, 1, 1]).odd_part_count(), 5);
        assert_eq!(Partition::empty().odd_part_count(), 0);
        assert_eq!(p(&[2, 2]).odd_part_count(), 0);
        assert_eq!(p(&[3, 3, 3]).durfee_size(), 3);
        assert_eq!(Partition::empty().durfee_size(), 0);
        assert_eq!(p(&[4, 1]).durfee_size(), 1);
    }

    #[test]
    fn residues() {
        assert_eq!(p(&[2, 1]).residue_counts(2).unwrap(), vec![1, 2]);
        assert_eq!(Partition::empty().residue_counts(5).unwrap(), vec![0; 5]);
        assert_eq!(p(&[3, 3, 3]).residue_counts(3).unwrap(), vec![3, 3, 3]);
        assert_eq!(
            p(&[2]).residue_counts(1),
            Err(CoreError::InvalidModulus(1))
        );
    }

    #[test]
    fn adding_cells() {
        assert_eq!(p(&[2, 1]).add_cell(Cell::new(1, 3)).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::empty().add_cell(Cell::new(1, 1)).unwrap(), p(&[1]));
        assert_eq!(p(&[2, 1]).add_cell(Cell::new(3, 1)).unwrap(), p(&[2, 1, 1]));
        assert!(p(&[2, 1]).add_cell(Cell::new(2, 3)).is_err());
        assert!(p(&[2, 1]).add_cell(Cell::new(4, 1)).is_err());
        assert!(p(&[2, 1]).add_cell(Cell::new(1, 4)).is_err());
        assert!(p(&[2, 2]).add_cell(Cell::new(2, 3)).is_err());
    }

    #[test]
    fn rim_hooks() {
        let r = p(&[5]).rim_hook_removals(5);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].result, Partition::empty());
        assert_eq!(r[0].head, Cell::new(1, 5));

        // five cells, but the 2x2 block keeps it from being a strip
        assert!(p(&[3, 2]).rim_hook_removals(5).is_empty());
        let r = p(&[3, 1, 1]).rim_hook_removals(5);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].result, Partition::empty());
        assert_eq!(r[0].head, Cell::new(1, 3));

        let r = p(&[3, 2]).rim_hook_removals(4);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].result, p(&[1]));
        assert_eq!(r[0].head, Cell::new(1, 3));
        assert_eq!(
            r[0].cells,
            vec![Cell::new(1, 2), Cell::new(1, 3), Cell::new(2, 1), Cell::new(2, 2)]
        );

        assert!(p(&[1]).rim_hook_removals(2).is_empty());
        assert!(p(&[4, 1]).rim_hook_removals(0).is_empty());
    }

    #[test]
    fn cores() {
        assert_eq!(p(&[5]).strip_to_core(5).unwrap(), Partition::empty());
        assert_eq!(p(&[3, 2]).strip_to_core(5).unwrap(), p(&[3, 2]));
        assert_eq!(p(&[3, 1, 1]).strip_to_core(5).unwrap(), Partition::empty());
        assert_eq!(p(&[4]).strip_to_core(5).unwrap(), p(&[4]));
        assert_eq!(p(&[9]).strip_to_core(5).unwrap(), p(&[4]));
        assert!(p(&[3, 1]).is_core(5));
        assert!(p(&[3, 2]).is_core(5));
        assert!(!p(&[3, 1, 1]).is_core(5));
        assert!(p(&[2, 1]).is_core(2));
    }

    #[test]
    fn text_and_json() {
        let q: Partition = "1,4,0,1".parse().unwrap();
        assert_eq!(q.to_csv(), "4,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"parts":[4,1,1],"weight":6}"#);
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>(r#"{"parts":[2],"weight":3}"#).is_err());
        assert_eq!(p(&[3, 1, 1]).frequency_notation(), "(1^2,3^1)");
        assert_eq!(Partition::empty().frequency_notation(), "()");
    }
}
