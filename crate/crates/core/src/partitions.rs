//! Integer partitions and the geometry of their Young diagrams.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! Rows and columns of the diagram are numbered from 1, so the cell in row
//! `i` and column `j` is in the diagram exactly when `j <= parts[i - 1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`] and the other enumerators
/// built on it.
pub const MAX_ENUMERATION_DEGREE: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// A cell of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped; the
    /// remaining parts must be positive and weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero before a positive part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// The partition of zero. Only used as the `mu` of the pair `((1), ())`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n]).expect("single part is valid")
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::new(vec![1; n]).expect("all-ones is valid")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based); zero past the first row's length.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells in row-major reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first).map(|j| self.col_len(j)).collect::<Vec<_>>();
        Partition { parts, n: self.n }
    }

    /// Outer corners of the diagram, in increasing row order.
    pub fn removable_cells(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::NoBoxes);
        }
        let k = self.parts.len();
        Ok((0..k)
            .filter(|&i| i + 1 == k || self.parts[i] > self.parts[i + 1])
            .map(|i| Cell::new(i + 1, self.parts[i]))
            .collect())
    }

    /// The partition left after deleting `cell`, which must be removable.
    pub fn remove_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells()?.contains(&cell) {
            return Err(Error::InvalidPartition(format!("{cell} is not a removable cell of {self}")));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Partition::new(parts)
    }

    /// Whether `mu` is obtained from `self` by removing one cell.
    pub fn covers(&self, mu: &Partition) -> bool {
        self.covering_cell(mu).is_some()
    }

    fn covering_cell(&self, mu: &Partition) -> Option<Cell> {
        if mu.n + 1 != self.n {
            return None;
        }
        let mut differing = None;
        for i in 0..self.parts.len() {
            let a = self.parts[i];
            let b = mu.parts.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => {}
                Ordering::Greater if a == b + 1 && differing.is_none() => differing = Some(Cell::new(i + 1, a)),
                _ => return None,
            }
        }
        if mu.parts.len() > self.parts.len() {
            return None;
        }
        differing
    }

    /// The cell `self \ mu` of a covering pair.
    pub fn removed_cell(&self, mu: &Partition) -> Result<Cell> {
        self.covering_cell(mu).ok_or_else(|| Error::NotCovering { lam: self.to_string(), mu: mu.to_string() })
    }

    /// Every `mu` covered by `self`, in the order of the removable cells.
    pub fn covered(&self) -> Vec<Partition> {
        self.removable_cells()
            .unwrap_or_default()
            .into_iter()
            .map(|c| self.remove_cell(c).expect("corner is removable"))
            .collect()
    }

    /// Hook length of a cell of the diagram.
    pub fn hook(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Dimension of the irreducible representation indexed by this partition,
    /// by the hook length formula.
    ///
    /// Panics if the dimension does not fit in a `u64` (well beyond n = 30).
    pub fn dimension(&self) -> u64 {
        let mut num = BigUint::one();
        for k in 2..=self.n {
            num *= k;
        }
        let den: BigUint = self.cells().map(|c| BigUint::from(self.hook(c))).product();
        (num / den).to_u64().expect("dimension overflows u64")
    }

    /// The sign of a permutation of this cycle type.
    pub fn cycle_type_sign(&self) -> i64 {
        if (self.n - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the parts. Reverse-lexicographic enumeration is the
/// descending order of this.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`. Whitespace around parts is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty input".into()));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let p = Partition::new(parts)?;
        if p.is_empty() {
            return Err(Error::InvalidPartition("partition of zero".into()));
        }
        Ok(p)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(Error::OutOfRange { n, min: 1, max: MAX_ENUMERATION_DEGREE });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone(), n: current.iter().sum() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All covering pairs `(lam, mu)` with `lam` a partition of `n`, ordered by
/// `lam` then `mu`, both reverse-lexicographically.
pub fn covering_pairs(n: usize) -> Result<Vec<(Partition, Partition)>> {
    let mut pairs = Vec::new();
    for lam in enumerate_partitions(n)? {
        let mut mus = lam.covered();
        mus.sort_by(|a, b| b.cmp(a));
        pairs.extend(mus.into_iter().map(|mu| (lam.clone(), mu)));
    }
    Ok(pairs)
}
