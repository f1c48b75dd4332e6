use std::fmt;

use super::vector::{low_mask, BitIter, BitVector, MAX_LEN};
use crate::error::{Error, Result};

/// Largest rank accepted by [`BitMatrix::row_space_iter`].
pub const ROW_SPACE_RANK_LIMIT: usize = 24;

/// Dense GF(2) matrix with every row packed into a single `u64`.
///
/// Column count is capped at 64. The row count is unbounded so that the
/// complete parity-check matrix (every dual codeword) can be materialized.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<u64>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows of the reduced form; row `i` has its leading one at `pivots[i]`.
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

/// Solution set of `M xᵀ = bᵀ`: a particular solution plus a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: BitVector,
    pub kernel: BitMatrix,
}

impl BitMatrix {
    /// An `0 × cols` matrix.
    pub fn empty(cols: usize) -> Result<Self> {
        if cols > MAX_LEN {
            return Err(Error::TooLong(cols));
        }
        Ok(Self {
            cols,
            rows: Vec::new(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        let mut m = Self::empty(cols)?;
        m.rows = vec![0; rows];
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_words(n, (0..n).map(|i| 1u64 << i).collect())
    }

    /// Builds a matrix from packed rows (bit `j` = column `j`).
    pub fn from_words(cols: usize, rows: Vec<u64>) -> Result<Self> {
        if cols > MAX_LEN {
            return Err(Error::TooLong(cols));
        }
        let mask = low_mask(cols);
        if let Some(bad) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(Error::IndexOutOfRange {
                index: (bad & !mask).trailing_zeros() as usize,
                len: cols,
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = BitVector>) -> Result<Self> {
        let mut words = Vec::new();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            words.push(r.bits());
        }
        Self::from_words(cols, words)
    }

    /// Parses rows written as `0`/`1` strings, all of equal length.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().trim().len());
        let parsed = rows
            .iter()
            .map(|r| r.as_ref().parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, parsed)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn words(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector::from_bits_unchecked(self.cols, self.rows[i])
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = BitVector> + '_ {
        self.rows
            .iter()
            .map(move |&w| BitVector::from_bits_unchecked(self.cols, w))
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row.bits());
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.rows[row] >> col) & 1 == 1
    }

    /// Column `j` as a vector of length `row_count` (needs `row_count ≤ 64`).
    pub fn column(&self, j: usize) -> Result<BitVector> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        let bits = self
            .rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &w)| acc | (((w >> j) & 1) << i));
        BitVector::from_bits(self.rows.len(), bits)
    }

    pub fn transpose(&self) -> Result<BitMatrix> {
        if self.rows.len() > MAX_LEN {
            return Err(Error::TooLong(self.rows.len()));
        }
        let cols = (0..self.cols)
            .map(|j| self.column(j).map(|c| c.bits()))
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_words(self.rows.len(), cols)
    }

    /// `M · vᵀ`: bit `i` of the result is the parity of row `i` restricted to `v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let bits = self
            .rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &w)| {
                acc | (u64::from((w & v.bits()).count_ones() & 1) << i)
            });
        BitVector::from_bits(self.rows.len(), bits)
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if other.cols != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(BitMatrix {
            cols: self.cols,
            rows,
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form; pivots are taken from the lowest-index row
    /// carrying the lowest-index remaining column.
    pub fn rref(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && *r & bit != 0 {
                    *r ^= pivot;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Echelon {
            matrix: BitMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        }
    }

    /// Basis of `{v : M vᵀ = 0}` in reduced echelon form.
    pub fn null_space_basis(&self) -> BitMatrix {
        let Echelon { matrix, pivots } = self.rref();
        let pivot_mask = pivots.iter().fold(0u64, |m, &p| m | 1 << p);
        let free = low_mask(self.cols) & !pivot_mask;
        let basis = BitIter(free)
            .map(|f| {
                let mut v = 1u64 << f;
                for (row, &p) in matrix.rows.iter().zip(&pivots) {
                    if row & (1 << f) != 0 {
                        v |= 1 << p;
                    }
                }
                v
            })
            .collect();
        BitMatrix {
            cols: self.cols,
            rows: basis,
        }
        .rref()
        .matrix
    }

    /// Submatrix made of the columns in `columns` (a bit mask), kept in
    /// ascending column order and packed to the low bits.
    pub fn select_columns(&self, columns: u64) -> Result<BitMatrix> {
        if columns & !low_mask(self.cols) != 0 {
            return Err(Error::IndexOutOfRange {
                index: (columns & !low_mask(self.cols)).trailing_zeros() as usize,
                len: self.cols,
            });
        }
        let rows = self.rows.iter().map(|&w| pack_bits(w, columns)).collect();
        Ok(BitMatrix {
            cols: columns.count_ones() as usize,
            rows,
        })
    }

    /// Solves `M xᵀ = bᵀ`. Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &BitVector) -> Result<Option<Solution>> {
        if b.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                found: b.len(),
            });
        }
        let mut rows: Vec<(u64, bool)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, b.get(i)))
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].0 & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && r.0 & bit != 0 {
                    r.0 ^= pivot.0;
                    r.1 ^= pivot.1;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if rows[rank..].iter().any(|&(_, rhs)| rhs) {
            return Ok(None);
        }
        let particular = rows[..rank]
            .iter()
            .zip(&pivots)
            .filter(|((_, rhs), _)| *rhs)
            .fold(0u64, |x, (_, &p)| x | 1 << p);
        Ok(Some(Solution {
            particular: BitVector::from_bits_unchecked(self.cols, particular),
            kernel: self.null_space_basis(),
        }))
    }

    /// Every element of the row space exactly once, in binary-reflected Gray
    /// code order over the reduced echelon basis (the zero word comes first).
    pub fn row_space_iter(&self) -> Result<RowSpace> {
        let basis = self.rref().matrix.rows;
        if basis.len() > ROW_SPACE_RANK_LIMIT {
            return Err(Error::GuardExceeded {
                what: "rank",
                value: basis.len(),
                limit: ROW_SPACE_RANK_LIMIT,
            });
        }
        Ok(RowSpace::new(self.cols, basis))
    }

    /// Rows whose row space equals that of `self`, canonical up to row space.
    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        self.cols == other.cols && self.rref().matrix == other.rref().matrix
    }

    /// True when every row is orthogonal to every row of `other`.
    pub fn orthogonal_to(&self, other: &BitMatrix) -> bool {
        self.rows
            .iter()
            .all(|&a| other.rows.iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    /// Rows sorted by printed (lexicographic) order.
    pub fn sorted_rows(&self) -> BitMatrix {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|&w| super::vector::reading_order_key(w, self.cols));
        BitMatrix {
            cols: self.cols,
            rows,
        }
    }

    /// True when no two rows coincide.
    pub fn rows_distinct(&self) -> bool {
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        rows.windows(2).all(|w| w[0] != w[1])
    }
}

/// Compresses the bits of `word` selected by `mask` into the low bits.
#[inline]
fn pack_bits(word: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, j) in BitIter(mask).enumerate() {
        out |= ((word >> j) & 1) << k;
    }
    out
}

/// Gray-code walk over a row space. See [`BitMatrix::row_space_iter`].
#[derive(Clone, Debug)]
pub struct RowSpace {
    cols: usize,
    basis: Vec<u64>,
    index: u64,
    current: u64,
}

impl RowSpace {
    /// Walks the span of `basis`, which must be linearly independent.
    pub(crate) fn new(cols: usize, basis: Vec<u64>) -> Self {
        Self {
            cols,
            basis,
            index: 0,
            current: 0,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Same walk yielding packed words.
    pub fn words(self) -> impl Iterator<Item = u64> {
        self.map(|v| v.bits())
    }
}

impl Iterator for RowSpace {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        let total = 1u64 << self.basis.len();
        if self.index >= total {
            return None;
        }
        if self.index > 0 {
            self.current ^= self.basis[self.index.trailing_zeros() as usize];
        }
        self.index += 1;
        Some(BitVector::from_bits_unchecked(self.cols, self.current))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = ((1u64 << self.basis.len()) - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for RowSpace {}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in self.rows() {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}
