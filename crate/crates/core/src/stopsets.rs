//! Stopping, dead-end and incorrigible sets of a parity-check matrix, their
//! enumerators, and the optimal (complete-matrix) enumerators of a code.
//!
//! Subsets of `{0, …, n-1}` are bit masks. Every enumerator walks all `2^n`
//! masks, split into fixed-size chunks that are counted independently and
//! summed, so the result does not depend on the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::LinearCode;
use crate::enumerator::Enumerator;
use crate::error::{Error, Result};
use crate::gf2::{low_mask, BitIter, BitMatrix, MAX_LEN};

/// Default cap on `n` for exhaustive subset enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 28;
/// Environment variable overriding [`DEFAULT_ENUMERATION_LIMIT`].
pub const ENUMERATION_LIMIT_VAR: &str = "STOPSET_MAX_N";
/// Caps for [`optimal_enumerators`].
pub const OPTIMAL_N_LIMIT: usize = 20;
pub const OPTIMAL_REDUNDANCY_LIMIT: usize = 16;

const CHUNK_BITS: usize = 12;

/// Current enumeration cap: `STOPSET_MAX_N` if set and valid, else 28.
pub fn enumeration_limit() -> usize {
    std::env::var(ENUMERATION_LIMIT_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_ENUMERATION_LIMIT, |v| v.min(MAX_LEN - 1))
}

fn guard_n(n: usize) -> Result<()> {
    let limit = enumeration_limit();
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit,
        });
    }
    Ok(())
}

/// A subset of the coordinate positions of a length-`n` code.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    mask: u64,
}

impl Subset {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::TooLong(n));
        }
        if mask & !low_mask(n) != 0 {
            return Err(Error::IndexOutOfRange {
                index: (mask & !low_mask(n)).trailing_zeros() as usize,
                len: n,
            });
        }
        Ok(Self { n, mask })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, low_mask(n))
    }

    /// From 0-based positions.
    pub fn from_positions(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for p in positions {
            if p >= n {
                return Err(Error::IndexOutOfRange { index: p, len: n });
            }
            mask |= 1 << p;
        }
        Self::new(n, mask)
    }

    /// From 1-based positions, the usual convention when writing codes by hand.
    pub fn from_one_based(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut zero_based = Vec::new();
        for p in positions {
            if p == 0 {
                return Err(Error::IndexOutOfRange { index: 0, len: n });
            }
            zero_based.push(p - 1);
        }
        Self::from_positions(n, zero_based)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, position: usize) -> bool {
        position < self.n && (self.mask >> position) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.mask & !other.mask == 0
    }

    /// 0-based positions, ascending.
    pub fn positions(&self) -> impl Iterator<Item = usize> {
        BitIter(self.mask)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.positions().map(|p| p + 1).collect()
    }
}

/// Printed with 1-based positions, e.g. `{1,2,7,8}`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{self}")
    }
}

/// Serialized as its 1-based positions.
impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

/// Smallest size of a nonempty stopping set.
///
/// When the matrix has no nonempty stopping set at all (only possible when the
/// dual contains every unit vector) the minimum is over an empty set; the
/// value is then reported as `n + 1` with [`StoppingDistance::Absent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StoppingDistance {
    Finite(usize),
    Absent,
}

impl StoppingDistance {
    pub fn finite(self) -> Option<usize> {
        match self {
            StoppingDistance::Finite(s) => Some(s),
            StoppingDistance::Absent => None,
        }
    }

    /// `s`, or the sentinel `n + 1`.
    pub fn value(self, n: usize) -> usize {
        self.finite().unwrap_or(n + 1)
    }

    fn from_enumerator(s: &Enumerator) -> Self {
        s.first_nonzero_from(1)
            .map_or(StoppingDistance::Absent, StoppingDistance::Finite)
    }
}

/// Stopping and dead-end enumerators of one matrix together with `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoppingProfile {
    pub stopping: Enumerator,
    pub dead_end: Enumerator,
    pub stopping_distance: StoppingDistance,
}

impl Serialize for StoppingProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let n = self.stopping.n();
        let mut st = s.serialize_struct("StoppingProfile", 4)?;
        st.serialize_field("stopping", &self.stopping)?;
        st.serialize_field("dead_end", &self.dead_end)?;
        st.serialize_field("stopping_distance", &self.stopping_distance.value(n))?;
        st.serialize_field(
            "stopping_set_exists",
            &matches!(self.stopping_distance, StoppingDistance::Finite(_)),
        )?;
        st.end()
    }
}

/// Structural witness that a code is equivalent to
/// `R_{n_1} ⊕ … ⊕ R_{n_u} ⊕ F_{n_F} ⊕ Z_{n_Z}` (0-based positions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub repetition_blocks: Vec<Vec<usize>>,
    pub full_positions: Vec<usize>,
    pub zero_positions: Vec<usize>,
}

// ---------------------------------------------------------------------------
// mask-level predicates

#[inline]
pub(crate) fn is_codeword_support_mask(rows: &[u64], mask: u64) -> bool {
    rows.iter().all(|&r| (r & mask).count_ones().is_multiple_of(2))
}

#[inline]
pub(crate) fn is_stopping_mask(rows: &[u64], mask: u64) -> bool {
    rows.iter().all(|&r| (r & mask).count_ones() != 1)
}

/// Largest stopping set contained in `mask`.
#[inline]
pub(crate) fn peel_mask(rows: &[u64], mut mask: u64) -> u64 {
    loop {
        let before = mask;
        for &r in rows {
            let hit = r & mask;
            if hit.count_ones() == 1 {
                mask &= !hit;
            }
        }
        if mask == before || mask == 0 {
            return mask;
        }
    }
}

/// True when the columns indexed by `mask` are linearly dependent.
#[inline]
pub(crate) fn columns_dependent(columns: &[u64], mask: u64) -> bool {
    let mut basis = [0u64; 64];
    for j in BitIter(mask) {
        let mut v = columns[j];
        loop {
            if v == 0 {
                return true;
            }
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                break;
            }
            v ^= basis[top];
        }
    }
    false
}

/// Column `j` of `m` packed as a word (bit `i` = row `i`); needs `row_count ≤ 64`.
pub(crate) fn column_words(m: &BitMatrix) -> Result<Vec<u64>> {
    (0..m.col_count())
        .map(|j| m.column(j).map(|c| c.bits()))
        .collect()
}

fn check_subset(h: &BitMatrix, s: &Subset) -> Result<()> {
    if s.n() != h.col_count() {
        return Err(Error::DimensionMismatch {
            expected: h.col_count(),
            found: s.n(),
        });
    }
    Ok(())
}

/// Counts subsets by size for which `keep(mask)` holds.
fn count_masks<F>(n: usize, keep: F) -> Enumerator
where
    F: Fn(u64) -> bool + Sync,
{
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << CHUNK_BITS.min(n);
    let chunks = total / chunk;
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = vec![0u64; n + 1];
            for mask in c * chunk..(c + 1) * chunk {
                if keep(mask) {
                    local[mask.count_ones() as usize] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Enumerator::from_coefficients(counts)
}

// ---------------------------------------------------------------------------
// predicates

/// Every row of `H_S` has even weight.
pub fn is_codeword_support(h: &BitMatrix, s: &Subset) -> Result<bool> {
    check_subset(h, s)?;
    Ok(is_codeword_support_mask(h.words(), s.mask()))
}

/// No row of `H_S` has weight exactly one.
pub fn is_stopping_set(h: &BitMatrix, s: &Subset) -> Result<bool> {
    check_subset(h, s)?;
    Ok(is_stopping_mask(h.words(), s.mask()))
}

/// Removes positions singled out by a row until none remain; the fixpoint is
/// the union of all stopping sets inside `s`.
pub fn peel_closure(h: &BitMatrix, s: &Subset) -> Result<Subset> {
    check_subset(h, s)?;
    Subset::new(s.n(), peel_mask(h.words(), s.mask()))
}

/// `s` contains a nonempty stopping set of `h`.
pub fn is_dead_end(h: &BitMatrix, s: &Subset) -> Result<bool> {
    Ok(!peel_closure(h, s)?.is_empty())
}

/// `s` contains the support of a nonzero codeword.
pub fn is_incorrigible(code: &LinearCode, s: &Subset) -> Result<bool> {
    if s.n() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: s.n(),
        });
    }
    if s.size() > code.redundancy() {
        return Ok(true);
    }
    let sub = code.parity_basis().select_columns(s.mask())?;
    Ok(sub.rank() < s.size())
}

// ---------------------------------------------------------------------------
// enumerators

pub fn stopping_set_enumerator(h: &BitMatrix) -> Result<Enumerator> {
    let n = h.col_count();
    guard_n(n)?;
    let rows = h.words();
    Ok(count_masks(n, |m| is_stopping_mask(rows, m)))
}

pub fn dead_end_enumerator(h: &BitMatrix) -> Result<Enumerator> {
    let n = h.col_count();
    guard_n(n)?;
    let rows = h.words();
    Ok(count_masks(n, |m| peel_mask(rows, m) != 0))
}

pub fn incorrigible_enumerator(code: &LinearCode) -> Result<Enumerator> {
    let n = code.n();
    guard_n(n)?;
    let columns = column_words(code.parity_basis())?;
    let r = code.redundancy();
    Ok(count_masks(n, |m| {
        m.count_ones() as usize > r || columns_dependent(&columns, m)
    }))
}

/// Smallest nonempty stopping set size, searched by increasing size.
pub fn stopping_distance(h: &BitMatrix) -> Result<StoppingDistance> {
    let n = h.col_count();
    guard_n(n)?;
    let rows = h.words();
    for size in 1..=n {
        let found = Combinations::new(n, size)
            .par_bridge()
            .any(|m| is_stopping_mask(rows, m));
        if found {
            return Ok(StoppingDistance::Finite(size));
        }
    }
    Ok(StoppingDistance::Absent)
}

pub fn stopping_profile(h: &BitMatrix) -> Result<StoppingProfile> {
    let stopping = stopping_set_enumerator(h)?;
    let dead_end = dead_end_enumerator(h)?;
    let stopping_distance = StoppingDistance::from_enumerator(&stopping);
    Ok(StoppingProfile {
        stopping,
        dead_end,
        stopping_distance,
    })
}

/// `S*(x)`, `D*(x)` and `s*` of the complete parity-check matrix, computed
/// without materializing it: each subset is tested against every dual
/// codeword, and a set is dead-end when some nonempty subset of it is stopping.
pub fn optimal_enumerators(code: &LinearCode) -> Result<StoppingProfile> {
    let n = code.n();
    if n > OPTIMAL_N_LIMIT {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: OPTIMAL_N_LIMIT,
        });
    }
    if code.redundancy() > OPTIMAL_REDUNDANCY_LIMIT {
        return Err(Error::GuardExceeded {
            what: "n-k",
            value: code.redundancy(),
            limit: OPTIMAL_REDUNDANCY_LIMIT,
        });
    }
    let dual: Vec<u64> = code.dual_codewords()?.words().filter(|&w| w != 0).collect();

    let mut stopping: Vec<bool> = (0..1u64 << n)
        .into_par_iter()
        .map(|m| is_stopping_mask(&dual, m))
        .collect();

    let mut s_star = Enumerator::zero(n);
    for (m, &stop) in stopping.iter().enumerate() {
        if stop {
            s_star.bump(m.count_ones() as usize);
        }
    }

    // contains-a-nonempty-stopping-subset, by a subset-sum (zeta) sweep
    stopping[0] = false;
    for bit in 0..n {
        let b = 1usize << bit;
        for m in 0..stopping.len() {
            if m & b != 0 && stopping[m ^ b] {
                stopping[m] = true;
            }
        }
    }
    let mut d_star = Enumerator::zero(n);
    for (m, &dead) in stopping.iter().enumerate() {
        if dead {
            d_star.bump(m.count_ones() as usize);
        }
    }

    let stopping_distance = StoppingDistance::from_enumerator(&s_star);
    Ok(StoppingProfile {
        stopping: s_star,
        dead_end: d_star,
        stopping_distance,
    })
}

/// Structural test for `S*(x) = A(x)`: positions that are zero in every
/// codeword, positions whose unit vector is a codeword, and the remaining
/// positions grouped by equal generator columns must together form a direct
/// sum of repetition, full and zero codes.
pub fn minimum_stopping_decomposition(code: &LinearCode) -> Result<Option<Decomposition>> {
    let g_columns = column_words(code.generator_basis())?;
    let h_columns = column_words(code.parity_basis())?;

    let mut zero_positions = Vec::new();
    let mut full_positions = Vec::new();
    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for j in 0..code.n() {
        if g_columns[j] == 0 {
            zero_positions.push(j);
        } else if h_columns[j] == 0 {
            full_positions.push(j);
        } else {
            groups.entry(g_columns[j]).or_default().push(j);
        }
    }

    let mut repetition_blocks: Vec<Vec<usize>> = groups.into_values().collect();
    repetition_blocks.sort();
    for block in &repetition_blocks {
        let indicator = block.iter().fold(0u64, |m, &j| m | 1 << j);
        if block.len() < 2 || !code.contains_word(indicator) {
            return Ok(None);
        }
    }
    if code.k() != repetition_blocks.len() + full_positions.len() {
        return Ok(None);
    }
    Ok(Some(Decomposition {
        repetition_blocks,
        full_positions,
        zero_positions,
    }))
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Combinations {
    next: Option<u64>,
    limit: u64,
}

impl Combinations {
    pub fn new(n: usize, size: usize) -> Self {
        let next = if size > n {
            None
        } else {
            Some(low_mask(size))
        };
        let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
        Self { next, limit }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur == 0 {
            self.next = None;
            return Some(0);
        }
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        let following = if r == 0 {
            None
        } else {
            Some((((r ^ cur) >> 2) / c) | r)
        };
        self.next = following.filter(|&m| m < self.limit && m.count_ones() == cur.count_ones());
        if cur >= self.limit {
            return None;
        }
        Some(cur)
    }
}
