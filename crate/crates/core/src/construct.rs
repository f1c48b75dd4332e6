//! Parity-check matrix constructions and row-count bounds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{Distance, LinearCode};
use crate::enumerator::{binomial, Enumerator};
use crate::error::{Error, Result};
use crate::gf2::{low_mask, reading_order_key, BitMatrix, BitVector, Permutation};
use crate::stopsets::{self, StoppingDistance};

/// Cap on `n - k` for constructions that list the whole dual code.
pub const DUAL_LISTING_LIMIT: usize = 20;
/// Cap on the number of nonzero dual codewords for [`minimal_matrix_search`].
pub const SEARCH_CANDIDATE_LIMIT: usize = 20;

fn sorted_dual_words(code: &LinearCode) -> Result<Vec<u64>> {
    if code.redundancy() > DUAL_LISTING_LIMIT {
        return Err(Error::GuardExceeded {
            what: "n-k",
            value: code.redundancy(),
            limit: DUAL_LISTING_LIMIT,
        });
    }
    let n = code.n();
    let mut words: Vec<u64> = code.dual_codewords()?.words().collect();
    words.sort_by_key(|&w| reading_order_key(w, n));
    Ok(words)
}

/// Every dual codeword once, including the zero word, in printed order.
pub fn complete_matrix(code: &LinearCode) -> Result<BitMatrix> {
    BitMatrix::from_words(code.n(), sorted_dual_words(code)?)
}

/// Nonzero dual codewords of weight at most `max_weight`, in printed order.
///
/// With `max_weight ≥ k + 1` the rows always span the dual and the dead-end
/// enumerator equals the incorrigible enumerator. Smaller weights may leave
/// the rank short, which is reported as [`Error::RankDeficient`].
pub fn weight_bounded_dual_matrix(code: &LinearCode, max_weight: usize) -> Result<BitMatrix> {
    let rows: Vec<u64> = sorted_dual_words(code)?
        .into_iter()
        .filter(|&w| w != 0 && w.count_ones() as usize <= max_weight)
        .collect();
    let m = BitMatrix::from_words(code.n(), rows)?;
    let rank = m.rank();
    if rank != code.redundancy() {
        return Err(Error::RankDeficient {
            rank,
            expected: code.redundancy(),
        });
    }
    Ok(m)
}

/// The `(d-1) × d` block that makes `{1,2,3}` a stopping set.
///
/// Rows: `110…0`, `0110…0`, `11110…0`, then a pair of adjacent ones sliding
/// right from positions 4,5 to d-1,d.
pub fn stopping_gadget(d: usize) -> Result<BitMatrix> {
    if d < 4 {
        return Err(Error::Precondition(format!("gadget needs d ≥ 4, got {d}")));
    }
    let mut rows = vec![0b11u64, 0b110, 0b1111];
    rows.extend((3..d - 1).map(|i| 0b11u64 << i));
    BitMatrix::from_words(d, rows)
}

/// A parity-check matrix with stopping distance 3, for a permuted copy of the code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadMatrix {
    /// Parity-check matrix of the permuted code.
    pub matrix: BitMatrix,
    /// Coordinate permutation applied to the code.
    pub permutation: Permutation,
    /// The minimum-weight codeword whose support was moved to the front.
    pub codeword: BitVector,
}

/// Builds the block matrix `[G_d H'; 0 H'']` with the stopping gadget `G_d` in
/// the top-left corner.
///
/// The minimum-weight codeword with the lexicographically smallest support
/// is moved to positions `0..d`; the other coordinates keep their order.
/// Each gadget row is lifted to a dual codeword with that restriction to the
/// first `d` positions, and the matrix is completed with a basis of the dual
/// codewords vanishing there.
pub fn bad_matrix(code: &LinearCode) -> Result<BadMatrix> {
    let d = match code.minimum_distance()? {
        Distance::Finite(d) if d >= 4 => d,
        other => {
            return Err(Error::Precondition(format!(
                "a stopping distance of 3 needs d ≥ 4, but d = {other}"
            )))
        }
    };
    let n = code.n();

    let support: Vec<usize> = code
        .codewords()?
        .filter(|c| c.weight() == d)
        .map(|c| c.support().collect::<Vec<_>>())
        .min()
        .expect("a codeword of minimum weight exists");
    let codeword = BitVector::from_positions(n, support.iter().copied())?;

    let mut order = support.clone();
    order.extend((0..n).filter(|j| !support.contains(j)));
    let permutation = Permutation::from_sources(order)?;

    let parity = permutation.apply_matrix(code.parity_basis())?;
    let front = parity.select_columns(low_mask(d))?;
    let restriction = front.transpose()?;

    let combine = |coeffs: &BitVector| {
        coeffs
            .support()
            .fold(0u64, |acc, i| acc ^ parity.words()[i])
    };

    let mut rows = Vec::with_capacity(code.redundancy());
    for target in stopping_gadget(d)?.rows() {
        let solution = restriction.solve(&target)?.ok_or_else(|| {
            Error::Precondition("gadget row is not a restriction of a dual codeword".into())
        })?;
        rows.push(combine(&solution.particular));
    }
    let vanishing = restriction.null_space_basis();
    rows.extend(vanishing.rows().map(|a| combine(&a)));

    let matrix = BitMatrix::from_words(n, rows)?;
    debug_assert_eq!(matrix.rank(), code.redundancy());
    Ok(BadMatrix {
        matrix,
        permutation,
        codeword,
    })
}

/// Property a searched matrix must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SearchPredicate {
    /// Stopping distance equals the minimum distance.
    StoppingDistanceIsD,
    /// Stopping enumerator equals the optimal one.
    StoppingIsOptimal,
    /// Dead-end enumerator equals the incorrigible enumerator.
    DeadEndIsIncorrigible,
}

impl FromStr for SearchPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "s=d" => Ok(Self::StoppingDistanceIsD),
            "S=S*" | "s=s*" => Ok(Self::StoppingIsOptimal),
            "D=I" | "d=i" => Ok(Self::DeadEndIsIncorrigible),
            other => Err(Error::Precondition(format!(
                "unknown predicate `{other}` (expected s=d, S=S*, or D=I)"
            ))),
        }
    }
}

impl fmt::Display for SearchPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::StoppingDistanceIsD => "s=d",
            Self::StoppingIsOptimal => "S=S*",
            Self::DeadEndIsIncorrigible => "D=I",
        })
    }
}

enum Target {
    Distance(StoppingDistance),
    Stopping(Enumerator),
    DeadEnd(Enumerator),
}

impl Target {
    fn holds(&self, h: &BitMatrix) -> bool {
        match self {
            Target::Distance(s) => stopsets::stopping_distance(h).is_ok_and(|x| x == *s),
            Target::Stopping(e) => stopsets::stopping_set_enumerator(h).is_ok_and(|x| x == *e),
            Target::DeadEnd(e) => stopsets::dead_end_enumerator(h).is_ok_and(|x| x == *e),
        }
    }
}

/// Lexicographic `size`-combinations of `0..n`.
fn index_combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Fewest-row parity-check matrix built from distinct nonzero dual
/// codewords that satisfies `predicate`. Ties go to the lexicographically
/// smallest list of rows (rows in printed order). `None` when nothing with at
/// most `max_rows` rows qualifies.
pub fn minimal_matrix_search(
    code: &LinearCode,
    predicate: SearchPredicate,
    max_rows: usize,
) -> Result<Option<BitMatrix>> {
    let candidates: Vec<u64> = sorted_dual_words(code)?
        .into_iter()
        .filter(|&w| w != 0)
        .collect();
    if candidates.len() > SEARCH_CANDIDATE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "nonzero dual codewords",
            value: candidates.len(),
            limit: SEARCH_CANDIDATE_LIMIT,
        });
    }
    let target = match predicate {
        SearchPredicate::StoppingDistanceIsD => {
            let s = match code.minimum_distance()? {
                Distance::Finite(d) => StoppingDistance::Finite(d),
                Distance::Infinite => StoppingDistance::Absent,
            };
            Target::Distance(s)
        }
        SearchPredicate::StoppingIsOptimal => {
            Target::Stopping(stopsets::optimal_enumerators(code)?.stopping)
        }
        SearchPredicate::DeadEndIsIncorrigible => {
            Target::DeadEnd(stopsets::incorrigible_enumerator(code)?)
        }
    };

    let n = code.n();
    let r = code.redundancy();
    for size in r..=max_rows.min(candidates.len()) {
        let found = index_combinations(candidates.len(), size)
            .into_par_iter()
            .map(|pick| {
                BitMatrix::from_words(n, pick.iter().map(|&i| candidates[i]).collect())
                    .expect("rows fit")
            })
            .find_first(|h| h.rank() == r && target.holds(h));
        if found.is_some() {
            return Ok(found);
        }
    }
    // the zero code has an empty parity-check matrix only when r = 0
    if r == 0 && candidates.is_empty() {
        let h = BitMatrix::empty(n)?;
        if target.holds(&h) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// `-x log2 x - (1-x) log2 (1-x)` on `(0, 1)`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// One evaluated bound, or the reason it does not apply.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bound<T> {
    pub value: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl<T> Bound<T> {
    fn value(v: T) -> Self {
        Self {
            value: Some(v),
            note: None,
        }
    }

    fn noted(v: T, note: impl Into<String>) -> Self {
        Self {
            value: Some(v),
            note: Some(note.into()),
        }
    }

    fn omitted(reason: impl Into<String>) -> Self {
        Self {
            value: None,
            note: Some(reason.into()),
        }
    }
}

/// Upper bounds on the number of parity-check rows needed for various goals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub m: Option<usize>,
    /// `Σ_{i=1}^{d-2} C(n-k, i)` rows give `s = d` (d ≥ 3).
    pub sv_bound: Bound<u64>,
    /// `Σ_{i=1}^{⌈(d-1)/2⌉} C(n-k, 2i-1)` rows give `s = d` (d ≥ 2).
    pub hs_bound: Bound<u64>,
    /// `Σ_{i=0}^{m-1} C(n-k-1, i)` rows give `D_i = I_i` for `i ≤ m`.
    pub ht_bound: Bound<u64>,
    /// `2^(n-k-1)` rows give `D(x) = I(x)` (k < n).
    pub holtol_bound: Bound<u64>,
    /// `2^(n H((k+1)/n))` rows give `D(x) = I(x)` (k ≤ n/2 - 1).
    pub entropy_bound: Bound<f64>,
}

pub fn redundancy_bounds(n: usize, k: usize, d: usize, m: Option<usize>) -> Result<BoundReport> {
    if n == 0 || n > crate::gf2::MAX_LEN {
        return Err(Error::Precondition(format!("n = {n} must be in 1..=64")));
    }
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let r = n - k;
    let sum = |upper: usize, f: &dyn Fn(usize) -> u64| -> u64 { (1..=upper).map(f).sum() };

    let sv_bound = match d {
        0 | 1 => Bound::omitted("needs d ≥ 3"),
        2 => Bound::noted(0, "empty sum: d - 2 = 0 terms; the bound is stated for d ≥ 3"),
        _ => Bound::value(sum(d - 2, &|i| binomial(r, i))),
    };
    let hs_bound = if d >= 2 {
        Bound::value(sum((d - 1).div_ceil(2), &|i| binomial(r, 2 * i - 1)))
    } else {
        Bound::omitted("needs d ≥ 2")
    };
    let m_used = m.or((r >= 2).then_some(r));
    let ht_bound = match m_used {
        Some(m) if (2..=r).contains(&m) => Bound::value((0..m).map(|i| binomial(r - 1, i)).sum()),
        Some(m) => Bound::omitted(format!("needs 2 ≤ m ≤ n-k = {r}, got m = {m}")),
        None => Bound::omitted(format!("needs n-k ≥ 2, got {r}")),
    };
    let holtol_bound = if k < n {
        Bound::value(1u64 << (r - 1))
    } else {
        Bound::omitted("needs k < n")
    };
    let entropy_bound = if 2 * k + 2 <= n {
        Bound::value(2f64.powf(n as f64 * binary_entropy((k + 1) as f64 / n as f64)))
    } else {
        Bound::omitted("needs k ≤ n/2 - 1")
    };
    Ok(BoundReport {
        n,
        k,
        d,
        m: m_used,
        sv_bound,
        hs_bound,
        ht_bound,
        holtol_bound,
        entropy_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn complete_matrix_shapes() {
        let rm = catalog::rm_8_4_4();
        let h = complete_matrix(&rm).unwrap();
        assert_eq!(h.row_count(), 16);
        assert!(h.rows_distinct());
        assert_eq!(h.row(0).weight(), 0);

        let f = complete_matrix(&catalog::full(3).unwrap()).unwrap();
        assert_eq!(f.to_text(), "3 1\n000\n");

        let r2 = complete_matrix(&catalog::repetition(2).unwrap()).unwrap();
        assert_eq!(r2.to_text(), "2 2\n00\n11\n");
    }

    #[test]
    fn low_weight_rm_matrix_is_h14() {
        let rm = catalog::rm_8_4_4();
        assert_eq!(weight_bounded_dual_matrix(&rm, 4).unwrap(), catalog::h14());
        assert_eq!(weight_bounded_dual_matrix(&rm, 5).unwrap(), catalog::h14());
        assert!(matches!(
            weight_bounded_dual_matrix(&rm, 3),
            Err(Error::RankDeficient { rank: 0, expected: 4 })
        ));
    }

    #[test]
    fn gadget_shape() {
        let g = stopping_gadget(6).unwrap();
        assert_eq!(g.to_text(), "6 5\n110000\n011000\n111100\n000110\n000011\n");
        for d in 4..20 {
            let g = stopping_gadget(d).unwrap();
            assert_eq!((g.row_count(), g.rank()), (d - 1, d - 1));
            assert!(g.rows().all(|r| r.weight() % 2 == 0));
        }
        assert!(stopping_gadget(3).is_err());
    }

    #[test]
    fn bad_matrix_on_rm() {
        let rm = catalog::rm_8_4_4();
        let bad = bad_matrix(&rm).unwrap();
        assert_eq!(bad.codeword.to_string(), "11110000");
        assert_eq!(bad.permutation, Permutation::identity(8));
        let front = bad.matrix.select_columns(0xf).unwrap();
        assert_eq!(
            BitMatrix::from_words(4, front.words()[..3].to_vec()).unwrap(),
            stopping_gadget(4).unwrap()
        );
        assert_eq!(stopsets::stopping_distance(&bad.matrix).unwrap(), StoppingDistance::Finite(3));
    }

    #[test]
    fn bad_matrix_on_repetition_is_the_gadget() {
        for n in 4..10 {
            let bad = bad_matrix(&catalog::repetition(n).unwrap()).unwrap();
            assert_eq!(bad.matrix, stopping_gadget(n).unwrap());
        }
    }

    #[test]
    fn bad_matrix_rejects_small_distance() {
        assert!(matches!(bad_matrix(&catalog::hamming_7_4()), Err(Error::Precondition(_))));
        assert!(bad_matrix(&catalog::zero(5).unwrap()).is_err());
    }

    #[test]
    fn search_on_small_codes() {
        let r3 = catalog::repetition(3).unwrap();
        let h = minimal_matrix_search(&r3, SearchPredicate::DeadEndIsIncorrigible, 3)
            .unwrap()
            .unwrap();
        assert_eq!(h.row_count(), 2);
        let none = minimal_matrix_search(&catalog::rm_8_4_4(), SearchPredicate::StoppingIsOptimal, 6).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn index_combinations_are_lexicographic() {
        let v = index_combinations(5, 3);
        assert_eq!(v.len(), 10);
        assert_eq!(v[0], vec![0, 1, 2]);
        assert_eq!(v[3], vec![0, 2, 3]);
        assert_eq!(v[9], vec![2, 3, 4]);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(index_combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn bounds_for_rm() {
        let b = redundancy_bounds(8, 4, 4, Some(4)).unwrap();
        assert_eq!(b.sv_bound.value, Some(10));
        assert_eq!(b.hs_bound.value, Some(8));
        assert_eq!(b.ht_bound.value, Some(8));
        assert_eq!(b.holtol_bound.value, Some(8));
        assert_eq!(b.entropy_bound.value, None);
    }

    #[test]
    fn bounds_edge_cases() {
        let b = redundancy_bounds(10, 4, 2, None).unwrap();
        assert_eq!(b.sv_bound.value, Some(0));
        assert!(b.sv_bound.note.is_some());
        assert_eq!(b.hs_bound.value, Some(6));

        let e = redundancy_bounds(8, 3, 4, None).unwrap();
        assert!((e.entropy_bound.value.unwrap() - 256.0).abs() < 1e-9);

        let bad_m = redundancy_bounds(8, 4, 4, Some(9)).unwrap();
        assert!(bad_m.ht_bound.value.is_none());
        assert!(redundancy_bounds(8, 9, 4, None).is_err());
    }

    #[test]
    fn ht_at_full_redundancy_equals_holtol() {
        for n in 3..20 {
            for k in 0..n - 1 {
                let b = redundancy_bounds(n, k, 3, None).unwrap();
                assert_eq!(b.ht_bound.value, b.holtol_bound.value, "n={n} k={k}");
            }
        }
    }
}
