#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stopset_core::{BitMatrix, BitVector, Enumerator, LinearCode, Permutation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Code spanned by `k` random independent words of length `n`.
pub fn random_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> LinearCode {
    assert!(k <= n);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        let rows: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & full).collect();
        let g = BitMatrix::from_words(n, rows).unwrap();
        if g.rank() == k {
            return LinearCode::from_generator(&g);
        }
    }
}

/// Draws `(n, k)` uniformly from the given ranges until `accept` holds.
pub fn random_code_where(
    rng: &mut ChaCha8Rng,
    n_range: std::ops::RangeInclusive<usize>,
    accept: impl Fn(&LinearCode) -> bool,
) -> LinearCode {
    loop {
        let n = rng.gen_range(n_range.clone());
        let k = rng.gen_range(0..=n);
        let c = random_code(rng, n, k);
        if accept(&c) {
            return c;
        }
    }
}

pub fn min_distance(c: &LinearCode) -> Option<usize> {
    c.minimum_distance().unwrap().finite()
}

/// A random permutation of `0..n`.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    Permutation::from_sources(order).unwrap()
}

/// Random invertible recombination of the parity basis, followed by
/// `extra` further random dual codewords.
pub fn random_parity_check_matrix(rng: &mut ChaCha8Rng, c: &LinearCode, extra: usize) -> BitMatrix {
    let basis = c.parity_basis().words().to_vec();
    let r = basis.len();
    let combine = |rng: &mut ChaCha8Rng| {
        let pick: u64 = rng.gen();
        (0..r)
            .filter(|i| pick >> i & 1 == 1)
            .fold(0u64, |acc, i| acc ^ basis[i])
    };
    loop {
        let mut rows: Vec<u64> = (0..r).map(|_| combine(rng)).collect();
        rows.extend((0..extra).map(|_| combine(rng)));
        let h = BitMatrix::from_words(c.n(), rows).unwrap();
        if h.rank() == r {
            return h;
        }
    }
}

/// Every matrix whose rows are a set of distinct nonzero dual codewords
/// spanning the dual code.
pub fn all_parity_check_matrices(c: &LinearCode) -> Vec<BitMatrix> {
    let dual: Vec<u64> = c.dual_codewords().unwrap().words().filter(|&w| w != 0).collect();
    assert!(dual.len() <= 16, "too many dual codewords to list every subset");
    (1u32..1 << dual.len())
        .map(|pick| {
            let rows = (0..dual.len())
                .filter(|i| pick >> i & 1 == 1)
                .map(|i| dual[i])
                .collect();
            BitMatrix::from_words(c.n(), rows).unwrap()
        })
        .filter(|h| h.rank() == c.redundancy())
        .collect()
}

// --- brute-force oracles, written straight from the definitions ---------

/// Restriction of every row of `h` to the positions in `s`, as explicit
/// vectors.
pub fn restricted_rows(h: &BitMatrix, s: u64) -> Vec<Vec<bool>> {
    let positions: Vec<usize> = (0..h.col_count()).filter(|j| s >> j & 1 == 1).collect();
    h.rows()
        .map(|row| positions.iter().map(|&j| row.get(j)).collect())
        .collect()
}

pub fn oracle_is_stopping(h: &BitMatrix, s: u64) -> bool {
    restricted_rows(h, s)
        .iter()
        .all(|row| row.iter().filter(|&&b| b).count() != 1)
}

/// Stopping flag of every subset.
pub fn oracle_stopping_table(h: &BitMatrix) -> Vec<bool> {
    (0..1u64 << h.col_count()).map(|s| oracle_is_stopping(h, s)).collect()
}

pub fn oracle_is_dead_end(table: &[bool], s: u64) -> bool {
    let mut sub = s;
    while sub != 0 {
        if table[sub as usize] {
            return true;
        }
        sub = (sub - 1) & s;
    }
    false
}

pub fn oracle_stopping_enumerator(h: &BitMatrix) -> Enumerator {
    let table = oracle_stopping_table(h);
    count(h.col_count(), |s| table[s as usize])
}

pub fn oracle_dead_end_enumerator(h: &BitMatrix) -> Enumerator {
    let table = oracle_stopping_table(h);
    count(h.col_count(), |s| oracle_is_dead_end(&table, s))
}

/// Supports of all nonzero codewords.
pub fn supports(c: &LinearCode) -> Vec<u64> {
    c.codewords().unwrap().words().filter(|&w| w != 0).collect()
}

pub fn oracle_incorrigible_enumerator(c: &LinearCode) -> Enumerator {
    let sup = supports(c);
    count(c.n(), |s| sup.iter().any(|&w| w & !s == 0))
}

/// `S*` taken literally: materialize every dual codeword as a row.
pub fn oracle_optimal_stopping(c: &LinearCode) -> Enumerator {
    let dual: Vec<u64> = c.dual_codewords().unwrap().words().collect();
    oracle_stopping_enumerator(&BitMatrix::from_words(c.n(), dual).unwrap())
}

/// Whether `s` is a (possibly empty) union of nonzero codeword supports.
pub fn is_union_of_supports(sup: &[u64], s: u64) -> bool {
    sup.iter().filter(|&&w| w & !s == 0).fold(0, |acc, &w| acc | w) == s
}

pub fn count(n: usize, pred: impl Fn(u64) -> bool) -> Enumerator {
    let mut c = vec![0u64; n + 1];
    for s in 0..1u64 << n {
        if pred(s) {
            c[s.count_ones() as usize] += 1;
        }
    }
    Enumerator::from_coefficients(c)
}

pub fn word(n: usize, bits: u64) -> BitVector {
    BitVector::from_bits(n, bits).unwrap()
}
