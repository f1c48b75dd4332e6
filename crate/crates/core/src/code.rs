//! Binary linear codes given by a parity-check matrix.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::enumerator::Enumerator;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, RowSpace};

/// Largest dimension for which codewords are enumerated exhaustively.
pub const CODEWORD_ENUMERATION_LIMIT: usize = 28;

/// Minimum distance; the zero code has no nonzero codeword and distance ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// An `[n, k, d]` binary linear code.
///
/// Both bases are kept in reduced echelon form, so two codes are equal
/// exactly when they contain the same codewords.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    n: usize,
    k: usize,
    parity: BitMatrix,
    generator: BitMatrix,
    distance: Option<Distance>,
}

impl LinearCode {
    /// The null space of the row space of `h`. Dependent or repeated rows are fine.
    pub fn from_parity_check(h: &BitMatrix) -> Self {
        let parity = h.rref().matrix;
        let generator = h.null_space_basis();
        Self::from_bases(parity, generator)
    }

    /// The row space of `g`.
    pub fn from_generator(g: &BitMatrix) -> Self {
        let generator = g.rref().matrix;
        let parity = g.null_space_basis();
        Self::from_bases(parity, generator)
    }

    fn from_bases(parity: BitMatrix, generator: BitMatrix) -> Self {
        let n = parity.col_count();
        let k = generator.row_count();
        debug_assert_eq!(parity.row_count() + k, n);
        let distance = (k <= CODEWORD_ENUMERATION_LIMIT).then(|| {
            RowSpace::new(n, generator.words().to_vec())
                .skip(1)
                .map(|c| c.weight())
                .min()
                .map_or(Distance::Infinite, Distance::Finite)
        });
        Self {
            n,
            k,
            parity,
            generator,
            distance,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n - k`, the rank of any parity-check matrix.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// `(n-k) × n` parity-check basis in reduced echelon form.
    pub fn parity_basis(&self) -> &BitMatrix {
        &self.parity
    }

    /// `k × n` generator basis in reduced echelon form.
    pub fn generator_basis(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn minimum_distance(&self) -> Result<Distance> {
        self.distance.ok_or(Error::GuardExceeded {
            what: "k",
            value: self.k,
            limit: CODEWORD_ENUMERATION_LIMIT,
        })
    }

    /// Minimum distance of the dual code.
    pub fn dual_distance(&self) -> Result<Distance> {
        self.dual().minimum_distance()
    }

    pub fn contains(&self, word: &BitVector) -> bool {
        word.len() == self.n && self.parity.mul_vec(word).is_ok_and(|s| s.is_zero())
    }

    pub(crate) fn contains_word(&self, word: u64) -> bool {
        self.parity
            .words()
            .iter()
            .all(|&h| (h & word).count_ones().is_multiple_of(2))
    }

    /// All `2^k` codewords in Gray-code order, zero first.
    pub fn codewords(&self) -> Result<RowSpace> {
        if self.k > CODEWORD_ENUMERATION_LIMIT {
            return Err(Error::GuardExceeded {
                what: "k",
                value: self.k,
                limit: CODEWORD_ENUMERATION_LIMIT,
            });
        }
        Ok(RowSpace::new(self.n, self.generator.words().to_vec()))
    }

    /// All `2^(n-k)` dual codewords in Gray-code order, zero first.
    pub fn dual_codewords(&self) -> Result<RowSpace> {
        if self.redundancy() > CODEWORD_ENUMERATION_LIMIT {
            return Err(Error::GuardExceeded {
                what: "n-k",
                value: self.redundancy(),
                limit: CODEWORD_ENUMERATION_LIMIT,
            });
        }
        Ok(RowSpace::new(self.n, self.parity.words().to_vec()))
    }

    pub fn weight_enumerator(&self) -> Result<Enumerator> {
        let mut a = Enumerator::zero(self.n);
        for c in self.codewords()? {
            a.bump(c.weight());
        }
        Ok(a)
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_bases(self.generator.clone(), self.parity.clone())
    }

    /// Juxtaposition `C_1 ⊕ … ⊕ C_t` with block-diagonal bases.
    pub fn direct_sum(parts: &[LinearCode]) -> Result<LinearCode> {
        if parts.is_empty() {
            return Err(Error::Precondition("direct sum of an empty list".into()));
        }
        let n: usize = parts.iter().map(|c| c.n).sum();
        let mut parity = Vec::new();
        let mut generator = Vec::new();
        let mut offset = 0;
        for c in parts {
            parity.extend(c.parity.words().iter().map(|&w| w << offset));
            generator.extend(c.generator.words().iter().map(|&w| w << offset));
            offset += c.n;
        }
        let parity = BitMatrix::from_words(n, parity)?;
        let generator = BitMatrix::from_words(n, generator)?;
        Ok(Self::from_bases(parity.rref().matrix, generator.rref().matrix))
    }

    /// True when `h` has `n` columns, rank `n-k`, and every row lies in the dual.
    pub fn is_parity_check_matrix(&self, h: &BitMatrix) -> bool {
        h.col_count() == self.n && h.rank() == self.redundancy() && h.orthogonal_to(&self.generator)
    }

    pub(crate) fn check_parity_check_matrix(&self, h: &BitMatrix) -> Result<()> {
        if h.col_count() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: h.col_count(),
            });
        }
        if !h.orthogonal_to(&self.generator) {
            return Err(Error::NotParityCheck("a row is not a dual codeword".into()));
        }
        if h.rank() != self.redundancy() {
            return Err(Error::NotParityCheck(format!(
                "rank {} but the code needs {}",
                h.rank(),
                self.redundancy()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self
            .distance
            .map_or_else(|| "?".to_string(), |d| d.to_string());
        write!(f, "LinearCode[{}, {}, {}]", self.n, self.k, d)
    }
}
