use super::matrix::BitMatrix;
use crate::error::{Error, Result};

/// Coordinate permutation: new position `i` takes old position `source[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Permutation {
    source: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            source: (0..n).collect(),
        }
    }

    pub fn from_sources(source: Vec<usize>) -> Result<Self> {
        let n = source.len();
        let mut seen = vec![false; n];
        for &s in &source {
            if s >= n || seen[s] {
                return Err(Error::Precondition(format!(
                    "{source:?} is not a permutation of 0..{n}"
                )));
            }
            seen[s] = true;
        }
        Ok(Self { source })
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn sources(&self) -> &[usize] {
        &self.source
    }

    pub fn apply_word(&self, word: u64) -> u64 {
        self.source
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &s)| acc | ((word >> s) & 1) << i)
    }

    pub fn apply_matrix(&self, m: &BitMatrix) -> Result<BitMatrix> {
        if m.col_count() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: m.col_count(),
            });
        }
        BitMatrix::from_words(m.col_count(), m.words().iter().map(|&w| self.apply_word(w)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &s) in self.source.iter().enumerate() {
            inv[s] = i;
        }
        Permutation { source: inv }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_then_inverse() {
        let p = Permutation::from_sources(vec![2, 0, 3, 1]).unwrap();
        let w = 0b0110;
        assert_eq!(p.inverse().apply_word(p.apply_word(w)), w);
        // new position 0 takes old 2
        assert_eq!(p.apply_word(0b0100), 0b0001);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_sources(vec![0, 0]).is_err());
        assert!(Permutation::from_sources(vec![0, 2]).is_err());
    }
}
