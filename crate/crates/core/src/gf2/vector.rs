use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum supported word length.
pub const MAX_LEN: usize = 64;

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A binary word of length at most 64, packed into one machine word.
///
/// Position `j` (0-based) is stored in bit `j`, so the first printed symbol
/// of a word is its least significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    bits: u64,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        if bits & !low_mask(len) != 0 {
            let index = (bits & !low_mask(len)).trailing_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, len });
        }
        Ok(Self { len, bits })
    }

    /// Builds a word from 0-based positions of its ones.
    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        for p in positions {
            v.set(p, true)?;
        }
        Ok(v)
    }

    pub fn unit(len: usize, position: usize) -> Result<Self> {
        Self::from_positions(len, [position])
    }

    pub(crate) fn from_bits_unchecked(len: usize, bits: u64) -> Self {
        debug_assert!(len <= MAX_LEN && bits & !low_mask(len) == 0);
        Self { len, bits }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, position: usize) -> bool {
        position < self.len && (self.bits >> position) & 1 == 1
    }

    pub fn set(&mut self, position: usize, value: bool) -> Result<()> {
        if position >= self.len {
            return Err(Error::IndexOutOfRange {
                index: position,
                len: self.len,
            });
        }
        if value {
            self.bits |= 1 << position;
        } else {
            self.bits &= !(1 << position);
        }
        Ok(())
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// 0-based positions of the ones, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> {
        BitIter(self.bits)
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitVector) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// The word read as a binary numeral with position 0 as the most
    /// significant digit. Ordering by this key sorts printed words
    /// lexicographically.
    pub fn sort_key(&self) -> u64 {
        reading_order_key(self.bits, self.len)
    }
}

pub(crate) fn reading_order_key(bits: u64, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        bits.reverse_bits() >> (64 - len)
    }
}

/// Iterator over set-bit indices of a word.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

impl BitXor for BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch in xor");
        BitVector {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitXorAssign for BitVector {
    fn bitxor_assign(&mut self, rhs: BitVector) {
        *self = *self ^ rhs;
    }
}

impl BitAnd for BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "length mismatch in and");
        BitVector {
            len: self.len,
            bits: self.bits & rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let len = s.chars().count();
        let mut v = BitVector::zeros(len)?;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.bits |= 1 << j,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        reason: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let v: BitVector = "10101010".parse().unwrap();
        assert_eq!(v.bits(), 0b0101_0101);
        assert_eq!(v.to_string(), "10101010");
        assert_eq!(v.weight(), 4);
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 2, 4, 6]);
    }

    #[test]
    fn sort_key_matches_printed_order() {
        let a: BitVector = "00001111".parse().unwrap();
        let b: BitVector = "10000000".parse().unwrap();
        assert!(a.sort_key() < b.sort_key());
        assert_eq!(b.sort_key(), 128);
    }

    #[test]
    fn rejects_bits_past_length() {
        assert!(BitVector::from_bits(3, 0b1000).is_err());
        assert!(BitVector::zeros(65).is_err());
        assert!(BitVector::from_bits(64, u64::MAX).is_ok());
    }
}
