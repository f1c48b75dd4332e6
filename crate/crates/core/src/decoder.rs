//! Erasure decoders: peeling over a parity-check matrix, and exhaustive
//! (maximum-likelihood) decoding over the code.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{low_mask, BitIter, BitMatrix, BitVector, MAX_LEN};
use crate::stopsets::{self, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Erased,
}

/// Channel output: each position is a bit or an erasure.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReceivedWord {
    n: usize,
    values: u64,
    erased: u64,
}

impl ReceivedWord {
    /// `codeword` with the positions of `erasures` erased.
    pub fn erase(codeword: &BitVector, erasures: &Subset) -> Result<Self> {
        if codeword.len() != erasures.n() {
            return Err(Error::DimensionMismatch {
                expected: codeword.len(),
                found: erasures.n(),
            });
        }
        Ok(Self {
            n: codeword.len(),
            values: codeword.bits() & !erasures.mask(),
            erased: erasures.mask(),
        })
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        if symbols.len() > MAX_LEN {
            return Err(Error::TooLong(symbols.len()));
        }
        let mut w = Self {
            n: symbols.len(),
            values: 0,
            erased: 0,
        };
        for (j, s) in symbols.iter().enumerate() {
            match s {
                Symbol::Zero => {}
                Symbol::One => w.values |= 1 << j,
                Symbol::Erased => w.erased |= 1 << j,
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn symbol(&self, j: usize) -> Symbol {
        if (self.erased >> j) & 1 == 1 {
            Symbol::Erased
        } else if (self.values >> j) & 1 == 1 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn erasure_set(&self) -> Subset {
        Subset::new(self.n, self.erased).expect("in range")
    }

    /// Known bits, with erased positions read as zero.
    pub fn known_bits(&self) -> u64 {
        self.values
    }

    pub fn erasure_count(&self) -> usize {
        self.erased.count_ones() as usize
    }
}

impl fmt::Display for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n {
            f.write_str(match self.symbol(j) {
                Symbol::Zero => "0",
                Symbol::One => "1",
                Symbol::Erased => "?",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReceivedWord({self})")
    }
}

/// Parses a string over `{0, 1, ?}`.
impl FromStr for ReceivedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                '?' => Ok(Symbol::Erased),
                other => Err(Error::BadWord(format!("unexpected character `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        ReceivedWord::from_symbols(&symbols)
    }
}

impl Serialize for ReceivedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecodeOutcome {
    /// Every erasure was resolved.
    Decoded {
        #[serde(serialize_with = "as_string")]
        codeword: BitVector,
    },
    /// Peeling stopped on a nonempty stopping set; `partial` keeps the
    /// unresolved positions erased.
    Stalled {
        partial: ReceivedWord,
        residual: Subset,
        recovered: usize,
    },
    /// The erasure set is incorrigible; `2^free_dimension` codewords match.
    Ambiguous {
        erasures: Subset,
        free_dimension: usize,
    },
}

fn as_string<S: Serializer>(v: &BitVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl DecodeOutcome {
    pub fn is_decoded(&self) -> bool {
        matches!(self, DecodeOutcome::Decoded { .. })
    }

    pub fn codeword(&self) -> Option<&BitVector> {
        match self {
            DecodeOutcome::Decoded { codeword } => Some(codeword),
            _ => None,
        }
    }
}

fn check_known_rows(rows: &[u64], values: u64, erased: u64) -> Result<()> {
    match rows
        .iter()
        .position(|&r| r & erased == 0 && (r & values).count_ones() % 2 == 1)
    {
        Some(row) => Err(Error::ChannelViolation { row }),
        None => Ok(()),
    }
}

/// Peeling decoder.
///
/// Rows are scanned in index order; whenever a row checks exactly one erased
/// position that position is solved from the row and the scan restarts.
pub fn iterative_decode(h: &BitMatrix, r: &ReceivedWord) -> Result<DecodeOutcome> {
    if h.col_count() != r.len() {
        return Err(Error::DimensionMismatch {
            expected: h.col_count(),
            found: r.len(),
        });
    }
    let rows = h.words();
    let mut values = r.values;
    let mut erased = r.erased;
    check_known_rows(rows, values, erased)?;

    'scan: loop {
        for &row in rows {
            let hit = row & erased;
            if hit.count_ones() == 1 {
                if (row & values).count_ones() % 2 == 1 {
                    values |= hit;
                }
                erased &= !hit;
                continue 'scan;
            }
        }
        break;
    }
    check_known_rows(rows, values, erased)?;

    if erased == 0 {
        return Ok(DecodeOutcome::Decoded {
            codeword: BitVector::from_bits(r.n, values)?,
        });
    }
    Ok(DecodeOutcome::Stalled {
        partial: ReceivedWord {
            n: r.n,
            values,
            erased,
        },
        residual: Subset::new(r.n, erased)?,
        recovered: r.erasure_count() - erased.count_ones() as usize,
    })
}

/// Exhaustive decoder: succeeds exactly when the erased columns of the
/// parity-check basis are linearly independent.
pub fn optimal_decode(code: &LinearCode, r: &ReceivedWord) -> Result<DecodeOutcome> {
    if code.n() != r.len() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: r.len(),
        });
    }
    let parity = code.parity_basis();
    let syndrome = parity.mul_vec(&BitVector::from_bits(r.n, r.values)?)?;
    let erased_columns = parity.select_columns(r.erased)?;
    let Some(solution) = erased_columns.solve(&syndrome)? else {
        return Err(Error::NoMatchingCodeword);
    };
    if solution.kernel.row_count() > 0 {
        return Ok(DecodeOutcome::Ambiguous {
            erasures: r.erasure_set(),
            free_dimension: solution.kernel.row_count(),
        });
    }
    let mut word = r.values;
    for (k, j) in BitIter(r.erased).enumerate() {
        if solution.particular.get(k) {
            word |= 1 << j;
        }
    }
    debug_assert!(code.contains_word(word));
    Ok(DecodeOutcome::Decoded {
        codeword: BitVector::from_bits(r.n, word & low_mask(r.n))?,
    })
}

/// How an erasure set fares under the two decoders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ErasureClass {
    pub incorrigible: bool,
    pub stopping: bool,
    pub dead_end: bool,
}

pub fn classify_erasure_set(code: &LinearCode, h: &BitMatrix, s: &Subset) -> Result<ErasureClass> {
    code.check_parity_check_matrix(h)?;
    let class = ErasureClass {
        incorrigible: stopsets::is_incorrigible(code, s)?,
        stopping: stopsets::is_stopping_set(h, s)?,
        dead_end: stopsets::is_dead_end(h, s)?,
    };
    debug_assert!(!class.incorrigible || class.dead_end);
    Ok(class)
}
