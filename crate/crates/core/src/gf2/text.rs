//! Plain-text matrix format.
//!
//! ```text
//! # optional comments
//! 8 4          <- optional header: columns, rows
//! 10101010
//! 01010101
//! 00110011
//! 00001111
//! ```

use std::fmt;
use std::str::FromStr;

use super::matrix::BitMatrix;
use super::vector::BitVector;
use crate::error::{Error, Result};

impl BitMatrix {
    pub fn parse_text(text: &str) -> Result<BitMatrix> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows: Vec<BitVector> = Vec::new();
        let mut width: Option<usize> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() == 2 && header.is_none() && rows.is_empty() {
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        reason: format!("bad header token `{t}`"),
                    })
                };
                header = Some((parse(tokens[0])?, parse(tokens[1])?));
                continue;
            }
            if tokens.len() != 1 {
                return Err(Error::Parse {
                    line: line_no,
                    reason: "row must be a single run of 0/1 characters".into(),
                });
            }
            let row: BitVector = line.parse().map_err(|e| match e {
                Error::Parse { reason, .. } => Error::Parse {
                    line: line_no,
                    reason,
                },
                other => other,
            })?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: line_no,
                        reason: format!("ragged row: expected {w} columns, found {}", row.len()),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }

        let cols = match (header, width) {
            (Some((n, r)), w) => {
                if let Some(w) = w {
                    if w != n {
                        return Err(Error::Parse {
                            line: 0,
                            reason: format!("header declares {n} columns, rows have {w}"),
                        });
                    }
                }
                if r != rows.len() {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("header declares {r} rows, found {}", rows.len()),
                    });
                }
                n
            }
            (None, Some(w)) => w,
            (None, None) => 0,
        };
        BitMatrix::from_rows(cols, rows)
    }

    /// Renders the matrix with a `n r` header line.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.col_count(), self.row_count())?;
        for r in self.rows() {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BitMatrix::parse_text(s)
    }
}
