//! Named codes and matrices.
//!
//! Names accepted by [`code`]: `repetition(n)`, `full(n)`, `zero(n)`,
//! `even(n)`, `rm_8_4_4`, `hamming_7_4`, `ext_hamming_16_11_4`,
//! `golay_24_12_8`. [`matrix`] additionally accepts `H4` … `H8` and `H14`
//! (the Reed-Muller parity-check matrices) and returns the named
//! parity-check matrix for every code name. Arguments may also be written
//! `repetition:5`.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, MAX_LEN};

/// Eight dual codewords of RM(1,3); the first `i` rows give `H_i`.
pub const H8_ROWS: [&str; 8] = [
    "10101010", "01010101", "00110011", "00001111", "11110000", "11001100", "01101001", "10010110",
];

/// The fourteen weight-four codewords of the self-dual [8,4,4] code.
pub const H14_ROWS: [&str; 14] = [
    "00001111", "00110011", "00111100", "01010101", "01011010", "01100110", "01101001", "10010110",
    "10011001", "10100101", "10101010", "11000011", "11001100", "11110000",
];

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("code length must be positive".into()));
    }
    if n > MAX_LEN {
        return Err(Error::TooLong(n));
    }
    Ok(())
}

/// First `i` rows of `H_8`, for `4 ≤ i ≤ 8`.
pub fn reed_muller_matrix(rows: usize) -> Result<BitMatrix> {
    if !(4..=8).contains(&rows) {
        return Err(Error::UnknownCatalogEntry(format!("H{rows}")));
    }
    BitMatrix::from_strs(&H8_ROWS[..rows])
}

pub fn h14() -> BitMatrix {
    BitMatrix::from_strs(&H14_ROWS).expect("literal")
}

/// The [8,4,4] Reed-Muller code, defined by `H_8`.
pub fn rm_8_4_4() -> LinearCode {
    LinearCode::from_parity_check(&reed_muller_matrix(8).expect("literal"))
}

/// `(n-1) × n` repetition-code check matrix: row `i` checks positions 0 and `i`.
pub fn repetition_parity_matrix(n: usize) -> Result<BitMatrix> {
    check_len(n)?;
    BitMatrix::from_words(n, (1..n).map(|i| 1 | 1 << i).collect())
}

pub fn repetition(n: usize) -> Result<LinearCode> {
    Ok(LinearCode::from_parity_check(&repetition_parity_matrix(n)?))
}

pub fn full(n: usize) -> Result<LinearCode> {
    check_len(n)?;
    Ok(LinearCode::from_parity_check(&BitMatrix::empty(n)?))
}

pub fn zero(n: usize) -> Result<LinearCode> {
    check_len(n)?;
    Ok(LinearCode::from_parity_check(&BitMatrix::identity(n)?))
}

pub fn even_weight_parity_matrix(n: usize) -> Result<BitMatrix> {
    check_len(n)?;
    BitMatrix::from_words(n, vec![crate::gf2::low_mask(n)])
}

pub fn even_weight(n: usize) -> Result<LinearCode> {
    Ok(LinearCode::from_parity_check(&even_weight_parity_matrix(n)?))
}

/// Column `j` is the binary expansion of `j + 1`.
pub fn hamming_7_4_matrix() -> BitMatrix {
    let rows = (0..3)
        .map(|b| (0..7).fold(0u64, |acc, j| acc | ((((j + 1) >> b) & 1) as u64) << j))
        .collect();
    BitMatrix::from_words(7, rows).expect("literal")
}

pub fn hamming_7_4() -> LinearCode {
    LinearCode::from_parity_check(&hamming_7_4_matrix())
}

/// All-ones row over the four binary-expansion rows of `0..16`.
pub fn ext_hamming_16_matrix() -> BitMatrix {
    let mut rows = vec![0xffffu64];
    rows.extend((0..4).map(|b| (0..16).fold(0u64, |acc, j| acc | (((j >> b) & 1) as u64) << j)));
    BitMatrix::from_words(16, rows).expect("literal")
}

pub fn ext_hamming_16_11_4() -> LinearCode {
    LinearCode::from_parity_check(&ext_hamming_16_matrix())
}

/// Cyclic [23,12,7] Golay code from `g(x) = 1+x^2+x^4+x^5+x^6+x^10+x^11`,
/// extended by an overall parity bit.
pub fn golay_24_12_8() -> LinearCode {
    const G: u64 = 0b1100_0111_0101;
    let rows = (0..12)
        .map(|i| {
            let w = G << i;
            w | u64::from(w.count_ones() % 2) << 23
        })
        .collect();
    LinearCode::from_generator(&BitMatrix::from_words(24, rows).expect("literal"))
}

fn split_name(name: &str) -> (String, Option<&str>) {
    let name = name.trim();
    if let Some((base, rest)) = name.split_once('(') {
        if let Some(arg) = rest.strip_suffix(')') {
            return (base.trim().to_ascii_lowercase(), Some(arg.trim()));
        }
    }
    if let Some((base, arg)) = name.split_once(':') {
        return (base.trim().to_ascii_lowercase(), Some(arg.trim()));
    }
    (name.to_ascii_lowercase(), None)
}

fn length_arg(name: &str, arg: Option<&str>) -> Result<usize> {
    arg.and_then(|a| a.parse().ok())
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

/// Looks up a code by name.
pub fn code(name: &str) -> Result<LinearCode> {
    let (base, arg) = split_name(name);
    match (base.as_str(), arg) {
        ("repetition" | "rep", a) => repetition(length_arg(name, a)?),
        ("full", a) => full(length_arg(name, a)?),
        ("zero", a) => zero(length_arg(name, a)?),
        ("even", a) => even_weight(length_arg(name, a)?),
        ("rm_8_4_4" | "rm", None) => Ok(rm_8_4_4()),
        ("hamming_7_4" | "hamming", None) => Ok(hamming_7_4()),
        ("ext_hamming_16_11_4", None) => Ok(ext_hamming_16_11_4()),
        ("golay_24_12_8" | "golay", None) => Ok(golay_24_12_8()),
        _ => match matrix(name) {
            Ok(h) => Ok(LinearCode::from_parity_check(&h)),
            Err(_) => Err(Error::UnknownCatalogEntry(name.to_string())),
        },
    }
}

/// Looks up a matrix by name; code names yield their named parity-check matrix.
pub fn matrix(name: &str) -> Result<BitMatrix> {
    let (base, arg) = split_name(name);
    match (base.as_str(), arg) {
        ("h14", None) => Ok(h14()),
        (b, None) if b.starts_with('h') && b[1..].parse::<usize>().is_ok() => {
            reed_muller_matrix(b[1..].parse().expect("checked"))
        }
        ("repetition" | "rep", a) => repetition_parity_matrix(length_arg(name, a)?),
        ("even", a) => even_weight_parity_matrix(length_arg(name, a)?),
        ("full", a) => BitMatrix::empty(length_arg(name, a)?),
        ("zero", a) => BitMatrix::identity(length_arg(name, a)?),
        ("rm_8_4_4" | "rm", None) => reed_muller_matrix(4),
        ("hamming_7_4" | "hamming", None) => Ok(hamming_7_4_matrix()),
        ("ext_hamming_16_11_4", None) => Ok(ext_hamming_16_matrix()),
        ("golay_24_12_8" | "golay", None) => Ok(golay_24_12_8().parity_basis().clone()),
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Distance;

    #[test]
    fn h14_rows_are_the_weight_four_codewords() {
        let h = h14();
        assert_eq!(h.row_count(), 14);
        assert!(h.rows().all(|r| r.weight() == 4));
        assert!(h.rows_distinct());
        let c = rm_8_4_4();
        assert!(h.rows().all(|r| c.contains(&r)));
    }

    #[test]
    fn named_codes_have_expected_parameters() {
        let cases: [(&str, usize, usize, Distance); 8] = [
            ("rm_8_4_4", 8, 4, Distance::Finite(4)),
            ("hamming_7_4", 7, 4, Distance::Finite(3)),
            ("ext_hamming_16_11_4", 16, 11, Distance::Finite(4)),
            ("golay_24_12_8", 24, 12, Distance::Finite(8)),
            ("repetition(6)", 6, 1, Distance::Finite(6)),
            ("full:3", 3, 3, Distance::Finite(1)),
            ("zero(2)", 2, 0, Distance::Infinite),
            ("even(4)", 4, 3, Distance::Finite(2)),
        ];
        for (name, n, k, d) in cases {
            let c = code(name).unwrap();
            assert_eq!((c.n(), c.k(), c.minimum_distance().unwrap()), (n, k, d), "{name}");
        }
    }

    #[test]
    fn matrices_by_name() {
        assert_eq!(matrix("H4").unwrap().row_count(), 4);
        assert_eq!(matrix("h5").unwrap().row_count(), 5);
        assert!(matrix("H9").is_err());
        assert!(matrix("nonsense").is_err());
        assert!(code("nonsense").is_err());
        assert!(code("repetition").is_err());
        let r = matrix("repetition(4)").unwrap();
        assert_eq!(r.to_text(), "4 3\n1100\n1010\n1001\n");
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn full_code_weight_enumerator() {
        assert_eq!(full(2).unwrap().weight_enumerator().unwrap().to_string(), "1+2x+x^2");
    }
}
