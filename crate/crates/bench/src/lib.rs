//! Fixtures shared by the benchmarks.

use stopset_core::{catalog, BitMatrix, LinearCode};

/// `(label, code, parity-check matrix)` triples of increasing length.
pub fn fixtures() -> Vec<(&'static str, LinearCode, BitMatrix)> {
    vec![
        ("rm_8_4_4/H8", catalog::rm_8_4_4(), catalog::matrix("H8").unwrap()),
        ("hamming_7_4", catalog::hamming_7_4(), catalog::hamming_7_4_matrix()),
        (
            "ext_hamming_16_11_4",
            catalog::ext_hamming_16_11_4(),
            catalog::ext_hamming_16_matrix(),
        ),
    ]
}
