use serde::Serialize;

use crate::catalog;
use crate::construct;
use crate::enumerator::Enumerator;
use crate::error::Result;
use crate::stopsets;

/// Reference polynomials for the [8,4,4] Reed-Muller code:
/// `(matrix, quantity, polynomial)`. Quantity `A`/`I` belongs to the code.
pub const EXPECTED_TABLE1: [(&str, &str, &str); 12] = [
    ("code", "A", "1+14x^4+x^8"),
    ("code", "I", "14x^4+56x^5+28x^6+8x^7+x^8"),
    ("H4", "S", "1+2x^3+24x^4+40x^5+28x^6+8x^7+x^8"),
    ("H4", "D", "2x^3+32x^4+56x^5+28x^6+8x^7+x^8"),
    ("H5", "S", "1+18x^4+36x^5+28x^6+8x^7+x^8"),
    ("H5", "D", "18x^4+56x^5+28x^6+8x^7+x^8"),
    ("H8", "S", "1+14x^4+24x^5+28x^6+8x^7+x^8"),
    ("H8", "D", "14x^4+56x^5+28x^6+8x^7+x^8"),
    ("H14", "S", "1+14x^4+28x^6+8x^7+x^8"),
    ("H14", "D", "14x^4+56x^5+28x^6+8x^7+x^8"),
    ("H*", "S", "1+14x^4+28x^6+8x^7+x^8"),
    ("H*", "D", "14x^4+56x^5+28x^6+8x^7+x^8"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub matrix: &'static str,
    pub quantity: &'static str,
    pub rows: Option<usize>,
    pub computed: Enumerator,
    pub expected: Enumerator,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub entries: Vec<Table1Entry>,
    /// `S(x)` of `H14` equals that of the complete matrix.
    pub h14_stopping_is_optimal: bool,
    /// Matrices whose `D(x)` equals `I(x)`.
    pub optimal_dead_end_matrices: Vec<&'static str>,
    pub all_match: bool,
}

/// Recomputes every polynomial of the reference table and diffs it against
/// [`EXPECTED_TABLE1`].
pub fn table1_report() -> Result<Table1Report> {
    let code = catalog::rm_8_4_4();
    let a = code.weight_enumerator()?;
    let i = stopsets::incorrigible_enumerator(&code)?;

    let matrices = [
        ("H4", catalog::matrix("H4")?),
        ("H5", catalog::matrix("H5")?),
        ("H8", catalog::matrix("H8")?),
        ("H14", catalog::matrix("H14")?),
        ("H*", construct::complete_matrix(&code)?),
    ];

    let mut computed: Vec<(&'static str, &'static str, Option<usize>, Enumerator)> =
        vec![("code", "A", None, a), ("code", "I", None, i.clone())];
    let mut optimal_dead_end_matrices = Vec::new();
    let mut s_h14 = None;
    let mut s_star = None;
    for (name, h) in &matrices {
        let p = stopsets::stopping_profile(h)?;
        if p.dead_end == i {
            optimal_dead_end_matrices.push(*name);
        }
        match *name {
            "H14" => s_h14 = Some(p.stopping.clone()),
            "H*" => s_star = Some(p.stopping.clone()),
            _ => {}
        }
        computed.push((name, "S", Some(h.row_count()), p.stopping));
        computed.push((name, "D", Some(h.row_count()), p.dead_end));
    }

    let entries: Vec<Table1Entry> = EXPECTED_TABLE1
        .iter()
        .zip(computed)
        .map(|(&(matrix, quantity, text), (m, q, rows, value))| {
            debug_assert_eq!((matrix, quantity), (m, q));
            let expected = Enumerator::parse(8, text).expect("reference literal");
            Table1Entry {
                matrix,
                quantity,
                rows,
                matches: value == expected,
                computed: value,
                expected,
            }
        })
        .collect();

    let all_match = entries.iter().all(|e| e.matches);
    Ok(Table1Report {
        entries,
        h14_stopping_is_optimal: s_h14.is_some() && s_h14 == s_star,
        optimal_dead_end_matrices,
        all_match,
    })
}
