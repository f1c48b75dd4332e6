//! Values computed once by an independent brute-force implementation and
//! frozen here, plus direct comparisons against definitional oracles.

mod common;

use common::*;
use stopset_core::construct::{self, minimal_matrix_search, SearchPredicate};
use stopset_core::harness::analytic_pud;
use stopset_core::stopsets::{self, StoppingDistance};
use stopset_core::{catalog, BitMatrix, Enumerator};

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 5e-9
}

#[test]
fn failure_probabilities_of_the_reed_muller_matrices() {
    let h4 = catalog::matrix("H4").unwrap();
    let h8 = catalog::matrix("H8").unwrap();
    let d4 = stopsets::dead_end_enumerator(&h4).unwrap();
    let d8 = stopsets::dead_end_enumerator(&h8).unwrap();
    assert!(close(analytic_pud(&d4, 0.1).unwrap(), 0.003_712_15));
    assert!(close(analytic_pud(&d4, 0.5).unwrap(), 0.496_093_75));
    assert!(close(analytic_pud(&d8, 0.1).unwrap(), 0.001_350_19));
    assert!(close(analytic_pud(&d8, 0.5).unwrap(), 0.417_968_75));
    // at ε = 1/2 every subset is equally likely
    assert_eq!(analytic_pud(&d8, 0.5).unwrap(), 107.0 / 256.0);
}

#[test]
fn three_row_repetition_matrix() {
    let h = catalog::repetition_parity_matrix(3).unwrap();
    let p = stopsets::stopping_profile(&h).unwrap();
    assert_eq!(p.stopping.to_string(), "1+x^3");
    assert_eq!(p.dead_end.to_string(), "x^3");
    assert_eq!(p.stopping_distance, StoppingDistance::Finite(3));
}

#[test]
fn minimal_searches_on_reed_muller() {
    let rm = catalog::rm_8_4_4();
    let cases = [
        (
            SearchPredicate::StoppingDistanceIsD,
            vec!["00001111", "00110011", "01010101", "10011001", "11110000"],
        ),
        (
            SearchPredicate::DeadEndIsIncorrigible,
            vec!["00001111", "00110011", "01010101", "10101010", "11001100", "11110000"],
        ),
    ];
    for (predicate, rows) in cases {
        let found = minimal_matrix_search(&rm, predicate, 16).unwrap().unwrap();
        assert_eq!(found, BitMatrix::from_strs(&rows).unwrap(), "{predicate}");
    }
    let s_star = minimal_matrix_search(&rm, SearchPredicate::StoppingIsOptimal, 16)
        .unwrap()
        .unwrap();
    assert_eq!(s_star, catalog::h14());
}

#[test]
fn enumerators_agree_with_definitions_on_catalog_matrices() {
    for name in ["H4", "H5", "H6", "H7", "H8", "H14"] {
        let h = catalog::matrix(name).unwrap();
        let p = stopsets::stopping_profile(&h).unwrap();
        assert_eq!(p.stopping, oracle_stopping_enumerator(&h), "{name}");
        assert_eq!(p.dead_end, oracle_dead_end_enumerator(&h), "{name}");
    }
    let rm = catalog::rm_8_4_4();
    assert_eq!(
        stopsets::incorrigible_enumerator(&rm).unwrap(),
        oracle_incorrigible_enumerator(&rm)
    );
}

#[test]
fn enumerators_agree_with_definitions_on_random_matrices() {
    let mut r = rng(11);
    for _ in 0..40 {
        let c = random_code_where(&mut r, 1..=10, |_| true);
        let h = random_parity_check_matrix(&mut r, &c, 2);
        let p = stopsets::stopping_profile(&h).unwrap();
        assert_eq!(p.stopping, oracle_stopping_enumerator(&h));
        assert_eq!(p.dead_end, oracle_dead_end_enumerator(&h));
        assert_eq!(
            stopsets::incorrigible_enumerator(&c).unwrap(),
            oracle_incorrigible_enumerator(&c)
        );
        let opt = stopsets::optimal_enumerators(&c).unwrap();
        let complete = construct::complete_matrix(&c).unwrap();
        assert_eq!(opt, stopsets::stopping_profile(&complete).unwrap());
        assert_eq!(opt.dead_end, oracle_dead_end_enumerator(&complete));
    }
}

#[test]
fn catalog_codes_have_their_parameters() {
    let expect = [
        ("rm", 8, 4, 4),
        ("hamming_7_4", 7, 4, 3),
        ("ext_hamming_16_11_4", 16, 11, 4),
        ("golay_24_12_8", 24, 12, 8),
    ];
    for (name, n, k, d) in expect {
        let c = catalog::code(name).unwrap();
        assert_eq!((c.n(), c.k(), min_distance(&c)), (n, k, Some(d)), "{name}");
    }
    let golay = catalog::golay_24_12_8().weight_enumerator().unwrap();
    assert_eq!(golay, Enumerator::parse(24, "1+759x^8+2576x^12+759x^16+x^24").unwrap());
}
