//! Worked n = 10, r = 5 example: every intermediate board reproduced cell for cell.

use menage_core::{
    canonical_staircase, cycle_plus_identity, fixed_seat_forbidden, rook_polynomial,
    staircase_rook_polynomial, submatrix_a, submatrix_b, BinaryMatrix,
};

fn parse(rows: &[&str]) -> BinaryMatrix {
    let bits: Vec<Vec<u8>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect();
    BinaryMatrix::from_rows(&bits)
}

fn cycle_10() -> BinaryMatrix {
    parse(&[
        "1100000000",
        "0110000000",
        "0011000000",
        "0001100000",
        "0000110000",
        "0000011000",
        "0000001100",
        "0000000110",
        "0000000011",
        "1000000001",
    ])
}

fn forbidden_10_5() -> BinaryMatrix {
    parse(&[
        "011000000",
        "001100000",
        "000100000",
        "000010000",
        "000011000",
        "000001100",
        "000000110",
        "000000011",
        "100000001",
    ])
}

fn a_10_5() -> BinaryMatrix {
    parse(&[
        "11000000",
        "01100000",
        "00100000",
        "00010000",
        "00011000",
        "00001100",
        "00000110",
        "00000011",
    ])
}

fn b_10_5() -> BinaryMatrix {
    parse(&[
        "011000000",
        "001100000",
        "000100000",
        "000010000",
        "000011000",
        "000001100",
        "000000110",
        "000000011",
        "000000001",
    ])
}

#[test]
fn cycle_plus_identity_display() {
    assert_eq!(cycle_plus_identity(10).unwrap(), cycle_10());
}

#[test]
fn forbidden_minor_display() {
    assert_eq!(cycle_10().minor(1, 5).unwrap(), forbidden_10_5());
    assert_eq!(fixed_seat_forbidden(10, 5).unwrap(), forbidden_10_5());
}

#[test]
fn a_and_b_displays() {
    let a = submatrix_a(10, 5).unwrap();
    assert_eq!(a, a_10_5());
    assert_eq!((a.rows(), a.cols(), a.ones_count()), (8, 8, 14));
    let b = submatrix_b(10, 5).unwrap();
    assert_eq!(b, b_10_5());
    assert_eq!((b.rows(), b.cols(), b.ones_count()), (9, 9, 15));
    assert_eq!(forbidden_10_5().zero_entry(9, 1).unwrap(), b_10_5());
}

#[test]
fn a_splits_into_two_staircases() {
    let a1 = parse(&["110", "011", "001"]);
    let a2 = parse(&["10000", "11000", "01100", "00110", "00011"]);
    let parts = a_10_5().disjunct_components();
    assert_eq!(parts, vec![a1.clone(), a2.clone()]);
    // A_1 is the canonical 5-staircase, A_2 the transposed 9-staircase
    assert_eq!(a1, canonical_staircase(5).unwrap());
    assert_eq!(a2, canonical_staircase(9).unwrap().transpose());
    assert_eq!(rook_polynomial(&a1), staircase_rook_polynomial(5));
    assert_eq!(rook_polynomial(&a2), staircase_rook_polynomial(9));
}

#[test]
fn b_splits_into_two_staircases() {
    let b1 = parse(&["0110", "0011", "0001"]);
    let b2 = parse(&["10000", "11000", "01100", "00110", "00011", "00001"]);
    let b = b_10_5();
    // the blocks as displayed, zeroed column included
    assert_eq!(b.block(1, 3, 1, 4).unwrap(), b1);
    assert_eq!(b.block(4, 9, 5, 9).unwrap(), b2);
    assert_eq!(b2, canonical_staircase(10).unwrap().transpose());
    let parts = b.disjunct_components();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0], canonical_staircase(5).unwrap());
    assert_eq!(parts[1], b2);
    assert_eq!(rook_polynomial(&b1), staircase_rook_polynomial(5));
    assert_eq!(rook_polynomial(&b2), staircase_rook_polynomial(10));
}

#[test]
fn complement_relation_for_the_example() {
    let minor = menage_core::menage_matrix(10).unwrap().minor(1, 5).unwrap();
    assert_eq!(minor.complement_in_j(), forbidden_10_5());
}
