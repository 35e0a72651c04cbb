//! Exact counts for the ménage problem and its fixed-seat variant.
//!
//! Ménage numbers `U_n` come from Touchard's formula, Cayley's recursion
//! and the permanent of `J_n - I - P`. The fixed-seat count, the number of
//! ways to seat the remaining men once one man has chosen chair `r`, comes
//! from a closed double-binomial sum and from the permanent of a minor;
//! rook polynomials tie the two together.

pub mod combinat;
pub mod error;
pub mod matrix;
pub mod menage;
pub mod permanent;
pub mod problem3;
pub mod rook;

pub use error::{Error, Result};
pub use matrix::{canonical_staircase, cycle_plus_identity, menage_matrix, BinaryMatrix};
pub use menage::{
    cayley_h, fixed_seat_count, fixed_seat_forbidden, fixed_seat_minor, fixed_seat_rook_polynomial,
    lemma6_lhs, menage_total, straight_table_count, submatrix_a, submatrix_b, touchard_u,
    u_via_permanent, FixedSeatRecord, MenageRecord,
};
pub use permanent::{permanent_brute, permanent_ryser, permanent_ryser_with_workers};
pub use problem3::{analyze, analyze_full, scan, scan_with, Problem3Report};
pub use rook::{
    brute_force_rook_counts, permanent_via_rook, poly_product, rook_polynomial,
    rook_polynomial_with_pivot, staircase_rook_polynomial, RookPolynomial,
};
