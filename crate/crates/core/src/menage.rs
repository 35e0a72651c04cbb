//! Ménage numbers and the fixed-seat counts.
//!
//! Chairs alternate with the ladies; man `i` may not sit in chairs `i` or
//! `i+1 (mod n)`, giving the board `J_n - I - P`. The fixed-seat count is
//! the number of seatings of men `2..n` once man 1 takes chair `r`, i.e.
//! the permanent of `(J_n - I - P)` with row 1 and column `r` deleted. His
//! distance to his wife is then `r - 1`, so `r` ranges over `3..=n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, factorial, Factorials};
use crate::error::{Error, Result};
use crate::matrix::{cycle_plus_identity, menage_matrix, BinaryMatrix};
use crate::permanent::permanent_ryser;
use crate::rook::RookPolynomial;

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::SizeTooSmall { n, min })
    } else {
        Ok(())
    }
}

fn require_chair(n: usize, r: usize) -> Result<()> {
    require_n(n, 3)?;
    if (3..=n).contains(&r) {
        Ok(())
    } else {
        Err(Error::ChairOutOfRange { n, r })
    }
}

fn into_unsigned(v: BigInt) -> BigUint {
    assert!(!v.is_negative(), "alternating sum went negative: {v}");
    v.magnitude().clone()
}

fn signed(v: BigUint, negative: bool) -> BigInt {
    let v = BigInt::from(v);
    if negative {
        -v
    } else {
        v
    }
}

/// Touchard's explicit formula
/// `U_n = sum_k (-1)^k 2n/(2n-k) C(2n-k, k) (n-k)!`.
pub fn touchard_u(n: usize) -> Result<BigUint> {
    require_n(n, 2)?;
    let fact = Factorials::up_to(n);
    let two_n = 2 * n;
    let mut total = BigInt::zero();
    for k in 0..=n {
        let scaled = BigUint::from(two_n) * binomial((two_n - k) as i64, k as i64);
        let (weight, rem) = scaled.div_rem(&BigUint::from(two_n - k));
        assert!(rem.is_zero(), "Touchard weight not integral at n={n}, k={k}");
        total += signed(weight * fact.get(n - k), k % 2 == 1);
    }
    Ok(into_unsigned(total))
}

/// Cayley's recursion `(n-2) H_n = n(n-2) H_{n-1} + n H_{n-2} + 4(-1)^(n+1)`
/// from `H_2 = 0`, `H_3 = 1`.
pub fn cayley_h(n: usize) -> Result<BigUint> {
    require_n(n, 2)?;
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if n == 2 {
        return Ok(BigUint::zero());
    }
    for m in 4..=n {
        let mi = BigInt::from(m);
        let rhs = &mi * (m - 2) * &cur + &mi * &prev + signed(BigUint::from(4u32), m % 2 == 0);
        let (next, rem) = rhs.div_rem(&BigInt::from(m - 2));
        assert!(rem.is_zero(), "Cayley recursion not integral at n={m}");
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(into_unsigned(cur))
}

/// `U_n` as the permanent of `J_n - I - P`.
pub fn u_via_permanent(n: usize) -> Result<BigUint> {
    permanent_ryser(&menage_matrix(n)?)
}

/// `M_n = 2 n! U_n`, the count including the ladies' seatings.
pub fn menage_total(n: usize) -> Result<BigUint> {
    require_n(n, 3)?;
    Ok(BigUint::from(2u32) * factorial(n) * touchard_u(n)?)
}

/// `(I_n + P)` with row 1 and column `r` removed, i.e. the forbidden
/// positions of the men left after man 1 sits in chair `r`.
pub fn fixed_seat_forbidden(n: usize, r: usize) -> Result<BinaryMatrix> {
    require_chair(n, r)?;
    cycle_plus_identity(n)?.minor(1, r)
}

/// The minor `(J_n - I - P)[1 | r]` whose permanent is the fixed-seat count.
pub fn fixed_seat_minor(n: usize, r: usize) -> Result<BinaryMatrix> {
    require_chair(n, r)?;
    menage_matrix(n)?.minor(1, r)
}

/// Forbidden board with row `n-1` and column 1 deleted: the term that
/// places a rook on the wrap-around cell.
pub fn submatrix_a(n: usize, r: usize) -> Result<BinaryMatrix> {
    fixed_seat_forbidden(n, r)?.minor(n - 1, 1)
}

/// Forbidden board with the wrap-around cell `(n-1, 1)` cleared. It is
/// also the forbidden board of the straight-table variant.
pub fn submatrix_b(n: usize, r: usize) -> Result<BinaryMatrix> {
    fixed_seat_forbidden(n, r)?.zero_entry(n - 1, 1)
}

/// Inner double-binomial sum shared by the fixed-seat polynomial and count:
/// `sum_i C(2r-i-4, i) C(2(n-r)-k+i+2, k-i)` over
/// `max(r+k-n-1, 0) <= i <= min(k, r-2)`.
fn fixed_seat_coefficient(n: usize, r: usize, k: usize) -> BigUint {
    let (n, r, k) = (n as i64, r as i64, k as i64);
    let lo = (r + k - n - 1).max(0);
    let hi = k.min(r - 2);
    (lo..=hi)
        .map(|i| binomial(2 * r - i - 4, i) * binomial(2 * (n - r) - k + i + 2, k - i))
        .sum()
}

/// Rook polynomial of [`fixed_seat_forbidden`] by the closed form
/// `c_k = sum_i C(2r-i-4, i) C(2(n-r)-k+i+2, k-i)`, `k = 0..n-1`.
pub fn fixed_seat_rook_polynomial(n: usize, r: usize) -> Result<RookPolynomial> {
    require_chair(n, r)?;
    Ok(RookPolynomial::from_coefficients(
        (0..n).map(|k| fixed_seat_coefficient(n, r, k)).collect(),
    ))
}

/// Number of seatings of the other `n - 1` men once man 1 sits in chair
/// `r`, at distance `r - 1` from his wife:
/// `sum_k (-1)^k (n-k-1)! c_k` with `c_k` as in [`fixed_seat_rook_polynomial`].
pub fn fixed_seat_count(n: usize, r: usize) -> Result<BigUint> {
    require_chair(n, r)?;
    let fact = Factorials::up_to(n - 1);
    let total: BigInt = (0..n)
        .map(|k| signed(fact.get(n - k - 1) * fixed_seat_coefficient(n, r, k), k % 2 == 1))
        .sum();
    Ok(into_unsigned(total))
}

/// Fixed-seat count for a straight table, where the wrap-around adjacency
/// between the last and first chairs is absent. Equals `per(J_{n-1} - B)`.
pub fn straight_table_count(n: usize, r: usize) -> Result<BigUint> {
    require_chair(n, r)?;
    let fact = Factorials::up_to(n - 1);
    let (ni, ri) = (n as i64, r as i64);
    let mut total = BigInt::zero();
    for k in 0..=ni - 2 {
        let lo = (ri + k - ni).max(0);
        let hi = k.min(ri - 2);
        let inner: BigUint = (lo..=hi)
            .map(|i| binomial(2 * ri - i - 4, i) * binomial(2 * (ni - ri) - k + i + 1, k - i))
            .sum();
        total += signed(fact.get((ni - k - 1) as usize) * inner, k % 2 == 1);
    }
    Ok(into_unsigned(total))
}

/// `sum_{k=0}^{n-3} (-1)^k C(2n-k-4, k) (n-k-2)! (n-k-2)`, the r = 3
/// fixed-seat count after telescoping.
pub fn lemma6_lhs(n: usize) -> Result<BigUint> {
    require_n(n, 3)?;
    let fact = Factorials::up_to(n - 2);
    let ni = n as i64;
    let total: BigInt = (0..=n - 3)
        .map(|k| {
            let m = n - k - 2;
            let term = binomial(2 * ni - k as i64 - 4, k as i64) * fact.get(m) * BigUint::from(m);
            signed(term, k % 2 == 1)
        })
        .sum();
    Ok(into_unsigned(total))
}

/// `U_n` computed three independent ways, plus `M_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MenageRecord {
    pub n: usize,
    pub u_touchard: BigUint,
    pub u_cayley: BigUint,
    pub u_permanent: BigUint,
    pub m_total: BigUint,
}

impl MenageRecord {
    /// Panics if the three routes disagree.
    pub fn compute(n: usize) -> Result<Self> {
        require_n(n, 3)?;
        let record = MenageRecord {
            n,
            u_touchard: touchard_u(n)?,
            u_cayley: cayley_h(n)?,
            u_permanent: u_via_permanent(n)?,
            m_total: menage_total(n)?,
        };
        assert!(
            record.u_touchard == record.u_cayley && record.u_cayley == record.u_permanent,
            "ménage routes disagree at n={n}"
        );
        Ok(record)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSeatRecord {
    pub n: usize,
    pub r: usize,
    /// Chairs between man 1 and his wife, clockwise: `r - 1`.
    pub distance: usize,
    pub count_formula: BigUint,
    pub count_permanent: BigUint,
}

impl FixedSeatRecord {
    /// Panics if the closed form and the permanent disagree.
    pub fn compute(n: usize, r: usize) -> Result<Self> {
        let count_formula = fixed_seat_count(n, r)?;
        let count_permanent = permanent_ryser(&fixed_seat_minor(n, r)?)?;
        assert_eq!(count_formula, count_permanent, "fixed-seat routes disagree at n={n}, r={r}");
        Ok(FixedSeatRecord {
            n,
            r,
            distance: r - 1,
            count_formula,
            count_permanent,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::rook_polynomial;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    const U: [u64; 11] = [0, 1, 2, 13, 80, 579, 4738, 43387, 439792, 4890741, 59216642];

    #[test]
    fn touchard_values() {
        assert_eq!(touchard_u(2).unwrap(), big(0));
        assert_eq!(touchard_u(7).unwrap(), big(579));
        assert_eq!(touchard_u(12).unwrap(), big(59216642));
        assert_eq!(touchard_u(1), Err(Error::SizeTooSmall { n: 1, min: 2 }));
    }

    #[test]
    fn cayley_values() {
        assert_eq!(cayley_h(2).unwrap(), big(0));
        assert_eq!(cayley_h(3).unwrap(), big(1));
        assert_eq!(cayley_h(4).unwrap(), big(2));
        assert_eq!(cayley_h(11).unwrap(), big(4890741));
        assert!(cayley_h(0).is_err());
        for (n, &u) in (2..=12).zip(&U) {
            assert_eq!(cayley_h(n).unwrap(), big(u));
        }
    }

    #[test]
    fn permanent_route() {
        assert_eq!(u_via_permanent(4).unwrap(), big(2));
        assert_eq!(u_via_permanent(9).unwrap(), big(43387));
    }

    #[test]
    fn totals() {
        assert_eq!(menage_total(3).unwrap(), big(12));
        assert_eq!(menage_total(4).unwrap(), big(96));
        assert_eq!(menage_total(5).unwrap(), big(3120));
        assert!(menage_total(2).is_err());
    }

    #[test]
    fn records() {
        let rec = MenageRecord::compute(6).unwrap();
        assert_eq!(rec.u_permanent, big(80));
        assert_eq!(rec.m_total, big(2 * 720 * 80));
        let fs = FixedSeatRecord::compute(10, 3).unwrap();
        assert_eq!(fs.distance, 2);
        assert_eq!(fs.count_formula, big(54888));
    }

    #[test]
    fn fixed_seat_examples() {
        assert_eq!(fixed_seat_count(3, 3).unwrap(), big(1));
        for r in 3..=6 {
            assert_eq!(fixed_seat_count(6, r).unwrap(), big(20));
        }
        assert_eq!(fixed_seat_count(10, 3).unwrap(), big(54888));
        assert_eq!(fixed_seat_count(6, 2), Err(Error::ChairOutOfRange { n: 6, r: 2 }));
        assert_eq!(fixed_seat_count(6, 7), Err(Error::ChairOutOfRange { n: 6, r: 7 }));
        assert!(fixed_seat_count(2, 3).is_err());
    }

    #[test]
    fn fixed_seat_polynomial_examples() {
        assert_eq!(fixed_seat_rook_polynomial(3, 3).unwrap(), RookPolynomial::from_u64s(&[1, 2, 1]));
        let board = fixed_seat_forbidden(10, 5).unwrap();
        assert_eq!(fixed_seat_rook_polynomial(10, 5).unwrap(), rook_polynomial(&board));
        for n in 3..=9 {
            for r in 3..=n {
                assert_eq!(fixed_seat_rook_polynomial(n, r).unwrap().coefficient(0), big(1));
            }
        }
    }

    #[test]
    fn straight_examples() {
        assert_eq!(straight_table_count(3, 3).unwrap(), big(1));
        assert_eq!(straight_table_count(4, 3).unwrap(), big(2));
        assert!(straight_table_count(4, 5).is_err());
    }

    #[test]
    fn lemma6_examples() {
        assert_eq!(lemma6_lhs(3).unwrap(), big(1));
        assert_eq!(lemma6_lhs(6).unwrap(), big(20));
        assert_eq!(lemma6_lhs(10).unwrap(), big(54888));
        assert!(lemma6_lhs(2).is_err());
    }

    /// `B_{n,k}` coefficients of the r = 3 expansion, before telescoping.
    fn b_nk(n: usize, k: usize) -> BigUint {
        fixed_seat_coefficient(n, 3, k)
    }

    #[test]
    fn r3_coefficients_before_telescoping() {
        for n in 3..=12 {
            assert_eq!(b_nk(n, 0), big(1));
            assert_eq!(b_nk(n, n - 1), big(1));
            let ni = n as i64;
            for k in 1..=n.saturating_sub(2) {
                let ki = k as i64;
                let closed = binomial(2 * ni - 4 - ki, ki) + binomial(2 * ni - 3 - ki, ki - 1);
                assert_eq!(b_nk(n, k), closed, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn wraparound_cell_is_set() {
        for n in 3..=12 {
            for r in 3..=n {
                assert!(fixed_seat_forbidden(n, r).unwrap().get(n - 1, 1), "n={n}, r={r}");
                assert!(submatrix_b(n, r).is_ok());
            }
        }
    }
}
