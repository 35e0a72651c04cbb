//! Rook polynomials of (0,1) matrices.
//!
//! `R_M(x) = sum_j nu_j x^j`, where `nu_j` counts the ways to put `j`
//! pairwise non-attacking rooks on the 1-cells of `M`. The general route is
//! the deletion recursion `R_M = x R_{M minus row i, col j} + R_{M with (i,j) zeroed}`
//! run separately on every disjunct component, whose polynomials multiply.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, Factorials};
use crate::error::{Error, Result};
use crate::matrix::{component_labels, BinaryMatrix};

/// Coefficients `nu_0, nu_1, ..., nu_m` with the last stored one nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RookPolynomial {
    coefficients: Vec<BigUint>,
}

impl RookPolynomial {
    pub fn one() -> Self {
        RookPolynomial {
            coefficients: vec![BigUint::one()],
        }
    }

    /// Trailing zeros are dropped. An all-zero input becomes the zero
    /// polynomial, which no board produces but sums of products may pass through.
    pub fn from_coefficients(mut coefficients: Vec<BigUint>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RookPolynomial { coefficients }
    }

    pub fn from_u64s(coefficients: &[u64]) -> Self {
        Self::from_coefficients(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// `nu_j`, zero past the stored length.
    pub fn coefficient(&self, j: usize) -> BigUint {
        self.coefficients.get(j).cloned().unwrap_or_default()
    }

    /// Largest number of non-attacking rooks that fit.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Multiplies by `x`.
    pub fn shift(&self) -> Self {
        if self.coefficients.is_empty() {
            return self.clone();
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(BigUint::zero());
        coefficients.extend(self.coefficients.iter().cloned());
        RookPolynomial { coefficients }
    }

    /// `sum_j (-1)^j nu_j (n - j)!`, which is `per(J_n - M)` when this is
    /// the rook polynomial of an `n x n` matrix `M`.
    pub fn permanent_transform(&self, n: usize) -> BigUint {
        let fact = Factorials::up_to(n);
        let mut total = BigInt::zero();
        for (j, nu) in self.coefficients.iter().enumerate().take(n + 1) {
            let term = BigInt::from(nu * fact.get(n - j));
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        assert!(!total.is_negative(), "alternating rook sum went negative");
        total.magnitude().clone()
    }
}

impl fmt::Debug for RookPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coefficients.iter().map(|c| c.to_string())).finish()
    }
}

impl fmt::Display for RookPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coefficients.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Add for &RookPolynomial {
    type Output = RookPolynomial;

    fn add(self, rhs: &RookPolynomial) -> RookPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RookPolynomial::from_coefficients(
            (0..len).map(|j| self.coefficient(j) + rhs.coefficient(j)).collect(),
        )
    }
}

impl Mul for &RookPolynomial {
    type Output = RookPolynomial;

    fn mul(self, rhs: &RookPolynomial) -> RookPolynomial {
        poly_product(self, rhs)
    }
}

/// Convolution of the coefficient sequences.
pub fn poly_product(p: &RookPolynomial, q: &RookPolynomial) -> RookPolynomial {
    if p.coefficients.is_empty() || q.coefficients.is_empty() {
        return RookPolynomial::from_coefficients(Vec::new());
    }
    let mut out = vec![BigUint::zero(); p.coefficients.len() + q.coefficients.len() - 1];
    for (a, pa) in p.coefficients.iter().enumerate() {
        for (b, qb) in q.coefficients.iter().enumerate() {
            out[a + b] += pa * qb;
        }
    }
    RookPolynomial::from_coefficients(out)
}

/// Closed form shared by every `k`-staircase: `nu_i = C(k - i + 1, i)`.
pub fn staircase_rook_polynomial(k: usize) -> RookPolynomial {
    let k = k as i64;
    RookPolynomial::from_coefficients(
        (0..=(k + 1) / 2).map(|i| binomial(k - i + 1, i)).collect(),
    )
}

type Cell = (usize, usize);

/// Rook polynomial by component splitting plus the deletion recursion,
/// pivoting on the first 1-cell in row-major order.
pub fn rook_polynomial(m: &BinaryMatrix) -> RookPolynomial {
    let cells: Vec<Cell> = m.one_cells().collect();
    let mut memo = HashMap::new();
    rook_of_cells(&cells, &mut memo)
}

fn rook_of_cells(cells: &[Cell], memo: &mut HashMap<Vec<Cell>, RookPolynomial>) -> RookPolynomial {
    match cells.len() {
        0 => return RookPolynomial::one(),
        1 => return RookPolynomial::from_u64s(&[1, 1]),
        _ => {}
    }
    let labels = component_labels(cells);
    let count = labels.iter().copied().max().unwrap_or(0) + 1;
    if count > 1 {
        return (0..count).fold(RookPolynomial::one(), |acc, label| {
            let part: Vec<Cell> = cells
                .iter()
                .zip(&labels)
                .filter(|(_, &l)| l == label)
                .map(|(&c, _)| c)
                .collect();
            poly_product(&acc, &rook_of_cells(&part, memo))
        });
    }
    if let Some(hit) = memo.get(cells) {
        return hit.clone();
    }
    let (pr, pc) = cells[0];
    let attacked: Vec<Cell> = cells
        .iter()
        .copied()
        .filter(|&(r, c)| r != pr && c != pc)
        .collect();
    let with_rook = rook_of_cells(&attacked, memo).shift();
    let without = rook_of_cells(&cells[1..], memo);
    let result = &with_rook + &without;
    memo.insert(cells.to_vec(), result.clone());
    result
}

/// One explicit deletion step at the 1-cell `(i, j)` (1-based):
/// `x R(minor(i, j)) + R(zero_entry(i, j))`. Equals [`rook_polynomial`]
/// for every choice of 1-cell.
pub fn rook_polynomial_with_pivot(m: &BinaryMatrix, i: usize, j: usize) -> Result<RookPolynomial> {
    let zeroed = m.zero_entry(i, j)?;
    let reduced = m.minor(i, j)?;
    Ok(&rook_polynomial(&reduced).shift() + &rook_polynomial(&zeroed))
}

/// Upper bound on 1-cells accepted by [`brute_force_rook_counts`].
pub const BRUTE_FORCE_ONES_LIMIT: usize = 24;

/// Counts non-attacking placements by visiting every subset of 1-cells.
pub fn brute_force_rook_counts(m: &BinaryMatrix) -> Result<RookPolynomial> {
    let cells: Vec<Cell> = m.one_cells().collect();
    if cells.len() > BRUTE_FORCE_ONES_LIMIT {
        return Err(Error::GuardExceeded {
            what: "ones-count for exhaustive rook enumeration",
            value: cells.len(),
            limit: BRUTE_FORCE_ONES_LIMIT,
        });
    }
    let mut counts = vec![0u64; cells.len() + 1];
    let mut row_used = vec![false; m.rows()];
    let mut col_used = vec![false; m.cols()];
    for subset in 0u32..(1u32 << cells.len()) {
        let mut ok = true;
        let chosen = || (0..cells.len()).filter(move |&b| subset >> b & 1 == 1);
        for b in chosen() {
            let (r, c) = cells[b];
            if row_used[r] || col_used[c] {
                ok = false;
                break;
            }
            row_used[r] = true;
            col_used[c] = true;
        }
        for b in chosen() {
            let (r, c) = cells[b];
            row_used[r] = false;
            col_used[c] = false;
        }
        if ok {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(RookPolynomial::from_u64s(&counts))
}

/// `per(J_n - M)` through the rook polynomial of the `n x n` matrix `M`.
pub fn permanent_via_rook(m: &BinaryMatrix, n: usize) -> Result<BigUint> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != n {
        return Err(Error::DimensionMismatch {
            rows: m.rows(),
            cols: m.cols(),
            expected: n,
        });
    }
    Ok(rook_polynomial(m).permanent_transform(n))
}
