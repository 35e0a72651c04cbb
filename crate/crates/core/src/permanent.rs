//! Exact permanents of square (0,1) matrices.
//!
//! [`permanent_ryser`] uses the inclusion-exclusion formula
//! `per(A) = sum over column sets S of (-1)^(n - |S|) prod_i sum_{j in S} a_ij`,
//! visiting the sets in Gray-code order so each step adds or removes one
//! column from the running row sums. [`permanent_brute`] sums over all
//! permutations and serves as the oracle.

use std::thread;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Largest order accepted by [`permanent_ryser`].
pub const RYSER_LIMIT: usize = 28;
/// Largest order accepted by [`permanent_brute`].
pub const BRUTE_LIMIT: usize = 8;

fn require_square(m: &BinaryMatrix, limit: usize, what: &'static str) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > limit {
        return Err(Error::GuardExceeded {
            what,
            value: m.rows(),
            limit,
        });
    }
    Ok(m.rows())
}

pub fn permanent_ryser(m: &BinaryMatrix) -> Result<BigUint> {
    permanent_ryser_with_workers(m, 1)
}

/// [`permanent_ryser`] with the subset sweep split into `workers`
/// contiguous stretches of the Gray-code sequence. The result does not
/// depend on `workers`.
pub fn permanent_ryser_with_workers(m: &BinaryMatrix, workers: usize) -> Result<BigUint> {
    let n = require_square(m, RYSER_LIMIT, "matrix order for Ryser's method")?;
    if n == 0 {
        return Ok(BigUint::one());
    }
    let column_rows: Vec<Vec<usize>> = (0..n)
        .map(|c| (0..n).filter(|&r| m.at(r, c)).collect())
        .collect();
    let empty_row = (0..n).any(|r| (0..n).all(|c| !m.at(r, c)));
    if empty_row || column_rows.iter().any(Vec::is_empty) {
        return Ok(BigUint::zero());
    }

    let total: u64 = 1 << n;
    let workers = workers.clamp(1, 64) as u64;
    let chunk = total.div_ceil(workers);
    let bounds: Vec<(u64, u64)> = (0..workers)
        .map(|w| (1 + w * chunk, (1 + (w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let partials: Vec<SignedSum> = if bounds.len() == 1 {
        vec![sweep(n, &column_rows, bounds[0].0, bounds[0].1)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(lo, hi)| {
                    let column_rows = &column_rows;
                    s.spawn(move || sweep(n, column_rows, lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("permanent worker panicked"))
                .collect()
        })
    };

    let mut pos = BigUint::zero();
    let mut neg = BigUint::zero();
    for part in partials {
        let (p, q) = part.finish();
        pos += p;
        neg += q;
    }
    assert!(pos >= neg, "inclusion-exclusion sum went negative");
    Ok(pos - neg)
}

/// Two-sided accumulator: machine-word fast path, spilling into `BigUint`.
#[derive(Default)]
struct SignedSum {
    pos: u128,
    neg: u128,
    pos_big: BigUint,
    neg_big: BigUint,
}

impl SignedSum {
    fn add_small(acc: &mut u128, big: &mut BigUint, v: u128) {
        match acc.checked_add(v) {
            Some(s) => *acc = s,
            None => {
                *big += BigUint::from(*acc);
                *acc = v;
            }
        }
    }

    fn push(&mut self, value: Product, positive: bool) {
        match (value, positive) {
            (Product::Small(v), true) => Self::add_small(&mut self.pos, &mut self.pos_big, v),
            (Product::Small(v), false) => Self::add_small(&mut self.neg, &mut self.neg_big, v),
            (Product::Big(v), true) => self.pos_big += v,
            (Product::Big(v), false) => self.neg_big += v,
        }
    }

    fn finish(self) -> (BigUint, BigUint) {
        (self.pos_big + self.pos, self.neg_big + self.neg)
    }
}

enum Product {
    Small(u128),
    Big(BigUint),
}

fn row_product(row_sums: &[u32]) -> Product {
    let mut acc: u128 = 1;
    for (k, &s) in row_sums.iter().enumerate() {
        match acc.checked_mul(s as u128) {
            Some(v) => acc = v,
            None => {
                let big = row_sums[k..]
                    .iter()
                    .fold(BigUint::from(acc), |b, &s| b * s);
                return Product::Big(big);
            }
        }
    }
    Product::Small(acc)
}

fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

/// Visits Gray-code indices `lo..hi` (never 0, the empty column set).
fn sweep(n: usize, column_rows: &[Vec<usize>], lo: u64, hi: u64) -> SignedSum {
    let mut row_sums = vec![0u32; n];
    let start = gray(lo - 1);
    for (c, rows) in column_rows.iter().enumerate() {
        if start >> c & 1 == 1 {
            for &r in rows {
                row_sums[r] += 1;
            }
        }
    }
    let mut zero_rows = row_sums.iter().filter(|&&s| s == 0).count();
    let mut size = start.count_ones() as usize;
    let mut acc = SignedSum::default();
    for t in lo..hi {
        let c = t.trailing_zeros() as usize;
        let added = gray(t) >> c & 1 == 1;
        for &r in &column_rows[c] {
            if added {
                if row_sums[r] == 0 {
                    zero_rows -= 1;
                }
                row_sums[r] += 1;
            } else {
                row_sums[r] -= 1;
                if row_sums[r] == 0 {
                    zero_rows += 1;
                }
            }
        }
        if added {
            size += 1;
        } else {
            size -= 1;
        }
        if zero_rows == 0 {
            acc.push(row_product(&row_sums), (n - size).is_multiple_of(2));
        }
    }
    acc
}

/// Sum over all `n!` permutations of the product of the selected cells.
pub fn permanent_brute(m: &BinaryMatrix) -> Result<BigUint> {
    let n = require_square(m, BRUTE_LIMIT, "matrix order for brute-force permanent")?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count: u64 = 0;
    let hits = |perm: &[usize]| perm.iter().enumerate().all(|(r, &c)| m.at(r, c));
    if hits(&perm) {
        count += 1;
    }
    // Heap's algorithm, iterative form
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            if hits(&perm) {
                count += 1;
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    Ok(BigUint::from(count))
}
