//! For which `n` is the fixed-seat count the same for every chair `r`?
//!
//! Expanding `per(J_n - I - P)` along the first row gives
//! `U_n = sum_{r=3}^{n} count(n, r)`, so a constant count must equal
//! `U_n / (n - 2)`. Only chairs `3..=floor((n+3)/2)` are computed; the rest
//! follow from the mirror symmetry `count(n, r) = count(n, n - r + 3)`.

use std::collections::BTreeMap;
use std::thread;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::menage::{fixed_seat_count, touchard_u};

/// Default upper bound on `n` accepted by [`scan`].
pub const DEFAULT_SCAN_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem3Report {
    pub n: usize,
    /// Fixed-seat count for every chair `r` in `3..=n`.
    pub counts: BTreeMap<usize, BigUint>,
    pub is_constant: bool,
    pub common_value: Option<BigUint>,
    pub u_n: BigUint,
    /// Whether `n - 2` divides `U_n`.
    pub divides: bool,
    pub quotient: Option<BigUint>,
}

impl Problem3Report {
    /// Distinct counts over all chairs, ascending.
    pub fn distinct_values(&self) -> Vec<BigUint> {
        let mut values: Vec<BigUint> = self.counts.values().cloned().collect();
        values.sort();
        values.dedup();
        values
    }
}

/// Builds the report for one `n`, computing half the chairs and mirroring.
pub fn analyze(n: usize) -> Result<Problem3Report> {
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    let mut counts = BTreeMap::new();
    for r in 3..=(n + 3) / 2 {
        counts.insert(r, fixed_seat_count(n, r)?);
    }
    for r in (n + 3) / 2 + 1..=n {
        let mirrored = counts[&(n + 3 - r)].clone();
        counts.insert(r, mirrored);
    }
    Ok(report_from_counts(n, counts, touchard_u(n)?))
}

/// Same report with every chair computed directly, no mirroring.
pub fn analyze_full(n: usize) -> Result<Problem3Report> {
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    let counts = (3..=n)
        .map(|r| fixed_seat_count(n, r).map(|c| (r, c)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(report_from_counts(n, counts, touchard_u(n)?))
}

fn report_from_counts(n: usize, counts: BTreeMap<usize, BigUint>, u_n: BigUint) -> Problem3Report {
    let first = counts.values().next().cloned().unwrap_or_default();
    let is_constant = counts.values().all(|c| *c == first);
    let (quotient, rem) = u_n.div_rem(&BigUint::from(n - 2));
    let divides = rem.is_zero();
    Problem3Report {
        n,
        counts,
        is_constant,
        common_value: is_constant.then_some(first),
        u_n,
        divides,
        quotient: divides.then_some(quotient),
    }
}

pub fn scan(n_min: usize, n_max: usize) -> Result<Vec<Problem3Report>> {
    scan_with(n_min, n_max, DEFAULT_SCAN_LIMIT, 1)
}

/// Reports for `n_min..=n_max` in ascending `n`. Distinct `n` are spread
/// over `workers` threads; the output order does not depend on it.
pub fn scan_with(n_min: usize, n_max: usize, limit: usize, workers: usize) -> Result<Vec<Problem3Report>> {
    if n_min < 3 || n_min > n_max {
        return Err(Error::InvalidRange { min: n_min, max: n_max });
    }
    if n_max > limit {
        return Err(Error::GuardExceeded {
            what: "scan upper bound",
            value: n_max,
            limit,
        });
    }
    let ns: Vec<usize> = (n_min..=n_max).collect();
    let workers = workers.clamp(1, ns.len());
    if workers == 1 {
        return ns.into_iter().map(analyze).collect();
    }
    let per_worker = ns.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = ns
            .chunks(per_worker)
            .map(|chunk| s.spawn(move || chunk.iter().map(|&n| analyze(n)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}

/// The `n` whose count does not depend on the chair.
pub fn constant_ns(reports: &[Problem3Report]) -> Vec<usize> {
    reports.iter().filter(|r| r.is_constant).map(|r| r.n).collect()
}
