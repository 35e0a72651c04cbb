//! Runs every cross-identity for `n` up to a bound and tallies each family.

use menage_core::permanent::BRUTE_LIMIT;
use menage_core::rook::BRUTE_FORCE_ONES_LIMIT;
use menage_core::*;
use num_bigint::BigUint;

use crate::commands::CommandError;
use crate::document::{OutputDocument, Record, Status};

/// Largest `max_n` accepted by [`cmd_verify`].
pub const VERIFY_LIMIT: usize = 20;

const SEQUENCE: [u64; 11] = [0, 1, 2, 13, 80, 579, 4738, 43387, 439792, 4890741, 59216642];

struct Family {
    name: &'static str,
    passed: usize,
    failed: usize,
}

impl Family {
    fn new(name: &'static str) -> Self {
        Family {
            name,
            passed: 0,
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }

    /// Errors count as failures: the checks only use in-range inputs.
    fn expect<T>(&mut self, result: menage_core::Result<T>, pred: impl FnOnce(T) -> bool) {
        self.record(result.map(pred).unwrap_or(false));
    }
}

fn pairs(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (3..=max_n).flat_map(|n| (3..=n).map(move |r| (n, r)))
}

pub fn cmd_verify(max_n: usize, workers: usize) -> std::result::Result<OutputDocument, CommandError> {
    if max_n > VERIFY_LIMIT {
        return Err(menage_core::Error::GuardExceeded {
            what: "verify bound",
            value: max_n,
            limit: VERIFY_LIMIT,
        }
        .into());
    }
    let per = |m: &BinaryMatrix| permanent_ryser_with_workers(m, workers);
    let mut families = Vec::new();

    let mut f = Family::new("menage_three_routes");
    for n in 2..=max_n {
        f.expect(
            (|| Ok((touchard_u(n)?, cayley_h(n)?, per(&menage_matrix(n)?)?)))(),
            |(t, c, p)| t == c && c == p,
        );
    }
    families.push(f);

    let mut f = Family::new("reference_sequence");
    for n in 2..=max_n.min(12) {
        f.expect(touchard_u(n), |u| u == BigUint::from(SEQUENCE[n - 2]));
    }
    families.push(f);

    let mut f = Family::new("fixed_seat_vs_permanent");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((fixed_seat_count(n, r)?, per(&fixed_seat_minor(n, r)?)?)))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("chair_symmetry");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((fixed_seat_count(n, r)?, fixed_seat_count(n, n + 3 - r)?)))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("row_expansion");
    for n in 3..=max_n {
        f.expect(
            (|| {
                let sum = (3..=n).map(|r| fixed_seat_count(n, r)).sum::<menage_core::Result<BigUint>>()?;
                Ok((sum, touchard_u(n)?))
            })(),
            |(s, u)| s == u,
        );
    }
    families.push(f);

    let mut f = Family::new("lemma6_identity");
    for n in 3..=max_n {
        f.expect((|| Ok((lemma6_lhs(n)?, fixed_seat_count(n, 3)?)))(), |(a, b)| a == b);
    }
    families.push(f);

    let mut f = Family::new("complement_of_minor");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((fixed_seat_minor(n, r)?.complement_in_j(), fixed_seat_forbidden(n, r)?)))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("closed_form_rook_polynomial");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((fixed_seat_rook_polynomial(n, r)?, rook_polynomial(&fixed_seat_forbidden(n, r)?))))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("deletion_step");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| {
                let a = rook_polynomial(&submatrix_a(n, r)?);
                let b = rook_polynomial(&submatrix_b(n, r)?);
                Ok((&a.shift() + &b, fixed_seat_rook_polynomial(n, r)?))
            })(),
            |(lhs, rhs)| lhs == rhs,
        );
    }
    families.push(f);

    let mut f = Family::new("staircase_factors");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((rook_polynomial(&submatrix_a(n, r)?), rook_polynomial(&submatrix_b(n, r)?))))(),
            |(a, b)| {
                let first = staircase_rook_polynomial(2 * r - 5);
                let a_second = if r < n {
                    staircase_rook_polynomial(2 * (n - r) - 1)
                } else {
                    RookPolynomial::one()
                };
                a == poly_product(&first, &a_second)
                    && b == poly_product(&first, &staircase_rook_polynomial(2 * (n - r)))
            },
        );
    }
    families.push(f);

    let mut f = Family::new("rook_transform_bridge");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((fixed_seat_rook_polynomial(n, r)?.permanent_transform(n - 1), fixed_seat_count(n, r)?)))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("straight_vs_permanent");
    for (n, r) in pairs(max_n) {
        f.expect(
            (|| Ok((straight_table_count(n, r)?, per(&submatrix_b(n, r)?.complement_in_j())?)))(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("brute_force_permanent");
    for n in 2..=max_n.min(BRUTE_LIMIT) {
        f.expect(
            (|| {
                let m = menage_matrix(n)?;
                Ok((per(&m)?, permanent_brute(&m)?))
            })(),
            |(a, b)| a == b,
        );
    }
    for (n, r) in pairs(max_n.min(BRUTE_LIMIT + 1)) {
        f.expect(
            (|| {
                let m = fixed_seat_minor(n, r)?;
                Ok((per(&m)?, permanent_brute(&m)?))
            })(),
            |(a, b)| a == b,
        );
    }
    families.push(f);

    let mut f = Family::new("staircase_closed_form");
    for k in 1..=max_n.min(BRUTE_FORCE_ONES_LIMIT) {
        f.expect(
            (|| {
                let s = canonical_staircase(k)?;
                Ok((rook_polynomial(&s), brute_force_rook_counts(&s)?))
            })(),
            |(rec, brute)| rec == brute && rec == staircase_rook_polynomial(k),
        );
    }
    families.push(f);

    let mut f = Family::new("problem3_invariants");
    for n in 3..=max_n {
        f.expect((|| Ok((analyze(n)?, analyze_full(n)?)))(), |(half, full)| {
            let sum: BigUint = half.counts.values().sum();
            let mirrored = half.counts.iter().all(|(&r, c)| *c == half.counts[&(n + 3 - r)]);
            let consistent = !half.is_constant || (half.divides && half.common_value == half.quotient);
            half == full && sum == half.u_n && mirrored && consistent
        });
    }
    families.push(f);

    let mut doc = OutputDocument::new("verify", Record::new().with("max_n", max_n));
    for fam in families {
        if fam.failed > 0 {
            doc.status = Status::Mismatch;
        }
        doc.rows.push(
            Record::new()
                .with("family", fam.name)
                .with("checked", fam.passed + fam.failed)
                .with("passed", fam.passed)
                .with("failed", fam.failed),
        );
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn checked(doc: &OutputDocument, family: &str) -> String {
        doc.rows
            .iter()
            .find(|r| r.get("family").unwrap().to_flat() == family)
            .unwrap()
            .get("checked")
            .unwrap()
            .to_flat()
    }

    #[test]
    fn all_families_pass_to_twelve() {
        let doc = cmd_verify(12, 2).unwrap();
        assert_eq!(doc.status, Status::Ok);
        for row in &doc.rows {
            assert_eq!(row.get("failed").unwrap().to_flat(), "0");
            assert_ne!(row.get("checked").unwrap().to_flat(), "0");
        }
        assert_eq!(checked(&doc, "fixed_seat_vs_permanent"), "55");
    }

    #[test]
    fn brute_family_present_at_eight() {
        let doc = cmd_verify(8, 1).unwrap();
        assert_eq!(doc.status, Status::Ok);
        assert_ne!(checked(&doc, "brute_force_permanent"), "0");
    }

    #[test]
    fn empty_range_is_ok() {
        let doc = cmd_verify(0, 1).unwrap();
        assert_eq!(doc.status, Status::Ok);
        assert!(doc.rows.iter().all(|r| r.get("checked").unwrap().to_flat() == "0"));
        assert!(cmd_verify(VERIFY_LIMIT + 1, 1).is_err());
    }
}
