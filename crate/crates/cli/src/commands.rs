use std::fmt;
use std::path::Path;

use menage_core::permanent::RYSER_LIMIT;
use menage_core::{
    cayley_h, fixed_seat_count, fixed_seat_minor, menage_matrix, menage_total, permanent_ryser_with_workers,
    rook_polynomial, scan_with, straight_table_count, submatrix_b, touchard_u, BinaryMatrix,
};
use num_bigint::BigUint;
use thiserror::Error;

use crate::document::{OutputDocument, Record, Status, Value};

/// Largest `n` for tables that skip the permanent route.
pub const TABLE_LIMIT: usize = 1000;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Core(#[from] menage_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CommandError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Touchard,
    Cayley,
    Permanent,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Touchard, Method::Cayley, Method::Permanent];

    pub fn name(self) -> &'static str {
        match self {
            Method::Touchard => "touchard",
            Method::Cayley => "cayley",
            Method::Permanent => "permanent",
        }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Method>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let m = Method::ALL
                .into_iter()
                .find(|m| m.name() == part)
                .ok_or_else(|| CommandError::Usage(format!("unknown method {part:?}")))?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        if out.is_empty() {
            return Err(CommandError::Usage("no methods given".into()));
        }
        // canonical column order regardless of how they were listed
        out.sort_by_key(|m| Method::ALL.iter().position(|x| x == m));
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeatMethod {
    Formula,
    Permanent,
    Both,
}

impl SeatMethod {
    fn formula(self) -> bool {
        self != SeatMethod::Permanent
    }

    fn permanent(self) -> bool {
        self != SeatMethod::Formula
    }
}

impl fmt::Display for SeatMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeatMethod::Formula => "formula",
            SeatMethod::Permanent => "permanent",
            SeatMethod::Both => "both",
        })
    }
}

fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(menage_core::Error::GuardExceeded { what, value, limit }.into())
    } else {
        Ok(())
    }
}

fn check_chair(n: usize, r: usize) -> Result<()> {
    if n < 3 {
        return Err(menage_core::Error::SizeTooSmall { n, min: 3 }.into());
    }
    if !(3..=n).contains(&r) {
        return Err(menage_core::Error::ChairOutOfRange { n, r }.into());
    }
    Ok(())
}

/// `U_n` for `min..=max` by the chosen methods, with `M_n`.
pub fn cmd_table(min: usize, max: usize, methods: &[Method], workers: usize) -> Result<OutputDocument> {
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let params = Record::new()
        .with("min", min)
        .with("max", max)
        .with("methods", names.join(",").as_str());
    if min < 2 || min > max {
        return Err(menage_core::Error::InvalidRange { min, max }.into());
    }
    let limit = if methods.contains(&Method::Permanent) { RYSER_LIMIT } else { TABLE_LIMIT };
    guard("table upper bound", max, limit)?;

    let mut doc = OutputDocument::new("table", params);
    for n in min..=max {
        let mut row = Record::new().with("n", n);
        let mut values: Vec<BigUint> = Vec::new();
        for &m in methods {
            let u = match m {
                Method::Touchard => touchard_u(n)?,
                Method::Cayley => cayley_h(n)?,
                Method::Permanent => permanent_ryser_with_workers(&menage_matrix(n)?, workers)?,
            };
            row = row.with(&format!("u_{}", m.name()), u.clone());
            values.push(u);
        }
        if values.windows(2).any(|w| w[0] != w[1]) {
            doc.status = Status::Mismatch;
        }
        let total = if n >= 3 { Value::Int(menage_total(n)?) } else { Value::Null };
        doc.rows.push(row.with("m_total", total));
    }
    Ok(doc)
}

/// Fixed-seat counts for one chair or for every chair `3..=n`.
pub fn cmd_fixed_seat(n: usize, r: Option<usize>, method: SeatMethod, workers: usize) -> Result<OutputDocument> {
    let params = Record::new()
        .with("n", n)
        .with("r", r.map(BigUint::from))
        .with("method", method.to_string().as_str());
    let chairs: Vec<usize> = match r {
        Some(r) => vec![r],
        None => (3..=n).collect(),
    };
    check_chair(n, r.unwrap_or(3))?;
    if method.permanent() {
        guard("permanent order", n - 1, RYSER_LIMIT)?;
    }
    let mut doc = OutputDocument::new("fixed-seat", params);
    for r in chairs {
        let mut row = Record::new().with("n", n).with("r", r).with("distance", r - 1);
        let formula = method.formula().then(|| fixed_seat_count(n, r)).transpose()?;
        let permanent = if method.permanent() {
            Some(permanent_ryser_with_workers(&fixed_seat_minor(n, r)?, workers)?)
        } else {
            None
        };
        if let (Some(f), Some(p)) = (&formula, &permanent) {
            if f != p {
                doc.status = Status::Mismatch;
            }
        }
        if method.formula() {
            row = row.with("count_formula", formula);
        }
        if method.permanent() {
            row = row.with("count_permanent", permanent);
        }
        doc.rows.push(row);
    }
    Ok(doc)
}

/// Straight-table fixed-seat count with its permanent cross-check.
pub fn cmd_straight(n: usize, r: usize, workers: usize) -> Result<OutputDocument> {
    let params = Record::new().with("n", n).with("r", r);
    check_chair(n, r)?;
    guard("permanent order", n - 1, RYSER_LIMIT)?;
    let formula = straight_table_count(n, r)?;
    let permanent = permanent_ryser_with_workers(&submatrix_b(n, r)?.complement_in_j(), workers)?;
    let mut doc = OutputDocument::new("straight", params);
    if formula != permanent {
        doc.status = Status::Mismatch;
    }
    doc.rows.push(
        Record::new()
            .with("n", n)
            .with("r", r)
            .with("count_formula", formula)
            .with("count_permanent", permanent),
    );
    Ok(doc)
}

/// Problem 3 reports for `min..=max` plus the list of chair-independent `n`.
pub fn cmd_problem3(min: usize, max: usize, limit: usize, workers: usize) -> Result<OutputDocument> {
    let params = Record::new().with("min", min).with("max", max);
    let reports = scan_with(min, max, limit, workers)?;
    let mut doc = OutputDocument::new("problem3", params);
    let mut constant = Vec::new();
    for rep in reports {
        if rep.is_constant {
            constant.push(rep.n.to_string());
        }
        doc.rows.push(
            Record::new()
                .with("n", rep.n)
                .with("counts", Value::Ints(rep.counts.into_values().collect()))
                .with("is_constant", rep.is_constant)
                .with("common_value", rep.common_value)
                .with("u_n", rep.u_n)
                .with("divides", rep.divides)
                .with("quotient", rep.quotient),
        );
    }
    doc.summary = Some(format!("constant for n in {{{}}}", constant.join(", ")));
    Ok(doc)
}

/// Rook polynomial of a matrix given in the text format.
pub fn cmd_rook_text(label: &str, text: &str) -> Result<OutputDocument> {
    let m = BinaryMatrix::parse_text(text)?;
    let poly = rook_polynomial(&m);
    let mut doc = OutputDocument::new("rook", Record::new().with("file", label));
    for (j, nu) in poly.coefficients().iter().enumerate() {
        doc.rows.push(Record::new().with("j", j).with("nu", nu.clone()));
    }
    Ok(doc)
}

pub fn cmd_rook(path: &Path) -> Result<OutputDocument> {
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CommandError::Io {
        path: label.clone(),
        source,
    })?;
    cmd_rook_text(&label, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(doc: &OutputDocument, key: &str) -> Vec<String> {
        doc.rows.iter().map(|r| r.get(key).unwrap().to_flat()).collect()
    }

    #[test]
    fn method_list_parsing() {
        assert_eq!(
            Method::parse_list("permanent,touchard").unwrap(),
            vec![Method::Touchard, Method::Permanent]
        );
        assert!(Method::parse_list("bogus").is_err());
        assert!(Method::parse_list("").is_err());
    }

    #[test]
    fn table_reproduces_sequence() {
        let doc = cmd_table(2, 12, &Method::ALL, 1).unwrap();
        assert_eq!(doc.status, Status::Ok);
        let expected = ["0", "1", "2", "13", "80", "579", "4738", "43387", "439792", "4890741", "59216642"];
        for key in ["u_touchard", "u_cayley", "u_permanent"] {
            assert_eq!(ints(&doc, key), expected);
        }
        assert_eq!(doc.rows[0].get("m_total"), Some(&Value::Null));
        assert_eq!(doc.rows[1].get("m_total").unwrap().to_flat(), "12");
    }

    #[test]
    fn table_single_method() {
        let doc = cmd_table(2, 2, &[Method::Touchard], 1).unwrap();
        assert_eq!(doc.status, Status::Ok);
        assert_eq!(doc.rows.len(), 1);
        assert!(doc.rows[0].get("u_cayley").is_none());
        assert!(cmd_table(1, 4, &[Method::Touchard], 1).is_err());
        assert!(cmd_table(5, 4, &[Method::Touchard], 1).is_err());
        assert!(cmd_table(2, 29, &Method::ALL, 1).is_err());
        assert!(cmd_table(2, 29, &[Method::Touchard], 1).is_ok());
    }

    #[test]
    fn fixed_seat_rows() {
        let doc = cmd_fixed_seat(10, None, SeatMethod::Both, 2).unwrap();
        assert_eq!(doc.rows.len(), 8);
        assert_eq!(doc.status, Status::Ok);
        let total: u64 = ints(&doc, "count_formula").iter().map(|s| s.parse::<u64>().unwrap()).sum();
        assert_eq!(total, 439792);
        let one = cmd_fixed_seat(10, Some(3), SeatMethod::Formula, 1).unwrap();
        assert_eq!(ints(&one, "count_formula"), ["54888"]);
        assert!(one.rows[0].get("count_permanent").is_none());
        let six = cmd_fixed_seat(6, None, SeatMethod::Permanent, 1).unwrap();
        assert_eq!(ints(&six, "count_permanent"), ["20"; 4]);
        assert!(cmd_fixed_seat(6, Some(7), SeatMethod::Both, 1).is_err());
        assert!(cmd_fixed_seat(2, None, SeatMethod::Both, 1).is_err());
    }

    #[test]
    fn straight_rows() {
        let doc = cmd_straight(3, 3, 1).unwrap();
        assert_eq!(ints(&doc, "count_formula"), ["1"]);
        let doc = cmd_straight(4, 3, 1).unwrap();
        assert_eq!(ints(&doc, "count_permanent"), ["2"]);
        for n in 3..=10 {
            for r in 3..=n {
                assert_eq!(cmd_straight(n, r, 1).unwrap().status, Status::Ok);
            }
        }
    }

    #[test]
    fn problem3_summary() {
        let doc = cmd_problem3(3, 12, 18, 3).unwrap();
        assert_eq!(doc.summary.as_deref(), Some("constant for n in {3, 4, 6}"));
        let ten = cmd_problem3(10, 10, 18, 1).unwrap();
        assert_eq!(ten.rows[0].get("divides"), Some(&Value::Bool(true)));
        assert_eq!(ten.rows[0].get("is_constant"), Some(&Value::Bool(false)));
        let five = cmd_problem3(5, 5, 18, 1).unwrap();
        assert_eq!(five.rows[0].get("divides"), Some(&Value::Bool(false)));
        assert!(cmd_problem3(3, 19, 18, 1).is_err());
    }

    #[test]
    fn rook_from_text() {
        let doc = cmd_rook_text("s5", "3 3\n110\n011\n001\n").unwrap();
        assert_eq!(ints(&doc, "nu"), ["1", "5", "6", "1"]);
        let doc = cmd_rook_text("z", "2 2\n00\n00").unwrap();
        assert_eq!(ints(&doc, "nu"), ["1"]);
        let doc = cmd_rook_text("i3", "3 3\n100\n010\n001\n").unwrap();
        assert_eq!(ints(&doc, "nu"), ["1", "3", "3", "1"]);
        let err = cmd_rook_text("bad", "2 2\n10\n1x\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3, column 2: unexpected character 'x', expected 0 or 1");
    }
}
