//! Dense (0,1) matrices and the constructions the ménage problem needs:
//! `J_n - I - P`, `I_n + P`, minors, single-cell zeroing, complements,
//! staircases and the split into disjunct components.
//!
//! Every public index is 1-based. Internally cells are stored row-major,
//! one `bool` per position.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl BinaryMatrix {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            cells: vec![false; rows * cols],
        }
    }

    /// The 0x0 matrix. Its permanent is 1 and its rook polynomial is 1.
    pub fn empty() -> Self {
        Self::zeros(0, 0)
    }

    /// `J_n`, the all-ones square matrix.
    pub fn ones(n: usize) -> Self {
        BinaryMatrix {
            rows: n,
            cols: n,
            cells: vec![true; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.put(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values. Any nonzero value counts as 1.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut cells = Vec::with_capacity(nrows * ncols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), ncols, "ragged rows");
            cells.extend(row.iter().map(|&b| b != 0));
        }
        BinaryMatrix {
            rows: nrows,
            cols: ncols,
            cells,
        }
    }

    /// Builds a matrix from 1-based positions of its 1-cells.
    pub fn from_ones(rows: usize, cols: usize, ones: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for &(i, j) in ones {
            m.check_index(i, j)?;
            m.put(i - 1, j - 1, true);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    /// Cell `(i, j)`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        self.at(i - 1, j - 1)
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> bool {
        self.cells[r * self.cols + c]
    }

    fn put(&mut self, r: usize, c: usize, value: bool) {
        self.cells[r * self.cols + c] = value;
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                row: i,
                col: j,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn ones_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    /// 1-based positions of the 1-cells in row-major order.
    pub fn ones_positions(&self) -> Vec<(usize, usize)> {
        self.one_cells().map(|(r, c)| (r + 1, c + 1)).collect()
    }

    /// 0-based positions of the 1-cells in row-major order.
    pub(crate) fn one_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cols = self.cols;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / cols, k % cols))
    }

    /// Row `i` (1-based) as 0/1 values.
    pub fn row(&self, i: usize) -> Vec<u8> {
        assert!((1..=self.rows).contains(&i), "row {i} out of range");
        let start = (i - 1) * self.cols;
        self.cells[start..start + self.cols]
            .iter()
            .map(|&b| b as u8)
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (1..=self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c) in self.one_cells() {
            t.put(c, r, true);
        }
        t
    }

    /// Reverses the order of the rows (reflection across the horizontal axis).
    pub fn flip_rows(&self) -> Self {
        let mut f = Self::zeros(self.rows, self.cols);
        for (r, c) in self.one_cells() {
            f.put(self.rows - 1 - r, c, true);
        }
        f
    }

    /// Reverses the order of the columns.
    pub fn flip_cols(&self) -> Self {
        let mut f = Self::zeros(self.rows, self.cols);
        for (r, c) in self.one_cells() {
            f.put(r, self.cols - 1 - c, true);
        }
        f
    }

    /// Applies row and column permutations: result row `k` is input row
    /// `row_order[k]` (0-based), likewise for columns.
    pub fn permute(&self, row_order: &[usize], col_order: &[usize]) -> Self {
        assert_eq!(row_order.len(), self.rows);
        assert_eq!(col_order.len(), self.cols);
        let mut p = Self::zeros(self.rows, self.cols);
        for (k, &r) in row_order.iter().enumerate() {
            for (l, &c) in col_order.iter().enumerate() {
                p.put(k, l, self.at(r, c));
            }
        }
        p
    }

    /// Deletes row `i` and column `j` (1-based), keeping the order of the rest.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index(i, j)?;
        let (skip_r, skip_c) = (i - 1, j - 1);
        let mut cells = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != skip_r) {
            for c in (0..self.cols).filter(|&c| c != skip_c) {
                cells.push(self.at(r, c));
            }
        }
        Ok(BinaryMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            cells,
        })
    }

    /// Replaces the 1 at `(i, j)` by 0. Fails if the cell already holds 0.
    pub fn zero_entry(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index(i, j)?;
        if !self.at(i - 1, j - 1) {
            return Err(Error::CellAlreadyZero { row: i, col: j });
        }
        let mut m = self.clone();
        m.put(i - 1, j - 1, false);
        Ok(m)
    }

    /// `J - M` for `J` of the same shape: every bit flipped.
    pub fn complement_in_j(&self) -> Self {
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(|&b| !b).collect(),
        }
    }

    /// The block of rows `row_from..=row_to` and columns `col_from..=col_to`
    /// (1-based, inclusive).
    pub fn block(
        &self,
        row_from: usize,
        row_to: usize,
        col_from: usize,
        col_to: usize,
    ) -> Result<Self> {
        self.check_index(row_from, col_from)?;
        self.check_index(row_to, col_to)?;
        let rows: Vec<usize> = (row_from - 1..row_to).collect();
        let cols: Vec<usize> = (col_from - 1..col_to).collect();
        Ok(self.select(&rows, &cols))
    }

    fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut cells = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                cells.push(self.at(r, c));
            }
        }
        BinaryMatrix {
            rows: rows.len(),
            cols: cols.len(),
            cells,
        }
    }

    /// Places `self` and `other` on the diagonal of a larger zero matrix,
    /// making them disjunct.
    pub fn block_diagonal(&self, other: &BinaryMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for (r, c) in self.one_cells() {
            m.put(r, c, true);
        }
        for (r, c) in other.one_cells() {
            m.put(self.rows + r, self.cols + c, true);
        }
        m
    }

    /// Splits the 1-cells into classes linked by sharing a row or a column.
    ///
    /// Each class comes back as the submatrix induced by the rows and
    /// columns it occupies. Classes are ordered by their first cell in
    /// row-major order. An all-zero matrix has no components.
    pub fn disjunct_components(&self) -> Vec<BinaryMatrix> {
        let cells: Vec<(usize, usize)> = self.one_cells().collect();
        let labels = component_labels(&cells);
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|label| {
                let mut rows = Vec::new();
                let mut cols = Vec::new();
                for (&(r, c), _) in cells.iter().zip(&labels).filter(|(_, &l)| l == label) {
                    rows.push(r);
                    cols.push(c);
                }
                rows.sort_unstable();
                rows.dedup();
                cols.sort_unstable();
                cols.dedup();
                self.select(&rows, &cols)
            })
            .collect()
    }

    /// Writes the matrix text format: `R C` then one line of `0`/`1` per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.at(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format, reporting 1-based line/column on error.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
        let header = lines.next().unwrap_or("");
        let (rows, cols) = parse_header(header)?;
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            let line_no = r + 2;
            let line = lines.next().ok_or_else(|| Error::Parse {
                line: line_no,
                column: 1,
                message: format!("expected {rows} matrix rows, found {r}"),
            })?;
            let mut width = 0;
            for (c, ch) in line.chars().enumerate() {
                let bit = match ch {
                    '0' => false,
                    '1' => true,
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            column: c + 1,
                            message: format!("unexpected character {other:?}, expected 0 or 1"),
                        })
                    }
                };
                if c >= cols {
                    return Err(Error::Parse {
                        line: line_no,
                        column: c + 1,
                        message: format!("row longer than {cols} columns"),
                    });
                }
                m.put(r, c, bit);
                width = c + 1;
            }
            if width < cols {
                return Err(Error::Parse {
                    line: line_no,
                    column: width + 1,
                    message: format!("row has {width} columns, expected {cols}"),
                });
            }
        }
        for (k, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: rows + 2 + k,
                    column: 1,
                    message: "unexpected content after the last matrix row".into(),
                });
            }
        }
        Ok(m)
    }
}

fn parse_header(header: &str) -> Result<(usize, usize)> {
    let fields: Vec<(usize, &str)> = header
        .char_indices()
        .filter(|&(k, ch)| !ch.is_whitespace() && (k == 0 || header[..k].ends_with(char::is_whitespace)))
        .map(|(k, _)| {
            let rest = &header[k..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (k, &rest[..end])
        })
        .collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected header \"R C\", found {header:?}"),
        });
    }
    let parse = |(k, s): (usize, &str)| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line: 1,
            column: k + 1,
            message: format!("{s:?} is not a nonnegative decimal integer"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

/// Union-find labels for cells linked through shared rows or columns,
/// numbered by first appearance.
pub(crate) fn component_labels(cells: &[(usize, usize)]) -> Vec<usize> {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    let mut row_owner = std::collections::HashMap::new();
    let mut col_owner = std::collections::HashMap::new();
    for (k, &(r, c)) in cells.iter().enumerate() {
        for owner in [row_owner.entry(r).or_insert(k), col_owner.entry(c).or_insert(k)] {
            let (a, b) = (find(&mut parent, *owner), find(&mut parent, k));
            if a != b {
                parent[b.max(a)] = b.min(a);
            }
        }
    }
    let mut numbering = std::collections::HashMap::new();
    (0..cells.len())
        .map(|k| {
            let root = find(&mut parent, k);
            let next = numbering.len();
            *numbering.entry(root).or_insert(next)
        })
        .collect()
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, " ")?;
            }
            for c in 0..self.cols {
                write!(f, "{}", self.at(r, c) as u8)?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// `J_n - I - P`: zeros at `(i, i)` and `(i, i+1 mod n)`, ones elsewhere.
/// Its permanent is the ménage number `U_n`.
pub fn menage_matrix(n: usize) -> Result<BinaryMatrix> {
    Ok(cycle_plus_identity(n)?.complement_in_j())
}

/// `I_n + P`, where `P` is the permutation matrix of the cycle `(1 2 ... n)`.
pub fn cycle_plus_identity(n: usize) -> Result<BinaryMatrix> {
    if n < 2 {
        return Err(Error::SizeTooSmall { n, min: 2 });
    }
    let mut m = BinaryMatrix::zeros(n, n);
    for i in 0..n {
        m.put(i, i, true);
        m.put(i, (i + 1) % n, true);
    }
    Ok(m)
}

/// The zig-zag `(1,1), (1,2), (2,2), (2,3), ...` truncated to `k` cells,
/// in a `ceil(k/2) x (floor(k/2) + 1)` frame.
pub fn canonical_staircase(k: usize) -> Result<BinaryMatrix> {
    if k < 1 {
        return Err(Error::SizeTooSmall { n: k, min: 1 });
    }
    let mut m = BinaryMatrix::zeros(k.div_ceil(2), k / 2 + 1);
    for step in 0..k {
        m.put(step / 2, step.div_ceil(2), true);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn menage_matrix_small() {
        assert_eq!(
            menage_matrix(3).unwrap().to_rows(),
            vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]
        );
        assert_eq!(menage_matrix(4).unwrap().row(1), vec![0, 0, 1, 1]);
        assert_eq!(menage_matrix(1), Err(Error::SizeTooSmall { n: 1, min: 2 }));
        assert!(cycle_plus_identity(0).is_err());
    }

    #[test]
    fn cycle_plus_identity_small() {
        assert_eq!(
            cycle_plus_identity(3).unwrap().to_rows(),
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]
        );
        for n in 2..=8 {
            assert_eq!(
                cycle_plus_identity(n).unwrap().complement_in_j(),
                menage_matrix(n).unwrap()
            );
        }
    }

    #[test]
    fn one_counts() {
        for n in 2..=12 {
            assert_eq!(menage_matrix(n).unwrap().ones_count(), n * (n - 2));
            // n = 2 folds (i, i+1) onto the same two cells
            if n > 2 {
                assert_eq!(cycle_plus_identity(n).unwrap().ones_count(), 2 * n);
            }
        }
    }

    #[test]
    fn minor_basics() {
        let m = menage_matrix(3).unwrap().minor(1, 3).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1, 0], vec![0, 1]]);
        let one = BinaryMatrix::from_rows(&[[1u8]]);
        assert_eq!(one.minor(1, 1).unwrap(), BinaryMatrix::empty());
        assert!(matches!(one.minor(2, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(one.minor(1, 0).is_err());
    }

    #[test]
    fn zero_entry_basics() {
        let one = BinaryMatrix::from_rows(&[[1u8]]);
        let z = one.zero_entry(1, 1).unwrap();
        assert_eq!(z.to_rows(), vec![vec![0]]);
        assert_eq!(z.zero_entry(1, 1), Err(Error::CellAlreadyZero { row: 1, col: 1 }));
        let m = cycle_plus_identity(6).unwrap();
        assert_eq!(m.zero_entry(6, 1).unwrap().ones_count(), m.ones_count() - 1);
    }

    #[test]
    fn complement_basics() {
        let z = BinaryMatrix::zeros(2, 3);
        assert_eq!(z.complement_in_j().to_rows(), vec![vec![1; 3]; 2]);
        let m = menage_matrix(5).unwrap();
        assert_eq!(m.complement_in_j().complement_in_j(), m);
        assert_eq!(
            m.minor(1, 3).unwrap().complement_in_j(),
            cycle_plus_identity(5).unwrap().minor(1, 3).unwrap()
        );
    }

    #[test]
    fn staircase_shapes() {
        assert_eq!(canonical_staircase(1).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(
            canonical_staircase(5).unwrap().to_rows(),
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]
        );
        assert_eq!(
            canonical_staircase(6).unwrap().to_rows(),
            vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]
        );
        assert!(canonical_staircase(0).is_err());
        for k in 1..=12 {
            let s = canonical_staircase(k).unwrap();
            assert_eq!(s.ones_count(), k);
            assert_eq!((s.rows(), s.cols()), (k.div_ceil(2), k / 2 + 1));
            assert_eq!(s.disjunct_components().len(), 1);
        }
    }

    #[test]
    fn components_of_identity() {
        let parts = BinaryMatrix::identity(3).disjunct_components();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.to_rows() == vec![vec![1]]));
        assert!(BinaryMatrix::zeros(3, 4).disjunct_components().is_empty());
        assert!(BinaryMatrix::empty().disjunct_components().is_empty());
    }

    #[test]
    fn components_follow_first_occurrence() {
        let m = BinaryMatrix::from_rows(&[[0u8, 0, 1], [1, 1, 0], [0, 0, 1]]);
        let parts = m.disjunct_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].to_rows(), vec![vec![1], vec![1]]);
        assert_eq!(parts[1].to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn text_round_trip() {
        let m = canonical_staircase(5).unwrap();
        let text = m.to_text();
        assert_eq!(text, "3 3\n110\n011\n001\n");
        assert_eq!(text.parse::<BinaryMatrix>().unwrap(), m);
        assert_eq!(text.trim_end().parse::<BinaryMatrix>().unwrap(), m);
        assert_eq!("0 0".parse::<BinaryMatrix>().unwrap(), BinaryMatrix::empty());
    }

    #[test]
    fn text_diagnostics() {
        let err = |s: &str| match BinaryMatrix::parse_text(s) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("2 x\n"), (1, 3));
        assert_eq!(err("2\n"), (1, 1));
        assert_eq!(err("2 2\n10\n1a\n"), (3, 2));
        assert_eq!(err("2 2\n10\n1\n"), (3, 2));
        assert_eq!(err("2 2\n10\n101\n"), (3, 3));
        assert_eq!(err("2 2\n10\n"), (3, 1));
        assert_eq!(err("1 1\n1\n0\n"), (3, 1));
    }
}
