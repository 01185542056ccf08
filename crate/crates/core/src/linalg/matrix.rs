use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense matrix of unbounded signed integers with optional row/column labels.
///
/// Entries are stored row-major. Zero rows and/or zero columns are legal;
/// the Toeplitz case (`V = ∅`) produces `n×0` and `0×n` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
            row_labels: None,
            col_labels: None,
        }
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_rows<I: Into<BigInt> + Clone>(rows: &[Vec<I>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix literal"
        );
        IntMatrix::from_fn(rows.len(), ncols, |r, c| rows[r][c].clone().into())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), self.rows, "row label count mismatch");
        assert_eq!(col_labels.len(), self.cols, "column label count mismatch");
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        self
    }

    /// Drops labels, keeping only the numeric content.
    pub fn unlabeled(mut self) -> Self {
        self.row_labels = None;
        self.col_labels = None;
        self
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone());
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        IntMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).map(|k| &self[(r, k)] * &rhs[(k, c)]).sum()
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self[(r, c)].is_one()
                    } else {
                        self[(r, c)].is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Multiplies the given column vector, returning `self · x`.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| &self[(r, c)] * &x[c]).sum())
            .collect()
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
        if let Some(labels) = self.row_labels.as_mut() {
            labels.swap(i, j);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
        if let Some(labels) = self.col_labels.as_mut() {
            labels.swap(i, j);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, c)]);
            self[(i, c)] = v;
        }
    }

    /// `row_i += q · row_k`
    pub fn add_multiple_of_row(&mut self, i: usize, k: usize, q: &BigInt) {
        assert_ne!(i, k);
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * &self[(k, c)];
            self[(i, c)] += delta;
        }
    }

    /// `col_j += q · col_k`
    pub fn add_multiple_of_col(&mut self, j: usize, k: usize, q: &BigInt) {
        assert_ne!(j, k);
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let delta = q * &self[(r, k)];
            self[(r, j)] += delta;
        }
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self[(row_idx[r], col_idx[c])].clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// The determinant of the empty `0×0` matrix is 1, so unimodularity of
    /// empty transform matrices comes out right.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| self[(r, c)].clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact division in Bareiss
                }
            }
            prev = a[k][k].clone();
        }
        let det = std::mem::take(&mut a[n - 1][n - 1]);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)].to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        for (r, row) in cells.iter().enumerate() {
            write!(f, "[")?;
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}", width = widths[c])?;
            }
            write!(f, "]")?;
            if r + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
