use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_index, Error, Result};

use super::Scalar;

/// Dense row-major matrix of exact rationals.
///
/// Public accessors use 1-based indices; row/column counts may be zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    /// Builds a matrix from a generator called with 1-based `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    /// Builds a matrix from row vectors; every row must have the same length.
    pub fn from_rows<R, S>(rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = Vec<S>>,
        S: Into<Scalar>,
    {
        let mut entries = Vec::new();
        let mut count = 0;
        let mut width = None;
        for row in rows {
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::DimensionMismatch(format!(
                        "row {} has {} entries, expected {w}",
                        count + 1,
                        row.len()
                    )))
                }
                Some(_) => {}
            }
            entries.extend(row.into_iter().map(Into::into));
            count += 1;
        }
        Ok(RationalMatrix {
            rows: count,
            cols: width.unwrap_or(0),
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(height: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if let Some((k, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != height) {
            return Err(Error::DimensionMismatch(format!(
                "column {} has {} entries, expected {height}",
                k + 1,
                c.len()
            )));
        }
        Ok(Self::from_fn(height, columns.len(), |i, j| columns[j - 1][i - 1].clone()))
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

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        if i == 0 || j == 0 || i > self.rows || j > self.cols {
            return None;
        }
        Some(&self.entries[(i - 1) * self.cols + (j - 1)])
    }

    pub(crate) fn at0(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> Option<&[Scalar]> {
        if i == 0 || i > self.rows {
            return None;
        }
        Some(&self.entries[(i - 1) * self.cols..i * self.cols])
    }

    /// Column `j` (1-based) as an owned vector.
    pub fn column(&self, j: usize) -> Option<Vec<Scalar>> {
        if j == 0 || j > self.cols {
            return None;
        }
        Some((0..self.rows).map(|i| self.at0(i, j - 1).clone()).collect())
    }

    pub fn row_slices(&self) -> impl Iterator<Item = &[Scalar]> {
        // chunks(0) panics, and a zero-width matrix still has `rows` empty rows
        let width = self.cols;
        (0..self.rows).map(move |i| &self.entries[i * width..(i + 1) * width])
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn transpose(&self) -> RationalMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.at0(j - 1, i - 1).clone())
    }

    /// Returns a copy with rows `a` and `b` (1-based) exchanged.
    pub fn swap_rows(&self, a: usize, b: usize) -> Result<RationalMatrix> {
        check_index(a, self.rows)?;
        check_index(b, self.rows)?;
        let mut out = self.clone();
        for j in 0..self.cols {
            out.entries.swap((a - 1) * self.cols + j, (b - 1) * self.cols + j);
        }
        Ok(out)
    }

    /// Nested rows of rendered entries, the shape used in JSON reports.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.row_slices()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.row_slices().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

fn index_set(indices: &[usize], bound: usize) -> Result<BTreeSet<usize>> {
    indices
        .iter()
        .map(|&i| check_index(i, bound).map(|_| i))
        .collect()
}

/// Removes the listed 1-based rows and columns, keeping the order of the rest.
pub fn delete_rows_cols(
    m: &RationalMatrix,
    delete_rows: &[usize],
    delete_cols: &[usize],
) -> Result<RationalMatrix> {
    let drop_rows = index_set(delete_rows, m.rows)?;
    let drop_cols = index_set(delete_cols, m.cols)?;
    let keep_rows: Vec<usize> = (1..=m.rows).filter(|i| !drop_rows.contains(i)).collect();
    let keep_cols: Vec<usize> = (1..=m.cols).filter(|j| !drop_cols.contains(j)).collect();
    Ok(RationalMatrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
        m.at0(keep_rows[i - 1] - 1, keep_cols[j - 1] - 1).clone()
    }))
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(RationalMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols)
            .filter(|&k| !a.at0(i - 1, k).is_zero())
            .map(|k| a.at0(i - 1, k) * b.at0(k, j - 1))
            .sum()
    }))
}
