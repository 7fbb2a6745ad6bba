//! Minors of a square matrix extended by recursively generated columns.
//!
//! Given an `n x n` matrix `A = (A_1 | ... | A_n)` and a coefficient scheme
//! `P`, the columns `A_{n+j} = sum_{i < n+j} p(i,j) A_i` for `j = 1..r` are
//! appended. Deleting `r` columns `j_1 < ... < j_r < n + r` leaves an order-`n`
//! minor equal to `sgn * det Q * det A`, where `Q` collects rows `j_1..j_r` of
//! `P` and `sgn = (-1)^(n r + sum j_i + r(r-1)/2)`.

use crate::error::{check_index, Error, Result};
use crate::exact::{delete_rows_cols, det_oracle, RationalMatrix, Scalar, VerificationReport};

/// The `(n + r - 1) x r` coefficient array `P`.
///
/// Only the free part of each column is stored: column `j` holds rows
/// `1..=n+j-1`. Row `n + j` of column `j` is always `-1` and rows below it are
/// zero, so an invalid scheme cannot be represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientScheme {
    n: usize,
    columns: Vec<Vec<Scalar>>,
}

impl CoefficientScheme {
    /// `columns[j-1]` must have exactly `n + j - 1` entries.
    pub fn new(n: usize, columns: Vec<Vec<Scalar>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("base order n must be positive".into()));
        }
        for (k, col) in columns.iter().enumerate() {
            let want = n + k;
            if col.len() != want {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient column {} needs {want} entries, got {}",
                    k + 1,
                    col.len()
                )));
            }
        }
        Ok(CoefficientScheme { n, columns })
    }

    /// Reads the free part of a full `(n + r - 1) x r` array; entries at or
    /// below the `-1` position of each column are ignored.
    pub fn from_matrix(n: usize, p: &RationalMatrix) -> Result<Self> {
        let r = p.cols();
        if n == 0 || p.rows() != n + r - 1 {
            return Err(Error::DimensionMismatch(format!(
                "coefficient array must be {}x{r} for n = {n}, got {}x{}",
                (n + r).saturating_sub(1),
                p.rows(),
                p.cols()
            )));
        }
        let columns = (1..=r)
            .map(|j| (1..n + j).map(|i| p.get(i, j).expect("in range").clone()).collect())
            .collect();
        Self::new(n, columns)
    }

    /// Scheme whose column `j` is `f(i, j)` on its free rows.
    pub fn from_fn(n: usize, r: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<Self> {
        let columns = (1..=r).map(|j| (1..n + j).map(|i| f(i, j)).collect()).collect();
        Self::new(n, columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.columns.len()
    }

    /// Row count `n + r - 1` of the full array.
    pub fn height(&self) -> usize {
        self.n + self.r() - 1
    }

    /// `p(i, j)` with the `-1` / `0` convention applied, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<Scalar> {
        check_index(i, self.height())?;
        check_index(j, self.r())?;
        let free = &self.columns[j - 1];
        Ok(if i <= free.len() {
            free[i - 1].clone()
        } else if i == self.n + j {
            -Scalar::one()
        } else {
            Scalar::zero()
        })
    }

    pub fn free_column(&self, j: usize) -> Option<&[Scalar]> {
        self.columns.get(j.wrapping_sub(1)).map(Vec::as_slice)
    }

    /// The full array with the convention materialized.
    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.height(), self.r(), |i, j| {
            self.entry(i, j).expect("in range")
        })
    }
}

/// `A` together with the generated columns `A_{n+1}..A_{n+r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedMatrix {
    base: RationalMatrix,
    generated: Vec<Vec<Scalar>>,
}

impl ExtendedMatrix {
    pub fn base(&self) -> &RationalMatrix {
        &self.base
    }

    pub fn generated(&self) -> &[Vec<Scalar>] {
        &self.generated
    }

    pub fn n(&self) -> usize {
        self.base.rows()
    }

    pub fn r(&self) -> usize {
        self.generated.len()
    }

    /// Column `c` (1-based) of `[A | A_{n+1} | ... | A_{n+r}]`.
    pub fn column(&self, c: usize) -> Option<Vec<Scalar>> {
        let n = self.n();
        if c <= n {
            self.base.column(c)
        } else {
            self.generated.get(c - n - 1).cloned()
        }
    }

    /// The `n x (n + r)` block matrix.
    pub fn full(&self) -> RationalMatrix {
        let n = self.n();
        RationalMatrix::from_fn(n, n + self.r(), |i, j| {
            if j <= n {
                self.base.get(i, j).expect("in range").clone()
            } else {
                self.generated[j - n - 1][i - 1].clone()
            }
        })
    }
}

pub fn build_extended(a: &RationalMatrix, p: &CoefficientScheme) -> Result<ExtendedMatrix> {
    let n = p.n();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "base matrix must be {n}x{n}, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let mut columns: Vec<Vec<Scalar>> = (1..=n).map(|j| a.column(j).expect("in range")).collect();
    for coeffs in &p.columns {
        let mut next = vec![Scalar::zero(); n];
        for (coef, col) in coeffs.iter().zip(&columns) {
            if coef.is_zero() {
                continue;
            }
            for (acc, x) in next.iter_mut().zip(col) {
                *acc += coef * x;
            }
        }
        columns.push(next);
    }
    let generated = columns.split_off(n);
    Ok(ExtendedMatrix {
        base: a.clone(),
        generated,
    })
}

/// Checks `1 <= j_1 < ... < j_r < n + r` with exactly `r` entries.
pub fn validate_deletion(n: usize, r: usize, deleted: &[usize]) -> Result<()> {
    if deleted.len() != r {
        return Err(Error::BadDeletionList(format!(
            "expected {r} indices, got {}",
            deleted.len()
        )));
    }
    if let Some(w) = deleted.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::BadDeletionList(format!(
            "indices must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    if let Some(&j) = deleted.iter().find(|&&j| j == 0 || j >= n + r) {
        let why = if j == n + r { "the last column cannot be deleted" } else { "out of range" };
        return Err(Error::BadDeletionList(format!("index {j}: {why}")));
    }
    Ok(())
}

/// `(-1)^(n r + sum j_i + r(r-1)/2)`, evaluated by parity.
pub fn minor_sign(n: usize, r: usize, deleted: &[usize]) -> Result<Scalar> {
    validate_deletion(n, r, deleted)?;
    let parity = (n % 2) * (r % 2)
        + deleted.iter().map(|j| j % 2).sum::<usize>()
        + (r * r.saturating_sub(1) / 2) % 2;
    Ok(Scalar::sign_of_parity(parity))
}

/// The `r x r` submatrix of `P` on rows `rows`, with the `-1` / `0`
/// convention materialized.
pub fn coefficient_minor_q(p: &CoefficientScheme, rows: &[usize]) -> Result<RationalMatrix> {
    validate_deletion(p.n(), p.r(), rows)?;
    let mut entries = Vec::with_capacity(rows.len() * p.r());
    for &i in rows {
        for j in 1..=p.r() {
            entries.push(p.entry(i, j)?);
        }
    }
    RationalMatrix::new(rows.len(), p.r(), entries)
}

/// Right-hand side of the minor identity: `sgn * det Q * det A`.
pub fn minor_via_theorem(
    a: &RationalMatrix,
    p: &CoefficientScheme,
    deleted: &[usize],
) -> Result<Scalar> {
    let sign = minor_sign(p.n(), p.r(), deleted)?;
    let q = coefficient_minor_q(p, deleted)?;
    Ok(sign * det_oracle(&q)? * det_oracle(a)?)
}

/// Compares the physically deleted minor of `[A | generated]` against
/// [`minor_via_theorem`].
pub fn verify_theorem(
    a: &RationalMatrix,
    p: &CoefficientScheme,
    deleted: &[usize],
) -> Result<VerificationReport> {
    validate_deletion(p.n(), p.r(), deleted)?;
    let extended = build_extended(a, p)?;
    let minor = delete_rows_cols(&extended.full(), &[], deleted)?;
    let lhs = det_oracle(&minor)?;
    let rhs = minor_via_theorem(a, p, deleted)?;
    Ok(VerificationReport::new(
        format!(
            "column-recurrence minor: n={}, r={}, deleted columns {:?}: det M = sgn(M) det Q det A",
            p.n(),
            p.r(),
            deleted
        ),
        lhs,
        rhs,
    ))
}
