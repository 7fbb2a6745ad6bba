//! Vandermonde matrices: determinant, closed-form minors and inverse, and the
//! generalized (arbitrary exponent) determinant expressed through the
//! column-recurrence minor identity.
//!
//! The generalized matrix with exponents `k_1 - 1 < ... < k_n - 1` is a minor of
//! `[1 | x | ... | x^(k_n - 1)]`. Columns past the `n`-th satisfy
//! `V_{n+k} = sum_j sigma_j V_{k+j-1}`, so that wide matrix is an extended
//! matrix over the ordinary Vandermonde matrix with `r = k_n - n` generated
//! columns, and the deleted columns are the exponents *not* in the sequence.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_index, Error, Result};
use crate::exact::{det_oracle, RationalMatrix, Scalar};
use crate::seed::{coefficient_minor_q, CoefficientScheme};
use crate::sympoly::{deflate, elementary_all, elementary_of, PointSet, SymCoefficients};

/// Strictly increasing positive integers `k_1 < ... < k_n`; column `j` of the
/// generalized matrix carries the power `k_j - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSequence(Vec<usize>);

impl ExponentSequence {
    pub fn new(ks: Vec<usize>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::BadExponent("exponent sequence is empty".into()));
        }
        if ks[0] == 0 {
            return Err(Error::BadExponent("exponents start at 1".into()));
        }
        if let Some(w) = ks.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::BadExponent(format!(
                "exponents must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(ExponentSequence(ks))
    }

    /// `1, 2, ..., n`: the ordinary Vandermonde matrix.
    pub fn standard(n: usize) -> Self {
        ExponentSequence((1..=n).collect())
    }

    /// `1, 2, ..., n-1, m`.
    pub fn single_gap(n: usize, m: usize) -> Result<Self> {
        let mut ks: Vec<usize> = (1..n).collect();
        ks.push(m);
        Self::new(ks)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("non-empty")
    }

    /// Indices in `1..k_n` that are not exponents; these are the columns
    /// deleted from the wide Vandermonde matrix.
    pub fn complement(&self) -> Vec<usize> {
        let mut it = self.0.iter().peekable();
        (1..self.last())
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }
}

impl FromStr for ExponentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(crate::exact::parse_list(s)?)
    }
}

impl fmt::Display for ExponentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Row `i` is `(1, x_i, ..., x_i^(n-1))`.
pub fn vand_matrix(ps: &PointSet) -> RationalMatrix {
    let n = ps.len();
    RationalMatrix::from_fn(n, n, |i, j| ps.get(i).expect("in range").pow(j - 1))
}

pub(crate) fn vand_det_of(points: &[Scalar]) -> Scalar {
    let mut acc = Scalar::one();
    for j in 1..points.len() {
        for i in 0..j {
            acc *= &points[j] - &points[i];
        }
    }
    acc
}

/// `prod_{i<j} (x_j - x_i)`.
pub fn vand_det(ps: &PointSet) -> Scalar {
    vand_det_of(ps.points())
}

/// Minor of `V` with row `i` and column `j` deleted:
/// `e_{n-j}(x without x_i) * det V(x without x_i)`.
pub fn vand_minor(ps: &PointSet, i: usize, j: usize) -> Result<Scalar> {
    let n = ps.len();
    if n < 2 {
        return Err(Error::DimensionMismatch("minors need at least two points".into()));
    }
    check_index(i, n)?;
    check_index(j, n)?;
    let rest = ps.omit(i)?;
    let e = elementary_of(&rest);
    Ok(&e[n - j] * vand_det_of(&rest))
}

/// `V^{-1}` from `w_ij = (-1)^(n-i) e_{n-i}(x without x_j) / prod_{k != j} (x_j - x_k)`.
///
/// One pass computes `e(all)`; each column then costs O(n) to deflate and
/// O(n) for its denominator, for O(n^2) scalar operations in total.
pub fn vand_inverse(ps: &PointSet) -> Result<RationalMatrix> {
    ps.require_distinct()?;
    let n = ps.len();
    let e_all = elementary_of(ps.points());
    let mut columns = Vec::with_capacity(n);
    for (j, xj) in ps.points().iter().enumerate() {
        let e_omit = deflate(&e_all, xj);
        let denom: Scalar = ps
            .points()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, xk)| xj - xk)
            .product();
        let scale = denom.recip()?;
        let column: Vec<Scalar> = (1..=n)
            .map(|i| Scalar::sign_of_parity(n - i) * &e_omit[n - i] * &scale)
            .collect();
        columns.push(column);
    }
    RationalMatrix::from_columns(n, &columns)
}

fn check_lengths(ps: &PointSet, ks: &ExponentSequence) -> Result<()> {
    if ps.len() != ks.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} points but {} exponents",
            ps.len(),
            ks.len()
        )));
    }
    Ok(())
}

/// Entry `(i, j)` is `x_i^(k_j - 1)`.
pub fn genvand_matrix(ps: &PointSet, ks: &ExponentSequence) -> Result<RationalMatrix> {
    check_lengths(ps, ks)?;
    let n = ps.len();
    let k = ks.as_slice();
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        ps.get(i).expect("in range").pow(k[j - 1] - 1)
    }))
}

/// `(-1)^(n(n-1)/2 + k_1 + ... + k_{n-1})`.
pub fn genvand_sign(n: usize, ks: &ExponentSequence) -> Scalar {
    let head: usize = ks.as_slice()[..ks.len() - 1].iter().map(|k| k % 2).sum();
    Scalar::sign_of_parity((n * n.saturating_sub(1) / 2) % 2 + head)
}

/// Coefficient scheme of the wide Vandermonde matrix: `r = k_n - n` columns,
/// column `k` holding `sigma_1..sigma_n` on rows `k..k+n-1`. The full array
/// is `(k_n - 1) x (k_n - n)`. Returns `None` when `r = 0`.
pub fn genvand_scheme(sym: &SymCoefficients, k_last: usize) -> Result<Option<CoefficientScheme>> {
    let n = sym.n();
    if k_last < n {
        return Err(Error::BadExponent(format!("k_n = {k_last} is smaller than n = {n}")));
    }
    let r = k_last - n;
    if r == 0 {
        return Ok(None);
    }
    CoefficientScheme::from_fn(n, r, |i, k| {
        if i >= k && i < k + n {
            sym.sigma(i - k + 1).clone()
        } else {
            Scalar::zero()
        }
    })
    .map(Some)
}

/// The coefficient minor `Q`: rows of the scheme at the missing exponents.
/// For `r = 0` this is the empty matrix.
pub fn genvand_q(ps: &PointSet, ks: &ExponentSequence) -> Result<RationalMatrix> {
    check_lengths(ps, ks)?;
    let sym = elementary_all(ps);
    match genvand_scheme(&sym, ks.last())? {
        None => Ok(RationalMatrix::zeros(0, 0)),
        Some(p) => coefficient_minor_q(&p, &ks.complement()),
    }
}

/// `det V(k_1..k_n) = sgn * det Q * det V`.
pub fn genvand_det(ps: &PointSet, ks: &ExponentSequence) -> Result<Scalar> {
    let q = genvand_q(ps, ks)?;
    Ok(genvand_sign(ps.len(), ks) * det_oracle(&q)? * vand_det(ps))
}

/// For exponents `1..n-1, m`: the `(m-n) x (m-n)` upper-Hessenberg matrix with
/// `e_1` on the diagonal, `-1` below it and `(-1)^t e_{t+1}` on the `t`-th
/// superdiagonal (zero once `t + 1 > n`).
pub fn single_gap_hessenberg_q(ps: &PointSet, m: usize) -> Result<RationalMatrix> {
    let n = ps.len();
    if m <= n {
        return Err(Error::BadExponent(format!("m = {m} must exceed n = {n}")));
    }
    let e = elementary_of(ps.points());
    let size = m - n;
    Ok(RationalMatrix::from_fn(size, size, |s, t| {
        if s == t + 1 {
            -Scalar::one()
        } else if t >= s && t - s < n {
            Scalar::sign_of_parity(t - s) * &e[t - s + 1]
        } else {
            Scalar::zero()
        }
    }))
}
