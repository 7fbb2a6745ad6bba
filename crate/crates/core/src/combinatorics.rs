//! Recovering the coefficients `g(n, i)` of a triangular recurrence
//! `f(n+1, k+1) = sum_{i=0}^n g(n, i) f(i, k)` from determinants of
//! upper-Hessenberg matrices built out of `f`.
//!
//! With `A` the upper-triangular matrix `a_{ik} = f(k, i)` and
//! `A_{n+1} = (f(n+1,1), ..., f(n+1,n+1))^T`, deleting column `j - 1` of
//! `[A | A_{n+1}]` leaves a block-triangular matrix whose lower block is the
//! Hessenberg matrix returned by [`hessenberg_a22`]. Solving for `g` gives
//!
//! ```text
//! g(n, j-1) = (-1)^(n-j+1) det(A22) / prod_{t=j-1}^{n} f(t, t)
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_index, Error, Result};
use crate::exact::{det_oracle, RationalMatrix, Scalar, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Binomial,
    /// Permutations of `n` with `k` cycles.
    Stirling1Unsigned,
    /// `(-1)^(n-k)` times the unsigned numbers.
    Stirling1Signed,
    /// Partitions of an `n`-set into `k` blocks.
    Stirling2,
    Custom,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleKind::Binomial => "binomial",
            TriangleKind::Stirling1Unsigned => "stirling1",
            TriangleKind::Stirling1Signed => "stirling1-signed",
            TriangleKind::Stirling2 => "stirling2",
            TriangleKind::Custom => "custom",
        })
    }
}

/// Lower-triangular table `f(i, k)`, `0 <= k <= i <= N`; `f(i, k) = 0` for
/// `k > i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<BigInt>>,
}

impl TriangleTable {
    /// Builds a custom table; row `i` must have `i + 1` entries.
    pub fn custom(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(i, r)| r.len() != i + 1) {
            return Err(Error::DimensionMismatch(format!(
                "triangle row {i} needs {} entries, got {}",
                i + 1,
                r.len()
            )));
        }
        Ok(TriangleTable {
            kind: TriangleKind::Custom,
            rows,
        })
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Largest row index `N`.
    pub fn max_row(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn row(&self, i: usize) -> Option<&[BigInt]> {
        self.rows.get(i).map(Vec::as_slice)
    }

    /// `f(i, k)`; zero above the diagonal.
    ///
    /// Panics if `i` exceeds the table.
    pub fn f(&self, i: usize, k: usize) -> BigInt {
        if k > i {
            BigInt::zero()
        } else {
            self.rows[i][k].clone()
        }
    }

    fn f_scalar(&self, i: usize, k: usize) -> Scalar {
        Scalar::from(self.f(i, k))
    }

    fn require_rows(&self, upto: usize) -> Result<()> {
        if self.rows.len() <= upto {
            return Err(Error::IndexOutOfRange {
                index: upto,
                bound: self.max_row(),
            });
        }
        Ok(())
    }
}

/// Rows `0..=max_row` of the requested kind, from the additive recurrences.
pub fn triangle(kind: TriangleKind, max_row: usize) -> TriangleTable {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 0..max_row {
        let prev = &rows[n];
        let at = |k: usize| -> BigInt { prev.get(k).cloned().unwrap_or_default() };
        let below = |k: usize| -> BigInt { if k == 0 { BigInt::zero() } else { at(k - 1) } };
        let next: Vec<BigInt> = (0..=n + 1)
            .map(|k| match kind {
                TriangleKind::Binomial => below(k) + at(k),
                TriangleKind::Stirling1Unsigned => below(k) + BigInt::from(n) * at(k),
                TriangleKind::Stirling1Signed => below(k) - BigInt::from(n) * at(k),
                TriangleKind::Stirling2 => below(k) + BigInt::from(k) * at(k),
                TriangleKind::Custom => BigInt::zero(),
            })
            .collect();
        rows.push(next);
    }
    TriangleTable { kind, rows }
}

/// The order `n - j + 2` upper-Hessenberg block: rows `j-1..=n`, columns
/// `f(t, .)` for `t = j..=n`, then the last column `f(n+1, j..=n+1)`.
pub fn hessenberg_a22(t: &TriangleTable, n: usize, j: usize) -> Result<RationalMatrix> {
    check_index(j, n + 1)?;
    t.require_rows(n + 1)?;
    let size = n + 2 - j;
    Ok(RationalMatrix::from_fn(size, size, |row, col| {
        let i = j + row - 2;
        if col < size {
            t.f_scalar(j - 1 + col, i)
        } else {
            t.f_scalar(n + 1, i + 1)
        }
    }))
}

/// `g(n, j-1)` from the determinant of [`hessenberg_a22`].
pub fn recover_g(t: &TriangleTable, n: usize, j: usize) -> Result<Scalar> {
    let h = hessenberg_a22(t, n, j)?;
    // every diagonal entry must be nonzero for A to be invertible
    if let Some(z) = (0..=n).find(|&i| t.f(i, i).is_zero()) {
        return Err(Error::ZeroDiagonal(z));
    }
    let diag: Scalar = (j - 1..=n).map(|i| t.f_scalar(i, i)).product();
    let signed = Scalar::sign_of_parity(n + 1 - j) * det_oracle(&h)?;
    signed.checked_div(&diag)
}

/// `g(n, 0..=n)` for one row of the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCoefficients {
    pub n: usize,
    pub g: Vec<Scalar>,
}

impl GCoefficients {
    pub fn recover(t: &TriangleTable, n: usize) -> Result<Self> {
        let g = (1..=n + 1).map(|j| recover_g(t, n, j)).collect::<Result<_>>()?;
        Ok(GCoefficients { n, g })
    }

    /// Checks `f(n+1, k+1) = sum_i g(n, i) f(i, k)` for every `k <= n` by
    /// direct summation.
    pub fn satisfies_recurrence(&self, t: &TriangleTable) -> bool {
        (0..=self.n).all(|k| {
            let sum: Scalar = (0..=self.n).map(|i| &self.g[i] * t.f_scalar(i, k)).sum();
            sum == t.f_scalar(self.n + 1, k + 1)
        })
    }
}

/// The three families with a closed-form `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Prop21Kind {
    Binomial,
    /// Unsigned Stirling numbers of the first kind.
    Stirling1,
    Stirling2,
}

impl Prop21Kind {
    pub const ALL: [Prop21Kind; 3] = [Prop21Kind::Binomial, Prop21Kind::Stirling1, Prop21Kind::Stirling2];

    pub fn triangle_kind(self) -> TriangleKind {
        match self {
            Prop21Kind::Binomial => TriangleKind::Binomial,
            Prop21Kind::Stirling1 => TriangleKind::Stirling1Unsigned,
            Prop21Kind::Stirling2 => TriangleKind::Stirling2,
        }
    }

    /// Closed form of `g(n, i)`: `1`, `n!/i!` and `C(n, i)`.
    pub fn g_closed_form(self, n: usize, i: usize) -> Scalar {
        match self {
            Prop21Kind::Binomial => Scalar::one(),
            Prop21Kind::Stirling1 => Scalar::from(falling(n, n - i)),
            Prop21Kind::Stirling2 => Scalar::from(binomial(n, i)),
        }
    }

    fn printed_lhs(self, n: usize, j: usize) -> Scalar {
        match self {
            Prop21Kind::Binomial => Scalar::one(),
            Prop21Kind::Stirling1 => Scalar::from(falling(n, n + 1 - j)),
            Prop21Kind::Stirling2 => Scalar::from(binomial(n, j - 1)),
        }
    }

    fn printed_sign_exponent(self, n: usize, j: usize) -> (usize, &'static str) {
        match self {
            Prop21Kind::Stirling1 => (0, "1"),
            _ => (n + 1 - j, "(-1)^(n-j+1)"),
        }
    }
}

impl fmt::Display for Prop21Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.triangle_kind(), f)
    }
}

impl FromStr for Prop21Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binomial" => Ok(Prop21Kind::Binomial),
            "stirling1" => Ok(Prop21Kind::Stirling1),
            "stirling2" => Ok(Prop21Kind::Stirling2),
            other => Err(Error::Parse(format!("unknown identity family {other:?}"))),
        }
    }
}

/// `n (n-1) ... (n-len+1)`.
fn falling(n: usize, len: usize) -> BigInt {
    (n + 1 - len..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// The displayed Hessenberg identity for one `(n, j)`, `1 <= j <= n`.
///
/// The displayed matrix has order `n - j + 1`: it is [`hessenberg_a22`] at
/// row `n - 1`. The verdict in the report uses the sign `(-1)^(n-j)` and the
/// closed form `g(n-1, j-1)`; the description also records whether the
/// printed sign and closed form (`1`, `n!/(j-1)!`, `C(n, j-1)`) agree.
pub fn check_prop21(kind: Prop21Kind, n: usize, j: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 0 });
    }
    check_index(j, n)?;
    let table = triangle(kind.triangle_kind(), n);
    let h = hessenberg_a22(&table, n - 1, j)?;
    let det = det_oracle(&h)?;

    let lhs = kind.g_closed_form(n - 1, j - 1);
    let rhs = Scalar::sign_of_parity(n - j) * &det;

    let printed_lhs = kind.printed_lhs(n, j);
    let (printed_exp, printed_sign) = kind.printed_sign_exponent(n, j);
    let printed_rhs = Scalar::sign_of_parity(printed_exp) * &det;
    let printed_verdict = if printed_lhs == printed_rhs { "holds" } else { "fails" };

    let lhs_name = match kind {
        Prop21Kind::Binomial => "1",
        Prop21Kind::Stirling1 => "(n-1)!/(j-1)!",
        Prop21Kind::Stirling2 => "C(n-1,j-1)",
    };
    let printed_name = match kind {
        Prop21Kind::Binomial => "1",
        Prop21Kind::Stirling1 => "n!/(j-1)!",
        Prop21Kind::Stirling2 => "C(n,j-1)",
    };
    let corrected_verdict = if lhs == rhs { "holds" } else { "fails" };
    let description = format!(
        "{kind} n={n} j={j}: det H = {det} (order {}); corrected {lhs_name} = (-1)^(n-j) det H {corrected_verdict} ({lhs} vs {rhs}); as printed {printed_name} = {printed_sign} det H {printed_verdict} ({printed_lhs} vs {printed_rhs})",
        h.rows(),
    );
    Ok(VerificationReport::new(description, lhs, rhs))
}
