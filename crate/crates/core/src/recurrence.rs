//! Homogeneous linear recurrences of order `n` on column vectors, and the
//! n-step Fibonacci block determinant.
//!
//! Row `i` of the initial matrix `A` holds the first `n` terms of sequence `i`;
//! terms are indexed from 1, so column `k` of the extended matrix holds term
//! `k` of every sequence.

use crate::error::{Error, Result};
use crate::exact::{det_oracle, RationalMatrix, Scalar, VerificationReport};
use crate::seed::{build_extended, CoefficientScheme, ExtendedMatrix};

/// A coefficient scheme restricted to `p(i, j) = 0` for `i < j`, so column
/// `n + j` depends only on columns `j..n+j-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    scheme: CoefficientScheme,
}

impl RecurrenceSpec {
    pub fn new(scheme: CoefficientScheme) -> Result<Self> {
        for j in 1..=scheme.r() {
            let col = scheme.free_column(j).expect("in range");
            if let Some(i) = col[..j - 1].iter().position(|x| !x.is_zero()) {
                return Err(Error::PatternViolation { row: i + 1, col: j });
            }
        }
        Ok(RecurrenceSpec { scheme })
    }

    /// The same `n` coefficients for every generated term:
    /// `A_{n+j} = sum_{t=1}^{n} c_t A_{j+t-1}`.
    pub fn constant(coeffs: &[Scalar], horizon: usize) -> Result<Self> {
        let n = coeffs.len();
        let scheme = CoefficientScheme::from_fn(n, horizon, |i, j| {
            if i >= j {
                coeffs[i - j].clone()
            } else {
                Scalar::zero()
            }
        })?;
        Self::new(scheme)
    }

    /// Every term is the sum of the `n` before it.
    pub fn fibonacci(n: usize, horizon: usize) -> Result<Self> {
        Self::constant(&vec![Scalar::one(); n], horizon)
    }

    pub fn scheme(&self) -> &CoefficientScheme {
        &self.scheme
    }

    pub fn n(&self) -> usize {
        self.scheme.n()
    }

    pub fn horizon(&self) -> usize {
        self.scheme.r()
    }
}

pub fn generate_recurrence(spec: &RecurrenceSpec, a: &RationalMatrix) -> Result<ExtendedMatrix> {
    let ext = build_extended(a, spec.scheme())?;
    debug_assert!(window_property_holds(spec, &ext));
    Ok(ext)
}

// Recomputes each generated column from its n-column window only.
fn window_property_holds(spec: &RecurrenceSpec, ext: &ExtendedMatrix) -> bool {
    let n = spec.n();
    (1..=spec.horizon()).all(|j| {
        let coeffs = spec.scheme().free_column(j).expect("in range");
        let mut acc = vec![Scalar::zero(); n];
        for c in j..n + j {
            let col = ext.column(c).expect("in range");
            for (a, x) in acc.iter_mut().zip(&col) {
                *a += &coeffs[c - 1] * x;
            }
        }
        ext.column(n + j).as_deref() == Some(acc.as_slice())
    })
}

/// Terms `F^{(n,i)}_k`, `k = 1..=2n`, of `n` sequences sharing the n-step
/// rule; sequence `i` starts from row `i` of `init`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSequenceSet {
    pub n: usize,
    pub init: RationalMatrix,
    /// `terms[i-1][k-1] = F^{(n,i)}_k`.
    pub terms: Vec<Vec<Scalar>>,
}

impl StepSequenceSet {
    pub fn new(init: &RationalMatrix) -> Result<Self> {
        let n = square_order(init)?;
        let ext = generate_recurrence(&RecurrenceSpec::fibonacci(n, n)?, init)?;
        let full = ext.full();
        let terms = full.row_slices().map(<[Scalar]>::to_vec).collect();
        Ok(StepSequenceSet {
            n,
            init: init.clone(),
            terms,
        })
    }

    /// `F^{(n,i)}_k`, both 1-based.
    pub fn term(&self, i: usize, k: usize) -> Option<&Scalar> {
        self.terms.get(i.wrapping_sub(1))?.get(k.wrapping_sub(1))
    }
}

fn square_order(a: &RationalMatrix) -> Result<usize> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "initial block must be square and non-empty, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

/// Entry `(i, j)` is `F^{(n,i)}_{n+j}`.
pub fn fib_step_block(a: &RationalMatrix) -> Result<RationalMatrix> {
    let set = StepSequenceSet::new(a)?;
    let n = set.n;
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        set.term(i, n + j).expect("in range").clone()
    }))
}

/// `det(F^{(n,i)}_{n+j}) = det A`.
pub fn fib_block_det_check(a: &RationalMatrix) -> Result<VerificationReport> {
    let n = square_order(a)?;
    let lhs = det_oracle(&fib_step_block(a)?)?;
    let rhs = det_oracle(a)?;
    Ok(VerificationReport::new(
        format!("{n}-step Fibonacci block: det(F_(n+1..2n)) = det A"),
        lhs,
        rhs,
    ))
}
