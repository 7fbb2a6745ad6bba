//! Seeded random instances and identity-checking suites.
//!
//! Trial `t` of a run with seed `s` draws from a ChaCha stream keyed by
//! `(s, t)`, so trials are independent of each other and of evaluation order.
//! Suites run in parallel and results are gathered in trial order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{check_prop21, Prop21Kind};
use crate::error::{Error, Result};
use crate::exact::{delete_rows_cols, det_oracle, mat_mul, RationalMatrix, Scalar, VerificationReport};
use crate::recurrence::fib_block_det_check;
use crate::seed::{minor_sign, verify_theorem, CoefficientScheme};
use crate::sympoly::{power_sum_direct, power_sum_recurrence, reduce_power, PointSet};
use crate::vandermonde::{
    genvand_det, genvand_matrix, genvand_sign, single_gap_hessenberg_q, vand_det, vand_inverse,
    vand_matrix, vand_minor, ExponentSequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    SeedTheorem,
    Vandermonde,
    Genvand,
    PowerSum,
    Prop21,
    FibStep,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::SeedTheorem,
        Suite::Vandermonde,
        Suite::Genvand,
        Suite::PowerSum,
        Suite::Prop21,
        Suite::FibStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SeedTheorem => "seed-theorem",
            Suite::Vandermonde => "vandermonde",
            Suite::Genvand => "genvand",
            Suite::PowerSum => "powersum",
            Suite::Prop21 => "prop21",
            Suite::FibStep => "fib-step",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| Scalar::from(rng.gen_range(-bound..=bound)))
}

/// A random instance of the column-recurrence minor identity: `n x n` base,
/// `r` generated columns, entries in `[-bound, bound]` and a uniformly chosen
/// valid deletion list.
pub fn random_theorem_instance<R: Rng>(
    rng: &mut R,
    n: usize,
    r: usize,
    bound: i64,
) -> (RationalMatrix, CoefficientScheme, Vec<usize>) {
    let a = random_int_matrix(rng, n, n, bound);
    let p = CoefficientScheme::from_fn(n, r, |_, _| Scalar::from(rng.gen_range(-bound..=bound)))
        .expect("n >= 1");
    let candidates: Vec<usize> = (1..n + r).collect();
    let mut deleted: Vec<usize> = candidates.choose_multiple(rng, r).copied().collect();
    deleted.sort_unstable();
    (a, p, deleted)
}

/// `n` distinct integers drawn from `[-bound, bound]` in random order.
pub fn random_distinct_points<R: Rng>(rng: &mut R, n: usize, bound: i64) -> PointSet {
    let pool: Vec<i64> = (-bound..=bound).collect();
    let picked: Vec<i64> = pool.choose_multiple(rng, n).copied().collect();
    PointSet::from_integers(&picked).expect("n >= 1")
}

/// `n` rationals `p/q` with `|p| <= bound`, `1 <= q <= 4`; repeats allowed.
pub fn random_rational_points<R: Rng>(rng: &mut R, n: usize, bound: i64) -> PointSet {
    let pts = (0..n)
        .map(|_| {
            let p = rng.gen_range(-bound..=bound);
            let q = rng.gen_range(1..=4i64);
            Scalar::new(p.into(), q.into()).expect("q >= 1")
        })
        .collect();
    PointSet::new(pts).expect("n >= 1")
}

/// `n` strictly increasing exponents with `n <= k_n <= max_last`.
pub fn random_exponents<R: Rng>(rng: &mut R, n: usize, max_last: usize) -> ExponentSequence {
    let pool: Vec<usize> = (1..=max_last.max(n)).collect();
    let mut ks: Vec<usize> = pool.choose_multiple(rng, n).copied().collect();
    ks.sort_unstable();
    ExponentSequence::new(ks).expect("distinct and positive")
}

/// Checks that `V W = W V = I` entrywise; the report compares the number of
/// mismatching entries against zero.
pub fn check_vand_inverse(ps: &PointSet) -> Result<VerificationReport> {
    let v = vand_matrix(ps);
    let w = vand_inverse(ps)?;
    let id = RationalMatrix::identity(ps.len());
    let count = |m: &RationalMatrix| {
        m.entries()
            .iter()
            .zip(id.entries())
            .filter(|(x, y)| x != y)
            .count()
    };
    let mismatches = count(&mat_mul(&v, &w)?) + count(&mat_mul(&w, &v)?);
    Ok(VerificationReport::new(
        format!("Vandermonde inverse, n={}: entries of VW and WV differing from I", ps.len()),
        Scalar::from(mismatches),
        Scalar::zero(),
    ))
}

pub fn check_vand_minor(ps: &PointSet, i: usize, j: usize) -> Result<VerificationReport> {
    let sub = delete_rows_cols(&vand_matrix(ps), &[i], &[j])?;
    Ok(VerificationReport::new(
        format!("Vandermonde minor M_({i},{j}) = e_(n-j)(x without x_i) det V(x without x_i)"),
        det_oracle(&sub)?,
        vand_minor(ps, i, j)?,
    ))
}

pub fn check_genvand(ps: &PointSet, ks: &ExponentSequence) -> Result<VerificationReport> {
    Ok(VerificationReport::new(
        format!("generalized Vandermonde, exponents {ks}: det = sgn det Q det V"),
        det_oracle(&genvand_matrix(ps, ks)?)?,
        genvand_det(ps, ks)?,
    ))
}

pub fn check_genvand_sign(n: usize, ks: &ExponentSequence) -> Result<VerificationReport> {
    let complement = ks.complement();
    Ok(VerificationReport::new(
        format!("generalized Vandermonde sign, exponents {ks}: closed-form parity vs deleted-column parity {complement:?}"),
        minor_sign(n, ks.last() - n, &complement)?,
        genvand_sign(n, ks),
    ))
}

pub fn check_single_gap(ps: &PointSet, m: usize) -> Result<VerificationReport> {
    let ks = ExponentSequence::single_gap(ps.len(), m)?;
    Ok(VerificationReport::new(
        format!("single-gap Hessenberg, m={m}: det V(1..n-1,m) = det H det V"),
        det_oracle(&genvand_matrix(ps, &ks)?)?,
        det_oracle(&single_gap_hessenberg_q(ps, m)?)? * vand_det(ps),
    ))
}

pub fn check_power_sum(ps: &PointSet, k: usize) -> VerificationReport {
    VerificationReport::new(
        format!("power sum s_{k}: direct vs recurrence"),
        power_sum_direct(ps, k),
        power_sum_recurrence(ps, k),
    )
}

fn run_trial<R: Rng>(suite: Suite, rng: &mut R, max_n: usize) -> Result<Vec<VerificationReport>> {
    let n = rng.gen_range(1..=max_n);
    let reports = match suite {
        Suite::SeedTheorem => {
            let r = rng.gen_range(1..=4);
            let (a, p, deleted) = random_theorem_instance(rng, n, r, 9);
            vec![verify_theorem(&a, &p, &deleted)?]
        }
        Suite::Vandermonde => {
            let bound = (3 * n) as i64;
            let ps = random_distinct_points(rng, n, bound);
            let mut out = vec![
                check_vand_inverse(&ps)?,
                VerificationReport::new(
                    "Vandermonde determinant: oracle vs product formula",
                    det_oracle(&vand_matrix(&ps))?,
                    vand_det(&ps),
                ),
            ];
            if n >= 2 {
                let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                out.push(check_vand_minor(&ps, i, j)?);
            }
            out
        }
        Suite::Genvand => {
            let ps = random_rational_points(rng, n, 5);
            let ks = random_exponents(rng, n, n + 7);
            let gap = rng.gen_range(1..=6);
            vec![
                check_genvand(&ps, &ks)?,
                check_genvand_sign(n, &ks)?,
                check_single_gap(&ps, n + gap)?,
            ]
        }
        Suite::PowerSum => {
            let ps = random_rational_points(rng, n, 6);
            let k = rng.gen_range(0..=20);
            let m = rng.gen_range(1..=n);
            vec![check_power_sum(&ps, k), reduce_power(&ps, m)?]
        }
        Suite::Prop21 => {
            let kind = *Prop21Kind::ALL.choose(rng).expect("non-empty");
            let j = rng.gen_range(1..=n);
            vec![check_prop21(kind, n, j)?]
        }
        Suite::FibStep => {
            let mut a = random_int_matrix(rng, n, n, 9);
            if n >= 2 && rng.gen_bool(0.25) {
                // force a singular block by repeating the first row
                let mut rows: Vec<Vec<Scalar>> = a.row_slices().map(<[Scalar]>::to_vec).collect();
                rows[n - 1] = rows[0].clone();
                a = RationalMatrix::from_rows(rows)?;
            }
            vec![fib_block_det_check(&a)?]
        }
    };
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub max_n: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    /// At most the first 10 failing checks, in trial order.
    pub failures: Vec<TrialFailure>,
}

impl FuzzSummary {
    pub fn all_hold(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `trials` independent trials of `suite`.
pub fn run_suite(suite: Suite, trials: u64, seed: u64, max_n: usize) -> Result<FuzzSummary> {
    if max_n == 0 {
        return Err(Error::DimensionMismatch("max-n must be at least 1".into()));
    }
    let per_trial: Vec<Vec<VerificationReport>> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(suite, &mut trial_rng(seed, t), max_n))
        .collect::<Result<_>>()?;

    let mut summary = FuzzSummary {
        suite: suite.name().to_string(),
        seed,
        trials,
        max_n,
        checks: 0,
        passed: 0,
        failed: 0,
        failures: Vec::new(),
    };
    for (t, reports) in per_trial.into_iter().enumerate() {
        for report in reports {
            summary.checks += 1;
            if report.holds {
                summary.passed += 1;
            } else {
                summary.failed += 1;
                if summary.failures.len() < 10 {
                    summary.failures.push(TrialFailure {
                        trial: t as u64,
                        report,
                    });
                }
            }
        }
    }
    Ok(summary)
}
