use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{RationalMatrix, Scalar};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is scaled by the lcm of its denominators so elimination runs on
/// integers; the product of those scale factors is divided out at the end.
/// The empty matrix has determinant 1.
pub fn det_oracle(m: &RationalMatrix) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut cleared = BigInt::one();
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m.row_slices() {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        work.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        cleared *= lcm;
    }

    let det = Scalar::new(bareiss(work), cleared)?;
    #[cfg(debug_assertions)]
    if n <= 4 {
        debug_assert_eq!(det, cofactor_det(m), "Bareiss disagrees with cofactor expansion");
    }
    Ok(det)
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Laplace expansion along the first row; only used as a debug cross-check.
#[cfg(debug_assertions)]
fn cofactor_det(m: &RationalMatrix) -> Scalar {
    let n = m.rows();
    if n == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::zero();
    for j in 1..=n {
        let entry = m.get(1, j).expect("in range");
        if entry.is_zero() {
            continue;
        }
        let minor = super::delete_rows_cols(m, &[1], &[j]).expect("in range");
        let term = entry * cofactor_det(&minor);
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
