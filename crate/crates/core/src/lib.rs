//! Exact-rational toolkit for determinantal identities built on a column
//! recurrence: minors of a matrix extended by recursively generated columns,
//! closed-form Vandermonde minors and inverses, generalized Vandermonde
//! determinants, power-sum recurrences, n-step Fibonacci block determinants
//! and Hessenberg identities for binomial and Stirling numbers.
//!
//! Every closed form is paired with a brute-force check through
//! [`det_oracle`].

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod recurrence;
pub mod seed;
pub mod sympoly;
pub mod trials;
pub mod vandermonde;

pub use error::{Error, Result};
pub use exact::{
    delete_rows_cols, det_oracle, mat_mul, parse_list, parse_matrix, parse_scalar,
    RationalMatrix, Scalar, VerificationReport,
};
