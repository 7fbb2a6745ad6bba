//! Exact rational scalars, dense matrices and the determinant oracle.
//!
//! Every identity in this crate is checked against [`det_oracle`], which never
//! shares code with the closed-form paths it validates.

mod det;
mod matrix;
mod parse;
mod report;
mod scalar;

pub use det::det_oracle;
pub use matrix::{delete_rows_cols, mat_mul, RationalMatrix};
pub use parse::{parse_list, parse_matrix, parse_scalar};
pub use report::VerificationReport;
pub use scalar::Scalar;
