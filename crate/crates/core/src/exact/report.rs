use serde::Serialize;

use super::Scalar;

/// Outcome of checking one identity instance: the oracle side, the formula
/// side and whether they agree exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub description: String,
    pub holds: bool,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl VerificationReport {
    pub fn new(description: impl Into<String>, lhs: Scalar, rhs: Scalar) -> Self {
        let holds = lhs == rhs;
        VerificationReport {
            description: description.into(),
            holds,
            lhs,
            rhs,
        }
    }
}
