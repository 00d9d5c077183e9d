//! Exact arithmetic for the coefficient domains: rationals, ℚ(√d), and the
//! subrings K of them that a composite can be built over.

pub mod intmath;
mod ktag;
pub mod lattice;
mod quad;
mod rational;

pub use ktag::{quad_ext_gcd, quad_gcd, KTag};
pub use quad::{quad_norm, QuadElement};
pub use rational::{int_valuation, ParseRationalError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("value {value} does not live in a field containing {tag}")]
    IncompatibleTag { tag: KTag, value: String },
    #[error("{0} is not a GCD domain")]
    NotGCDDomain(KTag),
    #[error("both arguments are zero")]
    BothZero,
    #[error("no integer multiple of {value} lies in {tag}")]
    NoClearingDenominator { tag: KTag, value: String },
}

impl ExactError {
    pub fn name(&self) -> &'static str {
        match self {
            ExactError::IncompatibleTag { .. } => "IncompatibleTag",
            ExactError::NotGCDDomain(_) => "NotGCDDomain",
            ExactError::BothZero => "BothZero",
            ExactError::NoClearingDenominator { .. } => "NoClearingDenominator",
        }
    }
}

/// Membership of `x` in the subring named by `tag`.
pub fn k_membership(x: &QuadElement, tag: KTag) -> Result<bool, ExactError> {
    tag.contains(x)
}

/// Minimal principal K-module generator over `K·l1 + K·l2`.
pub fn inf_fraction(l1: &QuadElement, l2: &QuadElement, tag: KTag) -> Result<QuadElement, ExactError> {
    tag.inf_fraction(l1, l2)
}
