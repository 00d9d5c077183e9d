use crate::exactnum::ExactError;
use crate::ringdesc::RingDescError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    RingDesc(#[from] RingDescError),
    #[error("operands belong to different rings")]
    PairMismatch,
    #[error("constant term {0} does not lie in K")]
    NotInR(String),
    #[error("coefficient {0} does not lie in L")]
    NotInL(String),
    #[error("the zero element has no X-adic order")]
    ZeroElement,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("an input is zero")]
    ZeroInput,
    #[error("L is not the quotient field of K")]
    NotQuotientField,
    #[error("u(0) is zero")]
    UnitDenominatorZero,
    #[error("{0} is not a GCD domain")]
    NotGCDConfiguration(String),
    #[error("{0} is not a Bezout domain")]
    NotBezoutConfiguration(String),
    #[error("{0} is not a Prufer domain")]
    NotPruferConfiguration(String),
    #[error("{ring} is not a {n}-generator Prufer domain")]
    NotNGeneratorConfiguration { ring: String, n: u32 },
    #[error("class group of {0} is not known")]
    UnknownClassGroup(String),
    #[error("an ideal needs at least one nonzero generator")]
    EmptyIdeal,
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("required flag {0} is unknown")]
    InsufficientData(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Exact(e) => e.name(),
            Error::RingDesc(e) => e.name(),
            Error::PairMismatch => "PairMismatch",
            Error::NotInR(_) => "NotInR",
            Error::NotInL(_) => "NotInL",
            Error::ZeroElement => "ZeroElement",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::ZeroInput => "ZeroInput",
            Error::NotQuotientField => "NotQuotientField",
            Error::UnitDenominatorZero => "UnitDenominatorZero",
            Error::NotGCDConfiguration(_) => "NotGCDConfiguration",
            Error::NotBezoutConfiguration(_) => "NotBezoutConfiguration",
            Error::NotPruferConfiguration(_) => "NotPruferConfiguration",
            Error::NotNGeneratorConfiguration { .. } => "NotNGeneratorConfiguration",
            Error::UnknownClassGroup(_) => "UnknownClassGroup",
            Error::EmptyIdeal => "EmptyIdeal",
            Error::NotPrime(_) => "NotPrime",
            Error::InsufficientData(_) => "InsufficientData",
            Error::InvariantViolation(_) => "InvariantViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
