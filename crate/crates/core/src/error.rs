use thiserror::Error;

/// Failures of series arithmetic preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("leading coefficient {0} is not invertible")]
    NotInvertible(String),
    #[error("composition needs an inner series of valuation >= 1, got {0}")]
    InnerValuation(i64),
    #[error("composition needs an outer series of valuation >= 0, got {0}")]
    OuterValuation(i64),
    #[error("reversion needs valuation exactly 1, got {0}")]
    ReverseValuation(i64),
    #[error("exp needs a zero constant term and no negative powers")]
    ExpDomain,
    #[error("log needs constant term 1 and no negative powers")]
    LogDomain,
    #[error("Eichler integral needs valuation >= 1, got {0}")]
    EichlerDomain(i64),
    #[error("cannot integrate a series with a t^-1 term")]
    Residue,
    #[error("Laurent valuation {valuation} exceeds the pole cap -{cap}")]
    PoleTooDeep { valuation: i64, cap: i64 },
}

/// Errors raised when building or checking the uniformizing operator and its solutions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("at least one nonzero finite puncture is required")]
    TooFewPunctures,
    #[error("puncture 0 is implicit and may not be listed")]
    ZeroPuncture,
    #[error("repeated puncture {0}")]
    RepeatedPuncture(String),
    #[error("expected {expected} accessory parameters (rho), got {got}")]
    AccessoryCount { expected: usize, got: usize },
    #[error("order must be >= 1")]
    Order,
    #[error("right-hand side has negative valuation {0}")]
    RhsValuation(i64),
    #[error("index {index} out of range for {count} parameters")]
    Index { index: usize, count: usize },
    #[error("{identity} fails at exponent {exponent}")]
    Mismatch { identity: String, exponent: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Errors from the deformation and quasimodular layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error("accessory direction {index} is not seeded (only {seeded} free parameters)")]
    Unseeded { index: usize, seeded: usize },
    #[error("accessory values are not the declared Fuchsian value")]
    NotFuchsian,
    #[error("no Fuchsian value declared for this configuration")]
    NoFuchsianValue,
    #[error("{identity} fails at exponent {exponent}")]
    Identity { identity: String, exponent: i64 },
    #[error("{identity} needs order {needed}, only {got} available")]
    Precision { identity: String, needed: i64, got: i64 },
    #[error("element has odd or negative weight {0}")]
    Weight(i64),
    #[error("element parts do not match weight {weight} with n = {n}")]
    Shape { weight: i64, n: usize },
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("prefactor power {0} is not a nonnegative integer")]
    FractionalPrefactor(String),
    #[error("dilation must be positive")]
    Dilation,
}
