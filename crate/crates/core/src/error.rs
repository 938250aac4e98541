use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series has a zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must vanish at the origin")]
    NonzeroInnerConstant,
    #[error("gamma function pole at nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),
    #[error("zeta function pole at s = 1")]
    PoleAtOne,
    #[error("polylogarithm series diverges for |w| = {0} >= 1")]
    DivergentArgument(f64),
    #[error("series did not reach tolerance within {0} terms")]
    TermCapExceeded(usize),
    #[error("polylogarithm expansion requires a non-positive-integer order, got {0}")]
    InvalidOrder(String),
    #[error("expansion point |mu| = {0} lies outside the disk |mu| < 2*pi")]
    OutOfDisk(f64),
    #[error("generator spec has no coefficients")]
    EmptySpec,
    #[error("generator constant term p(0) = {0} must be positive")]
    NonpositiveConstant(String),
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),
    #[error("generator {0:?} is not polynomial; global evaluation is unavailable")]
    NotPolynomial(String),
    #[error("truncation order {have} is too low; need at least {need}")]
    TruncationTooLow { have: usize, need: usize },
    #[error("closed-form trace identity is only available for m <= 3, got {0}")]
    UnsupportedOrder(u32),
    #[error("generator {name:?} fails the Hankel conditions: {reason}")]
    HankelConditionsFailed { name: String, reason: String },
    #[error("quadrature failed to reach tolerance {tol:e} (estimate {estimate:e})")]
    QuadratureFailure { tol: f64, estimate: f64 },
    #[error("alpha = {0} lies outside the regularization region Re(alpha) > -1")]
    OutOfRegularizationRegion(String),
    #[error("alpha = {0} lies outside Re(alpha) < 1")]
    OutOfRegion(String),
    #[error("regulator routes disagree by {delta:e} at alpha = {alpha}")]
    RouteDisagreement { alpha: String, delta: f64 },
    #[error("contour radius {rho} is too large: {reason}")]
    RadiusTooLarge { rho: f64, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("failed to parse generator spec: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
