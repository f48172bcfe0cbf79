use thiserror::Error;

use crate::algebra::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("both inputs are zero")]
    ZeroInput,
    #[error("coefficient {0} is not 2-integral")]
    NonIntegralCoefficient(Rat),
    #[error("zero element has no valuation")]
    ZeroElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation is ambiguous over the declared weight interval: {0}")]
    ValuationAmbiguous(String),
    #[error("element is not integral: {0}")]
    NonIntegral(String),
    #[error("degree window violated: {0}")]
    DegreeViolation(String),
    #[error("singular change of variables (ad - bc = 0 or e = 0)")]
    SingularChange,
    #[error("scale factor of the change of variables is not invertible in the coefficient ring")]
    NonInvertibleScale,
    #[error("quadratic twist needs an equation of the form y^2 = F(x)")]
    NotTwistable,
    #[error("twisting parameter is zero")]
    ZeroDelta,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not covered: {0}")]
    NotCovered(String),
    #[error("fiber is non-reduced (y^2 + Q y = P with Q = 0 and P a square)")]
    NonReducedFiber,
    #[error("field GF(2^{0}) exceeds the supported size")]
    FieldTooLarge(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("no closed-form discriminant recorded for {0}")]
    NoClosedForm(String),
    #[error("invalid weight interval: {0}")]
    InvalidInterval(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
