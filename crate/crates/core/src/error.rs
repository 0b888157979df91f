use thiserror::Error;

use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("q0 = {0} is outside the open interval (0, 1)")]
    OutOfRange(Rational),
    #[error("expression uses half powers of q but q0 = {0} is not the square of a rational")]
    NonSquare(Rational),
    #[error("denominator vanishes at q0 = {0}")]
    Pole(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error("spectral family of (id ⊗ π)U is not a resolution of the identity: {0}")]
    NotSpectral(String),
    #[error("not the weight function of a representation: {0}")]
    NotWeightFunction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
