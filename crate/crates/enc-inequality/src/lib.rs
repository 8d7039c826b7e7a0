//! Entropic expressions and their evaluation.

pub mod distribution;
pub mod expression;
pub mod model;

pub use distribution::{conditional_entropy, shannon_entropy, JointDistribution};
pub use expression::{
    chain_inequality, combine, entropic_chsh, rat, ChshForm, EntropicExpression, Rational,
};
pub use model::{evaluate, GlobalJointModel, ModelError, ProbabilityModel};

use thiserror::Error;

/// Errors from expression construction and distribution handling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IneqError {
    #[error("a cycle inequality needs at least 3 labels, got {0}")]
    TooFewLabels(usize),
    #[error("label {0:?} repeats")]
    RepeatedLabel(String),
    #[error("probability table length {got} does not match outcome shape {expected}")]
    ShapeMismatch { got: usize, expected: usize },
    #[error("probability entry {0} is negative beyond tolerance")]
    NegativeProbability(f64),
    #[error("probabilities sum to {0}, not 1 within 1e-12")]
    NotNormalized(f64),
    #[error("expected a two-variable joint distribution, got {0} variables")]
    NotBivariate(usize),
}
