//! Probability models: suppliers of pairwise joint distributions.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::distribution::{conditional_entropy, JointDistribution};
use crate::expression::EntropicExpression;
use crate::IneqError;

/// Errors raised while querying a model or evaluating an expression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("model does not supply the pair ({x:?}, {y:?}): {reason}")]
    UnsupportedPair { x: String, y: String, reason: String },
    #[error(transparent)]
    Distribution(#[from] IneqError),
}

/// Supplies the joint distribution of an ordered pair of observables that
/// are jointly measurable in the scenario at hand.
///
/// Implementations must answer consistently: the marginal of `X` obtained
/// from `joint(X, Y)` may not depend on the partner `Y`.
pub trait ProbabilityModel {
    fn joint(&self, x: &str, y: &str) -> Result<JointDistribution, ModelError>;
}

/// Evaluates `sum c_XY * H(X|Y)` in bits against a model.
///
/// A strictly positive result certifies that no single joint distribution
/// over all the labels can reproduce the model's pair distributions.
pub fn evaluate(
    expr: &EntropicExpression,
    model: &dyn ProbabilityModel,
) -> Result<f64, ModelError> {
    let mut total = 0.0;
    for ((x, y), coeff) in expr.terms() {
        let joint = model.joint(x, y)?;
        let h = conditional_entropy(&joint)?;
        let c = coeff
            .to_f64()
            .expect("rational coefficient fits in an f64");
        total += c * h;
    }
    Ok(total)
}

/// A model backed by one explicit global joint distribution over named
/// variables; pair queries marginalize it. Every entropic chain inequality
/// evaluates to at most zero against such a model.
#[derive(Debug, Clone)]
pub struct GlobalJointModel {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    dist: JointDistribution,
}

impl GlobalJointModel {
    pub fn new(names: Vec<String>, dist: JointDistribution) -> Result<Self, ModelError> {
        if dist.variables() != names.len() {
            return Err(ModelError::Distribution(IneqError::ShapeMismatch {
                got: dist.variables(),
                expected: names.len(),
            }));
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(Self { names, index, dist })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl ProbabilityModel for GlobalJointModel {
    fn joint(&self, x: &str, y: &str) -> Result<JointDistribution, ModelError> {
        let (&i, &j) = match (self.index.get(x), self.index.get(y)) {
            (Some(i), Some(j)) if i != j => (i, j),
            _ => {
                return Err(ModelError::UnsupportedPair {
                    x: x.to_string(),
                    y: y.to_string(),
                    reason: "label unknown or repeated".to_string(),
                })
            }
        };
        Ok(self.dist.marginal_pair(i, j))
    }
}
