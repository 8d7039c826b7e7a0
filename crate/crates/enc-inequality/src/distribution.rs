//! Probability tables and Shannon entropies in bits.

use crate::IneqError;

const NEG_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-12;

/// A normalized probability table over outcome tuples of one or more
/// variables, stored row-major in the variable order given at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    outcomes: Vec<Vec<String>>,
    probs: Vec<f64>,
}

impl JointDistribution {
    /// Validates and normalizes a table. Entries in `[-1e-12, 0)` are
    /// clipped to zero (Born-rule floating-point residue) and the table is
    /// renormalized; anything further negative, or a total off from one by
    /// more than `1e-12`, is rejected.
    pub fn new(outcomes: Vec<Vec<String>>, probs: Vec<f64>) -> Result<Self, IneqError> {
        let expected: usize = outcomes.iter().map(|o| o.len()).product();
        if probs.len() != expected {
            return Err(IneqError::ShapeMismatch {
                got: probs.len(),
                expected,
            });
        }
        let mut clipped = probs;
        for p in &mut clipped {
            if *p < -NEG_TOL {
                return Err(IneqError::NegativeProbability(*p));
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let total: f64 = clipped.iter().sum();
        if (total - 1.0).abs() > NORM_TOL {
            return Err(IneqError::NotNormalized(total));
        }
        for p in &mut clipped {
            *p /= total;
        }
        Ok(Self {
            outcomes,
            probs: clipped,
        })
    }

    /// Convenience constructor for a two-variable table over `(+1, -1)`
    /// outcomes, rows indexing the first variable.
    pub fn binary_pair(table: [[f64; 2]; 2]) -> Result<Self, IneqError> {
        let outcomes = vec![
            vec!["+1".to_string(), "-1".to_string()],
            vec!["+1".to_string(), "-1".to_string()],
        ];
        Self::new(
            outcomes,
            vec![table[0][0], table[0][1], table[1][0], table[1][1]],
        )
    }

    pub fn variables(&self) -> usize {
        self.outcomes.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.outcomes.iter().map(|o| o.len()).collect()
    }

    pub fn outcome_labels(&self, var: usize) -> &[String] {
        &self.outcomes[var]
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Marginal distribution of one variable.
    pub fn marginal(&self, var: usize) -> Vec<f64> {
        let shape = self.shape();
        let mut out = vec![0.0; shape[var]];
        for (flat, &p) in self.probs.iter().enumerate() {
            out[unflatten(flat, &shape, var)] += p;
        }
        out
    }

    /// Two-variable marginal in the order `(i, j)`.
    pub fn marginal_pair(&self, i: usize, j: usize) -> JointDistribution {
        let shape = self.shape();
        let mut table = vec![0.0; shape[i] * shape[j]];
        for (flat, &p) in self.probs.iter().enumerate() {
            let a = unflatten(flat, &shape, i);
            let b = unflatten(flat, &shape, j);
            table[a * shape[j] + b] += p;
        }
        JointDistribution {
            outcomes: vec![self.outcomes[i].clone(), self.outcomes[j].clone()],
            probs: table,
        }
    }
}

fn unflatten(mut flat: usize, shape: &[usize], var: usize) -> usize {
    for &s in shape.iter().skip(var + 1).rev() {
        flat /= s;
    }
    flat % shape[var]
}

/// Shannon entropy of a probability vector in bits, with `0 log 0 = 0`.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// Conditional entropy `H(X|Y) = H(X,Y) - H(Y)` of a two-variable joint,
/// where the first variable is `X`. Nonnegative by construction; tiny
/// negative rounding residue is clamped to zero.
pub fn conditional_entropy(joint: &JointDistribution) -> Result<f64, IneqError> {
    if joint.variables() != 2 {
        return Err(IneqError::NotBivariate(joint.variables()));
    }
    let total: f64 = joint.probs.iter().sum();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(IneqError::NotNormalized(total));
    }
    let h_joint = shannon_entropy(&joint.probs);
    let h_cond = shannon_entropy(&joint.marginal(1));
    Ok((h_joint - h_cond).max(0.0))
}
