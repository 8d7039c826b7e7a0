//! Signed rational combinations of conditional entropy terms.
//!
//! An `EntropicExpression` is a finite sum of terms `c * H(X|Y)` with exact
//! rational coefficients. Keeping the coefficients rational lets downstream
//! certificate checks cancel terms symbolically instead of comparing
//! floating-point residues.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::IneqError;

/// Exact rational scalar used for expression coefficients and certificate
/// multipliers.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A canonical map from directed label pairs `(X, Y)` to coefficients,
/// meaning `sum c_XY * H(X|Y)`. Zero coefficients are never stored, and
/// `(X, Y)` is distinct from `(Y, X)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EntropicExpression {
    terms: BTreeMap<(String, String), Rational>,
}

impl EntropicExpression {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff * H(x|y)`, keeping the map canonical.
    pub fn add_term(&mut self, x: &str, y: &str, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((x.to_string(), y.to_string())) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic pair order.
    pub fn terms(&self) -> impl Iterator<Item = (&(String, String), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &str, y: &str) -> Option<&Rational> {
        self.terms.get(&(x.to_string(), y.to_string()))
    }

    /// The unordered pairs appearing in the expression; these are the
    /// commutation-graph edges the expression refers to.
    pub fn undirected_pairs(&self) -> BTreeSet<(String, String)> {
        self.terms
            .keys()
            .map(|(x, y)| {
                if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                }
            })
            .collect()
    }

    pub fn scaled(&self, q: &Rational) -> EntropicExpression {
        let mut out = EntropicExpression::new();
        for ((x, y), c) in &self.terms {
            out.add_term(x, y, c * q);
        }
        out
    }
}

/// Termwise `q1*e1 + q2*e2` in canonical form; cancellations are exact.
pub fn combine(
    e1: &EntropicExpression,
    e2: &EntropicExpression,
    q1: &Rational,
    q2: &Rational,
) -> EntropicExpression {
    let mut out = e1.scaled(q1);
    for ((x, y), c) in &e2.terms {
        out.add_term(x, y, c * q2);
    }
    out
}

/// The cyclic chain inequality for labels `X_0 .. X_{n-1}`:
/// `H(X_0|X_{n-1}) - sum_{k<n-1} H(X_k|X_{k+1})`.
///
/// The value is at most zero for any model that marginalizes a single joint
/// distribution over all the labels; a positive value certifies that no
/// such joint distribution exists.
pub fn chain_inequality(cycle: &[&str]) -> Result<EntropicExpression, IneqError> {
    let n = cycle.len();
    if n < 3 {
        return Err(IneqError::TooFewLabels(n));
    }
    let mut seen = BTreeSet::new();
    for label in cycle {
        if !seen.insert(*label) {
            return Err(IneqError::RepeatedLabel(label.to_string()));
        }
    }
    let mut expr = EntropicExpression::new();
    expr.add_term(cycle[0], cycle[n - 1], rat(1));
    for k in 0..n - 1 {
        expr.add_term(cycle[k], cycle[k + 1], rat(-1));
    }
    Ok(expr)
}

/// The two printed arrangements of the entropic CHSH inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChshForm {
    /// `H(A1|B1) - H(A1|B0) - H(B0|A0) - H(A0|B1)`
    Eq4,
    /// `H(A0|B0) - H(A0|B1) - H(B1|A1) - H(A1|B0)`
    Sec2b,
}

impl ChshForm {
    pub fn name(self) -> &'static str {
        match self {
            ChshForm::Eq4 => "eq4",
            ChshForm::Sec2b => "sec2b",
        }
    }
}

impl FromStr for ChshForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eq4" => Ok(ChshForm::Eq4),
            "sec2b" => Ok(ChshForm::Sec2b),
            other => Err(format!("unknown CHSH form {other:?} (expected eq4 or sec2b)")),
        }
    }
}

/// Entropic CHSH expression over four distinct labels.
pub fn entropic_chsh(
    a0: &str,
    a1: &str,
    b0: &str,
    b1: &str,
    form: ChshForm,
) -> Result<EntropicExpression, IneqError> {
    let labels = [a0, a1, b0, b1];
    let mut seen = BTreeSet::new();
    for label in labels {
        if !seen.insert(label) {
            return Err(IneqError::RepeatedLabel(label.to_string()));
        }
    }
    let mut expr = EntropicExpression::new();
    match form {
        ChshForm::Eq4 => {
            expr.add_term(a1, b1, rat(1));
            expr.add_term(a1, b0, rat(-1));
            expr.add_term(b0, a0, rat(-1));
            expr.add_term(a0, b1, rat(-1));
        }
        ChshForm::Sec2b => {
            expr.add_term(a0, b0, rat(1));
            expr.add_term(a0, b1, rat(-1));
            expr.add_term(b1, a1, rat(-1));
            expr.add_term(a1, b0, rat(-1));
        }
    }
    Ok(expr)
}

impl fmt::Display for EntropicExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((x, y), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "H({x}|{y})")?;
            } else {
                write!(f, "{mag} H({x}|{y})")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    coeff: String,
    x: String,
    y: String,
}

#[derive(Serialize, Deserialize)]
struct RawExpression {
    terms: Vec<TermRecord>,
}

impl Serialize for EntropicExpression {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawExpression {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| TermRecord {
                    coeff: c.to_string(),
                    x: x.clone(),
                    y: y.clone(),
                })
                .collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EntropicExpression {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawExpression::deserialize(deserializer)?;
        let mut expr = EntropicExpression::new();
        for t in raw.terms {
            let c = Rational::from_str(&t.coeff)
                .map_err(|e| D::Error::custom(format!("bad rational {:?}: {e}", t.coeff)))?;
            expr.add_term(&t.x, &t.y, c);
        }
        Ok(expr)
    }
}
