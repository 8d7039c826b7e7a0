//! Certificate data and exact symbolic verification.

use std::str::FromStr;

use enc_inequality::{rat, EntropicExpression, Rational};
use graph_core::ChordalDecomposition;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One oriented triangle inequality `H(x|z) - H(x|y) - H(y|z) <= 0`
/// weighted by a nonnegative rational multiplier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedTriangle {
    vertices: (String, String, String),
    multiplier: Rational,
}

impl OrientedTriangle {
    pub fn new(x: &str, y: &str, z: &str, multiplier: Rational) -> Self {
        Self {
            vertices: (x.to_string(), y.to_string(), z.to_string()),
            multiplier,
        }
    }

    pub fn vertices(&self) -> (&str, &str, &str) {
        (
            &self.vertices.0,
            &self.vertices.1,
            &self.vertices.2,
        )
    }

    pub fn multiplier(&self) -> &Rational {
        &self.multiplier
    }

    /// The triangle's chain inequality as an expression.
    pub fn expression(&self) -> EntropicExpression {
        let (x, y, z) = self.vertices();
        let mut e = EntropicExpression::new();
        e.add_term(x, z, rat(1));
        e.add_term(x, y, rat(-1));
        e.add_term(y, z, rat(-1));
        e
    }

    /// The three unordered edges the triangle uses.
    pub fn edges(&self) -> [(String, String); 3] {
        let (x, y, z) = self.vertices();
        [sorted(x, y), sorted(x, z), sorted(y, z)]
    }
}

fn sorted(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// A multiset of weighted oriented triangles whose exact sum equals the
/// target expression, together with the chordal decomposition the
/// triangles came from.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogamyCertificate {
    triangles: Vec<OrientedTriangle>,
    target: EntropicExpression,
    decomposition: ChordalDecomposition,
}

impl MonogamyCertificate {
    pub fn new(
        triangles: Vec<OrientedTriangle>,
        target: EntropicExpression,
        decomposition: ChordalDecomposition,
    ) -> Self {
        Self {
            triangles,
            target,
            decomposition,
        }
    }

    pub fn triangles(&self) -> &[OrientedTriangle] {
        &self.triangles
    }

    pub fn target(&self) -> &EntropicExpression {
        &self.target
    }

    pub fn decomposition(&self) -> &ChordalDecomposition {
        &self.decomposition
    }
}

/// Why a certificate failed verification; carries the first defect found.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("triangle ({0}, {1}, {2}) has multiplier {3} < 0")]
    NegativeMultiplier(String, String, String, String),
    #[error("triangle edge ({0}, {1}) lies in no single decomposition subgraph with its mates")]
    TriangleNotInDecomposition(String, String),
    #[error("residual term {coeff} * H({x}|{y}) after subtracting the target")]
    ResidualTerm { x: String, y: String, coeff: String },
}

/// Exact check: multipliers nonnegative, every triangle inside one
/// decomposition subgraph (hence inside the joint graph), and the weighted
/// triangle sum equal to the target term by term.
pub fn verify_detailed(cert: &MonogamyCertificate) -> Result<(), VerifyError> {
    for t in cert.triangles() {
        if t.multiplier().is_negative() {
            let (x, y, z) = t.vertices();
            return Err(VerifyError::NegativeMultiplier(
                x.to_string(),
                y.to_string(),
                z.to_string(),
                t.multiplier().to_string(),
            ));
        }
        let hosted = cert.decomposition().subgraphs().iter().any(|g| {
            t.edges()
                .iter()
                .all(|(u, v)| g.has_edge(u, v))
        });
        if !hosted {
            let (u, v) = t.edges()[0].clone();
            return Err(VerifyError::TriangleNotInDecomposition(u, v));
        }
    }
    let mut sum = EntropicExpression::new();
    for t in cert.triangles() {
        sum = enc_inequality::combine(&sum, &t.expression(), &rat(1), t.multiplier());
    }
    let residual = enc_inequality::combine(&sum, cert.target(), &rat(1), &rat(-1));
    if let Some(((x, y), c)) = residual.terms().next() {
        return Err(VerifyError::ResidualTerm {
            x: x.clone(),
            y: y.clone(),
            coeff: c.to_string(),
        });
    }
    Ok(())
}

/// Boolean form of `verify_detailed`.
pub fn verify(cert: &MonogamyCertificate) -> bool {
    verify_detailed(cert).is_ok()
}

#[derive(Serialize, Deserialize)]
struct RawTriangle {
    vertices: (String, String, String),
    multiplier: String,
}

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    triangles: Vec<RawTriangle>,
    target: EntropicExpression,
    decomposition: ChordalDecomposition,
}

impl Serialize for MonogamyCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawCertificate {
            triangles: self
                .triangles
                .iter()
                .map(|t| RawTriangle {
                    vertices: t.vertices.clone(),
                    multiplier: t.multiplier.to_string(),
                })
                .collect(),
            target: self.target.clone(),
            decomposition: self.decomposition.clone(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonogamyCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawCertificate::deserialize(deserializer)?;
        let mut triangles = Vec::with_capacity(raw.triangles.len());
        for t in raw.triangles {
            let m = Rational::from_str(&t.multiplier)
                .map_err(|e| D::Error::custom(format!("bad multiplier {:?}: {e}", t.multiplier)))?;
            triangles.push(OrientedTriangle {
                vertices: t.vertices,
                multiplier: m,
            });
        }
        Ok(MonogamyCertificate {
            triangles,
            target: raw.target,
            decomposition: raw.decomposition,
        })
    }
}
