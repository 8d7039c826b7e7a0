//! Born-rule joint distributions and the probability-model adapter.

use std::collections::BTreeMap;
use std::sync::Mutex;

use enc_inequality::{JointDistribution, ModelError, ProbabilityModel};

use crate::matrix::CMatrix;
use crate::observable::{ObservableSpec, Outcome};
use crate::state::DensityOperator;
use crate::QsimError;

/// Embeds a single-site operator into the full register, identity elsewhere.
fn pad_to_register(op: &CMatrix, site: usize, qubits: usize) -> CMatrix {
    let mut out = CMatrix::identity(1);
    for s in 0..qubits {
        if s == site {
            out = out.kron(op);
        } else {
            out = out.kron(&CMatrix::identity(2));
        }
    }
    out
}

/// The 2x2 outcome table `P(o1 = a, o2 = b) = tr(rho P_a P_b)` for two
/// observables at distinct sites, rows indexing `o1` outcomes `(+1, -1)`.
pub fn joint_distribution(
    rho: &DensityOperator,
    o1: &ObservableSpec,
    o2: &ObservableSpec,
) -> Result<JointDistribution, QsimError> {
    let qubits = rho.qubits();
    for o in [o1, o2] {
        if o.site() >= qubits {
            return Err(QsimError::SiteOutOfRange {
                site: o.site(),
                qubits,
            });
        }
    }
    if o1.site() == o2.site() {
        return Err(QsimError::SameSite(o1.site()));
    }
    let outcomes = [Outcome::Plus, Outcome::Minus];
    let mut table = [[0.0f64; 2]; 2];
    for (i, &a) in outcomes.iter().enumerate() {
        let pa = pad_to_register(&o1.projector(a), o1.site(), qubits);
        for (j, &b) in outcomes.iter().enumerate() {
            let pb = pad_to_register(&o2.projector(b), o2.site(), qubits);
            let joint_proj = pa.matmul(&pb);
            table[i][j] = rho.matrix().trace_product(&joint_proj).re;
        }
    }
    Ok(JointDistribution::binary_pair(table)?)
}

/// A probability model answering every cross-site pair of a placement via
/// the Born rule, with per-pair caching.
pub struct BornModel {
    rho: DensityOperator,
    placement: BTreeMap<String, ObservableSpec>,
    cache: Mutex<BTreeMap<(String, String), JointDistribution>>,
}

/// Wraps a state and an observable placement as a `ProbabilityModel`.
///
/// Placement sites are checked against the register size up front; the
/// distinct-site requirement is enforced per queried pair.
pub fn born_model(
    rho: DensityOperator,
    placement: BTreeMap<String, ObservableSpec>,
) -> Result<BornModel, QsimError> {
    for spec in placement.values() {
        if spec.site() >= rho.qubits() {
            return Err(QsimError::SiteOutOfRange {
                site: spec.site(),
                qubits: rho.qubits(),
            });
        }
    }
    Ok(BornModel {
        rho,
        placement,
        cache: Mutex::new(BTreeMap::new()),
    })
}

impl BornModel {
    pub fn state(&self) -> &DensityOperator {
        &self.rho
    }

    pub fn placement(&self) -> &BTreeMap<String, ObservableSpec> {
        &self.placement
    }
}

impl ProbabilityModel for BornModel {
    fn joint(&self, x: &str, y: &str) -> Result<JointDistribution, ModelError> {
        let key = (x.to_string(), y.to_string());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let unsupported = |reason: String| ModelError::UnsupportedPair {
            x: x.to_string(),
            y: y.to_string(),
            reason,
        };
        let ox = self
            .placement
            .get(x)
            .ok_or_else(|| unsupported(format!("label {x:?} not placed")))?;
        let oy = self
            .placement
            .get(y)
            .ok_or_else(|| unsupported(format!("label {y:?} not placed")))?;
        let dist = joint_distribution(&self.rho, ox, oy)
            .map_err(|e| unsupported(e.to_string()))?;
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, dist.clone());
        Ok(dist)
    }
}
