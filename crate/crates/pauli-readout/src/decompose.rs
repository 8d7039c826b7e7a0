//! Pauli-basis decomposition and probability reconstruction.

use std::collections::BTreeMap;

use quantum_sim::{CMatrix, DensityOperator};

use crate::pauli::PauliString;
use crate::ReadoutError;

const HERM_TOL: f64 = 1e-10;
const COEFF_CUTOFF: f64 = 1e-13;
const PROB_SLACK: f64 = 1e-9;

/// Real Pauli-string coefficients of a Hermitian operator, keyed by the
/// base-four string index. Zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliDecomposition {
    sites: usize,
    coefficients: BTreeMap<u64, f64>,
}

impl PauliDecomposition {
    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn coefficients(&self) -> &BTreeMap<u64, f64> {
        &self.coefficients
    }

    pub fn coefficient(&self, index: u64) -> f64 {
        self.coefficients.get(&index).copied().unwrap_or(0.0)
    }

    /// `sum c_i B_i` as a dense matrix.
    pub fn reconstruct(&self) -> CMatrix {
        let dim = 1usize << self.sites;
        let mut out = CMatrix::zeros(dim);
        for (&index, &c) in &self.coefficients {
            let b = PauliString::from_index(index, self.sites)
                .expect("stored index is in range")
                .matrix();
            out = out.add(&b.scale_re(c));
        }
        out
    }
}

/// Expands a Hermitian operator over the Pauli-string basis,
/// `c_i = tr(M B_i) / 2^n`.
pub fn decompose(m: &CMatrix, n: usize) -> Result<PauliDecomposition, ReadoutError> {
    let dim = 1usize << n;
    if m.dim() != dim {
        return Err(ReadoutError::DimensionMismatch { got: m.dim(), n });
    }
    if !m.is_hermitian(HERM_TOL) {
        return Err(ReadoutError::NotHermitian);
    }
    let norm = 1.0 / dim as f64;
    let mut coefficients = BTreeMap::new();
    for index in 0..(1u64 << (2 * n)) {
        let b = PauliString::from_index(index, n)?.matrix();
        let c = m.trace_product(&b).re * norm;
        if c.abs() >= COEFF_CUTOFF {
            coefficients.insert(index, c);
        }
    }
    Ok(PauliDecomposition {
        sites: n,
        coefficients,
    })
}

/// Expectation values `tr(rho B_i)` for a set of strings; each value is
/// real within 1e-10 and lies in `[-1, 1]`.
pub fn expectations(
    rho: &DensityOperator,
    strings: &[PauliString],
) -> Result<BTreeMap<u64, f64>, ReadoutError> {
    let mut out = BTreeMap::new();
    for s in strings {
        if s.len() != rho.qubits() {
            return Err(ReadoutError::DimensionMismatch {
                got: 1usize << s.len(),
                n: rho.qubits(),
            });
        }
        let v = rho.matrix().trace_product(&s.matrix());
        if v.im.abs() > HERM_TOL {
            return Err(ReadoutError::NonRealExpectation {
                string: s.to_string(),
                imag: v.im,
            });
        }
        out.insert(s.index(), v.re.clamp(-1.0, 1.0));
    }
    Ok(out)
}

/// Reconstructs `sum c_i b_i` from a decomposition and an expectation map.
///
/// The map must cover every string of the decomposition, including the
/// identity (whose expectation is 1 for a normalized state). Values within
/// 1e-9 outside `[0, 1]` are clipped; anything further out is an error.
pub fn probability_from_expectations(
    dec: &PauliDecomposition,
    b: &BTreeMap<u64, f64>,
) -> Result<f64, ReadoutError> {
    let mut total = 0.0;
    for (&index, &c) in dec.coefficients() {
        let Some(&bv) = b.get(&index) else {
            let s = PauliString::from_index(index, dec.sites())?;
            return Err(ReadoutError::MissingExpectation(s.to_string()));
        };
        total += c * bv;
    }
    if !(-PROB_SLACK..=1.0 + PROB_SLACK).contains(&total) {
        return Err(ReadoutError::ProbabilityOutOfRange(total));
    }
    Ok(total.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::base4_pauli;
    use num_complex::Complex64;
    use quantum_sim::{maximally_mixed, pure_family, xz_observable, CMatrix, Outcome};

    fn pad(op: &CMatrix, site: usize, qubits: usize) -> CMatrix {
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

    #[test]
    fn projector_coefficients_match_the_reference_readout() {
        // +1 projector of the site-0 observable at Bloch angle 0.6093
        let proj = pad(&xz_observable(0.6093, 0).projector(Outcome::Plus), 0, 3);
        let dec = decompose(&proj, 3).unwrap();
        assert!((dec.coefficient(16) - 0.286).abs() < 2e-3);
        assert!((dec.coefficient(48) - 0.410).abs() < 2e-3);
        assert!((dec.coefficient(0) - 0.500).abs() < 1e-12);
        assert_eq!(dec.coefficients().len(), 3);

        // +1 projector of the site-1 observable at Bloch angle 0.3047
        let proj = pad(&xz_observable(0.3047, 1).projector(Outcome::Plus), 1, 3);
        let dec = decompose(&proj, 3).unwrap();
        assert!((dec.coefficient(12) - 0.476).abs() < 2e-3);
        assert!((dec.coefficient(4) - 0.149).abs() < 2e-3);
        assert!((dec.coefficient(0) - 0.500).abs() < 1e-12);
    }

    #[test]
    fn identity_decomposes_to_the_zero_string() {
        let dec = decompose(&CMatrix::identity(8), 3).unwrap();
        assert_eq!(dec.coefficients().len(), 1);
        assert!((dec.coefficient(0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let mut m = CMatrix::zeros(8);
        m.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(decompose(&m, 3), Err(ReadoutError::NotHermitian)));
    }

    #[test]
    fn expectations_of_named_states() {
        // |000><000| with Z I I
        let mut amps = vec![Complex64::new(0.0, 0.0); 8];
        amps[0] = Complex64::new(1.0, 0.0);
        let rho = DensityOperator::from_state_vector(&amps).unwrap();
        let zii = base4_pauli(48, 3).unwrap();
        let b = expectations(&rho, &[zii]).unwrap();
        assert!((b[&48] - 1.0).abs() < 1e-12);

        // Bell pair on sites 0, 1 with X X I
        let bell = pure_family(1.0, 0.0).unwrap();
        let xxi = base4_pauli(20, 3).unwrap();
        let b = expectations(&bell, &[xxi]).unwrap();
        assert!((b[&20] - 1.0).abs() < 1e-12);

        // maximally mixed: every non-identity string vanishes
        let mixed = maximally_mixed(3).unwrap();
        let strings: Vec<_> = (1..64).map(|i| base4_pauli(i, 3).unwrap()).collect();
        let b = expectations(&mixed, &strings).unwrap();
        for (&i, &v) in &b {
            assert!(v.abs() < 1e-12, "string {i} has expectation {v}");
        }
    }

    #[test]
    fn identity_probability_is_one_and_mixed_pair_is_a_quarter() {
        let dec = decompose(&CMatrix::identity(8), 3).unwrap();
        let mut b = BTreeMap::new();
        b.insert(0, 1.0);
        assert_eq!(probability_from_expectations(&dec, &b).unwrap(), 1.0);

        // two-site projector on the maximally mixed state: all b_i = 0
        // except the identity, leaving the 0.25 offset
        let pa = pad(&xz_observable(0.3, 0).projector(Outcome::Plus), 0, 3);
        let pb = pad(&xz_observable(1.1, 1).projector(Outcome::Plus), 1, 3);
        let dec = decompose(&pa.matmul(&pb), 3).unwrap();
        let mut b: BTreeMap<u64, f64> = dec.coefficients().keys().map(|&k| (k, 0.0)).collect();
        b.insert(0, 1.0);
        let p = probability_from_expectations(&dec, &b).unwrap();
        assert!((p - 0.25).abs() < 1e-12);
    }

    #[test]
    fn missing_expectation_names_the_string() {
        let pa = pad(&xz_observable(0.3, 0).projector(Outcome::Plus), 0, 3);
        let dec = decompose(&pa, 3).unwrap();
        let b = BTreeMap::new();
        let err = probability_from_expectations(&dec, &b).unwrap_err();
        assert!(err.to_string().contains("III"), "got {err}");
    }
}
