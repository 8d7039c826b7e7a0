//! Density operators and the tripartite state families.

use num_complex::Complex64;

use crate::matrix::CMatrix;
use crate::QsimError;

const HERM_TOL: f64 = 1e-10;
const TRACE_TOL: f64 = 1e-10;
const EIG_TOL: f64 = 1e-10;
const MAX_QUBITS: usize = 6;

/// A trace-one positive-semidefinite Hermitian matrix on `2^n` dimensions.
///
/// Construction validates all three properties; instances are immutable.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    qubits: usize,
    mat: CMatrix,
}

impl DensityOperator {
    pub fn new(mat: CMatrix) -> Result<Self, QsimError> {
        let dim = mat.dim();
        if dim == 0 || dim & (dim - 1) != 0 {
            return Err(QsimError::BadDimension(dim));
        }
        let qubits = dim.trailing_zeros() as usize;
        if qubits > MAX_QUBITS {
            return Err(QsimError::TooManyQubits(qubits));
        }
        if !mat.is_hermitian(HERM_TOL) {
            return Err(QsimError::NotHermitian);
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(QsimError::BadTrace(tr.re));
        }
        let (vals, _) = mat.hermitian_eigen();
        if let Some(&min) = vals.first() {
            if min < -EIG_TOL {
                return Err(QsimError::NegativeEigenvalue(min));
            }
        }
        Ok(Self { qubits, mat })
    }

    /// Rank-one operator `|v><v|` from a state vector, normalizing it.
    pub fn from_state_vector(amps: &[Complex64]) -> Result<Self, QsimError> {
        let dim = amps.len();
        if dim == 0 || dim & (dim - 1) != 0 {
            return Err(QsimError::BadDimension(dim));
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr <= 0.0 {
            return Err(QsimError::ZeroNorm);
        }
        let norm = norm_sqr.sqrt();
        let mut mat = CMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                mat.set(i, j, amps[i] * amps[j].conj() / (norm * norm));
            }
        }
        Self::new(mat)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.mat.hermitian_eigen().0
    }
}

fn basis_amplitudes(entries: &[(usize, f64)], dim: usize) -> Vec<Complex64> {
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for &(idx, a) in entries {
        amps[idx] = Complex64::new(a, 0.0);
    }
    amps
}

/// `|psi1> = (|001> + |111>) / sqrt(2)`: Alice and Bob maximally entangled,
/// Charlie separable. Site 0 is the most significant basis bit.
fn psi1() -> Vec<Complex64> {
    basis_amplitudes(&[(0b001, 1.0), (0b111, 1.0)], 8)
}

/// `|psi2> = (|010> + |111>) / sqrt(2)`: Alice and Charlie entangled.
fn psi2() -> Vec<Complex64> {
    basis_amplitudes(&[(0b010, 1.0), (0b111, 1.0)], 8)
}

/// The two-parameter pure tripartite family
/// `N (p1 |001> + p2 |010> + (p1+p2) |111>)`.
pub fn pure_family(p1: f64, p2: f64) -> Result<DensityOperator, QsimError> {
    if p1 < 0.0 || p2 < 0.0 || !p1.is_finite() || !p2.is_finite() {
        return Err(QsimError::InvalidParameter(format!(
            "pure family weights must be nonnegative, got ({p1}, {p2})"
        )));
    }
    if p1 == 0.0 && p2 == 0.0 {
        return Err(QsimError::InvalidParameter(
            "pure family is undefined at p1 = p2 = 0".to_string(),
        ));
    }
    let amps = basis_amplitudes(&[(0b001, p1), (0b010, p2), (0b111, p1 + p2)], 8);
    DensityOperator::from_state_vector(&amps)
}

/// The mixed family `p |psi1><psi1| + (1-p) |psi2><psi2|`, the exact
/// mathematical content of preparing either branch and averaging runs.
pub fn mixed_family(p: f64) -> Result<DensityOperator, QsimError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(QsimError::InvalidParameter(format!(
            "mixture weight {p} outside [0, 1]"
        )));
    }
    let rho1 = DensityOperator::from_state_vector(&psi1())?;
    let rho2 = DensityOperator::from_state_vector(&psi2())?;
    let mat = rho1
        .matrix()
        .scale_re(p)
        .add(&rho2.matrix().scale_re(1.0 - p));
    DensityOperator::new(mat)
}

/// `(1 - lambda) rho + lambda I / d`.
pub fn depolarize(rho: &DensityOperator, lambda: f64) -> Result<DensityOperator, QsimError> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(QsimError::InvalidParameter(format!(
            "depolarizing weight {lambda} outside [0, 1]"
        )));
    }
    let d = rho.dim();
    let mat = rho
        .matrix()
        .scale_re(1.0 - lambda)
        .add(&CMatrix::identity(d).scale_re(lambda / d as f64));
    DensityOperator::new(mat)
}

/// The maximally mixed state `I / 2^n`.
pub fn maximally_mixed(qubits: usize) -> Result<DensityOperator, QsimError> {
    if qubits > MAX_QUBITS {
        return Err(QsimError::TooManyQubits(qubits));
    }
    let d = 1usize << qubits;
    DensityOperator::new(CMatrix::identity(d).scale_re(1.0 / d as f64))
}

/// Uhlmann fidelity `(tr sqrt(sqrt(rho) sigma sqrt(rho)))^2`.
///
/// Equals `|<psi|phi>|^2` for pure states and is symmetric in its
/// arguments. Eigenvalues within 1e-10 of zero are treated as zero before
/// the matrix square roots.
pub fn fidelity(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64, QsimError> {
    if rho.dim() != sigma.dim() {
        return Err(QsimError::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    let clamp_sqrt = |x: f64| if x < EIG_TOL { 0.0 } else { x.sqrt() };
    let root = rho.matrix().hermitian_map(clamp_sqrt);
    let inner = root.matmul(sigma.matrix()).matmul(&root);
    let (vals, _) = inner.hermitian_eigen();
    let tr: f64 = vals.iter().map(|&x| clamp_sqrt(x)).sum();
    Ok((tr * tr).clamp(0.0, 1.0))
}
