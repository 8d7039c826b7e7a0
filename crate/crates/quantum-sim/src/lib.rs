//! Small dense-matrix quantum simulator for tripartite qubit scenarios.
//!
//! Provides density operators up to six qubits, X-Z-plane spin observables,
//! Born-rule joint distributions feeding the `enc-inequality` evaluator,
//! state mixing and fidelity, and a one-parameter angle optimization for
//! the entropic CHSH expressions.

mod born;
mod matrix;
mod observable;
mod optimize;
mod state;

pub use born::{born_model, joint_distribution, BornModel};
pub use matrix::{pauli_i, pauli_x, pauli_y, pauli_z, CMatrix};
pub use observable::{scenario_observables, xz_observable, ObservableSpec, Outcome};
pub use optimize::maximize_violation;
pub use state::{
    depolarize, fidelity, maximally_mixed, mixed_family, pure_family, DensityOperator,
};

use thiserror::Error;

/// Errors raised by state construction and Born-rule queries.
#[derive(Debug, Error)]
pub enum QsimError {
    #[error("matrix dimension {0} is not a power of two")]
    BadDimension(usize),
    #[error("{0} qubits exceed the supported maximum of 6")]
    TooManyQubits(usize),
    #[error("matrix is not Hermitian within 1e-10")]
    NotHermitian,
    #[error("trace is {0}, not 1 within 1e-10")]
    BadTrace(f64),
    #[error("matrix has eigenvalue {0} below -1e-10")]
    NegativeEigenvalue(f64),
    #[error("dimensions {0} and {1} do not match")]
    DimensionMismatch(usize, usize),
    #[error("site {site} out of range for {qubits} qubits")]
    SiteOutOfRange { site: usize, qubits: usize },
    #[error("observables at the same site {0} do not commute")]
    SameSite(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("state vector has zero norm")]
    ZeroNorm,
    #[error(transparent)]
    Distribution(#[from] enc_inequality::IneqError),
}
