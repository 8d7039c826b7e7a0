//! Expectation-value readout of outcome probabilities.
//!
//! Projector observables are decomposed into Pauli strings indexed in base
//! four, so that any outcome probability becomes a linear combination of
//! plain expectation values. This reproduces the Born rule exactly while
//! only ever consuming `tr(rho B_i)` numbers, the quantities a
//! magnetization-style readout provides.

mod appendix;
mod decompose;
mod pauli;

pub use appendix::{appendix_report, AppendixReport, ReportRow, APPENDIX_TOLERANCE};
pub use decompose::{decompose, expectations, probability_from_expectations, PauliDecomposition};
pub use pauli::{base4_pauli, PauliLetter, PauliString};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReadoutError {
    #[error("index {index} out of range for {n} sites (must be below 4^{n})")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("operator is not Hermitian within 1e-10")]
    NotHermitian,
    #[error("operator dimension {got} does not match {n} sites")]
    DimensionMismatch { got: usize, n: usize },
    #[error("expectation of {0} is missing from the supplied map")]
    MissingExpectation(String),
    #[error("expectation of {string} is not real: imaginary part {imag}")]
    NonRealExpectation { string: String, imag: f64 },
    #[error("reconstructed probability {0} is outside [0, 1] beyond tolerance")]
    ProbabilityOutOfRange(f64),
}
