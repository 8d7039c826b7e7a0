//! Pauli strings with base-four indexing, most significant digit first.

use std::fmt;

use quantum_sim::{pauli_i, pauli_x, pauli_y, pauli_z, CMatrix};

use crate::ReadoutError;

/// Single-site Pauli letter; the base-four digits 0, 1, 2, 3 map to
/// I, X, Y, Z respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn from_digit(d: u64) -> Self {
        match d & 3 {
            0 => PauliLetter::I,
            1 => PauliLetter::X,
            2 => PauliLetter::Y,
            _ => PauliLetter::Z,
        }
    }

    pub fn digit(self) -> u64 {
        match self {
            PauliLetter::I => 0,
            PauliLetter::X => 1,
            PauliLetter::Y => 2,
            PauliLetter::Z => 3,
        }
    }

    pub fn matrix(self) -> CMatrix {
        match self {
            PauliLetter::I => pauli_i(),
            PauliLetter::X => pauli_x(),
            PauliLetter::Y => pauli_y(),
            PauliLetter::Z => pauli_z(),
        }
    }
}

/// A tensor product of Pauli letters; site 0 is the most significant
/// base-four digit of the index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<PauliLetter>,
}

impl PauliString {
    pub fn new(letters: Vec<PauliLetter>) -> Self {
        Self { letters }
    }

    /// Decodes `index` as `n` base-four digits, left padded with I.
    pub fn from_index(index: u64, n: usize) -> Result<Self, ReadoutError> {
        if n >= 32 || index >= 1u64 << (2 * n) {
            return Err(ReadoutError::IndexOutOfRange { index, n });
        }
        let letters = (0..n)
            .rev()
            .map(|site| PauliLetter::from_digit(index >> (2 * site)))
            .collect();
        Ok(Self { letters })
    }

    pub fn index(&self) -> u64 {
        self.letters
            .iter()
            .fold(0u64, |acc, l| (acc << 2) | l.digit())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[PauliLetter] {
        &self.letters
    }

    /// Dense `2^n` matrix of the tensor product.
    pub fn matrix(&self) -> CMatrix {
        let mut out = CMatrix::identity(1);
        for l in &self.letters {
            out = out.kron(&l.matrix());
        }
        out
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{:?}", l)?;
        }
        Ok(())
    }
}

/// Base-four decoding of a Pauli string index, `0 <= index < 4^n`.
pub fn base4_pauli(index: u64, n: usize) -> Result<PauliString, ReadoutError> {
    PauliString::from_index(index, n)
}
