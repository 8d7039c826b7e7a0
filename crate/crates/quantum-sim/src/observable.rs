//! Spin observables in the X-Z plane of the Bloch sphere.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::matrix::{pauli_x, pauli_z, CMatrix};

/// Measurement outcome of a two-valued spin observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::Plus => "+1",
            Outcome::Minus => "-1",
        }
    }
}

/// A two-outcome qubit observable `cos(a) Z + sin(a) X` acting at one site.
///
/// `a` is the Bloch-sphere polar angle of the +1 eigenvector measured from
/// the +z axis; eigenvalues are exactly +1 and -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableSpec {
    bloch: f64,
    site: usize,
}

impl ObservableSpec {
    pub fn bloch_angle(&self) -> f64 {
        self.bloch
    }

    pub fn site(&self) -> usize {
        self.site
    }

    /// The 2x2 observable matrix.
    pub fn operator(&self) -> CMatrix {
        pauli_z()
            .scale_re(self.bloch.cos())
            .add(&pauli_x().scale_re(self.bloch.sin()))
    }

    /// Eigenprojector `(I + sign * (cos(a) Z + sin(a) X)) / 2`.
    pub fn projector(&self, outcome: Outcome) -> CMatrix {
        CMatrix::identity(2)
            .add(&self.operator().scale_re(outcome.sign()))
            .scale(Complex64::new(0.5, 0.0))
    }
}

/// Observable at Bloch angle `alpha` (normalized into `[0, 2pi)`) on the
/// given qubit site.
pub fn xz_observable(alpha: f64, site: usize) -> ObservableSpec {
    ObservableSpec {
        bloch: alpha.rem_euclid(TAU),
        site,
    }
}

/// The six observables of the tripartite CHSH scenario, keyed by label.
///
/// Alice holds A0 and A1 on site 0, Bob holds B0 and B1 on site 1, and
/// Charlie's E0 and E1 copy Bob's directions on site 2. Bloch angles climb
/// in equal steps of `2 theta / 3` along the order A0, B1, A1, B0:
///
/// ```text
/// A0 = 0,  B1 = E1 = 2 theta / 3,  A1 = 4 theta / 3,  B0 = E0 = 2 theta
/// ```
///
/// `theta` is the conventional scenario parameter: measurement bases are
/// often written as rotations by `theta/3` steps, and a basis rotation by
/// `phi` tilts the observable axis by `2 phi` on the Bloch sphere. This
/// map works in Bloch angles directly and hides that doubling.
pub fn scenario_observables(theta: f64) -> BTreeMap<String, ObservableSpec> {
    let step = 2.0 * theta / 3.0;
    let mut map = BTreeMap::new();
    map.insert("A0".to_string(), xz_observable(0.0, 0));
    map.insert("B1".to_string(), xz_observable(step, 1));
    map.insert("A1".to_string(), xz_observable(2.0 * step, 0));
    map.insert("B0".to_string(), xz_observable(3.0 * step, 1));
    map.insert("E0".to_string(), xz_observable(3.0 * step, 2));
    map.insert("E1".to_string(), xz_observable(step, 2));
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::pauli_z;

    #[test]
    fn zero_angle_is_pauli_z() {
        let o = xz_observable(0.0, 0);
        assert!(o.operator().max_abs_diff(&pauli_z()) < 1e-15);
        // +1 projector is |0><0|
        let p = o.projector(Outcome::Plus);
        assert!((p.get(0, 0).re - 1.0).abs() < 1e-15);
        assert!(p.get(1, 1).norm() < 1e-15);
    }

    #[test]
    fn pi_angle_is_minus_z() {
        let o = xz_observable(std::f64::consts::PI, 0);
        assert!(o.operator().max_abs_diff(&pauli_z().scale_re(-1.0)) < 1e-12);
        let p = o.projector(Outcome::Plus);
        assert!((p.get(1, 1).re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn projector_coefficients_at_the_working_angle() {
        // +1 projector of the A1 direction: (I + 0.820 Z + 0.573 X) / 2
        let o = xz_observable(0.6093, 0);
        let p = o.projector(Outcome::Plus);
        let z_coeff = p.trace_product(&pauli_z()).re / 2.0;
        let x_coeff = p.trace_product(&pauli_x()).re / 2.0;
        assert!((z_coeff - 0.410).abs() < 2e-3, "z coeff {z_coeff}");
        assert!((x_coeff - 0.286).abs() < 2e-3, "x coeff {x_coeff}");
    }

    #[test]
    fn projectors_are_idempotent_and_complete() {
        let o = xz_observable(1.234, 0);
        let p = o.projector(Outcome::Plus);
        let m = o.projector(Outcome::Minus);
        assert!(p.matmul(&p).max_abs_diff(&p) < 1e-14);
        assert!(p.add(&m).max_abs_diff(&CMatrix::identity(2)) < 1e-14);
    }

    #[test]
    fn scenario_angles_step_evenly() {
        let theta = 0.457;
        let obs = scenario_observables(theta);
        assert_eq!(obs["A0"].bloch_angle(), 0.0);
        let step = 2.0 * theta / 3.0;
        assert!((obs["B1"].bloch_angle() - step).abs() < 1e-15);
        assert!((obs["A1"].bloch_angle() - 2.0 * step).abs() < 1e-15);
        assert!((obs["B0"].bloch_angle() - 3.0 * step).abs() < 1e-15);
        assert_eq!(obs["E0"].bloch_angle(), obs["B0"].bloch_angle());
        assert_eq!(obs["E1"].bloch_angle(), obs["B1"].bloch_angle());
        assert_eq!(obs["A0"].site(), 0);
        assert_eq!(obs["B0"].site(), 1);
        assert_eq!(obs["E0"].site(), 2);

        // theta = 0 degenerates to six copies of Z
        for (_, o) in scenario_observables(0.0) {
            assert!(o.operator().max_abs_diff(&pauli_z()) < 1e-15);
        }
    }
}
