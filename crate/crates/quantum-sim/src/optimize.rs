//! One-parameter angle optimization of the entropic CHSH value.

use enc_inequality::{entropic_chsh, evaluate, ChshForm, EntropicExpression};

use crate::born::born_model;
use crate::observable::scenario_observables;
use crate::state::DensityOperator;
use crate::QsimError;

/// The Alice-Bob CHSH expression optimized by `maximize_violation`, with
/// labels arranged so the form's positive term spans the widest angle gap
/// of the scenario ladder.
///
/// For `Sec2b` that is the standard labeling. The `Eq4` arrangement is the
/// same inequality under the relabeling `A0 <-> A1`, `B0 <-> B1`; applying
/// that relabeling keeps its positive term on the extreme angle pair, so
/// both forms trace out the same violation curve.
fn chsh_expression(form: ChshForm) -> EntropicExpression {
    match form {
        ChshForm::Sec2b => entropic_chsh("A0", "A1", "B0", "B1", form),
        ChshForm::Eq4 => entropic_chsh("A1", "A0", "B1", "B0", form),
    }
    .expect("labels are distinct")
}

/// Maximizes the CHSH violation over the scenario angle `theta`.
///
/// Evaluates the expression on `grid_points` equally spaced angles in
/// `range`, then refines around the best grid point by golden-section
/// search. Ties break toward the smaller angle. Returns `(theta, value)`.
pub fn maximize_violation(
    state: &DensityOperator,
    form: ChshForm,
    range: (f64, f64),
    grid_points: usize,
) -> Result<(f64, f64), QsimError> {
    let (lo, hi) = range;
    if grid_points < 3 {
        return Err(QsimError::InvalidParameter(format!(
            "grid needs at least 3 points, got {grid_points}"
        )));
    }
    if lo >= hi {
        return Err(QsimError::InvalidParameter(format!(
            "invalid angle range ({lo}, {hi})"
        )));
    }
    let expr = chsh_expression(form);
    let value_at = |theta: f64| -> Result<f64, QsimError> {
        let model = born_model(state.clone(), scenario_observables(theta))?;
        evaluate(&expr, &model).map_err(|e| QsimError::InvalidParameter(e.to_string()))
    };

    let step = (hi - lo) / (grid_points - 1) as f64;
    let mut best_idx = 0;
    let mut best_val = f64::NEG_INFINITY;
    let mut grid_vals = Vec::with_capacity(grid_points);
    for i in 0..grid_points {
        let v = value_at(lo + i as f64 * step)?;
        grid_vals.push(v);
        if v > best_val {
            best_val = v;
            best_idx = i;
        }
    }

    let bracket_lo = lo + best_idx.saturating_sub(1) as f64 * step;
    let bracket_hi = lo + (best_idx + 1).min(grid_points - 1) as f64 * step;
    let (mut a, mut b) = (bracket_lo, bracket_hi);
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = value_at(x1)?;
    let mut f2 = value_at(x2)?;
    for _ in 0..90 {
        if b - a < 1e-12 {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = value_at(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = value_at(x2)?;
        }
    }
    let (theta, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    // the refined point can only improve on the grid point
    if value >= best_val {
        Ok((theta, value))
    } else {
        Ok((lo + best_idx as f64 * step, best_val))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{maximally_mixed, pure_family, DensityOperator};
    use num_complex::Complex64;

    fn bell_with_spectator() -> DensityOperator {
        pure_family(1.0, 0.0).unwrap()
    }

    #[test]
    fn finds_the_known_optimum() {
        let (theta, value) =
            maximize_violation(&bell_with_spectator(), ChshForm::Sec2b, (0.05, 1.5), 200).unwrap();
        assert!((value - 0.2370).abs() < 5e-4, "value {value}");
        assert!((theta - 0.457).abs() < 8e-3, "theta {theta}");
    }

    #[test]
    fn both_forms_share_the_optimum() {
        let s = maximize_violation(&bell_with_spectator(), ChshForm::Sec2b, (0.05, 1.5), 120)
            .unwrap();
        let q = maximize_violation(&bell_with_spectator(), ChshForm::Eq4, (0.05, 1.5), 120)
            .unwrap();
        assert!((s.1 - q.1).abs() < 1e-9);
        assert!((s.0 - q.0).abs() < 1e-6);
    }

    #[test]
    fn product_state_never_violates() {
        let mut amps = vec![Complex64::new(0.0, 0.0); 8];
        amps[0] = Complex64::new(1.0, 0.0);
        let rho = DensityOperator::from_state_vector(&amps).unwrap();
        let (_, value) =
            maximize_violation(&rho, ChshForm::Sec2b, (0.05, 1.5), 100).unwrap();
        assert!(value <= 1e-12, "product state value {value}");
    }

    #[test]
    fn maximally_mixed_state_sits_at_minus_two() {
        let rho = maximally_mixed(3).unwrap();
        let (_, value) = maximize_violation(&rho, ChshForm::Sec2b, (0.05, 1.5), 50).unwrap();
        assert!((value + 2.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_arguments() {
        let rho = bell_with_spectator();
        assert!(maximize_violation(&rho, ChshForm::Sec2b, (0.05, 1.5), 2).is_err());
        assert!(maximize_violation(&rho, ChshForm::Sec2b, (1.5, 0.05), 10).is_err());
    }
}
