//! Randomized invariants of the simulator against the entropic evaluator.

use std::collections::BTreeMap;

use enc_inequality::{combine, entropic_chsh, evaluate, ChshForm, EntropicExpression, Rational};
use num_complex::Complex64;
use quantum_sim::{
    born_model, joint_distribution, pure_family, scenario_observables, xz_observable,
    DensityOperator,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const THETA: f64 = 0.457;

fn haar_random_pure(rng: &mut ChaCha8Rng, qubits: usize) -> DensityOperator {
    let dim = 1usize << qubits;
    let amps: Vec<Complex64> = (0..dim)
        .map(|_| {
            // normalized complex gaussian components give the Haar measure
            let (u1, u2): (f64, f64) = (rng.gen_range(1e-12..1.0), rng.gen_range(0.0..1.0));
            let (v1, v2): (f64, f64) = (rng.gen_range(1e-12..1.0), rng.gen_range(0.0..1.0));
            let re = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
            let im = (-2.0 * v1.ln()).sqrt() * (std::f64::consts::TAU * v2).cos();
            Complex64::new(re, im)
        })
        .collect();
    DensityOperator::from_state_vector(&amps).unwrap()
}

fn one(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn k1() -> EntropicExpression {
    entropic_chsh("A0", "A1", "B0", "B1", ChshForm::Sec2b).unwrap()
}

fn k2() -> EntropicExpression {
    entropic_chsh("A0", "A1", "E0", "E1", ChshForm::Sec2b).unwrap()
}

#[test]
fn haar_states_respect_the_violation_bound_and_monogamy() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260809);
    let sum = combine(&k1(), &k2(), &one(1), &one(1));
    let k1_expr = k1();
    for _ in 0..500 {
        let rho = haar_random_pure(&mut rng, 3);
        let model = born_model(rho, scenario_observables(THETA)).unwrap();
        let v1 = evaluate(&k1_expr, &model).unwrap();
        assert!(v1 <= 0.237 + 2e-3, "H_K1 = {v1} beyond the working-point maximum");
        let vs = evaluate(&sum, &model).unwrap();
        assert!(vs <= 1e-9, "monogamy sum violated: {vs}");
    }
}

#[test]
fn family_swap_symmetry_on_a_21x21_grid() {
    // swapping sites 1 and 2 maps the family (p1, p2) to (p2, p1) and the
    // B observables onto the E observables, so H_K1 and H_K2 mirror exactly
    let k1_expr = k1();
    let k2_expr = k2();
    for i in 0..21 {
        for j in 0..21 {
            let (p1, p2) = (i as f64 / 20.0, j as f64 / 20.0);
            if p1 == 0.0 && p2 == 0.0 {
                continue;
            }
            let a = born_model(pure_family(p1, p2).unwrap(), scenario_observables(THETA)).unwrap();
            let b = born_model(pure_family(p2, p1).unwrap(), scenario_observables(THETA)).unwrap();
            let v1 = evaluate(&k1_expr, &a).unwrap();
            let v2 = evaluate(&k2_expr, &b).unwrap();
            assert!(
                (v1 - v2).abs() < 1e-12,
                "asymmetry at ({p1}, {p2}): {v1} vs {v2}"
            );
        }
    }
}

#[test]
fn joint_marginals_match_single_observable_probabilities() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let rho = haar_random_pure(&mut rng, 3);
        let a = xz_observable(rng.gen_range(0.0..std::f64::consts::TAU), 0);
        let b = xz_observable(rng.gen_range(0.0..std::f64::consts::TAU), 1);
        let j = joint_distribution(&rho, &a, &b).unwrap();
        // single-observable distribution by pairing with a fixed partner
        let c = xz_observable(0.0, 2);
        let ja = joint_distribution(&rho, &a, &c).unwrap();
        let ma = j.marginal(0);
        let ma_ref = ja.marginal(0);
        for (x, y) in ma.iter().zip(ma_ref.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
        // and directly against the single-projector Born probability
        let mut plus = quantum_sim::CMatrix::identity(1);
        for s in 0..3 {
            let factor = if s == a.site() {
                a.projector(quantum_sim::Outcome::Plus)
            } else {
                quantum_sim::CMatrix::identity(2)
            };
            plus = plus.kron(&factor);
        }
        let p_direct = rho.matrix().trace_product(&plus).re;
        assert!((ma[0] - p_direct).abs() < 1e-12);
    }
}

#[test]
fn observables_square_to_the_identity() {
    // eigenvalues are exactly +1 and -1 for every Bloch angle
    for angle in [0.0, 0.3047, 0.6093, 0.914, 2.7, 5.9] {
        let o = xz_observable(angle, 0).operator();
        let id = quantum_sim::CMatrix::identity(2);
        assert!(o.matmul(&o).max_abs_diff(&id) < 1e-14, "angle {angle}");
    }
}

#[test]
fn evaluate_is_linear_in_the_expression() {
    let rho = pure_family(0.7, 0.2).unwrap();
    let model = born_model(rho, scenario_observables(THETA)).unwrap();
    let e1 = k1();
    let e2 = k2();
    let q1 = Rational::new(3.into(), 7.into());
    let q2 = Rational::new((-2).into(), 5.into());
    let lhs = evaluate(&combine(&e1, &e2, &q1, &q2), &model).unwrap();
    let v1 = evaluate(&e1, &model).unwrap();
    let v2 = evaluate(&e2, &model).unwrap();
    let rhs = 3.0 / 7.0 * v1 - 2.0 / 5.0 * v2;
    assert!((lhs - rhs).abs() < 1e-10);
}

#[test]
fn violation_appears_only_beyond_the_mixing_threshold() {
    let k1_expr = k1();
    let k2_expr = k2();
    let placement: BTreeMap<_, _> = scenario_observables(THETA);
    let at = |p: f64, expr: &EntropicExpression| {
        let rho = quantum_sim::mixed_family(p).unwrap();
        let model = born_model(rho, placement.clone()).unwrap();
        evaluate(expr, &model).unwrap()
    };
    assert!(at(1.0, &k1_expr) > 0.2);
    assert!(at(0.0, &k2_expr) > 0.2);
    assert!(at(0.5, &k1_expr) < 0.0);
    assert!(at(0.5, &k2_expr) < 0.0);
}
