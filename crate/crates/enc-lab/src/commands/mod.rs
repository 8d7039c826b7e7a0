pub mod appendix_check;
pub mod derive;
pub mod optimize;
pub mod sweep_mixed;
pub mod table_pure;

use std::collections::BTreeMap;

use anyhow::Context;
use enc_inequality::{entropic_chsh, ChshForm, EntropicExpression};
use quantum_sim::{born_model, depolarize, xz_observable, BornModel, DensityOperator, ObservableSpec};

/// The Alice-Bob and Alice-Charlie CHSH expressions for the requested
/// arrangement. The eq4 arrangement is evaluated under the label swap
/// `A0 <-> A1`, `B0 <-> B1` (likewise for Charlie) that keeps its positive
/// term on the widest angle gap, so both arrangements trace the same
/// curves on the scenario ladder.
pub(crate) fn chsh_pair(form: ChshForm) -> (EntropicExpression, EntropicExpression) {
    let (k1, k2) = match form {
        ChshForm::Sec2b => (
            entropic_chsh("A0", "A1", "B0", "B1", form),
            entropic_chsh("A0", "A1", "E0", "E1", form),
        ),
        ChshForm::Eq4 => (
            entropic_chsh("A1", "A0", "B1", "B0", form),
            entropic_chsh("A1", "A0", "E1", "E0", form),
        ),
    };
    (k1.expect("labels distinct"), k2.expect("labels distinct"))
}

/// Applies the configured depolarizing noise and wraps the state as a
/// Born-rule model over the given placement.
pub(crate) fn noisy_model(
    state: &DensityOperator,
    placement: BTreeMap<String, ObservableSpec>,
    noise: f64,
) -> anyhow::Result<BornModel> {
    let state = if noise > 0.0 {
        depolarize(state, noise).context("applying --noise")?
    } else {
        state.clone()
    };
    born_model(state, placement).context("building the Born model")
}

/// The alternate Charlie placement: E1 at Bloch angle 4 theta / 3 instead
/// of copying B1. The reference table's Alice-Charlie column is consistent
/// with this placement at its violation rows, so both are reported.
pub(crate) fn alt_charlie_placement(theta: f64) -> BTreeMap<String, ObservableSpec> {
    let mut placement = quantum_sim::scenario_observables(theta);
    placement.insert("E1".to_string(), xz_observable(4.0 * theta / 3.0, 2));
    placement
}
