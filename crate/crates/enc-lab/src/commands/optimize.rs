//! Angle optimization of the CHSH violation.

use std::path::Path;

use anyhow::Context;
use num_complex::Complex64;
use quantum_sim::{depolarize, maximize_violation, pure_family, DensityOperator};
use serde::Deserialize;

use crate::config::RunConfig;
use crate::output::emit;

const THETA_RANGE: (f64, f64) = (0.05, 1.5);

#[derive(Deserialize)]
struct StateFile {
    amplitudes: Vec<[f64; 2]>,
}

fn load_state(path: &Path) -> anyhow::Result<DensityOperator> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let parsed: StateFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let amps: Vec<Complex64> = parsed
        .amplitudes
        .iter()
        .map(|[re, im]| Complex64::new(*re, *im))
        .collect();
    DensityOperator::from_state_vector(&amps).context("building the state")
}

pub fn run(config: &RunConfig, state: Option<&Path>) -> anyhow::Result<()> {
    let rho = match state {
        Some(path) => load_state(path)?,
        None => pure_family(1.0, 0.0).expect("fixed state is valid"),
    };
    let rho = if config.noise > 0.0 {
        depolarize(&rho, config.noise).context("applying --noise")?
    } else {
        rho
    };
    let (theta_star, value) =
        maximize_violation(&rho, config.form, THETA_RANGE, config.grid)
            .context("optimizing the violation")?;
    let doc = serde_json::json!({
        "thetaStar": theta_star,
        "blochStep": 2.0 * theta_star / 3.0,
        "value": value,
        "form": config.form.name(),
        "thetaRange": [THETA_RANGE.0, THETA_RANGE.1],
        "grid": config.grid,
        "noise": config.noise,
        "seed": config.seed,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    emit(config.out.as_deref(), &text)
}
