//! 101-point sweep of the two-branch mixture.

use anyhow::Context;
use enc_inequality::evaluate;
use quantum_sim::{mixed_family, scenario_observables};

use crate::commands::{chsh_pair, noisy_model};
use crate::config::RunConfig;
use crate::output::{emit, sig6};

pub fn run(config: &RunConfig) -> anyhow::Result<()> {
    let (k1, k2) = chsh_pair(config.form);
    let mut body = String::new();
    body.push_str(&config.metadata("sweep-mixed"));
    body.push_str("p,H_K1,H_K2,sum\n");
    for i in 0..=100 {
        let p = i as f64 / 100.0;
        let rho = mixed_family(p).context("building the mixture")?;
        let model = noisy_model(&rho, scenario_observables(config.theta), config.noise)?;
        let v1 = evaluate(&k1, &model).context("evaluating H_K1")?;
        let v2 = evaluate(&k2, &model).context("evaluating H_K2")?;
        body.push_str(&format!(
            "{:.2},{},{},{}\n",
            p,
            sig6(v1),
            sig6(v2),
            sig6(v1 + v2)
        ));
    }
    emit(config.out.as_deref(), &body)
}
