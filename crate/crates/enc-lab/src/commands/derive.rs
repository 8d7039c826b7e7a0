//! Monogamy certificate derivation.

use std::path::Path;

use anyhow::{bail, Context};
use enc_inequality::EntropicExpression;
use graph_core::CommutationGraph;
use monogamy_engine::{
    chord_elimination_scenario, derive_monogamy_with_budget, verify, SearchOutcome,
    DEFAULT_BUDGET,
};
use thiserror::Error;

use crate::config::RunConfig;
use crate::output::emit;

/// Raised when the search ends without a certificate; mapped to exit
/// code 3 so scripts can tell "no certificate" from bad input.
#[derive(Debug, Error)]
pub enum SearchFailed {
    #[error("search exhausted: no chordal decomposition yields a certificate")]
    Exhausted,
    #[error("search budget of {0} decompositions exhausted before the stream ended; existence undecided (raise ENC_LAB_BUDGET)")]
    BudgetExceeded(usize),
}

fn budget_from_env() -> anyhow::Result<usize> {
    match std::env::var("ENC_LAB_BUDGET") {
        Ok(text) => text
            .trim()
            .parse()
            .with_context(|| format!("ENC_LAB_BUDGET={text:?} is not a count")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load_inputs(
    example: Option<&str>,
    graph: Option<&Path>,
    targets: Option<&Path>,
) -> anyhow::Result<(CommutationGraph, Vec<EntropicExpression>)> {
    match (example, graph, targets) {
        (Some("chsh-tripartite"), _, _) => Ok((
            monogamy_engine::tripartite_joint_graph(),
            monogamy_engine::tripartite_targets(),
        )),
        (Some("fig1"), _, _) => Ok(chord_elimination_scenario()),
        (Some(other), _, _) => bail!("unknown example {other:?} (expected chsh-tripartite or fig1)"),
        (None, Some(graph_path), Some(targets_path)) => {
            let graph_text = std::fs::read_to_string(graph_path)
                .with_context(|| format!("reading {}", graph_path.display()))?;
            let joint: CommutationGraph = serde_json::from_str(&graph_text)
                .with_context(|| format!("parsing {}", graph_path.display()))?;
            let targets_text = std::fs::read_to_string(targets_path)
                .with_context(|| format!("reading {}", targets_path.display()))?;
            let targets: Vec<EntropicExpression> = serde_json::from_str(&targets_text)
                .with_context(|| format!("parsing {}", targets_path.display()))?;
            Ok((joint, targets))
        }
        _ => bail!("derive needs --example NAME or both --graph and --targets"),
    }
}

pub fn run(
    config: &RunConfig,
    example: Option<&str>,
    graph: Option<&Path>,
    targets: Option<&Path>,
) -> anyhow::Result<()> {
    let budget = budget_from_env()?;
    let (joint, target_list) = load_inputs(example, graph, targets)?;
    let outcome = derive_monogamy_with_budget(&joint, &target_list, budget)
        .context("running the certificate search")?;
    let cert = match outcome {
        SearchOutcome::Found(cert) => cert,
        SearchOutcome::Exhausted => return Err(SearchFailed::Exhausted.into()),
        SearchOutcome::BudgetExceeded => return Err(SearchFailed::BudgetExceeded(budget).into()),
    };
    let mut doc = serde_json::to_value(&cert).expect("serializable certificate");
    doc.as_object_mut()
        .expect("certificate serializes to an object")
        .insert("verified".to_string(), serde_json::json!(verify(&cert)));
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    emit(config.out.as_deref(), &text)
}
