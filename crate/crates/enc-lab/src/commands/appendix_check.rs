//! Regeneration of the readout coefficient tables.

use anyhow::Context;
use pauli_readout::appendix_report;

use crate::config::RunConfig;
use crate::output::emit;

pub fn run(config: &RunConfig) -> anyhow::Result<()> {
    let report = appendix_report(config.theta).context("regenerating the tables")?;
    let mut body = String::new();
    body.push_str(&config.metadata("appendix-check"));
    body.push_str("label,index,reference,regenerated,abs_delta,note\n");
    for row in &report.rows {
        body.push_str(&format!(
            "{},{},{:.3},{:.6},{:.6},{}\n",
            row.label,
            row.index,
            row.printed,
            row.regenerated,
            row.deviation_printed,
            row.note.unwrap_or(""),
        ));
    }
    let summary = report.summary();
    body.push_str(&format!("# {summary}\n"));
    emit(config.out.as_deref(), &body)?;
    // keep the verdict visible when the table goes to a file
    if config.out.is_some() {
        println!("{summary}");
    }
    Ok(())
}
