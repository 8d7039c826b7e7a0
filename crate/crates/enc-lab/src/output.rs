use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;

/// Writes the artifact to the configured sink: a file when `--out` is
/// given, stdout otherwise.
pub fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes()).context("writing stdout")
        }
    }
}

/// Fixed-point formatting with six significant digits and a dot decimal
/// separator. Precision is capped so pathological magnitudes stay bounded.
pub fn sig6(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    if x == 0.0 {
        return "0.00000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let precision = (5 - magnitude).clamp(0, 12) as usize;
    format!("{x:.precision$}")
}
