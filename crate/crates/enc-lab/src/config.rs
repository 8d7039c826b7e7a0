use std::path::PathBuf;

use enc_inequality::ChshForm;

/// Settings shared by every subcommand; defaults reproduce the standard
/// scenario. All fields are echoed into output metadata so artifacts are
/// self-describing.
pub struct RunConfig {
    pub theta: f64,
    pub form: ChshForm,
    pub grid: usize,
    pub out: Option<PathBuf>,
    pub noise: f64,
    pub seed: u64,
}

impl RunConfig {
    /// Two comment lines recording the command and every setting.
    pub fn metadata(&self, command: &str) -> String {
        format!(
            "# enc-lab v{} {}\n# theta={:.6} form={} noise={:.6} seed={} grid={}\n",
            env!("CARGO_PKG_VERSION"),
            command,
            self.theta,
            self.form.name(),
            self.noise,
            self.seed,
            self.grid,
        )
    }
}
