//! Sweeps, figure presets and oracle cross-checks on top of `qecmetro`.

pub mod config;
pub mod crosscheck;
pub mod error;
pub mod output;
pub mod presets;
pub mod sweep;

pub use config::{Axis, OutputFormat, Spacing, SweepConfig};
pub use error::{CliError, Result};
pub use output::{write_csv, write_json, write_rows, CSV_HEADER};
pub use presets::{expand_preset, PRESETS};
pub use sweep::{run_sweep, Row};

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

/// Runs a preset and writes one file per config under `dir`.
pub fn run_preset(name: &str, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for cfg in expand_preset(name)? {
        let path = dir.join(cfg.output.as_ref().expect("presets name their outputs"));
        let rows = run_sweep(&cfg);
        let mut out = BufWriter::new(File::create(&path)?);
        write_rows(&mut out, &rows, cfg.format)?;
        out.flush()?;
        written.push(path);
    }
    Ok(written)
}
