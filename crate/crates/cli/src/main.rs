use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use qecmetro::ecc::{t_opt, t_opt_numeric};
use qecmetro::{Scenario, SystemParams};
use qecmetro_cli::crosscheck::{cross_check, TOLERANCE};
use qecmetro_cli::{run_preset, run_sweep, write_rows, SweepConfig};
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "qecmetro", version, about = "QFI of error-corrected GHZ phase estimation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a parameter sweep described by a JSON config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Regenerate one figure's data set into a directory.
    Preset {
        name: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Compare the closed form against the dense oracle on the check grid.
    Validate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        scenario: Scenario,
    },
    /// Optimal total sensing time for the ideal parity-check scheme.
    Topt {
        #[arg(long)]
        params: PathBuf,
    },
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Sweep { config } => {
            let text = fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = SweepConfig::from_json(&text)?;
            let rows = run_sweep(&cfg);
            for r in rows.iter().filter_map(|r| r.error.as_ref()) {
                eprintln!("warning: {r}");
            }
            match &cfg.output {
                Some(path) => {
                    let mut out = BufWriter::new(File::create(path)?);
                    write_rows(&mut out, &rows, cfg.format)?;
                    out.flush()?;
                }
                None => write_rows(&mut io::stdout().lock(), &rows, cfg.format)?,
            }
        }
        Command::Preset { name, out } => {
            for path in run_preset(&name, &out)? {
                println!("{}", path.display());
            }
        }
        Command::Validate { n, scenario } => {
            let rows = cross_check(n, scenario)?;
            println!("omega_tau,gamma_tau,rounds,exact,oracle,relative_error");
            for r in &rows {
                let p = &r.params;
                println!(
                    "{},{},{},{:.16e},{:.16e},{:.3e}",
                    p.omega * p.tau,
                    p.gamma * p.tau,
                    p.rounds,
                    r.exact,
                    r.oracle,
                    r.relative_error
                );
            }
            let worst = rows.iter().map(|r| r.relative_error).fold(0.0, f64::max);
            eprintln!("worst relative error {worst:.3e} over {} points", rows.len());
            if worst >= TOLERANCE {
                bail!("closed form and oracle differ by more than {TOLERANCE:e}");
            }
        }
        Command::Topt { params } => {
            let text = fs::read_to_string(&params).with_context(|| format!("reading {}", params.display()))?;
            let p: SystemParams = serde_json::from_str(&text)?;
            let formula = t_opt(&p)?;
            let numeric = t_opt_numeric(&p)?;
            let report = serde_json::json!({
                "t_opt_formula": formula,
                "t_opt_numeric": numeric,
                "rounds_numeric": (numeric / p.tau).round(),
                "relative_difference": (numeric - formula).abs() / formula,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(())
}
