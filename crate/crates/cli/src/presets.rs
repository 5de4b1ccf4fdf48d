//! Named sweeps that regenerate the figure data.

use crate::config::{Axis, OutputFormat, Spacing, SweepConfig};
use crate::error::{CliError, Result};
use qecmetro::{Method, Scenario};
use std::path::PathBuf;

pub const PRESETS: [&str; 6] = ["fig2a", "fig2d", "fig3a", "fig3b", "fig3c", "fig4"];

const N_FIG23: u32 = 25;
const SIGNAL_RATIOS: [(f64, &str); 2] = [(20.0, "w20"), (0.05, "w0.05")];
const ROUND_COUNTS: [(u64, &str); 2] = [(1_000, "r1e3"), (1_000_000, "r1e6")];
const SENSING_TIMES: [(f64, &str); 3] = [(100.0, "gt1e2"), (1_000.0, "gt1e3"), (10_000.0, "gt1e4")];

/// (scenario, ξ/γ, p, file tag) for the three correction regimes.
const REGIMES: [(Scenario, f64, f64, &str); 3] = [
    (Scenario::ParityIdeal, 0.0, 0.0, "ideal"),
    (Scenario::ParityNoisyAncilla, 1e-4, 0.0, "noisy"),
    (Scenario::ParityImperfect, 0.0, 0.01, "imperfect"),
];

fn gamma_tau_sweep(regime: usize, ratio: f64, name: String) -> SweepConfig {
    let (scenario, xi_ratio, p, _) = REGIMES[regime];
    let gamma = 1.0;
    SweepConfig {
        scenario,
        n: N_FIG23,
        omega: ratio * gamma,
        gamma,
        xi: xi_ratio * gamma,
        p,
        tau: 1.0,
        rounds: 1,
        axis: Axis::GammaTau,
        start: 1e-6,
        stop: 1.0,
        points: 121,
        spacing: Spacing::Log,
        evaluators: vec![Method::Exact],
        output: Some(PathBuf::from(name)),
        format: OutputFormat::Csv,
        fixed_t: None,
    }
}

/// Q/τ² against γτ at fixed t/τ.
fn fig2(prefix: &str, regimes: &[usize]) -> Vec<SweepConfig> {
    let mut out = Vec::new();
    for &reg in regimes {
        for (ratio, wtag) in SIGNAL_RATIOS {
            for (rounds, rtag) in ROUND_COUNTS {
                let name = if regimes.len() == 1 {
                    format!("{prefix}_{wtag}_{rtag}.csv")
                } else {
                    format!("{prefix}_{}_{wtag}_{rtag}.csv", REGIMES[reg].3)
                };
                out.push(SweepConfig {
                    rounds,
                    ..gamma_tau_sweep(reg, ratio, name)
                });
            }
        }
    }
    out
}

/// Q/τ² against γτ at fixed γt.
fn fig3(prefix: &str, regime: usize) -> Vec<SweepConfig> {
    let mut out = Vec::new();
    for (ratio, wtag) in SIGNAL_RATIOS {
        for (gt, ttag) in SENSING_TIMES {
            let cfg = gamma_tau_sweep(regime, ratio, format!("{prefix}_{wtag}_{ttag}.csv"));
            out.push(SweepConfig {
                fixed_t: Some(gt / cfg.gamma),
                ..cfg
            });
        }
    }
    out
}

/// Single-qubit benchmark at ω/γ = 0.01 against t/τ.
fn fig4() -> Vec<SweepConfig> {
    let gamma = 1e6;
    let base = SweepConfig {
        scenario: Scenario::ParityGeneral,
        n: 1,
        omega: 0.01 * gamma,
        gamma,
        xi: 1.0 / 5e-4,
        p: 0.06,
        tau: 1e-6,
        rounds: 1,
        axis: Axis::TOverTau,
        start: 1.0,
        stop: 1e6,
        points: 121,
        spacing: Spacing::Log,
        evaluators: vec![Method::Exact],
        output: Some(PathBuf::from("fig4_today.csv")),
        format: OutputFormat::Csv,
        fixed_t: None,
    };
    let improved = SweepConfig {
        xi: 0.0,
        p: 0.001,
        output: Some(PathBuf::from("fig4_improved.csv")),
        ..base.clone()
    };
    let short_round = SweepConfig {
        tau: 0.1 / gamma,
        output: Some(PathBuf::from("fig4_improved_gt0.1.csv")),
        ..improved.clone()
    };
    vec![base, improved, short_round]
}

pub fn expand_preset(name: &str) -> Result<Vec<SweepConfig>> {
    Ok(match name {
        "fig2a" => fig2("fig2a", &[0]),
        "fig2d" => fig2("fig2d", &[0, 1, 2]),
        "fig3a" => fig3("fig3a", 0),
        "fig3b" => fig3("fig3b", 1),
        "fig3c" => fig3("fig3c", 2),
        "fig4" => fig4(),
        other => return Err(CliError::UnknownPreset(other.to_string())),
    })
}
