//! Closed form against the dense oracle on a fixed grid.

use qecmetro::oracle::qfi_numeric;
use qecmetro::{qfi_exact, Scenario, SystemParams};
use rayon::prelude::*;
use serde::Serialize;

pub const OMEGA_TAU: [f64; 3] = [0.05, 0.2, 0.5];
pub const GAMMA_TAU: [f64; 3] = [0.005, 0.02, 0.1];
pub const ROUNDS: [u64; 3] = [1, 4, 8];
pub const TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub params: SystemParams,
    pub exact: f64,
    pub oracle: f64,
    pub relative_error: f64,
}

/// (ξ/γ, p) exercised for a scenario.
pub fn noise_for(scenario: Scenario) -> (f64, f64) {
    match scenario {
        Scenario::ParityNoisyAncilla => (1e-4, 0.0),
        Scenario::ParityImperfect => (0.0, 0.06),
        Scenario::ParityGeneral => (1e-4, 0.06),
        _ => (0.0, 0.0),
    }
}

pub fn grid(n: u32, scenario: Scenario) -> Vec<SystemParams> {
    let (xi_ratio, p) = noise_for(scenario);
    let gamma = 1.0;
    let mut out = Vec::new();
    for rounds in ROUNDS {
        for wt in OMEGA_TAU {
            for gt in GAMMA_TAU {
                let tau = gt / gamma;
                out.push(SystemParams {
                    n,
                    omega: wt / tau,
                    gamma,
                    xi: xi_ratio * gamma,
                    p,
                    tau,
                    rounds,
                });
            }
        }
    }
    out
}

pub fn cross_check(n: u32, scenario: Scenario) -> qecmetro::Result<Vec<CheckRow>> {
    grid(n, scenario)
        .into_par_iter()
        .map(|params| {
            let exact = qfi_exact(&params, scenario)?.qfi;
            let oracle = qfi_numeric(&params, scenario)?.qfi;
            Ok(CheckRow {
                params,
                exact,
                oracle,
                relative_error: (exact - oracle).abs() / exact.abs().max(f64::MIN_POSITIVE),
            })
        })
        .collect()
}
