//! Finite-difference QFI of oracle states.

use super::amplitude::{apply_bitflip_code, apply_parity_check, build_generators, AmplitudeState, Propagator};
use crate::error::Result;
use crate::fisher::{qfi_spectral, SpectralDecomposition, SpectralPair};
use crate::params::{validate, Method, QfiFlags, QfiResult, Scenario, SystemParams};
use std::f64::consts::{PI, TAU};

/// Oracle state for a scenario at the given parameters.
pub fn scenario_state(params: &SystemParams, scenario: Scenario) -> Result<AmplitudeState> {
    let params = validate(*params)?;
    scenario.check(&params)?;
    let n = params.n as usize;
    match scenario {
        Scenario::NoEc => {
            let g = build_generators(n, params.omega, params.gamma, 0.0, false)?;
            Ok(Propagator::new(&g, params.t()).apply(&AmplitudeState::ghz(n, false)))
        }
        Scenario::Bitflip => {
            let g = build_generators(n, params.omega, params.gamma, 0.0, false)?;
            let prop = Propagator::new(&g, params.tau);
            let mut s = AmplitudeState::ghz(n, false);
            for _ in 0..params.rounds {
                s = apply_bitflip_code(&prop.apply(&s))?;
            }
            Ok(s)
        }
        _ => {
            let g = build_generators(n, params.omega, params.gamma, params.xi, true)?;
            let prop = Propagator::new(&g, params.tau);
            let mut s = AmplitudeState::ghz(n + 1, true);
            for _ in 0..params.rounds {
                s = apply_parity_check(&prop.apply(&s), params.p)?;
            }
            Ok(s)
        }
    }
}

/// Finite-difference step in ω.
pub fn fd_step(omega: f64) -> f64 {
    (1e-6f64).max(1e-6 * omega.abs())
}

struct Block {
    lp: f64,
    lm: f64,
    theta: f64,
    chi: f64,
}

fn blocks(s: &AmplitudeState) -> Vec<Block> {
    (0..s.dim())
        .filter(|&k| k < s.complement(k))
        .map(|k| {
            let (a0, a1, b) = (s.a[k], s.a[s.complement(k)], s.b[k]);
            let mean = 0.5 * (a0 + a1);
            let h = 0.5 * (a0 - a1);
            let rad = h.hypot(b.norm());
            Block {
                lp: mean + rad,
                lm: mean - rad,
                theta: -b.arg(),
                chi: b.norm().atan2(h),
            }
        })
        .collect()
}

fn wrap(x: f64) -> f64 {
    (x + PI).rem_euclid(TAU) - PI
}

/// Spectral decomposition with central-difference derivatives. The flag is
/// set when a populated block has a relative eigenvalue gap below 10δ.
pub fn spectral_from_states(
    minus: &AmplitudeState,
    centre: &AmplitudeState,
    plus: &AmplitudeState,
    delta: f64,
) -> (SpectralDecomposition, bool) {
    let (bm, b0, bp) = (blocks(minus), blocks(centre), blocks(plus));
    let mut degenerate = false;
    let pairs = b0
        .iter()
        .zip(bm.iter().zip(&bp))
        .map(|(c, (m, p))| {
            let weight = c.lp + c.lm;
            if weight > crate::fisher::EIGEN_FLOOR && c.lp - c.lm < 10.0 * delta * weight {
                degenerate = true;
            }
            SpectralPair {
                multiplicity: 1.0,
                lambda_plus: c.lp,
                lambda_minus: c.lm,
                d_lambda_plus: (p.lp - m.lp) / (2.0 * delta),
                d_lambda_minus: (p.lm - m.lm) / (2.0 * delta),
                d_theta: wrap(p.theta - m.theta) / (2.0 * delta),
                mixing_sin: c.chi.sin(),
                d_mixing: (p.chi - m.chi) / (2.0 * delta),
            }
        })
        .collect();
    (SpectralDecomposition { pairs }, degenerate)
}

/// QFI from central differences of oracle states at ω ± δ.
pub fn qfi_numeric(params: &SystemParams, scenario: Scenario) -> Result<QfiResult> {
    let params = validate(*params)?;
    let delta = fd_step(params.omega);
    let centre = scenario_state(&params, scenario)?;
    let minus = scenario_state(&params.with_omega(params.omega - delta), scenario)?;
    let plus = scenario_state(&params.with_omega(params.omega + delta), scenario)?;
    let (decomp, degenerate) = spectral_from_states(&minus, &centre, &plus, delta);
    let q = qfi_spectral(&decomp)?;
    Ok(QfiResult::new(q, &params, scenario, Method::Oracle).with_flags(QfiFlags {
        pure_state_branch: false,
        degenerate_spectrum: degenerate,
    }))
}
