//! Explicit outcome enumeration for the rotated product measurement.

use super::amplitude::AmplitudeState;
use super::numeric::{fd_step, scenario_state};
use crate::ecc::GhzMixedState;
use crate::error::Result;
use crate::fisher::fisher_from_probabilities;
use crate::params::{Scenario, SystemParams};
use ndarray::Array1;
use num_complex::Complex64;

/// Amplitudes of a corrected GHZ state and their ω-derivatives, laid out on
/// the sensing register plus (optionally) the ancilla.
pub fn ghz_amplitudes(state: &GhzMixedState, with_ancilla: bool) -> (AmplitudeState, AmplitudeState) {
    let n = state.n as usize;
    let m = n + usize::from(with_ancilla);
    let dim = 1usize << m;
    let full = (1usize << n) - 1;
    let corner = state.amplitude.conj().to_complex_dual();
    let mut a = Array1::zeros(dim);
    let mut b = Array1::zeros(dim);
    let mut db = Array1::zeros(dim);
    for j in 0..=full {
        let h = if with_ancilla { j.count_ones() } else { j.count_ones().min(n as u32 - j.count_ones()) };
        let w = state.weights[h as usize];
        if w == 0.0 {
            continue;
        }
        let (k, kb) = if with_ancilla { (j << 1, ((full ^ j) << 1) | 1) } else { (j, full ^ j) };
        if !with_ancilla && j > full ^ j {
            continue;
        }
        a[k] += 0.5 * w;
        a[kb] += 0.5 * w;
        b[k] += corner.v * (0.5 * w);
        b[kb] += corner.v.conj() * (0.5 * w);
        db[k] += corner.d * (0.5 * w);
        db[kb] += corner.d.conj() * (0.5 * w);
    }
    let value = AmplitudeState {
        a,
        b,
        m,
        ancilla: with_ancilla,
    };
    let deriv = AmplitudeState {
        a: Array1::zeros(dim),
        b: db,
        m,
        ancilla: with_ancilla,
    };
    (value, deriv)
}

/// Outcome probabilities of ⊗_q {(|0⟩ ± e^{iα/m}|1⟩)/√2} on all m qubits.
pub fn outcome_probabilities(state: &AmplitudeState, alpha: f64) -> Vec<f64> {
    let m = state.m;
    let dim = state.dim();
    let phase = Complex64::from_polar(1.0, -alpha / m as f64);
    let amp = |s: usize, k: usize| -> Complex64 {
        // ⟨s|k⟩ = Π_q ⟨s_q|k_q⟩, ⟨±|0⟩ = 1, ⟨±|1⟩ = ±e^{−iα_q}, up to 2^{−m/2}.
        let mut z = Complex64::new(1.0, 0.0);
        for q in 0..m {
            if (k >> q) & 1 == 1 {
                z *= if (s >> q) & 1 == 1 { -phase } else { phase };
            }
        }
        z
    };
    let norm = 1.0 / dim as f64;
    (0..dim)
        .map(|s| {
            let mut p = Complex64::new(0.0, 0.0);
            for k in 0..dim {
                if state.a[k] != 0.0 {
                    p += state.a[k];
                }
                if state.b[k] != Complex64::new(0.0, 0.0) {
                    let kb = state.complement(k);
                    p += amp(s, k) * state.b[k] * amp(s, kb).conj();
                }
            }
            p.re * norm
        })
        .collect()
}

/// Fisher information from the full 2^m-outcome distribution, given the
/// state and its ω-derivative in amplitude form.
pub fn povm_fisher_explicit(value: &AmplitudeState, derivative: &AmplitudeState, alpha: f64) -> f64 {
    let p = outcome_probabilities(value, alpha);
    let dp = outcome_probabilities(derivative, alpha);
    fisher_from_probabilities(&p, &dp)
}

/// Explicit-outcome Fisher information of an oracle state, with the
/// derivative taken by central differences at ω ± δ.
pub fn povm_fisher_numeric(params: &SystemParams, scenario: Scenario, alpha: f64) -> Result<f64> {
    let delta = fd_step(params.omega);
    let centre = scenario_state(params, scenario)?;
    let minus = scenario_state(&params.with_omega(params.omega - delta), scenario)?;
    let plus = scenario_state(&params.with_omega(params.omega + delta), scenario)?;
    let scale = 0.5 / delta;
    let derivative = AmplitudeState {
        a: (&plus.a - &minus.a) * scale,
        b: (&plus.b - &minus.b).mapv(|z| z * scale),
        ..centre.clone()
    };
    Ok(povm_fisher_explicit(&centre, &derivative, alpha))
}
