//! Repeated error correction: the general parity-check recurrence, its
//! three special-case expansions, the bit-flip code, and t_opt.

mod bitflip;
mod recurrence;
mod series;
mod topt;

pub use bitflip::{bitflip_corners, bitflip_state, qfi_bitflip, qfi_bitflip_truncated};
pub use recurrence::{recurrence_data, solve_recurrence, RecurrenceData, DEGENERACY_TOLERANCE};
pub use series::{
    f_series, g_bounds, g_coefficient, qfi_case1_series, qfi_case2_series, qfi_case3_series,
};
pub use topt::{t_opt, t_opt_numeric};

use crate::dual::DualComplexPolar;
use crate::noec::PURE_TOLERANCE;
use crate::params::{Method, QfiFlags, QfiResult, Scenario, SystemParams};

/// Rank-2-per-class GHZ-like state left after repeated correction.
///
/// Every class h of sensing strings carries eigenvalues
/// `weights[h]·(1 ± R)/2`; `amplitude` holds R·e^{iθ} with unwrapped θ.
#[derive(Debug, Clone, PartialEq)]
pub struct GhzMixedState {
    pub n: u32,
    pub amplitude: DualComplexPolar,
    /// Per-string weight (1−p)^{n−h}p^h for h = 0..=n.
    pub weights: Vec<f64>,
}

impl GhzMixedState {
    pub fn pure_weights(n: u32) -> Vec<f64> {
        let mut w = vec![0.0; n as usize + 1];
        w[0] = 1.0;
        w
    }

    pub fn big_r(&self) -> f64 {
        self.amplitude.modulus()
    }
    pub fn d_big_r(&self) -> f64 {
        self.amplitude.d_modulus()
    }
    pub fn theta(&self) -> f64 {
        self.amplitude.phase
    }
    pub fn d_theta(&self) -> f64 {
        self.amplitude.d_phase
    }

    /// Σ_h C(n,h)·weights[h].
    pub fn weight_total(&self) -> f64 {
        use statrs::function::factorial::ln_binomial;
        self.weights
            .iter()
            .enumerate()
            .map(|(h, w)| ln_binomial(self.n as u64, h as u64).exp() * w)
            .sum()
    }
}

/// `(1−p)^{n−h}p^h` for every h.
pub fn syndrome_weights(n: u32, p: f64) -> Vec<f64> {
    let (lq, lp) = ((-p).ln_1p(), p.ln());
    (0..=n)
        .map(|h| {
            crate::dual::mul_ln((n - h) as f64, lq).exp() * crate::dual::mul_ln(h as f64, lp).exp()
        })
        .collect()
}

/// R²(L̇²/(1−R²) + θ̇²) with L = ln R, so Ṙ²/(1−R²) + R²θ̇².
pub fn qfi_of_amplitude(amplitude: &DualComplexPolar) -> (f64, QfiFlags) {
    let mut flags = QfiFlags::default();
    if amplitude.is_zero() {
        return (0.0, flags);
    }
    let l = amplitude.ln_modulus;
    let r2 = (2.0 * l).exp();
    let gap = -(2.0 * l).exp_m1();
    let (dl, dth) = (amplitude.d_ln_modulus, amplitude.d_phase);
    let q = if gap < PURE_TOLERANCE {
        flags.pure_state_branch = true;
        r2 * dth * dth
    } else {
        r2 * (dl * dl / gap + dth * dth)
    };
    (q, flags)
}

pub fn qfi_from_state(state: &GhzMixedState, params: &SystemParams, scenario: Scenario) -> QfiResult {
    let (q, flags) = qfi_of_amplitude(&state.amplitude);
    QfiResult::new(q, params, scenario, Method::Exact).with_flags(flags)
}
