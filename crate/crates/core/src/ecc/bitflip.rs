//! n-qubit bit-flip (majority-vote) code without an ancilla.

use super::recurrence::power_apply;
use super::{qfi_of_amplitude, GhzMixedState};
use crate::dual::{ComplexDual, DualComplexPolar};
use crate::error::{QecError, Result};
use crate::kernels::signal_kernel_scaled;
use crate::params::{validate, Method, QfiResult, Scenario, SystemParams};
use num_complex::Complex64;
use statrs::function::factorial::binomial;

/// Corner entries of the per-round map on the two logical coherences:
/// `[[eta_minus, zeta_plus], [zeta_minus, eta_plus]]`, e^{−nγτ} included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BitflipCorners {
    pub eta_minus: ComplexDual,
    pub eta_plus: ComplexDual,
    pub zeta_minus: ComplexDual,
    pub zeta_plus: ComplexDual,
}

fn cpow(z: ComplexDual, k: u32) -> ComplexDual {
    let mut out = ComplexDual::constant(Complex64::new(1.0, 0.0));
    for _ in 0..k {
        out = out * z;
    }
    out
}

pub fn bitflip_corners(params: &SystemParams) -> BitflipCorners {
    let n = params.n;
    let k = signal_kernel_scaled(params.omega, params.gamma, params.tau);
    let y = ComplexDual::from_real(k.y);
    let sum = |x: ComplexDual, majority: bool| {
        (0..=n / 2).fold(ComplexDual::zero(), |acc, m| {
            let c = binomial(n as u64, m as u64);
            let term = if majority {
                cpow(x, n - m) * cpow(y, m)
            } else {
                cpow(x, m) * cpow(y, n - m)
            };
            acc + term.scale(c)
        })
    };
    BitflipCorners {
        eta_minus: sum(k.x_minus, true),
        eta_plus: sum(k.x_plus, true),
        zeta_minus: sum(k.x_minus, false),
        zeta_plus: sum(k.x_plus, false),
    }
}

fn check_odd(params: &SystemParams) -> Result<()> {
    if params.n.is_multiple_of(2) {
        return Err(QecError::ScenarioMismatch {
            scenario: Scenario::Bitflip.as_str(),
            requirement: "odd n",
        });
    }
    Ok(())
}

/// State after `rounds` evolve-and-correct cycles, from the full corner map.
pub fn bitflip_state(params: &SystemParams) -> Result<GhzMixedState> {
    let params = validate(*params)?;
    check_odd(&params)?;
    let c = bitflip_corners(&params);
    let m = [[c.eta_minus, c.zeta_plus], [c.zeta_minus, c.eta_plus]];
    let half = ComplexDual::constant(Complex64::new(0.5, 0.0));
    let corner = power_apply(&m, &[half, half], params.rounds).scale_ln(std::f64::consts::LN_2);
    Ok(GhzMixedState {
        n: params.n,
        amplitude: corner.conj(),
        weights: GhzMixedState::pure_weights(params.n),
    })
}

pub fn qfi_bitflip(params: &SystemParams) -> Result<QfiResult> {
    let state = bitflip_state(params)?;
    let (q, flags) = qfi_of_amplitude(&state.amplitude);
    Ok(QfiResult::new(q, params, Scenario::Bitflip, Method::Exact).with_flags(flags))
}

/// QFI with the off-diagonal ζ entries moved onto the diagonal, which makes the
/// map diagonal with entries (η∓ + ζ∓).
pub fn qfi_bitflip_truncated(params: &SystemParams) -> Result<QfiResult> {
    let params = validate(*params)?;
    check_odd(&params)?;
    let c = bitflip_corners(&params);
    let amp = DualComplexPolar::from_complex_dual(c.eta_plus + c.zeta_plus).powf(params.rounds as f64);
    let (q, flags) = qfi_of_amplitude(&amp);
    Ok(QfiResult::new(q, &params, Scenario::Bitflip, Method::Series).with_flags(flags))
}
