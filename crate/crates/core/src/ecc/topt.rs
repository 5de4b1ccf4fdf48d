//! Optimal total sensing time for the ideal parity-check scheme.

use super::{qfi_of_amplitude, solve_recurrence};
use crate::error::{QecError, Result};
use crate::params::SystemParams;

/// t_opt ≈ 3/(2nγω²τ²), the maximizer of t²r^{2nt/τ} to leading order.
pub fn t_opt(params: &SystemParams) -> Result<f64> {
    if params.gamma == 0.0 {
        return Err(QecError::Unbounded("gamma = 0"));
    }
    if params.omega == 0.0 {
        return Err(QecError::Unbounded("omega = 0"));
    }
    if !(params.tau > 0.0) {
        return Err(QecError::InvalidParam {
            field: "tau",
            reason: "must be finite and > 0",
        });
    }
    let (w, tau) = (params.omega, params.tau);
    Ok(3.0 / (2.0 * params.n as f64 * params.gamma * w * w * tau * tau))
}

fn q1_at(params: &SystemParams, rounds: u64) -> f64 {
    let p = SystemParams {
        rounds: rounds.max(1),
        xi: 0.0,
        p: 0.0,
        ..*params
    };
    solve_recurrence(&p)
        .map(|s| qfi_of_amplitude(&s.amplitude).0)
        .unwrap_or(f64::NAN)
}

/// Argmax over integer rounds of the exact ideal-case QFI, by golden-section
/// search in ln(rounds) followed by a local integer scan. Returns t = rounds·τ.
pub fn t_opt_numeric(params: &SystemParams) -> Result<f64> {
    let guess = t_opt(params)? / params.tau;
    let f = |x: f64| q1_at(params, x.exp().round() as u64);
    let (mut a, mut b) = ((guess / 100.0).max(1.0).ln(), (guess * 100.0).max(2.0).ln());
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut c, mut d) = (b - g * (b - a), a + g * (b - a));
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a) < 1e-9 {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let centre = (0.5 * (a + b)).exp().round() as u64;
    let best = (centre.saturating_sub(3).max(1)..=centre + 3)
        .max_by(|&x, &y| q1_at(params, x).total_cmp(&q1_at(params, y)))
        .unwrap_or(centre);
    Ok(best as f64 * params.tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn base() -> SystemParams {
        SystemParams {
            n: 25,
            omega: 20.0,
            gamma: 1.0,
            xi: 0.0,
            p: 0.0,
            tau: 1e-3,
            rounds: 1,
        }
    }

    #[test]
    fn formula_value() {
        assert_relative_eq!(t_opt(&base()).unwrap(), 150.0, max_relative = 1e-12);
    }

    #[test]
    fn doubling_tau_quarters_the_optimum() {
        let a = t_opt(&base()).unwrap();
        let b = t_opt(&SystemParams { tau: 2e-3, ..base() }).unwrap();
        assert_relative_eq!(a / b, 4.0, max_relative = 1e-12);
    }

    #[test]
    fn unbounded_without_noise_or_signal() {
        assert!(t_opt(&SystemParams { gamma: 0.0, ..base() }).is_err());
        assert!(t_opt(&SystemParams { omega: 0.0, ..base() }).is_err());
    }

    #[test]
    fn numeric_argmax_is_near_the_formula() {
        let p = SystemParams {
            n: 5,
            omega: 5.0,
            gamma: 0.1,
            tau: 0.01,
            ..base()
        };
        let num = t_opt_numeric(&p).unwrap();
        let formula = t_opt(&p).unwrap();
        assert!((num / formula - 1.0).abs() < 0.1, "{num} vs {formula}");
    }
}
