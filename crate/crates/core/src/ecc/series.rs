//! Truncated expansions of the parity-check QFI in γτ, ξ and p.

use crate::error::{QecError, Result};
use crate::kernels::round_factor;
use crate::params::{Method, QfiResult, Scenario, SystemParams};

/// f = 1 − 2γτ + 7γ²τ²/3 + 4γτ²/(3nt).
pub fn f_series(n: u32, gamma: f64, tau: f64, t: f64) -> f64 {
    let gt = gamma * tau;
    1.0 - 2.0 * gt + 7.0 * gt * gt / 3.0 + 4.0 * gamma * tau * tau / (3.0 * n as f64 * t)
}

/// ln r^{2n·rounds}.
fn ln_decay(params: &SystemParams) -> f64 {
    let rf = round_factor(params.omega, params.gamma, params.tau);
    2.0 * params.n as f64 * params.rounds as f64 * rf.ln_modulus
}

fn reject(scenario: Scenario, requirement: &'static str) -> QecError {
    QecError::ScenarioMismatch {
        scenario: scenario.as_str(),
        requirement,
    }
}

pub fn qfi_case1_series(params: &SystemParams) -> Result<QfiResult> {
    if params.xi != 0.0 || params.p != 0.0 {
        return Err(reject(Scenario::ParityIdeal, "xi = 0 and p = 0"));
    }
    let t = params.t();
    let f = f_series(params.n, params.gamma, params.tau, t);
    let q = params.heisenberg() * ln_decay(params).exp() * f;
    Ok(QfiResult::new(q, params, Scenario::ParityIdeal, Method::Series))
}

/// Horner evaluation of Σ c_k x^{2k}.
fn even_series(coeffs: &[f64], x: f64) -> f64 {
    let x2 = x * x;
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x2 + c)
}

const B1_SERIES: [f64; 12] = [
    2.0 / 3.0,
    2.0 / 15.0,
    16.0 / 315.0,
    -26.0 / 2835.0,
    104.0 / 155925.0,
    -172.0 / 6081075.0,
    512.0 / 638512875.0,
    -178.0 / 10854718875.0,
    472.0 / 1856156927625.0,
    -604.0 / 194896477400625.0,
    1504.0 / 49308808782358125.0,
    -916.0 / 3698160658676859375.0,
];

const B2_SERIES: [f64; 12] = [
    0.0,
    0.0,
    2.0 / 9.0,
    -2.0 / 45.0,
    2.0 / 525.0,
    -8.0 / 42525.0,
    4.0 / 654885.0,
    -2.0 / 14189175.0,
    2.0 / 820945125.0,
    -16.0 / 488462349375.0,
    4.0 / 11343181224375.0,
    -4.0 / 1286316750844125.0,
];

const B3_SERIES: [f64; 12] = [
    -4.0 / 3.0,
    -8.0 / 15.0,
    -32.0 / 105.0,
    208.0 / 2835.0,
    -208.0 / 31185.0,
    688.0 / 2027025.0,
    -1024.0 / 91216125.0,
    2848.0 / 10854718875.0,
    -944.0 / 206239658625.0,
    2416.0 / 38979295480125.0,
    -3008.0 / 4482618980214375.0,
    7328.0 / 1232720219558953125.0,
];

const SMALL_X: f64 = 1.0;

/// The three x = nωt brackets of g: coefficients of t, τ and γtτ.
pub fn g_brackets(x: f64) -> [f64; 3] {
    if x.abs() < SMALL_X {
        return [
            even_series(&B1_SERIES, x),
            even_series(&B2_SERIES, x),
            even_series(&B3_SERIES, x),
        ];
    }
    let (s, c) = x.sin_cos();
    let (s2, c2) = (2.0 * x).sin_cos();
    let x3 = x * x * x;
    [
        (x * (1.0 + 3.0 * c2) + (x * x - 2.0) * s2) / x3 + 2.0,
        2.0 * (x * c - s).powi(2) / (x * x),
        ((4.0 * x - 2.0 * x3) * c2 - (2.0 - 5.0 * x * x) * s2) / x3 - 4.0,
    ]
}

/// First-order ξ coefficient g of the noisy-ancilla QFI.
pub fn g_coefficient(params: &SystemParams) -> f64 {
    let t = params.t();
    let x = params.n as f64 * params.omega * t;
    let [b1, b2, b3] = g_brackets(x);
    b1 * t + b2 * params.tau + b3 * params.gamma * t * params.tau
}

/// [(2/3 − 7γτ)t, (5/2)(t + τ)].
pub fn g_bounds(params: &SystemParams) -> (f64, f64) {
    let t = params.t();
    (
        (2.0 / 3.0 - 7.0 * params.gamma * params.tau) * t,
        2.5 * (t + params.tau),
    )
}

pub fn qfi_case2_series(params: &SystemParams) -> Result<(QfiResult, (f64, f64))> {
    if params.p != 0.0 {
        return Err(reject(Scenario::ParityNoisyAncilla, "p = 0"));
    }
    let f = f_series(params.n, params.gamma, params.tau, params.t());
    let g = g_coefficient(params);
    let q = params.heisenberg() * ln_decay(params).exp() * (f - g * params.xi);
    Ok((
        QfiResult::new(q, params, Scenario::ParityNoisyAncilla, Method::Series),
        g_bounds(params),
    ))
}

/// ln q^{2n·rounds} with q² = q₊q₋ = 1 − 4p(1−p)sin²φ.
pub fn ln_q_decay(params: &SystemParams) -> f64 {
    let phi = round_factor(params.omega, params.gamma, params.tau).phase;
    let s = phi.sin();
    params.n as f64 * params.rounds as f64 * (-4.0 * params.p * (1.0 - params.p) * s * s).ln_1p()
}

pub fn qfi_case3_series(params: &SystemParams) -> Result<QfiResult> {
    if params.xi != 0.0 {
        return Err(reject(Scenario::ParityImperfect, "xi = 0"));
    }
    let (n, p, t) = (params.n as f64, params.p, params.t());
    let f = f_series(params.n, params.gamma, params.tau, t);
    let h = (1.0 - 2.0 * p).powi(2) * f + 4.0 * p * ((1.0 - p) / n + 1.0 - 2.0 * p) * params.tau / t;
    let q = params.heisenberg() * (ln_decay(params) + ln_q_decay(params)).exp() * h;
    Ok(QfiResult::new(q, params, Scenario::ParityImperfect, Method::Series))
}
