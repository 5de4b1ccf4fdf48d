//! QFI of the dephased GHZ state without error correction.
//!
//! The density matrix splits into 2×2 blocks on {|j⟩, |j̄⟩}; block data
//! depend on j only through its Hamming weight h, so the 2ⁿ-term spectral sum
//! collapses to n + 1 weight classes with binomial multiplicities.

use crate::dual::{logaddexp, mul_ln, Dual, DualComplexPolar};
use crate::kernels::signal_kernel_scaled;
use crate::params::{Method, QfiFlags, QfiResult, Scenario, SystemParams};
use statrs::function::factorial::ln_binomial;

/// Threshold on 1 − ρ² below which a block is treated as pure.
pub const PURE_TOLERANCE: f64 = 1e-14;

/// Eigendata of one Hamming-weight class. `s` and `r` carry the e^{−nγt}
/// prefactor, so the block eigenvalues are `(s ± r)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HammingClass {
    pub h: u32,
    pub ln_multiplicity: f64,
    pub ln_s: f64,
    /// `r·e^{iθ}` with ω-derivatives.
    pub amplitude: DualComplexPolar,
}

impl HammingClass {
    pub fn multiplicity(&self) -> f64 {
        self.ln_multiplicity.exp()
    }
    pub fn s(&self) -> f64 {
        self.ln_s.exp()
    }
    pub fn r_class(&self) -> f64 {
        self.amplitude.modulus()
    }
    pub fn d_r_class(&self) -> f64 {
        self.amplitude.d_modulus()
    }
    pub fn theta(&self) -> f64 {
        self.amplitude.phase
    }
    pub fn d_theta(&self) -> f64 {
        self.amplitude.d_phase
    }
    /// Block eigenvalues `(λ₊, λ₋)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let (s, r) = (self.s(), self.r_class());
        (0.5 * (s + r), 0.5 * (s - r))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HammingSpectrum {
    pub n: u32,
    /// ln e^{−nγt}, already folded into every class.
    pub ln_prefactor: f64,
    pub classes: Vec<HammingClass>,
}

impl HammingSpectrum {
    /// Tr ρ. Each block {|j⟩, |j̄⟩} appears twice in the sum over j, hence ½.
    pub fn trace(&self) -> f64 {
        0.5 * self
            .classes
            .iter()
            .map(|c| (c.ln_multiplicity + c.ln_s).exp())
            .sum::<f64>()
    }
}

pub fn hamming_spectrum(params: &SystemParams, t: f64) -> HammingSpectrum {
    let n = params.n;
    let k = signal_kernel_scaled(params.omega, params.gamma, t);
    let xp = DualComplexPolar::from_complex_dual(k.x_plus);
    let xm = xp.conj();
    let y = DualComplexPolar::from_complex_dual(crate::dual::ComplexDual::from_real(k.y));

    let gt = params.gamma * t;
    let ln_c = (0.5 * (1.0 + (-2.0 * gt).exp())).ln();
    let ln_sh = (-0.5 * (-2.0 * gt).exp_m1()).ln();

    let classes = (0..=n)
        .map(|h| {
            let (a, b) = ((n - h) as f64, h as f64);
            let ln_s = logaddexp(
                Dual::constant(mul_ln(a, ln_c) + mul_ln(b, ln_sh)),
                Dual::constant(mul_ln(b, ln_c) + mul_ln(a, ln_sh)),
            )
            .v;
            let amplitude = xp.powf(a).mul(&y.powf(b)).add(&xm.powf(b).mul(&y.powf(a)));
            HammingClass {
                h,
                ln_multiplicity: ln_binomial(n as u64, h as u64),
                ln_s,
                amplitude,
            }
        })
        .collect();
    HammingSpectrum {
        n,
        ln_prefactor: -(n as f64) * gt,
        classes,
    }
}

/// Sum over classes of the population and coherence terms of the spectral QFI.
pub fn qfi_from_spectrum(spectrum: &HammingSpectrum) -> (f64, QfiFlags) {
    let mut flags = QfiFlags::default();
    let mut q = 0.0;
    for c in &spectrum.classes {
        let ln_w = c.ln_multiplicity + c.ln_s;
        if ln_w == f64::NEG_INFINITY || c.amplitude.is_zero() {
            continue;
        }
        let ln_rho = c.amplitude.ln_modulus - c.ln_s;
        let rho2 = (2.0 * ln_rho).exp();
        let gap = -(2.0 * ln_rho).exp_m1();
        let dl = c.amplitude.d_ln_modulus;
        let dth = c.amplitude.d_phase;
        let term = if gap < PURE_TOLERANCE {
            flags.pure_state_branch = true;
            dth * dth
        } else {
            dl * dl / gap + dth * dth
        };
        q += 0.5 * ln_w.exp() * rho2 * term;
    }
    (q, flags)
}

pub fn qfi_noec_exact(params: &SystemParams, t: f64) -> QfiResult {
    let (q, flags) = qfi_from_spectrum(&hamming_spectrum(params, t));
    result(q, params, t, Method::Exact).with_flags(flags)
}

/// Short-time expansion n²t²(1 − (2 − 4/(3n))γt).
pub fn qfi_noec_taylor(params: &SystemParams, t: f64) -> QfiResult {
    let n = params.n as f64;
    let q = n * n * t * t * (1.0 - (2.0 - 4.0 / (3.0 * n)) * params.gamma * t);
    result(q, params, t, Method::Series)
}

fn result(q: f64, params: &SystemParams, t: f64, method: Method) -> QfiResult {
    let nt = params.n as f64 * t;
    QfiResult {
        qfi: q,
        normalized: q / (nt * nt),
        scenario: Scenario::NoEc,
        method,
        flags: QfiFlags::default(),
    }
}
