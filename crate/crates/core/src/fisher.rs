//! Spectral QFI for states made of 2×2 blocks, and the Fisher information of
//! the product measurement in the rotated X basis.

use crate::ecc::GhzMixedState;
use crate::error::{QecError, Result};
use crate::noec::HammingSpectrum;
use statrs::function::factorial::ln_binomial;

/// Blocks whose total weight is below this are skipped. Inside a block, an eigenvalue below
/// EIGEN_FLOOR/4 of the block weight is treated as zero, which is the same
/// cut as the rank-2 pure-state branch 1 − R² < 1e-14.
pub const EIGEN_FLOOR: f64 = 1e-14;
const NEGATIVE_TOLERANCE: f64 = 1e-12;

/// Eigen-pair of one 2×2 block, repeated `multiplicity` times.
///
/// The eigenvectors are `cos(χ/2)|k⟩ + sin(χ/2)e^{iθ}|k̄⟩` and its orthogonal
/// partner; GHZ-like blocks have χ = π/2, so `mixing_sin = 1`, `d_mixing = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPair {
    pub multiplicity: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub d_lambda_plus: f64,
    pub d_lambda_minus: f64,
    pub d_theta: f64,
    /// sin χ.
    pub mixing_sin: f64,
    /// ∂χ/∂ω.
    pub d_mixing: f64,
}

impl SpectralPair {
    pub fn ghz(multiplicity: f64, lambda: (f64, f64), d_lambda: (f64, f64), d_theta: f64) -> Self {
        Self {
            multiplicity,
            lambda_plus: lambda.0,
            lambda_minus: lambda.1,
            d_lambda_plus: d_lambda.0,
            d_lambda_minus: d_lambda.1,
            d_theta,
            mixing_sin: 1.0,
            d_mixing: 0.0,
        }
    }

    fn contribution(&self) -> f64 {
        let sum = self.lambda_plus + self.lambda_minus;
        if self.multiplicity * sum < EIGEN_FLOOR {
            return 0.0;
        }
        let mut q = 0.0;
        for (l, dl) in [
            (self.lambda_plus, self.d_lambda_plus),
            (self.lambda_minus, self.d_lambda_minus),
        ] {
            if l > 0.25 * EIGEN_FLOOR * sum {
                q += dl * dl / l;
            }
        }
        let diff = self.lambda_plus - self.lambda_minus;
        let s2 = self.mixing_sin * self.mixing_sin;
        q += diff * diff / sum * (self.d_mixing * self.d_mixing + s2 * self.d_theta * self.d_theta);
        self.multiplicity * q
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpectralDecomposition {
    pub pairs: Vec<SpectralPair>,
}

impl SpectralDecomposition {
    pub fn trace(&self) -> f64 {
        self.pairs
            .iter()
            .map(|p| p.multiplicity * (p.lambda_plus + p.lambda_minus))
            .sum()
    }

    /// Two-eigenvalue decomposition λ± = (1 ± R)/2 of a single GHZ pair.
    pub fn rank2(big_r: f64, d_big_r: f64, d_theta: f64) -> Self {
        Self {
            pairs: vec![SpectralPair::ghz(
                1.0,
                (0.5 * (1.0 + big_r), 0.5 * (1.0 - big_r)),
                (0.5 * d_big_r, -0.5 * d_big_r),
                d_theta,
            )],
        }
    }

    /// λ_{h,±} = w_h(1 ± R)/2 for each syndrome class.
    pub fn from_state(state: &GhzMixedState) -> Self {
        let (r, dr, dth) = (state.big_r(), state.d_big_r(), state.d_theta());
        let deficit = -state.amplitude.ln_modulus.exp_m1();
        let pairs = state
            .weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > 0.0)
            .map(|(h, &w)| {
                SpectralPair::ghz(
                    ln_binomial(state.n as u64, h as u64).exp(),
                    (0.5 * w * (1.0 + r), 0.5 * w * deficit),
                    (0.5 * w * dr, -0.5 * w * dr),
                    dth,
                )
            })
            .collect();
        Self { pairs }
    }

    /// Blocks {|j⟩, |j̄⟩} grouped by Hamming weight. Classes h and n − h
    /// describe the same blocks, so each class carries C(n,h)/2.
    pub fn from_hamming(spectrum: &HammingSpectrum) -> Self {
        let pairs = spectrum
            .classes
            .iter()
            .filter(|c| c.ln_s > f64::NEG_INFINITY)
            .map(|c| {
                let dr = c.d_r_class();
                SpectralPair::ghz(
                    0.5 * c.multiplicity(),
                    c.eigenvalues(),
                    (0.5 * dr, -0.5 * dr),
                    c.d_theta(),
                )
            })
            .collect();
        Self { pairs }
    }
}

/// Σλ̇²/λ + Σ(λ₊−λ₋)²/(λ₊+λ₋)·(χ̇² + sin²χ·θ̇²).
pub fn qfi_spectral(decomp: &SpectralDecomposition) -> Result<f64> {
    for p in &decomp.pairs {
        let lo = p.lambda_plus.min(p.lambda_minus);
        if lo < -NEGATIVE_TOLERANCE {
            return Err(QecError::NegativeEigenvalue(lo));
        }
    }
    Ok(decomp.pairs.iter().map(SpectralPair::contribution).sum())
}

/// Total phase α of the product measurement ⊗(|0⟩ ± e^{iα_q}|1⟩)/√2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PovmAngle {
    pub alpha: f64,
}

impl PovmAngle {
    pub fn new(alpha: f64) -> Self {
        Self { alpha }
    }
}

/// Fisher information of the parity outcome of the rotated product measurement
/// on a state whose coherence sits in the h = 0 class.
///
/// Outcome probabilities are (1 ± R cos(θ−α))/2, so the information is
/// (Ṙ cos(θ−α) − Rθ̇ sin(θ−α))² / (1 − R²cos²(θ−α)).
pub fn fisher_povm(state: &GhzMixedState, alpha: PovmAngle) -> f64 {
    fisher_closed_form(state, alpha, true)
}

/// Same numerator over the unsquared denominator 1 − R²cos(θ−α). Kept only
/// to document that it disagrees with the explicit outcome sum.
pub fn fisher_povm_as_printed(state: &GhzMixedState, alpha: PovmAngle) -> f64 {
    fisher_closed_form(state, alpha, false)
}

fn fisher_closed_form(state: &GhzMixedState, alpha: PovmAngle, squared: bool) -> f64 {
    let (r, dr, dth) = (state.big_r(), state.d_big_r(), state.d_theta());
    let (s, c) = (state.theta() - alpha.alpha).sin_cos();
    let num = dr * c - r * dth * s;
    let den = 1.0 - r * r * if squared { c * c } else { c };
    if den <= 0.0 {
        return 0.0;
    }
    num * num / den
}

/// Σ ṗ²/p over outcomes with p > 0.
pub fn fisher_from_probabilities(p: &[f64], dp: &[f64]) -> f64 {
    p.iter()
        .zip(dp)
        .filter(|(p, _)| **p > 0.0)
        .map(|(p, d)| d * d / p)
        .sum()
}
