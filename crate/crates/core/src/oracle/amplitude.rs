//! Amplitude-vector representation of the structured density matrix and its
//! evolution and correction maps.
//!
//! Basis index bits run most-significant-first over the qubits, so qubit 0 is
//! the top bit and an ancilla, when present, is the lowest bit.

use super::expm::{expm, expm_real};
use crate::error::{QecError, Result};
use ndarray::{Array1, Array2};
use num_complex::Complex64;

/// Largest qubit count the dense oracle accepts.
pub const MAX_QUBITS: usize = 12;

/// ρ_{k,k} = a_k and ρ_{k,k̄} = b_k with k̄ the bitwise complement of k.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeState {
    pub a: Array1<f64>,
    pub b: Array1<Complex64>,
    pub m: usize,
    pub ancilla: bool,
}

impl AmplitudeState {
    /// (|0…0⟩ + |1…1⟩)/√2 on m qubits.
    pub fn ghz(m: usize, ancilla: bool) -> Self {
        let dim = 1usize << m;
        let mut a = Array1::zeros(dim);
        let mut b = Array1::zeros(dim);
        a[0] = 0.5;
        a[dim - 1] = 0.5;
        b[0] = Complex64::new(0.5, 0.0);
        b[dim - 1] = Complex64::new(0.5, 0.0);
        Self { a, b, m, ancilla }
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn complement(&self, k: usize) -> usize {
        k ^ (self.dim() - 1)
    }

    pub fn sensing_qubits(&self) -> usize {
        self.m - usize::from(self.ancilla)
    }

    /// Largest violation of trace, hermiticity and block positivity.
    pub fn invariant_violation(&self) -> f64 {
        let mut worst = (self.a.sum() - 1.0).abs();
        for k in 0..self.dim() {
            let kb = self.complement(k);
            worst = worst.max((self.b[kb] - self.b[k].conj()).norm());
            let bound = (self.a[k] * self.a[kb]).max(0.0).sqrt();
            worst = worst.max(self.b[k].norm() - bound);
            worst = worst.max(-self.a[k]);
        }
        worst
    }

    /// Dense 2^m × 2^m density matrix.
    pub fn density_matrix(&self) -> Array2<Complex64> {
        let dim = self.dim();
        let mut rho = Array2::zeros((dim, dim));
        for k in 0..dim {
            rho[[k, k]] += Complex64::new(self.a[k], 0.0);
            rho[[k, self.complement(k)]] += self.b[k];
        }
        rho
    }
}

/// Generators of the diagonal (`a`) and anti-diagonal (`b`) amplitude flows.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorPair {
    pub a: Array2<f64>,
    pub b: Array2<Complex64>,
    pub m: usize,
    pub ancilla: bool,
}

/// Sums of single-qubit blocks [[−ρ, ρ],[ρ, −ρ]] and
/// [[−iω−ρ, ρ],[ρ, iω−ρ]], with ρ = γ on sensing qubits and ρ = ξ, ω = 0 on
/// the ancilla.
pub fn build_generators(n: usize, omega: f64, gamma: f64, xi: f64, with_ancilla: bool) -> Result<GeneratorPair> {
    let m = n + usize::from(with_ancilla);
    if m > MAX_QUBITS {
        return Err(QecError::DimensionGuard {
            qubits: m,
            limit: MAX_QUBITS,
        });
    }
    let dim = 1usize << m;
    let mut a = Array2::<f64>::zeros((dim, dim));
    let mut b = Array2::<Complex64>::zeros((dim, dim));
    for q in 0..m {
        let sensing = q < n;
        let rate = if sensing { gamma } else { xi };
        let w = if sensing { omega } else { 0.0 };
        let bit = 1usize << (m - 1 - q);
        for k in 0..dim {
            let sign = if k & bit == 0 { -1.0 } else { 1.0 };
            a[[k, k]] -= rate;
            a[[k ^ bit, k]] += rate;
            b[[k, k]] += Complex64::new(-rate, sign * w);
            b[[k ^ bit, k]] += Complex64::new(rate, 0.0);
        }
    }
    Ok(GeneratorPair {
        a,
        b,
        m,
        ancilla: with_ancilla,
    })
}

/// e^{Aτ} and e^{Bτ} for a generator pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Propagator {
    pub ea: Array2<f64>,
    pub eb: Array2<Complex64>,
}

impl Propagator {
    pub fn new(gen: &GeneratorPair, tau: f64) -> Self {
        Self {
            ea: expm_real(&(&gen.a * tau)),
            eb: expm(&gen.b.mapv(|z| z * tau)),
        }
    }

    pub fn apply(&self, state: &AmplitudeState) -> AmplitudeState {
        AmplitudeState {
            a: self.ea.dot(&state.a),
            b: self.eb.dot(&state.b),
            ..state.clone()
        }
    }
}

pub fn evolve(state: &AmplitudeState, gen: &GeneratorPair, tau: f64) -> AmplitudeState {
    Propagator::new(gen, tau).apply(state)
}

/// Parity-check correction matrix on n sensing qubits plus ancilla: each
/// sensing bit is set equal to the ancilla bit, except that a wrong syndrome
/// (probability p, independently per qubit) leaves it opposite.
pub fn parity_check_matrix(n: usize, p: f64) -> Array2<f64> {
    let dim = 1usize << (n + 1);
    Array2::from_shape_fn((dim, dim), |(j, k)| {
        if (j ^ k) & 1 == 1 {
            return 0.0;
        }
        let c = j & 1;
        (1..=n)
            .map(|q| if (j >> q) & 1 == c { 1.0 - p } else { p })
            .product()
    })
}

pub fn apply_parity_check(state: &AmplitudeState, p: f64) -> Result<AmplitudeState> {
    if !state.ancilla {
        return Err(QecError::MissingAncilla);
    }
    let n = state.m - 1;
    // Columns of E depend only on the ancilla bit, so E·v needs only the two
    // ancilla-resolved totals of v.
    let mut a_tot = [0.0; 2];
    let mut b_tot = [Complex64::new(0.0, 0.0); 2];
    for k in 0..state.dim() {
        a_tot[k & 1] += state.a[k];
        b_tot[k & 1] += state.b[k];
    }
    let weight = |j: usize| -> f64 {
        let c = j & 1;
        (1..=n)
            .map(|q| if (j >> q) & 1 == c { 1.0 - p } else { p })
            .product()
    };
    let a = Array1::from_shape_fn(state.dim(), |j| weight(j) * a_tot[j & 1]);
    let b = Array1::from_shape_fn(state.dim(), |j| b_tot[j & 1] * weight(j));
    Ok(AmplitudeState {
        a,
        b,
        ..state.clone()
    })
}

/// Majority vote: every string is sent to the nearer of |0…0⟩, |1…1⟩.
pub fn apply_bitflip_code(state: &AmplitudeState) -> Result<AmplitudeState> {
    let n = state.m;
    if state.ancilla || n.is_multiple_of(2) {
        return Err(QecError::ScenarioMismatch {
            scenario: "bitflip",
            requirement: "odd n and no ancilla",
        });
    }
    let last = state.dim() - 1;
    let mut a = Array1::zeros(state.dim());
    let mut b = Array1::zeros(state.dim());
    for k in 0..state.dim() {
        let target = if (k.count_ones() as usize) * 2 < n { 0 } else { last };
        a[target] += state.a[k];
        b[target] += state.b[k];
    }
    Ok(AmplitudeState {
        a,
        b,
        ..state.clone()
    })
}
