//! General parity-check solution with a dephasing ancilla and noisy syndromes.
//!
//! Writing Q± = q_±ⁿ, each correction round after the first maps the pair of
//! corner coherences by the transfer matrix
//!
//! ```text
//! T = [[c_ξ Q₋, s_ξ Q₊],
//!      [s_ξ Q₋, c_ξ Q₊]]
//! ```
//!
//! so that R·e^{−iθ} = r^{n·rounds} e^{−ξt} [T^{rounds−1} υ]₀. T is applied
//! once per round: its entries are n-th powers of q_±, not q_± themselves.

use super::{syndrome_weights, GhzMixedState};
use crate::dual::{ComplexDual, DualComplexPolar};
use crate::error::Result;
use crate::kernels::{diagonal_kernel, round_factor};
use crate::params::{validate, SystemParams};

/// Relative eigenvalue gap below which T^k is formed by repeated squaring.
pub const DEGENERACY_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceData {
    /// r·e^{iφ}.
    pub round: DualComplexPolar,
    pub q_plus: DualComplexPolar,
    pub q_minus: DualComplexPolar,
    /// Eigenvalues of T, ordered so that |mu_plus| ≥ |mu_minus|.
    pub mu_plus: ComplexDual,
    pub mu_minus: ComplexDual,
    pub upsilon_plus: ComplexDual,
    pub upsilon_minus: ComplexDual,
    /// n·(rounds − 1).
    pub big_n: u64,
}

impl RecurrenceData {
    pub fn eigen_gap_is_resolved(&self) -> bool {
        let scale = self.mu_plus.norm().max(self.mu_minus.norm());
        (self.mu_plus.v - self.mu_minus.v).norm() > DEGENERACY_TOLERANCE * scale
    }
}

/// q_+ = (1−p)e^{iφ} + p e^{−iφ} in polar form.
fn q_plus(round: &DualComplexPolar, p: f64) -> DualComplexPolar {
    let (phi, dphi) = (round.phase, round.d_phase);
    let k = 1.0 - 2.0 * p;
    let (s, c) = phi.sin_cos();
    let a = 4.0 * p * (1.0 - p);
    let mod2 = 1.0 - a * s * s;
    DualComplexPolar::new(
        0.5 * (-a * s * s).ln_1p(),
        (k * s).atan2(c),
        -a * s * c * dphi / mod2,
        k * dphi / mod2,
    )
}

fn unit_phase(phase: f64, d_phase: f64) -> ComplexDual {
    DualComplexPolar::new(0.0, phase, 0.0, d_phase).to_complex_dual()
}

pub fn recurrence_data(params: &SystemParams) -> RecurrenceData {
    let n = params.n as f64;
    let round = round_factor(params.omega, params.gamma, params.tau);
    let qp = q_plus(&round, params.p);
    let qm = qp.conj();
    let anc = diagonal_kernel(params.xi, params.tau);
    let (c, s) = (anc.c, anc.s);

    let a = qm.powf(n).to_complex_dual();
    let b = qp.powf(n).to_complex_dual();
    let half_tr = (a + b).scale(0.5 * c);
    let disc = (a - b) * (a - b) * ComplexDual::constant((0.25 * c * c).into())
        + a * b * ComplexDual::constant((s * s).into());
    let sq = disc.sqrt();
    let (mut mu1, mut mu2) = (half_tr + sq, half_tr - sq);
    if mu2.norm() > mu1.norm() {
        std::mem::swap(&mut mu1, &mut mu2);
    }

    let em = unit_phase(-n * round.phase, -n * round.d_phase);
    let ep = em.conj();
    RecurrenceData {
        round,
        q_plus: qp,
        q_minus: qm,
        mu_plus: mu1,
        mu_minus: mu2,
        upsilon_plus: ep.scale(c) + em.scale(s),
        upsilon_minus: em.scale(c) + ep.scale(s),
        big_n: params.n as u64 * (params.rounds - 1),
    }
}

type Mat2 = [[ComplexDual; 2]; 2];
type Vec2 = [ComplexDual; 2];

fn matvec(m: &Mat2, v: &Vec2) -> Vec2 {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

fn matmul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ComplexDual::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Divides by a fixed positive constant and returns its log. The constant
/// is not differentiated, so value and derivative stay consistent.
fn renormalize<const K: usize>(entries: &mut [&mut ComplexDual; K]) -> f64 {
    let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return 0.0;
    }
    for z in entries.iter_mut() {
        **z = z.scale(1.0 / scale);
    }
    scale.ln()
}

/// First component of mᵏ·v in log-polar form, by repeated squaring.
pub(crate) fn power_apply(m: &Mat2, v: &Vec2, mut k: u64) -> DualComplexPolar {
    let (mut base, mut vec) = (*m, *v);
    let (mut ln_base, mut ln_vec) = (0.0, 0.0);
    {
        let [[a, b], [c, d]] = &mut base;
        ln_base += renormalize(&mut [a, b, c, d]);
    }
    while k > 0 {
        if k & 1 == 1 {
            vec = matvec(&base, &vec);
            ln_vec += ln_base;
            let [x, y] = &mut vec;
            ln_vec += renormalize(&mut [x, y]);
        }
        k >>= 1;
        if k > 0 {
            base = matmul(&base, &base);
            ln_base *= 2.0;
            let [[a, b], [c, d]] = &mut base;
            ln_base += renormalize(&mut [a, b, c, d]);
        }
    }
    DualComplexPolar::from_complex_dual(vec[0]).scale_ln(ln_vec)
}

fn transfer_matrix(data: &RecurrenceData, c: f64, s: f64, n: f64) -> Mat2 {
    let a = data.q_minus.powf(n).to_complex_dual();
    let b = data.q_plus.powf(n).to_complex_dual();
    [[a.scale(c), b.scale(s)], [a.scale(s), b.scale(c)]]
}

/// [T^k υ]₀ through the eigen-decomposition of T.
fn eigen_apply(t: &Mat2, data: &RecurrenceData, k: u64) -> DualComplexPolar {
    let ups: Vec2 = [data.upsilon_minus, data.upsilon_plus];
    let (mu1, mu2) = (data.mu_plus, data.mu_minus);
    let tv = matvec(t, &ups);
    // P₁υ = (T − μ₂)υ/(μ₁ − μ₂), P₂υ = υ − P₁υ.
    let p1 = (tv[0] - mu2 * ups[0]) / (mu1 - mu2);
    let p2 = ups[0] - p1;
    let m1 = DualComplexPolar::from_complex_dual(mu1);
    let ratio = DualComplexPolar::from_complex_dual(mu2)
        .div(&m1)
        .powf(k as f64)
        .to_complex_dual();
    DualComplexPolar::from_complex_dual(p1 + ratio * p2).mul(&m1.powf(k as f64))
}

/// R·e^{iθ} after `rounds` corrections, plus the syndrome weights.
pub fn solve_recurrence(params: &SystemParams) -> Result<GhzMixedState> {
    let params = validate(*params)?;
    let n = params.n as f64;
    let data = recurrence_data(&params);
    let k = params.rounds - 1;
    let prefactor = data
        .round
        .powf(n * params.rounds as f64)
        .scale_ln(-params.xi * params.t());
    // Strip the phase of r·e^{iφ}; it re-enters through q_± and υ.
    let prefactor = DualComplexPolar::new(prefactor.ln_modulus, 0.0, prefactor.d_ln_modulus, 0.0);

    let corner = if params.xi == 0.0 {
        // T is diagonal: [T^k υ]₀ = Q₋ᵏ e^{−inφ}.
        data.q_minus
            .powf(n * k as f64)
            .mul(&DualComplexPolar::new(0.0, -n * data.round.phase, 0.0, -n * data.round.d_phase))
    } else if k == 0 {
        DualComplexPolar::from_complex_dual(data.upsilon_minus)
    } else {
        let anc = diagonal_kernel(params.xi, params.tau);
        let t = transfer_matrix(&data, anc.c, anc.s, n);
        if data.eigen_gap_is_resolved() {
            eigen_apply(&t, &data, k)
        } else {
            power_apply(&t, &[data.upsilon_minus, data.upsilon_plus], k)
        }
    };
    Ok(GhzMixedState {
        n: params.n,
        amplitude: corner.mul(&prefactor).conj(),
        weights: syndrome_weights(params.n, params.p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use approx::assert_relative_eq;

    fn base() -> SystemParams {
        SystemParams {
            n: 3,
            omega: 0.2,
            gamma: 0.01,
            xi: 0.0,
            p: 0.0,
            tau: 1.0,
            rounds: 6,
        }
    }

    #[test]
    fn ideal_case_is_a_pure_power() {
        let p = base();
        let s = solve_recurrence(&p).unwrap();
        let rf = round_factor(p.omega, p.gamma, p.tau).powf(18.0);
        assert_relative_eq!(s.amplitude.ln_modulus, rf.ln_modulus, max_relative = 1e-12);
        assert_relative_eq!(s.amplitude.phase, rf.phase, max_relative = 1e-12);
        assert_relative_eq!(s.amplitude.d_ln_modulus, rf.d_ln_modulus, max_relative = 1e-12);
        assert_relative_eq!(s.amplitude.d_phase, rf.d_phase, max_relative = 1e-12);
    }

    #[test]
    fn q_plus_matches_definition() {
        let round = round_factor(0.7, 0.1, 1.3);
        let p = 0.06;
        let q = q_plus(&round, p).to_complex_dual().v;
        let phi = round.phase;
        let direct = Complex64::from_polar(1.0 - p, phi) + Complex64::from_polar(p, -phi);
        assert_relative_eq!(q.re, direct.re, max_relative = 1e-14);
        assert_relative_eq!(q.im, direct.im, max_relative = 1e-14);
        assert_eq!(q_plus(&round, 0.0).phase, phi);
    }

    #[test]
    fn noiseless_ancilla_gives_diagonal_transfer() {
        let d = recurrence_data(&SystemParams { p: 0.03, ..base() });
        let a = d.q_minus.powf(3.0).to_complex_dual().v;
        let b = d.q_plus.powf(3.0).to_complex_dual().v;
        let mus = [d.mu_plus.v, d.mu_minus.v];
        assert!(mus.iter().any(|m| (m - a).norm() < 1e-14));
        assert!(mus.iter().any(|m| (m - b).norm() < 1e-14));
        let qq = d.q_plus.mul(&d.q_minus).to_complex_dual().v;
        assert!(qq.im.abs() < 1e-15 && qq.re <= 1.0);
    }

    #[test]
    fn eigen_and_squaring_paths_agree() {
        let p = SystemParams {
            xi: 0.02,
            p: 0.06,
            omega: 0.5,
            gamma: 0.1,
            rounds: 9,
            ..base()
        };
        let data = recurrence_data(&p);
        assert!(data.eigen_gap_is_resolved());
        let anc = diagonal_kernel(p.xi, p.tau);
        let t = transfer_matrix(&data, anc.c, anc.s, 3.0);
        let e = eigen_apply(&t, &data, 8);
        let b = power_apply(&t, &[data.upsilon_minus, data.upsilon_plus], 8);
        assert_relative_eq!(e.ln_modulus, b.ln_modulus, max_relative = 1e-12);
        assert_relative_eq!(e.d_ln_modulus, b.d_ln_modulus, max_relative = 1e-10);
        assert_relative_eq!(e.d_phase, b.d_phase, max_relative = 1e-10);
        let dphase = (e.phase - b.phase).rem_euclid(std::f64::consts::TAU);
        assert!(!(1e-12..=std::f64::consts::TAU - 1e-12).contains(&dphase));
    }

    #[test]
    fn squaring_survives_huge_powers() {
        let p = SystemParams {
            xi: 1e-4,
            rounds: 1_000_000,
            ..base()
        };
        let s = solve_recurrence(&p).unwrap();
        assert!(s.amplitude.ln_modulus.is_finite());
        assert!(s.big_r() <= 1.0);
    }
}
