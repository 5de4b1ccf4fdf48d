//! Single-interval kernels: the sensing-qubit signal kernel, the diagonal
//! dephasing kernels, and the per-qubit round factor r·e^{iφ}.
//!
//! Everything is written in terms of the entire functions
//! `C(w) = cos √w`, `P(w) = sin √w / √w` and `P'(w)` of `w = (Δτ)²`, which
//! stay real and smooth through `Δ = 0` and into the hyperbolic regime.

use crate::dual::{ComplexDual, Dual, DualComplexPolar};
use num_complex::Complex64;
use std::sync::OnceLock;

/// Below this |w| the power series is used.
const SERIES_RADIUS: f64 = 1.0;
const SERIES_TERMS: usize = 20;
const GL_POINTS: usize = 20;

/// `e^{-shift}·(C(w), P(w), P'(w))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntireValues {
    pub c: f64,
    pub p: f64,
    pub dp: f64,
}

pub fn entire(w: f64, shift: f64) -> EntireValues {
    if w.abs() < SERIES_RADIUS {
        let (mut c, mut p, mut dp) = (0.0, 0.0, 0.0);
        let (mut tc, mut tp) = (1.0, 1.0);
        // tc = (−w)^k/(2k)!, tp = (−w)^k/(2k+1)!
        for k in 0..SERIES_TERMS {
            c += tc;
            p += tp;
            let kf = k as f64;
            let next_c = -tc * w / ((2.0 * kf + 1.0) * (2.0 * kf + 2.0));
            let next_p = -tp * w / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
            // d/dw of next_p term: (k+1)(−1)^{k+1} w^k/(2k+3)!
            dp += -(kf + 1.0) * tp / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
            tc = next_c;
            tp = next_p;
        }
        let e = (-shift).exp();
        return EntireValues {
            c: c * e,
            p: p * e,
            dp: dp * e,
        };
    }
    let s = w.abs().sqrt();
    let (c, p) = if w > 0.0 {
        let e = (-shift).exp();
        (s.cos() * e, s.sin() / s * e)
    } else {
        let ep = (s - shift).exp();
        let em = (-s - shift).exp();
        (0.5 * (ep + em), 0.5 * (ep - em) / s)
    };
    EntireValues {
        c,
        p,
        dp: (c - p) / (2.0 * w),
    }
}

fn gauss_legendre() -> &'static [(f64, f64); GL_POINTS] {
    static NODES: OnceLock<[(f64, f64); GL_POINTS]> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = GL_POINTS;
        let mut out = [(0.0, 0.0); GL_POINTS];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        out
    })
}

/// `e^{-shift}·(P(a) − P(b))/(a − b)`, without cancellation for close arguments.
pub fn divided_difference(a: f64, b: f64, shift: f64) -> f64 {
    if (a - b).abs() > 1.0 {
        return (entire(a, shift).p - entire(b, shift).p) / (a - b);
    }
    let mid = 0.5 * (a + b);
    let half = 0.5 * (a - b);
    0.5 * gauss_legendre()
        .iter()
        .map(|&(x, wt)| wt * entire(mid + half * x, shift).dp)
        .sum::<f64>()
}

/// cos(Δτ) and sin(Δτ)/Δ with Δ² = ω² − γ², plus their ω-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigDelta {
    pub cos_term: f64,
    pub sinc_term: f64,
    pub d_cos_term: f64,
    pub d_sinc_term: f64,
}

pub fn trig_delta(omega: f64, gamma: f64, tau: f64) -> TrigDelta {
    let (u, v) = (gamma * tau, omega * tau);
    let e = entire((v - u) * (v + u), 0.0);
    TrigDelta {
        cos_term: e.c,
        sinc_term: tau * e.p,
        d_cos_term: -omega * tau * tau * e.p,
        d_sinc_term: 2.0 * omega * tau * tau * tau * e.dp,
    }
}

/// Kernel entries `x_∓ = cos(Δτ) ∓ iω sin(Δτ)/Δ` and `y = γ sin(Δτ)/Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalKernel {
    pub x_minus: ComplexDual,
    pub x_plus: ComplexDual,
    pub y: Dual,
}

pub fn signal_kernel(omega: f64, gamma: f64, tau: f64) -> SignalKernel {
    signal_kernel_shifted(omega, gamma, tau, 0.0)
}

/// Signal kernel over `tau` with the dephasing prefactor e^{−γτ} folded in.
pub fn signal_kernel_scaled(omega: f64, gamma: f64, tau: f64) -> SignalKernel {
    signal_kernel_shifted(omega, gamma, tau, gamma * tau)
}

fn signal_kernel_shifted(omega: f64, gamma: f64, tau: f64, shift: f64) -> SignalKernel {
    let (u, v) = (gamma * tau, omega * tau);
    let e = entire((v - u) * (v + u), shift);
    let re = e.c;
    let im = v * e.p;
    let d_re = -v * tau * e.p;
    let d_im = tau * (e.p + 2.0 * v * v * e.dp);
    SignalKernel {
        x_minus: ComplexDual::new(Complex64::new(re, -im), Complex64::new(d_re, -d_im)),
        x_plus: ComplexDual::new(Complex64::new(re, im), Complex64::new(d_re, d_im)),
        y: Dual::new(u * e.p, 2.0 * u * v * tau * e.dp),
    }
}

/// `cosh(ρτ)`, `sinh(ρτ)` for a dephasing rate ρ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalKernel {
    pub c: f64,
    pub s: f64,
    pub decay: f64,
}

pub fn diagonal_kernel(rate: f64, tau: f64) -> DiagonalKernel {
    let x = rate * tau;
    DiagonalKernel {
        c: x.cosh(),
        s: x.sinh(),
        decay: x,
    }
}

/// Round factor r·e^{iφ} = e^{−γτ}(x_+ + y), in log-polar form.
///
/// 1 − r² is evaluated from divided differences of `P` so that it keeps full
/// relative precision when it is tiny, which is what large powers of r need.
pub fn round_factor(omega: f64, gamma: f64, tau: f64) -> DualComplexPolar {
    let (u, v) = (gamma * tau, omega * tau);
    let w = (v - u) * (v + u);
    let e1 = entire(w, u);
    let e4 = entire(4.0 * w, 2.0 * u);

    let x = e1.c + u * e1.p;
    let y = v * e1.p;
    let r2_direct = x * x + y * y;

    let m = if v == 0.0 {
        0.0
    } else {
        let low = entire(-u * u, u).p;
        v * v
            * (-8.0 * u * divided_difference(4.0 * w, -4.0 * u * u, 2.0 * u)
                - 2.0 * u * u * divided_difference(w, -u * u, u) * (low + e1.p))
    };
    let d_m = -8.0 * u * v * tau * (2.0 * e4.dp + u * e1.p * e1.dp);

    let (ln_r2, r2) = if m <= 0.5 {
        ((-m).ln_1p(), 1.0 - m)
    } else {
        (r2_direct.ln(), r2_direct)
    };

    let dx = (-0.5 * e1.p + u * e1.dp) * 2.0 * v * tau;
    let dy = tau * e1.p + 2.0 * v * v * tau * e1.dp;
    let phase = y.atan2(x);
    let d_phase = (x * dy - y * dx) / r2_direct;

    DualComplexPolar::new(0.5 * ln_r2, phase, -0.5 * d_m / r2, d_phase)
}

/// `1 − r²` for the round factor, accurate when small.
pub fn round_factor_deficit(omega: f64, gamma: f64, tau: f64) -> f64 {
    -(2.0 * round_factor(omega, gamma, tau).ln_modulus).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn entire_branches_agree_at_the_switch() {
        for w in [-1.0, 1.0] {
            let lo = entire(w * (1.0 - 1e-12), 0.0);
            let hi = entire(w * (1.0 + 1e-12), 0.0);
            assert_relative_eq!(lo.c, hi.c, max_relative = 1e-11);
            assert_relative_eq!(lo.p, hi.p, max_relative = 1e-11);
            assert_relative_eq!(lo.dp, hi.dp, max_relative = 1e-10);
        }
    }

    #[test]
    fn entire_derivative_matches_finite_difference() {
        for w in [-30.0f64, -3.0, -0.5, 0.0, 0.7, 4.0, 50.0] {
            let h = 1e-5 * (1.0f64).max(w.abs());
            let fd = (entire(w + h, 0.0).p - entire(w - h, 0.0).p) / (2.0 * h);
            assert_relative_eq!(entire(w, 0.0).dp, fd, max_relative = 1e-7);
        }
    }

    #[test]
    fn shift_scales_every_value() {
        let a = entire(-9.0, 0.0);
        let b = entire(-9.0, 2.0);
        let e = (-2.0f64).exp();
        assert_relative_eq!(b.c, a.c * e, max_relative = 1e-14);
        assert_relative_eq!(b.p, a.p * e, max_relative = 1e-14);
        assert_relative_eq!(b.dp, a.dp * e, max_relative = 1e-13);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let s: f64 = gauss_legendre().iter().map(|&(x, w)| w * x.powi(10)).sum();
        assert_relative_eq!(s, 2.0 / 11.0, max_relative = 1e-14);
        let total: f64 = gauss_legendre().iter().map(|&(_, w)| w).sum();
        assert_relative_eq!(total, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn divided_difference_close_and_far() {
        let near = divided_difference(0.3, 0.3 + 1e-9, 0.0);
        assert_relative_eq!(near, entire(0.3, 0.0).dp, max_relative = 1e-8);
        let far = divided_difference(5.0, -2.5, 0.0);
        let direct = (entire(5.0, 0.0).p - entire(-2.5, 0.0).p) / 7.5;
        assert_relative_eq!(far, direct, max_relative = 1e-14);
        let mid = divided_difference(0.9, 0.1, 0.0);
        let direct = (entire(0.9, 0.0).p - entire(0.1, 0.0).p) / 0.8;
        assert_relative_eq!(mid, direct, max_relative = 1e-12);
    }

    #[test]
    fn trig_delta_limits() {
        let t = trig_delta(1.3, 1.3, 0.7);
        assert_eq!(t.cos_term, 1.0);
        assert_relative_eq!(t.sinc_term, 0.7, max_relative = 1e-15);

        let t = trig_delta(2.0, 0.0, PI / 2.0);
        assert_relative_eq!(t.cos_term, -1.0, max_relative = 1e-14);
        assert!(t.sinc_term.abs() < 1e-15);
    }

    #[test]
    fn trig_delta_hyperbolic_branch() {
        let d = (1.0f64 - 1e-4).sqrt();
        let t = trig_delta(0.01, 1.0, 0.5);
        assert_relative_eq!(t.cos_term, (d * 0.5).cosh(), max_relative = 1e-12);
        assert_relative_eq!(t.sinc_term, (d * 0.5).sinh() / d, max_relative = 1e-12);
    }

    #[test]
    fn trig_delta_oscillating_branch() {
        let (w, g, tau): (f64, f64, f64) = (3.0, 0.4, 0.9);
        let d = (w * w - g * g).sqrt();
        let t = trig_delta(w, g, tau);
        assert_relative_eq!(t.cos_term, (d * tau).cos(), max_relative = 1e-12);
        assert_relative_eq!(t.sinc_term, (d * tau).sin() / d, max_relative = 1e-12);
    }

    #[test]
    fn signal_kernel_limits() {
        let k = signal_kernel(1.0, 0.0, 0.8);
        assert_relative_eq!(k.x_minus.v.re, 0.8f64.cos(), max_relative = 1e-14);
        assert_relative_eq!(k.x_minus.v.im, -(0.8f64.sin()), max_relative = 1e-14);
        assert_eq!(k.x_plus.v, k.x_minus.v.conj());
        assert_eq!(k.y.v, 0.0);

        let k = signal_kernel(0.0, 1.0, 0.8);
        assert_relative_eq!(k.x_plus.v.re, 0.8f64.cosh(), max_relative = 1e-14);
        assert_eq!(k.x_plus.v.im, 0.0);
        assert_relative_eq!(k.y.v, 0.8f64.sinh(), max_relative = 1e-14);
    }

    #[test]
    fn diagonal_kernel_values() {
        let k = diagonal_kernel(0.0, 3.0);
        assert_eq!((k.c, k.s, k.decay), (1.0, 0.0, 0.0));
        let k = diagonal_kernel(1.0, 2f64.ln());
        assert_relative_eq!(k.c, 1.25, max_relative = 1e-15);
        assert_relative_eq!(k.s, 0.75, max_relative = 1e-15);
    }

    #[test]
    fn round_factor_limits() {
        let z = round_factor(3.0, 0.0, 0.1);
        assert!(z.ln_modulus.abs() < 1e-16);
        assert_relative_eq!(z.phase, 0.3, max_relative = 1e-14);

        let z = round_factor(0.0, 2.0, 0.1);
        assert_eq!(z.ln_modulus, 0.0);
        assert_eq!(z.phase, 0.0);
    }

    #[test]
    fn round_factor_matches_direct_complex_evaluation() {
        for &(w, g, tau) in &[(20.0, 1.0, 0.01), (0.05, 1.0, 0.3), (5.0, 4.0, 0.7), (1.0, 1.0, 0.2)] {
            let k = signal_kernel(w, g, tau);
            let z = (k.x_plus.v + k.y.v) * (-g * tau).exp();
            let rf = round_factor(w, g, tau);
            assert_relative_eq!(rf.modulus(), z.norm(), max_relative = 1e-13);
            assert_relative_eq!(rf.phase, z.arg(), max_relative = 1e-13);
        }
    }

    #[test]
    fn deficit_keeps_relative_precision() {
        // 1 − r² ≈ (4/3)·γτ·(ωτ)² for small arguments.
        let (w, g, tau) = (1e-3, 1e-4, 1e-3);
        let m = round_factor_deficit(w, g, tau);
        let approx = 4.0 / 3.0 * (g * tau) * (w * tau).powi(2);
        assert_relative_eq!(m, approx, max_relative = 1e-3);
        assert!(m > 0.0);
    }
}
