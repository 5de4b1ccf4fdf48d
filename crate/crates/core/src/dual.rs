//! Forward-mode duals in ω: real, complex, and log-polar complex.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Real value paired with its ω-derivative.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual {
    pub v: f64,
    pub d: f64,
}

impl Dual {
    pub const fn new(v: f64, d: f64) -> Self {
        Self { v, d }
    }

    pub const fn constant(v: f64) -> Self {
        Self { v, d: 0.0 }
    }

    pub fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        Self::new(s, 0.5 * self.d / s)
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Self::new(e, e * self.d)
    }

    pub fn ln(self) -> Self {
        Self::new(self.v.ln(), self.d / self.v)
    }

    pub fn sin(self) -> Self {
        Self::new(self.v.sin(), self.v.cos() * self.d)
    }

    pub fn cos(self) -> Self {
        Self::new(self.v.cos(), -self.v.sin() * self.d)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.v * k, self.d * k)
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.v + o.v, self.d + o.d)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.v - o.v, self.d - o.d)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.v * o.v, self.d * o.v + self.v * o.d)
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, o: Dual) -> Dual {
        Dual::new(self.v / o.v, (self.d * o.v - self.v * o.d) / (o.v * o.v))
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.v, -self.d)
    }
}

/// Complex value paired with its ω-derivative.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexDual {
    pub v: Complex64,
    pub d: Complex64,
}

impl ComplexDual {
    pub const fn new(v: Complex64, d: Complex64) -> Self {
        Self { v, d }
    }

    pub fn constant(v: Complex64) -> Self {
        Self::new(v, Complex64::new(0.0, 0.0))
    }

    pub fn from_real(x: Dual) -> Self {
        Self::new(Complex64::new(x.v, 0.0), Complex64::new(x.d, 0.0))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn conj(self) -> Self {
        Self::new(self.v.conj(), self.d.conj())
    }

    /// Principal square root.
    pub fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        let d = if s.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.d / (2.0 * s)
        };
        Self::new(s, d)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.v * k, self.d * k)
    }

    pub fn norm(self) -> f64 {
        self.v.norm()
    }
}

impl Add for ComplexDual {
    type Output = ComplexDual;
    fn add(self, o: ComplexDual) -> ComplexDual {
        ComplexDual::new(self.v + o.v, self.d + o.d)
    }
}

impl Sub for ComplexDual {
    type Output = ComplexDual;
    fn sub(self, o: ComplexDual) -> ComplexDual {
        ComplexDual::new(self.v - o.v, self.d - o.d)
    }
}

impl Mul for ComplexDual {
    type Output = ComplexDual;
    fn mul(self, o: ComplexDual) -> ComplexDual {
        ComplexDual::new(self.v * o.v, self.d * o.v + self.v * o.d)
    }
}

impl Div for ComplexDual {
    type Output = ComplexDual;
    fn div(self, o: ComplexDual) -> ComplexDual {
        let q = self.v / o.v;
        ComplexDual::new(q, (self.d - q * o.d) / o.v)
    }
}

impl Neg for ComplexDual {
    type Output = ComplexDual;
    fn neg(self) -> ComplexDual {
        ComplexDual::new(-self.v, -self.d)
    }
}

/// Complex number `exp(ln_modulus + i·phase)` with ω-derivatives of both parts.
///
/// Moduli live in the log domain so that powers with exponents near 1e9 neither
/// underflow nor lose relative precision. The phase is not wrapped, so integer
/// powers accumulate it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualComplexPolar {
    pub ln_modulus: f64,
    pub phase: f64,
    pub d_ln_modulus: f64,
    pub d_phase: f64,
}

impl Default for DualComplexPolar {
    fn default() -> Self {
        Self::one()
    }
}

/// `k·x` with the convention `0·(−∞) = 0`.
pub(crate) fn mul_ln(k: f64, x: f64) -> f64 {
    if k == 0.0 {
        0.0
    } else {
        k * x
    }
}

impl DualComplexPolar {
    pub const fn new(ln_modulus: f64, phase: f64, d_ln_modulus: f64, d_phase: f64) -> Self {
        Self {
            ln_modulus,
            phase,
            d_ln_modulus,
            d_phase,
        }
    }

    pub const fn one() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    pub const fn zero() -> Self {
        Self::new(f64::NEG_INFINITY, 0.0, 0.0, 0.0)
    }

    pub fn modulus(&self) -> f64 {
        self.ln_modulus.exp()
    }

    /// ∂|z|/∂ω.
    pub fn d_modulus(&self) -> f64 {
        if self.ln_modulus == f64::NEG_INFINITY {
            0.0
        } else {
            self.modulus() * self.d_ln_modulus
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_modulus == f64::NEG_INFINITY
    }

    pub fn from_complex_dual(z: ComplexDual) -> Self {
        let r = z.v.norm();
        if r == 0.0 {
            return Self::zero();
        }
        // Normalize first: dividing by z.v directly squares |z.v|, which
        // underflows for the e^{−γt}-scaled kernels at large γt.
        let g = (z.d / r) / (z.v / r);
        Self::new(r.ln(), z.v.arg(), g.re, g.im)
    }

    pub fn to_complex_dual(&self) -> ComplexDual {
        if self.is_zero() {
            return ComplexDual::zero();
        }
        let v = Complex64::from_polar(self.modulus(), self.phase);
        ComplexDual::new(v, v * Complex64::new(self.d_ln_modulus, self.d_phase))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.ln_modulus, -self.phase, self.d_ln_modulus, -self.d_phase)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.ln_modulus + o.ln_modulus,
            self.phase + o.phase,
            self.d_ln_modulus + o.d_ln_modulus,
            self.d_phase + o.d_phase,
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        Self::new(
            self.ln_modulus - o.ln_modulus,
            self.phase - o.phase,
            self.d_ln_modulus - o.d_ln_modulus,
            self.d_phase - o.d_phase,
        )
    }

    /// Real power; the phase is scaled without wrapping.
    pub fn powf(&self, k: f64) -> Self {
        Self::new(
            mul_ln(k, self.ln_modulus),
            k * self.phase,
            k * self.d_ln_modulus,
            k * self.d_phase,
        )
    }

    /// Multiply by a positive real constant `exp(ln_k)`.
    pub fn scale_ln(&self, ln_k: f64) -> Self {
        Self::new(self.ln_modulus + ln_k, self.phase, self.d_ln_modulus, self.d_phase)
    }

    /// Sum of two polar numbers evaluated relative to the larger one.
    pub fn add(&self, o: &Self) -> Self {
        let (big, small) = if self.ln_modulus >= o.ln_modulus {
            (self, o)
        } else {
            (o, self)
        };
        if small.is_zero() {
            return *big;
        }
        let w = Complex64::from_polar(
            (small.ln_modulus - big.ln_modulus).exp(),
            small.phase - big.phase,
        );
        let s = Complex64::new(1.0, 0.0) + w;
        let sn = s.norm();
        if sn == 0.0 {
            return Self::zero();
        }
        let g = (Complex64::new(big.d_ln_modulus, big.d_phase)
            + w * Complex64::new(small.d_ln_modulus, small.d_phase))
            / s;
        Self::new(big.ln_modulus + sn.ln(), big.phase + s.arg(), g.re, g.im)
    }
}

/// `ln(e^a + e^b)` with derivatives `(da, db)` propagated.
pub fn logaddexp(a: Dual, b: Dual) -> Dual {
    let (hi, lo) = if a.v >= b.v { (a, b) } else { (b, a) };
    if lo.v == f64::NEG_INFINITY {
        return hi;
    }
    let e = (lo.v - hi.v).exp();
    Dual::new(hi.v + e.ln_1p(), (hi.d + e * lo.d) / (1.0 + e))
}
