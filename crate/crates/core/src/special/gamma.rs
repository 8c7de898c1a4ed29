//! Complex Gamma, reciprocal Gamma, digamma and trigamma.
//!
//! Stirling series after upward recurrence into `|w| >= 10`; reflection for
//! the left half-plane while `|Im z|` is moderate, recurrence beyond that so
//! that `sin(πz)` never overflows.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::bernoulli_even_f64;
use crate::error::{Error, Result};
use crate::value::{Approx, CVal};

const STIRLING_TERMS: usize = 12;
const SHIFT_RADIUS: f64 = 10.0;
const REFLECT_MAX_IM: f64 = 20.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// `sin(πx)`, exactly zero at integers.
pub fn sinpi_real(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r.abs() == 0.5 {
        return r.signum();
    }
    (PI * r).sin()
}

/// `cos(πx)`, exactly zero at half-integers.
pub fn cospi_real(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r.abs() == 0.5 {
        return 0.0;
    }
    if r == 0.0 {
        return 1.0;
    }
    if r.abs() == 1.0 {
        return -1.0;
    }
    (PI * r).cos()
}

/// `sin(πz)` with exact zeros on the real integers.
pub fn sin_pi(z: CVal) -> CVal {
    let y = PI * z.im;
    Complex64::new(sinpi_real(z.re) * y.cosh(), cospi_real(z.re) * y.sinh())
}

/// `cos(πz)` with exact zeros on the real half-integers.
pub fn cos_pi(z: CVal) -> CVal {
    let y = PI * z.im;
    Complex64::new(cospi_real(z.re) * y.cosh(), -sinpi_real(z.re) * y.sinh())
}

/// `cot(πz/2)`, computed in a form that stays finite for large `|Im z|`.
pub fn cot_half_pi(z: CVal) -> CVal {
    // cot(w) = i (e^{2iw} + 1)/(e^{2iw} - 1); pick the decaying exponential.
    let w = z * (PI / 2.0);
    let i = Complex64::i();
    if w.im >= 0.0 {
        let e = (2.0 * i * w).exp();
        i * (e + 1.0) / (e - 1.0)
    } else {
        let e = (-2.0 * i * w).exp();
        i * (1.0 + e) / (1.0 - e)
    }
}

fn near_nonpositive_integer(z: CVal, tol: f64) -> bool {
    z.re <= 0.5 && z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol
}

/// Shift `z` upward until `|w| >= 10` and `Re w >= 0.5`; returns `w` and
/// `prod = z(z+1)...(w-1)`.
fn shift_up(z: CVal) -> (CVal, CVal) {
    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.norm() < SHIFT_RADIUS || w.re < 0.5 {
        prod *= w;
        w += 1.0;
    }
    (w, prod)
}

fn stirling_ln(w: CVal) -> CVal {
    let b = bernoulli_even_f64();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=STIRLING_TERMS {
        let kk = (2 * k) as f64;
        series += pow * (b[k] / (kk * (kk - 1.0)));
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series
}

/// Raw `Γ(z)`; infinite or NaN at the poles.
pub fn gamma_c(z: CVal) -> CVal {
    if z.re < 0.5 && z.im.abs() <= REFLECT_MAX_IM {
        return Complex64::new(PI, 0.0) / (sin_pi(z) * gamma_c(1.0 - z));
    }
    let (w, prod) = shift_up(z);
    stirling_ln(w).exp() / prod
}

/// `1/Γ(z)`, entire; exactly zero at non-positive integers.
pub fn rgamma_c(z: CVal) -> CVal {
    if z.re < 0.5 && z.im.abs() <= REFLECT_MAX_IM {
        return sin_pi(z) * gamma_c(1.0 - z) / PI;
    }
    let (w, prod) = shift_up(z);
    prod * (-stirling_ln(w)).exp()
}

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma_c(z: CVal) -> CVal {
    if z.re < 0.5 && z.im.abs() <= REFLECT_MAX_IM {
        return digamma_c(1.0 - z) - PI * cot_pi(z);
    }
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < SHIFT_RADIUS || w.re < 0.5 {
        acc -= w.inv();
        w += 1.0;
    }
    let b = bernoulli_even_f64();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv2;
    let mut series = w.ln() - 0.5 * inv;
    for k in 1..=STIRLING_TERMS {
        series -= pow * (b[k] / (2 * k) as f64);
        pow *= inv2;
    }
    acc + series
}

/// Trigamma `ψ'(z)`.
pub fn trigamma_c(z: CVal) -> CVal {
    if z.re < 0.5 && z.im.abs() <= REFLECT_MAX_IM {
        let s = sin_pi(z);
        return PI * PI / (s * s) - trigamma_c(1.0 - z);
    }
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < SHIFT_RADIUS || w.re < 0.5 {
        acc += (w * w).inv();
        w += 1.0;
    }
    let b = bernoulli_even_f64();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut series = inv + 0.5 * inv2;
    for k in 1..=STIRLING_TERMS {
        series += pow * b[k];
        pow *= inv2;
    }
    acc + series
}

fn cot_pi(z: CVal) -> CVal {
    cot_half_pi(2.0 * z)
}

/// `Γ(z)` with a relative error estimate.
pub fn gamma(z: CVal) -> Result<Approx> {
    if near_nonpositive_integer(z, 1e-13) {
        return Err(Error::Pole(format!("Gamma at {z}")));
    }
    let v = gamma_c(z);
    // exp() of the Stirling sum turns its absolute rounding into relative error
    let err = v.norm() * f64::EPSILON * (8.0 + 2.0 * (z.norm() + 1.0).ln() * z.norm().max(1.0));
    Approx::new(v, err).checked("gamma")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::{c, cr};

    fn rel(a: CVal, b: CVal) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn factorials_and_half() {
        assert!(rel(gamma_c(cr(5.0)), cr(24.0)) < 1e-14);
        assert!(rel(gamma_c(cr(0.5)), cr(PI.sqrt())) < 1e-14);
        assert!(rel(gamma_c(cr(21.0)), cr(2.43290200817664e18)) < 1e-13);
        assert!(rel(gamma_c(cr(-0.5)), cr(-2.0 * PI.sqrt())) < 1e-14);
    }

    #[test]
    fn poles_refused() {
        assert!(matches!(gamma(cr(0.0)), Err(Error::Pole(_))));
        assert!(matches!(gamma(cr(-3.0)), Err(Error::Pole(_))));
        assert_eq!(rgamma_c(cr(-3.0)), cr(0.0) * rgamma_c(cr(-3.0)).norm());
    }

    #[test]
    fn reflection_at_critical_height() {
        let z = c(0.5, 14.1);
        let lhs = gamma_c(z) * gamma_c(1.0 - z);
        let rhs = Complex64::new(PI, 0.0) / sin_pi(z);
        assert!(rel(lhs, rhs) < 1e-12);
    }

    #[test]
    fn large_imaginary_parts_stay_finite() {
        for y in [30.0, 80.0, 160.0, 320.0] {
            let g = gamma_c(c(-2.3, y));
            assert!(g.re.is_finite() && g.im.is_finite());
            let r = rgamma_c(c(-2.3, y));
            assert!(rel(g * r, cr(1.0)) < 1e-10, "y = {y}");
        }
    }

    #[test]
    fn digamma_and_trigamma() {
        let euler_gamma = 0.577_215_664_901_532_9;
        assert!((digamma_c(cr(1.0)) + euler_gamma).norm() < 1e-14);
        assert!((trigamma_c(cr(1.0)) - cr(PI * PI / 6.0)).norm() < 1e-14);
        // finite-difference check off the real axis
        let z = c(-1.3, 0.7);
        let h = 1e-5;
        let fd = (gamma_c(z + h) - gamma_c(z - h)) / (2.0 * h);
        assert!(rel(fd, gamma_c(z) * digamma_c(z)) < 1e-8);
        let fd2 = (digamma_c(z + h) - digamma_c(z - h)) / (2.0 * h);
        assert!(rel(fd2, trigamma_c(z)) < 1e-8);
    }

    #[test]
    fn exact_trig_zeros() {
        assert_eq!(sin_pi(cr(3.0)).re, 0.0);
        assert_eq!(cos_pi(cr(2.5)).re, 0.0);
        assert_eq!(cos_pi(cr(-7.0)).re, -1.0);
        let z = c(0.3, -200.0);
        let v = cot_half_pi(z);
        assert!((v - Complex64::i()).norm() < 1e-12);
    }
}
