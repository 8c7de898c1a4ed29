//! Riemann zeta function and its first two derivatives.
//!
//! Euler–Maclaurin for `Re s >= 1/2` (and in a disc around the origin, where
//! the functional equation would multiply a zero by the pole of `ζ(1-s)`),
//! the functional equation elsewhere. Derivatives are obtained by running the
//! same code on [`Jet`] values.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::bernoulli::{bernoulli_even_f64, zeta_nonpos_exact};
use super::rational::rat_to_f64;
use super::gamma::{digamma_c, gamma_c, sin_pi, trigamma_c};
use super::jet::{Jet, Scalar};
use crate::error::{Error, Result};
use crate::value::{Approx, CVal, EvalOptions};

const LN_TABLE: usize = 8192;
const EXACT_NONPOS_MAX: u32 = 200;

fn ln_table() -> &'static [f64] {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    T.get_or_init(|| (0..LN_TABLE).map(|n| if n == 0 { 0.0 } else { (n as f64).ln() }).collect())
}

fn ln_n(n: usize) -> f64 {
    if n < LN_TABLE {
        ln_table()[n]
    } else {
        (n as f64).ln()
    }
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

fn em_length(s: CVal, opts: &EvalOptions) -> usize {
    let p = opts.em_correction_order as f64;
    // keeps |s + 2k| / (2πN) below 1/4 for every correction term used
    let need = ((s.norm() + 2.0 * p) / (0.5 * PI)).ceil() as usize;
    opts.series_terms.max(need).max(2)
}

/// Euler–Maclaurin core; returns the value and the size of the last
/// correction term (used as the truncation estimate).
fn em_generic<T: Scalar>(s: T, opts: &EvalOptions) -> (T, f64) {
    let sv = s.value();
    let n_main = em_length(sv, opts);
    let mut sum = T::konst(Complex64::new(0.0, 0.0));
    for n in 1..n_main {
        sum = sum + (s.mul_c(Complex64::new(-ln_n(n), 0.0))).exp_s();
    }
    let ln_big = ln_n(n_main);
    let big = n_main as f64;
    let n_pow_minus_s = s.mul_c(Complex64::new(-ln_big, 0.0)).exp_s();
    let one = Complex64::new(1.0, 0.0);
    let tail = n_pow_minus_s.mul_c(Complex64::new(big, 0.0)) / s.add_c(-one);
    sum = sum + tail + n_pow_minus_s.mul_c(Complex64::new(0.5, 0.0));

    let b = bernoulli_even_f64();
    let p = (opts.em_correction_order / 2).max(1);
    // poch = s (s+1) ... (s+2k-2); n_pow = N^{-s-2k+1}
    let mut poch = s;
    let mut n_pow = n_pow_minus_s.mul_c(Complex64::new(1.0 / big, 0.0));
    let mut last = 0.0;
    for k in 1..=2 * p {
        let coef = b[k] / factorial_f64(2 * k);
        let term = (poch * n_pow).mul_c(Complex64::new(coef, 0.0));
        sum = sum + term;
        last = term.value().norm();
        let kk = (2 * k) as f64;
        poch = poch * s.add_c(Complex64::new(kk - 1.0, 0.0)) * s.add_c(Complex64::new(kk, 0.0));
        n_pow = n_pow.mul_c(Complex64::new(1.0 / (big * big), 0.0));
    }
    (sum, last)
}

fn use_em(s: CVal) -> bool {
    s.re >= 0.5 || s.norm() < 0.5
}

/// Plain complex zeta without error bookkeeping; infinite at `s = 1`.
pub fn zeta_c(s: CVal, opts: &EvalOptions) -> CVal {
    if s == Complex64::new(1.0, 0.0) {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    if use_em(s) {
        em_generic(s, opts).0
    } else {
        chi_c(s) * em_generic(1.0 - s, opts).0
    }
}

/// `χ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s)`, so that `ζ(s) = χ(s) ζ(1-s)`.
fn chi_c(s: CVal) -> CVal {
    let pow = (s * (2.0f64).ln() + (s - 1.0) * PI.ln()).exp();
    pow * sin_pi(s * 0.5) * gamma_c(1.0 - s)
}

fn chi_jet(s: Jet) -> Jet {
    let pow = (s * Complex64::new(2.0f64.ln(), 0.0) + (s + Complex64::new(-1.0, 0.0)) * Complex64::new(PI.ln(), 0.0)).exp();
    let sine = (s * Complex64::new(PI / 2.0, 0.0)).sin();
    // Γ(1-s) in s: (g, -gψ, g(ψ²+ψ'))
    let w = 1.0 - s.v;
    let g = gamma_c(w);
    let psi = digamma_c(w);
    let gam = Jet { v: g, d1: -g * psi, d2: g * (psi * psi + trigamma_c(w)) };
    pow * sine * gam
}

fn zeta_jet(s: CVal, opts: &EvalOptions) -> (Jet, f64) {
    if use_em(s) {
        em_generic(Jet::var(s), opts)
    } else {
        let (z, err) = em_generic(Jet::var(1.0 - s), opts);
        // reflect derivatives of ζ(w) at w = 1-s back to s
        let zr = Jet { v: z.v, d1: -z.d1, d2: z.d2 };
        let chi = chi_jet(Jet::var(s));
        (chi * zr, err * chi.v.norm())
    }
}

fn check_pole(s: CVal) -> Result<()> {
    if (s - 1.0).norm() < 1e-13 {
        return Err(Error::Pole(format!("zeta at s = {s}")));
    }
    Ok(())
}

/// Euler–Maclaurin evaluation (valid for every `s != 1`).
pub fn zeta_em(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    check_pole(s)?;
    let (v, last) = em_generic(s, opts);
    let n = em_length(s, opts) as f64;
    let round = f64::EPSILON * (n.sqrt() * n.powf((1.0 - s.re).max(0.0)) + v.norm());
    Approx::new(v, 2.0 * last + round).checked("zeta (Euler-Maclaurin)")
}

/// Evaluation through `ζ(s) = χ(s) ζ(1-s)`.
pub fn zeta_reflect(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    check_pole(s)?;
    if s.norm() < 1e-12 {
        return Err(Error::Pole("functional equation is 0·∞ at s = 0".into()));
    }
    let inner = zeta_em(1.0 - s, opts)?;
    let chi = chi_c(s);
    let v = chi * inner.value;
    let err = chi.norm() * inner.abs_err + v.norm() * f64::EPSILON * (16.0 + 4.0 * s.norm());
    Approx::new(v, err).checked("zeta (functional equation)")
}

/// `ζ(s)` with an error estimate. Non-positive integers take the exact
/// Bernoulli value, which no floating evaluation matches in absolute terms
/// once `|ζ(-n)|` is large.
pub fn riemann_zeta(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    if s.im == 0.0 && s.re <= 0.0 && s.re >= -(EXACT_NONPOS_MAX as f64) && s.re.fract() == 0.0 {
        let v = rat_to_f64(&zeta_nonpos_exact((-s.re) as u32));
        return Ok(Approx::new(Complex64::new(v, 0.0), 0.5 * f64::EPSILON * v.abs()));
    }
    if use_em(s) {
        zeta_em(s, opts)
    } else {
        zeta_reflect(s, opts)
    }
}

/// `ζ'(s)` (order 1) or `ζ''(s)` (order 2).
pub fn riemann_zeta_deriv(s: CVal, order: u32, opts: &EvalOptions) -> Result<Approx> {
    if !(1..=2).contains(&order) {
        return Err(Error::UnsupportedOrder(order));
    }
    check_pole(s)?;
    let (j, last) = zeta_jet(s, opts);
    let v = if order == 1 { j.d1 } else { j.d2 };
    let log_factor = (em_length(s, opts) as f64).ln().powi(order as i32);
    let err = (2.0 * last + f64::EPSILON * (j.v.norm() + v.norm())) * log_factor * 4.0
        + v.norm() * 1e-14 * (1.0 + s.norm());
    Approx::new(v, err).checked("zeta derivative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bernoulli::zeta_nonpos_exact;
    use crate::special::rational::rat_to_f64;
    use crate::value::{c, cr};

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn classical_values() {
        let o = opts();
        let z2 = riemann_zeta(cr(2.0), &o).unwrap();
        assert!((z2.value - cr(PI * PI / 6.0)).norm() < 1e-15);
        let z0 = riemann_zeta(cr(0.0), &o).unwrap();
        assert!((z0.value - cr(-0.5)).norm() < 1e-15);
        let zm9 = riemann_zeta(cr(-9.0), &o).unwrap();
        assert!((zm9.value - cr(-1.0 / 132.0)).norm() < 1e-15);
        assert!(matches!(riemann_zeta(cr(1.0), &o), Err(Error::Pole(_))));
    }

    #[test]
    fn first_nontrivial_zero() {
        let rho = c(0.5, 14.134_725_141_734_693);
        let z = riemann_zeta(rho, &opts()).unwrap();
        assert!(z.norm() < 1e-12, "{:?}", z);
    }

    #[test]
    fn high_on_the_line() {
        // ζ(1/2 + 100i) ≈ 2.69261988568132 - 0.0203860296025982i
        let z = riemann_zeta(c(0.5, 100.0), &opts()).unwrap();
        let want = c(2.692_619_885_681_32, -0.020_386_029_602_598_2);
        assert!((z.value - want).norm() / want.norm() < 1e-12, "{:?}", z);
    }

    #[test]
    fn matches_exact_values_at_negative_integers() {
        for n in 0..=25u32 {
            let want = rat_to_f64(&zeta_nonpos_exact(n));
            let got = riemann_zeta(cr(-(n as f64)), &opts()).unwrap();
            assert!((got.value - cr(want)).norm() <= 1e-13, "n = {n}");
            // the floating paths agree to rounding
            let s = cr(-(n as f64));
            let num = if n == 0 { zeta_em(s, &opts()) } else { zeta_reflect(s, &opts()) }.unwrap();
            assert!((num.value - cr(want)).norm() <= 1e-13 * want.abs().max(1.0), "n = {n}");
        }
    }

    #[test]
    fn derivative_at_zero_and_trivial_zero() {
        let o = opts();
        let d0 = riemann_zeta_deriv(cr(0.0), 1, &o).unwrap();
        assert!((d0.value - cr(-0.5 * (2.0 * PI).ln())).norm() < 1e-12);
        let zeta3 = riemann_zeta(cr(3.0), &o).unwrap().value.re;
        let dm2 = riemann_zeta_deriv(cr(-2.0), 1, &o).unwrap();
        assert!((dm2.value - cr(-zeta3 / (4.0 * PI * PI))).norm() < 1e-13);
        assert!(matches!(riemann_zeta_deriv(cr(2.0), 3, &o), Err(Error::UnsupportedOrder(3))));
    }

    #[test]
    fn derivative_at_two_against_direct_sum() {
        // -Σ ln n / n², summed to 10^6 with the integral tail ∫_N^∞ ln x/x² dx
        let n_max = 1_000_000u64;
        let mut s = 0.0;
        for n in (2..=n_max).rev() {
            let x = n as f64;
            s += x.ln() / (x * x);
        }
        let big = n_max as f64 + 0.5;
        s += (big.ln() + 1.0) / big;
        let d = riemann_zeta_deriv(cr(2.0), 1, &opts()).unwrap();
        assert!((d.value.re + s).abs() < 1e-10, "{} vs {}", d.value.re, -s);
        assert!((d.value.re + 0.937_548_254_315_843_8).abs() < 1e-13);
    }

    #[test]
    fn second_derivative_by_differences() {
        let o = opts();
        for s in [c(2.5, 0.3), c(-3.2, 1.0), cr(-2.0), cr(0.0)] {
            let h = 1e-4;
            let f = |x: CVal| riemann_zeta_deriv(x, 1, &o).unwrap().value;
            let fd = (f(s + h) - f(s - h)) / (2.0 * h);
            let d2 = riemann_zeta_deriv(s, 2, &o).unwrap().value;
            assert!((fd - d2).norm() <= 1e-7 * d2.norm().max(1.0), "s = {s}");
        }
    }

    #[test]
    fn both_routes_agree_in_the_strip() {
        let o = opts();
        for (x, y) in [(0.41, 3.0), (0.5, -7.5), (0.59, 25.0), (0.45, 60.0)] {
            let s = c(x, y);
            let a = zeta_em(s, &o).unwrap();
            let b = zeta_reflect(s, &o).unwrap();
            assert!((a.value - b.value).norm() <= 1e-10 * a.norm(), "s = {s}");
        }
    }
}
