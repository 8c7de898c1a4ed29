//! Euler's double zeta near `s + t = 1`: the function `h(s,t)`, its
//! functional equation, and the series `F±` built from the confluent
//! hypergeometric function `Ψ`.
//!
//! All complex powers use the principal branch, e.g.
//! `(±2πi)^w = exp(w (ln 2π ± iπ/2))`.

#![allow(non_snake_case)]

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::gamma::{cos_pi, gamma_c, rgamma_c, sin_pi};
use crate::special::pochhammer::pochhammer;
use crate::special::psi::confluent_psi;
use crate::special::divisor::sigma_complex;
use crate::special::zeta::riemann_zeta;
use crate::tornheim::{euler_double_zeta, euler_mb, euler_residue_term, EulerContour, A_shifted};
use crate::value::{Approx, CVal, EvalOptions};

fn check_h_point(s: CVal, t: CVal) -> Result<()> {
    let n = t.re.round();
    if n >= 1.0 && (t - n).norm() < 1e-8 {
        return Err(Error::SingularPoint(format!("t = {t} is a positive integer")));
    }
    if (s + t - 2.0).norm() < 1e-8 {
        return Err(Error::SingularPoint("s + t = 2".into()));
    }
    Ok(())
}

/// `h(s,t) = ζ(s,t) − Γ(1−t)Γ(s+t−1)ζ(s+t−1)/Γ(s)` from the series
/// representation of Euler's double zeta.
pub fn h_eval(s: CVal, t: CVal, opts: &EvalOptions) -> Result<Approx> {
    check_h_point(s, t)?;
    let z = euler_double_zeta(s, t, opts)?;
    let term = euler_residue_term(s, t, opts);
    (z - Approx::exact(term)).checked("h")
}

/// `h(s,t)` as a single contour integral, with the pole of `ζ(t−η)` at
/// `η = t−1` kept to the left together with those of `Γ(s+η)`.
pub fn h_contour(s: CVal, t: CVal, opts: &EvalOptions) -> Result<Approx> {
    check_h_point(s, t)?;
    euler_mb(s, t, EulerContour::Shifted, opts)
}

/// Both sides of the functional equation
/// `h(s,t)/((2π)^{s+t−1}Γ(1−t)) = cos(π(s+t−1)/2) h(1−t,1−s)/Γ(s)
///   + sin(π(s+t−1)/2) Γ(1−s)/π · A(1−s,1−t;0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunEqSides {
    pub lhs: Approx,
    pub cosine_term: Approx,
    pub sine_term: Approx,
}

impl FunEqSides {
    pub fn residual(&self) -> Approx {
        self.lhs - self.cosine_term - self.sine_term
    }

    /// Residual with the sine term left out; zero on `s + t = 2k + 1`.
    pub fn residual_without_sine(&self) -> Approx {
        self.lhs - self.cosine_term
    }

    /// `max(|lhs|, 1)`, the scale for relative comparisons.
    pub fn scale(&self) -> f64 {
        self.lhs.norm().max(1.0)
    }
}

pub fn funeq_sides(s: CVal, t: CVal, opts: &EvalOptions) -> Result<FunEqSides> {
    let w = s + t - 1.0;
    let two_pi = Complex64::new(2.0 * PI, 0.0);
    let lhs = h_contour(s, t, opts)?.scale(rgamma_c(1.0 - t) / two_pi.powc(w));
    let cosine_term = h_contour(1.0 - t, 1.0 - s, opts)?.scale(cos_pi(w * 0.5) * rgamma_c(s));
    let half = sin_pi(w * 0.5);
    let sine_term = if half == Complex64::new(0.0, 0.0) {
        Approx::zero()
    } else {
        A_shifted(1.0 - s, 1.0 - t, Complex64::new(0.0, 0.0), None, opts)?.scale(half * gamma_c(1.0 - s) / PI)
    };
    Ok(FunEqSides { lhs, cosine_term, sine_term })
}

/// Left side minus right side of the functional equation.
pub fn funeq_residual(s: CVal, t: CVal, opts: &EvalOptions) -> Result<Approx> {
    Ok(funeq_sides(s, t, opts)?.residual())
}

/// Truncation controls for the `F±` series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FpmOptions {
    pub max_terms: usize,
    /// largest acceptable tail estimate relative to the partial sum
    pub tail_tol: f64,
}

impl Default for FpmOptions {
    fn default() -> Self {
        FpmOptions { max_terms: 2000, tail_tol: 1e-4 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmSign {
    Plus,
    Minus,
}

impl PmSign {
    fn factor(self) -> f64 {
        match self {
            PmSign::Plus => 1.0,
            PmSign::Minus => -1.0,
        }
    }

    /// `(±2πi)^w`, principal branch.
    pub fn two_pi_i_pow(self, w: CVal) -> CVal {
        let log = Complex64::new((2.0 * PI).ln(), self.factor() * FRAC_PI_2);
        (log * w).exp()
    }
}

/// Terms of the asymptotic expansion `Ψ(t, s+t; z) ~ Σ c_n z^{-t-n}` that
/// are subtracted termwise and summed in closed form.
const ASYMPTOTIC_TERMS: u32 = 6;

/// `F±(s,t) = Σ_{k≥1} σ_{s+t−1}(k) Ψ(t, s+t; ±2πik)` for `Re s < 0`, `Re t > 1`.
///
/// The first terms of the large-`z` expansion of `Ψ` are subtracted from
/// every summand and added back through `Σ σ_w(k) k^{-x} = ζ(x)ζ(x−w)`;
/// what remains decays like `k^{Re s − 1 − M}`.
pub fn F_pm(sign: PmSign, s: CVal, t: CVal, fopts: &FpmOptions, opts: &EvalOptions) -> Result<Approx> {
    if s.re >= -0.1 || t.re <= 1.1 {
        return Err(Error::Domain(format!("F± needs Re s < -0.1 and Re t > 1.1, got ({s}, {t})")));
    }
    if fopts.max_terms < 10 {
        return Err(Error::Domain("max_terms must be at least 10".into()));
    }
    let b = s + t;
    let w = b - 1.0;
    let m = ASYMPTOTIC_TERMS;
    // c_n = (t)_n (1-s)_n (-1)^n / n!
    let coeffs: Vec<CVal> = (0..m)
        .map(|n| {
            let fact: f64 = (1..=n).map(|i| i as f64).product();
            pochhammer(t, n).value * pochhammer(1.0 - s, n).value * (if n % 2 == 0 { 1.0 } else { -1.0 }) / fact
        })
        .collect();
    let mut closed = Approx::zero();
    for (n, c) in coeffs.iter().enumerate() {
        let n = n as f64;
        let z = riemann_zeta(t + n, opts)? * riemann_zeta(1.0 - s + n, opts)?;
        closed = closed + z.scale(c * sign.two_pi_i_pow(-(t + n)));
    }
    let mut sum = Approx::zero();
    let decay = m as f64 + 1.0 - s.re;
    for k in 1..=fopts.max_terms {
        let z = Complex64::new(0.0, sign.factor() * 2.0 * PI * k as f64);
        let psi = confluent_psi(t, b, z)?;
        let mut asym = Complex64::new(0.0, 0.0);
        for (n, c) in coeffs.iter().enumerate() {
            asym += c * z.powc(-(t + n as f64));
        }
        let term = (psi - Approx::exact(asym)).scale(sigma_complex(w, k as u64));
        sum = sum + term;
        // Σ_{j>k} C j^{-decay} ≤ |term| k / (decay - 1)
        let tail = term.norm() * k as f64 / (decay - 1.0);
        let total = (sum + closed).norm();
        if k >= 10 && tail <= 1e-13 * total.max(1e-300) {
            return Ok(Approx::new(sum.value + closed.value, sum.abs_err + closed.abs_err + tail));
        }
        if k == fopts.max_terms {
            if tail > fopts.tail_tol * total {
                return Err(Error::SlowConvergence(format!("F± tail {tail:e} after {k} terms")));
            }
            return Ok(Approx::new(sum.value + closed.value, sum.abs_err + closed.abs_err + tail));
        }
    }
    unreachable!("loop returns on its last iteration")
}

/// `2Γ(s)A(s,t;0) − (2πi)^{s+t}F₊(s,t) − (−2πi)^{s+t}F₋(s,t)` together with
/// the left side.
pub fn corollary_A_sides(s: CVal, t: CVal, fopts: &FpmOptions, opts: &EvalOptions) -> Result<(Approx, Approx)> {
    let lhs = A_shifted(s, t, Complex64::new(0.0, 0.0), None, opts)?.scale(2.0 * gamma_c(s));
    let p = F_pm(PmSign::Plus, s, t, fopts, opts)?.scale(PmSign::Plus.two_pi_i_pow(s + t));
    let m = F_pm(PmSign::Minus, s, t, fopts, opts)?.scale(PmSign::Minus.two_pi_i_pow(s + t));
    Ok((lhs, p + m))
}

pub fn corollary_A_check(s: CVal, t: CVal, fopts: &FpmOptions, opts: &EvalOptions) -> Result<Approx> {
    let (l, r) = corollary_A_sides(s, t, fopts, opts)?;
    Ok(l - r)
}

/// `F±(1−t,1−s) − (±2πi)^{s+t−1} F±(s,t)`.
pub fn F_pm_self_residual(sign: PmSign, s: CVal, t: CVal, fopts: &FpmOptions, opts: &EvalOptions) -> Result<Approx> {
    let a = F_pm(sign, 1.0 - t, 1.0 - s, fopts, opts)?;
    let b = F_pm(sign, s, t, fopts, opts)?.scale(sign.two_pi_i_pow(s + t - 1.0));
    Ok(a - b)
}
