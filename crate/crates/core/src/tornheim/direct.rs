//! `ζ(s,t;u)` in its region of absolute convergence.
//!
//! For `Re u > 0`,
//! `Γ(u) ζ(s,t;u) = ∫_0^∞ x^{u-1} Li_s(e^{-x}) Li_t(e^{-x}) dx`.
//! On `[0,1]` both polylogarithms are replaced by their expansions at
//! `x = 0` and integrated term by term in closed form; `[1,∞)` is done by
//! quadrature with the exponentially convergent sums. Points with small
//! `Re u` are first moved right with the binomial identity
//! `ζ(s,t;u) = Σ_j C(J,j) ζ(s-j, t-J+j; u+J)`.

use num_complex::Complex64;

use super::point::is_convergent;
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::special::gamma::{gamma_c, rgamma_c};
use crate::special::zeta::zeta_c;
use crate::value::{Approx, CVal, EvalOptions};

const SERIES_TERMS: usize = 44;
const MARGIN: f64 = 0.05;

/// One term `coef · x^power · (ln x)^log` of an expansion at `x = 0`.
#[derive(Debug, Clone, Copy)]
struct Term {
    coef: CVal,
    power: CVal,
    log: u32,
}

fn positive_integer(s: CVal) -> Option<u32> {
    if s.im == 0.0 && s.re >= 1.0 && s.re.fract() == 0.0 && s.re < 1e6 {
        Some(s.re as u32)
    } else {
        None
    }
}

/// `Li_s(e^{-x}) = Γ(1-s) x^{s-1} + Σ_k ζ(s-k)(-x)^k/k!`, with the
/// logarithmic term replacing the colliding pair when `s` is a positive integer.
fn polylog_expansion(s: CVal, opts: &EvalOptions) -> Vec<Term> {
    let mut out = Vec::with_capacity(SERIES_TERMS + 2);
    let int = positive_integer(s);
    if int.is_none() {
        out.push(Term { coef: gamma_c(1.0 - s), power: s - 1.0, log: 0 });
    }
    let mut fact = 1.0;
    for k in 0..SERIES_TERMS {
        if k > 0 {
            fact *= k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let power = Complex64::new(k as f64, 0.0);
        match int {
            Some(n) if k + 1 == n as usize => {
                let harmonic: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
                out.push(Term { coef: Complex64::new(sign * harmonic / fact, 0.0), power, log: 0 });
                out.push(Term { coef: Complex64::new(-sign / fact, 0.0), power, log: 1 });
            }
            _ => out.push(Term { coef: zeta_c(s - k as f64, opts) * (sign / fact), power, log: 0 }),
        }
    }
    out
}

/// `∫_0^1 x^{a-1} (ln x)^q dx = (-1)^q q! / a^{q+1}`.
fn log_power_moment(a: CVal, q: u32) -> CVal {
    let fact = (1..=q).product::<u32>() as f64;
    let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
    sign * fact / a.powu(q + 1)
}

fn polylog_sum(s: CVal, x: f64) -> CVal {
    let extra = if s.re < 0.0 { -s.re * (60.0 / x).ln().max(1.0) } else { 0.0 };
    let m_max = ((46.0 + extra) / x).ceil() as usize + 1;
    let q = (-x).exp();
    let mut z = q;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        acc += (-s * (m as f64).ln()).exp() * z;
        z *= q;
    }
    acc
}

/// Mellin evaluation for `Re u >= 1/2`, inside the convergent region.
fn mellin(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    let a = polylog_expansion(s, opts);
    let b = polylog_expansion(t, opts);
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut last = 0.0f64;
    for x in &a {
        for y in &b {
            let v = x.coef * y.coef * log_power_moment(u + x.power + y.power, x.log + y.log);
            head += v;
            magnitude += v.norm();
            if (x.power.re - (SERIES_TERMS - 1) as f64).abs() < 0.5 || (y.power.re - (SERIES_TERMS - 1) as f64).abs() < 0.5 {
                last = last.max(v.norm());
            }
        }
    }
    let f = |x: f64| ((u - 1.0) * x.ln()).exp() * polylog_sum(s, x) * polylog_sum(t, x);
    let mut upper = 25.0f64;
    while (u.re - 1.0) * upper.ln() - 2.0 * upper > -50.0 {
        upper += 5.0;
    }
    let tail = integrate(&f, 1.0, upper, 1.0, 1e-14, 0.0)?;
    let rg = rgamma_c(u);
    let value = (head + tail.value) * rg;
    let err = (last * 10.0 + magnitude * 4.0 * f64::EPSILON + tail.abs_err) * rg.norm() + value.norm() * 1e-15;
    Approx::new(value, err).checked("tornheim direct")
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// `ζ(s,t;u) = Σ_{m,n ≥ 1} m^{-s} n^{-t} (m+n)^{-u}` where that series
/// converges (with margin 0.05 in each defining inequality).
pub fn tornheim_direct(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    if !is_convergent(s, t, u, MARGIN) {
        return Err(Error::OutOfDomain(format!("({s}, {t}, {u}) is not in the convergent region")));
    }
    if u == Complex64::new(0.0, 0.0) {
        let a = Approx::new(zeta_c(s, opts), 1e-15 * zeta_c(s, opts).norm());
        let b = Approx::new(zeta_c(t, opts), 1e-15 * zeta_c(t, opts).norm());
        return Ok(a * b);
    }
    let shift = if u.re >= 0.5 { 0 } else { (0.5 - u.re).ceil() as u32 };
    let mut total = Approx::zero();
    for j in 0..=shift {
        let term = mellin(s - j as f64, t - (shift - j) as f64, u + shift as f64, opts)?;
        total = total + term * binomial_f64(shift, j);
    }
    if total.abs_err > 1e-6 * total.norm().max(1e-300) {
        return Err(Error::SlowConvergence(format!("error estimate {:e} too large", total.abs_err)));
    }
    Ok(total)
}

/// Square partial sum `Σ_{m,n ≤ n_max}`, a brute-force cross-check.
pub fn tornheim_partial_sum(s: CVal, t: CVal, u: CVal, n_max: usize) -> CVal {
    let ln: Vec<f64> = (0..=2 * n_max).map(|k| if k == 0 { 0.0 } else { (k as f64).ln() }).collect();
    let pow = |z: CVal, k: usize| (-z * ln[k]).exp();
    let ps: Vec<CVal> = (0..=n_max).map(|m| if m == 0 { CVal::new(0.0, 0.0) } else { pow(s, m) }).collect();
    let pt: Vec<CVal> = (0..=n_max).map(|m| if m == 0 { CVal::new(0.0, 0.0) } else { pow(t, m) }).collect();
    let pu: Vec<CVal> = (0..=2 * n_max).map(|m| if m == 0 { CVal::new(0.0, 0.0) } else { pow(u, m) }).collect();
    let mut acc = CVal::new(0.0, 0.0);
    for m in 1..=n_max {
        let mut row = CVal::new(0.0, 0.0);
        for n in 1..=n_max {
            row += pt[n] * pu[m + n];
        }
        acc += ps[m] * row;
    }
    acc
}
