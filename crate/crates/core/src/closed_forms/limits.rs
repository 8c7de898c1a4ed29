//! Numeric and exact oracles for the limits of `ζ(s,t;u)` at
//! non-positive integer points.
//!
//! The continuation divides by `Δ(s,t;u)`. At `(-a,-b,-c)` with `a+b+c` odd
//! the limit paths all agree and `Δ` stays of size at most `O(ε²)`, so the
//! numeric limit is well conditioned. For even `a+b+c` every path makes
//! `Δ = O(ε⁴)` and the numeric route is not used; the exact Faulhaber
//! expansion below covers the `u`-last path at every weight instead.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::values::LimitPath;
use crate::error::{Error, Result};
use crate::special::bernoulli::{bernoulli, zeta_nonpos_exact};
use crate::special::rational::{binomial, sign_pow, Rational};
use crate::tornheim::continued_unguarded;
use crate::value::{cr, Approx, CVal, EvalOptions};

/// Step pair for the extrapolation.
pub const RICHARDSON_STEPS: (f64, f64) = (1e-2, 1e-3);
/// Outer steps of the nested paths; kept off the inner ones so that `s + u`
/// never lands exactly on the lattice where single A-terms have poles.
const OUTER_STEPS: (f64, f64) = (1.5e-2, 1.5e-3);

/// Limit at 0 of a function analytic in a punctured neighbourhood with a
/// removable singularity: averages `f(±ε)` to cancel odd powers, then
/// eliminates the `ε²` term.
pub fn richardson_sym(mut f: impl FnMut(f64) -> Result<Approx>, e1: f64, e2: f64) -> Result<Approx> {
    let d = |f: &mut dyn FnMut(f64) -> Result<Approx>, e: f64| -> Result<Approx> { Ok((f(e)? + f(-e)?) * 0.5) };
    let d1 = d(&mut f, e1)?;
    let d2 = d(&mut f, e2)?;
    let (q1, q2) = (e1 * e1, e2 * e2);
    let v = (d2.value * q1 - d1.value * q2) / (q1 - q2);
    // the remaining error is O(e1² e2²); the gap between the steps bounds it
    let err = (d1.abs_err * q2 + d2.abs_err * q1) / (q1 - q2) + (d2.value - d1.value).norm() * q2 / (q1 - q2);
    Ok(Approx::new(v, err))
}

/// Numeric limit of the continued `ζ(s,t;u)` at `(-a,-b,-c)` along `path`,
/// with `r` the slope of `t` relative to `s` on the joint path.
pub fn corollary_numeric(a: u32, b: u32, c: u32, path: LimitPath, opts: &EvalOptions) -> Result<Approx> {
    if (a + b + c) % 2 == 0 {
        return Err(Error::Domain(format!(
            "numeric limit at weight {} is ill-conditioned (Δ = O(ε⁴))",
            a + b + c
        )));
    }
    let (fa, fb, fc) = (-(a as f64), -(b as f64), -(c as f64));
    let z = |s: CVal, t: CVal, u: CVal| continued_unguarded(s, t, u, opts);
    let (e1, e2) = RICHARDSON_STEPS;
    match path {
        LimitPath::JointSt => richardson_sym(|e| z(cr(fa + e), cr(fb + 0.7 * e), cr(fc)), e1, e2),
        LimitPath::UThen => richardson_sym(|e| z(cr(fa), cr(fb), cr(fc + e)), e1, e2),
        LimitPath::SThenU => richardson_sym(
            |d| richardson_sym(|e| z(cr(fa + d), cr(fb), cr(fc + e)), e1, e2),
            OUTER_STEPS.0,
            OUTER_STEPS.1,
        ),
        LimitPath::TThenU => richardson_sym(
            |d| richardson_sym(|e| z(cr(fa), cr(fb + d), cr(fc + e)), e1, e2),
            OUTER_STEPS.0,
            OUTER_STEPS.1,
        ),
    }
}

/// `S_p(N) = Σ_{m=1}^{N-1} m^p` as a polynomial in `N` (coefficients from
/// degree 0 up), via Bernoulli polynomials.
fn power_sum_poly(p: u32) -> Vec<Rational> {
    // S_p(N) = (B_{p+1}(N) - B_{p+1}) / (p+1), B_n(x) = Σ_j C(n,j) B_j x^{n-j}
    let n = p + 1;
    let mut out = vec![Rational::zero(); n as usize + 1];
    for j in 0..n {
        let coeff = Rational::from_integer(binomial(n, j)) * bernoulli(j as usize);
        out[(n - j) as usize] += coeff / Rational::from_integer(BigInt::from(n));
    }
    out
}

/// Coefficients `p_j` with `Σ_{m+n=N} m^a n^b = Σ_j p_j N^j`, so that
/// `ζ(-a,-b;u) = Σ_j p_j ζ(u-j)` on the half plane of convergence.
pub fn nonpositive_ab_power_sum(a: u32, b: u32) -> Vec<Rational> {
    // n^b = (N - m)^b expanded in m, then Σ_{m<N} m^{a+b-i} N^i
    let mut out = vec![Rational::zero(); (a + b + 2) as usize];
    for i in 0..=b {
        let mut sums = power_sum_poly(a + b - i);
        if a + b - i == 0 {
            // the Bernoulli form counts m = 0 as well
            sums[0] -= Rational::one();
        }
        let w = Rational::from_integer(binomial(b, i) * sign_pow((b - i) as i64));
        for (deg, c) in sums.into_iter().enumerate() {
            out[deg + i as usize] += &w * c;
        }
    }
    out
}

/// `lim_{u→-c} ζ(-a,-b;u)` from the power-sum expansion.
pub fn nonpositive_ab_limit_exact(a: u32, b: u32, c: u32) -> Rational {
    nonpositive_ab_power_sum(a, b)
        .into_iter()
        .enumerate()
        .map(|(j, p)| p * zeta_nonpos_exact(c + j as u32))
        .sum()
}
