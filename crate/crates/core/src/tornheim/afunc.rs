//! The A-function
//! `A(s,t;u) = sin(πs)/(2πi) ∫_L cot(π(s-η)/2) Γ(t+η)Γ(-η)/Γ(t) ζ(s-η) ζ(t+u+η) dη`.

#![allow(non_snake_case)]

use std::f64::consts::PI;

use num_complex::Complex64;

use super::point::lattice_distance;
use crate::contour::{build_contour, integrate_contour, ContourSpec, Decay, Integrand, PoleRay, PoleSet};
use crate::error::{Error, Result};
use crate::special::gamma::{cos_pi, cot_half_pi, gamma_c, rgamma_c, sin_pi};
use crate::special::pochhammer::pochhammer;
use crate::special::zeta::{riemann_zeta, zeta_c};
use crate::value::{Approx, CVal, EvalOptions};

/// Refusal radius around the hyperplanes `t + u = 1 - l`.
pub const NEAR_SINGULAR: f64 = 0.02;
const MAX_K: i64 = 60;

fn integrand<'a>(s: CVal, t: CVal, u: CVal, opts: &'a EvalOptions) -> Integrand<'a> {
    let rg = rgamma_c(t);
    let tu = t + u;
    Integrand::new(
        move |eta: CVal| {
            cot_half_pi(s - eta) * gamma_c(t + eta) * gamma_c(-eta) * rg * zeta_c(s - eta, opts) * zeta_c(tu + eta, opts)
        },
        Decay::Exponential,
    )
}

fn prefactor(s: CVal) -> CVal {
    sin_pi(s) / Complex64::new(0.0, 2.0 * PI)
}

fn check_hyperplane(t: CVal, u: CVal) -> Result<()> {
    let (l, d) = lattice_distance(t + u);
    if d < NEAR_SINGULAR {
        return Err(Error::SingularPoint(format!("t + u = {} is within {d:.2e} of 1 - {l}", t + u)));
    }
    Ok(())
}

fn distance_to_naturals(w: CVal) -> f64 {
    let n = w.re.round().max(0.0);
    (w - n).norm()
}

/// The pole separation of the defining contour `L`.
pub fn a_pole_set(s: CVal, t: CVal, u: CVal) -> PoleSet {
    PoleSet {
        left: vec![PoleRay::leftward(s, 2.0), PoleRay::leftward(-t, 1.0), PoleRay::single(1.0 - t - u)],
        right: vec![PoleRay::rightward(Complex64::new(0.0, 0.0), 1.0)],
        // ζ(s-η) has its pole where the cotangent vanishes; the cotangent
        // poles at s+2n meet trivial zeros
        neutral: vec![PoleRay::single(s - 1.0), PoleRay::rightward(s + 2.0, 2.0)],
    }
}

/// `A(s,t;u)` from the defining contour integral.
pub fn A_contour(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    for (name, w) in [("s", s), ("-t", -t), ("1-t-u", 1.0 - t - u)] {
        if distance_to_naturals(w) < 0.05 {
            return Err(Error::SingularPoint(format!("{name} = {w} is too close to a non-negative integer")));
        }
    }
    check_hyperplane(t, u)?;
    let spec = build_contour(&a_pole_set(s, t, u), opts.quad_height, opts.quad_rel_tol, Some(-0.25))?;
    let f = integrand(s, t, u, opts);
    let pre = prefactor(s);
    let v = integrate_contour(&f, &spec)?;
    if pre == Complex64::new(0.0, 0.0) {
        return Ok(Approx::zero());
    }
    Ok(v.scale(pre))
}

/// Least `K >= 0` with `Re s <= K + 1/4`, `Re t >= -K - 1/4` and
/// `Re(t+u) >= -K + 3/4`.
pub fn auto_k(s: CVal, t: CVal, u: CVal) -> Result<u32> {
    let need = [(s.re - 0.25).ceil(), (-t.re - 0.25).ceil(), (0.75 - (t + u).re).ceil()];
    let k = need.iter().fold(0.0f64, |a, &b| a.max(b));
    if !k.is_finite() || k > MAX_K as f64 {
        return Err(Error::NoAdmissibleK(format!("shift would need K = {k}")));
    }
    Ok(k as u32)
}

fn check_k(s: CVal, t: CVal, u: CVal, k: u32) -> Result<()> {
    let kf = k as f64;
    if !(s.re < kf + 0.5 && t.re > -kf - 0.5 && (t + u).re > -kf + 0.5) {
        return Err(Error::NoAdmissibleK(format!("K = {k} does not satisfy the shift inequalities")));
    }
    Ok(())
}

/// Residue sum plus the `L_K` integral, with no hyperplane guard.
pub(crate) fn a_shifted_raw(s: CVal, t: CVal, u: CVal, k: Option<u32>, opts: &EvalOptions) -> Result<Approx> {
    let k = match k {
        Some(k) => k,
        None => auto_k(s, t, u)?,
    };
    check_k(s, t, u, k)?;
    let mut total = Approx::zero();
    for j in 0..=k {
        let poch = pochhammer(t, j);
        if poch.value == Complex64::new(0.0, 0.0) {
            continue;
        }
        let arg = s - j as f64;
        if arg == Complex64::new(1.0, 0.0) {
            // cos² has a double zero against the simple pole of ζ
            continue;
        }
        let fact: f64 = (1..=j).map(|i| i as f64).product();
        let c = cos_pi(arg * 0.5);
        let w = 2.0 * c * c / fact;
        let z1 = riemann_zeta(arg, opts)?;
        let z2 = riemann_zeta(t + u + j as f64, opts)?;
        total = total + poch * z1 * z2 * w;
    }
    let pre = prefactor(s);
    if pre != Complex64::new(0.0, 0.0) && rgamma_c(t) != Complex64::new(0.0, 0.0) {
        let spec = ContourSpec::line(k as f64 + 0.5, opts.quad_height, opts.quad_rel_tol);
        let v = integrate_contour(&integrand(s, t, u, opts), &spec)?;
        total = total + v.scale(pre);
    }
    total.checked("A-function")
}

/// `A(s,t;u)` from the contour moved to `Re η = K + 1/2` (`K` automatic when
/// `None`). Non-positive integer `t` is allowed: the integral then vanishes
/// and the residue sum terminates.
pub fn A_shifted(s: CVal, t: CVal, u: CVal, k: Option<u32>, opts: &EvalOptions) -> Result<Approx> {
    check_hyperplane(t, u)?;
    a_shifted_raw(s, t, u, k, opts)
}
