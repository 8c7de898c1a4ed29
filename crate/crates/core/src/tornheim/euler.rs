//! Euler's double zeta `ζ(s,t) = Σ_{N>n≥1} n^{-t} N^{-s}` through
//! `(1/2πi) ∫ Γ(s+η)Γ(-η)/Γ(s) ζ(t-η) ζ(s+η) dη`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::contour::{build_contour, integrate_contour, Decay, Integrand, PoleRay, PoleSet};
use crate::error::{Error, Result};
use crate::special::gamma::{gamma_c, rgamma_c};
use crate::special::zeta::zeta_c;
use crate::value::{Approx, CVal, EvalOptions};

/// Which side the pole of `ζ(t-η)` at `η = t-1` is kept on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EulerContour {
    /// the series itself: `t-1` to the right
    Series,
    /// `t-1` to the left, which removes the residue term
    Shifted,
}

pub(crate) fn euler_mb(s: CVal, t: CVal, which: EulerContour, opts: &EvalOptions) -> Result<Approx> {
    let rg = rgamma_c(s);
    let f = Integrand::new(
        move |eta: CVal| gamma_c(s + eta) * gamma_c(-eta) * rg * zeta_c(t - eta, opts) * zeta_c(s + eta, opts),
        Decay::Exponential,
    );
    let origin = Complex64::new(0.0, 0.0);
    let mut set = PoleSet {
        left: vec![PoleRay::leftward(1.0 - s, 1.0)],
        right: vec![PoleRay::rightward(origin, 1.0)],
        neutral: vec![],
    };
    match which {
        EulerContour::Series => set.right.push(PoleRay::single(t - 1.0)),
        EulerContour::Shifted => set.left.push(PoleRay::single(t - 1.0)),
    }
    let spec = build_contour(&set, opts.quad_height, opts.quad_rel_tol, Some(-0.5))?;
    Ok(integrate_contour(&f, &spec)?.scale(1.0 / Complex64::new(0.0, 2.0 * PI)))
}

/// Euler's double zeta function.
pub fn euler_double_zeta(s: CVal, t: CVal, opts: &EvalOptions) -> Result<Approx> {
    if (s - 1.0).norm() < 1e-8 {
        return Err(Error::SingularPoint("s = 1".into()));
    }
    let w = s + t;
    if (w - 1.0).norm() < 1e-8 {
        return Err(Error::SingularPoint("s + t = 1".into()));
    }
    if w.im.abs() < 1e-8 && w.re <= 2.0 + 1e-8 && ((w.re - 2.0) / 2.0 - ((w.re - 2.0) / 2.0).round()).abs() < 1e-8 {
        return Err(Error::SingularPoint(format!("s + t = {w} lies on 2 - 2l")));
    }
    euler_mb(s, t, EulerContour::Series, opts)
}

/// `Γ(1-t) Γ(s+t-1) ζ(s+t-1) / Γ(s)`, the residue term that separates
/// `ζ(s,t)` from `h(s,t)`.
pub(crate) fn euler_residue_term(s: CVal, t: CVal, opts: &EvalOptions) -> CVal {
    gamma_c(1.0 - t) * gamma_c(s + t - 1.0) * zeta_c(s + t - 1.0, opts) * rgamma_c(s)
}
