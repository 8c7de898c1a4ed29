#![allow(non_snake_case)]

use std::f64::consts::PI;

use super::{build_contour, integrate_contour, Decay, Integrand, PoleRay, PoleSet};
use crate::error::{Error, Result};
use crate::special::gamma::{cos_pi, gamma_c, rgamma_c};
use crate::value::{Approx, CVal, EvalOptions};

fn two_pi_i() -> CVal {
    CVal::new(0.0, 2.0 * PI)
}

fn check_positive(s: CVal, t: CVal) -> Result<()> {
    if s.re <= 0.0 || t.re <= 0.0 {
        return Err(Error::Domain(format!("need Re s, Re t > 0, got {s}, {t}")));
    }
    Ok(())
}

fn pfd_poles(s: CVal, t: CVal) -> PoleSet {
    PoleSet {
        left: vec![PoleRay::leftward(s - 1.0, 1.0), PoleRay::leftward(-t, 1.0)],
        right: vec![PoleRay::rightward(s, 1.0), PoleRay::rightward(CVal::new(0.0, 0.0), 1.0)],
        neutral: vec![],
    }
}

fn pfd_integral(s: CVal, t: CVal, p: f64, r: f64, with_cos: bool, opts: &EvalOptions) -> Result<Approx> {
    check_positive(s, t)?;
    let rg = rgamma_c(1.0 - s);
    let (lp, lr) = (p.ln(), r.ln());
    let f = Integrand::new(
        move |eta: CVal| {
            let mut v = gamma_c(1.0 - s + eta) * gamma_c(-eta) * rg * gamma_c(s - eta) * gamma_c(t + eta)
                * (-(s - eta) * lp - (t + eta) * lr).exp();
            if with_cos {
                v *= cos_pi(s - eta);
            }
            v
        },
        Decay::Exponential,
    );
    let spec = build_contour(&pfd_poles(s, t), opts.quad_height, opts.quad_rel_tol, Some(0.5 * s.re.min(1.0)))?;
    Ok(integrate_contour(&f, &spec)?.scale(1.0 / two_pi_i()))
}

/// The first partial-fraction integral `I(s,t;p,r)`.
pub fn pfd_I(s: CVal, t: CVal, p: f64, r: f64, opts: &EvalOptions) -> Result<Approx> {
    if !(p > 0.0 && r > 0.0) {
        return Err(Error::Domain("p and r must be positive".into()));
    }
    pfd_integral(s, t, p, r, false, opts)
}

/// The second partial-fraction integral `J(s,t;p,q-p)`, for `0 < p < q`.
pub fn pfd_J(s: CVal, t: CVal, p: f64, q: f64, opts: &EvalOptions) -> Result<Approx> {
    if !(p > 0.0 && p < q) {
        return Err(Error::Domain(format!("need 0 < p < q, got p = {p}, q = {q}")));
    }
    pfd_integral(s, t, p, q - p, true, opts)
}

fn gamma_product(s: CVal, t: CVal, p: f64, q: f64) -> CVal {
    gamma_c(s) * gamma_c(t) * (-s * p.ln() - t * q.ln()).exp()
}

/// `I(s,t;p,p+q) + I(t,s;q,p+q) − Γ(s)Γ(t)/(p^s q^t)`.
pub fn pfd_identity_residual(s: CVal, t: CVal, p: f64, q: f64, opts: &EvalOptions) -> Result<Approx> {
    let a = pfd_I(s, t, p, p + q, opts)?;
    let b = pfd_I(t, s, q, p + q, opts)?;
    Ok(a + b - Approx::from(gamma_product(s, t, p, q)))
}

/// `J(s,t;p,q-p) + I(t,s;q,q-p) − cos(πs)Γ(s)Γ(t)/(p^s q^t)`.
pub fn pfd_j_identity_residual(s: CVal, t: CVal, p: f64, q: f64, opts: &EvalOptions) -> Result<Approx> {
    let a = pfd_J(s, t, p, q, opts)?;
    let b = pfd_I(t, s, q, q - p, opts)?;
    Ok(a + b - Approx::from(cos_pi(s) * gamma_product(s, t, p, q)))
}

/// Mellin–Barnes integral of the Barnes-lemma kernel minus its closed form
/// `Γ(s+t)/(t Γ(s) Γ(t))`.
pub fn barnes_lemma_check(s: CVal, t: CVal, opts: &EvalOptions) -> Result<Approx> {
    check_positive(s, t)?;
    let norm = rgamma_c(1.0 - s) * rgamma_c(s) * rgamma_c(t);
    let f = Integrand::new(
        move |eta: CVal| gamma_c(1.0 - s + eta) * gamma_c(-eta) * gamma_c(s - eta) * gamma_c(t + eta) * norm,
        Decay::Exponential,
    );
    let spec = build_contour(&pfd_poles(s, t), opts.quad_height, opts.quad_rel_tol, Some(0.5 * s.re.min(1.0)))?;
    let integral = integrate_contour(&f, &spec)?.scale(1.0 / two_pi_i());
    let closed = gamma_c(s + t) * rgamma_c(s) * rgamma_c(t) / t;
    Ok(integral - Approx::from(closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::{c, cr};

    #[test]
    fn barnes_examples() {
        let o = EvalOptions::default();
        for (s, t) in [(cr(1.3), cr(2.1)), (c(0.7, 0.5), c(1.9, -0.2)), (cr(2.5), cr(2.5))] {
            let r = barnes_lemma_check(s, t, &o).unwrap();
            assert!(r.norm() < 1e-9, "{s} {t}: {r:?}");
        }
    }

    #[test]
    fn partial_fraction_identities() {
        let o = EvalOptions::default();
        let r = pfd_identity_residual(cr(1.3), cr(2.1), 1.0, 2.0, &o).unwrap();
        assert!(r.norm() < 1e-8 * gamma_product(cr(1.3), cr(2.1), 1.0, 2.0).norm());
        let r = pfd_identity_residual(cr(0.6), cr(0.9), 2.0, 3.0, &o).unwrap();
        assert!(r.norm() < 1e-8);
        let half = pfd_I(cr(1.7), cr(1.7), 1.5, 3.0, &o).unwrap();
        let want = 0.5 * gamma_c(cr(1.7)).powi(2) * 1.5f64.powf(-3.4);
        assert!((half.value - want).norm() < 1e-10);
        let r = pfd_j_identity_residual(cr(1.3), cr(2.1), 1.0, 3.0, &o).unwrap();
        assert!(r.norm() < 1e-8, "{r:?}");
        let r = pfd_j_identity_residual(c(0.8, 0.3), cr(1.4), 1.0, 2.5, &o).unwrap();
        assert!(r.norm() < 1e-8, "{r:?}");
        assert!(matches!(pfd_J(cr(1.3), cr(2.1), 3.0, 3.0, &o), Err(Error::Domain(_))));
    }
}
