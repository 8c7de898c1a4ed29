//! Kummer's second-kind function through its Laplace integral.

use super::gamma::rgamma_c;
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::value::{Approx, CVal};

fn ray_angle(z: CVal) -> f64 {
    let arg = z.arg();
    let sign = if arg > 0.0 {
        1.0
    } else if arg < 0.0 {
        -1.0
    } else {
        0.0
    };
    let lim = std::f64::consts::FRAC_PI_2 - 1e-3;
    (-arg + 0.2 * sign).clamp(-lim, lim)
}

/// `Ψ(α, γ; z) = Γ(α)^{-1} ∫_0^∞ e^{-zτ} τ^{α-1} (1+τ)^{γ-α-1} dτ`, for `Re α > 0`.
pub fn confluent_psi(alpha: CVal, gamma: CVal, z: CVal) -> Result<Approx> {
    if alpha.re <= 0.0 {
        return Err(Error::Domain(format!("confluent psi needs Re(alpha) > 0, got {alpha}")));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("confluent psi at z = 0".into()));
    }
    let phi = ray_angle(z);
    let dir = CVal::from_polar(1.0, phi);
    let omega = z * dir;
    let lambda = omega.re;
    if lambda <= 0.0 {
        return Err(Error::Domain(format!("no decaying ray for z = {z}")));
    }
    let beta = gamma - alpha - 1.0;
    // τ = dir · r, r = v/λ; on [0,1] also v = x^p to tame x^{α-1}
    let p = if alpha.re < 1.0 { 1.0 / alpha.re } else { 1.0 };
    let ln_scale = -(lambda.ln());
    let g = |v: f64, ln_v: f64| -> CVal {
        let ln_tau = dir.ln() + ln_v + ln_scale;
        let tau = dir * (v / lambda);
        let expo = -omega * (v / lambda) + (alpha - 1.0) * ln_tau + beta * (1.0 + tau).ln();
        expo.exp() * dir / lambda
    };
    let near = |x: f64| -> CVal {
        if x <= 0.0 {
            return CVal::new(0.0, 0.0);
        }
        let v = x.powf(p);
        g(v, p * x.ln()) * (p * x.powf(p - 1.0))
    };
    let far = |v: f64| -> CVal { g(v, v.ln()) };

    let mut v_end = 40.0;
    while g(v_end, v_end.ln()).norm() > 1e-18 * g(1.0, 0.0).norm().max(1e-300) && v_end < 4000.0 {
        v_end *= 1.5;
    }
    let rel = 1e-13;
    // ∫_0^{v0} by the leading power term; the correction is O(v0) relative
    let v0: f64 = 1e-12;
    let head = ((alpha - 1.0) * (dir.ln() + ln_scale)).exp() * dir / lambda * (alpha * v0.ln()).exp() / alpha;
    let head_err = head.norm() * v0 * (omega.norm() / lambda + beta.norm() + 1.0);
    let a = integrate(&near, v0.powf(1.0 / p), 1.0, 0.25, rel, 0.0)?;
    let b = integrate(&far, 1.0, v_end, 1.0, rel, 0.0)?;
    let tail = g(v_end, v_end.ln()).norm() * 2.0;
    let rg = rgamma_c(alpha);
    let value = (head + a.value + b.value) * rg;
    let err = (head_err + a.abs_err + b.abs_err + tail + 1e-14 * (a.l1 + b.l1)) * rg.norm() + 1e-14 * value.norm();
    Approx::new(value, err).checked("confluent psi")
}
