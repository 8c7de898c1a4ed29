#![allow(non_snake_case)]

use super::afunc::{a_shifted_raw, A_shifted, NEAR_SINGULAR};
use super::direct::tornheim_direct;
use super::point::{delta, is_convergent, singular_flags};
use crate::error::{Error, Result};
use crate::special::gamma::cos_pi;
use crate::value::{Approx, CVal, EvalOptions};

/// `Z(s,t;u) = ζ(s,t;u) + cos(πt) ζ(t,u;s) + cos(πs) ζ(u,s;t)` from the
/// convergent series.
pub fn Z_def(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    let a = tornheim_direct(s, t, u, opts)?;
    let b = tornheim_direct(t, u, s, opts)?;
    let c = tornheim_direct(u, s, t, opts)?;
    Ok(a + b * cos_pi(t) + c * cos_pi(s))
}

/// `Z = A(s,t;u) + A(t,s;u)` together with the series value when available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZDecomposition {
    pub z_value: Option<Approx>,
    pub a_st: Approx,
    pub a_ts: Approx,
    /// `|Z_def − A(s,t;u) − A(t,s;u)|`; `None` when the series side is unavailable
    pub residual: Option<f64>,
}

impl ZDecomposition {
    pub fn z_from_a(&self) -> Approx {
        self.a_st + self.a_ts
    }
}

pub fn z_decompose(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<ZDecomposition> {
    let a_st = A_shifted(s, t, u, None, opts)?;
    let a_ts = A_shifted(t, s, u, None, opts)?;
    let all_convergent = [(s, t, u), (t, u, s), (u, s, t)].iter().all(|&(x, y, z)| is_convergent(x, y, z, 0.05));
    let z_value = if all_convergent { Some(Z_def(s, t, u, opts)?) } else { None };
    let residual = z_value.map(|z| (z.value - a_st.value - a_ts.value).norm());
    Ok(ZDecomposition { z_value, a_st, a_ts, residual })
}

fn z_via_a(s: CVal, t: CVal, u: CVal, guarded: bool, opts: &EvalOptions) -> Result<Approx> {
    if guarded {
        Ok(A_shifted(s, t, u, None, opts)? + A_shifted(t, s, u, None, opts)?)
    } else {
        Ok(a_shifted_raw(s, t, u, None, opts)? + a_shifted_raw(t, s, u, None, opts)?)
    }
}

/// Cofactor expansion of the cosine matrix: `Δ ζ(s,t;u) = (1 − cos²πu) Z(s,t;u)
/// + (cos πs cos πu − cos πt) Z(t,u;s) + (cos πt cos πu − cos πs) Z(u,s;t)`.
pub(crate) fn continued_unguarded(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    continued_inner(s, t, u, false, opts)
}

fn continued_inner(s: CVal, t: CVal, u: CVal, guarded: bool, opts: &EvalOptions) -> Result<Approx> {
    let d = delta(s, t, u);
    if d.norm() < 1e-6 {
        return Err(Error::NearSingularDenominator(format!("Δ = {d:e} at ({s}, {t}, {u})")));
    }
    let (cs, ct, cu) = (cos_pi(s), cos_pi(t), cos_pi(u));
    let z1 = z_via_a(s, t, u, guarded, opts)?;
    let z2 = z_via_a(t, u, s, guarded, opts)?;
    let z3 = z_via_a(u, s, t, guarded, opts)?;
    let v = z1 * (1.0 - cu * cu) + z2 * (cs * cu - ct) + z3 * (ct * cu - cs);
    Ok(v.scale(1.0 / d))
}

/// `ζ(s,t;u)` anywhere off the singular set, from the three Z-values.
pub fn tornheim_continued(s: CVal, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    if let Some(f) = singular_flags(s, t, u, NEAR_SINGULAR).first() {
        return Err(Error::SingularPoint(format!("({s}, {t}, {u}) is within {:.2e} of {:?}", f.distance, f.plane)));
    }
    continued_inner(s, t, u, true, opts)
}
