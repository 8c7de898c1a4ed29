//! Mellin–Barnes integrals along vertical lines.
//!
//! A contour is a vertical line `Re η = x0` traversed upward. Poles that the
//! line leaves on the wrong side are accounted for by residues taken on small
//! circles, which is equivalent to indenting the line around them.

mod checks;
mod poles;

pub use checks::{barnes_lemma_check, pfd_I, pfd_J, pfd_identity_residual, pfd_j_identity_residual};
pub use poles::{build_contour, PoleRay, PoleSet};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::value::{Approx, CVal};

pub const MAX_HEIGHT: f64 = 160.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decay {
    Exponential,
    SuperExponential,
}

/// An integrand together with its decay class along vertical lines.
pub struct Integrand<'a> {
    f: Box<dyn Fn(CVal) -> CVal + Send + Sync + 'a>,
    pub decay: Decay,
}

impl<'a> Integrand<'a> {
    pub fn new(f: impl Fn(CVal) -> CVal + Send + Sync + 'a, decay: Decay) -> Self {
        Integrand { f: Box::new(f), decay }
    }

    pub fn eval(&self, eta: CVal) -> CVal {
        (self.f)(eta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A pole (or tight cluster of poles) that the straight line puts on the
/// wrong side. `side` is where the contour must leave it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Indentation {
    pub center: CVal,
    pub radius: f64,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContourSpec {
    pub x0: f64,
    pub height: f64,
    pub indentations: Vec<Indentation>,
    pub panel_target_tol: f64,
}

impl ContourSpec {
    pub fn line(x0: f64, height: f64, panel_target_tol: f64) -> Self {
        ContourSpec { x0, height, indentations: Vec::new(), panel_target_tol }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.height >= 10.0) || !self.x0.is_finite() || !(self.panel_target_tol > 0.0) {
            return Err(Error::Domain(format!("invalid contour {self:?}")));
        }
        for (i, a) in self.indentations.iter().enumerate() {
            if !(a.radius > 0.0) {
                return Err(Error::Domain("indentation radius must be positive".into()));
            }
            for b in &self.indentations[i + 1..] {
                if (a.center - b.center).norm() < a.radius + b.radius {
                    return Err(Error::Domain("indentation disks overlap".into()));
                }
            }
        }
        Ok(())
    }
}

fn tail_bound(f: &Integrand, x0: f64, t: f64) -> Result<f64> {
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let a = f.eval(CVal::new(x0, sign * t)).norm();
        let b = f.eval(CVal::new(x0, 2.0 * sign * t)).norm();
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite(format!("integrand at height {t}")));
        }
        if a == 0.0 && b == 0.0 {
            continue;
        }
        if b >= a {
            return Err(Error::TailDivergence(format!(
                "|f| grows from {a:e} to {b:e} between heights {t} and {}",
                2.0 * t
            )));
        }
        let rate = (a / b).ln() / t;
        total += a / rate;
    }
    Ok(total)
}

/// Residue sum inside a circle: `(1/2πi) ∮ f`, counterclockwise.
/// Also returns the mean modulus of the samples, the scale for rounding.
fn circle_mean(f: &Integrand, center: CVal, radius: f64, n: usize) -> (CVal, f64) {
    let mut s = CVal::new(0.0, 0.0);
    let mut m = 0.0;
    for k in 0..n {
        let w = CVal::from_polar(radius, 2.0 * PI * (k as f64 + 0.5) / n as f64);
        let v = f.eval(center + w) * w;
        s += v;
        m += v.norm();
    }
    (s / n as f64, m / n as f64)
}

fn circle_residue(f: &Integrand, center: CVal, radius: f64) -> Result<Approx> {
    let mut n = 64;
    let (mut prev, _) = circle_mean(f, center, radius, n);
    while n <= 4096 {
        n *= 2;
        let (cur, mag) = circle_mean(f, center, radius, n);
        if !cur.re.is_finite() || !cur.im.is_finite() {
            return Err(Error::NonFinite(format!("integrand on circle around {center}")));
        }
        let diff = (cur - prev).norm();
        let scale = mag.max(f64::MIN_POSITIVE);
        if diff <= 1e-13 * scale || (n >= 256 && diff <= 1e-10 * scale) {
            return Ok(Approx::new(cur, diff + 4.0 * f64::EPSILON * scale));
        }
        prev = cur;
    }
    Err(Error::NonConvergence(format!("residue at {center} did not settle")))
}

/// `∫ f dη` along the contour, bottom to top.
pub fn integrate_contour(f: &Integrand, c: &ContourSpec) -> Result<Approx> {
    c.validate()?;
    let i = CVal::new(0.0, 1.0);
    let g = |y: f64| f.eval(CVal::new(c.x0, y)) * i;
    let mut height = c.height;
    let line = loop {
        let q = integrate(&g, -height, height, 2.0, c.panel_target_tol, 0.0)?;
        let tail = tail_bound(f, c.x0, height)?;
        let good = tail <= c.panel_target_tol * q.l1.max(f64::MIN_POSITIVE);
        if good || height * 2.0 > MAX_HEIGHT {
            break Approx::new(q.value, q.abs_err + tail);
        }
        height *= 2.0;
    };
    let mut total = line;
    for ind in &c.indentations {
        let r = circle_residue(f, ind.center, ind.radius)?;
        let k = match ind.side {
            Side::Left => CVal::new(0.0, 2.0 * PI),
            Side::Right => CVal::new(0.0, -2.0 * PI),
        };
        total = total + r * k;
    }
    total.checked("contour integral")
}

/// Residue of `f` at `eta0`, from a circle of radius `1e-2`.
pub fn residue_numeric(f: &Integrand, eta0: CVal, order: u32) -> Result<Approx> {
    if order == 0 {
        return Err(Error::Domain("pole order must be at least 1".into()));
    }
    circle_residue(f, eta0, 1e-2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::gamma_c;
    use crate::value::{c, cr};

    #[test]
    fn zero_integrand() {
        let f = Integrand::new(|_| cr(0.0), Decay::SuperExponential);
        let r = integrate_contour(&f, &ContourSpec::line(0.3, 10.0, 1e-12)).unwrap();
        assert_eq!(r.value, cr(0.0));
        assert_eq!(r.abs_err, 0.0);
    }

    #[test]
    fn gaussian_on_imaginary_axis() {
        let f = Integrand::new(|z: CVal| (-z * z).exp(), Decay::SuperExponential);
        // e^{y²} grows: the integrand is not decaying on Re η = 0
        let bad = integrate_contour(&f, &ContourSpec::line(0.0, 10.0, 1e-12));
        assert!(bad.is_err());
        let f = Integrand::new(|z: CVal| (z * z).exp(), Decay::SuperExponential);
        let r = integrate_contour(&f, &ContourSpec::line(0.0, 10.0, 1e-12)).unwrap();
        assert!((r.value - c(0.0, PI.sqrt())).norm() < 1e-13, "{r:?}");
    }

    #[test]
    fn residues() {
        let f = Integrand::new(|z: CVal| 1.0 / z, Decay::Exponential);
        assert!((residue_numeric(&f, cr(0.0), 1).unwrap().value - cr(1.0)).norm() < 1e-14);
        let g = Integrand::new(gamma_c, Decay::Exponential);
        assert!((residue_numeric(&g, cr(-1.0), 1).unwrap().value - cr(-1.0)).norm() < 1e-13);
        let h = Integrand::new(|z: CVal| 1.0 / (z * z), Decay::Exponential);
        assert!(residue_numeric(&h, cr(0.0), 2).unwrap().value.norm() < 1e-14);
    }

    #[test]
    fn indentation_adds_residue() {
        // Γ(η) on Re η = -0.5 misses the pole at 0 unless indented
        let f = Integrand::new(|z: CVal| gamma_c(z) * (z * 0.0).exp(), Decay::Exponential);
        let mut spec = ContourSpec::line(-0.5, 40.0, 1e-12);
        let plain = integrate_contour(&f, &spec).unwrap();
        spec.indentations.push(Indentation { center: cr(0.0), radius: 0.25, side: Side::Left });
        let bent = integrate_contour(&f, &spec).unwrap();
        assert!((bent.value - plain.value - c(0.0, 2.0 * PI)).norm() < 1e-11);
        // (1/2πi)∫_{0.5} Γ(η) dη = Σ_n Res Γ = 1/e
        let line = integrate_contour(&f, &ContourSpec::line(0.5, 40.0, 1e-12)).unwrap();
        assert!((line.value / c(0.0, 2.0 * PI) - cr((-1.0f64).exp())).norm() < 1e-12);
        assert!((bent.value - line.value).norm() < 1e-11);
    }

    #[test]
    fn tail_shrinks_with_height() {
        let f = Integrand::new(|z: CVal| (-(1.0 - z * z).sqrt() * 0.3).exp(), Decay::Exponential);
        let a = integrate_contour(&f, &ContourSpec::line(0.0, 10.0, 1e-12)).unwrap();
        let b = integrate_contour(&f, &ContourSpec::line(0.0, 20.0, 1e-12)).unwrap();
        assert!(b.abs_err <= a.abs_err);
    }
}
