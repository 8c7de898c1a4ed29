//! Adaptive 16-point Gauss–Legendre quadrature of complex-valued functions
//! on real intervals.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::value::CVal;

const NODES: usize = 16;
const MAX_DEPTH: u32 = 60;
const MAX_PANELS: usize = 200_000;
// integrands built from cancelling sums (zeta near the origin) carry noise
// around 1e-13 relative; differences below this floor are not refinable
const NOISE_ULPS: f64 = 4096.0;

/// Nodes and weights on [-1, 1], ascending.
pub fn gl16() -> &'static ([f64; NODES], [f64; NODES]) {
    static T: OnceLock<([f64; NODES], [f64; NODES])> = OnceLock::new();
    T.get_or_init(|| {
        let n = NODES;
        let mut x = [0.0; NODES];
        let mut w = [0.0; NODES];
        for i in 0..n {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, z);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            x[n - 1 - i] = z;
            w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        (x, w)
    })
}

/// One Gauss–Legendre panel; also returns `∫|f|` on the panel.
pub fn panel<F: Fn(f64) -> CVal>(f: &F, a: f64, b: f64) -> (CVal, f64) {
    let (x, w) = gl16();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut s = CVal::new(0.0, 0.0);
    let mut l1 = 0.0;
    for i in 0..NODES {
        let v = f(mid + half * x[i]);
        s += v * w[i];
        l1 += v.norm() * w[i];
    }
    (s * half, l1 * half.abs())
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: CVal,
    pub abs_err: f64,
    /// `∫ |f|` estimate, the natural scale for cancellation
    pub l1: f64,
}

/// `∫_a^b f`, refining panels until the total error estimate is at most
/// `rel_tol · ∫|f| + abs_tol`. Initial panels have width at most `h0`.
pub fn integrate<F: Fn(f64) -> CVal>(
    f: &F,
    a: f64,
    b: f64,
    h0: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: CVal::new(0.0, 0.0), abs_err: 0.0, l1: 0.0 });
    }
    let n0 = (((b - a).abs() / h0).ceil() as usize).max(1);
    let width = (b - a) / n0 as f64;
    let mut coarse: Vec<(f64, f64, CVal)> = Vec::with_capacity(n0);
    let mut l1 = 0.0;
    for i in 0..n0 {
        let pa = a + width * i as f64;
        let pb = if i + 1 == n0 { b } else { pa + width };
        let (v, m) = panel(f, pa, pb);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite(format!("integrand not finite on [{pa}, {pb}]")));
        }
        l1 += m;
        coarse.push((pa, pb, v));
    }
    let tol = rel_tol * l1 + abs_tol;
    let total_len = (b - a).abs();
    let mut value = CVal::new(0.0, 0.0);
    let mut err = 0.0;
    let mut panels = 0usize;
    // depth-first with an explicit stack keeps the summation order fixed
    let mut stack: Vec<(f64, f64, CVal, u32)> = coarse.into_iter().rev().map(|(x, y, v)| (x, y, v, 0)).collect();
    while let Some((pa, pb, whole, depth)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::NonConvergence("quadrature panel budget exhausted".into()));
        }
        let m = 0.5 * (pa + pb);
        let (left, l1_left) = panel(f, pa, m);
        let (right, l1_right) = panel(f, m, pb);
        let halves = left + right;
        if !halves.re.is_finite() || !halves.im.is_finite() {
            return Err(Error::NonFinite(format!("integrand not finite on [{pa}, {pb}]")));
        }
        let diff = (halves - whole).norm();
        let share = tol * (pb - pa).abs() / total_len;
        // below this the difference is rounding noise of the integrand
        let noise = NOISE_ULPS * f64::EPSILON * (l1_left + l1_right);
        if diff <= share {
            value += halves;
            // halving an already-converged panel gains many digits
            err += diff * 1e-2 + f64::EPSILON * halves.norm();
        } else if diff <= noise {
            value += halves;
            err += diff;
        } else if depth >= MAX_DEPTH {
            return Err(Error::NonConvergence(format!("panel [{pa}, {pb}] did not converge")));
        } else {
            stack.push((m, pb, right, depth + 1));
            stack.push((pa, m, left, depth + 1));
        }
    }
    Ok(QuadResult { value, abs_err: err + f64::EPSILON * l1, l1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let (x, w) = gl16();
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        // exact for degree 31
        let s: f64 = x.iter().zip(w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((s - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn endpoint_singularity() {
        let f = |x: f64| CVal::new(x.sqrt(), 0.0);
        let r = integrate(&f, 0.0, 1.0, 1.0, 1e-13, 0.0).unwrap();
        assert!((r.value.re - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn oscillatory() {
        let f = |x: f64| CVal::new(0.0, x).exp();
        let r = integrate(&f, 0.0, 100.0, 2.0, 1e-13, 0.0).unwrap();
        let want = (CVal::new(0.0, 100.0).exp() - 1.0) / CVal::new(0.0, 1.0);
        assert!((r.value - want).norm() < 1e-11);
        assert!(r.abs_err < 1e-9);
    }
}
