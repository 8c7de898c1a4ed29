//! The SU(3) Witten zeta function `ζ_SU3(s) = 2^s ζ(s,s;s)`.

use num_complex::Complex64;

use crate::closed_forms::limits::richardson_sym;
use crate::error::{Error, Result};
use crate::special::bernoulli::zeta_nonpos_exact;
use crate::special::gamma::cos_pi;
use crate::special::rational::{binomial, factorial, rat, rat_to_f64, sign_pow, Rational};
use crate::special::zeta::{riemann_zeta, riemann_zeta_deriv};
use crate::tornheim::{a_shifted_raw, NEAR_SINGULAR};
use crate::value::{cr, Approx, CVal, EvalOptions};

/// `A(s,s;s) = 2^{-s-1} (1 + 2cos πs) ζ_SU3(s)`, smooth away from the
/// poles at `s = 1/2 - k`.
pub fn witten_regularized(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    // 2s = 1 - l with l even is a genuine pole of one residue term; for odd l
    // the Pochhammer factor (s)_l vanishes and the point is regular
    let k = (0.5 - s.re).round();
    if k >= 0.0 && (s - (0.5 - k)).norm() < NEAR_SINGULAR {
        return Err(Error::SingularPoint(format!("s = {s} is within {NEAR_SINGULAR} of the pole 1/2 - {k}")));
    }
    a_shifted_raw(s, s, s, None, opts)
}

fn denominator(s: CVal) -> Complex64 {
    1.0 + 2.0 * cos_pi(s)
}

/// `ζ_SU3(s) = 2^{s+1} A(s,s;s) / (1 + 2cos πs)`.
pub fn witten_eval(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    let d = denominator(s);
    if d.norm() < 1e-6 {
        return Err(Error::NearSingularDenominator(format!("1 + 2cos(πs) = {d:e} at s = {s}")));
    }
    let a = witten_regularized(s, opts)?;
    Ok(a.scale(Complex64::new(2.0, 0.0).powc(s + 1.0) / d))
}

/// `ζ_SU3(a) = 2^{a+2}/(1 + 2(-1)^a) Σ_{k ≤ a/2} C(2a-2k-1, a-1) ζ(2k) ζ(3a-2k)`.
pub fn witten_positive_int(a: u32, opts: &EvalOptions) -> Result<Approx> {
    if a == 0 {
        return Err(Error::Domain("witten_positive_int needs a >= 1".into()));
    }
    let mut acc = Approx::zero();
    for k in 0..=a / 2 {
        let bin = rat_to_f64(&Rational::from_integer(binomial(2 * a - 2 * k - 1, a - 1)));
        let z1 = riemann_zeta(cr(2.0 * k as f64), opts)?;
        let z2 = riemann_zeta(cr((3 * a - 2 * k) as f64), opts)?;
        acc = acc + z1 * z2 * bin;
    }
    let pre = 2f64.powi(a as i32 + 2) / (1.0 + 2.0 * sign_pow(a as i64) as f64);
    Ok(acc * pre)
}

/// Symmetric difference quotient of order `n` at `s0` with step `h`,
/// improved by one Richardson step with `h/2`.
fn derivative(f: impl Fn(f64) -> Result<Approx>, s0: f64, n: u32, h: f64) -> Result<Approx> {
    let quotient = |h: f64| -> Result<Approx> {
        let (p, m) = (f(s0 + h)?, f(s0 - h)?);
        Ok(match n {
            1 => (p - m) * (0.5 / h),
            _ => (p + m - f(s0)? * 2.0) * (1.0 / (h * h)),
        })
    };
    let d1 = quotient(h)?;
    let d2 = quotient(h / 2.0)?;
    let v = (d2.value * 4.0 - d1.value) / 3.0;
    let err = (d1.abs_err + 4.0 * d2.abs_err) / 3.0 + (d2.value - d1.value).norm() / 3.0 * 0.25;
    Ok(Approx::new(v, err))
}

/// Numeric `d^n/ds^n ζ_SU3` at a real point, by central differences.
pub fn witten_numeric_derivative(s0: f64, n: u32, h: f64, opts: &EvalOptions) -> Result<Approx> {
    derivative(|s| witten_eval(cr(s), opts), s0, n, h)
}

/// `ζ_SU3(0) = 1/3` exactly, and `ζ'_SU3(0)` computed numerically; the latter
/// should equal `ln(2^{4/3} π)`.
pub fn witten_at_zero(opts: &EvalOptions) -> Result<(Rational, Approx)> {
    Ok((rat(1, 3), witten_numeric_derivative(0.0, 1, 1e-3, opts)?))
}

/// Numeric `lim_{ε→0} ζ_SU3(ε)`.
pub fn witten_limit_at_zero(opts: &EvalOptions) -> Result<Approx> {
    richardson_sym(|e| witten_eval(cr(e), opts), 1e-2, 1e-3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WittenKind {
    PositiveValue,
    ZeroValue,
    /// `ζ_SU3(-a) = 0` with non-zero first derivative (odd `a`)
    SimpleZero,
    /// `ζ_SU3(-a) = ζ'_SU3(-a) = 0` (even `a`)
    DoubleZero,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WittenReport {
    pub point: i64,
    pub kind: WittenKind,
    pub value_or_deriv: Approx,
    pub predicted_sign: Option<i32>,
}

impl WittenReport {
    /// Whether the computed value carries the predicted sign beyond its error.
    pub fn sign_matches(&self) -> bool {
        match self.predicted_sign {
            None => true,
            Some(sg) => {
                let v = self.value_or_deriv.re();
                v.abs() > self.value_or_deriv.abs_err && v.signum() as i32 == sg
            }
        }
    }
}

fn zeta_prime(n: i64, opts: &EvalOptions) -> Result<Approx> {
    riemann_zeta_deriv(cr(n as f64), 1, opts)
}

fn zeta_exact(n: i64) -> f64 {
    rat_to_f64(&zeta_nonpos_exact((-n) as u32))
}

fn binom_f(n: u32, k: u32) -> f64 {
    rat_to_f64(&Rational::from_integer(binomial(n, k)))
}

/// `ζ'_SU3(-a)` for odd `a`:
/// `2^{-a+2} Σ_k C(a,2k) ζ(-a-2k) ζ'(-2a+2k) + 2^{-a+1} (a!)²/(2a+1)! ζ'(-3a-1)`.
pub fn witten_deriv_neg_odd(a: u32, opts: &EvalOptions) -> Result<WittenReport> {
    if a % 2 == 0 {
        return Err(Error::ParityViolation(format!("a = {a} is even")));
    }
    let ai = a as i64;
    let mut sum = Approx::zero();
    for k in 0..=(a - 1) / 2 {
        let ki = k as i64;
        sum = sum + zeta_prime(-2 * ai + 2 * ki, opts)? * (binom_f(a, 2 * k) * zeta_exact(-ai - 2 * ki));
    }
    let fa = Rational::from_integer(factorial(a));
    let w = rat_to_f64(&(&fa * &fa / Rational::from_integer(factorial(2 * a + 1))));
    let v = sum * 2f64.powi(2 - ai as i32) + zeta_prime(-3 * ai - 1, opts)? * (2f64.powi(1 - ai as i32) * w);
    Ok(WittenReport {
        point: -ai,
        kind: WittenKind::SimpleZero,
        value_or_deriv: v,
        predicted_sign: Some(sign_pow((ai - 1) / 2) as i32),
    })
}

/// `ζ''_SU3(-a)` for even `a`: `2^{-a+2} Σ_{k ≤ a/2} C(a,2k) ζ'(-a-2k) ζ'(-2a+2k)`.
pub fn witten_dderiv_neg_even(a: u32, opts: &EvalOptions) -> Result<WittenReport> {
    if a % 2 == 1 || a == 0 {
        return Err(Error::ParityViolation(format!("a = {a} is not a positive even integer")));
    }
    let ai = a as i64;
    let mut sum = Approx::zero();
    for k in 0..=a / 2 {
        let ki = k as i64;
        sum = sum + zeta_prime(-ai - 2 * ki, opts)? * zeta_prime(-2 * ai + 2 * ki, opts)? * binom_f(a, 2 * k);
    }
    Ok(WittenReport {
        point: -ai,
        kind: WittenKind::DoubleZero,
        value_or_deriv: sum * 2f64.powi(2 - ai as i32),
        predicted_sign: Some(sign_pow(ai / 2) as i32),
    })
}

/// `|ζ_SU3(-a+ε)| / |ζ_SU3(-a+ε/2)|` with `ε = 1e-2`: close to 2 at a simple
/// zero and 4 at a double zero.
pub fn witten_zero_ratio(a: u32, opts: &EvalOptions) -> Result<f64> {
    let f = |e: f64| witten_eval(cr(-(a as f64) + e), opts).map(|v| v.norm());
    Ok(f(1e-2)? / f(5e-3)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tornheim::tornheim_direct;
    use crate::value::c;

    #[test]
    fn positive_values() {
        let o = EvalOptions::default();
        let z = |x: f64| riemann_zeta(cr(x), &o).unwrap().value.re;
        assert!((witten_positive_int(1, &o).unwrap().value.re - 4.0 * z(3.0)).abs() < 1e-14);
        let pi6 = std::f64::consts::PI.powi(6);
        assert!((witten_positive_int(2, &o).unwrap().value.re - 4.0 * pi6 / 2835.0).abs() < 1e-13);
        for a in 2..=4 {
            let want = tornheim_direct(cr(a as f64), cr(a as f64), cr(a as f64), &o).unwrap().value * 2f64.powi(a);
            let got = witten_positive_int(a as u32, &o).unwrap().value;
            assert!((got - want).norm() < 1e-10 * want.norm());
            let ev = witten_eval(cr(a as f64), &o).unwrap().value;
            assert!((ev - want).norm() < 1e-9 * want.norm(), "{ev} vs {want}");
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let o = EvalOptions::default();
        let s = c(2.5, 0.5);
        let v = witten_eval(s, &o).unwrap();
        let w = witten_eval(s.conj(), &o).unwrap();
        assert!((v.value - w.value.conj()).norm() < 1e-10 + v.abs_err + w.abs_err);
    }

    #[test]
    fn at_zero() {
        let o = EvalOptions::default();
        let (v, d) = witten_at_zero(&o).unwrap();
        assert_eq!(v, rat(1, 3));
        let want = (4.0 / 3.0) * 2f64.ln() + std::f64::consts::PI.ln();
        assert!((d.value.re - want).abs() < 1e-6, "{} vs {want}", d.value);
        let l = witten_limit_at_zero(&o).unwrap();
        assert!((l.value.re - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn negative_integers() {
        let o = EvalOptions::default();
        for a in [1, 3, 5] {
            let r = witten_deriv_neg_odd(a, &o).unwrap();
            assert!(r.sign_matches(), "a={a}: {:?}", r);
        }
        for a in [2, 4, 6] {
            let r = witten_dderiv_neg_even(a, &o).unwrap();
            assert!(r.sign_matches(), "a={a}: {:?}", r);
        }
        assert!(matches!(witten_deriv_neg_odd(2, &o), Err(Error::ParityViolation(_))));
        assert!(matches!(witten_dderiv_neg_even(3, &o), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn finite_difference_cross_checks() {
        let o = EvalOptions::default();
        let r = witten_deriv_neg_odd(1, &o).unwrap().value_or_deriv.value.re;
        let n = witten_numeric_derivative(-1.0, 1, 1e-3, &o).unwrap().value.re;
        assert!((r - n).abs() < 1e-4 * r.abs(), "{r} vs {n}");
        let r = witten_dderiv_neg_even(2, &o).unwrap().value_or_deriv.value.re;
        let n = witten_numeric_derivative(-2.0, 2, 5e-3, &o).unwrap().value.re;
        assert!((r - n).abs() < 2e-2 * r.abs(), "{r} vs {n}");
    }

    #[test]
    fn zero_orders() {
        let o = EvalOptions::default();
        for a in [1, 3] {
            let q = witten_zero_ratio(a, &o).unwrap();
            assert!((q / 2.0 - 1.0).abs() < 0.2, "a={a}: {q}");
        }
        for a in [2, 4] {
            let q = witten_zero_ratio(a, &o).unwrap();
            assert!((q / 4.0 - 1.0).abs() < 0.2, "a={a}: {q}");
        }
    }

    #[test]
    fn refusals() {
        let o = EvalOptions::default();
        assert!(matches!(witten_eval(cr(2.0 / 3.0), &o), Err(Error::NearSingularDenominator(_))));
        assert!(matches!(witten_eval(cr(-0.5), &o), Err(Error::SingularPoint(_))));
    }
}
