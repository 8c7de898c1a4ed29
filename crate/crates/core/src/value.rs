use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used for every analytic argument and value.
pub type CVal = Complex64;

/// Shorthand constructor.
#[inline]
pub fn c(re: f64, im: f64) -> CVal {
    Complex64::new(re, im)
}

/// Real number as a complex value.
#[inline]
pub fn cr(re: f64) -> CVal {
    Complex64::new(re, 0.0)
}

pub(crate) fn ensure_finite(z: CVal, what: &str) -> Result<CVal> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// A complex value with an absolute error estimate.
///
/// `abs_err` is an estimate, not a rigorous enclosure. Arithmetic on
/// `Approx` propagates it to first order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approx {
    pub value: CVal,
    pub abs_err: f64,
}

impl Approx {
    pub fn new(value: CVal, abs_err: f64) -> Self {
        Approx { value, abs_err: abs_err.abs() }
    }

    pub fn exact(value: CVal) -> Self {
        Approx { value, abs_err: 0.0 }
    }

    pub fn zero() -> Self {
        Approx::exact(CVal::new(0.0, 0.0))
    }

    /// Rejects NaN/Inf in either component or in the error estimate.
    pub fn checked(self, what: &str) -> Result<Self> {
        ensure_finite(self.value, what)?;
        if !self.abs_err.is_finite() {
            return Err(Error::NonFinite(format!("{what} (error estimate)")));
        }
        Ok(self)
    }

    pub fn scale(self, k: CVal) -> Self {
        Approx::new(self.value * k, self.abs_err * k.norm())
    }

    pub fn conj(self) -> Self {
        Approx::new(self.value.conj(), self.abs_err)
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn norm(&self) -> f64 {
        self.value.norm()
    }

    /// Relative error estimate, `abs_err / |value|` (infinite at zero).
    pub fn rel_err(&self) -> f64 {
        self.abs_err / self.value.norm()
    }

    /// Is `other` within the combined error estimates plus `slack`?
    pub fn agrees_with(&self, other: &Approx, slack: f64) -> bool {
        (self.value - other.value).norm() <= self.abs_err + other.abs_err + slack
    }
}

impl From<CVal> for Approx {
    fn from(v: CVal) -> Self {
        Approx::exact(v)
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, o: Approx) -> Approx {
        let v = self.value + o.value;
        Approx::new(v, self.abs_err + o.abs_err + f64::EPSILON * v.norm())
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, o: Approx) -> Approx {
        let v = self.value - o.value;
        Approx::new(v, self.abs_err + o.abs_err + f64::EPSILON * v.norm())
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, o: Approx) -> Approx {
        let v = self.value * o.value;
        let err = self.abs_err * o.value.norm()
            + o.abs_err * self.value.norm()
            + self.abs_err * o.abs_err
            + f64::EPSILON * v.norm();
        Approx::new(v, err)
    }
}

impl Mul<CVal> for Approx {
    type Output = Approx;
    fn mul(self, k: CVal) -> Approx {
        self.scale(k)
    }
}

impl Mul<f64> for Approx {
    type Output = Approx;
    fn mul(self, k: f64) -> Approx {
        Approx::new(self.value * k, self.abs_err * k.abs())
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx::new(-self.value, self.abs_err)
    }
}

impl std::iter::Sum for Approx {
    fn sum<I: Iterator<Item = Approx>>(iter: I) -> Approx {
        iter.fold(Approx::zero(), |a, b| a + b)
    }
}

/// Global numeric policy.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalOptions {
    pub target_rel_tol: f64,
    /// Main-sum length of the Euler–Maclaurin zeta evaluation.
    pub series_terms: usize,
    /// Number of Bernoulli correction terms (must be even).
    pub em_correction_order: usize,
    /// Truncation height of vertical contours.
    pub quad_height: f64,
    pub quad_rel_tol: f64,
    pub oracle_sum_limit: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            target_rel_tol: 1e-10,
            series_terms: 64,
            em_correction_order: 12,
            quad_height: 40.0,
            quad_rel_tol: 1e-12,
            oracle_sum_limit: 4000,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        let positive = self.target_rel_tol > 0.0
            && self.series_terms > 0
            && self.em_correction_order > 0
            && self.quad_height > 0.0
            && self.quad_rel_tol > 0.0
            && self.oracle_sum_limit > 0;
        if !positive {
            return Err(Error::Domain("all evaluation options must be positive".into()));
        }
        if self.em_correction_order % 2 != 0 {
            return Err(Error::Domain("em_correction_order must be even".into()));
        }
        Ok(())
    }
}
