//! Second-order Taylor jets `(f, f', f'')` over the complex numbers, used to
//! differentiate the zeta evaluation analytically instead of by differences.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::value::CVal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub v: CVal,
    pub d1: CVal,
    pub d2: CVal,
}

impl Jet {
    pub fn konst(v: CVal) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Jet { v, d1: z, d2: z }
    }

    /// The independent variable at `v`.
    pub fn var(v: CVal) -> Self {
        Jet { v, d1: Complex64::new(1.0, 0.0), d2: Complex64::new(0.0, 0.0) }
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Jet { v: e, d1: e * self.d1, d2: e * (self.d2 + self.d1 * self.d1) }
    }

    pub fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        Jet { v: s, d1: c * self.d1, d2: c * self.d2 - s * self.d1 * self.d1 }
    }

    pub fn inv(self) -> Self {
        let r = self.v.inv();
        let r2 = r * r;
        Jet { v: r, d1: -self.d1 * r2, d2: (2.0 * self.d1 * self.d1 * r - self.d2) * r2 }
    }

    /// Composition `g∘self` given `g, g', g''` at `self.v`.
    pub fn compose(self, g0: CVal, g1: CVal, g2: CVal) -> Self {
        Jet { v: g0, d1: g1 * self.d1, d2: g2 * self.d1 * self.d1 + g1 * self.d2 }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet { v: self.v + o.v, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet { v: self.v - o.v, d1: self.d1 - o.d1, d2: self.d2 - o.d2 }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            d1: self.d1 * o.v + self.v * o.d1,
            d2: self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Jet) -> Jet {
        self * o.inv()
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { v: -self.v, d1: -self.d1, d2: -self.d2 }
    }
}

impl Add<CVal> for Jet {
    type Output = Jet;
    fn add(self, c: CVal) -> Jet {
        Jet { v: self.v + c, ..self }
    }
}

impl Mul<CVal> for Jet {
    type Output = Jet;
    fn mul(self, c: CVal) -> Jet {
        Jet { v: self.v * c, d1: self.d1 * c, d2: self.d2 * c }
    }
}

/// Minimal arithmetic shared by plain complex values and jets, so the zeta
/// routines are written once and monomorphized for both.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn konst(c: CVal) -> Self;
    fn value(&self) -> CVal;
    fn exp_s(self) -> Self;
    fn sin_s(self) -> Self;
    fn add_c(self, c: CVal) -> Self;
    fn mul_c(self, c: CVal) -> Self;
}

impl Scalar for Complex64 {
    fn konst(c: CVal) -> Self {
        c
    }
    fn value(&self) -> CVal {
        *self
    }
    fn exp_s(self) -> Self {
        self.exp()
    }
    fn sin_s(self) -> Self {
        self.sin()
    }
    fn add_c(self, c: CVal) -> Self {
        self + c
    }
    fn mul_c(self, c: CVal) -> Self {
        self * c
    }
}

impl Scalar for Jet {
    fn konst(c: CVal) -> Self {
        Jet::konst(c)
    }
    fn value(&self) -> CVal {
        self.v
    }
    fn exp_s(self) -> Self {
        self.exp()
    }
    fn sin_s(self) -> Self {
        self.sin()
    }
    fn add_c(self, c: CVal) -> Self {
        self + c
    }
    fn mul_c(self, c: CVal) -> Self {
        self * c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::c;

    #[test]
    fn quotient_rule() {
        // f(x) = e^x / x at x = 1.3 + 0.2i
        let x = Jet::var(c(1.3, 0.2));
        let f = x.exp() / x;
        let z = x.v;
        let e = z.exp();
        let d1 = e / z - e / (z * z);
        let d2 = e / z - 2.0 * e / (z * z) + 2.0 * e / (z * z * z);
        assert!((f.d1 - d1).norm() < 1e-13);
        assert!((f.d2 - d2).norm() < 1e-13);
    }

    #[test]
    fn sine_chain() {
        let x = Jet::var(c(0.4, -0.1));
        let f = (x * c(2.0, 0.0)).sin();
        let z = x.v * 2.0;
        assert!((f.d2 + 4.0 * z.sin()).norm() < 1e-13);
    }
}
