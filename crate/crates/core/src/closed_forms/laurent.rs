use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::special::rational::Rational;

/// Truncated formal Laurent series `Σ_{k=low}^{low+len-1} c_k x^k` over Q.
///
/// Coefficients at and above `high()` are unknown; products keep only the
/// exponents that both factors determine.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalLaurent {
    low: i64,
    coeffs: Vec<Rational>,
}

impl RationalLaurent {
    pub fn new(low: i64, coeffs: Vec<Rational>) -> Self {
        RationalLaurent { low, coeffs }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// First exponent whose coefficient is not known.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    pub fn coeff(&self, k: i64) -> Option<Rational> {
        if k < self.low {
            Some(Rational::zero())
        } else if k < self.high() {
            Some(self.coeffs[(k - self.low) as usize].clone())
        } else {
            None
        }
    }

    /// `[x^{-1}]`; `None` when the truncation does not reach `x^{-1}`.
    pub fn formal_residue(&self) -> Option<Rational> {
        self.coeff(-1)
    }
}

impl Add for &RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: &RationalLaurent) -> RationalLaurent {
        let low = self.low.min(rhs.low);
        let high = self.high().min(rhs.high());
        let coeffs = (low..high.max(low))
            .map(|k| self.coeff(k).unwrap() + rhs.coeff(k).unwrap())
            .collect();
        RationalLaurent { low, coeffs }
    }
}

impl Mul for &RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: &RationalLaurent) -> RationalLaurent {
        let low = self.low + rhs.low;
        let high = (self.high() + rhs.low).min(rhs.high() + self.low);
        let mut coeffs = vec![Rational::zero(); (high - low).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= coeffs.len() {
                    break;
                }
                coeffs[k] += a * b;
            }
        }
        RationalLaurent { low, coeffs }
    }
}
