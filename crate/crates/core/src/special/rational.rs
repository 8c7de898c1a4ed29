//! Exact rationals. `num_rational::BigRational` keeps values reduced with a
//! positive denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    // numerator/denominator may not fit in f64 individually
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders as `p/q` (or `p` for integers).
pub fn rat_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `a!·b!/(a+b+1)!`, the rational weight that shows up in the limit formulas.
pub fn beta_weight(a: u32, b: u32) -> Rational {
    Rational::new(factorial(a) * factorial(b), factorial(a + b + 1))
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(20, 10), BigInt::from(184756));
    }

    #[test]
    fn rendering() {
        assert_eq!(rat_string(&rat(10, 24)), "5/12");
        assert_eq!(rat_string(&rat(-4, 2)), "-2");
        assert_eq!(rat_string(&rat(3, -9)), "-1/3");
    }

    #[test]
    fn weight() {
        assert_eq!(beta_weight(1, 1), rat(1, 6));
        assert_eq!(beta_weight(0, 0), rat_int(1));
    }
}
