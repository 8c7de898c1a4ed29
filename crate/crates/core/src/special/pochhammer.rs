use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{factorial, Rational};
use crate::value::{Approx, CVal};

/// Rising factorial `t (t+1) ... (t+k-1)` as a plain product.
pub fn pochhammer(t: CVal, k: u32) -> Approx {
    let mut p = CVal::new(1.0, 0.0);
    let mut scale = 1.0;
    for j in 0..k {
        let f = t + j as f64;
        p *= f;
        scale *= f.norm().max(f64::MIN_POSITIVE);
    }
    let err = if exact_product(t, k) { 0.0 } else { 2.0 * k as f64 * f64::EPSILON * scale };
    Approx::new(p, err)
}

// integer t with a product that stays below 2^53 is computed without rounding
fn exact_product(t: CVal, k: u32) -> bool {
    if t.im != 0.0 || t.re.fract() != 0.0 {
        return false;
    }
    let mut bound = 1.0f64;
    for j in 0..k {
        bound *= (t.re + j as f64).abs().max(1.0);
    }
    bound < 9.0e15
}

/// Generalised binomial `w (w-1) ... (w-k+1) / k!`.
pub fn binom_general(w: CVal, k: u32) -> Approx {
    let mut p = CVal::new(1.0, 0.0);
    let mut scale = 1.0;
    for j in 0..k {
        p = p * (w - j as f64) / (j + 1) as f64;
        scale *= (w - j as f64).norm() / (j + 1) as f64;
    }
    Approx::new(p, 3.0 * k as f64 * f64::EPSILON * scale)
}

/// Derivative at `s = 0` of `(s+a)(s+a+1)...(s+a+n-1)`, exactly.
pub fn pochhammer_shift_deriv(a: i64, n: u32) -> Rational {
    // polynomial coefficients in s, lowest degree first; only c0 and c1 matter
    let mut c0 = BigInt::one();
    let mut c1 = BigInt::zero();
    for j in 0..n as i64 {
        let r = BigInt::from(a + j);
        c1 = &c1 * &r + &c0;
        c0 *= r;
    }
    Rational::from_integer(c1)
}

/// Same as [`pochhammer_shift_deriv`] divided by `n!`.
pub(crate) fn pochhammer_shift_deriv_over_fact(a: i64, n: u32) -> Rational {
    pochhammer_shift_deriv(a, n) / Rational::from_integer(factorial(n))
}
