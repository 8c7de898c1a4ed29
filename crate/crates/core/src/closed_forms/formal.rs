//! The convolution formula recomputed as a formal residue, and the
//! product formula for two even zeta values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::RationalLaurent;
use super::values::first_path_value;
use crate::error::{Error, Result};
use crate::special::bernoulli::{zeta_even_over_pi_power, zeta_nonpos_exact};
use crate::special::rational::{binomial, factorial, rat, sign_pow, Rational};

/// `P̃_m(x) - δ_{m0}` with `order` regular coefficients:
/// `(-1)^m m!/x^{m+1} + 2^{m+1} Σ_{k<order} (-1)^{m+k} ζ(-m-k) (2x)^k/k!`.
pub fn p_tilde_series(m: u32, order: u32) -> RationalLaurent {
    let low = -(m as i64) - 1;
    let mut coeffs = vec![Rational::zero(); (m + 1 + order) as usize];
    coeffs[0] = Rational::from_integer(factorial(m) * sign_pow(m as i64));
    let two = |e: u32| Rational::from_integer(BigInt::from(2).pow(e));
    for k in 0..order {
        let z = zeta_nonpos_exact(m + k);
        let sgn = Rational::from_integer(BigInt::from(sign_pow((m + k) as i64)));
        coeffs[(m + 1 + k) as usize] = two(m + 1 + k) * sgn * z / Rational::from_integer(factorial(k));
    }
    RationalLaurent::new(low, coeffs)
}

/// Both exact computations of the residue `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalCheck {
    /// `2^{-a-b-c-2} [x^{-1}]` of the triple product
    pub r: Rational,
    /// `R` as obtained from the F-sums
    pub first_path: Rational,
    /// `r - first_path`
    pub residual: Rational,
    /// `r - δ_{a0}δ_{b0}δ_{c0}`
    pub delta_residual: Rational,
}

pub fn convolution_check_formal(a: u32, b: u32, c: u32, order: u32) -> Result<FormalCheck> {
    if order < a + b + c + 3 {
        return Err(Error::InsufficientOrder(format!("order {order} < {}", a + b + c + 3)));
    }
    let prod = &(&p_tilde_series(a, order) * &p_tilde_series(b, order)) * &p_tilde_series(c, order);
    let res = prod
        .formal_residue()
        .ok_or_else(|| Error::InsufficientOrder("truncation does not reach x^-1".into()))?;
    let r = res / Rational::from_integer(BigInt::from(2).pow(a + b + c + 2));
    let first_path = first_path_value(a, b, c);
    let delta = if a == 0 && b == 0 && c == 0 { Rational::one() } else { Rational::zero() };
    Ok(FormalCheck {
        residual: &r - &first_path,
        delta_residual: &r - delta,
        r,
        first_path,
    })
}

fn binom_signed(n: i64, k: i64) -> Rational {
    if n < 0 || k < 0 || k > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial(n as u32, k as u32))
}

/// `ζ(2l)ζ(2m) - ζ(2l+2m)/2 - Σ_k [C(2l+2m-2k-1, 2l-1) + C(2l+2m-2k-1, 2m-1)] ζ(2k)ζ(2l+2m-2k)`
/// in units of `π^{2l+2m}`; zero for `l, m ≥ 1`.
pub fn even_product_residual(l: u32, m: u32) -> Rational {
    assert!(l >= 1 && m >= 1, "even product formula needs l, m >= 1");
    let z = zeta_even_over_pi_power;
    let n = (l + m) as i64;
    let mut v = z(l) * z(m) - z(l + m) * rat(1, 2);
    for k in 0..=l.max(m) as i64 {
        let w = binom_signed(2 * n - 2 * k - 1, 2 * l as i64 - 1) + binom_signed(2 * n - 2 * k - 1, 2 * m as i64 - 1);
        v -= w * z(k as u32) * z((n - k) as u32);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::values::convolution_check;
    use crate::special::rational::rat_int;

    #[test]
    fn residue_examples() {
        assert_eq!(convolution_check_formal(0, 0, 0, 3).unwrap().r, rat_int(1));
        assert_eq!(convolution_check_formal(1, 0, 0, 4).unwrap().r, rat_int(0));
        let f = convolution_check_formal(1, 1, 1, 6).unwrap();
        assert!(f.r.is_zero() && f.residual.is_zero());
        assert!(matches!(convolution_check_formal(1, 1, 1, 5), Err(Error::InsufficientOrder(_))));
    }

    #[test]
    fn formal_matches_direct() {
        for (a, b, c) in [(0, 0, 0), (2, 0, 3), (3, 2, 1), (0, 4, 0)] {
            let f = convolution_check_formal(a, b, c, a + b + c + 3).unwrap();
            assert_eq!(f.delta_residual, convolution_check(a, b, c));
            assert!(f.residual.is_zero());
        }
    }

    #[test]
    fn even_products() {
        for l in 1..6 {
            for m in 1..6 {
                assert!(even_product_residual(l, m).is_zero(), "l={l} m={m}");
            }
        }
    }
}
