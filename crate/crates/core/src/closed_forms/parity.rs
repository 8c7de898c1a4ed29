//! `ζ(a,b;c)` at integer points of odd weight.

use num_complex::Complex64;

use super::values::{lemma41_A_int, zeta_any};
use crate::error::{Error, Result};
use crate::special::pochhammer::{binom_general, pochhammer_shift_deriv_over_fact};
use crate::special::rational::{rat_to_f64, sign_pow};
use crate::value::{cr, Approx, EvalOptions};

/// `A(c,t;u)` with the `ζ(1)` term (`k = (t+u+c-1)/2`) left out; `t`, `u`
/// are the integers of the singular combination.
fn a_star(c: i64, t: i64, u: i64, opts: &EvalOptions) -> Result<Approx> {
    let skip = (t + u + c - 1) / 2;
    let mut acc = Approx::zero();
    for k in 0..=(c / 2) {
        if k == skip && (t + u + c - 1) % 2 == 0 {
            continue;
        }
        let j = (c - 2 * k) as u32;
        let bin = binom_general(cr((t + c - 2 * k - 1) as f64), j);
        let z1 = zeta_any(cr(2.0 * k as f64), opts)?;
        let z2 = zeta_any(cr((t + u + c - 2 * k) as f64), opts)?;
        acc = acc + bin * z1 * z2 * 2.0;
    }
    Ok(acc)
}

/// `ζ(a,b;c)` for integers with odd `a+b+c`, `a+c ≥ 2`, `b+c ≥ 2`,
/// `a+b+c ≥ 3`, as a finite combination of Riemann zeta values.
pub fn parity_eval(a: i64, b: i64, c: i64, opts: &EvalOptions) -> Result<Approx> {
    if (a + b + c).rem_euclid(2) == 0 {
        return Err(Error::ParityViolation(format!("a + b + c = {} is even", a + b + c)));
    }
    if a + c < 2 || b + c < 2 || a + b + c < 3 {
        return Err(Error::Domain(format!("({a},{b},{c}) violates a+c>=2, b+c>=2, a+b+c>=3")));
    }
    let ci = |x: i64| Complex64::new(x as f64, 0.0);
    let sa = sign_pow(a) as f64;
    let sb = sign_pow(b) as f64;
    let right = lemma41_A_int(a, ci(c), ci(b), opts)? * sa + lemma41_A_int(b, ci(c), ci(a), opts)? * sb;
    let two_zeta = if a + b >= 2 {
        let left = lemma41_A_int(c, ci(a), ci(b), opts)? * sa + lemma41_A_int(c, ci(b), ci(a), opts)? * sb;
        left + right
    } else {
        let n = (1 - a - b) as u32;
        let d = rat_to_f64(&pochhammer_shift_deriv_over_fact(a, n));
        let extra = zeta_any(ci(a + b + c - 1), opts)? * (2.0 * sa * d);
        let left = a_star(c, a, b, opts)? * sa + a_star(c, b, a, opts)? * sb;
        left + right + extra
    };
    Ok(two_zeta * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::zeta::riemann_zeta;
    use crate::tornheim::tornheim_direct;

    #[test]
    fn one_one_one() {
        let o = EvalOptions::default();
        let v = parity_eval(1, 1, 1, &o).unwrap();
        let z3 = riemann_zeta(cr(3.0), &o).unwrap().value;
        assert!((v.value - z3 * 2.0).norm() < 1e-13 * z3.norm());
    }

    #[test]
    fn matches_direct() {
        let o = EvalOptions::default();
        for (a, b, c) in [(2, 2, 1), (1, 2, 2), (3, 1, 1), (2, 1, 4)] {
            let v = parity_eval(a, b, c, &o).unwrap();
            let d = tornheim_direct(cr(a as f64), cr(b as f64), cr(c as f64), &o).unwrap();
            assert!((v.value - d.value).norm() < 1e-9 * d.value.norm(), "({a},{b},{c}): {} vs {}", v.value, d.value);
        }
    }

    #[test]
    fn low_branch() {
        // ζ(0,1;2) = Σ_{N} (N-1)... checked against the direct value
        let o = EvalOptions::default();
        let v = parity_eval(0, 1, 2, &o).unwrap();
        let d = tornheim_direct(cr(0.0), cr(1.0), cr(2.0), &o).unwrap();
        assert!((v.value - d.value).norm() < 1e-8 * d.value.norm(), "{} vs {}", v.value, d.value);
    }

    #[test]
    fn refusals() {
        let o = EvalOptions::default();
        assert!(matches!(parity_eval(1, 1, 2, &o), Err(Error::ParityViolation(_))));
        assert!(matches!(parity_eval(-1, 1, 1, &o), Err(Error::Domain(_))));
    }
}
