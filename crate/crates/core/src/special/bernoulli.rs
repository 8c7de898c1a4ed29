use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::{binomial, rat_int, rat_to_f64, sign_pow, Rational};

static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number `B_n` with `B_1 = -1/2`.
///
/// Built from `sum_{k=0}^{n} C(n+1,k) B_k = 0` and memoized; the table only
/// ever grows, entries are never rewritten.
pub fn bernoulli(n: usize) -> Rational {
    let table = TABLE.get_or_init(|| Mutex::new(vec![rat_int(1)]));
    let mut tab = table.lock().expect("bernoulli table poisoned");
    while tab.len() <= n {
        let m = tab.len();
        let mut acc = Rational::zero();
        for (k, bk) in tab.iter().enumerate() {
            if k > 1 && k % 2 == 1 {
                continue;
            }
            acc += Rational::from_integer(binomial(m as u32 + 1, k as u32)) * bk;
        }
        let bm = -acc / Rational::from_integer(BigInt::from(m + 1));
        tab.push(bm);
    }
    tab[n].clone()
}

/// Exact `ζ(-n) = (-1)^n B_{n+1}/(n+1)`.
pub fn zeta_nonpos_exact(n: u32) -> Rational {
    let b = bernoulli(n as usize + 1);
    b * rat_int(sign_pow(n as i64)) / rat_int(n as i64 + 1)
}

/// `B_{2k}` as floats for Euler–Maclaurin corrections, `k = 0..=60`.
pub(crate) fn bernoulli_even_f64() -> &'static [f64] {
    static EVEN: OnceLock<Vec<f64>> = OnceLock::new();
    EVEN.get_or_init(|| (0..=60).map(|k| rat_to_f64(&bernoulli(2 * k))).collect())
}

/// `ζ(2k)/π^{2k}` as an exact rational, `k ≥ 0` (`ζ(0) = -1/2`).
pub fn zeta_even_over_pi_power(k: u32) -> Rational {
    use super::rational::factorial;
    if k == 0 {
        return super::rational::rat(-1, 2);
    }
    // ζ(2k) = (-1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)
    let b = bernoulli(2 * k as usize);
    let two_pow = Rational::from_integer(BigInt::from(2).pow(2 * k));
    b * two_pow * rat_int(sign_pow(k as i64 + 1))
        / (Rational::from_integer(factorial(2 * k)) * rat_int(2))
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn recurrence_holds() {
        for n in 1..30u32 {
            let s: Rational = (0..=n)
                .map(|k| Rational::from_integer(binomial(n + 1, k)) * bernoulli(k as usize))
                .sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn zeta_at_nonpositive_integers() {
        assert_eq!(zeta_nonpos_exact(0), rat(-1, 2));
        assert_eq!(zeta_nonpos_exact(1), rat(-1, 12));
        assert_eq!(zeta_nonpos_exact(4), rat(0, 1));
        assert_eq!(zeta_nonpos_exact(9), rat(-1, 132));
        assert_eq!(zeta_nonpos_exact(3), rat(1, 120));
    }

    #[test]
    fn even_zeta_rationals() {
        assert_eq!(zeta_even_over_pi_power(1), rat(1, 6));
        assert_eq!(zeta_even_over_pi_power(2), rat(1, 90));
        assert_eq!(zeta_even_over_pi_power(3), rat(1, 945));
    }

    #[test]
    fn concurrent_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || bernoulli(20 + i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, b) in got.iter().enumerate() {
            assert_eq!(*b, bernoulli(20 + i));
        }
    }
}
