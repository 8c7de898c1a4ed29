//! The finite sum `F(s,t;c) = Σ_k C(c,k) ζ(s-k) ζ(t-c+k)` and the closed
//! values of the A-function and of `ζ(s,t;u)` built from it.

#![allow(non_snake_case)]

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::bernoulli::zeta_nonpos_exact;
use crate::special::gamma::cos_pi;
use crate::special::pochhammer::binom_general;
use crate::special::rational::{beta_weight, binomial, rat_to_f64, sign_pow, Rational};
use crate::special::zeta::riemann_zeta;
use crate::tornheim::lattice_distance as point_lattice_distance;
use crate::value::{Approx, CVal, EvalOptions};

/// `ζ(s)`, taken from the exact table at non-positive integers.
pub(crate) fn zeta_any(s: CVal, opts: &EvalOptions) -> Result<Approx> {
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 && s.re > -200.0 {
        return Ok(Approx::exact(Complex64::new(rat_to_f64(&zeta_nonpos_exact((-s.re) as u32)), 0.0)));
    }
    riemann_zeta(s, opts)
}

fn zeta_exact_at(n: i64) -> Rational {
    assert!(n <= 0, "exact zeta only at non-positive integers");
    zeta_nonpos_exact((-n) as u32)
}

fn kron(a: u32) -> bool {
    a == 0
}

fn binom_f64(n: u32, k: u32) -> f64 {
    rat_to_f64(&Rational::from_integer(binomial(n, k)))
}

/// `F(s,t;c)` numerically.
pub fn F_eval(s: CVal, t: CVal, c: u32, opts: &EvalOptions) -> Result<Approx> {
    let mut acc = Approx::zero();
    for k in 0..=c {
        let a = zeta_any(s - k as f64, opts)?;
        let b = zeta_any(t - c as f64 + k as f64, opts)?;
        acc = acc + a * b * binom_f64(c, k);
    }
    Ok(acc)
}

/// `F(-a,-b;c)` over Q; every zeta argument is a non-positive integer.
pub fn F_exact(a: u32, b: u32, c: u32) -> Rational {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    (0..=c)
        .map(|k| {
            Rational::from_integer(binomial(c as u32, k as u32)) * zeta_exact_at(-a - k) * zeta_exact_at(-b - c + k)
        })
        .sum()
}

fn guard_tu(w: CVal, what: &str) -> Result<()> {
    let (l, d) = point_lattice_distance(w);
    if d < 1e-12 {
        return Err(Error::SingularPoint(format!("{what} = {w} equals 1 - {l}")));
    }
    Ok(())
}

/// `A(a,t;u) = 2 Σ_{k ≤ a/2} C(t+a-2k-1, a-2k) ζ(2k) ζ(t+u+a-2k)`; zero for
/// negative `a` (the sum is empty).
pub fn lemma41_A_int(a: i64, t: CVal, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    guard_tu(t + u, "t + u")?;
    let mut acc = Approx::zero();
    if a < 0 {
        return Ok(acc);
    }
    for k in 0..=(a / 2) {
        let j = (a - 2 * k) as u32;
        let bin = binom_general(t + (j as f64) - 1.0, j);
        let z1 = zeta_any(Complex64::new(2.0 * k as f64, 0.0), opts)?;
        let z2 = zeta_any(t + u + j as f64, opts)?;
        acc = acc + bin * z1 * z2 * 2.0;
    }
    Ok(acc)
}

/// `A(s,-b;u) = Σ_k C(b,k) (cos πs + (-1)^k) ζ(s-k) ζ(u-b+k)`.
pub fn lemma41_A_negb(s: CVal, b: u32, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    guard_tu(u - b as f64, "u - b")?;
    let cs = cos_pi(s);
    let mut acc = Approx::zero();
    for k in 0..=b {
        let arg = s - k as f64;
        let w = cs + sign_pow(k as i64) as f64;
        if arg == Complex64::new(1.0, 0.0) || w == Complex64::new(0.0, 0.0) {
            // the factor has a double zero where ζ(s-k) has its pole
            continue;
        }
        let z1 = zeta_any(arg, opts)?;
        let z2 = zeta_any(u - b as f64 + k as f64, opts)?;
        acc = acc + z1 * z2 * w * binom_f64(b, k);
    }
    Ok(acc)
}

/// `lim_{u→-c} A(s,-b;u) = (cos πs − (−1)^{b+c}) F(s,−c;b) + δ_{c0}(−1)^{b+1} ζ(s−b)`.
pub fn lemma41_limit_u(s: CVal, b: u32, c: u32, opts: &EvalOptions) -> Result<Approx> {
    let w = cos_pi(s) - sign_pow((b + c) as i64) as f64;
    let mut v = Approx::zero();
    // a vanishing factor annihilates the F-part even where it has a pole
    if w != Complex64::new(0.0, 0.0) {
        v = F_eval(s, Complex64::new(-(c as f64), 0.0), b, opts)? * w;
    }
    if kron(c) {
        v = v + zeta_any(s - b as f64, opts)? * sign_pow(b as i64 + 1) as f64;
    }
    Ok(v)
}

/// `lim_{t→-b} A(s,t;-c)`: the previous value plus
/// `(cos πs − (−1)^{b+c}) (−1)^{c+1} b!c!/(b+c+1)! ζ(s−b−c−1)`.
pub fn lemma41_limit_t(s: CVal, b: u32, c: u32, opts: &EvalOptions) -> Result<Approx> {
    let w = cos_pi(s) - sign_pow((b + c) as i64) as f64;
    if w == Complex64::new(0.0, 0.0) {
        return lemma41_limit_u(s, b, c, opts);
    }
    let beta = rat_to_f64(&beta_weight(b, c)) * sign_pow(c as i64 + 1) as f64;
    let extra = zeta_any(s - (b + c + 1) as f64, opts)? * (w * beta);
    Ok(lemma41_limit_u(s, b, c, opts)? + extra)
}

/// `ζ(s,t;-c) = F(s,t;c)`.
pub fn nonpositive_c(s: CVal, t: CVal, c: u32, opts: &EvalOptions) -> Result<Approx> {
    for (name, w) in [("s", s), ("t", t)] {
        let n = (c as f64 + 1.0 - w.re).round();
        if n >= 0.0 && (w - (c as f64 + 1.0 - n)).norm() < 1e-12 {
            return Err(Error::SingularPoint(format!("{name} = {w} lies on c + 1 - l")));
        }
    }
    if (s + t - (c as f64 + 2.0)).norm() < 1e-12 {
        return Err(Error::SingularPoint("s + t = c + 2".into()));
    }
    F_eval(s, t, c, opts)
}

/// `ζ(-a,-b;u)` for non-negative integers `a`, `b`.
pub fn nonpositive_ab(a: u32, b: u32, u: CVal, opts: &EvalOptions) -> Result<Approx> {
    for m in [a, b] {
        let n = (m as f64 + 1.0 - u.re).round();
        if n >= 0.0 && (u - (m as f64 + 1.0 - n)).norm() < 1e-12 {
            return Err(Error::SingularPoint(format!("u = {u} lies on {m} + 1 - l")));
        }
    }
    if (u - (a + b + 2) as f64).norm() < 1e-12 {
        return Err(Error::SingularPoint("u = a + b + 2".into()));
    }
    let fa = F_eval(u, Complex64::new(-(a as f64), 0.0), b, opts)? * sign_pow(a as i64 + 1) as f64;
    let fb = F_eval(u, Complex64::new(-(b as f64), 0.0), a, opts)? * sign_pow(b as i64 + 1) as f64;
    let mut v = fa + fb + zeta_any(u - (a + b + 1) as f64, opts)? * rat_to_f64(&beta_weight(a, b));
    if kron(a) {
        v = v - zeta_any(u - b as f64, opts)?;
    }
    if kron(b) {
        v = v - zeta_any(u - a as f64, opts)?;
    }
    Ok(v)
}

/// `lim_{u→-c} ζ(s,-b;u) = F(s,−b;c) + (−1)^{b+1} b!c!/(b+c+1)! ζ(s−b−c−1)`.
pub fn nonpositive_bc_limit(s: CVal, b: u32, c: u32, opts: &EvalOptions) -> Result<Approx> {
    let n = (c as f64 + 1.0 - s.re).round();
    if n >= 0.0 && (s - (c as f64 + 1.0 - n)).norm() < 1e-12 {
        return Err(Error::SingularPoint(format!("s = {s} lies on c + 1 - l")));
    }
    if (s - (b + c + 2) as f64).norm() < 1e-12 {
        return Err(Error::SingularPoint("s = b + c + 2".into()));
    }
    let f = F_eval(s, Complex64::new(-(b as f64), 0.0), c, opts)?;
    let w = rat_to_f64(&beta_weight(b, c)) * sign_pow(b as i64 + 1) as f64;
    Ok(f + zeta_any(s - (b + c + 1) as f64, opts)? * w)
}

/// The order in which `(s,t,u) → (-a,-b,-c)` is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitPath {
    /// `(s,t) → (-a,-b)` jointly on `u = -c`
    JointSt,
    /// `u → -c` on `(s,t) = (-a,-b)`
    UThen,
    /// `u → -c` first, then `s → -a`, on `t = -b`
    SThenU,
    /// `u → -c` first, then `t → -b`, on `s = -a`
    TThenU,
}

impl LimitPath {
    pub const ALL: [LimitPath; 4] = [LimitPath::JointSt, LimitPath::UThen, LimitPath::SThenU, LimitPath::TThenU];

    pub fn name(self) -> &'static str {
        match self {
            LimitPath::JointSt => "joint_st",
            LimitPath::UThen => "u_then",
            LimitPath::SThenU => "s_then_u",
            LimitPath::TThenU => "t_then_u",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        LimitPath::ALL.into_iter().find(|p| p.name() == s)
    }
}

fn signed_beta(x: u32, c: u32) -> Rational {
    beta_weight(x, c) * Rational::from_integer(BigInt::from(sign_pow(x as i64 + 1)))
}

/// Exact limit of `ζ(s,t;u)` at `(-a,-b,-c)` along `path`.
pub fn corollary_values(a: u32, b: u32, c: u32, path: LimitPath) -> Rational {
    let f = F_exact(a, b, c);
    let z = zeta_exact_at(-((a + b + c + 1) as i64));
    match path {
        LimitPath::JointSt => f,
        LimitPath::UThen => f + (signed_beta(a, c) + signed_beta(b, c)) * z,
        LimitPath::SThenU => f + signed_beta(b, c) * z,
        LimitPath::TThenU => f + signed_beta(a, c) * z,
    }
}

fn sgn(e: u32) -> Rational {
    Rational::from_integer(BigInt::from(sign_pow(e as i64)))
}

fn delta3(a: u32, b: u32, c: u32) -> Rational {
    Rational::from_integer(BigInt::from((a == 0 && b == 0 && c == 0) as i64))
}

/// Weighted `ζ(-a-b-c-1)` term of the convolution formula.
fn convolution_zeta_term(a: u32, b: u32, c: u32) -> Rational {
    let w = sgn(c) * beta_weight(a, b) + sgn(a) * beta_weight(b, c) + sgn(b) * beta_weight(c, a);
    w * zeta_exact_at(-((a + b + c + 1) as i64))
}

fn convolution_lhs(a: u32, b: u32, c: u32) -> Rational {
    sgn(a + b) * F_exact(a, b, c) + sgn(b + c) * F_exact(b, c, a) + sgn(c + a) * F_exact(c, a, b)
}

/// Left side minus right side of the convolution formula; always 0.
pub fn convolution_check(a: u32, b: u32, c: u32) -> Rational {
    convolution_lhs(a, b, c) - convolution_zeta_term(a, b, c) - delta3(a, b, c)
}

/// `(−1)^{a+b+c}F(−a,−b;c) − δ_{a0}ζ(−b−c) − δ_{b0}ζ(−a−c) − δ_{a0}δ_{b0}δ_{c0} − F(−a,−b;c)`.
pub fn bridging_residual(a: u32, b: u32, c: u32) -> Rational {
    let f = F_exact(a, b, c);
    let mut v = sgn(a + b + c) * f.clone() - f - delta3(a, b, c);
    if a == 0 {
        v -= zeta_exact_at(-((b + c) as i64));
    }
    if b == 0 {
        v -= zeta_exact_at(-((a + c) as i64));
    }
    v
}

pub(crate) fn first_path_value(a: u32, b: u32, c: u32) -> Rational {
    convolution_lhs(a, b, c) - convolution_zeta_term(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::rational::{rat, rat_int};
    use crate::value::cr;
    use num_traits::Zero;

    #[test]
    fn f_values() {
        assert_eq!(F_exact(0, 0, 0), rat(1, 4));
        assert_eq!(F_exact(1, 1, 1), rat_int(0));
        let o = EvalOptions::default();
        let v = F_eval(cr(2.5), cr(3.5), 0, &o).unwrap();
        let w = riemann_zeta(cr(2.5), &o).unwrap().value * riemann_zeta(cr(3.5), &o).unwrap().value;
        assert!((v.value - w).norm() < 1e-14);
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_values(0, 0, 0, LimitPath::JointSt), rat(1, 4));
        assert_eq!(corollary_values(0, 0, 0, LimitPath::UThen), rat(5, 12));
        assert_eq!(corollary_values(1, 0, 0, LimitPath::SThenU), rat(1, 24));
    }

    #[test]
    fn convolution_examples() {
        for (a, b, c) in [(0, 0, 0), (1, 1, 1), (2, 0, 3)] {
            assert!(convolution_check(a, b, c).is_zero());
        }
        assert_eq!(convolution_lhs(0, 0, 0), rat(3, 4));
        assert!(bridging_residual(0, 0, 0).is_zero());
    }

    #[test]
    fn lemma_unfoldings() {
        let o = EvalOptions::default();
        let z = |x: f64| riemann_zeta(cr(x), &o).unwrap().value;
        let a = lemma41_A_int(0, cr(2.2), cr(1.3), &o).unwrap();
        assert!((a.value + z(3.5)).norm() < 1e-14);
        let a = lemma41_A_int(1, cr(1.0), cr(1.0), &o).unwrap();
        assert!((a.value + z(3.0)).norm() < 1e-14);
        let v = lemma41_limit_u(cr(3.3), 0, 1, &o).unwrap();
        let want = (cos_pi(cr(3.3)) + 1.0) * z(3.3) * (-1.0 / 12.0);
        assert!((v.value - want).norm() < 1e-14);
        let v = lemma41_limit_u(cr(2.6), 0, 0, &o).unwrap();
        let want = (cos_pi(cr(2.6)) - 1.0) * z(2.6) * (-0.5) - z(2.6);
        assert!((v.value - want).norm() < 1e-14);
        let v = lemma41_limit_t(cr(2.0), 0, 0, &o).unwrap();
        assert!((v.value + z(2.0)).norm() < 1e-14);
        let v = nonpositive_ab(0, 0, cr(3.5), &o).unwrap();
        assert!((v.value - (z(2.5) - z(3.5))).norm() < 1e-14);
    }
}
