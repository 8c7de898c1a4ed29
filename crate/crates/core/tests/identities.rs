//! Closed forms against independent numeric oracles.

use num_complex::Complex64;

use tornheim::closed_forms::limits::richardson_sym;
use tornheim::closed_forms::{
    lemma41_A_negb, lemma41_limit_t, lemma41_limit_u, nonpositive_ab, nonpositive_bc_limit, nonpositive_c,
    parity_eval, F_eval,
};
use tornheim::special::gamma::{cos_pi, sin_pi};
use tornheim::special::riemann_zeta;
use tornheim::tornheim::{euler_double_zeta, tornheim_direct, A_shifted};
use tornheim::{cr, Approx, CVal, Error, EvalOptions};

fn o() -> EvalOptions {
    EvalOptions::default()
}

fn z(s: CVal) -> CVal {
    riemann_zeta(s, &o()).unwrap().value
}

fn close(a: CVal, b: CVal, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

#[test]
fn parity_formula_on_the_whole_grid() {
    for a in 1..=4i64 {
        for b in 1..=4i64 {
            for c in 1..=4i64 {
                if (a + b + c) % 2 == 0 {
                    continue;
                }
                let p = parity_eval(a, b, c, &o()).unwrap();
                let d = tornheim_direct(cr(a as f64), cr(b as f64), cr(c as f64), &o()).unwrap();
                assert!((p.value - d.value).norm() <= 1e-8 * d.norm(), "({a},{b},{c}): {} vs {}", p.value, d.value);
            }
        }
    }
}

#[test]
fn zeta_products_from_a_values() {
    let zero = cr(0.0);
    let (s, n) = (cr(2.7), 1.0);
    let lhs = (1.0 + cos_pi(s)) * z(s) * z(s + 2.0 * n);
    let rhs = A_shifted(s, s + 2.0 * n, zero, None, &o()).unwrap().value
        + A_shifted(s + 2.0 * n, s, zero, None, &o()).unwrap().value
        + cos_pi(s) * z(2.0 * s + 2.0 * n);
    assert!(close(lhs, rhs, 1e-8), "{lhs} vs {rhs}");

    let s = cr(2.6);
    let pi = std::f64::consts::PI;
    for n in [0.0, 1.0] {
        let delta = if n == 0.0 { -pi * s * sin_pi(s) / 12.0 } else { -pi * sin_pi(s) / (s - 1.0) };
        let lhs = (1.0 + cos_pi(s)) * z(s) * z(-s + 2.0 * n);
        let rhs = A_shifted(s, -s + 2.0 * n, zero, None, &o()).unwrap().value
            + A_shifted(-s + 2.0 * n, s, zero, None, &o()).unwrap().value
            + cos_pi(s) * z(cr(2.0 * n))
            + delta;
        assert!(close(lhs, rhs, 1e-8), "n={n}: {lhs} vs {rhs}");
    }
}

#[test]
fn a_at_negative_integer_t_is_the_limit() {
    let (s, u) = (cr(2.4), cr(3.7));
    let closed = lemma41_A_negb(s, 1, u, &o()).unwrap();
    let lim = richardson_sym(|e| A_shifted(s, cr(-1.0 + e), u, None, &o()), 1e-2, 1e-3).unwrap();
    assert!(close(closed.value, lim.value, 1e-6), "{:?} vs {:?}", closed, lim);
    // at s = 2 only even k survive
    let v = lemma41_A_negb(cr(2.0), 2, u, &o()).unwrap();
    let want = 2.0 * z(cr(2.0)) * z(u - 2.0) + 2.0 * z(cr(0.0)) * z(u);
    assert!(close(v.value, want, 1e-13));
}

#[test]
fn lemma_limits_in_u_and_t() {
    for (s, b, c) in [(2.6, 0u32, 0u32), (3.3, 1, 1), (2.8, 2, 1)] {
        let closed = lemma41_limit_u(cr(s), b, c, &o()).unwrap();
        let lim = richardson_sym(|e| lemma41_A_negb(cr(s), b, cr(-(c as f64) + e), &o()), 1e-2, 1e-3).unwrap();
        assert!(close(closed.value, lim.value, 1e-6), "({s},{b},{c}): {closed:?} vs {lim:?}");
    }
    let (s, b, c) = (3.4, 1u32, 0u32);
    let closed = lemma41_limit_t(cr(s), b, c, &o()).unwrap();
    let lim = richardson_sym(|e| A_shifted(cr(s), cr(-(b as f64) + e), cr(-(c as f64)), None, &o()), 6e-2, 3e-2).unwrap();
    assert!(close(closed.value, lim.value, 1e-5), "{closed:?} vs {lim:?}");
    // unfolded form at b = c = 0
    let s = cr(3.4);
    let v = lemma41_limit_t(s, 0, 0, &o()).unwrap();
    let want = (cos_pi(s) - 1.0) * (z(s) * z(cr(0.0)) - z(s - 1.0)) - z(s);
    assert!(close(v.value, want, 1e-13));
}

#[test]
fn values_at_nonpositive_u() {
    let v = nonpositive_c(cr(3.2), cr(4.1), 1, &o()).unwrap();
    let lim = richardson_sym(|e| tornheim_direct(cr(3.2), cr(4.1), cr(-1.0 + e), &o()), 1e-2, 1e-3).unwrap();
    assert!(close(v.value, lim.value, 1e-6), "{v:?} vs {lim:?}");
    let v = nonpositive_c(cr(4.5), cr(4.5), 2, &o()).unwrap();
    assert!(close(v.value, F_eval(cr(4.5), cr(4.5), 2, &o()).unwrap().value, 0.0));
    assert!(matches!(nonpositive_c(cr(2.0), cr(4.5), 1, &o()), Err(Error::SingularPoint(_))));
}

#[test]
fn values_at_nonpositive_s_and_t() {
    let u = cr(4.2);
    let v = nonpositive_ab(1, 0, u, &o()).unwrap();
    let inner = |d: f64| richardson_sym(|e| tornheim_direct(cr(-1.0 + d), cr(e), u, &o()), 1e-2, 1e-3);
    let lim = richardson_sym(inner, 1.5e-2, 1.5e-3).unwrap();
    assert!(close(v.value, lim.value, 1e-6), "{v:?} vs {lim:?}");
    let w = nonpositive_ab(0, 1, u, &o()).unwrap();
    assert!(close(v.value, w.value, 1e-14));
}

/// `ζ(s,-b;u) = Σ_i C(b,i) (-1)^{b-i} ζ_E(u-i, s-b+i)`, from expanding
/// `n^b = ((m+n) - m)^b`.
fn tornheim_negative_t(s: CVal, b: u32, u: CVal) -> Result<Approx, Error> {
    let mut acc = Approx::zero();
    let mut binom = 1.0;
    for i in 0..=b {
        let sign = if (b - i) % 2 == 0 { 1.0 } else { -1.0 };
        let e = euler_double_zeta(u - i as f64, s - b as f64 + i as f64, &o())?;
        acc = acc + e * (sign * binom);
        binom = binom * (b - i) as f64 / (i + 1) as f64;
    }
    Ok(acc)
}

#[test]
fn limit_in_u_with_negative_t() {
    let s = cr(3.6);
    let v = nonpositive_bc_limit(s, 0, 0, &o()).unwrap();
    assert!(close(v.value, z(s) * z(cr(0.0)) - z(s - 1.0), 1e-13));
    let v = nonpositive_bc_limit(s, 1, 1, &o()).unwrap();
    let lim = richardson_sym(|e| tornheim_negative_t(s, 1, cr(-1.0 + e)), 2e-2, 5e-3).unwrap();
    assert!(close(v.value, lim.value, 1e-6), "{v:?} vs {lim:?}");
    // t = -b always lies on the excluded set of the u-only formula
    assert!(nonpositive_c(s, cr(0.0), 2, &o()).is_err());
}

#[test]
fn real_inputs_give_real_h() {
    let h = tornheim::appendix::h_eval(cr(2.5), cr(3.5), &o()).unwrap();
    assert!(h.value.im.abs() <= h.abs_err + 1e-15);
    let r = tornheim::appendix::funeq_residual(cr(0.7), cr(2.6), &o()).unwrap();
    assert!(r.value.im.abs() <= r.abs_err + 1e-12);
}

#[test]
fn appendix_corollary_under_t_shift() {
    use tornheim::appendix::{corollary_A_sides, FpmOptions};
    let fo = FpmOptions::default();
    for (s, t) in [(-0.5, 2.5), (-0.5, 4.5)] {
        let (l, r) = corollary_A_sides(cr(s), cr(t), &fo, &o()).unwrap();
        assert!((l.value - r.value).norm() <= 1e-3 * l.norm(), "({s},{t})");
        assert!(Complex64::new(0.0, r.value.im).norm() <= 1e-8 * l.norm());
    }
}
