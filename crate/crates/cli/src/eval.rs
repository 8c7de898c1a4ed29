//! Point evaluation by target name.

use tornheim::appendix::{funeq_residual, h_eval, F_pm, FpmOptions, PmSign};
use tornheim::closed_forms::{
    convolution_check, corollary_values, lemma41_A_int, nonpositive_ab, nonpositive_c, parity_eval, F_eval, F_exact,
    LimitPath,
};
use tornheim::special::rational::Rational;
use tornheim::special::{gamma, riemann_zeta, zeta_nonpos_exact};
use tornheim::tornheim::{euler_double_zeta, is_convergent, tornheim_continued, tornheim_direct, A_shifted, Z_def};
use tornheim::witten::{witten_eval, witten_positive_int};
use tornheim::{Approx, CVal, EvalOptions, Result};

use crate::literal::{parse_complex, parse_int, show_complex};

const DIRECT_MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Complex,
    Int,
    NonNeg,
    Path,
    Sign,
}

/// Name, argument kinds, one-line description.
const TARGETS: &[(&str, &[Kind], &str)] = {
    use Kind::*;
    &[
        ("zeta", &[Complex], "Riemann zeta"),
        ("zeta-nonpos", &[NonNeg], "exact zeta(-n)"),
        ("gamma", &[Complex], "Gamma function"),
        ("tornheim", &[Complex, Complex, Complex], "zeta(s,t;u), by series or continuation"),
        ("tornheim-direct", &[Complex, Complex, Complex], "zeta(s,t;u) in the convergent region"),
        ("euler", &[Complex, Complex], "Euler double zeta zeta_E(s,t)"),
        ("A", &[Complex, Complex, Complex], "A(s,t;u) by shifted contour"),
        ("Z", &[Complex, Complex, Complex], "Z(s,t;u)"),
        ("A-int", &[Int, Complex, Complex], "A(a,t;u) at integer a, closed form"),
        ("parity", &[Int, Int, Int], "zeta(a,b;c) at odd weight, closed form"),
        ("F", &[Complex, Complex, NonNeg], "F(s,t;c)"),
        ("F-exact", &[NonNeg, NonNeg, NonNeg], "F(-a,-b;c), exact"),
        ("nonpositive-c", &[Complex, Complex, NonNeg], "zeta(s,t;-c)"),
        ("nonpositive-ab", &[NonNeg, NonNeg, Complex], "zeta(-a,-b;u)"),
        ("corollary", &[NonNeg, NonNeg, NonNeg, Path], "zeta(-a,-b;-c) along a limit path, exact"),
        ("convolution", &[NonNeg, NonNeg, NonNeg], "convolution identity residual, exact"),
        ("witten", &[Complex], "SU(3) Witten zeta"),
        ("witten-int", &[NonNeg], "SU(3) Witten zeta at a positive integer"),
        ("h", &[Complex, Complex], "h(s,t)"),
        ("funeq", &[Complex, Complex], "functional equation residual for h"),
        ("Fpm", &[Sign, Complex, Complex], "F_+(s,t) or F_-(s,t)"),
    ]
};

pub fn target_help() -> String {
    let mut out = String::from("targets:\n");
    for (name, kinds, what) in TARGETS {
        let sig: Vec<&str> = kinds
            .iter()
            .map(|k| match k {
                Kind::Complex => "<z>",
                Kind::Int => "<int>",
                Kind::NonNeg => "<n>",
                Kind::Path => "<joint_st|u_then|s_then_u|t_then_u>",
                Kind::Sign => "<+|->",
            })
            .collect();
        out += &format!("  {name} {}    {what}\n", sig.join(" "));
    }
    out
}

enum ArgVal {
    C(CVal),
    I(i64),
    P(LimitPath),
    S(PmSign),
}

pub enum Computed {
    Approx(Approx),
    Exact(Rational),
}

pub struct Parsed {
    pub target: &'static str,
    pub inputs: Vec<String>,
    args: Vec<ArgVal>,
}

/// Checks the target name, arity and literal kinds.
pub fn parse(target: &str, raw: &[String]) -> std::result::Result<Parsed, String> {
    let (name, kinds, _) = TARGETS
        .iter()
        .find(|(n, _, _)| *n == target)
        .ok_or_else(|| format!("unknown target {target:?}\n{}", target_help()))?;
    if raw.len() != kinds.len() {
        return Err(format!("{name} takes {} argument(s), got {}", kinds.len(), raw.len()));
    }
    let mut args = Vec::new();
    let mut inputs = Vec::new();
    for (k, s) in kinds.iter().zip(raw) {
        let (v, echo) = match k {
            Kind::Complex => {
                let z = parse_complex(s)?;
                (ArgVal::C(z), show_complex(z))
            }
            Kind::Int | Kind::NonNeg => {
                let n = parse_int(s)?;
                if *k == Kind::NonNeg && !(0..=u32::MAX as i64).contains(&n) {
                    return Err(format!("expected a non-negative integer, got {s:?}"));
                }
                (ArgVal::I(n), n.to_string())
            }
            Kind::Path => {
                let p = LimitPath::parse(s).ok_or_else(|| format!("unknown limit path {s:?}"))?;
                (ArgVal::P(p), p.name().to_string())
            }
            Kind::Sign => {
                let sg = match s.as_str() {
                    "+" | "plus" => PmSign::Plus,
                    "-" | "minus" => PmSign::Minus,
                    _ => return Err(format!("expected + or -, got {s:?}")),
                };
                (ArgVal::S(sg), s.clone())
            }
        };
        args.push(v);
        inputs.push(echo);
    }
    Ok(Parsed { target: name, inputs, args })
}

pub fn run(p: &Parsed, opts: &EvalOptions) -> Result<Computed> {
    let z = |i: usize| match p.args[i] {
        ArgVal::C(v) => v,
        _ => unreachable!("kinds are checked in parse"),
    };
    let n = |i: usize| match p.args[i] {
        ArgVal::I(v) => v,
        _ => unreachable!("kinds are checked in parse"),
    };
    let u = |i: usize| n(i) as u32;
    let ap = Computed::Approx;
    Ok(match p.target {
        "zeta" => ap(riemann_zeta(z(0), opts)?),
        "zeta-nonpos" => Computed::Exact(zeta_nonpos_exact(u(0))),
        "gamma" => ap(gamma(z(0))?),
        "tornheim" => {
            let (s, t, w) = (z(0), z(1), z(2));
            // the series is the more accurate route wherever it converges
            if is_convergent(s, t, w, DIRECT_MARGIN) {
                ap(tornheim_direct(s, t, w, opts)?)
            } else {
                ap(tornheim_continued(s, t, w, opts)?)
            }
        }
        "tornheim-direct" => ap(tornheim_direct(z(0), z(1), z(2), opts)?),
        "euler" => ap(euler_double_zeta(z(0), z(1), opts)?),
        "A" => ap(A_shifted(z(0), z(1), z(2), None, opts)?),
        "Z" => ap(Z_def(z(0), z(1), z(2), opts)?),
        "A-int" => ap(lemma41_A_int(n(0), z(1), z(2), opts)?),
        "parity" => ap(parity_eval(n(0), n(1), n(2), opts)?),
        "F" => ap(F_eval(z(0), z(1), u(2), opts)?),
        "F-exact" => Computed::Exact(F_exact(u(0), u(1), u(2))),
        "nonpositive-c" => ap(nonpositive_c(z(0), z(1), u(2), opts)?),
        "nonpositive-ab" => ap(nonpositive_ab(u(0), u(1), z(2), opts)?),
        "corollary" => {
            let ArgVal::P(path) = p.args[3] else { unreachable!() };
            Computed::Exact(corollary_values(u(0), u(1), u(2), path))
        }
        "convolution" => Computed::Exact(convolution_check(u(0), u(1), u(2))),
        "witten" => ap(witten_eval(z(0), opts)?),
        "witten-int" => ap(witten_positive_int(u(0), opts)?),
        "h" => ap(h_eval(z(0), z(1), opts)?),
        "funeq" => ap(funeq_residual(z(0), z(1), opts)?),
        "Fpm" => {
            let ArgVal::S(sg) = p.args[0] else { unreachable!() };
            ap(F_pm(sg, z(1), z(2), &FpmOptions::default(), opts)?)
        }
        other => unreachable!("target {other} is in the table but not dispatched"),
    })
}
