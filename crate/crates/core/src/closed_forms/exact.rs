use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::special::rational::{rat_string, rat_to_f64, Rational};

/// Transcendental constants an exact result may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ZetaSymbol {
    /// `ζ(n)` at a positive odd integer
    Zeta(u32),
    /// `ζ'(n)`
    ZetaPrime(i64),
}

/// `rational_part + Σ coeff · symbol`, a Q-linear combination.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExactValue {
    pub rational_part: Rational,
    pub zeta_coeffs: BTreeMap<ZetaSymbol, Rational>,
}

impl ExactValue {
    pub fn rational(r: Rational) -> Self {
        ExactValue { rational_part: r, zeta_coeffs: BTreeMap::new() }
    }

    pub fn is_rational(&self) -> bool {
        self.zeta_coeffs.is_empty()
    }

    pub fn add_symbol(&mut self, sym: ZetaSymbol, coeff: Rational) {
        let e = self.zeta_coeffs.entry(sym).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.zeta_coeffs.remove(&sym);
        }
    }

    /// Numerical value, given values for the symbols.
    pub fn to_f64(&self, eval: impl Fn(ZetaSymbol) -> f64) -> f64 {
        rat_to_f64(&self.rational_part)
            + self.zeta_coeffs.iter().map(|(s, c)| rat_to_f64(c) * eval(*s)).sum::<f64>()
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational_part.is_zero() || self.zeta_coeffs.is_empty() {
            parts.push(rat_string(&self.rational_part));
        }
        for (s, c) in &self.zeta_coeffs {
            let sym = match s {
                ZetaSymbol::Zeta(n) => format!("zeta({n})"),
                ZetaSymbol::ZetaPrime(n) => format!("zeta'({n})"),
            };
            parts.push(format!("({})*{sym}", rat_string(c)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::rational::rat;

    #[test]
    fn combination() {
        let mut v = ExactValue::rational(rat(1, 3));
        v.add_symbol(ZetaSymbol::ZetaPrime(-2), rat(1, 2));
        v.add_symbol(ZetaSymbol::ZetaPrime(-2), rat(-1, 2));
        assert!(v.is_rational());
        v.add_symbol(ZetaSymbol::Zeta(3), rat(2, 1));
        assert_eq!(v.to_string(), "1/3 + (2)*zeta(3)");
        assert!((v.to_f64(|_| 1.0) - (1.0 / 3.0 + 2.0)).abs() < 1e-15);
    }
}
