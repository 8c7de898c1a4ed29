use crate::special::gamma::cos_pi;
use crate::value::CVal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Convergent,
    Continued,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyperplane {
    /// `s + u = 1 - l`
    SPlusU,
    /// `t + u = 1 - l`
    TPlusU,
    /// `s + t + u = 2`
    Sum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularFlag {
    pub plane: Hyperplane,
    pub l: Option<u32>,
    pub distance: f64,
}

/// A point of `C³` with its region and nearby singular hyperplanes.
#[derive(Debug, Clone, PartialEq)]
pub struct TornheimPoint {
    pub s: CVal,
    pub t: CVal,
    pub u: CVal,
    pub region: Region,
    pub singular_flags: Vec<SingularFlag>,
}

pub const FLAG_DISTANCE: f64 = 1e-8;

/// Distance from `w` to `{1 - l : l = 0, 1, 2, ...}` and the nearest `l`.
pub(crate) fn lattice_distance(w: CVal) -> (u32, f64) {
    let l = (1.0 - w.re).round().max(0.0);
    (l as u32, (w - (1.0 - l)).norm())
}

pub fn is_convergent(s: CVal, t: CVal, u: CVal, margin: f64) -> bool {
    (s + u).re > 1.0 + margin && (t + u).re > 1.0 + margin && (s + t + u).re > 2.0 + margin
}

/// Flags every singular hyperplane within `within` of the point.
pub fn singular_flags(s: CVal, t: CVal, u: CVal, within: f64) -> Vec<SingularFlag> {
    let mut out = Vec::new();
    for (plane, w) in [(Hyperplane::SPlusU, s + u), (Hyperplane::TPlusU, t + u)] {
        let (l, d) = lattice_distance(w);
        if d <= within {
            out.push(SingularFlag { plane, l: Some(l), distance: d });
        }
    }
    let d = (s + t + u - 2.0).norm();
    if d <= within {
        out.push(SingularFlag { plane: Hyperplane::Sum, l: None, distance: d });
    }
    out
}

impl TornheimPoint {
    pub fn classify(s: CVal, t: CVal, u: CVal) -> Self {
        let region = if is_convergent(s, t, u, 0.0) { Region::Convergent } else { Region::Continued };
        TornheimPoint { s, t, u, region, singular_flags: singular_flags(s, t, u, FLAG_DISTANCE) }
    }
}

/// `Δ = 1 − cos²πs − cos²πt − cos²πu + 2 cos πs cos πt cos πu`.
pub fn delta(s: CVal, t: CVal, u: CVal) -> CVal {
    let (a, b, c) = (cos_pi(s), cos_pi(t), cos_pi(u));
    1.0 - a * a - b * b - c * c + 2.0 * a * b * c
}
