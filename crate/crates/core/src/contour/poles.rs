use super::{ContourSpec, Indentation, Side};
use crate::error::{Error, Result};
use crate::value::CVal;

/// Arithmetic progression of poles `start + n·step`, `0 <= n < count`.
/// `step` is real; negative steps run to the left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleRay {
    pub start: CVal,
    pub step: f64,
    pub count: usize,
}

impl PoleRay {
    pub fn single(p: CVal) -> Self {
        PoleRay { start: p, step: 1.0, count: 1 }
    }

    pub fn leftward(p: CVal, step: f64) -> Self {
        PoleRay { start: p, step: -step.abs(), count: usize::MAX }
    }

    pub fn rightward(p: CVal, step: f64) -> Self {
        PoleRay { start: p, step: step.abs(), count: usize::MAX }
    }

    fn at(&self, n: usize) -> CVal {
        self.start + self.step * n as f64
    }

    /// Members with real part in `[lo, hi]`.
    fn members_in(&self, lo: f64, hi: f64) -> Vec<CVal> {
        let mut out = Vec::new();
        let x = self.start.re;
        let d = self.step;
        // index range where x + n d lies in [lo, hi]
        let (a, b) = if d > 0.0 { ((lo - x) / d, (hi - x) / d) } else { ((hi - x) / d, (lo - x) / d) };
        let first = a.ceil().max(0.0);
        let last = b.floor().min(self.count as f64 - 1.0).min(first + 100_000.0);
        if last < first {
            return out;
        }
        for n in first as usize..=last as usize {
            out.push(self.at(n));
        }
        out
    }

    /// Members strictly on the given side of `Re η = x`.
    fn members_beyond(&self, x: f64, right: bool) -> Vec<CVal> {
        if right {
            self.members_in(x + f64::MIN_POSITIVE, f64::INFINITY.min(x + 1e6))
                .into_iter()
                .filter(|p| p.re > x)
                .collect()
        } else {
            self.members_in(x - 1e6, x).into_iter().filter(|p| p.re < x).collect()
        }
    }
}

/// Poles the contour must keep on its left, on its right, and points where
/// the integrand has removable singularities (to be kept off the line).
#[derive(Debug, Clone, Default)]
pub struct PoleSet {
    pub left: Vec<PoleRay>,
    pub right: Vec<PoleRay>,
    pub neutral: Vec<PoleRay>,
}

const LINE_CLEARANCE: f64 = 0.2;
const PINCH: f64 = 1e-3;
const CLUSTER: f64 = 0.2;
const MAX_RADIUS: f64 = 0.25;

impl PoleSet {
    fn span(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for r in self.left.iter().chain(&self.right).chain(&self.neutral) {
            lo = lo.min(r.start.re);
            hi = hi.max(r.start.re);
            if r.count > 1 && r.count != usize::MAX {
                let e = r.at(r.count - 1).re;
                lo = lo.min(e);
                hi = hi.max(e);
            }
        }
        (lo, hi)
    }

    fn wrong_side(&self, x: f64) -> Vec<(CVal, Side)> {
        let mut out = Vec::new();
        for r in &self.left {
            out.extend(r.members_beyond(x, true).into_iter().map(|p| (p, Side::Left)));
        }
        for r in &self.right {
            out.extend(r.members_beyond(x, false).into_iter().map(|p| (p, Side::Right)));
        }
        out
    }

    fn clearance(&self, x: f64) -> f64 {
        let mut d = f64::INFINITY;
        for r in self.left.iter().chain(&self.right).chain(&self.neutral) {
            for p in r.members_in(x - 1.0, x + 1.0) {
                d = d.min((p.re - x).abs());
            }
        }
        d
    }
}

/// Chooses the abscissa and the residue circles for a pole separation.
///
/// The abscissa minimises the number of poles left on the wrong side among
/// lines with clearance at least 0.2 from every pole (less when the poles are
/// denser than that); ties prefer larger
/// clearance (capped at 0.5) and then closeness to `preferred`.
pub fn build_contour(poles: &PoleSet, height: f64, tol: f64, preferred: Option<f64>) -> Result<ContourSpec> {
    let (lo, hi) = poles.span();
    let (lo, hi) = (lo - 1.5, hi + 1.5);
    let centre = preferred.unwrap_or(0.5 * (lo + hi));

    // opposite families must not collide
    let lefts: Vec<CVal> = poles.left.iter().flat_map(|r| r.members_in(lo - 2.0, hi + 2.0)).collect();
    let rights: Vec<CVal> = poles.right.iter().flat_map(|r| r.members_in(lo - 2.0, hi + 2.0)).collect();
    for a in &lefts {
        for b in &rights {
            if (a - b).norm() < PINCH {
                return Err(Error::ContourPinch(format!("poles at {a} and {b} must be separated")));
            }
        }
    }

    let steps = ((hi - lo) / 0.005).ceil() as usize;
    let grid = |k: usize| lo + (hi - lo) * k as f64 / steps as f64;
    let reachable = (0..=steps).map(|k| poles.clearance(grid(k))).fold(0.0, f64::max);
    if reachable < 0.02 {
        return Err(Error::ContourPinch("no abscissa clears the poles".into()));
    }
    let threshold = LINE_CLEARANCE.min(0.8 * reachable);
    let mut best: Option<(usize, f64, f64, f64)> = None; // wrong count, clearance, |x - centre|, x
    for k in 0..=steps {
        let x = grid(k);
        let d = poles.clearance(x);
        if d < threshold {
            continue;
        }
        let w = poles.wrong_side(x).len();
        let key = (w, d.min(0.5), (x - centre).abs(), x);
        let better = match best {
            None => true,
            Some(b) => key.0 < b.0 || (key.0 == b.0 && (key.1 > b.1 + 1e-12 || (key.1 >= b.1 - 1e-12 && key.2 < b.2))),
        };
        if better {
            best = Some(key);
        }
    }
    let x0 = match best {
        Some(b) => b.3,
        None => return Err(Error::ContourPinch("no abscissa clears the poles".into())),
    };

    let wrong = poles.wrong_side(x0);
    let mut indentations = Vec::new();
    let mut used = vec![false; wrong.len()];
    for i in 0..wrong.len() {
        if used[i] {
            continue;
        }
        // grow a cluster of same-side wrong poles
        let mut members = vec![i];
        used[i] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for j in 0..wrong.len() {
                if !used[j]
                    && wrong[j].1 == wrong[i].1
                    && members.iter().any(|&m| (wrong[m].0 - wrong[j].0).norm() < CLUSTER)
                {
                    used[j] = true;
                    members.push(j);
                    grew = true;
                }
            }
        }
        let centre: CVal = members.iter().map(|&m| wrong[m].0).sum::<CVal>() / members.len() as f64;
        let spread = members.iter().map(|&m| (wrong[m].0 - centre).norm()).fold(0.0, f64::max);
        let mut nearest = f64::INFINITY;
        for r in poles.left.iter().chain(&poles.right) {
            for p in r.members_in(centre.re - 3.0, centre.re + 3.0) {
                if members.iter().any(|&m| (wrong[m].0 - p).norm() < 1e-14) {
                    continue;
                }
                nearest = nearest.min((p - centre).norm());
            }
        }
        let margin = MAX_RADIUS.min(0.5 * (nearest - spread));
        if margin < PINCH {
            return Err(Error::ContourPinch(format!("no room for a circle around {centre}")));
        }
        indentations.push(Indentation { center: centre, radius: spread + margin, side: wrong[i].1 });
    }
    let spec = ContourSpec { x0, height, indentations, panel_target_tol: tol };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::{c, cr};

    #[test]
    fn separable_families_need_no_circles() {
        let set = PoleSet {
            left: vec![PoleRay::leftward(cr(-0.6), 1.0)],
            right: vec![PoleRay::rightward(cr(0.0), 1.0)],
            neutral: vec![],
        };
        let c = build_contour(&set, 40.0, 1e-12, None).unwrap();
        assert!((c.x0 + 0.3).abs() < 0.01, "{}", c.x0);
        assert!(c.indentations.is_empty());
    }

    #[test]
    fn interleaved_families_get_circles() {
        let set = PoleSet {
            left: vec![PoleRay::leftward(c(2.3, 0.1), 1.0)],
            right: vec![PoleRay::rightward(cr(0.0), 1.0)],
            neutral: vec![],
        };
        let spec = build_contour(&set, 40.0, 1e-12, None).unwrap();
        assert_eq!(spec.indentations.len(), 3);
        let set = PoleSet {
            left: vec![PoleRay::single(cr(1.0 + 1e-4))],
            right: vec![PoleRay::rightward(cr(0.0), 1.0)],
            neutral: vec![],
        };
        assert!(matches!(build_contour(&set, 40.0, 1e-12, None), Err(Error::ContourPinch(_))));
    }
}
