use std::collections::BTreeSet;

use rayon::prelude::*;

use super::iso::{
    action_on_params_f64, canonical_form_iso_f64, AutoParamsF64, IsoClassF64, ParamsF64,
};
use super::isotopy::{isotopy_class, isotopy_transform, IsotopyClass, IsotopyElement};
use crate::enveloping::SubalgebraParams;

/// Search grid for [`orbit_search`].
#[derive(Debug, Clone)]
pub struct OrbitGrid {
    /// `p` ranges over `[-p_max, p_max]` in `p_steps` equal steps. Past
    /// `|p| ≈ 9` the hyperbolic boosts push `|y|` within `1e-8` of 1.
    pub p_max: f64,
    pub p_steps: usize,
    /// Candidate `v` values; roots between neighbours are refined.
    pub v_values: Vec<f64>,
    /// Automorphisms applied before the adjoint action.
    pub autos: Vec<AutoParamsF64>,
    pub tol: f64,
}

impl Default for OrbitGrid {
    fn default() -> Self {
        let mut v_values: Vec<f64> = (-30..=30).map(|k| 10f64.powf(k as f64 / 10.0)).collect();
        v_values.extend(v_values.clone().iter().map(|v| -v));
        v_values.push(0.0);
        v_values.sort_by(f64::total_cmp);
        v_values.dedup();
        let mut autos = Vec::new();
        for b in [1.0, -1.0, 0.5, 3.0] {
            for f in [0.0, 1.0] {
                for d in [0.0, -2.0] {
                    for eps in [1, -1] {
                        autos.push(AutoParamsF64 { b, f, d, eps });
                    }
                }
            }
        }
        OrbitGrid {
            p_max: 6.0,
            p_steps: 1200,
            v_values,
            autos,
            tol: 1e-8,
        }
    }
}

/// Target `|y|` values of the `y`-type representatives.
const Y_TARGETS: [(f64, IsotopyClass); 2] =
    [(1.0, IsotopyClass::UnitY), (2.0, IsotopyClass::BeyondUnit)];

fn bisect(mut lo: f64, mut hi: f64, g: impl Fn(f64) -> Option<f64>) -> Option<f64> {
    let mut glo = g(lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid)?;
        if gm == 0.0 {
            return Some(mid);
        }
        if (gm > 0.0) == (glo > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * (1.0 + lo.abs()) {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Roots of `g` over a sorted sample, found by sign change plus bisection and
/// kept only when `|g(root)| ≤ tol` (this drops sign changes across poles).
fn roots(samples: &[f64], g: impl Fn(f64) -> Option<f64> + Copy, tol: f64) -> Vec<f64> {
    let vals: Vec<Option<f64>> = samples.iter().map(|&s| g(s)).collect();
    let mut out = Vec::new();
    for k in 0..samples.len() {
        let Some(a) = vals[k] else { continue };
        if a.abs() <= tol {
            out.push(samples[k]);
            continue;
        }
        if k + 1 == samples.len() {
            continue;
        }
        let Some(b) = vals[k + 1] else { continue };
        if (a > 0.0) != (b > 0.0) && b.abs() > tol {
            if let Some(r) = bisect(samples[k], samples[k + 1], g) {
                if g(r).is_some_and(|gr| gr.abs() <= tol) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn reached_from(s: &ParamsF64, grid: &OrbitGrid) -> BTreeSet<IsotopyClass> {
    let mut found = BTreeSet::new();
    let tol = grid.tol * s.scale();
    let step = 2.0 * grid.p_max / grid.p_steps as f64;
    let ps: Vec<f64> = (0..=grid.p_steps)
        .map(|k| -grid.p_max + k as f64 * step)
        .collect();
    let moved = |v: f64, p: f64| isotopy_transform(&IsotopyElement::new(0.0, v, p), s).ok();

    if matches!(
        canonical_form_iso_f64(s, grid.tol),
        IsoClassF64::ZNormalized
    ) {
        // The e3 coordinate only rescales, so every image keeps z ≠ 0.
        if ps.iter().any(|&p| {
            moved(0.0, p)
                .is_some_and(|t| canonical_form_iso_f64(&t, grid.tol) == IsoClassF64::ZNormalized)
        }) {
            found.insert(IsotopyClass::E3);
        }
        return found;
    }

    for (target, class) in Y_TARGETS {
        for signed in [target, -target] {
            let g = |p: f64| moved(0.0, p).map(|t| t.y - signed);
            if !roots(&ps, g, tol).is_empty() {
                found.insert(class);
            }
        }
    }

    // Trivial: y′ = 0 at some p, then a v clearing x′.
    let y_zero = roots(&ps, |p| moved(0.0, p).map(|t| t.y), tol);
    for p in y_zero {
        let xs = roots(&grid.v_values, |v| moved(v, p).map(|t| t.x), tol);
        if xs.iter().any(|&v| {
            moved(v, p)
                .is_some_and(|t| canonical_form_iso_f64(&t, grid.tol) == IsoClassF64::Trivial)
        }) {
            found.insert(IsotopyClass::Trivial);
            break;
        }
    }
    found
}

/// Brute-force reachability: which isotopy representatives are hit from `s`
/// by an automorphism on the grid followed by `Ad(exp(v e2 + p e3))`.
pub fn orbit_search(s: &ParamsF64, grid: &OrbitGrid) -> BTreeSet<IsotopyClass> {
    grid.autos
        .par_iter()
        .map(|a| reached_from(&action_on_params_f64(a, s), grid))
        .reduce(BTreeSet::new, |mut acc, set| {
            acc.extend(set);
            acc
        })
}

/// A search from `s` supports its canonical class when it reaches at least
/// one representative and every representative it reaches lies in the same
/// exact class as `s`. Plus-type representatives such as `(0, 1, 0)` are
/// themselves trivial, so reaching them agrees with a trivial `s`.
pub fn orbit_agrees(s: &SubalgebraParams, reached: &BTreeSet<IsotopyClass>) -> bool {
    let class = isotopy_class(s);
    !reached.is_empty()
        && reached
            .iter()
            .all(|c| isotopy_class(&c.representative(s.sign)) == class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::Sign;

    fn small_grid() -> OrbitGrid {
        OrbitGrid {
            autos: vec![AutoParamsF64 {
                b: 1.0,
                f: 0.0,
                d: 0.0,
                eps: 1,
            }],
            ..OrbitGrid::default()
        }
    }

    #[test]
    fn minus_classes_separate() {
        let g = small_grid();
        let reach = |y: f64| orbit_search(&ParamsF64::new(Sign::Minus, 0.4, y, 0.0), &g);
        assert_eq!(reach(0.3), BTreeSet::from([IsotopyClass::Trivial]));
        assert_eq!(reach(-1.0), BTreeSet::from([IsotopyClass::UnitY]));
        assert_eq!(reach(4.0), BTreeSet::from([IsotopyClass::BeyondUnit]));
    }

    #[test]
    fn plus_rotation_reaches_everything_without_z() {
        let g = small_grid();
        let r = orbit_search(&ParamsF64::new(Sign::Plus, 0.0, -1.0, 0.0), &g);
        assert!(r.contains(&IsotopyClass::Trivial) && r.contains(&IsotopyClass::UnitY));
        let r = orbit_search(&ParamsF64::new(Sign::Plus, 1.0, 0.0, 2.0), &g);
        assert_eq!(r, BTreeSet::from([IsotopyClass::E3]));
    }
}
