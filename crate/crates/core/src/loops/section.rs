//! Projection onto the section and the induced loop.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::group::{exp_b, exp_g, group_compose, GroupKind, GroupPoint, LoopPoint};
use super::{HCase, LoopChart, LoopError};
use crate::linalg::{newton_polish, newton_root, LinalgError, NewtonOptions};

/// `g = b Δ exp(α h)` with `b = exp_b(point)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Projection {
    pub point: LoopPoint,
    pub section: GroupPoint,
    pub alpha: f64,
}

/// `exp(α h)`.
pub fn subgroup_h(alpha: f64, chart: &LoopChart) -> GroupPoint {
    exp_g(chart.h_direction().map(|c| alpha * c), chart.kind())
}

fn newton_projection(
    g: &GroupPoint,
    chart: &LoopChart,
    residual: impl Fn(&LoopPoint, f64) -> GroupPoint,
) -> Result<Projection, LoopError> {
    if !g.is_finite() {
        return Err(LoopError::NonFinite);
    }
    let target = g.to_array();
    let scale = 1.0 + target.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let f = |z: &[f64; 4]| {
        let r = residual(&LoopPoint::new(z[0], z[1], z[2]), z[3]).to_array();
        [
            r[0] - target[0],
            r[1] - target[1],
            r[2] - target[2],
            r[3] - target[3],
        ]
    };
    let (z, r) = newton_polish(f, [g.x1, g.x2, g.x3, 0.0], 60).map_err(LoopError::NoConvergence)?;
    if r > chart.tol * scale {
        return Err(LoopError::NoConvergence(LinalgError::NoConvergence {
            iterations: 60,
            residual: r,
        }));
    }
    let point = LoopPoint::new(z[0], z[1], z[2]);
    Ok(Projection {
        point,
        section: exp_b(&point, chart.kind()),
        alpha: z[3],
    })
}

/// Solve `exp_b(t, u, v) Δ exp(α h) = g` for `(t, u, v, α)` by Newton's
/// method started at `(x1, x2, x3, 0)`.
pub fn project_to_section(g: &GroupPoint, chart: &LoopChart) -> Result<Projection, LoopError> {
    let kind = chart.kind();
    newton_projection(g, chart, |p, a| {
        group_compose(&exp_b(p, kind), &subgroup_h(a, chart), kind)
    })
}

/// Right-coset variant `exp(α h) Δ exp_b(t, u, v) = g`. The resulting
/// product is not a Bol loop; used as a negative control.
pub fn project_to_section_right(
    g: &GroupPoint,
    chart: &LoopChart,
) -> Result<Projection, LoopError> {
    let kind = chart.kind();
    newton_projection(g, chart, |p, a| {
        group_compose(&subgroup_h(a, chart), &exp_b(p, kind), kind)
    })
}

/// Recover `(t, u)` once `v` and `k = exp(α h)` are known.
fn finish(
    g: &GroupPoint,
    kind: GroupKind,
    v: f64,
    k: &GroupPoint,
    alpha: f64,
) -> Result<Projection, LoopError> {
    let (k2, k4) = kind.rotate(v, k.x2, k.x4);
    let (s, c) = (kind.sinc(v), kind.cosc(v));
    let (r2, r4) = (g.x2 - k2, g.x4 - k4);
    let u = (r2 * s - r4 * c) / (s * s + c * c);
    let (b2, b4) = (u * s, -u * c);
    let b1 = g.x1 - k.x1 - 0.5 * (b4 * k2 - k4 * b2);
    let point = LoopPoint::new(b1 - u * u * kind.central(v), u, v);
    if !(point.t.is_finite() && point.u.is_finite()) {
        return Err(LoopError::NonFinite);
    }
    Ok(Projection {
        point,
        section: exp_b(&point, kind),
        alpha,
    })
}

/// Closed-form projection. Case 2 leaves `x3` untouched and is a 2×2 linear
/// solve for `(u, α)`; case 1 reduces to one scalar equation in `α`.
pub fn project_fast(g: &GroupPoint, chart: &LoopChart) -> Result<Projection, LoopError> {
    let kind = chart.kind();
    match chart.case {
        HCase::Case2 { y } => {
            let v = g.x3;
            let (s, c) = (kind.sinc(v), kind.cosc(v));
            let (r2, r4) = kind.rotate(v, y, 1.0);
            // [s r2; −c r4] (u, α) = (x2, x4)
            let det = s * r4 + c * r2;
            if det.abs() < 1e-12 {
                return Err(LoopError::OutsideChart);
            }
            let alpha = (s * g.x4 + c * g.x2) / det;
            finish(g, kind, v, &subgroup_h(alpha, chart), alpha)
        }
        HCase::Case1 => {
            let f = |a: f64| {
                let v = g.x3 - a;
                let k = subgroup_h(a, chart);
                let (k2, k4) = kind.rotate(v, k.x2, k.x4);
                (g.x2 - k2) * kind.cosc(v) + (g.x4 - k4) * kind.sinc(v)
            };
            let df = |a: f64| (f(a + 1e-7) - f(a - 1e-7)) / 2e-7;
            let tol = chart.tol * (1.0 + g.x2.abs().max(g.x4.abs()));
            let opts = NewtonOptions {
                tol,
                max_iter: 60,
                bracket: None,
            };
            let alpha = newton_root(f, df, 0.0, opts).map_err(LoopError::NoConvergence)?;
            finish(g, kind, g.x3 - alpha, &subgroup_h(alpha, chart), alpha)
        }
    }
}

/// `a ★ b = exp⁻¹(Π_B(exp_b(a) Δ exp_b(b)))`, through the Newton projection.
pub fn loop_compose(
    a: &LoopPoint,
    b: &LoopPoint,
    chart: &LoopChart,
) -> Result<LoopPoint, LoopError> {
    let kind = chart.kind();
    Ok(project_to_section(
        &group_compose(&exp_b(a, kind), &exp_b(b, kind), kind),
        chart,
    )?
    .point)
}

/// `a ★ b` through [`project_fast`].
pub fn loop_compose_fast(
    a: &LoopPoint,
    b: &LoopPoint,
    chart: &LoopChart,
) -> Result<LoopPoint, LoopError> {
    let kind = chart.kind();
    Ok(project_fast(
        &group_compose(&exp_b(a, kind), &exp_b(b, kind), kind),
        chart,
    )?
    .point)
}

fn bol_residual_with(
    a: &LoopPoint,
    b: &LoopPoint,
    c: &LoopPoint,
    star: impl Fn(&LoopPoint, &LoopPoint) -> Result<LoopPoint, LoopError>,
) -> Result<f64, LoopError> {
    let left = star(a, &star(b, &star(a, c)?)?)?;
    let right = star(&star(a, &star(b, a)?)?, c)?;
    Ok(left.dist(&right))
}

/// `‖a★(b★(a★c)) − (a★(b★a))★c‖∞`.
pub fn check_left_bol(
    a: &LoopPoint,
    b: &LoopPoint,
    c: &LoopPoint,
    chart: &LoopChart,
) -> Result<f64, LoopError> {
    bol_residual_with(a, b, c, |p, q| loop_compose(p, q, chart))
}

/// `n` points uniform in the cube `‖p‖∞ ≤ radius`.
pub fn random_points(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<LoopPoint> {
    (0..n)
        .map(|_| {
            LoopPoint::new(
                rng.gen_range(-radius..=radius),
                rng.gen_range(-radius..=radius),
                rng.gen_range(-radius..=radius),
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BolStats {
    pub chart: String,
    pub samples: usize,
    pub radius: f64,
    /// Over the triples whose projections converged.
    pub max_residual: f64,
    pub mean_residual: f64,
    /// Triples whose projection failed to converge.
    pub failures: usize,
}

impl BolStats {
    /// Every triple converged and stayed below `tol`.
    pub fn passed(&self, tol: f64) -> bool {
        self.failures == 0 && self.max_residual < tol
    }
}

fn batch(
    chart: &LoopChart,
    samples: usize,
    radius: f64,
    seed: u64,
    residual: impl Fn(&LoopPoint, &LoopPoint, &LoopPoint) -> Result<f64, LoopError> + Sync,
) -> BolStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = random_points(&mut rng, 3 * samples, radius);
    let res: Vec<Option<f64>> = pts
        .par_chunks(3)
        .map(|t| residual(&t[0], &t[1], &t[2]).ok().filter(|r| r.is_finite()))
        .collect();
    let ok: Vec<f64> = res.iter().flatten().copied().collect();
    let failures = samples - ok.len();
    let max = ok.iter().fold(0.0f64, |m, &r| m.max(r));
    let mean = if ok.is_empty() {
        0.0
    } else {
        ok.iter().sum::<f64>() / ok.len() as f64
    };
    BolStats {
        chart: chart.name(),
        samples,
        radius,
        max_residual: max,
        mean_residual: mean,
        failures,
    }
}

/// Left-Bol residuals over `samples` seeded random triples.
pub fn bol_batch(chart: &LoopChart, samples: usize, radius: f64, seed: u64) -> BolStats {
    batch(chart, samples, radius, seed, |a, b, c| {
        check_left_bol(a, b, c, chart)
    })
}

/// Same statistics for the product built from right cosets `H B`.
pub fn negative_control(chart: &LoopChart, samples: usize, radius: f64, seed: u64) -> BolStats {
    let kind = chart.kind();
    let star = |p: &LoopPoint, q: &LoopPoint| {
        Ok(project_to_section_right(
            &group_compose(&exp_b(p, kind), &exp_b(q, kind), kind),
            chart,
        )?
        .point)
    };
    batch(chart, samples, radius, seed, |a, b, c| {
        bol_residual_with(a, b, c, star)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::Sign;

    #[test]
    fn section_points_project_to_themselves() {
        for chart in LoopChart::standard() {
            let p = LoopPoint::new(0.1, -0.2, 0.3);
            let g = exp_b(&p, chart.kind());
            let pr = project_to_section(&g, &chart).unwrap();
            assert!(
                pr.point.dist(&p) < 1e-13 && pr.alpha.abs() < 1e-13,
                "{chart}"
            );
        }
    }

    #[test]
    fn subgroup_projects_to_identity() {
        let chart = LoopChart::case1(Sign::Minus);
        let pr = project_to_section(&subgroup_h(0.4, &chart), &chart).unwrap();
        assert!(pr.point.norm_inf() < 1e-13 && (pr.alpha - 0.4).abs() < 1e-13);
    }

    #[test]
    fn fast_matches_newton() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for chart in LoopChart::standard() {
            for w in random_points(&mut rng, 20, 0.3).chunks(2) {
                let g = group_compose(
                    &exp_b(&w[0], chart.kind()),
                    &exp_b(&w[1], chart.kind()),
                    chart.kind(),
                );
                let (a, b) = (
                    project_to_section(&g, &chart).unwrap(),
                    project_fast(&g, &chart).unwrap(),
                );
                assert!(
                    a.point.dist(&b.point) < 1e-12 && (a.alpha - b.alpha).abs() < 1e-12,
                    "{chart}"
                );
            }
        }
    }

    #[test]
    fn loop_identity() {
        for chart in LoopChart::standard() {
            let a = LoopPoint::new(0.2, 0.1, -0.3);
            assert!(loop_compose(&a, &LoopPoint::ZERO, &chart).unwrap().dist(&a) < 1e-14);
            assert!(loop_compose(&LoopPoint::ZERO, &a, &chart).unwrap().dist(&a) < 1e-14);
        }
    }

    #[test]
    fn c_zero_bol_is_tautological() {
        let chart = LoopChart::case2(Sign::Plus, 1.0);
        let (a, b) = (
            LoopPoint::new(0.05, -0.02, 0.07),
            LoopPoint::new(-0.03, 0.08, 0.01),
        );
        assert!(check_left_bol(&a, &b, &LoopPoint::ZERO, &chart).unwrap() < 1e-10);
    }

    #[test]
    fn pure_v_products_add() {
        for chart in LoopChart::standard() {
            let p = loop_compose(
                &LoopPoint::new(0.1, 0.0, 0.2),
                &LoopPoint::new(0.05, 0.0, -0.3),
                &chart,
            )
            .unwrap();
            assert!(
                p.dist(&LoopPoint::new(0.15, 0.0, -0.1)) < 1e-13,
                "{chart}: {p:?}"
            );
        }
    }
}
