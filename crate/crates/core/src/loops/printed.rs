//! Printed closed forms for the group, the section and the four web cases,
//! evaluated against the Newton-projection ground truth.
//!
//! Formulas are transcribed as printed. Where an operator is missing
//! between `x1` and the next product it is read as `+`, and the `(A′)²`
//! in the last correction term of the hyperbolic case-2 product is read
//! as `(D′)²`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{exp_b, exp_inv, group_compose, GroupKind, GroupPoint, LoopPoint};
use super::section::{project_to_section, random_points, subgroup_h, Projection};
use super::{commutator_estimate, HCase, LoopChart};
use crate::enveloping::Sign;
use crate::findings::DisplayCheck;

/// Agreement threshold for every loop display.
pub const DISPLAY_TOL: f64 = 1e-9;
/// Pairs per chart for the decomposition and product displays.
pub const PAIRS_PER_CHART: usize = 500;
pub const PAIR_RADIUS: f64 = 0.3;
const SEED: u64 = 0x05ee_db01;

/// The composition law exactly as printed: the central term pairs the
/// unrotated second factor, and the circular `x2` row reads
/// `x2 + y2 cos x3 − y4 sin x3`.
pub fn printed_compose(x: &GroupPoint, y: &GroupPoint, kind: GroupKind) -> GroupPoint {
    let (c, s) = kind.cs(x.x3);
    GroupPoint {
        x1: x.x1 + y.x1 + (x.x4 * y.x2 - y.x4 * x.x2) / 2.0,
        x2: x.x2 + y.x2 * c - y.x4 * s,
        x3: x.x3 + y.x3,
        x4: x.x4 - y.x2 * s + y.x4 * c,
    }
}

/// Printed section `B`: `(t + (v − s(v)) u²/(2v²), u s(v)/v, v, u (1 − c(v))/v)`.
pub fn printed_exp_b(p: &LoopPoint, kind: GroupKind) -> GroupPoint {
    let (c, s) = kind.cs(p.v);
    let (t, u, v) = (p.t, p.u, p.v);
    GroupPoint::new(
        t + (v - s) * u * u / (2.0 * v * v),
        u / v * s,
        v,
        u / v * (1.0 - c),
    )
}

/// Printed `exp⁻¹`, first three components.
pub fn printed_exp_inv(g: &GroupPoint, kind: GroupKind) -> LoopPoint {
    let s = kind.cs(g.x3).1;
    let (x2, x3) = (g.x2, g.x3);
    LoopPoint::new(
        g.x1 - x2 * x2 * s * s / (2.0 * x3.powi(3)) + x2 * x2 * s.powi(3) / (2.0 * x3.powi(4)),
        x2 / x3 * s,
        x3,
    )
}

/// Printed `H`: `(0, 0, α, α)` in every case.
pub fn printed_subgroup(alpha: f64) -> GroupPoint {
    GroupPoint::new(0.0, 0.0, alpha, alpha)
}

/// Scalar relation fixing `T` (circular) or `P` (hyperbolic) in case 1,
/// as `lhs − rhs`.
pub fn case1_star_relation(a: &LoopPoint, b: &LoopPoint, big_t: f64, kind: GroupKind) -> f64 {
    let (cv, sv) = kind.cs(a.v);
    let (ct, st) = kind.cs(big_t);
    let d = a.v + b.v - big_t;
    (a.u * sv - d * ct) * st - (a.u + b.u * cv + d * ct) * (ct - 1.0)
}

/// `F_minus` / `F_plus`: the printed first component of the case-1 product.
pub fn case1_star_t(a: &LoopPoint, b: &LoopPoint, big_t: f64, kind: GroupKind) -> f64 {
    let cv = kind.cs(a.v).0;
    let st = kind.cs(big_t).1;
    let d = a.v + b.v - big_t;
    let m = a.u + b.u * cv;
    let q = m + d * st;
    a.t + b.t + d * m / 2.0 + d * d / 2.0 * st
        - q * q / (2.0 * big_t.powi(4)) * (big_t - st) * st * st
}

/// Printed case-1 product `(F, [u + u′ c(v) + (v+v′−T) s(T)] s(T)/T, T)`.
pub fn case1_star(a: &LoopPoint, b: &LoopPoint, big_t: f64, kind: GroupKind) -> LoopPoint {
    let cv = kind.cs(a.v).0;
    let st = kind.cs(big_t).1;
    let d = a.v + b.v - big_t;
    LoopPoint::new(
        case1_star_t(a, b, big_t, kind),
        (a.u + b.u * cv + d * st) * st / big_t,
        big_t,
    )
}

/// Printed section point of the case-1 product before `exp⁻¹`. The
/// hyperbolic display has `sin P` in its second row; kept as printed.
pub fn case1_section(a: &LoopPoint, b: &LoopPoint, big_t: f64, kind: GroupKind) -> GroupPoint {
    let (cv, sv) = kind.cs(a.v);
    let (ct, st) = kind.cs(big_t);
    let d = a.v + b.v - big_t;
    let m = a.u + b.u * cv;
    let row2 = match kind {
        GroupKind::Circular => m + d * st,
        GroupKind::Hyperbolic => m + d * big_t.sin(),
    };
    GroupPoint::new(
        a.t + b.t + d * (m + d * st) / 2.0,
        row2,
        big_t,
        a.u * sv - d * ct,
    )
}

/// Printed `exp_b(a) Δ exp_b(b)`: `(t+t′, u + u′ c(v), v+v′, ±u s(v))`,
/// with `+` in case 1 and `−` in case 2.
pub fn printed_product(a: &LoopPoint, b: &LoopPoint, chart: &LoopChart) -> GroupPoint {
    let (cv, sv) = chart.kind().cs(a.v);
    let sign = match chart.case {
        HCase::Case1 => 1.0,
        HCase::Case2 { .. } => -1.0,
    };
    GroupPoint::new(a.t + b.t, a.u + b.u * cv, a.v + b.v, sign * a.u * sv)
}

/// Printed case-1 decomposition `g = b Δ (0, 0, x3 − v, x3 − v)` at a
/// given `v`. The hyperbolic display keeps `sinh v` only in its first row.
pub fn case1_decomposition(g: &GroupPoint, v: f64, kind: GroupKind) -> (GroupPoint, GroupPoint) {
    let (c, s) = (v.cos(), v.sin());
    let s1 = kind.cs(v).1;
    let d = g.x3 - v;
    let b = GroupPoint::new(
        g.x1 + d * (g.x2 + d * s1) / 2.0,
        g.x2 + d * s,
        v,
        g.x4 - d * c,
    );
    (b, printed_subgroup(d))
}

/// Printed relation for `v` in case 1, `lhs − rhs`.
pub fn case1_decomposition_relation(g: &GroupPoint, v: f64, kind: GroupKind) -> f64 {
    let (c, s) = kind.cs(v);
    let d = g.x3 - v;
    (g.x4 - d * c) * s - (g.x2 + d * c) * (c - 1.0)
}

/// Printed case-2 decomposition through `A, B` (circular) or `D, E`
/// (hyperbolic). The hyperbolic `H` factor has `sin x3` in its second row.
pub fn case2_decomposition(g: &GroupPoint, y: f64, kind: GroupKind) -> (GroupPoint, GroupPoint) {
    let (c, s) = kind.cs(g.x3);
    let (x1, x2, x3, x4) = (g.x1, g.x2, g.x3, g.x4);
    let den = y - y * c + s;
    let big_a = x3 * (x2 * (y * s + c) - x4 * (y * c - s)) / den;
    let big_b = (x4 * s - x2 * (1.0 - c)) / den;
    let b = GroupPoint::new(
        x1 + big_a * big_b * (y - y * c - s) / (2.0 * x3),
        big_a * s / x3,
        x3,
        big_a * (1.0 - c) / x3,
    );
    let k2_num = match kind {
        GroupKind::Circular => x4 * s - x2 * (1.0 - c),
        GroupKind::Hyperbolic => x4 * x3.sin() - x2 * (1.0 - c),
    };
    (b, GroupPoint::new(0.0, y * k2_num / den, 0.0, big_b))
}

/// Printed case-2 product through `A′, B′, C′` (circular) or
/// `D′, E′, F′, Λ` (hyperbolic).
pub fn case2_star(a: &LoopPoint, b: &LoopPoint, y: f64, kind: GroupKind) -> LoopPoint {
    let (cv, sv) = kind.cs(a.v);
    let w = a.v + b.v;
    let (cw, sw) = kind.cs(w);
    let m = a.u + b.u * cv;
    let den = y - y * cw + sw;
    let lambda = m * (y * sw + cw) - a.u * sv * (y * cw - sw);
    let a1 = w * lambda / den;
    let b1 = (a.u * sv * sw - m * (1.0 - cw)) / den;
    let c1 = a1 * b1 * (y - y * cw - sw) / w
        + a1 * a1 * sw.powi(4) / (2.0 * w.powi(4)) * (-1.0 + cw) / w;
    LoopPoint::new(a.t + b.t - c1, a1 * sw * sw / (w * w), w)
}

struct Sample {
    a: LoopPoint,
    b: LoopPoint,
    g: GroupPoint,
    truth: Projection,
}

fn samples(chart: &LoopChart, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = chart.kind();
    random_points(&mut rng, 2 * PAIRS_PER_CHART, PAIR_RADIUS)
        .chunks(2)
        .map(|w| {
            let g = group_compose(&exp_b(&w[0], kind), &exp_b(&w[1], kind), kind);
            let truth =
                project_to_section(&g, chart).expect("pairs of radius 0.3 stay inside the chart");
            Sample {
                a: w[0],
                b: w[1],
                g,
                truth,
            }
        })
        .collect()
}

fn sl(v: &[Vec<Sample>]) -> Vec<&[Sample]> {
    v.iter().map(|x| x.as_slice()).collect()
}

fn dev(a: &[f64], b: &[f64]) -> f64 {
    crate::findings::max_deviation([(a, b)])
}

fn over<'a>(
    sets: impl IntoIterator<Item = &'a [Sample]>,
    f: impl Fn(&Sample) -> f64,
) -> (usize, f64) {
    sets.into_iter().flatten().fold((0, 0.0f64), |(n, m), s| {
        let d = f(s);
        (n + 1, if d.is_nan() { f64::INFINITY } else { m.max(d) })
    })
}

fn check(id: &'static str, loc: &'static str, (n, d): (usize, f64), what: &str) -> DisplayCheck {
    DisplayCheck::compare(id, loc, n, d, DISPLAY_TOL, |d| {
        format!("{what}; max deviation {d:e} over {n} samples")
    })
}

fn group_law_check(kind: GroupKind) -> DisplayCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pt = || {
        GroupPoint::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
    };
    let mut worst = 0.0f64;
    let n = 200;
    for _ in 0..n {
        let (a, b, c) = (pt(), pt(), pt());
        let l = printed_compose(&printed_compose(&a, &b, kind), &c, kind);
        let r = printed_compose(&a, &printed_compose(&b, &c, kind), kind);
        worst = worst.max(l.dist(&r));
    }
    let (id, loc, extra) = match kind {
        GroupKind::Circular => (
            "group-law-circular",
            LOC_LAW_CIRC,
            "; an associative law rotates (y2, y4) by x3 before the central term, and its x2 row is x2 + y2 cos x3 + y4 sin x3",
        ),
        GroupKind::Hyperbolic => (
            "group-law-hyperbolic",
            LOC_LAW_HYP,
            "; the rows are right once the central term pairs (x2, x4) with the rotated (y2, y4)",
        ),
    };
    DisplayCheck::compare(id, loc, n, worst, 1e-12, |d| {
        format!("not associative (max residual {d:e}){extra}")
    })
}

fn labels_check() -> DisplayCheck {
    // [e3, e4] of the circular group against the minus type's −e2.
    let est = commutator_estimate(2, 3, 1e-4, GroupKind::Circular);
    let d = dev(&est, &[0.0, -1.0, 0.0, 0.0]);
    DisplayCheck::compare("group-type-labels", LOC_LABELS, 1, d, 1e-3, |_| {
        format!(
            "the circular group has [e3, e4] = {:+.3} e2, so it envelopes the plus type and the hyperbolic group the \
             minus type",
            est[1]
        )
    })
}

fn section_exp_check(kind: GroupKind, sets: &[Vec<Sample>]) -> DisplayCheck {
    let r = over(sets.iter().map(|v| v.as_slice()), |s| {
        dev(
            &printed_exp_b(&s.a, kind).to_array(),
            &exp_b(&s.a, kind).to_array(),
        )
    });
    let (id, loc, what) = match kind {
        GroupKind::Circular => (
            "section-exp-circular",
            LOC_EXP_CIRC,
            "x4 row has the wrong sign: exp gives -(u/v)(1 - cos v)",
        ),
        GroupKind::Hyperbolic => (
            "section-exp-hyperbolic",
            LOC_EXP_HYP,
            "x1 row has the wrong sign: exp gives t + (sinh v - v)u^2/(2v^2)",
        ),
    };
    check(id, loc, r, what)
}

fn exp_inv_check(kind: GroupKind, sets: &[Vec<Sample>]) -> DisplayCheck {
    let r = over(sets.iter().map(|v| v.as_slice()), |s| {
        let g = exp_b(&s.a, kind);
        let truth = exp_inv(&g, kind).expect("section point");
        dev(&printed_exp_inv(&g, kind).to_array(), &truth.to_array())
    });
    let (id, loc, what) = match kind {
        GroupKind::Circular => (
            "exp-inverse-circular",
            LOC_INV_CIRC,
            "u is x2*x3/sin x3, not x2*sin x3/x3, and t = x1 - u^2 (x3 - sin x3)/(2 x3^2); the printed map also keeps x4 as a fourth output",
        ),
        GroupKind::Hyperbolic => (
            "exp-inverse-hyperbolic",
            LOC_INV_HYP,
            "u is x2*x3/sinh x3, not x2*sinh x3/x3, and t = x1 - u^2 (sinh x3 - x3)/(2 x3^2)",
        ),
    };
    check(id, loc, r, what)
}

fn subgroup_check(id: &'static str, loc: &'static str, charts: &[LoopChart]) -> DisplayCheck {
    let alphas: Vec<f64> = (-6..=6).map(|k| 0.1 * k as f64).collect();
    let mut worst = 0.0f64;
    let mut n = 0;
    for chart in charts {
        for &al in &alphas {
            worst = worst.max(printed_subgroup(al).dist(&subgroup_h(al, chart)));
            n += 1;
        }
    }
    let what = match charts[0].case {
        HCase::Case1 => {
            "exp(alpha(e4 + e3)) also moves x1 and x2 and has x4 = sin alpha (resp. sinh alpha)"
        }
        HCase::Case2 { .. } => "exp(alpha(e4 + y e2)) is (0, alpha y, 0, alpha)",
    };
    check(id, loc, (n, worst), what)
}

/// Every loop display with its verdict.
pub fn printed_loop_checks() -> Vec<DisplayCheck> {
    let m1 = LoopChart::case1(Sign::Minus);
    let p1 = LoopChart::case1(Sign::Plus);
    let m2: Vec<LoopChart> = [0.0, 1.0, 2.0]
        .map(|y| LoopChart::case2(Sign::Minus, y))
        .to_vec();
    let p2: Vec<LoopChart> = [0.0, 1.0, 2.0]
        .map(|y| LoopChart::case2(Sign::Plus, y))
        .to_vec();

    let s_m1 = vec![samples(&m1, SEED)];
    let s_p1 = vec![samples(&p1, SEED)];
    let s_m2: Vec<Vec<Sample>> = m2.iter().map(|c| samples(c, SEED)).collect();
    let s_p2: Vec<Vec<Sample>> = p2.iter().map(|c| samples(c, SEED)).collect();
    let circ = GroupKind::Circular;
    let hyp = GroupKind::Hyperbolic;

    let mut out = vec![
        group_law_check(circ),
        group_law_check(hyp),
        labels_check(),
        section_exp_check(circ, &s_m1),
        section_exp_check(hyp, &s_p1),
        exp_inv_check(circ, &s_m1),
        exp_inv_check(hyp, &s_p1),
        subgroup_check("subgroup-minus1", LOC_H_M1, &[m1]),
        subgroup_check("subgroup-minus2", LOC_H_M2, &m2),
        subgroup_check("subgroup-plus1", LOC_H_P1, &[p1]),
        subgroup_check("subgroup-plus2", LOC_H_P2, &p2),
    ];

    for (kind, sets, ids) in [
        (
            circ,
            &s_m1,
            [
                "decomposition-minus1",
                "relation-minus1",
                "product-minus1",
                "section-minus1",
                "t-relation-minus1",
                "star-minus1",
            ],
        ),
        (
            hyp,
            &s_p1,
            [
                "decomposition-plus1",
                "relation-plus1",
                "product-plus1",
                "section-plus1",
                "p-relation-plus1",
                "star-plus1",
            ],
        ),
    ] {
        let chart = if kind == circ { m1 } else { p1 };
        let locs = if kind == circ {
            LOC_CASE1_M
        } else {
            LOC_CASE1_P
        };
        let sets = sl(sets);
        out.push(check(
            ids[0],
            locs[0],
            over(sets.clone(), |s| {
                let (b, k) = case1_decomposition(&s.g, s.truth.point.v, kind);
                dev(
                    &[b.to_array(), k.to_array()].concat(),
                    &[
                        s.truth.section.to_array(),
                        subgroup_h(s.truth.alpha, &chart).to_array(),
                    ]
                    .concat(),
                )
            }),
            "at the true v the printed factors differ from the section point and the H factor",
        ));
        out.push(check(
            ids[1],
            locs[1],
            over(sets.clone(), |s| {
                case1_decomposition_relation(&s.g, s.truth.point.v, kind).abs()
            }),
            "the relation does not vanish at the true v",
        ));
        out.push(check(
            ids[2],
            locs[2],
            over(sets.clone(), |s| {
                dev(
                    &printed_product(&s.a, &s.b, &chart).to_array(),
                    &s.g.to_array(),
                )
            }),
            "differs from exp(a) composed with exp(b)",
        ));
        out.push(check(
            ids[3],
            locs[3],
            over(sets.clone(), |s| {
                let star = s.truth.point;
                dev(
                    &case1_section(&s.a, &s.b, star.v, kind).to_array(),
                    &s.truth.section.to_array(),
                )
            }),
            "at the true last coordinate the printed section point differs from the projection",
        ));
        out.push(check(
            ids[4],
            locs[4],
            over(sets.clone(), |s| {
                case1_star_relation(&s.a, &s.b, s.truth.point.v, kind).abs()
            }),
            "the relation does not vanish at the true last coordinate of the product",
        ));
        out.push(check(
            ids[5],
            locs[5],
            over(sets, |s| dev(&case1_star(&s.a, &s.b, s.truth.point.v, kind).to_array(), &s.truth.point.to_array())),
            "at the true last coordinate the printed first and second components differ from the product",
        ));
    }

    for (kind, charts, sets, ids, locs) in [
        (
            circ,
            &m2,
            &s_m2,
            ["decomposition-minus2", "product-minus2", "star-minus2"],
            LOC_CASE2_M,
        ),
        (
            hyp,
            &p2,
            &s_p2,
            ["decomposition-plus2", "product-plus2", "star-plus2"],
            LOC_CASE2_P,
        ),
    ] {
        let y_of = |c: &LoopChart| match c.case {
            HCase::Case2 { y } => y,
            HCase::Case1 => unreachable!(),
        };
        let per_chart = |f: &dyn Fn(&LoopChart, &Sample) -> f64| {
            charts
                .iter()
                .zip(sets.iter())
                .fold((0usize, 0.0f64), |(n, m), (c, ss)| {
                    let (k, d) = over([ss.as_slice()], |s| f(c, s));
                    (n + k, m.max(d))
                })
        };
        out.push(check(
            ids[0],
            locs[0],
            per_chart(&|c, s| {
                let (b, k) = case2_decomposition(&s.g, y_of(c), kind);
                dev(
                    &[b.to_array(), k.to_array()].concat(),
                    &[
                        s.truth.section.to_array(),
                        subgroup_h(s.truth.alpha, c).to_array(),
                    ]
                    .concat(),
                )
            }),
            "the printed factors differ from the section point and the H factor",
        ));
        out.push(check(
            ids[1],
            locs[1],
            per_chart(&|c, s| dev(&printed_product(&s.a, &s.b, c).to_array(), &s.g.to_array())),
            "differs from exp(a) composed with exp(b)",
        ));
        out.push(check(
            ids[2],
            locs[2],
            per_chart(&|c, s| {
                dev(
                    &case2_star(&s.a, &s.b, y_of(c), kind).to_array(),
                    &s.truth.point.to_array(),
                )
            }),
            "differs from the projected product",
        ));
    }
    out
}

const LOC_LAW_CIRC: &str = "printed composition law with cos/sin (type minus section)";
const LOC_LAW_HYP: &str = "printed composition law with cosh/sinh (type plus section)";
const LOC_LABELS: &str =
    "assignment of the cos/sin group to the minus type and the cosh/sinh group to the plus type";
const LOC_EXP_CIRC: &str = "printed section B = exp of the subspace <e1, e2, e3>, cos/sin form";
const LOC_EXP_HYP: &str = "printed section B = exp of the subspace <e1, e2, e3>, cosh/sinh form";
const LOC_INV_CIRC: &str = "printed inverse exponential map, cos/sin form";
const LOC_INV_HYP: &str = "printed inverse exponential map, cosh/sinh form";
const LOC_H_M1: &str = "printed subgroup H = {0, 0, alpha, alpha} for h = <e4 + e3>, cos/sin form";
const LOC_H_M2: &str =
    "printed subgroup H = {0, 0, alpha, alpha} for h = <e4 + y e2>, cos/sin form";
const LOC_H_P1: &str =
    "printed subgroup H = {0, 0, alpha, alpha} for h = <e4 + e3>, cosh/sinh form";
const LOC_H_P2: &str =
    "printed subgroup H = {0, 0, alpha, alpha} for h = <e4 + y e2>, cosh/sinh form";
const LOC_CASE1_M: [&str; 6] = [
    "printed decomposition g = b * (0, 0, x3 - v, x3 - v) for h = <e4 + e3>, cos/sin form",
    "printed relation [x4 - (x3 - v) cos v] sin v = [x2 + (x3 - v) cos v](cos v - 1)",
    "printed product (t + t', u + u' cos v, v + v', u sin v) for h = <e4 + e3>",
    "printed section point with T before the inverse exponential, h = <e4 + e3>, cos/sin form",
    "printed relation fixing T",
    "printed loop product (F_minus, [u + u' cos v + (v + v' - T) sin T] sin T / T, T)",
];
const LOC_CASE1_P: [&str; 6] = [
    "printed decomposition g = b * (0, 0, x3 - v, x3 - v) for h = <e4 + e3>, cosh/sinh form",
    "printed relation [x4 - (x3 - v) cosh v] sinh v = [x2 + (x3 - v) cosh v](cosh v - 1)",
    "printed product (t + t', u + u' cosh v, v + v', u sinh v) for h = <e4 + e3>",
    "printed section point with P before the inverse exponential, h = <e4 + e3>, cosh/sinh form",
    "printed relation fixing P",
    "printed loop product (F_plus, [u + u' cosh v + (v + v' - P) sinh P] sinh P / P, P)",
];
const LOC_CASE2_M: [&str; 3] = [
    "printed decomposition through A, B for h = <e4 + y e2>, cos/sin form",
    "printed product (t + t', u + u' cos v, v + v', -u sin v) for h = <e4 + y e2>",
    "printed loop product (t + t' - C', A' sin^2(v + v')/(v + v')^2, v + v') with A', B', C'",
];
const LOC_CASE2_P: [&str; 3] = [
    "printed decomposition through D, E for h = <e4 + y e2>, cosh/sinh form",
    "printed product (t + t', u + u' cosh v, v + v', -u sinh v) for h = <e4 + y e2>",
    "printed loop product (t + t' - F', D' sinh^2(v + v')/(v + v')^2, v + v') with D', E', F', Lambda",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_relation_factors_without_u() {
        for kind in [GroupKind::Circular, GroupKind::Hyperbolic] {
            let (a, b) = (
                LoopPoint::new(0.1, 0.0, 0.2),
                LoopPoint::new(0.0, 0.0, 0.15),
            );
            assert!(case1_star_relation(&a, &b, 0.35, kind).abs() < 1e-15);
            for big_t in [0.1, 0.3, 0.5] {
                let (c, s) = kind.cs(big_t);
                let factored = (0.35 - big_t) * c * (s + c - 1.0);
                assert!((case1_star_relation(&a, &b, big_t, kind) + factored).abs() < 1e-15);
            }
        }
    }
}
