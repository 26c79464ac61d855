use bolalg::loops::{
    bol_batch, check_left_bol, exp_b, group_compose, loop_compose, loop_compose_fast,
    negative_control, project_fast, project_to_section, random_points, sample_web, subgroup_h,
    tangent_bilinear, tangent_convergence, write_web_csv, GroupPoint, LoopChart, LoopPoint,
    WebGrid, WEB_CSV_HEADER,
};
use bolalg::Sign;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn projection_recomposes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for chart in LoopChart::standard() {
        for _ in 0..200 {
            let g = GroupPoint::new(
                rng.gen_range(-0.3..=0.3),
                rng.gen_range(-0.3..=0.3),
                rng.gen_range(-0.3..=0.3),
                rng.gen_range(-0.3..=0.3),
            );
            let p = project_to_section(&g, &chart).unwrap();
            let back = group_compose(&p.section, &subgroup_h(p.alpha, &chart), chart.kind());
            assert!(back.dist(&g) < 1e-10, "{chart}: {g:?}");
            assert!(p.section.dist(&exp_b(&p.point, chart.kind())) < 1e-14);
        }
    }
}

#[test]
fn subgroup_elements_project_to_identity() {
    for chart in LoopChart::standard() {
        let p = project_to_section(&subgroup_h(0.37, &chart), &chart).unwrap();
        assert!(
            p.point.norm_inf() < 1e-14 && (p.alpha - 0.37).abs() < 1e-14,
            "{chart}: {p:?}"
        );
    }
    // exp(α(e4 + e3)) leaves x3 = α but picks up an x2 component, so it is
    // not the straight line (0, 0, α, α).
    let h = subgroup_h(0.37, &LoopChart::case1(Sign::Minus));
    assert_eq!(h.x3, 0.37);
    assert!(h.x2.abs() > 1e-3);
}

#[test]
fn fast_path_agrees_with_newton() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for chart in LoopChart::standard() {
        let pts = random_points(&mut rng, 1000, 0.3);
        let mut worst = 0.0f64;
        for pair in pts.chunks(2) {
            let slow = loop_compose(&pair[0], &pair[1], &chart).unwrap();
            let fast = loop_compose_fast(&pair[0], &pair[1], &chart).unwrap();
            worst = worst.max(slow.dist(&fast));
        }
        assert!(worst < 1e-9, "{chart}: {worst:e}");
        let g = group_compose(
            &exp_b(&pts[0], chart.kind()),
            &exp_b(&pts[1], chart.kind()),
            chart.kind(),
        );
        let (a, b) = (
            project_to_section(&g, &chart).unwrap(),
            project_fast(&g, &chart).unwrap(),
        );
        assert!((a.alpha - b.alpha).abs() < 1e-9);
    }
}

#[test]
fn left_bol_all_charts() {
    for chart in LoopChart::standard() {
        let stats = bol_batch(&chart, 1000, 0.1, 7);
        assert!(stats.passed(1e-8), "{stats:?}");
        assert_eq!(stats.samples, 1000);
    }
}

#[test]
fn right_cosets_break_bol() {
    for chart in LoopChart::standard() {
        let stats = negative_control(&chart, 200, 0.1, 7);
        assert!(stats.max_residual > 1e-3, "{stats:?}");
    }
}

#[test]
fn bol_batch_is_deterministic() {
    let chart = LoopChart::case2(Sign::Plus, 1.0);
    assert_eq!(
        bol_batch(&chart, 100, 0.1, 3),
        bol_batch(&chart, 100, 0.1, 3)
    );
    assert_ne!(
        bol_batch(&chart, 100, 0.1, 3).mean_residual,
        bol_batch(&chart, 100, 0.1, 4).mean_residual
    );
}

#[test]
fn tangent_recovers_bilinear_operation() {
    for chart in LoopChart::standard() {
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let t = tangent_convergence(&chart, i, j, 1e-3, 4).unwrap();
                assert!(t.passed(1.0, 1e-3), "{chart} e{}.e{}: {t:?}", i + 1, j + 1);
            }
        }
    }
}

#[test]
fn web_rows() {
    let chart = LoopChart::case1(Sign::Plus);
    let grid = WebGrid { n: 3, radius: 0.1 };
    let rows = sample_web(&chart, &grid).unwrap();
    assert_eq!(rows.len(), grid.points().len().pow(2));
    let origin = rows
        .iter()
        .find(|r| r.a == LoopPoint::ZERO && r.b == LoopPoint::ZERO)
        .unwrap();
    assert_eq!(origin.ab, LoopPoint::ZERO);
    for r in &rows {
        assert!(loop_compose(&r.a, &r.b, &chart).unwrap().dist(&r.ab) <= 1e-12);
    }
    let mut buf = Vec::new();
    write_web_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with(&format!("{WEB_CSV_HEADER}\n")));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), rows.len() + 1);
    let first: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    assert_eq!(first.len(), 9);
    assert_eq!(LoopPoint::new(first[6], first[7], first[8]), rows[0].ab);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn loop_identity(p in proptest::array::uniform3(-0.3..0.3f64), k in 0usize..8) {
        let chart = LoopChart::standard()[k];
        let a = LoopPoint::from_array(p);
        prop_assert!(loop_compose(&a, &LoopPoint::ZERO, &chart).unwrap().dist(&a) < 1e-13);
        prop_assert!(loop_compose(&LoopPoint::ZERO, &a, &chart).unwrap().dist(&a) < 1e-13);
    }

    #[test]
    fn bol_with_c_zero(p in proptest::array::uniform3(-0.1..0.1f64), q in proptest::array::uniform3(-0.1..0.1f64), k in 0usize..8) {
        let chart = LoopChart::standard()[k];
        let r = check_left_bol(&LoopPoint::from_array(p), &LoopPoint::from_array(q), &LoopPoint::ZERO, &chart).unwrap();
        prop_assert!(r < 1e-10);
    }

    #[test]
    fn tangent_is_antisymmetric(xi in proptest::array::uniform3(-1.0..1.0f64), eta in proptest::array::uniform3(-1.0..1.0f64), k in 0usize..8) {
        let chart = LoopChart::standard()[k];
        let a = tangent_bilinear(&chart, xi, eta, 1e-2).unwrap();
        let b = tangent_bilinear(&chart, eta, xi, 1e-2).unwrap();
        for c in 0..3 {
            prop_assert!((a[c] + b[c]).abs() < 1e-9);
        }
    }
}
