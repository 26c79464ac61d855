//! Recovery of the bilinear operation `ξ·η` from the loop by finite
//! differences: `a ★ b − b ★ a = [a, b]_𝔅 + O(3)`.

use serde::Serialize;

use super::group::LoopPoint;
use super::section::loop_compose;
use super::{LoopChart, LoopError};
use crate::enveloping::{induced_bol, EnvelopingPair};
use crate::linalg::vec::{basis, to_f64};

/// `((εξ ★ εη) − (εη ★ εξ)) / ε²`.
pub fn tangent_bilinear_raw(
    chart: &LoopChart,
    xi: [f64; 3],
    eta: [f64; 3],
    eps: f64,
) -> Result<[f64; 3], LoopError> {
    let a = LoopPoint::from_array(xi).scale(eps);
    let b = LoopPoint::from_array(eta).scale(eps);
    let ab = loop_compose(&a, &b, chart)?.to_array();
    let ba = loop_compose(&b, &a, chart)?.to_array();
    Ok([0, 1, 2].map(|k| (ab[k] - ba[k]) / (eps * eps)))
}

/// Richardson extrapolation of [`tangent_bilinear_raw`] over `ε` and `ε/2`,
/// cancelling the first-order error term.
pub fn tangent_bilinear(
    chart: &LoopChart,
    xi: [f64; 3],
    eta: [f64; 3],
    eps: f64,
) -> Result<[f64; 3], LoopError> {
    let coarse = tangent_bilinear_raw(chart, xi, eta, eps)?;
    let fine = tangent_bilinear_raw(chart, xi, eta, eps / 2.0)?;
    Ok([0, 1, 2].map(|k| 2.0 * fine[k] - coarse[k]))
}

/// `ei · ej` of the algebra induced by the chart's enveloping pair, exact
/// then converted.
pub fn exact_bilinear(chart: &LoopChart, i: usize, j: usize) -> [f64; 3] {
    let pair = EnvelopingPair::family(&chart.subalgebra_params());
    let alg = induced_bol(&pair).expect("family pairs satisfy the triple condition");
    let v = to_f64(
        &alg.bilinear_eval(&basis(3, i), &basis(3, j))
            .expect("dim 3"),
    );
    [v[0], v[1], v[2]]
}

/// Errors below this are treated as converged when estimating the order.
pub const ORDER_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangentCheck {
    pub chart: String,
    /// 0-based basis indices `(i, j)`.
    pub pair: (usize, usize),
    pub exact: [f64; 3],
    /// Step sizes, halving down to the last one.
    pub eps: Vec<f64>,
    /// `‖raw − exact‖∞` at each step (first order).
    pub raw_errors: Vec<f64>,
    /// `‖tangent_bilinear − exact‖∞` at each step.
    pub errors: Vec<f64>,
    /// `log2(err(2ε)/err(ε))` of [`tangent_bilinear`] over the last halving;
    /// infinite once the error is at the floor.
    pub observed_order: f64,
    /// Same ratio for the raw quotient.
    pub raw_order: f64,
    /// Error of [`tangent_bilinear`] at the last step.
    pub final_error: f64,
}

impl TangentCheck {
    pub fn passed(&self, order: f64, final_tol: f64) -> bool {
        self.observed_order >= order && self.final_error < final_tol
    }
}

fn err(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn last_order(errors: &[f64]) -> f64 {
    let n = errors.len();
    if n < 2 || errors[n - 1] <= ORDER_FLOOR {
        f64::INFINITY
    } else {
        (errors[n - 2] / errors[n - 1]).log2()
    }
}

type Estimator = fn(&LoopChart, [f64; 3], [f64; 3], f64) -> Result<[f64; 3], LoopError>;

/// Halving study for `ei · ej`, ending at `eps_final`.
pub fn tangent_convergence(
    chart: &LoopChart,
    i: usize,
    j: usize,
    eps_final: f64,
    halvings: usize,
) -> Result<TangentCheck, LoopError> {
    let exact = exact_bilinear(chart, i, j);
    let (xi, eta) = (unit(i), unit(j));
    let eps: Vec<f64> = (0..=halvings)
        .rev()
        .map(|k| eps_final * (1u64 << k) as f64)
        .collect();
    let study = |f: Estimator| {
        eps.iter()
            .map(|&e| f(chart, xi, eta, e).map(|v| err(&v, &exact)))
            .collect::<Result<Vec<_>, _>>()
    };
    let raw_errors = study(tangent_bilinear_raw)?;
    let errors = study(tangent_bilinear)?;
    Ok(TangentCheck {
        chart: chart.name(),
        pair: (i, j),
        exact,
        observed_order: last_order(&errors),
        raw_order: last_order(&raw_errors),
        final_error: *errors.last().expect("at least one step"),
        eps,
        raw_errors,
        errors,
    })
}

fn unit(i: usize) -> [f64; 3] {
    let mut e = [0.0; 3];
    e[i] = 1.0;
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::Sign;

    #[test]
    fn e2_e3_in_case1_is_minus_e3() {
        let chart = LoopChart::case1(Sign::Minus);
        assert_eq!(exact_bilinear(&chart, 1, 2), [0.0, 0.0, -1.0]);
        let est = tangent_bilinear(&chart, [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], 1e-3).unwrap();
        assert!(err(&est, &[0.0, 0.0, -1.0]) < 1e-3);
    }

    #[test]
    fn y2_gives_minus_two_e2() {
        let chart = LoopChart::case2(Sign::Minus, 2.0);
        let est = tangent_bilinear(&chart, [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], 1e-3).unwrap();
        assert!(err(&est, &[0.0, -2.0, 0.0]) < 1e-3);
    }

    #[test]
    fn equal_arguments_vanish() {
        let chart = LoopChart::case2(Sign::Plus, 1.0);
        let est = tangent_bilinear_raw(&chart, [0.3, 0.5, -0.2], [0.3, 0.5, -0.2], 1e-2).unwrap();
        assert_eq!(est, [0.0; 3]);
    }
}
