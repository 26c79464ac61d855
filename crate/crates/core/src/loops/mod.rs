//! Floating-point engine for the group `G`, the section `B = exp 𝔅`, the
//! projection `G → B` along `H = exp 𝔥`, and the induced Bol loop.
//!
//! Charts keep the naming of the printed web cases: the `minus` charts use
//! the circular group, the `plus` charts the hyperbolic one. The circular
//! group's Lie algebra has `[e3, e4] = +e2`, i.e. it envelopes the plus
//! algebra; [`LoopChart::algebra_sign`] gives the algebra actually realized.

mod group;
pub mod printed;
mod section;
mod tangent;
mod web;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::enveloping::{Sign, SubalgebraParams};
use crate::linalg::rational::{from_f64, int};
use crate::linalg::LinalgError;

pub use group::{
    commutator_estimate, exp_b, exp_g, exp_inv, group_compose, group_inverse, GroupKind,
    GroupPoint, LoopPoint, SECTION_TOL, SERIES_CUTOFF,
};
pub use section::{
    bol_batch, check_left_bol, loop_compose, loop_compose_fast, negative_control, project_fast,
    project_to_section, project_to_section_right, random_points, subgroup_h, BolStats, Projection,
};
pub use tangent::{
    exact_bilinear, tangent_bilinear, tangent_bilinear_raw, tangent_convergence, TangentCheck,
};
pub use web::{sample_web, write_web_csv, WebGrid, WebRow, WEB_CSV_HEADER};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LoopError {
    #[error("point lies outside the chart")]
    OutsideChart,
    #[error("point is {0:e} away from the section")]
    OffSection(f64),
    #[error("non-finite value encountered")]
    NonFinite,
    #[error("projection did not converge: {0}")]
    NoConvergence(LinalgError),
    #[error("invalid chart: {0}")]
    BadChart(String),
}

/// Which subalgebra `𝔥` defines the coset space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum HCase {
    /// `𝔥 = <e4 + e3>`.
    Case1,
    /// `𝔥 = <e4 + y e2>`, `y ≥ 0`.
    Case2 { y: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoopChart {
    pub sign: Sign,
    pub case: HCase,
    /// Accepted residual of the projection equations, relative to `1 + ‖g‖∞`.
    /// Newton runs to the round-off floor regardless.
    pub tol: f64,
    /// `‖(t, u, v)‖∞` bound of the chart.
    pub radius: f64,
}

pub const DEFAULT_TOL: f64 = 1e-13;
pub const DEFAULT_RADIUS: f64 = 0.5;

impl LoopChart {
    pub fn new(sign: Sign, case: HCase) -> Result<Self, LoopError> {
        if let HCase::Case2 { y } = case {
            if !(y.is_finite() && y >= 0.0) {
                return Err(LoopError::BadChart(format!(
                    "y must be finite and non-negative, got {y}"
                )));
            }
        }
        Ok(LoopChart {
            sign,
            case,
            tol: DEFAULT_TOL,
            radius: DEFAULT_RADIUS,
        })
    }

    pub fn case1(sign: Sign) -> Self {
        LoopChart::new(sign, HCase::Case1).expect("case 1 is always valid")
    }

    pub fn case2(sign: Sign, y: f64) -> Self {
        LoopChart::new(sign, HCase::Case2 { y }).expect("caller passes y >= 0")
    }

    /// The eight charts of the acceptance runs.
    pub fn standard() -> Vec<LoopChart> {
        let mut out = Vec::new();
        for sign in Sign::BOTH {
            out.push(LoopChart::case1(sign));
            for y in [0.0, 1.0, 2.0] {
                out.push(LoopChart::case2(sign, y));
            }
        }
        out
    }

    pub fn kind(&self) -> GroupKind {
        match self.sign {
            Sign::Minus => GroupKind::Circular,
            Sign::Plus => GroupKind::Hyperbolic,
        }
    }

    /// Sign of the Type V algebra enveloped by this chart's group.
    pub fn algebra_sign(&self) -> Sign {
        match self.kind() {
            GroupKind::Circular => Sign::Plus,
            GroupKind::Hyperbolic => Sign::Minus,
        }
    }

    /// Generator of `𝔥` in the coordinates `(e1, e2, e3, e4)`.
    pub fn h_direction(&self) -> [f64; 4] {
        match self.case {
            HCase::Case1 => [0.0, 0.0, 1.0, 1.0],
            HCase::Case2 { y } => [0.0, y, 0.0, 1.0],
        }
    }

    /// Exact parameters of the induced algebra; `y` is converted exactly
    /// from its binary value.
    pub fn subalgebra_params(&self) -> SubalgebraParams {
        let (y, z) = match self.case {
            HCase::Case1 => (int(0), int(1)),
            HCase::Case2 { y } => (from_f64(y).expect("finite y"), int(0)),
        };
        SubalgebraParams::new(self.algebra_sign(), int(0), y, z)
    }

    pub fn name(&self) -> String {
        match self.case {
            HCase::Case1 => format!("{}1", self.sign),
            HCase::Case2 { y } => format!("{}2(y={y})", self.sign),
        }
    }

    /// Parse `minus1`, `minus2`, `plus1`, `plus2`; case 2 needs `y`.
    pub fn parse(name: &str, y: Option<f64>) -> Result<Self, LoopError> {
        let (sign, case) = name
            .strip_suffix('1')
            .map(|s| (s, 1))
            .or_else(|| name.strip_suffix('2').map(|s| (s, 2)))
            .ok_or_else(|| LoopError::BadChart(format!("unknown chart {name:?}")))?;
        let sign = Sign::from_str(sign).map_err(LoopError::BadChart)?;
        match (case, y) {
            (1, None) => Ok(LoopChart::case1(sign)),
            (1, Some(_)) => Err(LoopError::BadChart(format!("chart {name} takes no y"))),
            (_, Some(y)) => LoopChart::new(sign, HCase::Case2 { y }),
            (_, None) => Err(LoopError::BadChart(format!("chart {name} needs y"))),
        }
    }

    pub fn contains(&self, p: &LoopPoint) -> bool {
        let trig_ok =
            self.kind() == GroupKind::Hyperbolic || p.v.abs() < std::f64::consts::FRAC_PI_2;
        p.norm_inf() <= self.radius && trig_ok
    }
}

impl fmt::Display for LoopChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(
            LoopChart::parse("minus1", None).unwrap(),
            LoopChart::case1(Sign::Minus)
        );
        assert_eq!(
            LoopChart::parse("plus2", Some(2.0)).unwrap(),
            LoopChart::case2(Sign::Plus, 2.0)
        );
        assert!(LoopChart::parse("plus2", None).is_err());
        assert!(LoopChart::parse("minus2", Some(-1.0)).is_err());
        assert!(LoopChart::parse("minus3", None).is_err());
    }

    #[test]
    fn eight_standard_charts() {
        assert_eq!(LoopChart::standard().len(), 8);
    }
}
