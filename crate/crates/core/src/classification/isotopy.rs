use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::iso::{action_on_params_f64, canonical_form_iso, AutoParamsF64, ParamsF64};
use super::ClassificationError;
use crate::enveloping::{g4, Sign, SubalgebraParams};
use crate::linalg::rational::{int, one, to_f64};
use crate::linalg::{mat_exp, Matrix, MAT_EXP_TOL};

/// `ξ = u e1 + v e2 + p e3 ∈ B`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct IsotopyElement {
    pub u: f64,
    pub v: f64,
    pub p: f64,
}

impl IsotopyElement {
    pub fn new(u: f64, v: f64, p: f64) -> Self {
        IsotopyElement { u, v, p }
    }

    fn as_g_vector(&self) -> [f64; 4] {
        [self.u, self.v, self.p, 0.0]
    }

    pub fn neg(&self) -> Self {
        IsotopyElement {
            u: -self.u,
            v: -self.v,
            p: -self.p,
        }
    }
}

/// `ad(ξ)` in `g4(sign)`, basis `e1..e4`; column `j` is `[ξ, e_j]`.
pub fn ad_matrix(xi: &IsotopyElement, sign: Sign) -> Matrix<f64> {
    let g = g4(sign);
    let w = xi.as_g_vector();
    let mut m = Matrix::zeros(4, 4);
    for (&[i, j, k], c) in g.bracket.iter() {
        m[(k, j)] += w[i] * to_f64(c);
    }
    m
}

/// `Ad(exp ξ) = exp(ad ξ)`.
pub fn adjoint(xi: &IsotopyElement, sign: Sign) -> Matrix<f64> {
    mat_exp(&ad_matrix(xi, sign), MAT_EXP_TOL).expect("ad of a finite element is finite")
}

/// Direction parameters of `Ad(exp ξ) h_{x,y,z}`, rescaled so the `e4`
/// coefficient is 1.
pub fn isotopy_transform(
    xi: &IsotopyElement,
    s: &ParamsF64,
) -> Result<ParamsF64, ClassificationError> {
    let ad = adjoint(xi, s.sign);
    let w = ad.mul_vec(&[s.x, s.y, s.z, 1.0])?;
    let size = w.iter().fold(0f64, |m, c| m.max(c.abs()));
    if w[3].abs() <= 1e-8 * size {
        return Err(ClassificationError::OffChart);
    }
    Ok(ParamsF64 {
        sign: s.sign,
        x: w[0] / w[3],
        y: w[1] / w[3],
        z: w[2] / w[3],
    })
}

/// The `p ≠ 0` for which the `e1` coefficient of `Ad(exp(v e2 + p e3))(e4 + y e2)`
/// vanishes in the minus type, i.e. `y(cosh p − 1) = sinh p`, so
/// `y = coth(p/2)`. Real solutions exist only for `|y| > 1`.
pub fn p_clearing_x(y: f64) -> Option<f64> {
    (y.abs() > 1.0).then(|| 2.0 * (1.0 / y).atanh())
}

/// Isotopy classes under `F ∘ Ad(exp B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsotopyClass {
    /// `z ≠ 0`: `e2·e3 = −e3`.
    E3,
    /// `z = 0, |y| = 1` (minus type only): `e2·e3 = −e2`.
    UnitY,
    /// `z = 0, |y| > 1` (minus type only): `e2·e3 = −2 e2`.
    BeyondUnit,
    Trivial,
}

impl IsotopyClass {
    pub fn representative(self, sign: Sign) -> SubalgebraParams {
        let (x, y, z) = match self {
            IsotopyClass::E3 => (0, 0, 1),
            IsotopyClass::UnitY => (0, 1, 0),
            IsotopyClass::BeyondUnit => (0, 2, 0),
            IsotopyClass::Trivial => (0, 0, 0),
        };
        SubalgebraParams::from_ints(sign, x, y, z)
    }

    pub fn name(self) -> &'static str {
        match self {
            IsotopyClass::E3 => "-e3",
            IsotopyClass::UnitY => "-e2",
            IsotopyClass::BeyondUnit => "-2e2",
            IsotopyClass::Trivial => "trivial",
        }
    }

    /// Classes that occur for the given sign.
    pub fn all(sign: Sign) -> &'static [IsotopyClass] {
        match sign {
            Sign::Minus => &[
                IsotopyClass::E3,
                IsotopyClass::UnitY,
                IsotopyClass::BeyondUnit,
                IsotopyClass::Trivial,
            ],
            Sign::Plus => &[IsotopyClass::E3, IsotopyClass::Trivial],
        }
    }
}

impl fmt::Display for IsotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical isotopy class plus an explicit reduction: first `Ad(exp ξ)`,
/// then the automorphism `auto`, landing on the representative.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsotopyReduction {
    pub sign: Sign,
    pub class: IsotopyClass,
    pub xi: IsotopyElement,
    #[serde(skip)]
    pub auto: AutoParamsF64,
    /// Max-abs distance between the reduced parameters and the representative.
    pub residual: f64,
}

/// Exact class decision from the invariants `z ≠ 0` and, for the minus
/// type, the sign of `y² − 1`.
pub fn isotopy_class(s: &SubalgebraParams) -> IsotopyClass {
    if !s.z.is_zero() {
        return IsotopyClass::E3;
    }
    match s.sign {
        Sign::Plus => IsotopyClass::Trivial,
        Sign::Minus => {
            let q = &s.y * &s.y - one();
            if q.is_negative() {
                IsotopyClass::Trivial
            } else if q.is_zero() {
                IsotopyClass::UnitY
            } else {
                IsotopyClass::BeyondUnit
            }
        }
    }
}

/// Solves for `v` making the `e1` coordinate of the transformed line vanish;
/// that coordinate is affine in `v` when `z = 0`.
fn clear_x(p: f64, s: &ParamsF64) -> Result<f64, ClassificationError> {
    let at = |v: f64| isotopy_transform(&IsotopyElement::new(0.0, v, p), s).map(|t| t.x);
    let x0 = at(0.0)?;
    let slope = at(1.0)? - x0;
    if slope.abs() < 1e-12 {
        return Err(ClassificationError::NoReduction);
    }
    Ok(-x0 / slope)
}

fn y_auto(t: &ParamsF64) -> AutoParamsF64 {
    // z = 0, y ≠ 0: eps = sign(y), f clears x.
    let sigma = t.sign.sigma() as f64;
    AutoParamsF64 {
        b: 1.0,
        f: -sigma * t.x / t.y,
        d: 0.0,
        eps: if t.y > 0.0 { 1 } else { -1 },
    }
}

pub fn canonical_form_isotopy(
    s: &SubalgebraParams,
) -> Result<IsotopyReduction, ClassificationError> {
    let class = isotopy_class(s);
    let sf = ParamsF64::from(s);
    let (xi, auto) = match class {
        IsotopyClass::E3 => (IsotopyElement::default(), canonical_form_iso(s).1.to_f64()),
        IsotopyClass::UnitY => (IsotopyElement::default(), canonical_form_iso(s).1.to_f64()),
        IsotopyClass::Trivial => {
            let p = match s.sign {
                Sign::Minus => sf.y.atanh(),
                Sign::Plus => -sf.y.atan(),
            };
            let v = clear_x(p, &sf)?;
            (
                IsotopyElement::new(0.0, v, p),
                AutoParamsF64 {
                    b: 1.0,
                    f: 0.0,
                    d: 0.0,
                    eps: 1,
                },
            )
        }
        IsotopyClass::BeyondUnit => {
            // Boost y onto ±2: tanh p = (y − t)/(1 − y t).
            let target = 2.0 * sf.y.signum();
            let p = ((sf.y - target) / (1.0 - sf.y * target)).atanh();
            let xi = IsotopyElement::new(0.0, 0.0, p);
            let t = isotopy_transform(&xi, &sf)?;
            (xi, y_auto(&t))
        }
    };
    let moved = isotopy_transform(&xi, &sf)?;
    let reduced = action_on_params_f64(&auto, &moved);
    let rep = ParamsF64::from(&class.representative(s.sign));
    let residual = [reduced.x - rep.x, reduced.y - rep.y, reduced.z - rep.z]
        .iter()
        .fold(0f64, |m, d| m.max(d.abs()));
    Ok(IsotopyReduction {
        sign: s.sign,
        class,
        xi,
        auto,
        residual,
    })
}

/// Representatives as listed in the printed isotopy propositions.
pub fn printed_isotopy_representatives(sign: Sign) -> Vec<SubalgebraParams> {
    match sign {
        Sign::Minus => vec![
            SubalgebraParams::from_ints(sign, 0, 0, 1),
            SubalgebraParams::from_ints(sign, 0, 1, 0),
            SubalgebraParams::from_ints(sign, 1, 1, 0),
            SubalgebraParams::from_ints(sign, 0, 0, 0),
        ],
        // e2·e3 = +e2 means y = −1.
        Sign::Plus => vec![
            SubalgebraParams::from_ints(sign, 0, 0, 1),
            SubalgebraParams::new(sign, int(0), int(-1), int(0)),
            SubalgebraParams::from_ints(sign, 0, 0, 0),
        ],
    }
}

/// `ad(ξ)` exactly as displayed in print.
pub fn printed_ad(xi: &IsotopyElement) -> Matrix<f64> {
    let (v, p) = (xi.v, xi.p);
    Matrix::from_rows(vec![
        vec![0.0, 0.0, 0.0, -v],
        vec![0.0, 0.0, 0.0, -p],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, -p, v, 0.0],
    ])
    .expect("4x4")
}

/// `Ad(ξ)` exactly as displayed in print; needs `p ≠ 0`.
pub fn printed_adjoint(xi: &IsotopyElement) -> Matrix<f64> {
    let (v, p) = (xi.v, xi.p);
    let (ch, sh) = (p.cosh(), p.sinh());
    Matrix::from_rows(vec![
        vec![
            1.0,
            v * (ch - 1.0) / p,
            -(ch - 1.0) * v * v / (p * p),
            -v * sh / p,
        ],
        vec![0.0, ch, v * (ch - 1.0) / p, -sh],
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, -sh, v * sh / p, ch],
    ])
    .expect("4x4")
}

/// Printed closed form of the transformed line for `z = 0`, `x = 0`.
pub fn printed_isotopy_transform(xi: &IsotopyElement, y: f64) -> (f64, f64) {
    let (v, p) = (xi.v, xi.p);
    let (ch, sh) = (p.cosh(), p.sinh());
    let den = ch - y * sh;
    ((v / p) * (y * (ch - 1.0) - sh) / den, (y * ch - sh) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    #[test]
    fn ad_of_e2() {
        let ad = ad_matrix(&IsotopyElement::new(0.0, 1.0, 0.0), Sign::Minus);
        let mut expect = Matrix::zeros(4, 4);
        expect[(3, 2)] = 1.0;
        expect[(0, 3)] = -1.0;
        assert_eq!(ad, expect);
        assert_eq!(
            ad_matrix(&IsotopyElement::default(), Sign::Plus),
            Matrix::zeros(4, 4)
        );
    }

    #[test]
    fn adjoint_inverse() {
        let xi = IsotopyElement::new(0.4, -1.3, 0.9);
        for sign in Sign::BOTH {
            let prod = adjoint(&xi, sign)
                .matmul(&adjoint(&xi.neg(), sign))
                .unwrap();
            assert!(prod.max_abs_diff(&Matrix::identity(4)) < 1e-10);
        }
        assert_eq!(
            adjoint(&IsotopyElement::default(), Sign::Minus),
            Matrix::identity(4)
        );
    }

    #[test]
    fn transform_with_p_zero_shifts_x() {
        let s = ParamsF64::new(Sign::Minus, 0.0, 0.7, 0.0);
        let t = isotopy_transform(&IsotopyElement::new(0.0, 1.5, 0.0), &s).unwrap();
        assert!((t.x + 1.5).abs() < 1e-12 && (t.y - 0.7).abs() < 1e-12);
    }

    #[test]
    fn off_chart_is_reported() {
        // tanh p = 1/y sends the e4 coefficient to zero.
        let s = ParamsF64::new(Sign::Minus, 0.0, 2.0, 0.0);
        let xi = IsotopyElement::new(0.0, 0.0, 0.5f64.atanh());
        assert_eq!(
            isotopy_transform(&xi, &s),
            Err(ClassificationError::OffChart)
        );
    }

    #[test]
    fn clearing_x_needs_large_y() {
        assert_eq!(p_clearing_x(0.5), None);
        assert_eq!(p_clearing_x(1.0), None);
        for y in [2.0, 5.0] {
            let p = p_clearing_x(y).unwrap();
            let t = isotopy_transform(
                &IsotopyElement::new(0.0, 1.0, p),
                &ParamsF64::new(Sign::Minus, 0.0, y, 0.0),
            )
            .unwrap();
            assert!(t.x.abs() < 1e-10);
            assert!((t.y + y).abs() < 1e-10);
        }
    }

    #[test]
    fn reductions_land_on_representatives() {
        let cases = [
            (
                Sign::Minus,
                rat(1, 3),
                rat(-1, 2),
                int(0),
                IsotopyClass::Trivial,
            ),
            (Sign::Minus, int(1), int(1), int(0), IsotopyClass::UnitY),
            (
                Sign::Minus,
                int(-2),
                int(-5),
                int(0),
                IsotopyClass::BeyondUnit,
            ),
            (
                Sign::Minus,
                int(0),
                rat(3, 2),
                int(0),
                IsotopyClass::BeyondUnit,
            ),
            (Sign::Minus, int(0), int(0), int(1), IsotopyClass::E3),
            (Sign::Plus, int(3), int(-4), int(0), IsotopyClass::Trivial),
            (Sign::Plus, int(0), int(-1), int(0), IsotopyClass::Trivial),
            (Sign::Plus, int(2), int(0), rat(-1, 3), IsotopyClass::E3),
        ];
        for (sign, x, y, z, class) in cases {
            let s = SubalgebraParams::new(sign, x, y, z);
            let r = canonical_form_isotopy(&s).unwrap();
            assert_eq!(r.class, class, "{s}");
            assert!(r.residual < 1e-10, "{s}: {}", r.residual);
        }
    }

    #[test]
    fn printed_transform_matches_for_minus() {
        let xi = IsotopyElement::new(0.0, 0.8, -0.6);
        let y = 0.3;
        let (x1, y1) = printed_isotopy_transform(&xi, y);
        let t = isotopy_transform(&xi, &ParamsF64::new(Sign::Minus, 0.0, y, 0.0)).unwrap();
        assert!((t.x - x1).abs() < 1e-12 && (t.y - y1).abs() < 1e-12);
    }
}
