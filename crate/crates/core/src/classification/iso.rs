use std::fmt;

use num_traits::{Signed, Zero};

use super::ClassificationError;
use crate::enveloping::{Sign, SubalgebraParams};
use crate::linalg::rational::{format_rational, int, one, to_f64, zero};
use crate::linalg::{Matrix, Rational};

/// Element of the automorphism group of the Type V triple system that fixes
/// the flag `<e1> ⊂ <e1, e2> ⊂ B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutoParams {
    pub b: Rational,
    pub f: Rational,
    pub d: Rational,
    /// `±1`; the image of `e3` has `e3`-coefficient `eps`.
    pub eps: i8,
}

impl AutoParams {
    pub fn new(
        b: Rational,
        f: Rational,
        d: Rational,
        eps: i8,
    ) -> Result<Self, ClassificationError> {
        if b.is_zero() {
            return Err(ClassificationError::ZeroScale);
        }
        if eps != 1 && eps != -1 {
            return Err(ClassificationError::BadEps(eps));
        }
        Ok(AutoParams { b, f, d, eps })
    }

    pub fn identity() -> Self {
        AutoParams {
            b: one(),
            f: zero(),
            d: zero(),
            eps: 1,
        }
    }

    fn eps_q(&self) -> Rational {
        int(self.eps as i64)
    }

    pub fn to_f64(&self) -> AutoParamsF64 {
        AutoParamsF64 {
            b: to_f64(&self.b),
            f: to_f64(&self.f),
            d: to_f64(&self.d),
            eps: self.eps,
        }
    }
}

impl fmt::Display for AutoParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "b={} f={} d={} eps={:+}",
            format_rational(&self.b),
            format_rational(&self.f),
            format_rational(&self.d),
            self.eps
        )
    }
}

/// The automorphism on `B = <e1, e2, e3>`:
///
/// ```text
/// [ eps b²   σ eps f b   d ]
/// [ 0        b           f ]
/// [ 0        0         eps ]
/// ```
///
/// with `σ = sign.sigma()`.
pub fn auto_matrix(p: &AutoParams, sign: Sign) -> Result<Matrix<Rational>, ClassificationError> {
    if p.b.is_zero() {
        return Err(ClassificationError::ZeroScale);
    }
    let e = p.eps_q();
    let s = int(sign.sigma());
    let z = zero;
    Ok(Matrix::from_rows(vec![
        vec![&e * &p.b * &p.b, &s * &e * &p.f * &p.b, p.d.clone()],
        vec![z(), p.b.clone(), p.f.clone()],
        vec![z(), z(), e],
    ])?)
}

/// Extension to `g4(sign)`: `e4 = [e2, e3] ↦ eps b e4`.
pub fn extend_to_g(p: &AutoParams, sign: Sign) -> Result<Matrix<Rational>, ClassificationError> {
    let a = auto_matrix(p, sign)?;
    let mut rows: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(zero());
            r
        })
        .collect();
    rows.push(vec![zero(), zero(), zero(), p.eps_q() * &p.b]);
    Ok(Matrix::from_rows(rows)?)
}

/// Parameters of `A(h_{x,y,z})`.
pub fn action_on_params(
    p: &AutoParams,
    s: &SubalgebraParams,
) -> Result<SubalgebraParams, ClassificationError> {
    if p.b.is_zero() {
        return Err(ClassificationError::ZeroScale);
    }
    let e = p.eps_q();
    let sigma = int(s.sign.sigma());
    let b = &p.b;
    let x = (&s.x * b * b + &sigma * &s.y * &p.f * b + &e * &s.z * &p.d) / b;
    let y = &e * (&s.y * b + &s.z * &p.f) / b;
    let z = &s.z / b;
    Ok(SubalgebraParams::new(s.sign, x, y, z))
}

/// Isomorphism classes of the Type V algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoClass {
    /// `z ≠ 0`, representative `(0, 0, 1)`: `e2·e3 = −e3`.
    ZNormalized,
    /// `z = 0, y ≠ 0`, representative `(0, y, 0)` with `y > 0`.
    YFamily(Rational),
    /// `z = y = 0, x ≠ 0`, representative `(1, 0, 0)`.
    XCase,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoLabel {
    pub sign: Sign,
    pub class: IsoClass,
}

impl IsoLabel {
    pub fn representative(&self) -> SubalgebraParams {
        let (x, y, z) = match &self.class {
            IsoClass::ZNormalized => (zero(), zero(), one()),
            IsoClass::YFamily(y) => (zero(), y.clone(), zero()),
            IsoClass::XCase => (one(), zero(), zero()),
            IsoClass::Trivial => (zero(), zero(), zero()),
        };
        SubalgebraParams::new(self.sign, x, y, z)
    }

    pub fn kind(&self) -> &'static str {
        match self.class {
            IsoClass::ZNormalized => "z_normalized",
            IsoClass::YFamily(_) => "y_family",
            IsoClass::XCase => "x_case",
            IsoClass::Trivial => "trivial",
        }
    }
}

impl fmt::Display for IsoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.representative();
        write!(
            f,
            "{} ({},{},{})",
            self.kind(),
            format_rational(&r.x),
            format_rational(&r.y),
            format_rational(&r.z)
        )
    }
}

/// Representative of the isomorphism class of `s`, with a group element
/// mapping `s` onto it.
pub fn canonical_form_iso(s: &SubalgebraParams) -> (IsoLabel, AutoParams) {
    let sigma = int(s.sign.sigma());
    let (class, witness) = if !s.z.is_zero() {
        // b = z, f = −y gives y′ = 0; d then clears x.
        let b = s.z.clone();
        let f = -s.y.clone();
        let d = -(&s.x * &b * &b + &sigma * &s.y * &f * &b) / &s.z;
        (IsoClass::ZNormalized, AutoParams { b, f, d, eps: 1 })
    } else if !s.y.is_zero() {
        let eps = if s.y.is_positive() { 1 } else { -1 };
        let f = -(&sigma * &s.x) / &s.y;
        (
            IsoClass::YFamily(s.y.abs()),
            AutoParams {
                b: one(),
                f,
                d: zero(),
                eps,
            },
        )
    } else if !s.x.is_zero() {
        (
            IsoClass::XCase,
            AutoParams {
                b: one() / &s.x,
                f: zero(),
                d: zero(),
                eps: 1,
            },
        )
    } else {
        (IsoClass::Trivial, AutoParams::identity())
    };
    (
        IsoLabel {
            sign: s.sign,
            class,
        },
        witness,
    )
}

/// Solves `action_on_params(p, from) = to` over the whole group, exactly.
/// `None` means the two algebras are not isomorphic by any element.
pub fn find_iso_witness(from: &SubalgebraParams, to: &SubalgebraParams) -> Option<AutoParams> {
    if from.sign != to.sign {
        return None;
    }
    let sigma = int(from.sign.sigma());
    let (x, y, z) = (&from.x, &from.y, &from.z);
    let (x2, y2, z2) = (&to.x, &to.y, &to.z);
    if z.is_zero() != z2.is_zero() {
        return None;
    }
    if !z.is_zero() {
        // z′ = z/b fixes b; y′ and x′ are affine in f and d respectively.
        let b = z / z2;
        let eps = 1i8;
        let e = int(eps as i64);
        let f = (&e * y2 * &b - y * &b) / z;
        let d = (x2 * &b - x * &b * &b - &sigma * y * &f * &b) / (&e * z);
        return Some(AutoParams { b, f, d, eps });
    }
    if !y.is_zero() {
        // y′ = eps y.
        let eps = if y2 == y {
            1
        } else if *y2 == -y.clone() {
            -1
        } else {
            return None;
        };
        let f = (x2 - x) / (&sigma * y);
        return Some(AutoParams {
            b: one(),
            f,
            d: zero(),
            eps,
        });
    }
    if !y2.is_zero() {
        return None;
    }
    match (x.is_zero(), x2.is_zero()) {
        (true, true) => Some(AutoParams::identity()),
        (false, false) => Some(AutoParams {
            b: x2 / x,
            f: zero(),
            d: zero(),
            eps: 1,
        }),
        _ => None,
    }
}

/// Float counterpart of [`SubalgebraParams`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamsF64 {
    pub sign: Sign,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ParamsF64 {
    pub fn new(sign: Sign, x: f64, y: f64, z: f64) -> Self {
        ParamsF64 { sign, x, y, z }
    }

    pub fn scale(&self) -> f64 {
        1f64.max(self.x.abs()).max(self.y.abs()).max(self.z.abs())
    }
}

impl From<&SubalgebraParams> for ParamsF64 {
    fn from(s: &SubalgebraParams) -> Self {
        ParamsF64 {
            sign: s.sign,
            x: to_f64(&s.x),
            y: to_f64(&s.y),
            z: to_f64(&s.z),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AutoParamsF64 {
    pub b: f64,
    pub f: f64,
    pub d: f64,
    pub eps: i8,
}

pub fn action_on_params_f64(p: &AutoParamsF64, s: &ParamsF64) -> ParamsF64 {
    let e = p.eps as f64;
    let sigma = s.sign.sigma() as f64;
    ParamsF64 {
        sign: s.sign,
        x: (s.x * p.b * p.b + sigma * s.y * p.f * p.b + e * s.z * p.d) / p.b,
        y: e * (s.y * p.b + s.z * p.f) / p.b,
        z: s.z / p.b,
    }
}

/// Float isomorphism class, deciding zero tests at `tol` relative to the
/// largest coordinate. The y-family parameter is returned as `|y|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsoClassF64 {
    ZNormalized,
    YFamily(f64),
    XCase,
    Trivial,
}

pub fn canonical_form_iso_f64(s: &ParamsF64, tol: f64) -> IsoClassF64 {
    let t = tol * s.scale();
    if s.z.abs() > t {
        IsoClassF64::ZNormalized
    } else if s.y.abs() > t {
        IsoClassF64::YFamily(s.y.abs())
    } else if s.x.abs() > t {
        IsoClassF64::XCase
    } else {
        IsoClassF64::Trivial
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_lie_morphism, is_morphism};
    use crate::enveloping::{family_bol, g4};
    use crate::linalg::rational::rat;

    fn params(x: i64, y: i64, z: i64) -> SubalgebraParams {
        SubalgebraParams::from_ints(Sign::Minus, x, y, z)
    }

    #[test]
    fn matrix_examples() {
        let id = auto_matrix(&AutoParams::identity(), Sign::Minus).unwrap();
        assert_eq!(id, Matrix::identity(3));
        let p = AutoParams::new(int(2), zero(), zero(), 1).unwrap();
        assert_eq!(
            auto_matrix(&p, Sign::Minus).unwrap(),
            Matrix::diagonal(&[int(4), int(2), int(1)])
        );
        assert!(AutoParams::new(zero(), one(), one(), 1).is_err());
        let p = AutoParams::new(int(3), zero(), zero(), 1).unwrap();
        assert_eq!(extend_to_g(&p, Sign::Plus).unwrap()[(3, 3)], int(3));
    }

    #[test]
    fn worked_reduction() {
        let s = params(5, -2, 3);
        let p = AutoParams::new(int(3), int(2), int(-11), 1).unwrap();
        assert_eq!(action_on_params(&p, &s).unwrap(), params(0, 0, 1));
        let (label, witness) = canonical_form_iso(&s);
        assert_eq!(label.class, IsoClass::ZNormalized);
        assert_eq!(witness, p);
    }

    #[test]
    fn negative_y_flips() {
        let (label, w) = canonical_form_iso(&params(0, -4, 0));
        assert_eq!(label.representative(), params(0, 4, 0));
        assert_eq!(w.eps, -1);
    }

    #[test]
    fn x_case_and_trivial() {
        let (label, w) = canonical_form_iso(&SubalgebraParams::new(
            Sign::Plus,
            rat(-3, 5),
            zero(),
            zero(),
        ));
        assert_eq!(label.class, IsoClass::XCase);
        assert_eq!(w.b, rat(-5, 3));
        assert_eq!(
            canonical_form_iso(&params(0, 0, 0)).0.class,
            IsoClass::Trivial
        );
    }

    #[test]
    fn witnesses_are_algebra_isomorphisms() {
        for sign in Sign::BOTH {
            for (x, y, z) in [(5, -2, 3), (1, 1, 0), (0, -3, 0), (-2, 0, 0), (4, 0, -7)] {
                let s = SubalgebraParams::from_ints(sign, x, y, z);
                let (label, w) = canonical_form_iso(&s);
                let a = auto_matrix(&w, sign).unwrap();
                assert!(
                    is_morphism(&a, &family_bol(&s), &family_bol(&label.representative())),
                    "{s}"
                );
                assert!(is_lie_morphism(
                    &extend_to_g(&w, sign).unwrap(),
                    &g4(sign),
                    &g4(sign)
                ));
            }
        }
    }

    #[test]
    fn witness_search_is_exhaustive_on_reps() {
        let reps = [
            params(0, 0, 1),
            params(0, 1, 0),
            params(0, 3, 0),
            params(1, 0, 0),
            params(0, 0, 0),
        ];
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                assert_eq!(find_iso_witness(a, b).is_some(), i == j, "{a} vs {b}");
            }
        }
        let w = find_iso_witness(&params(2, -1, 0), &params(-7, 1, 0)).unwrap();
        assert_eq!(
            action_on_params(&w, &params(2, -1, 0)).unwrap(),
            params(-7, 1, 0)
        );
    }

    #[test]
    fn float_classes() {
        let s = ParamsF64::new(Sign::Minus, 0.3, 1e-12, 0.0);
        assert_eq!(canonical_form_iso_f64(&s, 1e-8), IsoClassF64::XCase);
        let p = AutoParamsF64 {
            b: 2.0,
            f: 0.5,
            d: -1.0,
            eps: -1,
        };
        let s = ParamsF64::new(Sign::Plus, 1.0, 2.0, 3.0);
        let t = action_on_params_f64(&p, &s);
        assert!((t.z - 1.5).abs() < 1e-15);
    }
}
