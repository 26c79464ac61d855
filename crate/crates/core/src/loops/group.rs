//! The four-dimensional group `G`, its exponential map and the section `B`.

use serde::Serialize;

use super::LoopError;

/// Point of `G` in the coordinates `(x1, x2, x3, x4)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct GroupPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
}

impl GroupPoint {
    pub const IDENTITY: GroupPoint = GroupPoint {
        x1: 0.0,
        x2: 0.0,
        x3: 0.0,
        x4: 0.0,
    };

    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        GroupPoint { x1, x2, x3, x4 }
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        GroupPoint::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    pub fn dist(&self, other: &GroupPoint) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Point of the section `B` in the coordinates `(t, u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct LoopPoint {
    pub t: f64,
    pub u: f64,
    pub v: f64,
}

impl LoopPoint {
    pub const ZERO: LoopPoint = LoopPoint {
        t: 0.0,
        u: 0.0,
        v: 0.0,
    };

    pub fn new(t: f64, u: f64, v: f64) -> Self {
        LoopPoint { t, u, v }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        LoopPoint::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.t, self.u, self.v]
    }

    pub fn scale(self, s: f64) -> Self {
        LoopPoint::new(self.t * s, self.u * s, self.v * s)
    }

    pub fn norm_inf(&self) -> f64 {
        self.t.abs().max(self.u.abs()).max(self.v.abs())
    }

    pub fn dist(&self, other: &LoopPoint) -> f64 {
        LoopPoint::new(self.t - other.t, self.u - other.u, self.v - other.v).norm_inf()
    }
}

/// Rotation type of the `x3`-action on the `(x2, x4)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// `cos`/`sin`; its Lie algebra has `[e3, e4] = +e2`.
    Circular,
    /// `cosh`/`sinh`; its Lie algebra has `[e3, e4] = −e2`.
    Hyperbolic,
}

/// Below this `|v|` the removable singularities switch to Taylor series.
pub const SERIES_CUTOFF: f64 = 1e-4;

impl GroupKind {
    /// `+1` for circular, `−1` for hyperbolic: `cos′′ = −κ cos`-style sign.
    fn kappa(self) -> f64 {
        match self {
            GroupKind::Circular => 1.0,
            GroupKind::Hyperbolic => -1.0,
        }
    }

    /// `(cos θ, sin θ)` or `(cosh θ, sinh θ)`.
    pub fn cs(self, th: f64) -> (f64, f64) {
        match self {
            GroupKind::Circular => (th.cos(), th.sin()),
            GroupKind::Hyperbolic => (th.cosh(), th.sinh()),
        }
    }

    /// Action of `x3 = θ` on the pair `(y2, y4)`.
    pub fn rotate(self, th: f64, y2: f64, y4: f64) -> (f64, f64) {
        let (c, s) = self.cs(th);
        match self {
            GroupKind::Circular => (c * y2 + s * y4, -s * y2 + c * y4),
            GroupKind::Hyperbolic => (c * y2 - s * y4, -s * y2 + c * y4),
        }
    }

    /// `sin v / v` (resp. `sinh v / v`).
    pub fn sinc(self, v: f64) -> f64 {
        if v.abs() < SERIES_CUTOFF {
            let k = self.kappa();
            let v2 = v * v;
            1.0 - k * v2 / 6.0 + v2 * v2 / 120.0 - k * v2 * v2 * v2 / 5040.0
        } else {
            self.cs(v).1 / v
        }
    }

    /// `(1 − cos v) / v` (resp. `(cosh v − 1) / v`).
    pub fn cosc(self, v: f64) -> f64 {
        if v.abs() < SERIES_CUTOFF {
            let k = self.kappa();
            let v2 = v * v;
            v / 2.0 - k * v * v2 / 24.0 + v * v2 * v2 / 720.0 - k * v * v2 * v2 * v2 / 40320.0
        } else {
            let c = self.cs(v).0;
            match self {
                GroupKind::Circular => (1.0 - c) / v,
                GroupKind::Hyperbolic => (c - 1.0) / v,
            }
        }
    }

    /// `(v − sin v) / (2v²)` (resp. `(sinh v − v) / (2v²)`).
    pub fn central(self, v: f64) -> f64 {
        if v.abs() < SERIES_CUTOFF {
            let k = self.kappa();
            let v2 = v * v;
            (v / 6.0 - k * v * v2 / 120.0 + v * v2 * v2 / 5040.0 - k * v * v2 * v2 * v2 / 362880.0)
                / 2.0
        } else {
            let s = self.cs(v).1;
            match self {
                GroupKind::Circular => (v - s) / (2.0 * v * v),
                GroupKind::Hyperbolic => (s - v) / (2.0 * v * v),
            }
        }
    }
}

/// Symplectic pairing `x4 y2 − y4 x2` on the `(x2, x4)` plane.
fn omega(x2: f64, x4: f64, y2: f64, y4: f64) -> f64 {
    x4 * y2 - y4 * x2
}

/// Group law: the second factor's `(y2, y4)` is first moved by `x3`, and
/// the central term pairs the moved vector.
pub fn group_compose(a: &GroupPoint, b: &GroupPoint, kind: GroupKind) -> GroupPoint {
    let (y2, y4) = kind.rotate(a.x3, b.x2, b.x4);
    GroupPoint {
        x1: a.x1 + b.x1 + 0.5 * omega(a.x2, a.x4, y2, y4),
        x2: a.x2 + y2,
        x3: a.x3 + b.x3,
        x4: a.x4 + y4,
    }
}

pub fn group_inverse(a: &GroupPoint, kind: GroupKind) -> GroupPoint {
    let (y2, y4) = kind.rotate(-a.x3, a.x2, a.x4);
    GroupPoint {
        x1: -a.x1,
        x2: -y2,
        x3: -a.x3,
        x4: -y4,
    }
}

/// `exp(a e1 + b e2 + c e3 + d e4)`.
pub fn exp_g(x: [f64; 4], kind: GroupKind) -> GroupPoint {
    let [a, b, c, d] = x;
    let (s, k, m) = (kind.sinc(c), kind.cosc(c), kind.central(c));
    match kind {
        GroupKind::Circular => GroupPoint {
            x1: a + (b * b + d * d) * m,
            x2: b * s + d * k,
            x3: c,
            x4: d * s - b * k,
        },
        GroupKind::Hyperbolic => GroupPoint {
            x1: a + (b * b - d * d) * m,
            x2: b * s - d * k,
            x3: c,
            x4: d * s - b * k,
        },
    }
}

/// `exp(t e1 + u e2 + v e3)`: the section `B`.
pub fn exp_b(p: &LoopPoint, kind: GroupKind) -> GroupPoint {
    exp_g([p.t, p.u, p.v, 0.0], kind)
}

/// Section points have `x4 = −u·cosc(v)`; relative tolerance for accepting
/// an input as lying on `B`.
pub const SECTION_TOL: f64 = 1e-9;

/// Inverse of [`exp_b`]: `v = x3`, then `u` from `x2`, then `t` from `x1`.
/// Each step is linear in its unknown, so the inversion is exact.
pub fn exp_inv(g: &GroupPoint, kind: GroupKind) -> Result<LoopPoint, LoopError> {
    if !g.is_finite() {
        return Err(LoopError::NonFinite);
    }
    let v = g.x3;
    let s = kind.sinc(v);
    if s.abs() < 1e-12 {
        return Err(LoopError::OutsideChart);
    }
    let u = g.x2 / s;
    let off = (g.x4 + u * kind.cosc(v)).abs();
    if off > SECTION_TOL * (1.0 + g.x2.abs().max(g.x4.abs())) {
        return Err(LoopError::OffSection(off));
    }
    Ok(LoopPoint {
        t: g.x1 - u * u * kind.central(v),
        u,
        v,
    })
}

/// `(ε ei) Δ (ε ej) Δ (ε ei)⁻¹ Δ (ε ej)⁻¹ / ε²`, an estimate of `[ei, ej]`.
pub fn commutator_estimate(i: usize, j: usize, eps: f64, kind: GroupKind) -> [f64; 4] {
    let mut a = [0.0; 4];
    a[i] = eps;
    let mut b = [0.0; 4];
    b[j] = eps;
    let (a, b) = (GroupPoint::from_array(a), GroupPoint::from_array(b));
    let ab = group_compose(&a, &b, kind);
    let c = group_compose(
        &group_compose(&ab, &group_inverse(&a, kind), kind),
        &group_inverse(&b, kind),
        kind,
    );
    c.to_array().map(|x| x / (eps * eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    const KINDS: [GroupKind; 2] = [GroupKind::Circular, GroupKind::Hyperbolic];

    #[test]
    fn worked_products() {
        let k = GroupKind::Circular;
        let p = group_compose(
            &GroupPoint::new(0.0, 0.0, FRAC_PI_2, 0.0),
            &GroupPoint::new(0.0, 1.0, 0.0, 0.0),
            k,
        );
        assert!(p.dist(&GroupPoint::new(0.0, 0.0, FRAC_PI_2, -1.0)) < 1e-15);
        let p = group_compose(
            &GroupPoint::new(0.0, 1.0, 0.0, 0.0),
            &GroupPoint::new(0.0, 0.0, 0.0, 1.0),
            k,
        );
        assert_eq!(p, GroupPoint::new(-0.5, 1.0, 0.0, 1.0));
    }

    #[test]
    fn inverse_of_rotation() {
        for k in KINDS {
            assert_eq!(
                group_inverse(&GroupPoint::new(0.0, 0.0, 0.7, 0.0), k),
                GroupPoint::new(0.0, 0.0, -0.7, 0.0)
            );
            assert_eq!(
                group_inverse(&GroupPoint::IDENTITY, k),
                GroupPoint::IDENTITY
            );
        }
    }

    #[test]
    fn series_join_smoothly() {
        for k in KINDS {
            for f in [GroupKind::sinc, GroupKind::cosc, GroupKind::central] {
                let below = f(k, SERIES_CUTOFF * (1.0 - 1e-9));
                let above = f(k, SERIES_CUTOFF * (1.0 + 1e-9));
                assert!((below - above).abs() < 1e-12, "{k:?}");
            }
        }
    }

    #[test]
    fn exp_b_limits() {
        for k in KINDS {
            assert_eq!(
                exp_b(&LoopPoint::new(0.3, 0.0, 0.8), k),
                GroupPoint::new(0.3, 0.0, 0.8, 0.0)
            );
            assert_eq!(
                exp_b(&LoopPoint::new(0.3, 0.5, 0.0), k),
                GroupPoint::new(0.3, 0.5, 0.0, 0.0)
            );
        }
    }

    #[test]
    fn exp_inv_on_axis() {
        for k in KINDS {
            assert_eq!(
                exp_inv(&GroupPoint::new(0.2, 0.0, -0.4, 0.0), k).unwrap(),
                LoopPoint::new(0.2, 0.0, -0.4)
            );
            assert!(matches!(
                exp_inv(&GroupPoint::new(0.0, 0.0, 0.1, 1.0), k),
                Err(LoopError::OffSection(_))
            ));
        }
    }
}
