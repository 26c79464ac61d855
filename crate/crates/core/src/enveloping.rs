//! Enveloping Lie algebras of Bol algebras.
//!
//! A pair `(G, h)` with `G = B ⊕ h` as vector spaces, `h` a subalgebra and
//! `[[B, B], B] ⊆ B` induces on `B` the operations
//! `ξ·η = Π[ξ, η]` and `(ξ, η, ζ) = [[ξ, η], ζ]`, where `Π` projects onto
//! `B` along `h`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraSpec, LieAlgebraSpec};
use crate::linalg::rational::{format_rational, int, one, zero};
use crate::linalg::vec::{basis, scale, sub};
use crate::linalg::{solve_linear, LinalgError, Matrix, Rational, Tensor3, Tensor4};

/// Which of the two Type V algebras: `[e3, e4] = −e2` (minus) or `+e2` (plus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `+1` for minus, `−1` for plus: the coefficient of `e2` in `(e2, e3, e3)`.
    pub fn sigma(self) -> i64 {
        match self {
            Sign::Minus => 1,
            Sign::Plus => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minus" | "-" => Ok(Sign::Minus),
            "plus" | "+" => Ok(Sign::Plus),
            other => Err(format!("unknown sign {other:?}, expected minus or plus")),
        }
    }
}

/// The line `h_{x,y,z} = <e4 + x e1 + y e2 + z e3>` in `g4(sign)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubalgebraParams {
    pub sign: Sign,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl SubalgebraParams {
    pub fn new(sign: Sign, x: Rational, y: Rational, z: Rational) -> Self {
        SubalgebraParams { sign, x, y, z }
    }

    pub fn from_ints(sign: Sign, x: i64, y: i64, z: i64) -> Self {
        Self::new(sign, int(x), int(y), int(z))
    }

    /// Spanning vector `x e1 + y e2 + z e3 + e4`.
    pub fn h_vector(&self) -> Vec<Rational> {
        vec![self.x.clone(), self.y.clone(), self.z.clone(), one()]
    }

    pub fn xyz(&self) -> [Rational; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

impl fmt::Display for SubalgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}, {}, {})",
            self.sign,
            format_rational(&self.x),
            format_rational(&self.y),
            format_rational(&self.z)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnvelopingError {
    #[error("B and h do not form a direct sum decomposition of G")]
    NotDirectSum,
    #[error("h is not closed under the bracket")]
    NotSubalgebra,
    #[error("[[e{}, e{}], e{}] leaves B", .0 + 1, .1 + 1, .2 + 1)]
    TripleLeavesB(usize, usize, usize),
    #[error("vector is not in B")]
    NotInB,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Four-dimensional Lie algebra `[e2,e3] = e4`, `[e2,e4] = −e1`,
/// `[e3,e4] = −σ e2` with `σ = sign.sigma()`.
pub fn g4(sign: Sign) -> LieAlgebraSpec {
    let mut br = Tensor3::new(4);
    let mut put = |i: usize, j: usize, k: usize, c: i64| {
        br.set([i, j, k], int(c)).expect("indices < 4");
        br.set([j, i, k], int(-c)).expect("indices < 4");
    };
    put(1, 2, 3, 1);
    put(1, 3, 0, -1);
    put(2, 3, 1, -sign.sigma());
    LieAlgebraSpec::new(format!("g4-{sign}"), br)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnvelopingReport {
    pub direct_sum: bool,
    pub h_subalgebra: bool,
    pub prop4: bool,
}

impl EnvelopingReport {
    pub fn passed(&self) -> bool {
        self.direct_sum && self.h_subalgebra && self.prop4
    }
}

/// `G = B ⊕ h` where `B` is spanned by coordinate vectors of `G`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopingPair {
    pub g: LieAlgebraSpec,
    pub b_indices: Vec<usize>,
    pub h_basis: Vec<Vec<Rational>>,
}

impl EnvelopingPair {
    /// Builds the pair and rejects it unless every condition of
    /// [`check_enveloping`] holds.
    pub fn new(
        g: LieAlgebraSpec,
        b_indices: Vec<usize>,
        h_basis: Vec<Vec<Rational>>,
    ) -> Result<Self, EnvelopingError> {
        let pair = Self::unchecked(g, b_indices, h_basis);
        let report = check_enveloping(&pair);
        if !report.direct_sum {
            return Err(EnvelopingError::NotDirectSum);
        }
        if !report.h_subalgebra {
            return Err(EnvelopingError::NotSubalgebra);
        }
        if let Some((i, j, k)) = pair.first_triple_outside_b() {
            return Err(EnvelopingError::TripleLeavesB(i, j, k));
        }
        Ok(pair)
    }

    /// No validation; for probing candidate pairs with [`check_enveloping`].
    pub fn unchecked(
        g: LieAlgebraSpec,
        b_indices: Vec<usize>,
        h_basis: Vec<Vec<Rational>>,
    ) -> Self {
        EnvelopingPair {
            g,
            b_indices,
            h_basis,
        }
    }

    /// `(g4(sign), <e1, e2, e3>, h_{x,y,z})`.
    pub fn family(params: &SubalgebraParams) -> Self {
        Self::new(g4(params.sign), vec![0, 1, 2], vec![params.h_vector()])
            .expect("the Type V pairs satisfy every condition")
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    fn b_basis(&self) -> Vec<Vec<Rational>> {
        self.b_indices
            .iter()
            .map(|&i| basis(self.dim(), i))
            .collect()
    }

    fn decomposition_matrix(&self) -> Result<Matrix<Rational>, LinalgError> {
        let mut cols = self.b_basis();
        cols.extend(self.h_basis.iter().cloned());
        Matrix::from_columns(&cols)
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.g.bracket.contract(a, b)
    }

    pub fn in_b(&self, v: &[Rational]) -> bool {
        v.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.b_indices.contains(&i))
    }

    /// Component of `v` in `B` along `h`, in the coordinates of `G`.
    pub fn project_b(&self, v: &[Rational]) -> Result<Vec<Rational>, EnvelopingError> {
        let m = self.decomposition_matrix()?;
        if !m.is_square() {
            return Err(EnvelopingError::NotDirectSum);
        }
        let coeffs = solve_linear(&m, v).map_err(|e| match e {
            LinalgError::Singular => EnvelopingError::NotDirectSum,
            other => other.into(),
        })?;
        let mut out = vec![zero(); self.dim()];
        for (slot, &i) in self.b_indices.iter().enumerate() {
            out[i] = coeffs[slot].clone();
        }
        Ok(out)
    }

    /// `[a, b]_B`.
    pub fn bracket_b(
        &self,
        a: &[Rational],
        b: &[Rational],
    ) -> Result<Vec<Rational>, EnvelopingError> {
        self.project_b(&self.bracket(a, b))
    }

    /// Restricts a vector of `G` lying in `B` to `B`-coordinates.
    pub fn to_b_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.b_indices.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn from_b_coords(&self, w: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.dim()];
        for (slot, &i) in self.b_indices.iter().enumerate() {
            out[i] = w[slot].clone();
        }
        out
    }

    fn first_triple_outside_b(&self) -> Option<(usize, usize, usize)> {
        let b = self.b_basis();
        for (i, bi) in b.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let inner = self.bracket(bi, bj);
                for (k, bk) in b.iter().enumerate() {
                    if !self.in_b(&self.bracket(&inner, bk)) {
                        return Some((self.b_indices[i], self.b_indices[j], self.b_indices[k]));
                    }
                }
            }
        }
        None
    }

    /// `dim [B, B]` inside `G`.
    pub fn derived_dim(&self) -> usize {
        let b = self.b_basis();
        let mut cols = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                cols.push(self.bracket(&b[i], &b[j]));
            }
        }
        if cols.is_empty() {
            return 0;
        }
        Matrix::from_columns(&cols).map(|m| m.rank()).unwrap_or(0)
    }
}

/// Checks `G = B ⊕ h`, `[h, h] ⊆ h` and `[[B, B], B] ⊆ B`, exactly.
pub fn check_enveloping(pair: &EnvelopingPair) -> EnvelopingReport {
    let n = pair.dim();
    let direct_sum = pair.b_indices.iter().all(|&i| i < n)
        && pair.h_basis.iter().all(|h| h.len() == n)
        && pair
            .decomposition_matrix()
            .map(|m| m.is_invertible())
            .unwrap_or(false);

    let h_rank = Matrix::from_columns(&pair.h_basis)
        .map(|m| m.rank())
        .unwrap_or(0);
    let h_subalgebra = pair.h_basis.iter().all(|a| {
        pair.h_basis.iter().all(|b| {
            let mut cols = pair.h_basis.clone();
            cols.push(pair.bracket(a, b));
            Matrix::from_columns(&cols)
                .map(|m| m.rank() == h_rank)
                .unwrap_or(false)
        })
    });

    let prop4 = pair.b_indices.iter().all(|&i| i < n) && pair.first_triple_outside_b().is_none();
    EnvelopingReport {
        direct_sum,
        h_subalgebra,
        prop4,
    }
}

/// Bol algebra induced on `B`, in `B`-coordinates.
pub fn induced_bol(pair: &EnvelopingPair) -> Result<AlgebraSpec, EnvelopingError> {
    let b = pair.b_basis();
    let m = b.len();
    let mut bil = Tensor3::new(m);
    let mut tri = Tensor4::new(m);
    for i in 0..m {
        for j in 0..m {
            let inner = pair.bracket(&b[i], &b[j]);
            let prod = pair.to_b_coords(&pair.project_b(&inner)?);
            for (k, c) in prod.into_iter().enumerate() {
                bil.set([i, j, k], c)?;
            }
            for (k, bk) in b.iter().enumerate() {
                let outer = pair.bracket(&inner, bk);
                if !pair.in_b(&outer) {
                    return Err(EnvelopingError::TripleLeavesB(
                        pair.b_indices[i],
                        pair.b_indices[j],
                        pair.b_indices[k],
                    ));
                }
                for (l, c) in pair.to_b_coords(&outer).into_iter().enumerate() {
                    tri.set([i, j, k, l], c)?;
                }
            }
        }
    }
    Ok(AlgebraSpec::new(
        format!("induced-{}", pair.g.label),
        bil,
        tri,
    )?)
}

impl From<crate::algebra::AlgebraError> for EnvelopingError {
    fn from(e: crate::algebra::AlgebraError) -> Self {
        match e {
            crate::algebra::AlgebraError::Linalg(l) => EnvelopingError::Linalg(l),
            _ => EnvelopingError::NotInB,
        }
    }
}

/// `<ξ, η, χ> = −½[[ξ, η], χ] + ½[[ξ, η]_B, χ]_B` for `ξ, η, χ ∈ B`, in the
/// coordinates of `G`.
pub fn sabinin_triple(
    pair: &EnvelopingPair,
    xi: &[Rational],
    eta: &[Rational],
    chi: &[Rational],
) -> Result<Vec<Rational>, EnvelopingError> {
    if ![xi, eta, chi]
        .iter()
        .all(|v| v.len() == pair.dim() && pair.in_b(v))
    {
        return Err(EnvelopingError::NotInB);
    }
    let half = Rational::new(1.into(), 2.into());
    let full = pair.bracket(&pair.bracket(xi, eta), chi);
    let projected = pair.bracket_b(&pair.bracket_b(xi, eta)?, chi)?;
    Ok(sub(&scale(&projected, &half), &scale(&full, &half)))
}

/// The Type V algebra on `<e1, e2, e3>` written down directly:
/// `e2·e3 = −x e1 − y e2 − z e3`, `(e2, e3, e2) = e1`, `(e2, e3, e3) = σ e2`.
pub fn family_bol(params: &SubalgebraParams) -> AlgebraSpec {
    let mut bil = Tensor3::new(3);
    for (k, c) in params.xyz().into_iter().enumerate() {
        bil.set([1, 2, k], -c.clone()).expect("dim 3");
        bil.set([2, 1, k], c).expect("dim 3");
    }
    let mut tri = Tensor4::new(3);
    let s = int(params.sign.sigma());
    for (k, l, c) in [(1, 0, one()), (2, 1, s)] {
        tri.set([1, 2, k, l], c.clone()).expect("dim 3");
        tri.set([2, 1, k, l], -c).expect("dim 3");
    }
    AlgebraSpec::new(format!("type-V {params}"), bil, tri).expect("dims agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_lie;
    use crate::linalg::rational::rat;

    fn e(i: usize) -> Vec<Rational> {
        basis(4, i)
    }

    #[test]
    fn g4_brackets() {
        for sign in Sign::BOTH {
            let g = g4(sign);
            assert!(check_lie(&g).passed());
            assert_eq!(g.bracket.contract(&e(1), &e(2)), e(3));
            assert_eq!(
                g.bracket.contract(&e(3), &e(2)),
                scale(&e(1), &int(sign.sigma()))
            );
            for i in 0..4 {
                assert!(g.bracket.contract(&e(0), &e(i)).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn projection_examples() {
        let p = SubalgebraParams::new(Sign::Minus, rat(1, 2), int(-3), int(7));
        let pair = EnvelopingPair::family(&p);
        assert_eq!(
            pair.project_b(&e(3)).unwrap(),
            vec![rat(-1, 2), int(3), int(-7), int(0)]
        );
        assert_eq!(pair.project_b(&e(0)).unwrap(), e(0));

        let pair = EnvelopingPair::family(&SubalgebraParams::from_ints(Sign::Minus, 0, 1, 0));
        let v = vec![int(2), int(0), int(0), int(1)];
        assert_eq!(
            pair.project_b(&v).unwrap(),
            vec![int(2), int(-1), int(0), int(0)]
        );
    }

    #[test]
    fn derived_dimension_is_one() {
        let pair = EnvelopingPair::family(&SubalgebraParams::from_ints(Sign::Plus, 1, 2, 3));
        assert_eq!(pair.derived_dim(), 1);
    }

    #[test]
    fn bad_pairs_are_rejected() {
        let g = g4(Sign::Minus);
        let r = check_enveloping(&EnvelopingPair::unchecked(
            g.clone(),
            vec![0, 1, 2],
            vec![e(1)],
        ));
        assert!(!r.direct_sum);
        // [[e2, e3], e2] = e1 leaves <e2, e3, e4>.
        let r = check_enveloping(&EnvelopingPair::unchecked(
            g.clone(),
            vec![1, 2, 3],
            vec![e(0)],
        ));
        assert!(r.direct_sum && !r.prop4);
        assert_eq!(
            EnvelopingPair::new(g, vec![1, 2, 3], vec![e(0)]),
            Err(EnvelopingError::TripleLeavesB(1, 2, 1))
        );
    }

    #[test]
    fn sabinin_examples() {
        let pair = EnvelopingPair::family(&SubalgebraParams::from_ints(Sign::Minus, 0, 0, 0));
        let t = sabinin_triple(&pair, &e(1), &e(2), &e(1)).unwrap();
        assert_eq!(t, vec![rat(-1, 2), int(0), int(0), int(0)]);
        assert!(sabinin_triple(&pair, &e(3), &e(2), &e(1)).is_err());
    }
}
