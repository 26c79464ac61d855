//! Algebras given by structure constants, and exact axiom verification.
//!
//! A Bol algebra here is a finite-dimensional rational vector space with a
//! bilinear product `ξ·η` and a trilinear product `(ξ, η, ζ)`. All checks
//! run over basis tuples; by multilinearity that is equivalent to checking
//! every vector tuple.

mod checks;
mod isocline;
mod morphism;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{LinalgError, Rational, Tensor3, Tensor4};

pub use checks::{
    check_bol, check_lie, check_lts, check_pseudo_derivation, BolReport, LieReport, LtsReport,
    PseudoDerivationReport, PseudoDerivationWitness,
};
pub use isocline::make_isocline;
pub use morphism::{is_lie_morphism, is_morphism};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("vector has dimension {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bilinear form is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Vector space with a bilinear and a trilinear operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub label: String,
    pub bilinear: Tensor3,
    pub trilinear: Tensor4,
}

impl AlgebraSpec {
    pub fn new(
        label: impl Into<String>,
        bilinear: Tensor3,
        trilinear: Tensor4,
    ) -> Result<Self, AlgebraError> {
        if bilinear.dim() != trilinear.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: bilinear.dim(),
                found: trilinear.dim(),
            });
        }
        Ok(AlgebraSpec {
            label: label.into(),
            bilinear,
            trilinear,
        })
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraSpec {
            label: "zero".into(),
            bilinear: Tensor3::new(dim),
            trilinear: Tensor4::new(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.bilinear.dim()
    }

    /// Same tensors, different label. Equality of algebras ignores nothing,
    /// so comparisons between constructions go through this or
    /// [`AlgebraSpec::same_operations`].
    pub fn same_operations(&self, other: &AlgebraSpec) -> bool {
        self.bilinear == other.bilinear && self.trilinear == other.trilinear
    }

    fn check_dim(&self, v: &[Rational]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `a · b`.
    pub fn bilinear_eval(
        &self,
        a: &[Rational],
        b: &[Rational],
    ) -> Result<Vec<Rational>, AlgebraError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.bilinear.contract(a, b))
    }

    /// `(a, b, c)`.
    pub fn trilinear_eval(
        &self,
        a: &[Rational],
        b: &[Rational],
        c: &[Rational],
    ) -> Result<Vec<Rational>, AlgebraError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        self.check_dim(c)?;
        Ok(self.trilinear.contract(a, b, c))
    }

    // Unchecked variants for the inner loops of the axiom checks.
    pub(crate) fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.bilinear.contract(a, b)
    }

    pub(crate) fn tri(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vec<Rational> {
        self.trilinear.contract(a, b, c)
    }
}

/// Lie algebra given by its bracket constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    pub label: String,
    pub bracket: Tensor3,
}

impl LieAlgebraSpec {
    pub fn new(label: impl Into<String>, bracket: Tensor3) -> Self {
        LieAlgebraSpec {
            label: label.into(),
            bracket,
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        for v in [a, b] {
            if v.len() != self.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket.contract(a, b))
    }
}

/// Which identity a failing tuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `ξ·ξ = 0`, checked as antisymmetry on basis pairs.
    BilinearSkew,
    LieAntisymmetry,
    Jacobi,
    /// `(ξ, η, ζ) = −(η, ξ, ζ)`.
    TrilinearSkew,
    /// `(ξ, η, ζ) + (η, ζ, ξ) + (ζ, ξ, η) = 0`.
    CyclicSum,
    /// `(ξ, η, ·)` is a derivation of the trilinear operation.
    Derivation,
    /// The mixed identity linking both operations.
    BolMixed,
    /// `(ξ, η, ·)` is a pseudo-derivation of the product with companion `ξ·η`.
    PseudoDerivation,
}

/// A basis tuple (0-based) on which an identity fails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.indices.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{:?} fails at ({})", self.axiom, names.join(", "))
    }
}
