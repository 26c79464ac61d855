use itertools_free::product;
use serde::Serialize;

use super::{AlgebraSpec, Axiom, AxiomFailure, LieAlgebraSpec};
use crate::linalg::vec::{add, basis, is_zero, neg, sub};
use crate::linalg::{Matrix, Rational};

/// Cartesian powers of `0..dim`, without pulling in a dependency.
mod itertools_free {
    pub fn product(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
        let total = dim.pow(arity as u32);
        (0..total).map(move |mut n| {
            let mut idx = vec![0; arity];
            for slot in idx.iter_mut().rev() {
                *slot = n % dim;
                n /= dim;
            }
            idx
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieReport {
    pub antisymmetry: bool,
    pub jacobi: bool,
    pub failures: Vec<AxiomFailure>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry && self.jacobi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LtsReport {
    pub skew12: bool,
    pub cyclic: bool,
    pub derivation: bool,
    pub failures: Vec<AxiomFailure>,
}

impl LtsReport {
    pub fn passed(&self) -> bool {
        self.skew12 && self.cyclic && self.derivation
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BolReport {
    pub bilinear_skew: bool,
    pub lts: LtsReport,
    pub identity2: bool,
    pub failures: Vec<AxiomFailure>,
}

impl BolReport {
    pub fn passed(&self) -> bool {
        self.bilinear_skew && self.lts.passed() && self.identity2
    }
}

/// The operator `χ ↦ (e_i, e_j, χ)` for one basis pair, with its companion
/// `e_i · e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoDerivationWitness {
    pub pair: (usize, usize),
    pub companion: Vec<Rational>,
    /// Column `k` is `(e_i, e_j, e_k)`.
    pub operator: Matrix<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PseudoDerivationReport {
    pub bilinear_skew: bool,
    pub pseudo_derivation: bool,
    pub derivation: bool,
    pub failures: Vec<AxiomFailure>,
    /// One per basis pair `i < j`; empty unless every check passed.
    pub witnesses: Vec<PseudoDerivationWitness>,
}

impl PseudoDerivationReport {
    pub fn passed(&self) -> bool {
        self.bilinear_skew && self.pseudo_derivation && self.derivation
    }
}

pub fn check_lie(lie: &LieAlgebraSpec) -> LieReport {
    let n = lie.dim();
    let e: Vec<_> = (0..n).map(|i| basis(n, i)).collect();
    let br = |a: &[Rational], b: &[Rational]| lie.bracket.contract(a, b);
    let mut failures = Vec::new();

    for i in 0..n {
        for j in i..n {
            if !is_zero(&add(&br(&e[i], &e[j]), &br(&e[j], &e[i]))) {
                failures.push(AxiomFailure {
                    axiom: Axiom::LieAntisymmetry,
                    indices: vec![i, j],
                });
            }
        }
    }
    let antisymmetry = failures.is_empty();

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = add(
                    &add(&br(&e[i], &br(&e[j], &e[k])), &br(&e[j], &br(&e[k], &e[i]))),
                    &br(&e[k], &br(&e[i], &e[j])),
                );
                if !is_zero(&s) {
                    failures.push(AxiomFailure {
                        axiom: Axiom::Jacobi,
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }
    let jacobi = !failures.iter().any(|f| f.axiom == Axiom::Jacobi);
    LieReport {
        antisymmetry,
        jacobi,
        failures,
    }
}

fn bilinear_skew_failures(alg: &AlgebraSpec, e: &[Vec<Rational>]) -> Vec<AxiomFailure> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if !is_zero(&add(&alg.mul(&e[i], &e[j]), &alg.mul(&e[j], &e[i]))) {
                out.push(AxiomFailure {
                    axiom: Axiom::BilinearSkew,
                    indices: vec![i, j],
                });
            }
        }
    }
    out
}

/// `(ξ, η, (ζ, χ, ω)) = ((ξ, η, ζ), χ, ω) + (ζ, (ξ, η, χ), ω) + (ζ, χ, (ξ, η, ω))`
/// on all basis 5-tuples.
fn derivation_failures(alg: &AlgebraSpec, e: &[Vec<Rational>]) -> Vec<AxiomFailure> {
    let n = alg.dim();
    let mut out = Vec::new();
    // (e_i, e_j, e_k) is looked up repeatedly; tabulate it once.
    let table: Vec<Vec<Rational>> = product(n, 3)
        .map(|t| alg.tri(&e[t[0]], &e[t[1]], &e[t[2]]))
        .collect();
    let t = |i: usize, j: usize, k: usize| &table[(i * n + j) * n + k];
    for idx in product(n, 5) {
        let [a, b, c, d, w] = [idx[0], idx[1], idx[2], idx[3], idx[4]];
        let lhs = alg.tri(&e[a], &e[b], t(c, d, w));
        let rhs = add(
            &add(
                &alg.tri(t(a, b, c), &e[d], &e[w]),
                &alg.tri(&e[c], t(a, b, d), &e[w]),
            ),
            &alg.tri(&e[c], &e[d], t(a, b, w)),
        );
        if lhs != rhs {
            out.push(AxiomFailure {
                axiom: Axiom::Derivation,
                indices: idx,
            });
        }
    }
    out
}

pub fn check_lts(alg: &AlgebraSpec) -> LtsReport {
    let n = alg.dim();
    let e: Vec<_> = (0..n).map(|i| basis(n, i)).collect();
    let mut failures = Vec::new();

    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let s = add(&alg.tri(&e[i], &e[j], &e[k]), &alg.tri(&e[j], &e[i], &e[k]));
                if !is_zero(&s) {
                    failures.push(AxiomFailure {
                        axiom: Axiom::TrilinearSkew,
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }
    let skew12 = failures.is_empty();

    let before = failures.len();
    for idx in product(n, 3) {
        let [i, j, k] = [idx[0], idx[1], idx[2]];
        let s = add(
            &add(&alg.tri(&e[i], &e[j], &e[k]), &alg.tri(&e[j], &e[k], &e[i])),
            &alg.tri(&e[k], &e[i], &e[j]),
        );
        if !is_zero(&s) {
            failures.push(AxiomFailure {
                axiom: Axiom::CyclicSum,
                indices: idx,
            });
        }
    }
    let cyclic = failures.len() == before;

    let der = derivation_failures(alg, &e);
    let derivation = der.is_empty();
    failures.extend(der);

    LtsReport {
        skew12,
        cyclic,
        derivation,
        failures,
    }
}

/// Checks every identity of a Bol algebra:
///
/// 1. `ξ·ξ = 0` and `(ξ,η,ζ) + (η,ζ,ξ) + (ζ,ξ,η) = 0`,
/// 2. `(ξ,η,ζ)·χ − (ξ,η,χ)·ζ + (ζ,χ,ξ·η) − (ξ,η,ζ·χ) + (ξ·η)·(ζ·χ) = 0`,
/// 3. `(ξ,η,·)` acts as a derivation of the trilinear operation,
///
/// plus skew-symmetry of the trilinear operation in its first two slots.
pub fn check_bol(alg: &AlgebraSpec) -> BolReport {
    let n = alg.dim();
    let e: Vec<_> = (0..n).map(|i| basis(n, i)).collect();
    let mut failures = bilinear_skew_failures(alg, &e);
    let bilinear_skew = failures.is_empty();

    let lts = check_lts(alg);

    let before = failures.len();
    for idx in product(n, 4) {
        let (xi, eta, zeta, chi) = (&e[idx[0]], &e[idx[1]], &e[idx[2]], &e[idx[3]]);
        let xe = alg.mul(xi, eta);
        let zc = alg.mul(zeta, chi);
        let terms = [
            alg.mul(&alg.tri(xi, eta, zeta), chi),
            neg(&alg.mul(&alg.tri(xi, eta, chi), zeta)),
            alg.tri(zeta, chi, &xe),
            neg(&alg.tri(xi, eta, &zc)),
            alg.mul(&xe, &zc),
        ];
        let total = terms
            .iter()
            .skip(1)
            .fold(terms[0].clone(), |acc, t| add(&acc, t));
        if !is_zero(&total) {
            failures.push(AxiomFailure {
                axiom: Axiom::BolMixed,
                indices: idx,
            });
        }
    }
    let identity2 = failures.len() == before;
    failures.extend(lts.failures.iter().cloned());

    BolReport {
        bilinear_skew,
        lts,
        identity2,
        failures,
    }
}

/// For each basis pair `(ξ, η)` checks that `Π = (ξ, η, ·)` satisfies
///
/// `Π(κ·ζ) = Π(κ)·ζ + κ·Π(ζ) + (κ, ζ, ξ·η) − (κ·ζ)·(ξ·η)`
///
/// for all basis `κ, ζ`, and that `Π` is a derivation of the trilinear
/// operation. Skew-symmetry of the product is checked as a precondition.
pub fn check_pseudo_derivation(alg: &AlgebraSpec) -> PseudoDerivationReport {
    let n = alg.dim();
    let e: Vec<_> = (0..n).map(|i| basis(n, i)).collect();
    let mut failures = bilinear_skew_failures(alg, &e);
    let bilinear_skew = failures.is_empty();

    let before = failures.len();
    for idx in product(n, 4) {
        let (xi, eta, kappa, zeta) = (&e[idx[0]], &e[idx[1]], &e[idx[2]], &e[idx[3]]);
        let pi = |v: &[Rational]| alg.tri(xi, eta, v);
        let companion = alg.mul(xi, eta);
        let kz = alg.mul(kappa, zeta);
        let lhs = pi(&kz);
        let rhs = sub(
            &add(
                &add(&alg.mul(&pi(kappa), zeta), &alg.mul(kappa, &pi(zeta))),
                &alg.tri(kappa, zeta, &companion),
            ),
            &alg.mul(&kz, &companion),
        );
        if lhs != rhs {
            failures.push(AxiomFailure {
                axiom: Axiom::PseudoDerivation,
                indices: idx,
            });
        }
    }
    let pseudo_derivation = failures.len() == before;

    let der = derivation_failures(alg, &e);
    let derivation = der.is_empty();
    failures.extend(der);

    let mut witnesses = Vec::new();
    if bilinear_skew && pseudo_derivation && derivation {
        for i in 0..n {
            for j in i + 1..n {
                let cols: Vec<Vec<Rational>> =
                    (0..n).map(|k| alg.tri(&e[i], &e[j], &e[k])).collect();
                witnesses.push(PseudoDerivationWitness {
                    pair: (i, j),
                    companion: alg.mul(&e[i], &e[j]),
                    operator: Matrix::from_columns(&cols).expect("square by construction"),
                });
            }
        }
    }

    PseudoDerivationReport {
        bilinear_skew,
        pseudo_derivation,
        derivation,
        failures,
        witnesses,
    }
}
