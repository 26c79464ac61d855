use super::{AlgebraSpec, LieAlgebraSpec};
use crate::linalg::{Matrix, Rational};

fn image(a: &Matrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    a.mul_vec(v).expect("dimension checked by caller")
}

fn columns(a: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    (0..a.cols()).map(|j| a.column(j)).collect()
}

fn square_of(a: &Matrix<Rational>, n: usize) -> bool {
    a.rows() == n && a.cols() == n && a.is_invertible()
}

/// Whether `a` is an isomorphism of `src` onto `dst`: invertible, and
/// commuting with both operations on every basis tuple.
pub fn is_morphism(a: &Matrix<Rational>, src: &AlgebraSpec, dst: &AlgebraSpec) -> bool {
    let n = src.dim();
    if dst.dim() != n || !square_of(a, n) {
        return false;
    }
    let img = columns(a);
    let e: Vec<_> = (0..n).map(|i| crate::linalg::vec::basis(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            if image(a, &src.mul(&e[i], &e[j])) != dst.mul(&img[i], &img[j]) {
                return false;
            }
            for k in 0..n {
                if image(a, &src.tri(&e[i], &e[j], &e[k])) != dst.tri(&img[i], &img[j], &img[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `a` is an isomorphism of Lie algebras `src → dst`.
pub fn is_lie_morphism(a: &Matrix<Rational>, src: &LieAlgebraSpec, dst: &LieAlgebraSpec) -> bool {
    let n = src.dim();
    if dst.dim() != n || !square_of(a, n) {
        return false;
    }
    let img = columns(a);
    let e: Vec<_> = (0..n).map(|i| crate::linalg::vec::basis(n, i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            image(a, &src.bracket.contract(&e[i], &e[j])) == dst.bracket.contract(&img[i], &img[j])
        })
    })
}
