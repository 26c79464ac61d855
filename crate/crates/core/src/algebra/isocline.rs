use super::{AlgebraError, AlgebraSpec};
use crate::linalg::{Matrix, Rational, Tensor3, Tensor4};

/// Isocline algebra of a linear form `alpha` and a symmetric form `beta`:
///
/// `ξ·η = α(ξ)η − α(η)ξ`, `(ξ, η, ζ) = β(ξ, ζ)η − β(η, ζ)ξ`.
pub fn make_isocline(
    dim: usize,
    alpha: &[Rational],
    beta: &Matrix<Rational>,
) -> Result<AlgebraSpec, AlgebraError> {
    if alpha.len() != dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: dim,
            found: alpha.len(),
        });
    }
    if beta.rows() != dim || beta.cols() != dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: dim,
            found: beta.rows().max(beta.cols()),
        });
    }
    for i in 0..dim {
        for j in i + 1..dim {
            if beta[(i, j)] != beta[(j, i)] {
                return Err(AlgebraError::NotSymmetric(i, j));
            }
        }
    }

    let mut bil = Tensor3::new(dim);
    let mut tri = Tensor4::new(dim);
    for i in 0..dim {
        for j in 0..dim {
            // e_i·e_j = α_i e_j − α_j e_i
            bil.add_to([i, j, j], alpha[i].clone())?;
            bil.add_to([i, j, i], -alpha[j].clone())?;
            for k in 0..dim {
                // (e_i, e_j, e_k) = β_ik e_j − β_jk e_i
                tri.add_to([i, j, k, j], beta[(i, k)].clone())?;
                tri.add_to([i, j, k, i], -beta[(j, k)].clone())?;
            }
        }
    }
    AlgebraSpec::new("isocline", bil, tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_bol;
    use crate::linalg::rational::{int, rat};
    use crate::linalg::vec::basis;

    #[test]
    fn identity_form_gives_expected_triple() {
        let alg = make_isocline(3, &[int(0), int(0), int(0)], &Matrix::identity(3)).unwrap();
        let e = |i| basis(3, i);
        assert_eq!(alg.trilinear_eval(&e(0), &e(1), &e(0)).unwrap(), e(1));
        assert!(alg.bilinear.is_zero());
    }

    #[test]
    fn zero_forms_give_zero_algebra() {
        let alg = make_isocline(3, &[int(0), int(0), int(0)], &Matrix::zeros(3, 3)).unwrap();
        assert!(alg.same_operations(&AlgebraSpec::zero(3)));
    }

    #[test]
    fn asymmetric_beta_rejected() {
        let beta = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(
            make_isocline(2, &[int(0), int(0)], &beta),
            Err(AlgebraError::NotSymmetric(0, 1))
        );
    }

    #[test]
    fn generic_isocline_is_bol() {
        let beta = Matrix::from_rows(vec![
            vec![int(2), rat(1, 3), int(0)],
            vec![rat(1, 3), int(-1), int(4)],
            vec![int(0), int(4), rat(5, 2)],
        ])
        .unwrap();
        let alg = make_isocline(3, &[int(1), rat(-2, 7), int(3)], &beta).unwrap();
        assert!(check_bol(&alg).passed());
    }
}
