use super::matrix::Matrix;
use super::LinalgError;

/// Default truncation tolerance for [`mat_exp`].
pub const MAT_EXP_TOL: f64 = 1e-13;

const MAX_TERMS: usize = 60;

/// Matrix exponential by scaling and squaring around a truncated Taylor core.
///
/// The matrix is scaled by `2^-s` until its 1-norm is at most 1/2, the series
/// is summed until the next term drops below `tol · 2^-s`, and the result is
/// squared `s` times.
pub fn mat_exp(a: &Matrix<f64>, tol: f64) -> Result<Matrix<f64>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let n = a.rows();
    let norm = a.norm_1();
    let mut squarings = 0u32;
    if norm > 0.5 {
        squarings = (norm / 0.5).log2().ceil() as u32;
    }
    let scaled = a.scale(&0.5f64.powi(squarings as i32));
    let term_tol = tol * 0.5f64.powi(squarings as i32);

    let mut sum = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=MAX_TERMS {
        term = term.matmul(&scaled)?.scale(&(1.0 / k as f64));
        sum = sum.add(&term);
        if term.norm_1() < term_tol {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum)?;
    }
    Ok(sum)
}
