//! Exact and floating-point linear algebra used by every other module.

mod expm;
mod matrix;
pub mod rational;
mod roots;
mod tensor;

use thiserror::Error;

pub use expm::{mat_exp, MAT_EXP_TOL};
pub use matrix::{invert, solve_linear, Matrix, Scalar};
pub use rational::Rational;
pub use roots::{newton_root, NewtonOptions};
pub use tensor::{Tensor3, Tensor4};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("non-finite value encountered")]
    NonFinite,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
}

/// Exact vector helpers. Vectors are plain slices of scalars.
pub mod vec {
    use super::Rational;
    use num_traits::Zero;

    pub fn basis(dim: usize, i: usize) -> Vec<Rational> {
        (0..dim)
            .map(|k| {
                if k == i {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    pub fn zeros(dim: usize) -> Vec<Rational> {
        vec![Rational::zero(); dim]
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn neg(a: &[Rational]) -> Vec<Rational> {
        a.iter().map(|x| -x).collect()
    }

    pub fn is_zero(a: &[Rational]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    pub fn to_f64(a: &[Rational]) -> Vec<f64> {
        a.iter().map(super::rational::to_f64).collect()
    }
}

/// Newton iteration for square nonlinear systems with a central-difference
/// Jacobian. Stops once `‖F‖∞ ≤ tol` or the step stalls at round-off.
pub fn newton_system<const N: usize>(
    f: impl Fn(&[f64; N]) -> [f64; N],
    x0: [f64; N],
    tol: f64,
    max_iter: usize,
) -> Result<[f64; N], LinalgError> {
    let (x, r) = newton_iterate(f, x0, tol, max_iter)?;
    if r <= tol {
        Ok(x)
    } else {
        Err(LinalgError::NoConvergence {
            iterations: max_iter,
            residual: r,
        })
    }
}

/// Like [`newton_system`] but keeps iterating past `tol` until round-off
/// stalls progress, and returns the best point with its residual.
pub fn newton_polish<const N: usize>(
    f: impl Fn(&[f64; N]) -> [f64; N],
    x0: [f64; N],
    max_iter: usize,
) -> Result<([f64; N], f64), LinalgError> {
    newton_iterate(f, x0, 0.0, max_iter)
}

fn newton_iterate<const N: usize>(
    f: impl Fn(&[f64; N]) -> [f64; N],
    x0: [f64; N],
    tol: f64,
    max_iter: usize,
) -> Result<([f64; N], f64), LinalgError> {
    let norm = |v: &[f64; N]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut x = x0;
    let mut fx = f(&x);
    let mut stalled = 0;
    for _ in 0..max_iter {
        if !fx.iter().all(|v| v.is_finite()) {
            return Err(LinalgError::NonFinite);
        }
        if norm(&fx) <= tol {
            break;
        }
        let mut jac = Matrix::<f64>::zeros(N, N);
        for j in 0..N {
            let h = 1e-6 * x[j].abs().max(1.0);
            let mut xp = x;
            let mut xm = x;
            xp[j] += h;
            xm[j] -= h;
            let (fp, fm) = (f(&xp), f(&xm));
            for i in 0..N {
                jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let rhs: Vec<f64> = fx.iter().map(|v| -v).collect();
        let step = solve_linear(&jac, &rhs)?;
        let mut next = x;
        for i in 0..N {
            next[i] += step[i];
        }
        let fnext = f(&next);
        if norm(&fnext) >= norm(&fx) {
            // Round-off floor: keep the better point and allow a couple of
            // retries before giving up.
            stalled += 1;
            if stalled >= 3 {
                break;
            }
        }
        if norm(&fnext) <= norm(&fx) {
            x = next;
            fx = fnext;
        }
    }
    if !fx.iter().all(|v| v.is_finite()) {
        return Err(LinalgError::NonFinite);
    }
    Ok((x, norm(&fx)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_system_circle_line() {
        let f = |v: &[f64; 2]| [v[0] * v[0] + v[1] * v[1] - 1.0, v[0] - v[1]];
        let x = newton_system(f, [1.0, 0.5], 1e-14, 50).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((x[0] - h).abs() < 1e-13 && (x[1] - h).abs() < 1e-13);
    }
}
