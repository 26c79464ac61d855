use super::LinalgError;

/// Options for [`newton_root`].
#[derive(Debug, Clone, Copy)]
pub struct NewtonOptions {
    /// Convergence is declared once `|f(x)| < tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Sign-changing interval used when the derivative degenerates or a
    /// Newton step leaves the interval.
    pub bracket: Option<(f64, f64)>,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            tol: 1e-12,
            max_iter: 50,
            bracket: None,
        }
    }
}

impl NewtonOptions {
    pub fn with_bracket(mut self, lo: f64, hi: f64) -> Self {
        self.bracket = Some((lo.min(hi), lo.max(hi)));
        self
    }
}

const FLAT_DERIVATIVE: f64 = 1e-14;

/// Scalar Newton iteration with a bisection safeguard.
///
/// A derivative below `1e-14` in magnitude switches to bisection on the
/// caller's bracket; without a bracket that is reported as
/// [`LinalgError::NoConvergence`].
pub fn newton_root(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    x0: f64,
    opts: NewtonOptions,
) -> Result<f64, LinalgError> {
    let mut x = x0;
    let mut bracket = opts.bracket.and_then(|(lo, hi)| {
        let (flo, fhi) = (f(lo), f(hi));
        (flo.is_finite() && fhi.is_finite() && flo * fhi <= 0.0).then_some((lo, hi, flo))
    });
    for _ in 0..opts.max_iter {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(LinalgError::NonFinite);
        }
        if fx.abs() < opts.tol {
            return Ok(x);
        }
        if let Some((lo, hi, flo)) = bracket.as_mut() {
            if fx * *flo > 0.0 {
                *lo = x;
                *flo = fx;
            } else {
                *hi = x;
            }
        }
        let d = df(x);
        let newton = (d.abs() >= FLAT_DERIVATIVE).then(|| x - fx / d);
        x = match (newton, bracket) {
            (Some(next), Some((lo, hi, _))) if next > lo && next < hi => next,
            (Some(next), None) => next,
            (_, Some((lo, hi, _))) => 0.5 * (lo + hi),
            (None, None) => break,
        };
    }
    let fx = f(x);
    if fx.abs() < opts.tol {
        Ok(x)
    } else {
        Err(LinalgError::NoConvergence {
            iterations: opts.max_iter,
            residual: fx.abs(),
        })
    }
}
