use super::gauss::adaptive;
use super::{IntegralResult, QuadValue, QuadratureConfig};
use crate::error::{Error, Result};

/// Largest |u| visited in the logarithmic variable t = e^u.
const MAX_LOG_EXTENT: f64 = 700.0;

pub(crate) struct March<T> {
    pub value: T,
    pub error: f64,
    pub evaluations: usize,
    pub converged: bool,
    pub growing: bool,
}

/// Integrate `g` over [0, ∞) in unit panels, stopping once the panel contributions and their
/// geometric tail estimate fall below a fraction of the target tolerance.
pub(crate) fn march<T: QuadValue>(g: &dyn Fn(f64) -> T, cfg: &QuadratureConfig) -> March<T> {
    let mut value = T::default();
    let mut error = 0.0;
    let mut evaluations = 0;
    let mut history: Vec<f64> = Vec::new();
    let mut u = 0.0;
    let panel_abs = cfg.abs_tol * 0.05;
    while u < MAX_LOG_EXTENT {
        let panel = adaptive(g, u, u + 1.0, panel_abs, cfg.rel_tol * 0.5, cfg.max_subdivisions);
        evaluations += panel.evaluations;
        value = value + panel.value;
        error += panel.error;
        let size = panel.value.magnitude();
        history.push(size);
        u += 1.0;

        let n = history.len();
        if n >= 10 && u > 20.0 && history[n - 10..].windows(2).all(|w| w[1] > w[0]) {
            return March { value, error, evaluations, converged: false, growing: true };
        }
        if n < 3 {
            continue;
        }
        let small = 0.02 * cfg.target(value.magnitude());
        let prev = history[n - 2];
        let ratio = if prev == 0.0 { if size == 0.0 { 0.0 } else { 1.0 } } else { size / prev };
        if size <= small && prev <= small * 10.0 && ratio < 0.9 {
            let tail = size * ratio / (1.0 - ratio);
            if tail <= small {
                error += size + tail;
                return March { value, error, evaluations, converged: true, growing: false };
            }
        }
    }
    March { value, error, evaluations, converged: false, growing: false }
}

/// ∫₀^∞ f(t) dt for any panel scalar, via t = e^u split at t = 1.
pub(crate) fn semi_infinite_march<T: QuadValue>(
    f: &dyn Fn(f64) -> T,
    cfg: &QuadratureConfig,
) -> (March<T>, March<T>) {
    let right = |u: f64| {
        let t = u.exp();
        f(t) * t
    };
    let left = |u: f64| {
        let t = (-u).exp();
        f(t) * t
    };
    (march(&right, cfg), march(&left, cfg))
}

/// ∫₀^∞ f(t) dt for a complex or real integrand; errors when either half fails to converge.
pub fn integrate_semi_infinite_generic<T: QuadValue>(
    f: &dyn Fn(f64) -> T,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<T>> {
    let (hi, lo) = semi_infinite_march(f, cfg);
    let value = hi.value + lo.value;
    let error_estimate = hi.error + lo.error;
    if !(hi.converged && lo.converged) {
        return Err(Error::Accuracy { best: value.magnitude(), estimate: error_estimate });
    }
    Ok(IntegralResult { value, error_estimate, evaluations: hi.evaluations + lo.evaluations })
}

/// ∫₀^∞ f(t) dt for an absolutely integrable f with at most an integrable singularity at 0.
pub fn integrate_semi_infinite(
    f: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    let (hi, lo) = semi_infinite_march(f, cfg);
    let value = hi.value + lo.value;
    let error_estimate = hi.error + lo.error;
    if !(hi.converged && lo.converged) {
        return Err(Error::Accuracy { best: value, estimate: error_estimate });
    }
    Ok(IntegralResult { value, error_estimate, evaluations: hi.evaluations + lo.evaluations })
}
