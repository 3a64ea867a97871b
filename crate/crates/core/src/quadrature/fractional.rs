use super::gauss::adaptive;
use super::semi_infinite::integrate_semi_infinite;
use super::{IntegralResult, QuadratureConfig};
use crate::error::{Error, Result};

/// Caller-declared envelope of |g(t)| used to terminate the unit-panel sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailBound {
    /// |g(t)| ≤ constant · e^{−rate·t}
    Exponential { constant: f64, rate: f64 },
    /// |g(t)| ≤ constant · t^{−exponent}, exponent > 0
    Power { constant: f64, exponent: f64 },
}

impl TailBound {
    /// Bound on ∫_K^∞ ({t}/t)|g(t)| dt.
    fn beyond(self, k: f64) -> f64 {
        match self {
            TailBound::Exponential { constant, rate } => constant * (-rate * k).exp() / (rate * k),
            TailBound::Power { constant, exponent } => constant * k.powf(-exponent) / exponent,
        }
    }
}

/// ∫₀^∞ ({t}/t) g(t) dt summed over the unit panels [k, k+1), on which the fractional part is
/// the smooth function t − k.
pub fn fractional_weighted_integral(
    g: &dyn Fn(f64) -> f64,
    tail: TailBound,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    let panel_abs = cfg.abs_tol * 1e-3;
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for k in 0..cfg.max_subdivisions {
        let kf = k as f64;
        let weighted = |t: f64| (t - kf) / t * g(t);
        // On [0, 1) the weight {t}/t is identically 1.
        let r = if k == 0 {
            adaptive(g, 0.0, 1.0, panel_abs, cfg.rel_tol * 1e-2, cfg.max_subdivisions)
        } else {
            adaptive(&weighted, kf, kf + 1.0, panel_abs, cfg.rel_tol * 1e-2, cfg.max_subdivisions)
        };
        value += r.value;
        error += r.error;
        evaluations += r.evaluations;
        let remainder = tail.beyond(kf + 1.0);
        if remainder < 0.1 * cfg.target(value) {
            return Ok(IntegralResult { value, error_estimate: error + remainder, evaluations });
        }
    }
    Err(Error::Accuracy { best: value, estimate: tail.beyond(cfg.max_subdivisions as f64) })
}

/// ∫₀^∞ ({t}/t) g(t) dt with exact unit panels up to `cutoff` and, beyond it, the
/// Euler–Maclaurin mean-value tail ½∫_K^∞ g(t)/t dt − g(K)/(12K). The neglected remainder is
/// of order h″ for h = g/t, so this suits smooth algebraically decaying g.
pub fn fractional_weighted_integral_with_cutoff(
    g: &dyn Fn(f64) -> f64,
    cutoff: usize,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    if cutoff == 0 {
        return Err(Error::Domain("cutoff must be at least one panel".into()));
    }
    let panel_abs = cfg.abs_tol * 1e-3;
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for k in 0..cutoff {
        let kf = k as f64;
        let weighted = |t: f64| (t - kf) / t * g(t);
        let r = if k == 0 {
            adaptive(g, 0.0, 1.0, panel_abs, cfg.rel_tol * 1e-2, cfg.max_subdivisions)
        } else {
            adaptive(&weighted, kf, kf + 1.0, panel_abs, cfg.rel_tol * 1e-2, cfg.max_subdivisions)
        };
        value += r.value;
        error += r.error;
        evaluations += r.evaluations;
    }
    let big = cutoff as f64;
    let shifted = |u: f64| g(big + u) / (big + u);
    let mean = integrate_semi_infinite(&shifted, cfg)?;
    let edge = g(big) / big;
    value += 0.5 * mean.value - edge / 12.0;
    error += 0.5 * mean.error_estimate + edge.abs() / (12.0 * big);
    Ok(IntegralResult { value, error_estimate: error, evaluations: evaluations + mean.evaluations + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_decay_is_bounded_by_plain_integral() {
        let r = fractional_weighted_integral(
            &|t| (-t).exp(),
            TailBound::Exponential { constant: 1.0, rate: 1.0 },
            &QuadratureConfig::default(),
        )
        .unwrap();
        assert!(r.value > 0.0 && r.value < 1.0, "{}", r.value);
    }

    #[test]
    fn tail_never_met() {
        let cfg = QuadratureConfig { max_subdivisions: 5, ..Default::default() };
        let r = fractional_weighted_integral(
            &|t| 1.0 / (1.0 + t),
            TailBound::Power { constant: 1.0, exponent: 0.5 },
            &cfg,
        );
        assert!(matches!(r, Err(Error::Accuracy { .. })));
    }

    #[test]
    fn mean_value_tail_matches_full_panels() {
        let cfg = QuadratureConfig::default();
        let g = |t: f64| 1.0 / (1.0 + t * t);
        let cut = fractional_weighted_integral_with_cutoff(&g, 40, &cfg).unwrap();
        // Panels 40..400 are integrated exactly by the second call.
        let full = fractional_weighted_integral_with_cutoff(&g, 400, &cfg).unwrap();
        assert!((cut.value - full.value).abs() < 2e-7, "{} {}", cut.value, full.value);
    }
}
