use super::accel::levin_u;
use super::gauss::adaptive;
use super::{IntegralResult, QuadratureConfig};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Trigonometric weight of a Fourier-type integral ∫₀^∞ w(xt) f(t) dt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Oscillator {
    Sine,
    Cosine,
}

impl Oscillator {
    pub fn eval(self, z: f64) -> f64 {
        match self {
            Oscillator::Sine => z.sin(),
            Oscillator::Cosine => z.cos(),
        }
    }

    /// First positive zero of w(xt), in units of π/x.
    fn first_zero(self) -> f64 {
        match self {
            Oscillator::Sine => 1.0,
            Oscillator::Cosine => 0.5,
        }
    }
}

/// ∫₀^∞ sin(xt) f(t) dt.
pub fn fourier_sine_transform(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    fourier_transform(f, Oscillator::Sine, x, cfg)
}

/// ∫₀^∞ cos(xt) f(t) dt.
pub fn fourier_cosine_transform(
    f: &dyn Fn(f64) -> f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    fourier_transform(f, Oscillator::Cosine, x, cfg)
}

/// Oscillatory integral over (0, ∞) split at the zeros of the weight. Consecutive segments
/// span an odd number of half periods so their contributions alternate in sign once `f` is
/// monotone; the partial sums are then extrapolated with the Levin u-transform.
pub fn fourier_transform(
    f: &dyn Fn(f64) -> f64,
    weight: Oscillator,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("transform frequency must be positive, got {x}")));
    }
    let half_period = PI / x;
    // Group half periods so that each segment is at least of unit length.
    let mut group = (1.0 / half_period).ceil().max(1.0) as usize;
    if group % 2 == 0 {
        group += 1;
    }
    let seg_len = group as f64 * half_period;
    let integrand = |t: f64| weight.eval(x * t) * f(t);
    let seg_abs = cfg.abs_tol * 1e-3;
    let seg_rel = cfg.rel_tol * 1e-3;

    let first_end = weight.first_zero() * half_period;
    let mut evaluations = 0;
    let mut edge_error = 0.0;
    let mut integrate = |a: f64, b: f64| {
        let r = adaptive(&integrand, a, b, seg_abs, seg_rel, cfg.max_subdivisions);
        evaluations += r.evaluations;
        edge_error += r.error;
        r.value
    };

    // Non-alternating head: [0, first zero) and, for wide groups, up to the first segment edge.
    let head = integrate(0.0, first_end);
    let mut terms: Vec<f64> = Vec::new();
    let mut sums: Vec<f64> = Vec::new();
    let mut total = head;
    let mut previous_accel: Option<f64> = None;
    let mut agreements = 0;
    let order = cfg.acceleration_order.max(2);

    for k in 0..cfg.oscillatory_max_segments {
        let a = first_end + k as f64 * seg_len;
        let term = integrate(a, a + seg_len);
        total += term;
        terms.push(term);
        sums.push(total);
        let n = terms.len();
        let target = cfg.target(total);

        // Direct convergence: alternating terms bounded by the latest one.
        if n >= 3 && term.abs() <= 0.1 * target && terms[n - 2].abs() <= target {
            let error_estimate = term.abs() + edge_error;
            return Ok(IntegralResult { value: total, error_estimate, evaluations });
        }
        if n < 4 {
            continue;
        }
        let window = (order + 1).min(n);
        let start = n - window;
        let Some(accel) = levin_u(&sums[start..], &terms[start..], start) else {
            continue;
        };
        if let Some(prev) = previous_accel {
            let diff = (accel - prev).abs();
            if diff <= target {
                agreements += 1;
                if agreements >= 2 {
                    let error_estimate = diff + edge_error;
                    return Ok(IntegralResult { value: accel, error_estimate, evaluations });
                }
            } else {
                agreements = 0;
            }
        }
        previous_accel = Some(accel);
    }
    Err(Error::Accuracy { best: previous_accel.unwrap_or(total), estimate: f64::INFINITY })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_closed_form() {
        let r = fourier_sine_transform(&|t| (-t).exp(), 2.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - 0.4).abs() < 1e-11, "{}", r.value);
        let c = fourier_cosine_transform(&|t| (-t).exp(), 2.0, &QuadratureConfig::default()).unwrap();
        assert!((c.value - 0.2).abs() < 1e-11, "{}", c.value);
    }

    #[test]
    fn slowly_decaying_dirichlet_integral() {
        // ∫ sin(t)/t = π/2
        let r = fourier_sine_transform(&|t| 1.0 / t, 1.0, &QuadratureConfig::default()).unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn high_frequency_groups_half_periods() {
        let x = 300.0;
        let r = fourier_sine_transform(&|t| (-t).exp(), x, &QuadratureConfig::default()).unwrap();
        assert!((r.value - x / (1.0 + x * x)).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn rejects_nonpositive_frequency() {
        assert!(fourier_sine_transform(&|t| (-t).exp(), 0.0, &QuadratureConfig::default()).is_err());
    }
}
