use num_complex::Complex64;
use std::f64::consts::PI;

use super::gauss::{gauss_rule, GAUSS_POINTS};
use super::semi_infinite::semi_infinite_march;
use super::{IntegralResult, QuadratureConfig};
use crate::error::{Error, Result};

/// Window applied along the truncated contour.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum Taper {
    /// Plain truncation at ±T.
    None,
    /// Flat-top weight exp(−(τ/(w·T))⁴). Used for integrands that do not decay along the
    /// line, where it acts as a summability kernel that leaves smooth parts untouched.
    SuperGaussian { width_fraction: f64 },
}

impl Taper {
    fn weight(self, tau: f64, height: f64) -> f64 {
        match self {
            Taper::None => 1.0,
            Taper::SuperGaussian { width_fraction } => {
                let r = tau / (width_fraction * height);
                (-(r * r) * (r * r)).exp()
            }
        }
    }
}

/// Vertical line Re(s) = c, truncated to Im(s) ∈ [−T, T] and split into equal panels.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ContourSpec {
    pub abscissa_c: f64,
    pub height_t: f64,
    pub panel_count: usize,
    pub taper: Taper,
    /// Largest imaginary part accepted for a conjugate-symmetric integrand.
    pub imag_tol: f64,
}

impl ContourSpec {
    /// Unit-width panels on [−T, T], no taper.
    pub fn new(abscissa_c: f64, height_t: f64) -> Self {
        let panel_count = ((2.0 * height_t).ceil() as usize).max(8);
        Self { abscissa_c, height_t, panel_count, taper: Taper::None, imag_tol: 1e-8 }
    }

    pub fn with_taper(mut self, taper: Taper) -> Self {
        self.taper = taper;
        self
    }

    pub fn with_panels(mut self, panel_count: usize) -> Self {
        self.panel_count = panel_count;
        self
    }

    /// Same panel width at a new height.
    pub fn with_height(mut self, height_t: f64) -> Self {
        let width = 2.0 * self.height_t / self.panel_count as f64;
        self.panel_count = ((2.0 * height_t / width).ceil() as usize).max(8);
        self.height_t = height_t;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.height_t > 0.0 && self.height_t.is_finite()) {
            return Err(Error::Domain(format!("contour height must be positive, got {}", self.height_t)));
        }
        if self.panel_count < 8 {
            return Err(Error::Domain(format!("contour needs at least 8 panels, got {}", self.panel_count)));
        }
        if !self.abscissa_c.is_finite() {
            return Err(Error::Domain("contour abscissa must be finite".into()));
        }
        Ok(())
    }
}

fn line_sum(
    integrand: &dyn Fn(Complex64) -> Result<Complex64>,
    spec: &ContourSpec,
    log_x: f64,
    panels: usize,
) -> Result<Complex64> {
    let rule = gauss_rule();
    let width = 2.0 * spec.height_t / panels as f64;
    let half = 0.5 * width;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = -spec.height_t + (p as f64 + 0.5) * width;
        let mut panel = Complex64::new(0.0, 0.0);
        for i in 0..GAUSS_POINTS {
            let tau = mid + half * rule.nodes[i];
            let s = Complex64::new(spec.abscissa_c, tau);
            let w = spec.taper.weight(tau, spec.height_t);
            if w == 0.0 {
                continue;
            }
            let value = integrand(s)? * (-s * log_x).exp();
            panel += value * (rule.weights[i] * w);
        }
        acc += panel * half;
    }
    Ok(acc / (2.0 * PI))
}

/// (1/2πi)∫_{c−iT}^{c+iT} F(s) x^{−s} ds as a complex number. The error estimate compares
/// the panel sum against one with half as many panels and adds the truncation remainder
/// suggested by the integrand at the endpoints.
pub fn inverse_mellin_line_complex(
    f: &dyn Fn(Complex64) -> Result<Complex64>,
    spec: &ContourSpec,
    x: f64,
) -> Result<IntegralResult<Complex64>> {
    spec.validate()?;
    if !(x > 0.0) {
        return Err(Error::Domain(format!("inverse Mellin argument must be positive, got {x}")));
    }
    let log_x = x.ln();
    let fine = line_sum(f, spec, log_x, spec.panel_count)?;
    let coarse = line_sum(f, spec, log_x, spec.panel_count.div_ceil(2))?;
    let edge = |tau: f64| -> Result<f64> {
        let s = Complex64::new(spec.abscissa_c, tau);
        Ok((f(s)? * (-s * log_x).exp()).norm() * spec.taper.weight(tau, spec.height_t))
    };
    let tail = (edge(spec.height_t)? + edge(-spec.height_t)?) / (2.0 * PI);
    let evaluations = GAUSS_POINTS * (spec.panel_count + spec.panel_count.div_ceil(2)) + 2;
    Ok(IntegralResult { value: fine, error_estimate: (fine - coarse).norm() + tail, evaluations })
}

/// Real part of the truncated inverse Mellin integral. The imaginary part, which vanishes for
/// F(s̄) = conj F(s), is folded into the error estimate and rejected above `spec.imag_tol`.
pub fn inverse_mellin_line(
    f: &dyn Fn(Complex64) -> Result<Complex64>,
    spec: &ContourSpec,
    x: f64,
) -> Result<IntegralResult<f64>> {
    let r = inverse_mellin_line_complex(f, spec, x)?;
    let imag = r.value.im.abs();
    if imag > spec.imag_tol {
        return Err(Error::Symmetry { imag, tol: spec.imag_tol });
    }
    Ok(IntegralResult {
        value: r.value.re,
        error_estimate: r.error_estimate + imag,
        evaluations: r.evaluations,
    })
}

/// ∫₀^∞ t^{s−1} f(t) dt, split at t = 1 with exponential maps on both halves. Panel
/// contributions that keep growing away from t = 1 are reported as divergence.
pub fn mellin_transform_numeric(
    f: &dyn Fn(f64) -> f64,
    s: Complex64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<Complex64>> {
    let integrand = |t: f64| ((s - 1.0) * t.ln()).exp() * f(t);
    let (hi, lo) = semi_infinite_march(&integrand, cfg);
    if hi.growing || lo.growing {
        return Err(Error::Domain(format!(
            "Mellin integral diverges at s = {} + {}i",
            s.re, s.im
        )));
    }
    let value = hi.value + lo.value;
    let error_estimate = hi.error + lo.error;
    if !(hi.converged && lo.converged) {
        return Err(Error::Accuracy { best: value.re, estimate: error_estimate });
    }
    Ok(IntegralResult { value, error_estimate, evaluations: hi.evaluations + lo.evaluations })
}

/// Abel-regularized Mellin transform lim_{ε→0} ∫₀^∞ t^{s−1} f(t) e^{−εt} dt, extrapolated by
/// Richardson from ε ∈ {ε₀, ε₀/2, ε₀/4}.
pub fn mellin_transform_abel(
    f: &dyn Fn(f64) -> f64,
    s: Complex64,
    eps0: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult<Complex64>> {
    let mut values = [Complex64::new(0.0, 0.0); 3];
    let mut evaluations = 0;
    for (k, v) in values.iter_mut().enumerate() {
        let eps = eps0 / f64::powi(2.0, k as i32);
        let damped = |t: f64| f(t) * (-eps * t).exp();
        let r = mellin_transform_numeric(&damped, s, cfg)?;
        evaluations += r.evaluations;
        *v = r.value;
    }
    let first = [values[1] * 2.0 - values[0], values[2] * 2.0 - values[1]];
    let second = (first[1] * 4.0 - first[0]) / 3.0;
    Ok(IntegralResult { value: second, error_estimate: (second - first[1]).norm(), evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mellin_of_exponential_is_gamma() {
        let r = mellin_transform_numeric(&|t| (-t).exp(), Complex64::new(3.0, 0.0), &QuadratureConfig::default())
            .unwrap();
        assert!((r.value - Complex64::new(2.0, 0.0)).norm() < 1e-10, "{}", r.value);
    }

    #[test]
    fn divergent_mellin_is_a_domain_error() {
        // t^{s-1} e^{-t} with s = -0.5 blows up at the origin.
        let r = mellin_transform_numeric(&|t| (-t).exp(), Complex64::new(-0.5, 0.0), &QuadratureConfig::default());
        assert!(matches!(r, Err(Error::Domain(_))), "{r:?}");
    }

    #[test]
    fn spec_validation() {
        assert!(ContourSpec::new(0.5, 0.0).validate().is_err());
        assert!(ContourSpec::new(0.5, 10.0).with_panels(4).validate().is_err());
        assert_eq!(ContourSpec::new(0.5, 60.0).with_height(120.0).panel_count, 240);
    }

    #[test]
    fn asymmetric_integrand_is_rejected() {
        let spec = ContourSpec::new(1.0, 5.0);
        let r = inverse_mellin_line(&|s| Ok(Complex64::new(0.0, 1.0) * (s * s).exp()), &spec, 1.0);
        assert!(matches!(r, Err(Error::Symmetry { .. })), "{r:?}");
    }
}
