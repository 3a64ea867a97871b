//! Fox integral equations with product kernels k(xt): the Mellin-domain general solution,
//! the closed-form solution of the modified sine-kernel equation, and residual operators
//! that certify a candidate solution numerically.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::complexfun::{gamma_c, zeta_c, ZetaConfig};
use crate::error::{Error, Result};
use crate::quadrature::{
    fourier_transform, inverse_mellin_line, ContourSpec, IntegralResult, Oscillator,
    QuadratureConfig,
};

/// Threshold below which a solution denominator counts as vanishing.
pub const SINGULAR_THRESHOLD: f64 = 1e-9;

pub type RealFunction = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
pub type ComplexFunction = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// Kernel k(z) = amplitude · w(z / dilation), with w = sin or cos.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoxKernel {
    pub shape: Oscillator,
    pub amplitude: f64,
    pub dilation: f64,
}

impl FoxKernel {
    pub fn new(shape: Oscillator) -> Self {
        Self { shape, amplitude: 1.0, dilation: 1.0 }
    }

    /// The kernel of ∫ c·w(xt) Δ(b t) dt after substituting u = bt.
    pub fn with_inner_scale(shape: Oscillator, coefficient: f64, b: f64) -> Result<Self> {
        if !(b > 0.0) {
            return Err(Error::Domain(format!("inner scale must be positive, got {b}")));
        }
        Ok(Self { shape, amplitude: coefficient / b, dilation: b })
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.amplitude * self.shape.eval(z / self.dilation)
    }

    /// k̄(s) = amplitude · dilation^s · Γ(s) · {sin, cos}(πs/2).
    pub fn mellin(&self, s: Complex64) -> Result<Complex64> {
        let trig = match self.shape {
            Oscillator::Sine => (s * (PI / 2.0)).sin(),
            Oscillator::Cosine => (s * (PI / 2.0)).cos(),
        };
        Ok(gamma_c(s)? * trig * (s * self.dilation.ln()).exp() * self.amplitude)
    }

    pub fn strip(&self) -> (f64, f64) {
        match self.shape {
            Oscillator::Sine => (-1.0, 1.0),
            Oscillator::Cosine => (0.0, 1.0),
        }
    }

    pub fn mellin_pair(&self) -> MellinPair {
        let kernel = *self;
        MellinPair { fbar: Arc::new(move |s| kernel.mellin(s)), strip: self.strip() }
    }

    /// ∫₀^∞ k(xt) Δ(t) dt.
    pub fn apply(
        &self,
        delta: &dyn Fn(f64) -> f64,
        x: f64,
        cfg: &QuadratureConfig,
    ) -> Result<IntegralResult<f64>> {
        let r = fourier_transform(delta, self.shape, x / self.dilation, cfg)?;
        Ok(IntegralResult {
            value: self.amplitude * r.value,
            error_estimate: self.amplitude.abs() * r.error_estimate,
            evaluations: r.evaluations,
        })
    }
}

/// A Mellin transform together with its open strip of validity.
#[derive(Clone)]
pub struct MellinPair {
    pub fbar: ComplexFunction,
    pub strip: (f64, f64),
}

impl MellinPair {
    pub fn new(fbar: ComplexFunction, strip: (f64, f64)) -> Result<Self> {
        if !(strip.0 < strip.1) {
            return Err(Error::Domain(format!("empty Mellin strip ({}, {})", strip.0, strip.1)));
        }
        Ok(Self { fbar, strip })
    }

    pub fn contains(&self, re: f64) -> bool {
        self.strip.0 < re && re < self.strip.1
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        (self.fbar)(s)
    }
}

impl std::fmt::Debug for MellinPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MellinPair").field("strip", &self.strip).finish_non_exhaustive()
    }
}

/// How fast a candidate solution decays; selects the transform effort in residuals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum DecayHint {
    Exponential,
    /// Power-law decay, e.g. 1/t. Raises the segment cap of the oscillatory engine.
    Algebraic,
}

impl DecayHint {
    pub fn config(self, cfg: &QuadratureConfig) -> QuadratureConfig {
        match self {
            DecayHint::Exponential => *cfg,
            DecayHint::Algebraic => QuadratureConfig {
                oscillatory_max_segments: cfg.oscillatory_max_segments * 4,
                ..*cfg
            },
        }
    }
}

/// The modified equation πΔ(ax) = −f(x) + ∫₀^∞ k(xt)Δ(t) dt.
#[derive(Clone)]
pub struct FoxProblem {
    pub f: RealFunction,
    pub kernel: Oscillator,
    pub scale: f64,
}

impl FoxProblem {
    pub fn new(f: RealFunction, kernel: Oscillator, scale: f64) -> Result<Self> {
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::Domain(format!("scale a must be positive, got {scale}")));
        }
        Ok(Self { f, kernel, scale })
    }

    /// π² − aπ/2; the solution blows up where it vanishes.
    pub fn denominator(&self) -> f64 {
        PI * PI - self.scale * PI / 2.0
    }

    /// Closed-form solution −πf(x/a)/D − (a/D)∫k(xt)f(t)dt.
    pub fn solve(&self, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
        let d = self.denominator();
        if d.abs() < SINGULAR_THRESHOLD {
            return Err(Error::Singular(format!(
                "pi^2 - a*pi/2 = {d:e}: the closed-form solution is singular at a = 2*pi"
            )));
        }
        if !(x > 0.0) {
            return Err(Error::Domain(format!("solution needs x > 0, got {x}")));
        }
        let a = self.scale;
        let transform = fourier_transform(&*self.f, self.kernel, x, cfg)?;
        Ok(-PI * (self.f)(x / a) / d - a / d * transform.value)
    }

    /// πΔ(ax) + f(x) − ∫k(xt)Δ(t)dt.
    pub fn residual(
        &self,
        delta: &dyn Fn(f64) -> f64,
        hint: DecayHint,
        x: f64,
        cfg: &QuadratureConfig,
    ) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("residual needs x > 0, got {x}")));
        }
        let transform = fourier_transform(delta, self.kernel, x, &hint.config(cfg))?;
        Ok(PI * delta(self.scale * x) + (self.f)(x) - transform.value)
    }

    /// The same equation in standard form Δ(y) = g(y) + ∫κ(yt)Δ(t)dt, with g(y) = −f(y/a)/π
    /// and κ(z) = w(z/a)/π. Returns (ḡ, κ̄) given f̄.
    pub fn standard_form(&self, fpair: &MellinPair) -> (MellinPair, MellinPair) {
        let a = self.scale;
        let inner = fpair.fbar.clone();
        let g = MellinPair {
            fbar: Arc::new(move |s: Complex64| Ok(-inner(s)? * (s * a.ln()).exp() / PI)),
            strip: fpair.strip,
        };
        let kernel = FoxKernel { shape: self.kernel, amplitude: 1.0 / PI, dilation: a };
        (g, kernel.mellin_pair())
    }
}

impl std::fmt::Debug for FoxProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FoxProblem")
            .field("kernel", &self.kernel)
            .field("scale", &self.scale)
            .finish_non_exhaustive()
    }
}

/// Δ(x) = (1/2πi)∫ [f̄(s) + k̄(s)f̄(1−s)] / [1 − k̄(s)k̄(1−s)] x^{−s} ds for
/// Δ = f + ∫k(xt)Δ(t)dt.
pub fn fox_general_solution(
    fpair: &MellinPair,
    kpair: &MellinPair,
    spec: &ContourSpec,
    x: f64,
) -> Result<IntegralResult<f64>> {
    let c = spec.abscissa_c;
    for (pair, what) in [(fpair, "f"), (kpair, "k")] {
        if !pair.contains(c) || !pair.contains(1.0 - c) {
            return Err(Error::Domain(format!(
                "abscissa {c} and its reflection {} must lie in the strip ({}, {}) of {what}",
                1.0 - c,
                pair.strip.0,
                pair.strip.1
            )));
        }
    }
    let integrand = |s: Complex64| -> Result<Complex64> {
        let k = kpair.eval(s)?;
        let den = 1.0 - k * kpair.eval(1.0 - s)?;
        if den.norm() < SINGULAR_THRESHOLD {
            return Err(Error::Singular(format!(
                "1 - k(s)k(1-s) vanishes at s = {} + {}i",
                s.re, s.im
            )));
        }
        Ok((fpair.eval(s)? + k * fpair.eval(1.0 - s)?) / den)
    };
    inverse_mellin_line(&integrand, spec, x)
}

/// Closed-form solution of πΔ(ax) = −f(x) + ∫sin(xt)Δ(t)dt.
pub fn modified_fox_solution(
    f: &(dyn Fn(f64) -> f64 + Send + Sync),
    a: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let d = PI * PI - a * PI / 2.0;
    if d.abs() < SINGULAR_THRESHOLD {
        return Err(Error::Singular(format!(
            "pi^2 - a*pi/2 = {d:e}: the closed-form solution is singular at a = 2*pi"
        )));
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!("scale a must be positive, got {a}")));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("solution needs x > 0, got {x}")));
    }
    let transform = fourier_transform(f, Oscillator::Sine, x, cfg)?;
    Ok(-PI * f(x / a) / d - a / d * transform.value)
}

/// πΔ(ax) + f(x) − ∫₀^∞ sin(xt)Δ(t)dt.
pub fn modified_fox_residual(
    delta: &dyn Fn(f64) -> f64,
    hint: DecayHint,
    f: &dyn Fn(f64) -> f64,
    a: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("scale a must be positive, got {a}")));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("residual needs x > 0, got {x}")));
    }
    let transform = fourier_transform(delta, Oscillator::Sine, x, &hint.config(cfg))?;
    Ok(PI * delta(a * x) + f(x) - transform.value)
}

/// Δ(x) − f(x) − ∫₀^∞ k(xt)Δ(t)dt.
pub fn fox_residual(
    delta: &dyn Fn(f64) -> f64,
    f: &dyn Fn(f64) -> f64,
    kernel: &FoxKernel,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("residual needs x > 0, got {x}")));
    }
    let transform = kernel.apply(delta, x, cfg)?;
    Ok(delta(x) - f(x) - transform.value)
}

/// 2Γ(s)sin(πs/2), the Mellin transform of 2 sin x.
pub fn double_sine_kernel(s: Complex64) -> Result<Complex64> {
    Ok(gamma_c(s)? * (s * (PI / 2.0)).sin() * 2.0)
}

/// Relative residual of h̄(s)ζ(s) = (2π)^{s−1} k̄(s) ζ(1−s) h̄(1−s).
pub fn proposition_transform_check(
    hbar: &dyn Fn(Complex64) -> Result<Complex64>,
    kbar: &dyn Fn(Complex64) -> Result<Complex64>,
    s: Complex64,
) -> Result<f64> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(Error::Domain(format!("transform check undefined at s = {}", s.re)));
    }
    let cfg = ZetaConfig::default();
    let lhs = hbar(s)? * zeta_c(s, &cfg)?;
    let rhs = ((s - 1.0) * (2.0 * PI).ln()).exp() * kbar(s)? * zeta_c(1.0 - s, &cfg)? * hbar(1.0 - s)?;
    if lhs.norm() == 0.0 {
        return Err(Error::Domain("left side vanishes; relative residual undefined".into()));
    }
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// 1/(e^t − 1) − 1/t, with its Taylor expansion near the removable point.
pub fn bose_minus_pole(t: f64) -> f64 {
    if t.abs() < 1e-3 {
        let t2 = t * t;
        -0.5 + t / 12.0 - t * t2 / 720.0
    } else {
        1.0 / t.exp_m1() - 1.0 / t
    }
}
