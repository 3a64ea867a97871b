//! Integration engines: semi-infinite quadrature, oscillatory Fourier transforms, numerical
//! Mellin transforms, vertical-line inverse Mellin integrals and fractional-part weighted
//! integrals. Every engine is built on 15-point Gauss–Legendre panels.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

pub mod accel;
mod fractional;
pub mod gauss;
mod mellin;
mod oscillatory;
mod semi_infinite;

pub use fractional::{
    fractional_weighted_integral, fractional_weighted_integral_with_cutoff, TailBound,
};
pub use mellin::{
    inverse_mellin_line, inverse_mellin_line_complex, mellin_transform_numeric,
    mellin_transform_abel, ContourSpec, Taper,
};
pub use oscillatory::{fourier_cosine_transform, fourier_sine_transform, fourier_transform, Oscillator};
pub use semi_infinite::{integrate_semi_infinite, integrate_semi_infinite_generic};

/// Scalar types the panel rules can accumulate.
pub trait QuadValue:
    Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Tolerances and caps shared by all integration engines.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub oscillatory_max_segments: usize,
    pub acceleration_order: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            oscillatory_max_segments: 400,
            acceleration_order: 10,
        }
    }
}

impl QuadratureConfig {
    /// Same caps, tolerances multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self { abs_tol: self.abs_tol * factor, rel_tol: self.rel_tol * factor, ..*self }
    }

    pub(crate) fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Value of an integral with its error estimate and the number of integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult<T = f64> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}
