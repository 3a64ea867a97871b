//! Numerical verification of Fox's integral equation with sine kernels, its modified form and
//! the singular case tied to Riemann's prime-counting approximation, zeta-zero expansions, and
//! the fractional-part / sine-integral identities that accompany them.
//!
//! Every identity is exposed as a named check in [`identities`] that produces a
//! [`identities::CheckResult`]; the `fox-verify` binary runs them and writes JSON reports.

pub mod cli;
pub mod complexfun;
pub mod error;
pub mod fox;
pub mod identities;
pub mod quadrature;
pub mod specfun;
pub mod zeros;

pub use error::{Error, Result};
