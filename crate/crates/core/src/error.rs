use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the numerical engines, the zero-table loader and the check registry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("precision budget exceeded: {what} (estimated loss {loss_digits:.1} digits)")]
    Precision { what: String, loss_digits: f64 },

    #[error("quadrature did not converge: best estimate {best}, error estimate {estimate:e}")]
    Accuracy { best: f64, estimate: f64 },

    #[error("contour output not real: imaginary part {imag:e} exceeds {tol:e}")]
    Symmetry { imag: f64, tol: f64 },

    #[error("singular configuration: {0}")]
    Singular(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("ordinate {ordinate} is not a zero: |zeta(1/2 + i t)| = {modulus:e}")]
    Validation { ordinate: f64, modulus: f64 },

    #[error("missing resource: {0}")]
    Resource(String),

    #[error("unknown check `{name}`; valid names: {}", valid.join(", "))]
    UnknownCheck { name: String, valid: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
