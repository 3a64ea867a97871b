//! Complex Gamma and Riemann zeta (with derivative) and the zeta functional-equation residual.
//!
//! Gamma uses the g = 7, n = 9 Lanczos approximation in logarithmic form, with reflection for
//! Re(s) < 1/2. Zeta and its derivative use Euler–Maclaurin summation with the direct-sum
//! length scaled to the height |Im(s)|.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Carrier for all complex arithmetic (s, ρ, Mellin-domain values).
pub type ComplexValue = Complex64;

/// Build a complex value, rejecting non-finite coordinates.
pub fn checked(re: f64, im: f64) -> Result<ComplexValue> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::Domain(format!("non-finite complex value ({re}, {im})")))
    }
}

/// Bernoulli numbers B_2, B_4, …, B_24 as exact ratios.
pub(crate) const BERNOULLI_EVEN: [(f64, f64); 12] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
];

/// B_{2j}/(2j)! for j = 1..=12.
fn bernoulli_over_factorial() -> [f64; 12] {
    let mut out = [0.0; 12];
    let mut fact = 1.0;
    for (j, (num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let m = 2 * (j + 1);
        fact *= ((m - 1) * m) as f64;
        out[j] = num / den / fact;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ZetaConfig {
    /// Minimum direct-sum length N.
    pub euler_maclaurin_cutoff: usize,
    /// Number of Bernoulli correction terms (at most 12).
    pub bernoulli_terms: usize,
}

impl Default for ZetaConfig {
    fn default() -> Self {
        Self { euler_maclaurin_cutoff: 64, bernoulli_terms: 12 }
    }
}

impl ZetaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.euler_maclaurin_cutoff < 10 {
            return Err(Error::Domain("Euler-Maclaurin cutoff must be at least 10".into()));
        }
        if !(2..=BERNOULLI_EVEN.len()).contains(&self.bernoulli_terms) {
            return Err(Error::Domain("bernoulli_terms must lie in 2..=12".into()));
        }
        Ok(())
    }

    fn cutoff_for(&self, s: Complex64) -> usize {
        self.euler_maclaurin_cutoff.max((1.3 * s.im.abs()).ceil() as usize)
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// log Γ(s) for Re(s) ≥ 1/2 (principal branch of each factor; only exp of it is used).
fn ln_gamma_right(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// log sin(πs), evaluated without forming e^{π|Im s|} explicitly.
pub(crate) fn ln_sin_pi(s: Complex64) -> Complex64 {
    let i = Complex64::i();
    if (PI * s.im).abs() < 20.0 {
        return (PI * s).sin().ln();
    }
    if s.im > 0.0 {
        // sin(πs) = e^{−iπs}(e^{2iπs} − 1)/(2i)
        -i * PI * s + (((2.0 * i * PI * s).exp() - 1.0) / (2.0 * i)).ln()
    } else {
        // sin(πs) = e^{iπs}(1 − e^{−2iπs})/(2i)
        i * PI * s + ((1.0 - (-2.0 * i * PI * s).exp()) / (2.0 * i)).ln()
    }
}

/// A logarithm of Γ(s) (branch unspecified), valid away from the poles.
pub fn ln_gamma_c(s: ComplexValue) -> Result<ComplexValue> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole { re: s.re, im: s.im });
    }
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s))
    } else {
        Ok(PI.ln() - ln_sin_pi(s) - ln_gamma_right(1.0 - s))
    }
}

/// Γ(s) for complex s.
pub fn gamma_c(s: ComplexValue) -> Result<ComplexValue> {
    if s.im == 0.0 && s.re >= 0.5 && s.re <= 171.0 {
        // Keep real inputs exactly real.
        return Ok(Complex64::new(ln_gamma_right(s).exp().re, 0.0));
    }
    Ok(ln_gamma_c(s)?.exp())
}

/// ζ(s) by Euler–Maclaurin summation.
pub fn zeta_c(s: ComplexValue, cfg: &ZetaConfig) -> Result<ComplexValue> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    let n = cfg.cutoff_for(s);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    let coeffs = bernoulli_over_factorial();
    // Rising product s(s+1)…(s+2j−2) times N^{−s−2j+1}.
    let mut rising = s;
    let mut power = n_pow / nf;
    for (j, c) in coeffs.iter().take(cfg.bernoulli_terms).enumerate() {
        if j > 0 {
            let base = s + (2 * j - 1) as f64;
            rising = rising * base * (base + 1.0);
            power /= nf * nf;
        }
        sum += rising * power * *c;
    }
    Ok(sum)
}

/// ζ′(s) by term-by-term differentiation of the Euler–Maclaurin formula.
pub fn zeta_prime(s: ComplexValue, cfg: &ZetaConfig) -> Result<ComplexValue> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    let n = cfg.cutoff_for(s);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 2..n {
        let ln_k = (k as f64).ln();
        sum -= (-s * ln_k).exp() * ln_k;
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp();
    let head = n_pow * nf / (s - 1.0);
    sum += -head * ln_n - head / (s - 1.0) - n_pow * (0.5 * ln_n);
    let coeffs = bernoulli_over_factorial();
    let mut rising = s;
    let mut rising_d = Complex64::new(1.0, 0.0);
    let mut power = n_pow / nf;
    for (j, c) in coeffs.iter().take(cfg.bernoulli_terms).enumerate() {
        if j > 0 {
            for step in [2 * j - 1, 2 * j] {
                let base = s + step as f64;
                rising_d = rising_d * base + rising;
                rising *= base;
            }
            power /= nf * nf;
        }
        sum += (rising_d - rising * ln_n) * power * *c;
    }
    Ok(sum)
}

/// χ(s) = 2(2π)^{s−1} Γ(1−s) sin(πs/2), assembled in log space.
pub fn chi(s: ComplexValue) -> Result<ComplexValue> {
    if s.im == 0.0 && s.re >= 1.0 && s.re == s.re.round() {
        return Err(Error::Domain(format!("chi({}) meets a pole of Gamma(1 - s)", s.re)));
    }
    let ln = 2f64.ln() + (s - 1.0) * (2.0 * PI).ln() + ln_gamma_c(1.0 - s)? + ln_sin_pi(s * 0.5);
    Ok(ln.exp())
}

/// |ζ(s) − 2(2π)^{s−1}Γ(1−s)sin(πs/2)ζ(1−s)| / |ζ(s)|.
pub fn functional_equation_residual(s: ComplexValue, cfg: &ZetaConfig) -> Result<f64> {
    if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
        return Err(Error::Domain(format!("functional equation undefined at s = {}", s.re)));
    }
    let lhs = zeta_c(s, cfg)?;
    let rhs = chi(s)? * zeta_c(1.0 - s, cfg)?;
    if lhs.norm() == 0.0 {
        return Err(Error::Domain("zeta(s) vanishes; relative residual undefined".into()));
    }
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// x^{−ρ} / cos(πρ/2) as one exponential: for Im ρ ≥ 0,
/// cos(πρ/2) = e^{−iπρ/2}(1 + e^{iπρ})/2, so the quotient is 2x^{−ρ}e^{iπρ/2}/(1 + e^{iπρ}).
pub fn power_over_cos_half_pi(x: f64, rho: ComplexValue) -> ComplexValue {
    if rho.im < 0.0 {
        return power_over_cos_half_pi(x, rho.conj()).conj();
    }
    let i = Complex64::i();
    let numerator = (-rho * x.ln() + i * PI * rho * 0.5).exp() * 2.0;
    numerator / (1.0 + (i * PI * rho).exp())
}
