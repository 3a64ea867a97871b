//! Nontrivial zeros of ζ: ingestion and validation of ordinate tables, cached ζ′(ρ), and the
//! sums over zeros that appear in the explicit expansions of R(e^{−2πt}) and of the
//! inhomogeneity f(x) solved by Σ μ(n)/n e^{−x/n}.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::complexfun::{ln_gamma_c, power_over_cos_half_pi, zeta_c, zeta_prime, ZetaConfig};
use crate::error::{Error, Result};
use crate::specfun::zeta_integer_f64;

/// Environment variable naming an alternative zeros file.
pub const ZEROS_PATH_ENV: &str = "FOX_ZEROS_PATH";

const BUNDLED: &str = include_str!("../data/zeros100.txt");
const FIRST_ORDINATE: f64 = 14.134725;
const ANCHOR_TOL: f64 = 1e-6;
const ZERO_TOL: f64 = 1e-6;
const MIN_SIGNIFICANT_DIGITS: usize = 10;

/// Ordinates γ_k of zeros ρ_k = 1/2 + iγ_k with ζ′(ρ_k).
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    pub ordinates: Vec<f64>,
    pub zeta_prime_values: Vec<Complex64>,
    pub source_path: String,
}

impl ZeroTable {
    /// The 100-zero table shipped with the crate.
    pub fn bundled() -> Result<Self> {
        parse_zeros(BUNDLED, "<bundled zeros100.txt>")
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn rho(&self, k: usize) -> Complex64 {
        Complex64::new(0.5, self.ordinates[k])
    }

    /// Keeps the first `n` zeros.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        Self {
            ordinates: self.ordinates[..n].to_vec(),
            zeta_prime_values: self.zeta_prime_values[..n].to_vec(),
            source_path: self.source_path.clone(),
        }
    }
}

/// Reads and validates a zeros file.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: PathBuf::from(path), source })?;
    parse_zeros(&text, &path.display().to_string())
}

/// `FOX_ZEROS_PATH` if set, else the bundled table.
pub fn default_zeros() -> Result<ZeroTable> {
    match std::env::var_os(ZEROS_PATH_ENV) {
        Some(p) if !p.is_empty() => load_zeros(PathBuf::from(p)),
        _ => ZeroTable::bundled(),
    }
}

fn significant_digits(token: &str) -> usize {
    let mantissa = token.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    digits.trim_start_matches('0').len()
}

/// Parses one ordinate per line; blank lines and lines starting with `#` are skipped.
pub fn parse_zeros(text: &str, source: &str) -> Result<ZeroTable> {
    let mut ordinates: Vec<f64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let token = raw.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        let value: f64 = token.parse().map_err(|_| Error::Format {
            line,
            message: format!("not a decimal number: `{token}`"),
        })?;
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::Format { line, message: format!("ordinate must be positive, got {token}") });
        }
        if significant_digits(token) < MIN_SIGNIFICANT_DIGITS {
            return Err(Error::Format {
                line,
                message: format!("`{token}` has fewer than {MIN_SIGNIFICANT_DIGITS} significant digits"),
            });
        }
        if let Some(&prev) = ordinates.last() {
            if value <= prev {
                return Err(Error::Format {
                    line,
                    message: format!("ordinates must ascend strictly: {value} after {prev}"),
                });
            }
        }
        ordinates.push(value);
    }
    if ordinates.is_empty() {
        return Err(Error::Format { line: text.lines().count(), message: "no ordinates found".into() });
    }
    if (ordinates[0] - FIRST_ORDINATE).abs() > ANCHOR_TOL {
        return Err(Error::Validation { ordinate: ordinates[0], modulus: f64::NAN });
    }
    let cfg = ZetaConfig::default();
    let mut zeta_prime_values = Vec::with_capacity(ordinates.len());
    for &gamma in &ordinates {
        let rho = Complex64::new(0.5, gamma);
        let modulus = zeta_c(rho, &cfg)?.norm();
        if !(modulus < ZERO_TOL) {
            return Err(Error::Validation { ordinate: gamma, modulus });
        }
        let d = zeta_prime(rho, &cfg)?;
        if d.norm() == 0.0 || !d.norm().is_finite() {
            return Err(Error::Validation { ordinate: gamma, modulus });
        }
        zeta_prime_values.push(d);
    }
    Ok(ZeroTable { ordinates, zeta_prime_values, source_path: source.to_string() })
}

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t.
pub fn hardy_z(t: f64, cfg: &ZetaConfig) -> Result<f64> {
    let theta = ln_gamma_c(Complex64::new(0.25, 0.5 * t))?.im - 0.5 * t * PI.ln();
    let z = zeta_c(Complex64::new(0.5, t), cfg)?;
    Ok((Complex64::from_polar(1.0, theta) * z).re)
}

/// Bisects a sign change of Z on [lo, hi].
pub fn locate_zero(mut lo: f64, mut hi: f64, cfg: &ZetaConfig) -> Result<f64> {
    let mut z_lo = hardy_z(lo, cfg)?;
    let z_hi = hardy_z(hi, cfg)?;
    if z_lo * z_hi > 0.0 {
        return Err(Error::Domain(format!("Z(t) has no sign change on [{lo}, {hi}]")));
    }
    while hi - lo > 1e-13 * hi {
        let mid = 0.5 * (lo + hi);
        let z_mid = hardy_z(mid, cfg)?;
        if z_mid == 0.0 {
            return Ok(mid);
        }
        if (z_mid < 0.0) == (z_lo < 0.0) {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Truncation policy for the zero sums and the companion ζ(2k+1) series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ZeroSumConfig {
    pub max_zeros: usize,
    pub series_max_k: usize,
}

impl Default for ZeroSumConfig {
    fn default() -> Self {
        Self { max_zeros: 30, series_max_k: 60 }
    }
}

impl ZeroSumConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_zeros == 0 || self.series_max_k == 0 {
            return Err(Error::Domain("max_zeros and series_max_k must be at least 1".into()));
        }
        Ok(())
    }
}

/// A truncated sum with an estimate of what was left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: f64,
    pub tail_estimate: f64,
    pub terms: usize,
}

fn zero_pairs(
    table: &ZeroTable,
    cfg: &ZeroSumConfig,
    term: impl Fn(Complex64, Complex64) -> Complex64,
) -> Result<Truncated> {
    cfg.validate()?;
    if table.is_empty() {
        return Err(Error::Domain("zero table is empty".into()));
    }
    let n = cfg.max_zeros.min(table.len());
    let mut value = 0.0;
    let mut last = 0.0;
    for k in 0..n {
        // ρ and ρ̄ together contribute 2·Re of the upper-half-plane term.
        last = 2.0 * term(table.rho(k), table.zeta_prime_values[k]).re;
        value += last;
    }
    Ok(Truncated { value, tail_estimate: last.abs(), terms: n })
}

/// Contribution of the conjugate pair ρ_k, ρ̄_k to f(x).
pub fn zero_sum_pair_term(x: f64, table: &ZeroTable, k: usize) -> f64 {
    PI * (power_over_cos_half_pi(x, table.rho(k)) / table.zeta_prime_values[k]).re
}

/// f(x) = (π/2) Σ_ρ x^{−ρ} / (cos(πρ/2) ζ′(ρ)), zeros paired with their conjugates.
pub fn zero_sum_f(x: f64, table: &ZeroTable, cfg: &ZeroSumConfig) -> Result<Truncated> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("zero sum needs x > 0, got {x}")));
    }
    zero_pairs(table, cfg, |rho, d| power_over_cos_half_pi(x, rho) / d * (PI / 2.0))
}

/// (1/2) Σ_ρ t^{−ρ} / (ρ cos(πρ/2) ζ′(ρ)).
pub fn waldvogel_zero_part(t: f64, table: &ZeroTable, cfg: &ZeroSumConfig) -> Result<Truncated> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("zero sum needs t > 0, got {t}")));
    }
    zero_pairs(table, cfg, |rho, d| power_over_cos_half_pi(t, rho) / (rho * d) * 0.5)
}

fn odd_zeta_series(
    x: f64,
    cfg: &ZeroSumConfig,
    coeff: impl Fn(usize) -> f64,
) -> Truncated {
    let inv2 = 1.0 / (x * x);
    let mut power = 1.0 / x;
    let mut sum = 0.0;
    let mut last = 0.0;
    let mut terms = 0;
    for k in 1..=cfg.series_max_k {
        power *= inv2;
        last = coeff(k) * power / zeta_integer_f64(2 * k as u32 + 1);
        sum += last;
        terms = k;
        if last.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    Truncated { value: sum, tail_estimate: last.abs(), terms }
}

/// Σ_{k≥1} (−1)^k x^{−2k−1} / ζ(2k+1), the sine transform of Σ μ(n)/n e^{−t/n}.
pub fn alternating_zeta_series(x: f64, cfg: &ZeroSumConfig) -> Result<Truncated> {
    cfg.validate()?;
    if !(x > 1.0) {
        return Err(Error::Domain(format!("series needs x > 1, got {x}")));
    }
    Ok(odd_zeta_series(x, cfg, |k| if k % 2 == 0 { 1.0 } else { -1.0 }))
}

/// Right side of the zero expansion of R(e^{−2πt}):
/// (1/π) Σ_{n≥1} (−1)^{n−1} t^{−2n−1} / ((2n+1) ζ(2n+1)) + (1/2) Σ_ρ t^{−ρ}/(ρ cos(πρ/2) ζ′(ρ)).
pub fn waldvogel_rhs(t: f64, table: &ZeroTable, cfg: &ZeroSumConfig) -> Result<Truncated> {
    cfg.validate()?;
    if !(t > 1.0) {
        return Err(Error::Domain(format!("the zeta(2n+1) series diverges for t <= 1, got {t}")));
    }
    let series = odd_zeta_series(t, cfg, |n| {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sign / ((2 * n + 1) as f64 * PI)
    });
    let zeros = waldvogel_zero_part(t, table, cfg)?;
    Ok(Truncated {
        value: series.value + zeros.value,
        tail_estimate: series.tail_estimate + zeros.tail_estimate,
        terms: series.terms + zeros.terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{riemann_r_exp, GramSeriesConfig};

    fn table() -> ZeroTable {
        ZeroTable::bundled().unwrap()
    }

    #[test]
    fn bundled_table_loads() {
        let t = table();
        assert_eq!(t.len(), 100);
        assert!((t.ordinates[0] - 14.134725142).abs() < 1e-9);
        let located = locate_zero(14.0, 15.0, &ZetaConfig::default()).unwrap();
        assert!((located - t.ordinates[0]).abs() < 1e-9, "{located}");
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(matches!(parse_zeros("", "x"), Err(Error::Format { .. })));
        assert!(matches!(parse_zeros("# only a comment\n", "x"), Err(Error::Format { .. })));
        let shuffled = "21.022039638771554993\n14.134725141734693790\n";
        assert!(matches!(parse_zeros(shuffled, "x"), Err(Error::Format { line: 2, .. })));
        let junk = "14.134725141734693790\nabc\n";
        assert!(matches!(parse_zeros(junk, "x"), Err(Error::Format { line: 2, .. })));
        let short = "14.1347\n";
        assert!(matches!(parse_zeros(short, "x"), Err(Error::Format { line: 1, .. })));
        let not_zero = "14.134725141734693790\n22.000000000000000000\n";
        assert!(matches!(parse_zeros(not_zero, "x"), Err(Error::Validation { .. })));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(load_zeros("/nonexistent/zeros.txt"), Err(Error::Io { .. })));
    }

    #[test]
    fn pair_terms_decay() {
        let t = table();
        let first = zero_sum_pair_term(2.0, &t, 0).abs();
        let second = zero_sum_pair_term(2.0, &t, 1).abs();
        assert!(second < first * 1e-3, "{first} {second}");
    }

    #[test]
    fn zero_sum_truncation_is_stable() {
        let t = table();
        let ten = zero_sum_f(1.5, &t, &ZeroSumConfig { max_zeros: 10, ..Default::default() }).unwrap();
        let thirty = zero_sum_f(1.5, &t, &ZeroSumConfig::default()).unwrap();
        assert!((ten.value - thirty.value).abs() < 1e-10);
        assert_eq!(thirty.terms, 30);
    }

    #[test]
    fn waldvogel_matches_gram_series() {
        let t = table();
        let cfg = ZeroSumConfig::default();
        for x in [1.2, 1.5, 2.0, 3.0] {
            let rhs = waldvogel_rhs(x, &t, &cfg).unwrap().value;
            let lhs = riemann_r_exp(-2.0 * PI * x, &GramSeriesConfig::default()).unwrap();
            assert!((lhs - rhs).abs() < 1e-8, "t={x}: {lhs} {rhs}");
        }
        assert!(waldvogel_rhs(1.0, &t, &cfg).is_err());
    }

    #[test]
    fn waldvogel_zero_terms_past_five_pairs_are_tiny() {
        let t = table();
        let all = waldvogel_zero_part(2.0, &t, &ZeroSumConfig::default()).unwrap().value;
        let five = waldvogel_zero_part(2.0, &t, &ZeroSumConfig { max_zeros: 5, ..Default::default() })
            .unwrap()
            .value;
        assert!((all - five).abs() < 1e-9);
    }

    #[test]
    fn alternating_series_behaviour() {
        let cfg = ZeroSumConfig::default();
        let s2 = alternating_zeta_series(2.0, &cfg).unwrap().value;
        let lead = -0.125 / zeta_integer_f64(3);
        let second = 1.0 / (32.0 * zeta_integer_f64(5));
        // Alternating with decreasing terms: the sum lies between the first two partial sums.
        assert!(s2 > lead && s2 < lead + second, "{s2} {lead}");
        let s50 = alternating_zeta_series(50.0, &cfg).unwrap().value;
        let asym = -(50f64).powi(-3) / zeta_integer_f64(3);
        assert!(((s50 - asym) / asym).abs() < 0.01);
        assert!(alternating_zeta_series(1.0, &cfg).is_err());
    }

    #[test]
    fn conjugate_terms_cancel_in_imaginary_part() {
        let t = table();
        for x in [1.5, 2.0] {
            let mut total = Complex64::new(0.0, 0.0);
            for k in 0..5 {
                let rho = t.rho(k);
                let d = t.zeta_prime_values[k];
                total += power_over_cos_half_pi(x, rho) / d;
                total += power_over_cos_half_pi(x, rho.conj()) / d.conj();
            }
            assert!(total.im.abs() < 1e-12, "{}", total.im);
        }
    }

    #[test]
    fn cached_derivatives_match_finite_differences() {
        let t = table();
        let cfg = ZetaConfig::default();
        for k in 0..5 {
            let rho = t.rho(k);
            let h = 1e-5;
            let fd = (zeta_c(rho + h, &cfg).unwrap() - zeta_c(rho - h, &cfg).unwrap()) / (2.0 * h);
            let d = t.zeta_prime_values[k];
            assert!((fd - d).norm() / d.norm() < 1e-7, "k={k}: {fd} {d}");
        }
    }
}
