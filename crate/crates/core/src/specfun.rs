//! Real special and arithmetic functions: the Möbius sieve, fractional part, sine integral,
//! Riemann's R through the Gram series, and the Möbius–exponential series
//! Δ(y) = Σ μ(n)/n · e^{−y/n}.
//!
//! The Gram-type series carry large alternating terms for negative arguments, so they are
//! summed in double-double arithmetic with ζ(k+1) also evaluated to double-double accuracy.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;
use twofloat::TwoFloat;

use crate::complexfun::{gamma_c, zeta_c, ZetaConfig, BERNOULLI_EVEN};
use crate::error::{Error, Result};
use crate::quadrature::gauss::{gauss_rule, GAUSS_POINTS};

/// Largest |argument| accepted by the Gram-type series.
pub const SERIES_ARGUMENT_LIMIT: f64 = 45.0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    limit: usize,
    // values[0] is unused so that values[n] = μ(n).
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// μ(n) for 1 ≤ n ≤ limit.
    pub fn get(&self, n: usize) -> i8 {
        assert!((1..=self.limit).contains(&n), "n = {n} outside 1..={}", self.limit);
        self.values[n]
    }

    /// μ(1), μ(2), …, μ(limit).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }

    /// Mertens function M(n) = Σ_{k ≤ n} μ(k).
    pub fn mertens(&self, n: usize) -> i64 {
        self.values[1..=n].iter().map(|&v| i64::from(v)).sum()
    }
}

/// μ(1..=limit) by the linear sieve.
pub fn mobius_sieve(limit: usize) -> Result<MobiusTable> {
    if limit == 0 {
        return Err(Error::Domain("Mobius sieve limit must be at least 1".into()));
    }
    let mut values = vec![0i8; limit + 1];
    let mut composite = vec![false; limit + 1];
    let mut primes: Vec<usize> = Vec::new();
    values[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            values[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > limit {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                values[m] = 0;
                break;
            }
            values[m] = -values[i];
        }
    }
    Ok(MobiusTable { limit, values })
}

/// {t} = t − ⌊t⌋.
pub fn fractional_part(t: f64) -> f64 {
    let r = t - t.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Si(x) = ∫₀^x sin(u)/u du.
pub fn sine_integral(x: f64) -> f64 {
    if x < 0.0 {
        return -sine_integral(-x);
    }
    if x <= 2.0 {
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut k = 0.0;
        loop {
            k += 1.0;
            term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
            let add = term / (2.0 * k + 1.0);
            sum += add;
            if add.abs() <= 1e-17 * sum.abs() {
                return sum;
            }
        }
    }
    // Continued fraction for E₁(ix); Si(x) = π/2 + Im(e^{−ix}·CF).
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..200 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(x.cos(), -x.sin());
    PI / 2.0 + h.im
}

/// Truncation policy for the Gram-type series.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GramSeriesConfig {
    pub max_terms: usize,
    pub term_tolerance: f64,
}

impl Default for GramSeriesConfig {
    fn default() -> Self {
        Self { max_terms: 200, term_tolerance: 1e-16 }
    }
}

impl GramSeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms == 0 || !(self.term_tolerance > 0.0) {
            return Err(Error::Domain("Gram series needs max_terms >= 1 and term_tolerance > 0".into()));
        }
        Ok(())
    }
}

fn dd(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

// TwoFloat / TwoFloat in twofloat only keeps about f64 accuracy; long division restores it.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    dd(q1) + q2 + q3
}

/// ζ(n) for integer n ≥ 2 to double-double accuracy (Euler–Maclaurin at N = 24).
fn zeta_integer_uncached(n: u32) -> TwoFloat {
    const N: u32 = 24;
    let nf = f64::from(n);
    let mut sum = dd(1.0);
    for m in 2..N {
        if nf * f64::from(m).ln() > 700.0 {
            break;
        }
        sum += (dd(1.0) / f64::from(m)).powi(n as i32);
    }
    if nf * f64::from(N).ln() > 700.0 {
        return sum;
    }
    let big = f64::from(N);
    let n_pow = (dd(1.0) / big).powi(n as i32); // N^{−n}
    sum += n_pow * big / (nf - 1.0) + n_pow * 0.5;
    let mut fact = dd(1.0);
    let mut rising = dd(nf);
    let mut power = n_pow / big;
    for (j, (num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let m = 2 * (j + 1);
        fact = fact * ((m - 1) * m) as f64;
        if j > 0 {
            let base = nf + (2 * j - 1) as f64;
            rising = rising * base * (base + 1.0);
            power = power / (big * big);
        }
        let coeff = dd_div(dd(*num) / *den, fact);
        sum += coeff * rising * power;
    }
    sum
}

const ZETA_TABLE_LEN: usize = 512;

/// ζ(n), n ≥ 2, in double-double.
pub(crate) fn zeta_integer(n: u32) -> TwoFloat {
    static TABLE: OnceLock<Vec<TwoFloat>> = OnceLock::new();
    assert!(n >= 2, "zeta_integer needs n >= 2");
    if (n as usize) < ZETA_TABLE_LEN {
        let table = TABLE.get_or_init(|| {
            (0..ZETA_TABLE_LEN as u32)
                .map(|k| if k < 2 { dd(f64::NAN) } else { zeta_integer_uncached(k) })
                .collect()
        });
        table[n as usize]
    } else {
        zeta_integer_uncached(n)
    }
}

/// ζ(n) for integer n ≥ 2 in working precision.
pub fn zeta_integer_f64(n: u32) -> f64 {
    f64::from(zeta_integer(n))
}

fn check_budget(arg: f64, what: &str) -> Result<()> {
    let a = arg.abs();
    if !arg.is_finite() || a > SERIES_ARGUMENT_LIMIT {
        let peak = a - 0.5 * (2.0 * PI * a).ln();
        return Err(Error::Precision {
            what: format!("{what} at argument {arg} exceeds |argument| <= {SERIES_ARGUMENT_LIMIT}"),
            loss_digits: peak / std::f64::consts::LN_10,
        });
    }
    Ok(())
}

/// Σ_{k≥1} u^k/k! · coeff(k) in double-double, starting from `start`.
fn exponential_type_series(
    u: f64,
    start: f64,
    coeff: impl Fn(u32) -> TwoFloat,
    cfg: &GramSeriesConfig,
) -> f64 {
    let mut power = dd(1.0);
    let mut sum = dd(start);
    for k in 1..=cfg.max_terms as u32 {
        power = power * u / f64::from(k);
        let term = power * coeff(k);
        sum += term;
        // Terms only shrink monotonically once k exceeds |u|.
        if f64::from(k) > u.abs() && term.hi().abs() <= cfg.term_tolerance * sum.hi().abs() {
            break;
        }
    }
    f64::from(sum)
}

/// R(e^u) = 1 + Σ_{k≥1} u^k / (k · k! · ζ(k+1)).
pub fn riemann_r_exp(u: f64, cfg: &GramSeriesConfig) -> Result<f64> {
    cfg.validate()?;
    check_budget(u, "Gram series")?;
    Ok(exponential_type_series(u, 1.0, |k| dd_div(dd(1.0), zeta_integer(k + 1) * f64::from(k)), cfg))
}

/// Δ(y) = Σ_{n≥1} μ(n)/n · e^{−y/n}, evaluated through the entire series
/// Σ_{k≥1} (−y)^k / (k! · ζ(k+1)).
pub fn mobius_exponential(y: f64, cfg: &GramSeriesConfig) -> Result<f64> {
    cfg.validate()?;
    if y < 0.0 || y.is_nan() {
        return Err(Error::Domain(format!("mobius_exponential needs y >= 0, got {y}")));
    }
    check_budget(y, "Mobius-exponential series")?;
    Ok(exponential_type_series(-y, 0.0, |k| dd_div(dd(1.0), zeta_integer(k + 1)), cfg))
}

/// Δ(y) from its Mellin–Barnes representation
/// Δ(y) = (1/2πi) ∫_{(−1/2)} Γ(s) y^{−s} / ζ(1−s) ds,
/// with the line nodes and Γ(s)/ζ(1−s) weights precomputed once. Accurate in absolute terms
/// for all y > 0; used beyond the reach of the entire series.
#[derive(Debug, Clone)]
pub struct MobiusExponentialLine {
    nodes: Vec<(Complex64, Complex64)>,
}

impl MobiusExponentialLine {
    const ABSCISSA: f64 = -0.5;
    const HEIGHT: f64 = 50.0;
    const PANEL_WIDTH: f64 = 0.5;

    pub fn new(zeta_cfg: &ZetaConfig) -> Result<Self> {
        let rule = gauss_rule();
        let panels = (Self::HEIGHT / Self::PANEL_WIDTH) as usize;
        let half = 0.5 * Self::PANEL_WIDTH;
        let mut nodes = Vec::with_capacity(panels * GAUSS_POINTS);
        for p in 0..panels {
            let mid = (p as f64 + 0.5) * Self::PANEL_WIDTH;
            for i in 0..GAUSS_POINTS {
                let s = Complex64::new(Self::ABSCISSA, mid + half * rule.nodes[i]);
                let weight = gamma_c(s)? / zeta_c(1.0 - s, zeta_cfg)? * (rule.weights[i] * half / PI);
                nodes.push((s, weight));
            }
        }
        Ok(Self { nodes })
    }

    pub fn eval(&self, y: f64) -> f64 {
        let ln_y = y.ln();
        self.nodes.iter().map(|(s, w)| (w * (-s * ln_y).exp()).re).sum()
    }
}

/// Δ(y) on all of [0, ∞): entire series up to `switch`, Mellin–Barnes line beyond.
#[derive(Debug, Clone)]
pub struct MobiusExponential {
    pub series: GramSeriesConfig,
    pub switch: f64,
    line: MobiusExponentialLine,
}

impl MobiusExponential {
    pub fn new(series: GramSeriesConfig, zeta_cfg: &ZetaConfig) -> Result<Self> {
        Ok(Self { series, switch: 30.0, line: MobiusExponentialLine::new(zeta_cfg)? })
    }

    pub fn eval(&self, y: f64) -> f64 {
        if y <= self.switch {
            mobius_exponential(y, &self.series).unwrap_or(f64::NAN)
        } else {
            self.line.eval(y)
        }
    }
}
