//! Levin u-transform for accelerating slowly convergent or alternating partial sums.

/// Levin u-transform of the partial sums `sums[0..=k]` whose increments are `terms`
/// (`terms[j] = sums[j] - sums[j-1]`, `terms[0] = sums[0]`). `offset` is the index of
/// `sums[0]` in the full sequence. Returns `None` when a remainder estimate vanishes.
pub fn levin_u(sums: &[f64], terms: &[f64], offset: usize) -> Option<f64> {
    debug_assert_eq!(sums.len(), terms.len());
    let k = sums.len().checked_sub(1)?;
    if k == 0 {
        return Some(sums[0]);
    }
    let beta = 1.0;
    let n = offset as f64;
    let last = n + k as f64 + beta;
    let mut num = 0.0;
    let mut den = 0.0;
    let mut binom = 1.0;
    for j in 0..=k {
        let omega = (n + j as f64 + beta) * terms[j];
        if omega == 0.0 || !omega.is_finite() {
            return None;
        }
        let ratio = ((n + j as f64 + beta) / last).powi(k as i32 - 1);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * binom * ratio / omega;
        num += c * sums[j];
        den += c;
        binom = binom * (k - j) as f64 / (j + 1) as f64;
    }
    let v = num / den;
    v.is_finite().then_some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partials(terms: &[f64]) -> Vec<f64> {
        terms
            .iter()
            .scan(0.0, |acc, t| {
                *acc += t;
                Some(*acc)
            })
            .collect()
    }

    #[test]
    fn alternating_harmonic_series() {
        let terms: Vec<f64> = (1..=12).map(|k| if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64).collect();
        let sums = partials(&terms);
        let v = levin_u(&sums, &terms, 0).unwrap();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-10, "{v}");
    }

    #[test]
    fn logarithmic_series_basel() {
        let terms: Vec<f64> = (1..=14).map(|k| 1.0 / (k * k) as f64).collect();
        let sums = partials(&terms);
        let v = levin_u(&sums, &terms, 0).unwrap();
        let exact = std::f64::consts::PI.powi(2) / 6.0;
        assert!((v - exact).abs() < 1e-8, "{v}");
    }
}
