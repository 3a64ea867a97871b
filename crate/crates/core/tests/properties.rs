use std::f64::consts::PI;

use fox_core::complexfun::{gamma_c, power_over_cos_half_pi, zeta_c, zeta_prime, ZetaConfig};
use fox_core::fox::{fox_residual, FoxKernel};
use fox_core::identities::{registry, run_check, CheckContext};
use fox_core::quadrature::{
    fourier_sine_transform, inverse_mellin_line, mellin_transform_numeric, ContourSpec, Oscillator,
    QuadratureConfig,
};
use fox_core::specfun::{mobius_exponential, mobius_sieve, riemann_r_exp, sine_integral, GramSeriesConfig};
use fox_core::zeros::{alternating_zeta_series, waldvogel_zero_part, zero_sum_f, ZeroSumConfig, ZeroTable};
use num_complex::Complex64;
use proptest::prelude::*;

fn trial_mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

proptest! {
    #[test]
    fn divisor_sum_of_mobius_vanishes_above_one(n in 1u64..100_000) {
        let total: i64 = (1..=n).filter(|d| n % d == 0).map(trial_mobius).sum();
        prop_assert_eq!(total, i64::from(n == 1));
    }

    #[test]
    fn sieve_agrees_with_trial_division(n in 1usize..50_000) {
        let table = mobius_sieve(50_000).unwrap();
        prop_assert_eq!(i64::from(table.get(n)), trial_mobius(n as u64));
    }

    #[test]
    fn zeta_is_conjugate_symmetric(re in -2.0f64..3.0, im in 0.5f64..60.0) {
        let cfg = ZetaConfig::default();
        let s = Complex64::new(re, im);
        let a = zeta_c(s, &cfg).unwrap();
        let b = zeta_c(s.conj(), &cfg).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-14 * a.norm());
    }

    #[test]
    fn gamma_reflection(re in 0.01f64..0.99, im in -50.0f64..50.0) {
        let s = Complex64::new(re, im);
        let lhs = gamma_c(s).unwrap() * gamma_c(1.0 - s).unwrap();
        let rhs = PI / (s * PI).sin();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm(), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn sine_integral_nondecreasing_up_to_pi(a in 0.0f64..PI, b in 0.0f64..PI) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(sine_integral(lo) <= sine_integral(hi));
    }

    #[test]
    fn sine_integral_envelope(x in 10.0f64..1e4) {
        prop_assert!((sine_integral(x) - PI / 2.0).abs() <= 2.0 / x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sine_transform_is_linear(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, x in 0.5f64..5.0) {
        let cfg = QuadratureConfig::default();
        let f = |t: f64| (-t).exp();
        let g = |t: f64| t * (-2.0 * t).exp();
        let combined = |t: f64| alpha * f(t) + beta * g(t);
        let lhs = fourier_sine_transform(&combined, x, &cfg).unwrap().value;
        let rhs = alpha * fourier_sine_transform(&f, x, &cfg).unwrap().value
            + beta * fourier_sine_transform(&g, x, &cfg).unwrap().value;
        prop_assert!((lhs - rhs).abs() < 1e-9 * (1.0 + alpha.abs() + beta.abs()));
    }

    #[test]
    fn residual_is_linear(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, x in 0.5f64..4.0) {
        let cfg = QuadratureConfig::default();
        let kernel = FoxKernel::with_inner_scale(Oscillator::Sine, 2.0, 1.5).unwrap();
        let d1 = |t: f64| (-t).exp();
        let d2 = |t: f64| 1.0 / (1.0 + t).powi(3);
        let f1 = |t: f64| (-t * t).exp();
        let f2 = |t: f64| t.sin();
        let d = |t: f64| alpha * d1(t) + beta * d2(t);
        let f = |t: f64| alpha * f1(t) + beta * f2(t);
        let lhs = fox_residual(&d, &f, &kernel, x, &cfg).unwrap();
        let rhs = alpha * fox_residual(&d1, &f1, &kernel, x, &cfg).unwrap()
            + beta * fox_residual(&d2, &f2, &kernel, x, &cfg).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-8 * (1.0 + alpha.abs() + beta.abs()));
    }
}

#[test]
fn mellin_round_trip_of_decaying_exponential() {
    let cfg = QuadratureConfig::default();
    let forward = |s: Complex64| -> fox_core::Result<Complex64> {
        Ok(mellin_transform_numeric(&|t: f64| (-t).exp(), s, &cfg)?.value)
    };
    let spec = ContourSpec::new(1.0, 40.0);
    for x in [0.5, 1.0, 2.0] {
        let back = inverse_mellin_line(&forward, &spec, x).unwrap().value;
        assert!((back - (-x).exp()).abs() < 1e-6, "x = {x}: {back}");
    }
}

#[test]
fn delta_is_scaled_derivative_of_gram_series() {
    let cfg = GramSeriesConfig::default();
    let h = 1e-5;
    for y in [1.0, 2.0, 5.0] {
        let d = (riemann_r_exp(-y + h, &cfg).unwrap() - riemann_r_exp(-y - h, &cfg).unwrap()) / (2.0 * h);
        let delta = mobius_exponential(y, &cfg).unwrap();
        assert!((delta + y * d).abs() < 1e-6, "y = {y}: {delta} vs {}", -y * d);
    }
}

#[test]
fn alternating_series_is_log_derivative_of_zero_expansion() {
    let table = ZeroTable::bundled().unwrap();
    let cfg = ZeroSumConfig::default();
    let gram = GramSeriesConfig::default();
    let g = |x: f64| {
        PI * waldvogel_zero_part(x, &table, &cfg).unwrap().value - PI * riemann_r_exp(-2.0 * PI * x, &gram).unwrap()
    };
    let h = 1e-4;
    for x in [1.5, 2.0, 3.0] {
        let derivative = (g(x + h) - g(x - h)) / (2.0 * h);
        let series = alternating_zeta_series(x, &cfg).unwrap().value;
        assert!((series + x * derivative).abs() < 1e-6, "x = {x}");
    }
}

#[test]
fn zero_sum_is_log_derivative_of_zero_part() {
    let table = ZeroTable::bundled().unwrap();
    let cfg = ZeroSumConfig::default();
    let h = 1e-4;
    for x in [1.5, 2.0, 3.0] {
        let part = |x: f64| waldvogel_zero_part(x, &table, &cfg).unwrap().value;
        let derivative = (part(x + h) - part(x - h)) / (2.0 * h);
        let f = zero_sum_f(x, &table, &cfg).unwrap().value;
        assert!((f + PI * x * derivative).abs() < 1e-6, "x = {x}");
    }
}

#[test]
fn unpaired_zero_terms_are_real_in_total() {
    let table = ZeroTable::bundled().unwrap();
    let zeta = ZetaConfig::default();
    for x in [0.7, 1.5, 3.0] {
        let mut total = Complex64::new(0.0, 0.0);
        for k in 0..5 {
            for rho in [table.rho(k), table.rho(k).conj()] {
                total += power_over_cos_half_pi(x, rho) / zeta_prime(rho, &zeta).unwrap();
            }
        }
        assert!(total.im.abs() < 1e-12, "x = {x}: {}", total.im);
    }
}

#[test]
fn checks_are_deterministic_and_stable_under_tighter_quadrature() {
    let ctx = CheckContext::new(Some(ZeroTable::bundled().unwrap())).unwrap();
    let mut tight = ctx.clone();
    tight.quad = ctx.quad.scaled(0.5);
    for spec in registry() {
        let first = run_check(&spec, &ctx).unwrap();
        let second = run_check(&spec, &ctx).unwrap();
        let tighter = run_check(&spec, &tight).unwrap();
        assert!(!first.is_empty(), "{} has an empty grid", spec.name);
        for ((a, b), c) in first.iter().zip(&second).zip(&tighter) {
            assert_eq!(a.lhs.to_bits(), b.lhs.to_bits(), "{}", a.name);
            assert_eq!(a.rhs.to_bits(), b.rhs.to_bits(), "{}", a.name);
            assert_eq!(a.pass, c.pass, "{} #{} changes under tighter tolerances", a.name, a.grid_index);
        }
    }
}
