//! Fixed 15-point Gauss–Legendre panels and a globally adaptive bisection driver.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use super::QuadValue;
use crate::error::{Error, Result};

pub const GAUSS_POINTS: usize = 15;

/// Nodes and weights of the 15-point Gauss–Legendre rule on [-1, 1].
pub struct GaussRule {
    pub nodes: [f64; GAUSS_POINTS],
    pub weights: [f64; GAUSS_POINTS],
}

/// Legendre P_n(x) and its derivative by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

pub fn gauss_rule() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_POINTS;
        let mut nodes = [0.0; GAUSS_POINTS];
        let mut weights = [0.0; GAUSS_POINTS];
        for i in 0..n {
            // Chebyshev-like starting guess, refined by Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            nodes[i] = -x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        GaussRule { nodes, weights }
    })
}

/// One Gauss–Legendre panel on [a, b].
pub fn gl15<T: QuadValue>(f: &dyn Fn(f64) -> T, a: f64, b: f64) -> T {
    let rule = gauss_rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = T::default();
    for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
        acc = acc + f(mid + half * x) * (w * half);
    }
    acc
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
    left: T,
    right: T,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Refine a panel whose single-rule value is `coarse` by bisection.
fn refine<T: QuadValue>(f: &dyn Fn(f64) -> T, a: f64, b: f64, coarse: T) -> Panel<T> {
    let m = 0.5 * (a + b);
    let left = gl15(f, a, m);
    let right = gl15(f, m, b);
    let value = left + right;
    let error = (value - coarse).magnitude();
    Panel { a, b, value, error, left, right }
}

/// Outcome of a finite-interval adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Adaptive<T> {
    pub value: T,
    pub error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

/// Globally adaptive integration on [a, b]: the panel with the largest local error is bisected
/// until the summed error meets `max(abs_tol, rel_tol·|I|)` or `max_panels` is reached.
pub fn adaptive<T: QuadValue>(
    f: &dyn Fn(f64) -> T,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Adaptive<T> {
    if a == b {
        return Adaptive { value: T::default(), error: 0.0, evaluations: 0, converged: true };
    }
    let coarse = gl15(f, a, b);
    let first = refine(f, a, b, coarse);
    let mut evaluations = 3 * GAUSS_POINTS;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    loop {
        let target = abs_tol.max(rel_tol * value.magnitude());
        if error <= target {
            return Adaptive { value, error, evaluations, converged: true };
        }
        if heap.len() >= max_panels {
            return Adaptive { value, error, evaluations, converged: false };
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let m = 0.5 * (worst.a + worst.b);
        let left = refine(f, worst.a, m, worst.left);
        let right = refine(f, m, worst.b, worst.right);
        evaluations += 4 * GAUSS_POINTS;
        value = value - worst.value + left.value + right.value;
        error = error - worst.error + left.error + right.error;
        if error < 0.0 {
            error = heap.iter().map(|p| p.error).sum::<f64>() + left.error + right.error;
        }
        if !(m > worst.a && m < worst.b) {
            // Interval collapsed to machine resolution.
            heap.push(left);
            heap.push(right);
            return Adaptive { value, error, evaluations, converged: false };
        }
        heap.push(left);
        heap.push(right);
    }
}

/// Adaptive integration that fails with an accuracy error when the tolerance is not met.
pub fn adaptive_checked(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_panels: usize,
) -> Result<Adaptive<f64>> {
    let out = adaptive(f, a, b, abs_tol, rel_tol, max_panels);
    if out.converged {
        Ok(out)
    } else {
        Err(Error::Accuracy { best: out.value, estimate: out.error })
    }
}
