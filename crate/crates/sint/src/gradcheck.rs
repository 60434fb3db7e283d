//! Central finite-difference utilities for verifying analytic gradients.
//!
//! Kept independent of the layer implementations: the checker only evaluates
//! a scalar function at perturbed inputs.

use crate::scalar::Real;

/// Central-difference gradient of `f` at `x` with step `h`.
pub fn finite_diff_grad<S: Real>(x: &[S], h: f64, mut f: impl FnMut(&[S]) -> S) -> Vec<S> {
    let step = S::of(h);
    let mut xs = x.to_vec();
    let mut grad = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let orig = xs[i];
        xs[i] = orig + step;
        let fp = f(&xs);
        xs[i] = orig - step;
        let fm = f(&xs);
        xs[i] = orig;
        grad.push((fp - fm) / (S::of(2.0) * step));
    }
    grad
}

/// Elementwise `|analytic - numeric| / max(1, |analytic|)`, maximized.
pub fn max_rel_err<S: Real>(analytic: &[S], numeric: &[S]) -> f64 {
    assert_eq!(analytic.len(), numeric.len());
    let mut worst = 0.0f64;
    for (a, n) in analytic.iter().zip(numeric) {
        let denom = a.abs().as_f64().max(1.0);
        let err = (a.as_f64() - n.as_f64()).abs() / denom;
        worst = worst.max(err);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_gradient() {
        // f(x) = sum x_i^2, grad = 2x
        let x = [0.3f64, -1.2, 2.0];
        let num = finite_diff_grad(&x, 1e-4, |v| v.iter().map(|t| t * t).sum());
        let ana: Vec<f64> = x.iter().map(|v| 2.0 * v).collect();
        assert!(max_rel_err(&ana, &num) < 1e-8);
    }
}
