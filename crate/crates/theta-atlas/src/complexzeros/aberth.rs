//! Aberth-Ehrlich simultaneous root iteration in double precision.
//!
//! The truncation polynomials handled here have coefficients spanning
//! hundreds of orders of magnitude, so the solver works on a rescaled
//! variable (coefficients are built from exact logarithms) and evaluates
//! Newton ratios through the reversed polynomial outside the unit disk,
//! which keeps every intermediate within f64 range.
//!
//! Double precision localizes the roots to ~1e-13; certification and
//! refinement against the full series happen elsewhere at working precision.

use num_complex::Complex64;

/// Result of the simultaneous iteration.
pub(crate) struct AberthOutcome {
    /// Root approximations in the *scaled* variable.
    pub roots: Vec<Complex64>,
    /// Per-root convergence flags.
    pub converged: Vec<bool>,
}

/// Newton ratio p(w)/p'(w) evaluated stably on both sides of the unit circle.
fn newton_ratio(coeffs: &[f64], w: Complex64) -> Complex64 {
    let n = coeffs.len() - 1;
    if w.norm_sqr() <= 1.0 {
        // direct Horner for p and p'
        let mut p = Complex64::new(coeffs[n], 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for j in (0..n).rev() {
            dp = dp * w + p;
            p = p * w + coeffs[j];
        }
        if dp.norm_sqr() == 0.0 {
            return Complex64::new(f64::NAN, 0.0);
        }
        p / dp
    } else {
        // p(w) = w^n r(u), u = 1/w, r the reversed polynomial;
        // p'/p = (n r - u r') / (w r)  =>  p/p' = w r / (n r - u r')
        // r(u) = sum_k c_{n-k} u^k, Horner visits c_0, c_1, ..., c_n
        let u = w.inv();
        let mut r = Complex64::new(coeffs[0], 0.0);
        let mut dr = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().take(n + 1).skip(1) {
            dr = dr * u + r;
            r = r * u + c;
        }
        let denom = r * (n as f64) - u * dr;
        if denom.norm_sqr() == 0.0 {
            return Complex64::new(f64::NAN, 0.0);
        }
        w * r / denom
    }
}

/// Initial guesses on concentric circles from the upper convex hull of
/// (j, log coefficient); one circle per hull edge.
fn initial_guesses(log_coeffs: &[f64]) -> Vec<Complex64> {
    let n = log_coeffs.len() - 1;
    // upper convex hull of the points (j, log_coeffs[j])
    let mut hull: Vec<usize> = Vec::new();
    for j in 0..=n {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // drop b when it lies below the segment a->j
            let lhs = (log_coeffs[b] - log_coeffs[a]) * (j - a) as f64;
            let rhs = (log_coeffs[j] - log_coeffs[a]) * (b - a) as f64;
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(j);
    }
    let mut guesses = Vec::with_capacity(n);
    for (edge, pair) in hull.windows(2).enumerate() {
        let (k1, k2) = (pair[0], pair[1]);
        let m = k2 - k1;
        // |roots| on this annulus ~ exp of the negated edge slope
        let radius = ((log_coeffs[k1] - log_coeffs[k2]) / m as f64).exp();
        for i in 0..m {
            let angle = std::f64::consts::TAU * (i as f64 + 0.25) / m as f64
                + 0.41 * (edge as f64 + 1.0);
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    debug_assert_eq!(guesses.len(), n);
    guesses
}

/// Runs Aberth-Ehrlich on the polynomial with the given natural-log
/// coefficient magnitudes (all coefficients positive real).
///
/// `log_coeffs[j]` is ln(c_j); coefficients too small for f64 become zero,
/// which is harmless: their influence inside the disk of interest is far
/// below double precision.
pub(crate) fn aberth_all_roots(log_coeffs: &[f64]) -> AberthOutcome {
    let n = log_coeffs.len() - 1;
    let coeffs: Vec<f64> = log_coeffs
        .iter()
        .map(|&l| if l < -700.0 { 0.0 } else { l.exp() })
        .collect();

    let mut roots = initial_guesses(log_coeffs);
    let mut frozen = vec![false; n];
    const MAX_ITERS: usize = 400;
    const EPS: f64 = 1e-13;

    for _ in 0..MAX_ITERS {
        let mut all_done = true;
        for i in 0..n {
            if frozen[i] {
                continue;
            }
            let wi = roots[i];
            let ni = newton_ratio(&coeffs, wi);
            if !ni.re.is_finite() || !ni.im.is_finite() {
                // evaluation glitch: nudge and retry next sweep
                roots[i] = wi * Complex64::new(1.0 + 1e-8, 1e-8);
                all_done = false;
                continue;
            }
            let mut s = Complex64::new(0.0, 0.0);
            for (j, &wj) in roots.iter().enumerate() {
                if j != i {
                    let d = wi - wj;
                    if d.norm_sqr() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - ni * s;
            let step = if denom.norm_sqr() > 1e-60 {
                ni / denom
            } else {
                ni
            };
            let next = wi - step;
            roots[i] = next;
            if step.norm() <= EPS * (1.0 + next.norm()) {
                frozen[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }
    AberthOutcome {
        converged: frozen,
        roots,
    }
}
