//! The spectrum of theta: parameter values q~_k where theta(q,.) acquires a
//! double real zero y_k, and the imaginary-axis machinery built on the
//! even/odd split theta(q,x) = psi_1 + i psi_2 for x = iy, v = q^4.
//!
//! A spectral point solves the fold system theta = d(theta)/dx = 0 in (q, y).
//! Seeds come from the known six-decimal table for k <= 25 and from the
//! asymptotic law q~_k = 1 - pi/2k + ln(k)/8k^2 beyond; since a bad seed can
//! drop the Newton iteration into a neighboring fold, every solution is
//! verified against the window -q^{-2k} < y_k < -q^{-2k+1} that pins the
//! index, with a probe-bisection fallback that localizes the fold from the
//! birth of the pair's negative dip.

use crate::error::{Error, Result};
use crate::num::{Complex, Real};
use crate::precision::{Param, PrecisionConfig};
use crate::realzeros::{find_real_zero, probe_pair_dip_depth};
use crate::series::{eval_theta, fold_jet_raw, theta_extra_bits};

/// Six-decimal spectral values q~_1 .. q~_25 (independent prior computation;
/// used as Newton seeds and cross-checked by the test suite).
pub const SPECTRAL_TABLE_6DP: [&str; 25] = [
    "0.309249", "0.516959", "0.630628", "0.701265", "0.749269", //
    "0.783984", "0.810251", "0.830816", "0.847353", "0.860942", //
    "0.872305", "0.881949", "0.890237", "0.897435", "0.903747", //
    "0.909325", "0.914291", "0.918741", "0.922751", "0.926384", //
    "0.929689", "0.932711", "0.935482", "0.938035", "0.940393",
];

/// Largest spectral index served by [`find_spectral_point`].
pub const MAX_SPECTRAL_INDEX: usize = 40;

/// A fold point: q~_k together with its double zero y_k.
#[derive(Clone, Debug)]
pub struct SpectralPoint {
    pub k: usize,
    pub q_tilde: Real,
    pub y_double: Real,
    /// Certified upper bounds on (|theta|, |theta_x|) at the solution.
    pub residuals: (Real, Real),
}

/// A parameter v* where psi_1(v,.) and psi_2(v,.) share a positive zero, so
/// theta(q*, .) with q* = v*^{1/4} has the purely imaginary zeros +/- i chi.
#[derive(Clone, Debug)]
pub struct ImaginaryAxisSolution {
    pub k2: usize,
    pub v_star: Real,
    pub q_star: Real,
    pub chi: Real,
    /// Certified upper bounds on (|psi_1|, |psi_2|) at (v*, chi).
    pub residuals: (Real, Real),
}

/// Values of (psi_1, psi_2) with their evaluation error bounds.
#[derive(Clone, Debug)]
pub struct PsiPair {
    pub psi1: Real,
    pub psi2: Real,
    pub err1: Real,
    pub err2: Real,
}

/// The asymptotic seed 1 - pi/2k + ln(k)/8k^2.
pub fn spectral_asymptote(k: usize) -> f64 {
    let kf = k as f64;
    1.0 - std::f64::consts::PI / (2.0 * kf) + kf.ln() / (8.0 * kf * kf)
}

struct FoldSolution {
    q: Real,
    y: Real,
    resid_th: Real,
    resid_tx: Real,
    txx_ok: bool,
}

/// Damped Newton for the fold system F(q,y) = (theta, theta_x) = 0.
fn fold_newton(k: usize, q0: &Real, y0: &Real, prec: &PrecisionConfig) -> Result<FoldSolution> {
    let bits = prec.bits() + theta_extra_bits(q0.to_f64(), y0.to_f64().abs());
    let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
    let eps = Real::ten_pow(-(prec.target_digits() as i64), bits);
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let two = Real::from_u64(2, bits);

    let mut q = q0.with_prec(bits);
    let mut y = y0.with_prec(bits);

    let scaled_norm = |jet: &crate::series::FoldJet| -> Real {
        &jet.th.value.abs() / &jet.th.scale + &jet.tx.value.abs() / &jet.tx.scale
    };

    let mut jet = fold_jet_raw(&q, &y, bits, &tail_eps)?;
    for _ in 0..100 {
        let n0 = scaled_norm(&jet);
        let th_done = jet.th.value.abs() <= (&eps * &jet.th.scale).max(&(&two * &jet.th.err));
        let tx_done = jet.tx.value.abs() <= (&eps * &jet.tx.scale).max(&(&two * &jet.tx.err));
        if th_done && tx_done {
            let txx_ok = jet.txx.abs()
                > &Real::ten_pow(-(prec.target_digits() as i64) / 2, bits) * &jet.tx.scale;
            return Ok(FoldSolution {
                q,
                y,
                resid_th: jet.th.value.abs() + jet.th.err.clone(),
                resid_tx: jet.tx.value.abs() + jet.tx.err.clone(),
                txx_ok,
            });
        }

        // J = [[tq, tx], [txq, txx]], solve J d = -F
        let det = &jet.tq * &jet.txx - &jet.tx.value * &jet.txq;
        if det.is_zero() {
            return Err(Error::ConvergenceFailure(format!(
                "singular fold Jacobian for spectral index {k}"
            )));
        }
        let f1 = jet.th.value.clone();
        let f2 = jet.tx.value.clone();
        let mut dq = (&(&f2 * &jet.tx.value) - &(&f1 * &jet.txx)) / &det;
        let mut dy = (&(&f1 * &jet.txq) - &(&f2 * &jet.tq)) / &det;

        // trust region in q keeps the iteration inside (0,1) and in-basin
        let qcap = (&one - &q) * &Real::from_f64(0.25, bits);
        if dq.abs() > qcap {
            let shrink = &qcap / &dq.abs();
            dq = &dq * &shrink;
            dy = &dy * &shrink;
        }

        // halve the step until the scaled residual norm decreases
        let mut lambda = one.clone();
        let mut accepted = None;
        for _ in 0..60 {
            let qn = &q + &(&dq * &lambda);
            let yn = &y + &(&dy * &lambda);
            if qn.is_positive() && qn < one && yn.is_negative() {
                let cand = fold_jet_raw(&qn, &yn, bits, &tail_eps)?;
                if scaled_norm(&cand) < n0 {
                    accepted = Some((qn, yn, cand));
                    break;
                }
            }
            lambda = &lambda * &half;
        }
        match accepted {
            Some((qn, yn, cand)) => {
                q = qn;
                y = yn;
                jet = cand;
            }
            None => {
                return Err(Error::ConvergenceFailure(format!(
                    "fold damping stalled for spectral index {k}"
                )))
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "fold iteration for spectral index {k} exceeded 100 steps"
    )))
}

/// Checks y in (-q^{-2k}, -q^{-2k+1}): the window that identifies the index.
fn in_index_window(k: usize, q: &Real, y: &Real) -> bool {
    let lo = -(q.powi(-(2 * k as i64)));
    let hi = -(q.powi(-(2 * k as i64) + 1));
    y > &lo && y < &hi
}

/// Localizes the fold by bisection on the existence of the pair's negative
/// dip, scanning outward from the seed. Returns (q just below the fold, dip
/// point) to seed Newton in-basin.
fn localize_fold(k: usize, q_seed: f64, prec: &PrecisionConfig) -> Result<(Real, Real)> {
    const STEP: f64 = 0.004;
    const DEPTH: u32 = 8;
    let probe = |qf: f64| -> Result<Option<Real>> {
        if !(0.0 < qf && qf < 1.0) {
            return Err(Error::SeedFailure(format!(
                "fold scan for index {k} left (0,1) at q = {qf:.4}"
            )));
        }
        let q = Param::from_f64(qf, prec)?;
        probe_pair_dip_depth(&q, k, prec, DEPTH)
    };

    let mut lo = None;
    let mut qf = q_seed;
    for _ in 0..60 {
        if let Some(x) = probe(qf)? {
            lo = Some((qf, x));
            break;
        }
        qf -= STEP;
    }
    let (mut lo_q, mut lo_x) =
        lo.ok_or_else(|| Error::SeedFailure(format!("no real pair {k} found below the seed")))?;

    let mut hi_found = None;
    let mut qg = lo_q + STEP;
    for _ in 0..60 {
        if qg >= 1.0 {
            qg = (qg - STEP + 1.0) / 2.0;
        }
        if probe(qg)?.is_none() {
            hi_found = Some(qg);
            break;
        }
        qg += STEP;
    }
    let mut hi_q = hi_found.ok_or_else(|| {
        Error::SeedFailure(format!("pair {k} never turns complex above the seed"))
    })?;

    for _ in 0..30 {
        let mid = (lo_q + hi_q) / 2.0;
        match probe(mid)? {
            Some(x) => {
                lo_q = mid;
                lo_x = x;
            }
            None => hi_q = mid,
        }
    }
    let bits = prec.bits() + theta_extra_bits(lo_q, lo_x.to_f64().abs());
    Ok((Real::from_f64(lo_q, bits), lo_x))
}

/// Computes the k-th spectral point (q~_k, y_k) by a damped two-dimensional
/// Newton iteration on (theta, theta_x), with index verification.
pub fn find_spectral_point(k: usize, prec: &PrecisionConfig) -> Result<SpectralPoint> {
    if k == 0 || k > MAX_SPECTRAL_INDEX {
        return Err(Error::InvalidInput(format!(
            "spectral index must lie in 1..={MAX_SPECTRAL_INDEX}, got {k}"
        )));
    }
    let bits = prec.bits();
    let seed_q = if k <= 25 {
        Real::parse(SPECTRAL_TABLE_6DP[k - 1], bits).expect("table literal")
    } else {
        let a = spectral_asymptote(k);
        if !(0.0 < a && a < 1.0) {
            return Err(Error::SeedFailure(format!(
                "asymptotic seed {a} for index {k} leaves (0,1)"
            )));
        }
        Real::from_f64(a, bits)
    };
    // geometric midpoint of the index window as the y seed
    let e = Real::from_f64(2.0 * k as f64 - 0.5, bits);
    let seed_y = -(seed_q.pow(&(-e)));

    let direct = fold_newton(k, &seed_q, &seed_y, prec);
    let solution = match direct {
        Ok(sol) if in_index_window(k, &sol.q, &sol.y) && sol.txx_ok => sol,
        _ => {
            // wrong basin or no convergence: localize the fold first
            let (q_lo, dip) = localize_fold(k, seed_q.to_f64(), prec)?;
            let sol = fold_newton(k, &q_lo, &dip, prec)?;
            if !in_index_window(k, &sol.q, &sol.y) {
                return Err(Error::ConvergenceFailure(format!(
                    "fold for index {k} converged outside its index window"
                )));
            }
            if !sol.txx_ok {
                return Err(Error::ConvergenceFailure(format!(
                    "second derivative vanishes at the index-{k} fold candidate"
                )));
            }
            sol
        }
    };

    Ok(SpectralPoint {
        k,
        q_tilde: solution.q,
        y_double: solution.y,
        residuals: (solution.resid_th, solution.resid_tx),
    })
}

/// (psi_1, psi_2)(v, y) = (theta(v, -v^{-1/4} y^2), v^{1/4} y theta(v, -v^{1/4} y^2)).
pub fn eval_psi(v: &Param, y: &Real, prec: &PrecisionConfig) -> Result<PsiPair> {
    let bits = prec.bits().max(y.prec());
    let vv = v.at(bits);
    let y = y.with_prec(bits);
    let quarter = Real::from_f64(0.25, bits);
    let vq = vv.pow(&quarter); // v^{1/4}
    let y2 = y.square();

    let a = -(&y2 / &vq);
    let b = -(&y2 * &vq);
    let t1 = eval_theta(v, &Complex::from_real(a), prec)?;
    let t2 = eval_theta(v, &Complex::from_real(b), prec)?;
    let factor = &vq * &y;
    Ok(PsiPair {
        psi1: t1.value.re.clone(),
        psi2: &factor * &t2.value.re,
        err1: t1.abs_error.clone(),
        err2: factor.abs() * &t2.abs_error
            + Real::ten_pow(-(prec.working_digits() as i64 - 2), bits),
    })
}

/// chi_k = v^{1/8} sqrt(-xi*_k) and mu_k = v^{-1/8} sqrt(-xi*_k) for the
/// first `count` real zeros xi*_k of theta(v, .).
pub fn chi_mu_sequences(
    v: &Param,
    count: usize,
    prec: &PrecisionConfig,
) -> Result<(Vec<Real>, Vec<Real>)> {
    let bits = prec.bits();
    let eighth = Real::from_f64(0.125, bits);
    let v8 = v.at(bits).pow(&eighth);
    let mut chi = Vec::with_capacity(count);
    let mut mu = Vec::with_capacity(count);
    for k in 1..=count {
        let z = find_real_zero(v, k, prec)?;
        let root = (-&z.location).sqrt();
        chi.push(&v8 * &root);
        mu.push(&root / &v8);
    }
    Ok((chi, mu))
}

fn chi_of(v: &Param, index: usize, prec: &PrecisionConfig) -> Result<Real> {
    let bits = prec.bits();
    let eighth = Real::from_f64(0.125, bits);
    let v8 = v.at(bits).pow(&eighth);
    let z = find_real_zero(v, index, prec)?;
    Ok(&v8 * &(-&z.location).sqrt())
}

fn mu_of(v: &Param, index: usize, prec: &PrecisionConfig) -> Result<Real> {
    let bits = prec.bits();
    let eighth = Real::from_f64(0.125, bits);
    let v8 = v.at(bits).pow(&eighth);
    let z = find_real_zero(v, index, prec)?;
    Ok(&(-&z.location).sqrt() / &v8)
}

/// Finds v* in (v_lo, v_hi) with mu_{2k2-1}(v*) = chi_{2k2}(v*): the common
/// zero chi of psi_1 and psi_2 there puts +/- i chi on the imaginary axis of
/// theta(q*, .), q* = v*^{1/4}.
pub fn find_imaginary_axis_solution(
    k2: usize,
    v_lo: f64,
    v_hi: f64,
    prec: &PrecisionConfig,
) -> Result<ImaginaryAxisSolution> {
    if k2 == 0 {
        return Err(Error::InvalidInput("k2 starts at 1".into()));
    }
    if !(0.0 < v_lo && v_lo < v_hi && v_hi < 1.0) {
        return Err(Error::InvalidInput(format!(
            "need 0 < v_lo < v_hi < 1, got ({v_lo}, {v_hi})"
        )));
    }
    let idx_mu = 2 * k2 - 1;
    let idx_chi = 2 * k2;
    let gap = |vf: f64| -> Result<Real> {
        let v = Param::from_f64(vf, prec)?;
        Ok(mu_of(&v, idx_mu, prec)? - chi_of(&v, idx_chi, prec)?)
    };

    let g_lo = gap(v_lo)?;
    let g_hi = gap(v_hi)?;
    if !(g_lo.is_negative() && g_hi.is_positive()) {
        return Err(Error::NoCrossing(format!(
            "mu_{idx_mu} - chi_{idx_chi} does not change sign on ({v_lo}, {v_hi}): {g_lo} .. {g_hi}"
        )));
    }

    let mut lo = v_lo;
    let mut hi = v_hi;
    // bisection to roughly half the target digits, then 2D Newton polish
    let v_tol = 10f64.powi(-((prec.target_digits() / 2).min(14) as i32));
    while hi - lo > v_tol * hi.max(1e-3) {
        let mid = (lo + hi) / 2.0;
        if gap(mid)?.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let v_mid = (lo + hi) / 2.0;
    let v0 = Param::from_f64(v_mid, prec)?;
    let y0 = chi_of(&v0, idx_chi, prec)?;
    polish_imaginary_axis(k2, v_mid, &y0, prec)
}

/// Newton polish of the system (psi_1, psi_2)(v, y) = 0.
fn polish_imaginary_axis(
    k2: usize,
    v0: f64,
    y0: &Real,
    prec: &PrecisionConfig,
) -> Result<ImaginaryAxisSolution> {
    let abs_a = y0.to_f64().powi(2) / v0.powf(0.25);
    let bits = prec.bits() + theta_extra_bits(v0, abs_a);
    let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
    let quarter = Real::from_f64(0.25, bits);
    let two = Real::from_u64(2, bits);
    let four = Real::from_u64(4, bits);

    let mut v = Real::from_f64(v0, bits);
    let mut y = y0.with_prec(bits);

    for _ in 0..60 {
        let vq = v.pow(&quarter);
        let y2 = y.square();
        let a = -(&y2 / &vq);
        let b = -(&y2 * &vq);
        let ja = fold_jet_raw(&v, &a, bits, &tail_eps)?;
        let jb = fold_jet_raw(&v, &b, bits, &tail_eps)?;

        let psi1 = ja.th.value.clone();
        let factor = &vq * &y;
        let psi2 = &factor * &jb.th.value;

        let err1 = ja.th.err.clone();
        let err2 = factor.abs() * &jb.th.err;
        let eps = Real::ten_pow(-(prec.target_digits() as i64), bits);
        let done1 = psi1.abs() <= (&eps * &ja.th.scale).max(&(&two * &err1));
        let done2 = psi2.abs() <= (&eps * &(factor.abs() * &jb.th.scale)).max(&(&two * &err2));
        if done1 && done2 {
            let q_star = v.pow(&quarter);
            return Ok(ImaginaryAxisSolution {
                k2,
                v_star: v,
                q_star,
                chi: y,
                residuals: (psi1.abs() + err1, psi2.abs() + err2),
            });
        }

        // d a / d v = y^2 v^{-5/4} / 4,  d b / d v = -y^2 v^{-3/4} / 4
        let da_dv = &(&y2 / &(&vq * &v)) / &four;
        let db_dv = -(&(&y2 * &(&vq / &v)) / &four);
        let da_dy = -(&(&two * &y) / &vq);
        let db_dy = -(&(&two * &y) * &vq);

        let j11 = &ja.tq + &(&ja.tx.value * &da_dv);
        let j12 = &ja.tx.value * &da_dy;
        let dfactor_dv = &(&y * &(&vq / &v)) / &four;
        let j21 =
            &(&dfactor_dv * &jb.th.value) + &(&factor * &(&jb.tq + &(&jb.tx.value * &db_dv)));
        let j22 = &(&vq * &jb.th.value) + &(&factor * &(&jb.tx.value * &db_dy));

        let det = &j11 * &j22 - &j12 * &j21;
        if det.is_zero() {
            return Err(Error::ConvergenceFailure(format!(
                "singular Jacobian while polishing the k2={k2} imaginary-axis solution"
            )));
        }
        let dv = (&(&psi2 * &j12) - &(&psi1 * &j22)) / &det;
        let dy = (&(&psi1 * &j21) - &(&psi2 * &j11)) / &det;
        v = &v + &dv;
        y = &y + &dy;
    }
    Err(Error::ConvergenceFailure(format!(
        "imaginary-axis polish for k2 = {k2} exceeded its iteration budget"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn tol(e: i64) -> Real {
        Real::ten_pow(e, 256)
    }

    #[test]
    fn first_spectral_point_matches_table() {
        let sp = find_spectral_point(1, &prec()).unwrap();
        let expect = Real::parse("0.309249", 256).unwrap();
        assert!(
            (&sp.q_tilde - &expect).abs() < Real::parse("5e-7", 64).unwrap(),
            "q~_1 = {}",
            sp.q_tilde
        );
        // y_1 from an independent fold solve
        let y_expect = Real::parse("-7.50325596424", 256).unwrap();
        assert!(
            (&sp.y_double - &y_expect).abs() < tol(-9),
            "y_1 = {}",
            sp.y_double
        );
        assert!(sp.y_double < Real::from_i64(-5, 64));
    }

    #[test]
    fn spectral_point_rejects_out_of_range_index() {
        assert!(find_spectral_point(0, &prec()).is_err());
        assert!(find_spectral_point(MAX_SPECTRAL_INDEX + 1, &prec()).is_err());
    }

    #[test]
    fn double_zero_sits_in_its_index_window() {
        for k in [2usize, 5, 10] {
            let sp = find_spectral_point(k, &prec()).unwrap();
            assert!(in_index_window(k, &sp.q_tilde, &sp.y_double), "k = {k}");
        }
    }

    #[test]
    fn psi_at_y_zero() {
        let p = prec();
        let v = Param::from_str("0.37", &p).unwrap();
        let pair = eval_psi(&v, &Real::zero(p.bits()), &p).unwrap();
        assert!((&pair.psi1 - &Real::one(256)).abs() <= pair.err1);
        assert!(pair.psi2.is_zero());
    }

    #[test]
    fn psi_reassembles_theta_on_the_imaginary_axis() {
        // theta(q, iy) = psi_1(v, y) + i psi_2(v, y) with v = q^4
        let p = prec();
        let bits = p.bits();
        for (vs, ys) in [("0.2", "2.0"), ("0.45", "1.3"), ("0.07", "0.4")] {
            let v = Param::from_str(vs, &p).unwrap();
            let y = Real::parse(ys, bits).unwrap();
            let pair = eval_psi(&v, &y, &p).unwrap();
            let q = v.at(bits).pow(&Real::from_f64(0.25, bits));
            let qp = Param::from_real(q).unwrap();
            let z = Complex::new(Real::zero(bits), y.clone());
            let th = eval_theta(&qp, &z, &p).unwrap();
            let d1 = (&th.value.re - &pair.psi1).abs();
            let d2 = (&th.value.im - &pair.psi2).abs();
            let budget = &(&th.abs_error + &pair.err1) + &pair.err2;
            assert!(d1 <= budget.clone(), "re mismatch at v={vs}, y={ys}");
            assert!(d2 <= budget, "im mismatch at v={vs}, y={ys}");
        }
    }

    #[test]
    fn chi_mu_ratio_is_exactly_v_quarter() {
        let p = prec();
        let v = Param::from_str("0.3", &p).unwrap();
        let (chi, mu) = chi_mu_sequences(&v, 6, &p).unwrap();
        let vq = v.at(p.bits()).pow(&Real::from_f64(0.25, p.bits()));
        for (c, m) in chi.iter().zip(&mu) {
            assert!((&(c / m) - &vq).abs() < tol(-40));
        }
    }

    #[test]
    fn chi_mu_interlace_for_small_v() {
        // chi_{k-1} < mu_{k-1} < chi_k < mu_k for v = 0.15, k <= 10
        let p = prec();
        let v = Param::from_str("0.15", &p).unwrap();
        let (chi, mu) = chi_mu_sequences(&v, 10, &p).unwrap();
        for k in 0..10 {
            assert!(chi[k] < mu[k], "chi_{} < mu_{}", k + 1, k + 1);
            if k > 0 {
                assert!(mu[k - 1] < chi[k], "mu_{} < chi_{}", k, k + 1);
            }
        }
    }

    #[test]
    fn chi_mu_match_real_zero_composition() {
        let p = prec();
        let v = Param::from_str("0.3", &p).unwrap();
        let (chi, _) = chi_mu_sequences(&v, 3, &p).unwrap();
        let bits = p.bits();
        let v8 = v.at(bits).pow(&Real::from_f64(0.125, bits));
        for (k, c) in chi.iter().enumerate() {
            let xi = find_real_zero(&v, k + 1, &p).unwrap();
            let expect = &v8 * &(-&xi.location).sqrt();
            assert!((c - &expect).abs() < tol(-35));
        }
    }

    #[test]
    fn imaginary_axis_solution_k2_6() {
        // crossing localized independently at v* = 0.78078373598...
        let p = prec();
        let sol = find_imaginary_axis_solution(6, 0.74927, 0.7839839, &p).unwrap();
        let v_expect = Real::parse("0.78078373598169", 256).unwrap();
        assert!(
            (&sol.v_star - &v_expect).abs() < tol(-8),
            "v* = {}",
            sol.v_star
        );
        let chi_expect = Real::parse("4.2426126150149", 256).unwrap();
        assert!((&sol.chi - &chi_expect).abs() < tol(-8), "chi = {}", sol.chi);
        // the common zero really is a zero of theta(q*, i chi)
        let qp = Param::from_real(sol.q_star.clone()).unwrap();
        let z = Complex::new(Real::zero(256), sol.chi.clone());
        let th = eval_theta(&qp, &z, &p).unwrap();
        let budget = &(&sol.residuals.0 + &sol.residuals.1) + &th.abs_error;
        assert!(th.value.abs() <= budget);
        // residual contract
        assert!(sol.residuals.0 < tol(-10));
        assert!(sol.residuals.1 < tol(-10));
    }

    #[test]
    fn imaginary_axis_needs_a_crossing() {
        let p = prec();
        match find_imaginary_axis_solution(6, 0.3, 0.4, &p) {
            Err(Error::NoCrossing(_)) | Err(Error::BracketFailure { .. }) => {}
            other => panic!("expected NoCrossing, got {other:?}"),
        }
    }
}
