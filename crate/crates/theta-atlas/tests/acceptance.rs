//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion summaries. Criteria 2 and 11 compare against printed values
//! whose source digits are off by a few units in the last place; those tests
//! assert the quoted numbers as stated and the assertion messages carry the
//! measured discrepancies.

use std::sync::OnceLock;
use std::time::Instant;

use theta_atlas::complexzeros::{count_pairs, find_all_zeros};
use theta_atlas::num::{Complex, Real};
use theta_atlas::precision::{Param, PrecisionConfig};
use theta_atlas::regions::{
    check_c1_coefficient_argument, check_propmain, check_tau_lemma, eval_s, eval_w,
    proof_constants, verify_theorem, RegionReport, TheoremId,
};
use theta_atlas::series::{eval_theta, eval_theta_star};
use theta_atlas::spectrum::{
    find_imaginary_axis_solution, find_spectral_point, SpectralPoint, SPECTRAL_TABLE_6DP,
};

fn prec() -> PrecisionConfig {
    PrecisionConfig::default()
}

fn r(s: &str) -> Real {
    Real::parse(s, 256).unwrap()
}

fn tol(e: i64) -> Real {
    Real::ten_pow(e, 256)
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    (0..n).map(|i| lo + step * i as f64).collect()
}

fn spectral_points_1_to_25() -> &'static Vec<SpectralPoint> {
    static POINTS: OnceLock<Vec<SpectralPoint>> = OnceLock::new();
    POINTS.get_or_init(|| {
        let p = prec();
        (1..=25)
            .map(|k| find_spectral_point(k, &p).expect("spectral point"))
            .collect()
    })
}

/// The theorem-1/theorem-3 sweep is shared between criteria 8 and 10.
fn t1_t3_sweep() -> &'static (RegionReport, RegionReport, f64) {
    static SWEEP: OnceLock<(RegionReport, RegionReport, f64)> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let p = prec();
        let g = grid(0.32, 0.95, 0.005);
        let start = Instant::now();
        let t1 = verify_theorem(TheoremId::T1, &g, 55.0, &p).expect("T1 sweep");
        let t3 = verify_theorem(TheoremId::T3, &g, 55.0, &p).expect("T3 sweep");
        (t1, t3, start.elapsed().as_secs_f64())
    })
}

#[test]
fn crit01_spectral_table_to_5e7() {
    let start = Instant::now();
    let points = spectral_points_1_to_25();
    let elapsed = start.elapsed().as_secs_f64();

    let eps = r("5e-7");
    for (k, sp) in points.iter().enumerate() {
        let table = r(SPECTRAL_TABLE_6DP[k]);
        let diff = (&sp.q_tilde - &table).abs();
        assert!(
            diff < eps,
            "q~_{} = {} vs table {} (diff {})",
            k + 1,
            sp.q_tilde,
            SPECTRAL_TABLE_6DP[k],
            diff
        );
    }
    // supporting structure: strictly increasing, double zeros in their index
    // windows, y_15..y_25 inside (-38.9, -5)
    for w in points.windows(2) {
        assert!(w[0].q_tilde < w[1].q_tilde, "spectrum must increase");
    }
    for sp in points {
        let lo = -(sp.q_tilde.powi(-(2 * sp.k as i64)));
        let hi = -(sp.q_tilde.powi(-(2 * sp.k as i64) + 1));
        assert!(sp.y_double > lo && sp.y_double < hi, "window at k={}", sp.k);
        if sp.k >= 15 {
            assert!(sp.y_double > r("-38.9") && sp.y_double < r("-5"));
        }
    }
    assert!(
        elapsed < 120.0,
        "spectral table took {elapsed:.1} s (budget 120 s)"
    );
    println!("criterion 01: PASS (25 spectral values within 5e-7, {elapsed:.1} s)");
}

#[test]
fn crit02_theta_star_reference_values_as_quoted() {
    let p = prec();
    let start = Instant::now();
    let q = Param::from_str("0.5", &p).unwrap();
    let x = Complex::new(Real::zero(p.bits()), Real::from_u64(5, p.bits()));
    let v = eval_theta_star(&q, &x, &p).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "evaluation took {elapsed:.3} s (budget 1 s)");

    let quoted_re = r("-1.542068340");
    let quoted_im = r("0.4429511372");
    let quoted_mod = r("1.604425279");
    let d_re = (&v.value.re - &quoted_re).abs();
    let d_im = (&v.value.im - &quoted_im).abs();
    let d_mod = (v.value.abs() - quoted_mod).abs();

    let ok = d_re < tol(-9) && d_im < tol(-9) && d_mod < tol(-9);
    if ok {
        println!("criterion 02: PASS");
    } else {
        println!(
            "criterion 02: FAIL against the quoted digits: computed {} + {} i (modulus {}); \
             |d_re| = {d_re}, |d_im| = {d_im}, |d_mod| = {d_mod}; the evaluation itself is \
             certified to {} and three independent routes agree on the computed digits",
            v.value.re.to_sci(14),
            v.value.im.to_sci(14),
            v.value.abs().to_sci(14),
            v.abs_error.to_sci(2),
        );
    }
    assert!(
        d_re < tol(-9),
        "Re differs from the quoted -1.542068340 by {d_re} > 1e-9 (computed {})",
        v.value.re.to_sci(14)
    );
    assert!(d_im < tol(-9), "Im differs by {d_im} > 1e-9");
    assert!(d_mod < tol(-9), "modulus differs by {d_mod} > 1e-9");
}

#[test]
fn crit03_zero_pair_at_q08_certified() {
    let p = prec();
    let start = Instant::now();
    let q = Param::from_str("0.8", &p).unwrap();
    let zeros = find_all_zeros(&q, 50.0, &p).unwrap();
    let elapsed = start.elapsed().as_secs_f64();

    let re = r("0.6128998489");
    let im = r("2.37247194");
    let modulus = r("2.450361061");
    let hit = zeros
        .iter()
        .find(|z| (&z.location.re - &re).abs() < tol(-8) && (&z.location.im - &im).abs() < tol(-8))
        .expect("pair near 0.6128998489 + 2.37247194i not found");
    assert!((hit.location.abs() - modulus).abs() < tol(-8));
    assert!(hit.is_certified(), "pair must certify");
    assert!(
        hit.deriv_lower > r("1.25"),
        "derivative lower bound {} must exceed 1.25",
        hit.deriv_lower
    );
    // conjugate partner included
    assert!(zeros
        .iter()
        .any(|z| (&z.location.re - &re).abs() < tol(-8)
            && (&z.location.im + &im).abs() < tol(-8)));
    assert!(elapsed < 10.0, "took {elapsed:.2} s (budget 10 s)");
    println!("criterion 03: PASS ({elapsed:.2} s)");
}

#[test]
fn crit04_near_axis_pairs_and_sign_change() {
    let p = prec();
    let cases = [
        ("0.726", "-0.004522146605", "2.911439535"),
        ("0.727", "0.005050176876", "2.904960208"),
        ("0.7457222066", "0.1780767569", "2.779382065"),
    ];
    let mut res = Vec::new();
    for (qs, res_re, res_im) in cases {
        let q = Param::from_str(qs, &p).unwrap();
        let zeros = find_all_zeros(&q, 50.0, &p).unwrap();
        let re = r(res_re);
        let im = r(res_im);
        let hit = zeros
            .iter()
            .find(|z| {
                (&z.location.re - &re).abs() < tol(-8) && (&z.location.im - &im).abs() < tol(-8)
            })
            .unwrap_or_else(|| panic!("near-axis pair missing at q = {qs}"));
        assert!(hit.is_certified());
        res.push(hit.location.re.clone());
    }
    assert!(res[0].is_negative() && res[1].is_positive(), "the real part must change sign between q = 0.726 and q = 0.727");
    println!("criterion 04: PASS (sign change 0.726 -> 0.727 confirmed)");
}

#[test]
fn crit05_proof_constants() {
    let k = proof_constants(&prec()).unwrap();
    assert!(
        (&k.zeta0 - &r("-2.685347089")).abs() < tol(-8),
        "zeta0 = {}",
        k.zeta0
    );
    assert!(
        (&k.kappa_dagger - &r("6.82551484")).abs() < tol(-7),
        "kappa = {}",
        k.kappa_dagger
    );
    assert!((&k.r0 - &r("1.699895161")).abs() < tol(-8), "r0 = {}", k.r0);
    println!("criterion 05: PASS");
}

#[test]
fn crit06_tau_values_to_1e9() {
    let rep = check_tau_lemma(&prec()).unwrap();
    assert!(
        (&rep.tau1_at_02 - &r("-0.0197796780")).abs() < tol(-9),
        "tau1(0.2) = {}",
        rep.tau1_at_02
    );
    assert!(
        (&rep.tau2_at_02 - &r("-0.367127390")).abs() < tol(-9),
        "tau2(0.2) = {}",
        rep.tau2_at_02
    );
    assert!(rep.tau1_increasing && rep.tau2_increasing);
    println!("criterion 06: PASS");
}

#[test]
fn crit07_c1_argument_quantities() {
    let p = prec();
    let rep = check_c1_coefficient_argument(&Param::from_str("0.4", &p).unwrap(), &p).unwrap();
    assert!(
        (&rep.phi_at_03 - &r("0.0008803")).abs() < tol(-7),
        "phi(0.3) = {}",
        rep.phi_at_03
    );
    assert!(
        (&rep.phi_at_05 - &r("0.0277")).abs() < tol(-4),
        "phi(0.5) = {}",
        rep.phi_at_05
    );
    let rho0 = Real::from_u64(2, 256).pow(&Real::from_f64(5.5, 256));
    assert!((&rho0 - &r("45.2548")).abs() < tol(-4));
    assert!(
        (&rep.min_difference - &r("0.0230")).abs() < r("5e-4"),
        "min difference = {}",
        rep.min_difference
    );
    assert!((rep.argmin_q - 0.3).abs() < 1e-9, "argmin at q = {}", rep.argmin_q);
    assert!(rep.difference_positive);
    // the second-symmetric-function identity at q = 0.4
    assert!(rep.identity_gap < r("1e-6"), "gap = {}", rep.identity_gap);
    println!("criterion 07: PASS");
}

#[test]
fn crit08_theorem1_sweep() {
    let (t1, _, elapsed) = t1_t3_sweep();
    assert!(
        t1.violations.is_empty(),
        "T1 violations: {:?}",
        t1.violations
    );
    assert!(
        t1.max_modulus_right < 5.0 && t1.max_modulus_right > 1.0,
        "max right-half-plane modulus {}",
        t1.max_modulus_right
    );
    assert!(
        *elapsed < 1800.0,
        "sweep took {elapsed:.0} s (budget 30 min)"
    );
    println!(
        "criterion 08: PASS (127-point sweep, worst margin {:.4}, max right modulus {:.6}, {elapsed:.0} s for T1+T3)",
        t1.worst_margin, t1.max_modulus_right
    );
}

#[test]
fn crit09_theorem2b_sweep() {
    let p = prec();
    let mut g = grid(0.05, 0.66, 0.01);
    g.push(0.6687); // the boundary of the proven interval, q <= 0.2^{1/4}
    let rep = verify_theorem(TheoremId::T2b, &g, 55.0, &p).unwrap();
    assert!(
        rep.violations.is_empty(),
        "T2b violations: {:?}",
        rep.violations
    );
    println!(
        "criterion 09: PASS ({} grid points, no right-half-plane pairs)",
        g.len()
    );
}

#[test]
fn crit10_theorem3_sweep() {
    let (_, t3, _) = t1_t3_sweep();
    assert!(
        t3.violations.is_empty(),
        "T3 violations: {:?}",
        t3.violations
    );
    assert!(t3.max_modulus_left < 49.8);
    println!(
        "criterion 10: PASS (empirical max left-half-plane modulus {:.6} < 49.8)",
        t3.max_modulus_left
    );
}

#[test]
fn crit11_s_w_and_derivative_positivity() {
    let p = prec();
    let bits = p.bits();
    let g = grid(0.5, 0.99, 0.01);
    let pi2_3 = Real::pi(bits).square() / Real::from_u64(3, bits);
    let c446 = r("4.46");

    // part (a): |S(q)| <= pi^2/(3 q ln^2 q) at every grid point
    for &qf in &g {
        let q = Param::from_f64(qf, &p).unwrap();
        let s = eval_s(&q, &p).unwrap();
        let qv = q.at(bits);
        let bound = &pi2_3 / &(&qv * &qv.ln().square());
        assert!(s.value.abs() <= bound, "S bound fails at q = {qf}");
    }
    println!("criterion 11a: PASS (S bound on all {} grid points)", g.len());

    // part (c): centered finite difference of |theta_star(q,5i)|^2 positive
    let fd = check_propmain(&g, &p).unwrap();
    assert!(fd.all_positive, "finite differences must be positive");
    assert!(fd.modulus_increasing);
    println!("criterion 11c: PASS (derivative positive on all grid points)");

    // part (b): the claimed W(q) > 4.46/(q ln^2 q), asserted as stated
    let mut min_ratio: Option<Real> = None;
    let mut failures = 0usize;
    for &qf in &g {
        let q = Param::from_f64(qf, &p).unwrap();
        let w = eval_w(&q, &p).unwrap();
        let qv = q.at(bits);
        let normalized = &w.value * &(&qv * &qv.ln().square());
        if normalized <= c446 {
            failures += 1;
        }
        min_ratio = Some(match min_ratio {
            Some(m) => m.min(&normalized),
            None => normalized,
        });
    }
    let min_ratio = min_ratio.unwrap();
    if failures > 0 {
        println!(
            "criterion 11b: FAIL as stated: W(q) q ln^2 q ranges down to {} < 4.46 on {}/{} \
             grid points. The true sum sits near kappa/2 = 3.41; the quoted constant comes \
             from an area argument whose rectangles have width 2, not 1, so the claimed \
             bound overshoots the sum by that factor of two. W > pi^2/3 / (q ln^2 q) does \
             hold, which is what the derivative-positivity statement (part c) needs.",
            min_ratio.to_sci(6),
            failures,
            g.len()
        );
    }
    assert_eq!(
        failures,
        0,
        "W(q) > 4.46/(q ln^2 q) fails on {failures}/{} grid points (min W q ln^2 q = {})",
        g.len(),
        min_ratio.to_sci(6)
    );
    println!("criterion 11b: PASS");
}

#[test]
fn crit12_imaginary_axis_solutions() {
    let p = prec();
    let points = spectral_points_1_to_25();
    let mut chis = Vec::new();
    for k2 in [6usize, 10, 16] {
        let v_hi = points[k2 - 1].q_tilde.to_f64() - 1e-7;
        let v_lo = points[k2 - 2].q_tilde.to_f64() + 1e-4;
        let sol = find_imaginary_axis_solution(k2, v_lo, v_hi, &p).unwrap();
        assert!(
            sol.residuals.0 < tol(-10) && sol.residuals.1 < tol(-10),
            "k2 = {k2}: residuals {} / {}",
            sol.residuals.0,
            sol.residuals.1
        );
        // the appointed zero is purely imaginary: theta(q*, i chi) ~ 0
        let qp = Param::from_real(sol.q_star.clone()).unwrap();
        let z = Complex::new(Real::zero(p.bits()), sol.chi.clone());
        let th = eval_theta(&qp, &z, &p).unwrap();
        assert!(th.value.abs() <= &(&sol.residuals.0 + &sol.residuals.1) + &th.abs_error);
        chis.push(sol.chi.clone());
    }
    let four = Real::from_u64(4, 256);
    let five = Real::from_u64(5, 256);
    let e_half_pi = (Real::pi(256) / Real::from_u64(2, 256)).exp();
    for c in &chis {
        assert!(c > &four && c < &five, "chi = {c} outside (4, 5)");
        assert!(c < &e_half_pi);
    }
    assert!(chis[0] < chis[1] && chis[1] < chis[2], "chi must increase");
    println!(
        "criterion 12: PASS (chi = {}, {}, {} rising toward e^(pi/2) = {})",
        chis[0].to_sci(10),
        chis[1].to_sci(10),
        chis[2].to_sci(10),
        e_half_pi.to_sci(10)
    );
}

#[test]
fn crit13_property_suites() {
    use rand::{Rng, SeedableRng};
    let p = prec();
    let bits = p.bits();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7e7a);

    // residual identities on 1000 random (q, x), q in (0.01, 0.99), |x| <= 50
    for i in 0..1000 {
        let qf: f64 = 0.01 + 0.98 * rng.gen::<f64>();
        let (re, im) = loop {
            let re = 100.0 * rng.gen::<f64>() - 50.0;
            let im = 100.0 * rng.gen::<f64>() - 50.0;
            if re * re + im * im <= 2500.0 && (re != 0.0 || im != 0.0) {
                break (re, im);
            }
        };
        let q = Param::from_f64(qf, &p).unwrap();
        let x = Complex::from_f64s(re, im, bits);
        let rep = theta_atlas::series::check_identities(&q, &x, &p).unwrap();
        assert!(
            rep.all_within_bounds(),
            "identity residuals out of bounds at sample {i}: q = {qf}, x = ({re}, {im})"
        );
    }
    println!("criterion 13: identities PASS on 1000 random samples");

    // bilateral reflection theta_star(q, 1/x) = x theta_star(q, x)
    for _ in 0..200 {
        let qf: f64 = 0.02 + 0.93 * rng.gen::<f64>();
        let (re, im) = (4.0 * rng.gen::<f64>() - 2.0, 4.0 * rng.gen::<f64>() - 2.0);
        if re.abs() < 1e-3 && im.abs() < 1e-3 {
            continue;
        }
        let q = Param::from_f64(qf, &p).unwrap();
        let x = Complex::from_f64s(re, im, bits);
        let a = eval_theta_star(&q, &x.recip(), &p).unwrap();
        let b = eval_theta_star(&q, &x, &p).unwrap();
        let rhs = &x * &b.value;
        let budget = &a.abs_error + &(x.abs() * b.abs_error)
            + Real::ten_pow(-(p.working_digits() as i64 - 4), bits);
        assert!(
            (&a.value - &rhs).abs() <= budget,
            "reflection fails at q = {qf}, x = ({re}, {im})"
        );
    }
    println!("criterion 13: bilateral reflection PASS on 200 random samples");

    // unit-circle zero-freeness: certified |theta| > 0 on |z| = 1
    for qs in ["0.1", "0.3", "0.5", "0.7", "0.9", "0.95"] {
        let q = Param::from_str(qs, &p).unwrap();
        let pi = Real::pi(bits);
        let two = Real::from_u64(2, bits);
        for i in 0..720 {
            let frac = Real::from_f64(i as f64 / 720.0, bits);
            let phi = &(&two * &pi) * &frac;
            let z = Complex::new(phi.cos(), phi.sin());
            let th = eval_theta(&q, &z, &p).unwrap();
            assert!(
                th.value.abs() > th.abs_error,
                "cannot certify theta != 0 at q = {qs}, angle index {i}"
            );
        }
    }
    println!("criterion 13: unit-circle zero-freeness PASS (6 q values x 720 points)");

    // pair count increments by exactly one across each of the first ten
    // spectral values
    let points = spectral_points_1_to_25();
    for k in 1..=10usize {
        let qt = points[k - 1].q_tilde.to_f64();
        let below = Param::from_f64(qt - 1e-4, &p).unwrap();
        let above = Param::from_f64(qt + 1e-4, &p).unwrap();
        let c_below = count_pairs(&below, &p).unwrap();
        let c_above = count_pairs(&above, &p).unwrap();
        assert_eq!(c_below, k - 1, "below q~_{k}");
        assert_eq!(c_above, k, "above q~_{k}");
    }
    println!("criterion 13: PASS (pair count steps by one across q~_1 .. q~_10)");
}
