//! Geometric region predicates, theorem-verification sweeps, and evaluators
//! for the proof quantities behind the zero-location results.
//!
//! Regions:
//!
//! - half-annulus A: Re x >= 0, 1 < |x| < 5 (containment target for
//!   right-half-plane conjugate pairs)
//! - domain D: |x| <= 3, Re x <= 0, |Im x| <= 3/sqrt(2) (zero-free)
//! - domain E+: (Re x in (-5792.7, 0), |Im x| < 132) union |x| < 18
//! - the log-spiral contour r = e^{|arg|} (Gauss-kernel limit boundary)
//! - plain disks and the left half-disk of radius 49.8
//!
//! The theorem sweeps run the complex-zero pipeline over a q grid and check
//! every certified conjugate pair against the appropriate region, collecting
//! violations, warnings (uncertified near-double zeros) and worst margins.

use rayon::prelude::*;

use crate::complexzeros::{find_all_zeros, CertifiedZero};
use crate::error::{Error, Result};
use crate::num::{Complex, Real};
use crate::precision::{Param, PrecisionConfig};
use crate::series::{eval_theta, eval_theta_star, theta_extra_bits, theta_real_raw};

/// A region of the complex plane used by the verification sweeps.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    HalfAnnulusA,
    DomainD,
    DomainEPlus,
    KatsnelsonInterior,
    Disk { radius: f64 },
    LeftHalfDisk { radius: f64 },
}

/// The left half-disk of the complex-pair containment theorem.
pub const LEFT_HALF_DISK_RADIUS: f64 = 49.8;

/// Theorem selector for [`verify_theorem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// Right-half-plane pairs lie in the half-annulus A.
    T1,
    /// No pairs with non-negative real part for q <= 0.2^{1/4}.
    T2b,
    /// Left-half-plane pairs lie in the open half-disk of radius 49.8.
    T3,
}

/// Exact membership predicate.
pub fn contains(region: &Region, z: &Complex) -> bool {
    let bits = z.prec().max(128);
    match region {
        Region::HalfAnnulusA => {
            let n = z.norm_sqr();
            !z.re.is_negative() && n > Real::one(bits) && n < Real::from_u64(25, bits)
        }
        Region::DomainD => {
            let n = z.norm_sqr();
            let im2 = z.im.square();
            // |Im| <= 3/sqrt(2)  <=>  Im^2 <= 4.5
            n <= Real::from_u64(9, bits)
                && !z.re.is_positive()
                && im2 <= Real::from_f64(4.5, bits)
        }
        Region::DomainEPlus => {
            let strip = z.re > Real::from_f64(-5792.7, bits)
                && z.re.is_negative()
                && z.im.abs() < Real::from_u64(132, bits);
            let disk = z.norm_sqr() < Real::from_u64(18 * 18, bits);
            strip || disk
        }
        Region::KatsnelsonInterior => {
            // inside iff |z| < e^{|arg z|}; the curve (e^t cos t, +/- e^t sin t)
            // has modulus e^t at angle +/- t
            if z.is_zero() {
                return true;
            }
            let rho = z.abs();
            let phi = z.arg().abs();
            rho < phi.exp()
        }
        Region::Disk { radius } => z.norm_sqr() < Real::from_f64(radius * radius, bits),
        Region::LeftHalfDisk { radius } => {
            z.re.is_negative() && z.norm_sqr() < Real::from_f64(radius * radius, bits)
        }
    }
}

/// Signed distance-like margin to the region boundary (positive inside).
/// Euclidean for the circular/half-plane constraints; for the log-spiral
/// contour this is the radial gap e^{|arg z|} - |z|.
pub fn boundary_margin(region: &Region, z: &Complex) -> f64 {
    let (re, im) = z.to_f64s();
    let r = (re * re + im * im).sqrt();
    match region {
        Region::HalfAnnulusA => (r - 1.0).min(5.0 - r).min(re),
        Region::DomainD => (3.0 - r).min(-re).min(3.0 / 2f64.sqrt() - im.abs()),
        Region::DomainEPlus => {
            let strip = (re + 5792.7).min(-re).min(132.0 - im.abs());
            strip.max(18.0 - r)
        }
        Region::KatsnelsonInterior => {
            let phi = im.atan2(re).abs();
            phi.exp() - r
        }
        Region::Disk { radius } => radius - r,
        Region::LeftHalfDisk { radius } => (radius - r).min(-re),
    }
}

/// One verified parameter value inside a [`RegionReport`].
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub q: f64,
    pub zeros: Vec<CertifiedZero>,
}

/// Outcome of a theorem sweep.
#[derive(Debug)]
pub struct RegionReport {
    pub theorem: TheoremId,
    pub region: Region,
    pub q_grid: Vec<f64>,
    pub entries: Vec<SweepEntry>,
    /// (q, zero) pairs violating the containment claim.
    pub violations: Vec<(f64, Complex)>,
    /// Uncertified near-double zeros encountered (not violations).
    pub warnings: Vec<(f64, Complex)>,
    /// Worst containment margin over all checked zeros (positive = inside).
    pub worst_margin: f64,
    /// Largest |z| among certified pairs with Re >= 0 across the sweep.
    pub max_modulus_right: f64,
    /// Largest |z| among certified pairs with Re < 0 across the sweep.
    pub max_modulus_left: f64,
}

impl RegionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Rayon pool sized by THETA_ATLAS_THREADS (default: rayon's own choice).
pub(crate) fn sweep_pool() -> &'static rayon::ThreadPool {
    use std::sync::OnceLock;
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Ok(v) = std::env::var("THETA_ATLAS_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    builder = builder.num_threads(n);
                }
            }
        }
        builder.build().expect("sweep thread pool")
    })
}

/// Sweeps a q grid and checks every certified conjugate pair against the
/// theorem's region. Real zeros are not part of the containment claims (they
/// run off to -infinity); they are still carried in the entries.
pub fn verify_theorem(
    theorem: TheoremId,
    q_grid: &[f64],
    radius_cap: f64,
    prec: &PrecisionConfig,
) -> Result<RegionReport> {
    if q_grid.is_empty() {
        return Err(Error::InvalidInput("empty q grid".into()));
    }
    if !(1.0..=55.0).contains(&radius_cap) {
        return Err(Error::InvalidInput(format!(
            "radius cap must lie in [1, 55], got {radius_cap}"
        )));
    }
    for &q in q_grid {
        if !(0.0 < q && q <= 0.95) {
            return Err(Error::InvalidInput(format!(
                "grid value q = {q} outside (0, 0.95]"
            )));
        }
    }
    let region = match theorem {
        TheoremId::T1 => Region::HalfAnnulusA,
        TheoremId::T2b => Region::HalfAnnulusA, // no pair may even reach Re >= 0
        TheoremId::T3 => Region::LeftHalfDisk {
            radius: LEFT_HALF_DISK_RADIUS,
        },
    };

    let results: Result<Vec<SweepEntry>> = sweep_pool().install(|| {
        q_grid
            .par_iter()
            .map(|&qf| {
                let q = Param::from_f64(qf, prec)?;
                let zeros = find_all_zeros(&q, radius_cap, prec)?;
                Ok(SweepEntry { q: qf, zeros })
            })
            .collect()
    });
    let entries = results?;

    let mut violations = Vec::new();
    let mut warnings = Vec::new();
    let mut worst_margin = f64::INFINITY;
    let mut max_right: f64 = 0.0;
    let mut max_left: f64 = 0.0;

    for entry in &entries {
        for z in &entry.zeros {
            if z.location.im.is_zero() {
                continue; // containment claims concern conjugate pairs
            }
            if !z.is_certified() {
                warnings.push((entry.q, z.location.clone()));
                continue;
            }
            let m = z.location.abs().to_f64();
            let right = !z.location.re.is_negative();
            if right {
                max_right = max_right.max(m);
            } else {
                max_left = max_left.max(m);
            }
            let (checked, margin) = match theorem {
                TheoremId::T1 => {
                    if right {
                        (
                            contains(&region, &z.location),
                            boundary_margin(&region, &z.location),
                        )
                    } else {
                        continue;
                    }
                }
                TheoremId::T2b => {
                    // any pair with Re >= 0 is itself the violation
                    if right {
                        (false, -m)
                    } else {
                        continue;
                    }
                }
                TheoremId::T3 => {
                    if right {
                        continue;
                    } else {
                        (
                            contains(&region, &z.location),
                            boundary_margin(&region, &z.location),
                        )
                    }
                }
            };
            worst_margin = worst_margin.min(margin);
            if !checked {
                violations.push((entry.q, z.location.clone()));
            }
        }
    }
    if worst_margin == f64::INFINITY {
        worst_margin = f64::NAN; // nothing to check (e.g. empty right half-plane)
    }

    Ok(RegionReport {
        theorem,
        region,
        q_grid: q_grid.to_vec(),
        entries,
        violations,
        warnings,
        worst_margin,
        max_modulus_right: max_right,
        max_modulus_left: max_left,
    })
}

/// A real value with a certified absolute error bound.
#[derive(Clone, Debug)]
pub struct RealEvalResult {
    pub value: Real,
    pub abs_error: Real,
    pub terms_used: usize,
}

/// S(q) = -sum_{m>=1} 2m q^{m-1} / (1 - q^m), with a geometric tail bound.
pub fn eval_s(q: &Param, prec: &PrecisionConfig) -> Result<RealEvalResult> {
    let bits = prec.bits();
    let qv = q.at(bits);
    let one = Real::one(bits);
    let two = Real::from_u64(2, bits);
    let stop = Real::ten_pow(-(prec.target_digits() as i64 + 5), bits);

    let mut sum = Real::zero(bits);
    let mut qm1 = one.clone(); // q^{m-1}
    let mut qm = qv.clone(); // q^m
    let mut m = 0usize;
    loop {
        m += 1;
        let term = &(&two * &Real::from_u64(m as u64, bits)) * &(&qm1 / &(&one - &qm));
        sum += &term;
        qm1 = &qm1 * &qv;
        qm = &qm * &qv;
        if term < stop {
            break;
        }
        if m > 2_000_000 {
            return Err(Error::ConvergenceFailure("S series stalled".into()));
        }
    }
    // tail: sum_{m'>m} 2 m' q^{m'-1} / (1-q^{m'})
    //       <= 2/(1-q^{m+1}) * q^m ((m+1) - m q) / (1-q)^2
    let mf = Real::from_u64(m as u64, bits);
    let tail = &(&two / &(&one - &qm))
        * &(&(&qm1 * &(&(&mf + &one) - &(&mf * &qv))) / &(&one - &qv).square());
    let u = prec.unit_roundoff();
    let rounding = Real::from_u64(6 * m as u64 + 6, bits) * &u * &sum;
    Ok(RealEvalResult {
        value: -sum,
        abs_error: tail.abs() + rounding,
        terms_used: m,
    })
}

/// W(q) = sum_{m>=1} ((626/25) + 2 q^{2m}) 2m q^{2m-1} / (1 + (626/25) q^{2m} + q^{4m}).
pub fn eval_w(q: &Param, prec: &PrecisionConfig) -> Result<RealEvalResult> {
    let bits = prec.bits();
    let qv = q.at(bits);
    let one = Real::one(bits);
    let two = Real::from_u64(2, bits);
    let c = Real::from_u64(626, bits) / Real::from_u64(25, bits);
    let stop = Real::ten_pow(-(prec.target_digits() as i64 + 5), bits);
    let q2 = qv.square();

    let mut sum = Real::zero(bits);
    let mut q2m = q2.clone(); // q^{2m}
    let mut m = 0usize;
    loop {
        m += 1;
        let numer = &(&c + &(&two * &q2m)) * &(&two * &Real::from_u64(m as u64, bits));
        let denom = &(&one + &(&c * &q2m)) + &q2m.square();
        let term = &(&numer * &(&q2m / &qv)) / &denom;
        sum += &term;
        q2m = &q2m * &q2;
        if term < stop {
            break;
        }
        if m > 2_000_000 {
            return Err(Error::ConvergenceFailure("W series stalled".into()));
        }
    }
    // tail: numerator <= (626/25 + 2) 2 m', denominator >= 1:
    // sum_{m'>m} m' q^{2m'-1} = (1/q) r^{m+1} ((m+1) - m r) / (1-r)^2, r = q^2
    let mf = Real::from_u64(m as u64, bits);
    let r_pow = &q2m / &qv; // q^{2(m+1)-1} after the final update
    let tail = &(&(&c + &two) * &two)
        * &(&(&r_pow * &(&(&mf + &one) - &(&mf * &q2))) / &(&one - &q2).square());
    let u = prec.unit_roundoff();
    let rounding = Real::from_u64(10 * m as u64 + 10, bits) * &u * &sum;
    Ok(RealEvalResult {
        value: sum,
        abs_error: tail.abs() + rounding,
        terms_used: m,
    })
}

/// Named constants from the derivative-positivity proof.
#[derive(Clone, Debug)]
pub struct ProofConstants {
    /// Unique root of U on (-5, 0): the extremum location of the W integrand.
    pub zeta0: Real,
    /// Integral of the W integrand over (0, inf).
    pub kappa_dagger: Real,
    /// The W integrand evaluated at |zeta0|.
    pub r0: Real,
    /// 2^{11/2}, the modulus bound used in the c_1 coefficient argument.
    pub rho0: Real,
}

/// 625 U(t) = 625 e^{3t} + 7825 t e^{2t} + 23475 e^{2t} + 1250 t e^t
///          + 196563 e^t + 7825 t + 7825.
fn u625(t: &Real) -> Real {
    let bits = t.prec();
    let et = t.exp();
    let e2t = et.square();
    let e3t = &e2t * &et;
    let c = |v: u64| Real::from_u64(v, bits);
    &(&(&c(625) * &e3t) + &(&(&c(7825) * t) * &e2t))
        + &(&(&(&c(23475) * &e2t) + &(&(&c(1250) * t) * &et))
            + &(&(&c(196563) * &et) + &(&(&c(7825) * t) + &c(7825))))
}

/// Integrand of kappa: t ((626/25) e^{-t} + 2 e^{-2t}) / (1 + (626/25) e^{-t} + e^{-2t}).
fn w_integrand(t: &Real) -> Real {
    let bits = t.prec();
    let c = Real::from_u64(626, bits) / Real::from_u64(25, bits);
    let two = Real::from_u64(2, bits);
    let one = Real::one(bits);
    let emt = (-t).exp();
    let em2t = emt.square();
    let numer = t * &(&(&c * &emt) + &(&two * &em2t));
    let denom = &(&one + &(&c * &emt)) + &em2t;
    &numer / &denom
}

fn adaptive_simpson(
    f: &dyn Fn(&Real) -> Real,
    a: &Real,
    b: &Real,
    tol: &Real,
    depth: u32,
) -> Result<Real> {
    let bits = a.prec();
    let half = Real::from_f64(0.5, bits);
    let six = Real::from_u64(6, bits);
    let m = (a + b) * &half;
    let h = b - a;
    let simpson = |fa: &Real, fm: &Real, fb: &Real, width: &Real| -> Real {
        &(width * &(&(fa + fb) + &(&Real::from_u64(4, bits) * fm))) / &six
    };
    let fa = f(a);
    let fm = f(&m);
    let fb = f(b);
    let whole = simpson(&fa, &fm, &fb, &h);

    fn recurse(
        f: &dyn Fn(&Real) -> Real,
        a: &Real,
        m: &Real,
        b: &Real,
        fa: &Real,
        fm: &Real,
        fb: &Real,
        whole: &Real,
        tol: &Real,
        depth: u32,
    ) -> Result<Real> {
        if depth == 0 {
            return Err(Error::QuadratureFailure(
                "adaptive subdivision exhausted its depth budget".into(),
            ));
        }
        let bits = a.prec();
        let half = Real::from_f64(0.5, bits);
        let six = Real::from_u64(6, bits);
        let four = Real::from_u64(4, bits);
        let ml = (a + m) * &half;
        let mr = (m + b) * &half;
        let fml = f(&ml);
        let fmr = f(&mr);
        let hl = m - a;
        let hr = b - m;
        let left = &(&hl * &(&(fa + fm) + &(&four * &fml))) / &six;
        let right = &(&hr * &(&(fm + fb) + &(&four * &fmr))) / &six;
        let total = &left + &right;
        let delta = &total - whole;
        if delta.abs() <= &Real::from_u64(15, bits) * tol {
            return Ok(total + (&delta / &Real::from_u64(15, bits)));
        }
        let tol_half = tol * &half;
        let l = recurse(f, a, &ml, m, fa, &fml, fm, &left, &tol_half, depth - 1)?;
        let r = recurse(f, m, &mr, b, fm, &fmr, fb, &right, &tol_half, depth - 1)?;
        Ok(l + r)
    }
    recurse(f, a, &m, b, &fa, &fm, &fb, &whole, tol, depth)
}

/// Computes zeta_0 (root of U), kappa (the integral), r_0 (integrand at
/// |zeta_0|) and rho_0 = 2^{11/2}.
pub fn proof_constants(prec: &PrecisionConfig) -> Result<ProofConstants> {
    let bits = prec.bits();
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);

    // zeta0 by bisection on (-5, 0)
    let mut lo = Real::from_i64(-5, bits);
    let mut hi = Real::zero(bits);
    if !u625(&lo).is_negative() || !u625(&hi).is_positive() {
        return Err(Error::ConvergenceFailure(
            "U does not change sign on (-5, 0)".into(),
        ));
    }
    let eps = Real::ten_pow(-(prec.target_digits() as i64 + 5), bits);
    while (&hi - &lo).abs() > eps {
        let mid = (&lo + &hi) * &half;
        if u625(&mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let zeta0 = (&lo + &hi) * &half;

    // kappa over (0, T): the tail beyond T is below t 27.04 e^{-t} integrated,
    // i.e. 27.04 (T+1) e^{-T}; T = 60 pushes it under 1e-23
    let t_end = Real::from_u64(60, bits);
    let tail_bound = {
        let c = Real::parse("27.04", bits).unwrap();
        &(&c * &(&t_end + &one)) * &(-&t_end).exp()
    };
    let budget = Real::ten_pow(-12, bits);
    if tail_bound > budget {
        return Err(Error::QuadratureFailure(format!(
            "tail bound {tail_bound} exceeds the 1e-12 budget"
        )));
    }
    let tol = Real::ten_pow(-(prec.target_digits() as i64).min(16) - 2, bits);
    let kappa = adaptive_simpson(&w_integrand, &Real::zero(bits), &t_end, &tol, 40)?;

    let r0 = w_integrand(&zeta0.abs());
    let rho0 = Real::from_u64(2, bits).pow(&Real::from_f64(5.5, bits));
    Ok(ProofConstants {
        zeta0,
        kappa_dagger: kappa,
        r0,
        rho0,
    })
}

/// Finite-difference check of d|theta_star(q, 5i)|^2/dq > 0 on a grid.
#[derive(Clone, Debug)]
pub struct DerivativePositivityReport {
    /// (q, centered finite difference of |theta_star(q,5i)|^2).
    pub derivatives: Vec<(f64, f64)>,
    pub all_positive: bool,
    /// |theta_star(q, 5i)| is increasing across the grid.
    pub modulus_increasing: bool,
}

pub fn check_propmain(q_grid: &[f64], prec: &PrecisionConfig) -> Result<DerivativePositivityReport> {
    if q_grid.is_empty() {
        return Err(Error::InvalidInput("empty q grid".into()));
    }
    let bits = prec.bits();
    let five_i = Complex::new(Real::zero(bits), Real::from_u64(5, bits));
    let h = 1e-6f64;

    let eval_sq = |qf: f64| -> Result<Real> {
        let q = Param::from_f64(qf, prec)?;
        let r = eval_theta_star(&q, &five_i, prec)?;
        Ok(r.value.norm_sqr())
    };

    let values: Result<Vec<(f64, f64, Real)>> = sweep_pool().install(|| {
        q_grid
            .par_iter()
            .map(|&qf| {
                let plus = eval_sq(qf + h)?;
                let minus = eval_sq(qf - h)?;
                let fd = (&plus - &minus) / &Real::from_f64(2.0 * h, bits);
                let base = eval_sq(qf)?;
                Ok((qf, fd.to_f64(), base.sqrt()))
            })
            .collect()
    });
    let values = values?;

    let all_positive = values.iter().all(|(_, fd, _)| *fd > 0.0);
    let modulus_increasing = values.windows(2).all(|w| w[0].2 < w[1].2);
    Ok(DerivativePositivityReport {
        derivatives: values.iter().map(|(q, fd, _)| (*q, *fd)).collect(),
        all_positive,
        modulus_increasing,
    })
}

/// Minimality of |theta_star| on the right-half arc and along the imaginary
/// axis.
#[derive(Clone, Debug)]
pub struct ArcMinimalityReport {
    /// Sample index attaining the arc minimum (0 and samples-1 are -+ B i).
    pub argmin_index: usize,
    pub samples: usize,
    /// The minimum sits within one grid step of an endpoint (+/- Bi).
    pub min_at_axis: bool,
    /// |theta_star(q, R i)| never decreases along R in [5, 50].
    pub radial_nondecreasing: bool,
}

pub fn check_arc_minimality(
    q: &Param,
    b: f64,
    samples: usize,
    prec: &PrecisionConfig,
) -> Result<ArcMinimalityReport> {
    if b < 5.0 {
        return Err(Error::InvalidInput(format!("need B >= 5, got {b}")));
    }
    if samples < 3 {
        return Err(Error::InvalidInput("need at least 3 arc samples".into()));
    }
    let bits = prec.bits();
    let pi = Real::pi(bits);
    let bv = Real::from_f64(b, bits);

    let moduli: Result<Vec<Real>> = sweep_pool().install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                // phi from -pi/2 to +pi/2 inclusive
                let frac = Real::from_f64(i as f64 / (samples - 1) as f64 - 0.5, bits);
                let phi = &pi * &frac;
                let z = Complex::new(&bv * &phi.cos(), &bv * &phi.sin());
                Ok(eval_theta_star(q, &z, prec)?.value.abs())
            })
            .collect()
    });
    let moduli = moduli?;
    let argmin = moduli
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite moduli"))
        .map(|(i, _)| i)
        .expect("nonempty samples");
    let min_at_axis = argmin <= 1 || argmin >= samples - 2;

    let mut radial_nondecreasing = true;
    let mut prev: Option<Real> = None;
    for i in 0..=90 {
        let r = 5.0 + 45.0 * (i as f64) / 90.0;
        let z = Complex::new(Real::zero(bits), Real::from_f64(r, bits));
        let m = eval_theta_star(q, &z, prec)?.value.abs();
        if let Some(p) = prev {
            if m < p {
                radial_nondecreasing = false;
            }
        }
        prev = Some(m);
    }
    Ok(ArcMinimalityReport {
        argmin_index: argmin,
        samples,
        min_at_axis,
        radial_nondecreasing,
    })
}

/// Zero-freeness of the circle |z| = |x0| when |theta(q, x0)| >= 1.
#[derive(Clone, Debug)]
pub struct CircleLemmaReport {
    pub theta_at_x0: Real,
    /// 3/4 when theta(x0) <= -1, 11/20 when theta(x0) >= 1.
    pub floor: f64,
    pub circle_min: Real,
    pub passed: bool,
}

pub fn check_circle_lemma(
    q: &Param,
    x0: &Real,
    samples: usize,
    prec: &PrecisionConfig,
) -> Result<CircleLemmaReport> {
    if !x0.is_negative() || x0 > &Real::from_i64(-5, 64) {
        return Err(Error::InvalidInput(format!("need x0 < -5, got {x0}")));
    }
    if samples < 8 {
        return Err(Error::InvalidInput("need at least 8 circle samples".into()));
    }
    let bits = prec.bits() + theta_extra_bits(q.to_f64(), x0.to_f64().abs());
    let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
    let t0 = theta_real_raw(&q.at(bits), &x0.with_prec(bits), bits, &tail_eps)?;
    if t0.value.abs() < Real::one(bits) {
        return Err(Error::PreconditionUnmet(format!(
            "|theta(q, x0)| = {} < 1",
            t0.value.abs()
        )));
    }
    let floor = if t0.value.is_negative() { 0.75 } else { 0.55 };

    let rho = x0.abs();
    let pi = Real::pi(bits);
    let two = Real::from_u64(2, bits);
    let minima: Result<Vec<Real>> = sweep_pool().install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                let frac = Real::from_f64(i as f64 / samples as f64, bits);
                let phi = &(&two * &pi) * &frac;
                let z = Complex::new(&rho * &phi.cos(), &rho * &phi.sin());
                Ok(eval_theta(q, &z, prec)?.value.abs())
            })
            .collect()
    });
    let minima = minima?;
    let circle_min = minima
        .into_iter()
        .min_by(|a, b| a.partial_cmp(b).expect("finite moduli"))
        .expect("nonempty samples");
    let passed = circle_min > Real::from_f64(floor, bits);
    Ok(CircleLemmaReport {
        theta_at_x0: t0.value,
        floor,
        circle_min,
        passed,
    })
}

/// The second-symmetric-function identity and the half-integer-power
/// majorants from the c_1 containment argument.
#[derive(Clone, Debug)]
pub struct C1CoefficientReport {
    /// Sum over the first 60 zeros of 1/(xi_k xi_m), k < m.
    pub s2: Real,
    /// The matching series coefficient q^3.
    pub q_cubed: Real,
    /// |q^3 - s2| must sit below this (truncation tail allowance).
    pub identity_gap: Real,
    pub identity_budget: Real,
    pub phi_at_03: Real,
    pub phi_at_05: Real,
    /// min over [0.3, 0.5] of q^3 - phi - 1/rho0^2 - delta and its location.
    pub min_difference: Real,
    pub argmin_q: f64,
    pub difference_positive: bool,
}

/// phi(q) = q^6 (1+q^2) / ((1-q^2)(1-q^4)), the majorant of the real-zero
/// part of the second symmetric function.
fn phi_c1(q: &Real) -> Real {
    let bits = q.prec();
    let one = Real::one(bits);
    let q2 = q.square();
    let q4 = q2.square();
    let q6 = &q4 * &q2;
    &(&q6 * &(&one + &q2)) / &(&(&one - &q2) * &(&one - &q4))
}

/// delta(q) = 2^{-9/2} * 2 q^3 / (1 - q^2).
fn delta_c1(q: &Real) -> Real {
    let bits = q.prec();
    let one = Real::one(bits);
    let c = Real::from_u64(2, bits).pow(&Real::from_f64(-4.5, bits));
    let q3 = q.powu(3);
    &(&c * &(&Real::from_u64(2, bits) * &q3)) / &(&one - &q.square())
}

pub fn check_c1_coefficient_argument(
    q: &Param,
    prec: &PrecisionConfig,
) -> Result<C1CoefficientReport> {
    let qf = q.to_f64();
    if !(0.309249 < qf && qf <= 0.5) {
        return Err(Error::InvalidInput(format!(
            "the c_1 argument runs on (q~_1, 0.5], got q = {qf}"
        )));
    }
    let bits = prec.bits();
    let qv = q.at(bits);

    // first 60 zeros: one conjugate pair (q > q~_1) plus 58 real zeros
    let zeros = find_all_zeros(q, 55.0, prec)?;
    let pair: Vec<&CertifiedZero> = zeros
        .iter()
        .filter(|z| !z.location.im.is_zero())
        .collect();
    if pair.len() != 2 {
        return Err(Error::ConvergenceFailure(format!(
            "expected exactly one conjugate pair on (q~_1, 0.5], found {}",
            pair.len() / 2
        )));
    }
    let list = crate::realzeros::list_real_zeros(q, 58, prec)?;
    if list.first_index != 3 || list.zeros.len() != 58 {
        return Err(Error::ConvergenceFailure(
            "real-zero enumeration did not produce xi_3 .. xi_60".into(),
        ));
    }

    let mut inv_sum = Complex::zero(bits);
    let mut inv_sq_sum = Complex::zero(bits);
    for z in &pair {
        let inv = z.location.recip();
        inv_sq_sum = &inv_sq_sum + &(&inv * &inv);
        inv_sum = &inv_sum + &inv;
    }
    for z in &list.zeros {
        let inv = Complex::from_real(z.location.recip());
        inv_sq_sum = &inv_sq_sum + &(&inv * &inv);
        inv_sum = &inv_sum + &inv;
    }
    let half = Real::from_f64(0.5, bits);
    let s2c = (&(&inv_sum * &inv_sum) - &inv_sq_sum).scale(&half);
    let s2 = s2c.re.clone();

    // tail of the omitted zeros k > 60: |1/xi_k| <= q^{k-1} (from the
    // interlacing window), so |sum_{k>60} 1/xi_k| <= q^60/(1-q)
    let one = Real::one(bits);
    let tail_lin = &qv.powu(60) / &(&one - &qv);
    let budget = &(&inv_sum.abs() * &tail_lin) + &tail_lin.square();
    let q3 = qv.powu(3);
    let gap = (&q3 - &s2).abs();

    // the [0.3, 0.5] scan of q^3 - phi - 1/rho0^2 - delta
    let rho0 = Real::from_u64(2, bits).pow(&Real::from_f64(5.5, bits));
    let rho0_inv_sq = rho0.square().recip();
    let diff_at = |x: &Real| -> Real {
        &(&x.powu(3) - &phi_c1(x)) - &(&rho0_inv_sq + &delta_c1(x))
    };
    let mut min_diff: Option<(Real, f64)> = None;
    let n_scan = 200usize;
    for i in 0..=n_scan {
        let xq = 0.3 + 0.2 * (i as f64) / (n_scan as f64);
        let d = diff_at(&Real::from_f64(xq, bits));
        match &min_diff {
            Some((m, _)) if &d >= m => {}
            _ => min_diff = Some((d, xq)),
        }
    }
    let (min_difference, argmin_q) = min_diff.expect("scan is nonempty");
    let difference_positive = min_difference.is_positive();

    Ok(C1CoefficientReport {
        s2,
        q_cubed: q3,
        identity_gap: gap,
        identity_budget: budget + Real::ten_pow(-20, bits),
        phi_at_03: phi_c1(&Real::parse("0.3", bits).unwrap()),
        phi_at_05: phi_c1(&Real::parse("0.5", bits).unwrap()),
        min_difference,
        argmin_q,
        difference_positive,
    })
}

/// tau_1(q) = theta(q, -q^{-1.2}) and tau_2(q) = theta(q, -q^{-1.8}): values
/// at q = 0.2 and monotonicity on (0, 0.2].
#[derive(Clone, Debug)]
pub struct TauLemmaReport {
    pub tau1_at_02: Real,
    pub tau2_at_02: Real,
    pub tau1_increasing: bool,
    pub tau2_increasing: bool,
}

fn tau(q: &Param, exponent: f64, prec: &PrecisionConfig) -> Result<Real> {
    let bits = prec.bits();
    let e = Real::from_f64(exponent, bits);
    let x = -(q.at(bits).pow(&(-e)));
    Ok(eval_theta(q, &Complex::from_real(x), prec)?.value.re.clone())
}

pub fn check_tau_lemma(prec: &PrecisionConfig) -> Result<TauLemmaReport> {
    let q02 = Param::from_str("0.2", prec)?;
    let tau1_at_02 = tau(&q02, 1.2, prec)?;
    let tau2_at_02 = tau(&q02, 1.8, prec)?;

    let mut tau1_increasing = true;
    let mut tau2_increasing = true;
    let mut prev: Option<(Real, Real)> = None;
    for i in 1..=10 {
        let qf = 0.02 * i as f64;
        let q = Param::from_f64(qf, prec)?;
        let t1 = tau(&q, 1.2, prec)?;
        let t2 = tau(&q, 1.8, prec)?;
        if let Some((p1, p2)) = prev {
            if t1 <= p1 {
                tau1_increasing = false;
            }
            if t2 <= p2 {
                tau2_increasing = false;
            }
        }
        prev = Some((t1, t2));
    }
    Ok(TauLemmaReport {
        tau1_at_02,
        tau2_at_02,
        tau1_increasing,
        tau2_increasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::SPECTRAL_TABLE_6DP;

    fn prec() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn param(s: &str) -> Param {
        Param::from_str(s, &prec()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::from_f64s(re, im, 192)
    }

    fn tol(e: i64) -> Real {
        Real::ten_pow(e, 256)
    }

    #[test]
    fn half_annulus_membership() {
        assert!(contains(&Region::HalfAnnulusA, &c(0.0, 3.0)));
        assert!(!contains(&Region::HalfAnnulusA, &c(0.0, 0.5)));
        assert!(!contains(&Region::HalfAnnulusA, &c(-0.1, 3.0)));
        assert!(!contains(&Region::HalfAnnulusA, &c(0.0, 5.0)));
    }

    #[test]
    fn katsnelson_boundary_point() {
        // e^{(pi/4)(1+i)} sits on the contour: radial margin ~ 0
        let v = 1.5508831970898713;
        let z = c(v, v);
        let margin = boundary_margin(&Region::KatsnelsonInterior, &z);
        assert!(margin.abs() < 1e-9, "margin {margin}");
        // horizontal-tangent point e^{(3pi/4)(1+i)}: x = -7.46048853929...
        let w = 7.460488539293396;
        let z2 = c(-w, w);
        let margin2 = boundary_margin(&Region::KatsnelsonInterior, &z2);
        assert!(margin2.abs() < 1e-9, "margin {margin2}");
        // nudging inward/outward flips the sign
        assert!(boundary_margin(&Region::KatsnelsonInterior, &c(-w * 0.99, w * 0.99)) > 0.0);
        assert!(boundary_margin(&Region::KatsnelsonInterior, &c(-w * 1.01, w * 1.01)) < 0.0);
    }

    #[test]
    fn domain_d_stays_left_and_disjoint_from_a() {
        // D is contained in {Re <= 0} and A in {Re >= 0, |z| > 1}
        for (re, im) in [(-1.0, 1.0), (-3.0, 0.0), (0.0, 2.1), (-0.5, -2.0)] {
            let z = c(re, im);
            if contains(&Region::DomainD, &z) {
                assert!(re <= 0.0);
                assert!(!contains(&Region::HalfAnnulusA, &z) || re == 0.0);
            }
        }
        // interior points of A never belong to D
        assert!(contains(&Region::HalfAnnulusA, &c(1.0, 1.5)));
        assert!(!contains(&Region::DomainD, &c(1.0, 1.5)));
    }

    #[test]
    fn s_and_w_reference_values() {
        // frozen from an independent 40-digit summation
        let p = prec();
        let s = eval_s(&param("0.5"), &p).unwrap();
        let expect_s = Real::parse("-10.976135555037953442", 256).unwrap();
        assert!((&s.value - &expect_s).abs() < tol(-15), "S(0.5) = {}", s.value);
        assert!(s.value.is_negative());

        let w = eval_w(&param("0.7"), &p).unwrap();
        let expect_w = Real::parse("38.085141076797634339", 256).unwrap();
        assert!((&w.value - &expect_w).abs() < tol(-15), "W(0.7) = {}", w.value);
        assert!(w.value.is_positive());
    }

    #[test]
    fn s_bound_from_the_integral_majorant() {
        // |S| <= pi^2 / (3 q ln^2 q) across [0.5, 0.99]
        let p = prec();
        let bits = p.bits();
        let pi2_3 = Real::pi(bits).square() / Real::from_u64(3, bits);
        for i in 0..50 {
            let qf = 0.5 + 0.01 * i as f64;
            let q = Param::from_f64(qf, &p).unwrap();
            let s = eval_s(&q, &p).unwrap();
            let qv = q.at(bits);
            let bound = &pi2_3 / &(&qv * &qv.ln().square());
            assert!(s.value.abs() <= bound, "q = {qf}");
        }
    }

    #[test]
    fn w_is_positive_and_s_negative() {
        let p = prec();
        for qs in ["0.5", "0.75", "0.95"] {
            assert!(eval_w(&param(qs), &p).unwrap().value.is_positive());
            assert!(eval_s(&param(qs), &p).unwrap().value.is_negative());
        }
    }

    #[test]
    fn bound_ordering_is_strict() {
        // 4.46 > pi^2/3 = 3.289..., the ordering the proof needs
        let pi2_3 = std::f64::consts::PI.powi(2) / 3.0;
        assert!(4.46 > pi2_3);
    }

    #[test]
    fn proof_constants_match_quoted_values() {
        let k = proof_constants(&prec()).unwrap();
        let zeta0 = Real::parse("-2.6853470887744140934", 256).unwrap();
        assert!((&k.zeta0 - &zeta0).abs() < tol(-9), "zeta0 = {}", k.zeta0);
        let kappa = Real::parse("6.8255148548086963268", 256).unwrap();
        assert!(
            (&k.kappa_dagger - &kappa).abs() < tol(-8),
            "kappa = {}",
            k.kappa_dagger
        );
        let r0 = Real::parse("1.6998951612540974945", 256).unwrap();
        assert!((&k.r0 - &r0).abs() < tol(-9), "r0 = {}", k.r0);
        let rho0 = Real::parse("45.254833995939041561", 256).unwrap();
        assert!((&k.rho0 - &rho0).abs() < tol(-10));
    }

    #[test]
    fn propmain_on_a_short_grid() {
        let grid: Vec<f64> = (0..8).map(|i| 0.5 + 0.07 * i as f64).collect();
        let rep = check_propmain(&grid, &prec()).unwrap();
        assert!(rep.all_positive);
        assert!(rep.modulus_increasing);
        // analytic cross-check: d|T*|^2/dq = |T*|^2 (S + W) at q = 0.6
        let p = prec();
        let q = param("0.6");
        let s = eval_s(&q, &p).unwrap().value;
        let w = eval_w(&q, &p).unwrap().value;
        let bits = p.bits();
        let ts = eval_theta_star(&q, &Complex::new(Real::zero(bits), Real::from_u64(5, bits)), &p)
            .unwrap();
        let analytic = (&ts.value.norm_sqr() * &(&s + &w)).to_f64();
        let fd = rep
            .derivatives
            .iter()
            .find(|(qf, _)| (*qf - 0.6).abs() < 1e-12)
            .map(|(_, v)| *v);
        if let Some(fd) = fd {
            assert!(
                ((fd - analytic) / analytic).abs() < 1e-4,
                "fd {fd} analytic {analytic}"
            );
        }
    }

    #[test]
    fn arc_minimality_at_reference_parameters() {
        let rep = check_arc_minimality(&param("0.5"), 5.0, 721, &prec()).unwrap();
        assert!(rep.min_at_axis, "argmin {}", rep.argmin_index);
        assert!(rep.radial_nondecreasing);
    }

    #[test]
    fn circle_lemma_cases() {
        let p = prec();
        // q = 0.63, x0 = -q^{-15/2}: theta < -1, floor 3/4
        let q = param("0.63");
        let x0 = -(q.at(p.bits()).pow(&Real::from_f64(-7.5, p.bits())));
        let rep = check_circle_lemma(&q, &x0, 720, &p).unwrap();
        assert!(rep.theta_at_x0 < Real::from_i64(-1, 64));
        assert!((rep.floor - 0.75).abs() < 1e-12);
        assert!(rep.passed);

        // q = 0.7, x0 = -q^{-21/2}: theta > 1, floor 11/20
        let q = param("0.7");
        let x0 = -(q.at(p.bits()).pow(&Real::from_f64(-10.5, p.bits())));
        let rep = check_circle_lemma(&q, &x0, 720, &p).unwrap();
        assert!(rep.theta_at_x0 > Real::one(64));
        assert!((rep.floor - 0.55).abs() < 1e-12);
        assert!(rep.passed);
    }

    #[test]
    fn circle_lemma_gates_its_precondition() {
        let p = prec();
        // theta(q, -q^{-m}) lies in (0, q^m): |theta| < 1 there
        let q = param("0.4");
        let x0 = -(q.at(p.bits()).powi(-7));
        match check_circle_lemma(&q, &x0, 64, &p) {
            Err(Error::PreconditionUnmet(_)) => {}
            other => panic!("expected PreconditionUnmet, got {other:?}"),
        }
    }

    #[test]
    fn tau_lemma_values_and_monotonicity() {
        let rep = check_tau_lemma(&prec()).unwrap();
        let t1 = Real::parse("-0.019779678434857462904", 256).unwrap();
        let t2 = Real::parse("-0.3671273902359712538", 256).unwrap();
        assert!((&rep.tau1_at_02 - &t1).abs() < tol(-15));
        assert!((&rep.tau2_at_02 - &t2).abs() < tol(-15));
        assert!(rep.tau1_increasing);
        assert!(rep.tau2_increasing);
    }

    #[test]
    fn spectral_disk_bound_from_table() {
        // q~_s^{-2s-3} < 49.8 for s = 4..25 using the six-decimal table
        let bits = 256;
        let bound = Real::parse("49.8", bits).unwrap();
        let mut max_seen = Real::zero(bits);
        for (i, qs) in SPECTRAL_TABLE_6DP.iter().enumerate() {
            let s = i + 1;
            if s < 4 {
                continue;
            }
            let q = Real::parse(qs, bits).unwrap();
            let v = q.powi(-(2 * s as i64) - 3);
            assert!(v < bound, "s = {s}: {v}");
            max_seen = max_seen.max(&v);
        }
        // the tightest case stays under 49.6 as well
        assert!(max_seen < Real::parse("49.6", bits).unwrap());
    }

    #[test]
    fn c1_coefficient_argument_at_q04() {
        let rep = check_c1_coefficient_argument(&param("0.4"), &prec()).unwrap();
        assert!(
            rep.identity_gap < Real::parse("1e-6", 64).unwrap(),
            "gap = {}",
            rep.identity_gap
        );
        let phi03 = Real::parse("0.000880328462746", 256).unwrap();
        assert!((&rep.phi_at_03 - &phi03).abs() < tol(-12));
        let phi05 = Real::parse("0.0277777777777778", 256).unwrap();
        assert!((&rep.phi_at_05 - &phi05).abs() < tol(-12));
        let min_exp = Real::parse("0.0230088788735", 256).unwrap();
        assert!(
            (&rep.min_difference - &min_exp).abs() < Real::parse("5e-4", 64).unwrap(),
            "min = {}",
            rep.min_difference
        );
        assert!((rep.argmin_q - 0.3).abs() < 1e-9);
        assert!(rep.difference_positive);
    }

    #[test]
    fn t2b_sweep_on_a_coarse_grid() {
        let grid: Vec<f64> = (1..=6).map(|i| 0.1 * i as f64).collect();
        let rep = verify_theorem(TheoremId::T2b, &grid, 55.0, &prec()).unwrap();
        assert!(rep.passed(), "violations: {:?}", rep.violations);
        assert!(rep.warnings.is_empty());
    }

    #[test]
    fn t1_and_t3_spot_grid() {
        let grid = [0.35, 0.5, 0.65, 0.8];
        let rep1 = verify_theorem(TheoremId::T1, &grid, 55.0, &prec()).unwrap();
        assert!(rep1.passed(), "T1 violations: {:?}", rep1.violations);
        assert!(rep1.max_modulus_right < 5.0);
        let rep3 = verify_theorem(TheoremId::T3, &grid, 55.0, &prec()).unwrap();
        assert!(rep3.passed(), "T3 violations: {:?}", rep3.violations);
        assert!(rep3.max_modulus_left < LEFT_HALF_DISK_RADIUS);
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let p = prec();
        assert!(verify_theorem(TheoremId::T1, &[], 55.0, &p).is_err());
        assert!(verify_theorem(TheoremId::T1, &[0.97], 55.0, &p).is_err());
        assert!(verify_theorem(TheoremId::T1, &[0.5], 70.0, &p).is_err());
    }
}
