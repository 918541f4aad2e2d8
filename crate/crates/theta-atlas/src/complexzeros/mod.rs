//! Localization and certification of all zeros of theta(q,.) inside a disk.
//!
//! The pipeline: build a truncation polynomial whose tail is provably
//! negligible on the disk, run a double-precision Aberth-Ehrlich pass for
//! root estimates, refine each estimate with Newton against the full series
//! at working precision, then certify with a residual bound, a derivative
//! lower bound on a small disk, and a Newton-contraction check. Roots of the
//! truncation outside the disk are discarded (the truncation does not
//! approximate theta there); nothing inside is ever dropped silently.

mod aberth;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::num::{Complex, Real};
use crate::precision::{Param, PrecisionConfig};
use crate::series::{theta_dx_raw, theta_extra_bits};

/// Hard cap on the truncation degree.
pub const DEGREE_CAP: usize = 5000;

/// Default disk radius used by the pair counter and the theorem sweeps.
pub const DEFAULT_RADIUS: f64 = 55.0;

/// Largest q accepted by [`find_all_zeros`]; beyond it the required degree
/// and precision grow out of the desk-scale budget.
pub const Q_CEILING: f64 = 0.95;

/// A truncation of the theta series adequate on a disk.
#[derive(Clone, Debug)]
pub struct TruncationPolynomial {
    pub q: f64,
    /// Truncation degree N: terms j = 0..=N are kept.
    pub degree: usize,
    /// Disk radius the truncation is valid on.
    pub radius: f64,
    /// Bound on the discarded tail over |x| <= radius.
    pub tail_bound_on_disk: Real,
}

/// Certification outcome for one zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroStatus {
    Certified,
    NearDoubleUncertified,
}

/// An approximate zero with certification evidence.
#[derive(Clone, Debug)]
pub struct CertifiedZero {
    pub location: Complex,
    /// Upper bound on |theta(q, location)|.
    pub residual: Real,
    /// Lower bound on |d theta/dx| on the certification disk.
    pub deriv_lower: Real,
    /// Radius of the disk the certification argument covers.
    pub cert_radius: Real,
    pub status: ZeroStatus,
}

impl CertifiedZero {
    pub fn is_certified(&self) -> bool {
        self.status == ZeroStatus::Certified
    }

    pub fn is_real(&self) -> bool {
        self.location.im.is_zero()
    }
}

/// Chooses the minimal degree with `q^{N+1} R <= 1/2` and geometric tail
/// bound below `10^{-(target+5)}`.
pub fn build_truncation(
    q: &Param,
    radius: f64,
    prec: &PrecisionConfig,
) -> Result<TruncationPolynomial> {
    if !(radius >= 1.0) {
        return Err(Error::InvalidInput(format!(
            "radius must be at least 1, got {radius}"
        )));
    }
    let qf = q.to_f64();
    let lq = qf.ln();
    let lr = radius.ln();
    let tail_target_log10 = -(prec.target_digits() as f64 + 5.0);

    // first condition: q^{N+1} R <= 1/2, i.e. N+1 >= ln(2R)/(-ln q)
    let n_ratio = (((lr + std::f64::consts::LN_2) / -lq) - 1.0).ceil().max(0.0) as usize;
    // extend until the tail bound 2 q^{T_{N+1}} R^{N+1} meets the target
    let log10 = |ln: f64| ln / std::f64::consts::LN_10;
    let mut n = n_ratio;
    loop {
        let jp = (n + 1) as f64;
        let tail_ln = (jp * (jp + 1.0) / 2.0) * lq + jp * lr + std::f64::consts::LN_2;
        if log10(tail_ln) <= tail_target_log10 {
            break;
        }
        n += 1;
        if n > DEGREE_CAP {
            return Err(Error::DegreeOverflow {
                needed: n,
                cap: DEGREE_CAP,
            });
        }
    }

    // certified tail bound at working precision
    let bits = prec.bits();
    let qv = q.at(bits);
    let rv = Real::from_f64(radius, bits);
    let jp = (n + 1) as u64;
    let t_next = qv.powu(jp * (jp + 1) / 2) * rv.powu(jp);
    let tail = &t_next + &t_next;
    Ok(TruncationPolynomial {
        q: qf,
        degree: n,
        radius,
        tail_bound_on_disk: tail,
    })
}

/// Upper bound on |d2 theta/dx2| over the disk |w - z| <= rho, via the
/// positive series at radius |z| + rho.
fn second_derivative_bound(qv: &Real, abs_z: &Real, rho: &Real, bits: usize) -> Real {
    let r = abs_z + rho;
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let mut sum = Real::zero(bits);
    let mut qj = one.clone();
    let mut qpow = one.clone();
    let mut rp = one.clone(); // r^{j-2} tracked from j = 2
    let mut bound_term = one.clone();
    for j in 1..=100_000u64 {
        qj *= qv;
        qpow *= &qj;
        if j >= 2 {
            if j > 2 {
                rp *= &r;
            }
            let jj = Real::from_u64(j * (j - 1), bits);
            bound_term = &jj * &(&qpow * &rp);
            sum += &bound_term;
        }
        // geometric stopping once the term ratio (j+1)/(j-1) q^{j+1} r < 1/2
        let ratio = &(&qj * qv) * &r;
        if j >= 2 && &ratio * &Real::from_f64(2.0, bits) < half && bound_term < Real::ten_pow(-80, bits) {
            break;
        }
    }
    // the discarded tail is below the last term under the stopping rule
    &sum + &bound_term
}

/// Polishes one root estimate against the full series with Newton steps at
/// escalating precision. Returns the refined location and its (theta, theta')
/// evaluations, or None when the iteration refuses to settle.
fn polish_root(
    q: &Param,
    seed: Complex64,
    prec: &PrecisionConfig,
) -> Result<Option<(Complex, crate::series::RawEval, crate::series::RawEval)>> {
    let abs_seed = (seed.re * seed.re + seed.im * seed.im).sqrt();
    let extra = theta_extra_bits(q.to_f64(), abs_seed);
    let mut bits = prec.bits() + extra;
    let eps = Real::ten_pow(-(prec.target_digits() as i64), 64);

    let mut z = Complex::from_f64s(seed.re, seed.im, bits);
    for escalation in 0..3 {
        let qv = q.at(bits);
        let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
        let two = Real::from_u64(2, bits);
        let mut stalled = true;
        for _ in 0..40 {
            let (th, dth) = theta_dx_raw(&qv, &z, bits, &tail_eps)?;
            let resid = th.value.abs();
            if resid <= (&eps.with_prec(bits) * &th.scale).max(&(&two * &th.err)) {
                return Ok(Some((z, th, dth)));
            }
            if dth.value.abs() <= &two * &dth.err {
                // derivative indistinguishable from zero: near-double
                stalled = true;
                break;
            }
            let step = &th.value / &dth.value;
            z = &z - &step;
            stalled = false;
            if step.abs() > Real::from_f64(1.0, bits) + z.abs() {
                // wild step: give up on this seed
                return Ok(None);
            }
        }
        if stalled && escalation == 2 {
            return Ok(None);
        }
        bits *= 2;
        z = z.with_prec(bits);
    }
    Ok(None)
}

/// Certifies a polished zero: residual bound, derivative lower bound on the
/// certification disk, and a Newton-contraction check.
fn certify(
    q: &Param,
    z: &Complex,
    th: &crate::series::RawEval,
    dth: &crate::series::RawEval,
    prec: &PrecisionConfig,
) -> CertifiedZero {
    let bits = th.value.prec().max(256);
    let qv = q.at(bits);
    let cert_radius = Real::ten_pow(-(prec.target_digits() as i64) / 3, bits);
    let residual = th.value.abs() + th.err.clone();

    let m2 = second_derivative_bound(&qv, &z.abs(), &cert_radius, bits);
    let deriv_lower = dth.value.abs() - dth.err.clone() - &cert_radius * &m2;

    let mut status = ZeroStatus::NearDoubleUncertified;
    if deriv_lower.is_positive() {
        let ratio_ok = &residual / &deriv_lower < cert_radius;
        let step = if dth.value.abs().is_positive() {
            (&th.value / &dth.value).abs()
        } else {
            cert_radius.clone()
        };
        let contraction_ok = step < &cert_radius * &Real::from_f64(0.5, bits);
        if ratio_ok && contraction_ok {
            status = ZeroStatus::Certified;
        }
    }
    let deriv_lower = deriv_lower.max(&Real::zero(bits));
    CertifiedZero {
        location: z.clone(),
        residual,
        deriv_lower,
        cert_radius,
        status,
    }
}

/// Finds every zero of theta(q,.) with |z| < radius, certified against the
/// full series. Complex zeros come in conjugate pairs; the output is sorted
/// by real part, then imaginary part.
pub fn find_all_zeros(
    q: &Param,
    radius: f64,
    prec: &PrecisionConfig,
) -> Result<Vec<CertifiedZero>> {
    if !(1.0..=55.0).contains(&radius) {
        return Err(Error::InvalidInput(format!(
            "radius must lie in [1, 55], got {radius}"
        )));
    }
    if q.to_f64() > Q_CEILING {
        return Err(Error::InvalidInput(format!(
            "q = {} exceeds the supported ceiling {Q_CEILING}",
            q.to_f64()
        )));
    }
    let trunc = build_truncation(q, radius, prec)?;
    let n = trunc.degree;

    // scaled-variable coefficients: x = s w keeps every log in f64 range
    let scale = radius / 2.0;
    let lq = q.to_f64().ln();
    let ls = scale.ln();
    let log_coeffs: Vec<f64> = (0..=n)
        .map(|j| {
            let jf = j as f64;
            jf * (jf + 1.0) / 2.0 * lq + jf * ls
        })
        .collect();
    let out = aberth::aberth_all_roots(&log_coeffs);

    // keep estimates inside the faithfulness disk (with a hair of slack for
    // the polish to pull boundary-grazing estimates back in)
    let mut seeds: Vec<(Complex64, bool)> = Vec::new();
    for (root, conv) in out.roots.iter().zip(&out.converged) {
        let x = root * scale;
        if x.norm() < radius * 1.000001 && x.im >= 0.0 {
            seeds.push((x, *conv));
        }
    }
    // deterministic processing order
    seeds.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("finite root estimates")
    });

    let im_threshold = Real::ten_pow(-(prec.target_digits() as i64) / 2, 256);
    let mut found: Vec<CertifiedZero> = Vec::new();
    let mut locations: Vec<Complex> = Vec::new();

    for (seed, conv) in seeds {
        let polished = polish_root(q, seed, prec)?;
        let (z, th, dth) = match polished {
            Some(t) => t,
            None => {
                // keep the unpolished candidate, honestly uncertified
                if !conv {
                    continue; // an unconverged Aberth estimate with no zero nearby
                }
                let bits = prec.bits();
                let z = Complex::from_f64s(seed.re, seed.im, bits);
                let qv = q.at(bits);
                let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
                let (th, _) = theta_dx_raw(&qv, &z, bits, &tail_eps)?;
                found.push(CertifiedZero {
                    location: z.clone(),
                    residual: th.value.abs() + th.err,
                    deriv_lower: Real::zero(bits),
                    cert_radius: Real::ten_pow(-(prec.target_digits() as i64) / 3, bits),
                    status: ZeroStatus::NearDoubleUncertified,
                });
                locations.push(z);
                continue;
            }
        };

        // snap near-real zeros onto the axis and re-evaluate there
        let (z, th, dth) = if !z.im.is_zero() && z.im.abs() < &im_threshold * &(Real::one(256) + z.abs()) {
            let zr = Complex::from_real(z.re.clone());
            let bits = z.re.prec();
            let qv = q.at(bits);
            let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
            let (t2, d2) = theta_dx_raw(&qv, &zr, bits, &tail_eps)?;
            (zr, t2, d2)
        } else {
            (z, th, dth)
        };

        // outside the faithfulness disk after polish: not ours to report
        if z.abs() >= Real::from_f64(radius, 64) {
            continue;
        }
        // duplicate of an already-found zero (two seeds converged together)
        let dup = locations.iter().any(|w| {
            (&z - w).abs() < &im_threshold * &(Real::one(256) + z.abs())
        });
        if dup {
            continue;
        }

        let cert = certify(q, &z, &th, &dth, prec);
        locations.push(z.clone());
        if !z.im.is_zero() {
            // conjugate closure
            let mate = CertifiedZero {
                location: z.conj(),
                ..cert.clone()
            };
            found.push(cert);
            found.push(mate);
            locations.push(z.conj());
        } else {
            found.push(cert);
        }
    }

    found.sort_by(|a, b| {
        let ka = (a.location.re.to_f64(), a.location.im.to_f64());
        let kb = (b.location.re.to_f64(), b.location.im.to_f64());
        ka.partial_cmp(&kb).expect("finite zero locations")
    });
    Ok(found)
}

/// Counts the complex conjugate pairs inside the default disk; fails when a
/// near-double zero makes the count ambiguous.
pub fn count_pairs(q: &Param, prec: &PrecisionConfig) -> Result<usize> {
    let zeros = find_all_zeros(q, DEFAULT_RADIUS, prec)?;
    if zeros.iter().any(|z| !z.is_certified()) {
        return Err(Error::AmbiguousNearSpectral {
            q: format!("{:.8}", q.to_f64()),
        });
    }
    Ok(zeros.iter().filter(|z| z.location.im.is_positive()).count())
}
