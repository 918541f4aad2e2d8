//! Bracketing and refinement of the real (negative) zeros of theta(q,.).
//!
//! For q below the first spectral value all zeros are real and form a strictly
//! decreasing sequence `xi_1 > xi_2 > ...` with the interlacing property
//!
//! ```text
//! -q^{-2k} < xi_{2k} < xi_{2k-1} < -q^{-2k+1}
//! ```
//!
//! so the pair (xi_{2k-1}, xi_{2k}) lives in a known exponent window. Inside
//! that window theta is positive at both integer-power endpoints and dips
//! negative exactly between the two zeros, which is what the probe scan looks
//! for. For q <= 0.2 the refined windows with fractional exponents 1.2 / 1.8
//! are sign-separating on their own and are used directly.
//!
//! Evaluations near `-q^{-m}` cancel catastrophically (the value is orders of
//! magnitude below the largest term), so every sign decision here is certified:
//! the working precision is raised until the evaluation error is strictly
//! below the magnitude of the value.

use crate::error::{Error, Result};
use crate::num::Real;
use crate::precision::{Param, PrecisionConfig};
use crate::series::{theta_dx_real_raw, theta_extra_bits, theta_real_raw, RawRealEval};

/// An interval known to contain the k-th real zero.
#[derive(Clone, Debug)]
pub struct ZeroBracket {
    /// Zero index, 1 = rightmost.
    pub k: usize,
    pub lo: Real,
    pub hi: Real,
    /// Endpoint signs verified to differ.
    pub sign_separating: bool,
}

/// A refined real zero with a certified residual.
#[derive(Clone, Debug)]
pub struct RealZero {
    pub k: usize,
    pub location: Real,
    /// Upper bound on |theta(q, location)|.
    pub residual: Real,
}

/// Output of [`list_real_zeros`].
#[derive(Clone, Debug)]
pub struct RealZeroList {
    pub zeros: Vec<RealZero>,
    /// Index of the first real zero (> 1 when leading pairs are complex).
    pub first_index: usize,
    /// True when the list stopped before reaching the requested count.
    pub short_count: bool,
}

/// Probe ladder depth: dyadic fractions up to 2^-MAX_PROBE_DEPTH.
const MAX_PROBE_DEPTH: u32 = 13;

/// Certified sign of theta(q, x) for real x: +1, -1, or 0 when the value
/// cannot be separated from zero at the final escalation.
pub(crate) fn certified_sign(
    q: &Param,
    x: &Real,
    prec: &PrecisionConfig,
) -> Result<(i8, RawRealEval)> {
    let extra = theta_extra_bits(q.to_f64(), x.to_f64().abs());
    let mut bits = prec.bits() + extra;
    let mut last = None;
    for _ in 0..=5 {
        let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
        let r = theta_real_raw(&q.at(bits), &x.with_prec(bits), bits, &tail_eps)?;
        let two = Real::from_u64(2, bits);
        if r.value.abs() > &two * &r.err {
            let s = r.value.signum_i();
            return Ok((s, r));
        }
        last = Some(r);
        bits *= 2;
    }
    Ok((0, last.expect("at least one evaluation")))
}

/// -q^{-e} at a precision adequate for the cancellation at that magnitude.
fn endpoint(q: &Param, e: f64, prec: &PrecisionConfig) -> Real {
    let bits = prec.bits() + theta_extra_bits(q.to_f64(), q.to_f64().powf(-e));
    let ex = Real::from_f64(e, bits);
    -(q.at(bits).pow(&(-ex)))
}

/// Searches the pair window (-q^{-2kap}, -q^{-2kap+1}) for a point with
/// certified theta < 0 (the dip between the two zeros of pair `kap`).
/// Returns the probe point, or None when the pair is complex or unresolvable
/// at the requested ladder depth.
pub(crate) fn probe_pair_dip_depth(
    q: &Param,
    kap: usize,
    prec: &PrecisionConfig,
    max_depth: u32,
) -> Result<Option<Real>> {
    let base = 2.0 * kap as f64 - 1.0; // window exponents are [base, base+1]
    for depth in 1..=max_depth {
        let den = 1u64 << depth;
        for num in (1..den).step_by(2) {
            let e = base + num as f64 / den as f64;
            let x = endpoint(q, e, prec);
            let (s, _) = certified_sign(q, &x, prec)?;
            if s < 0 {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

fn probe_pair_dip(q: &Param, kap: usize, prec: &PrecisionConfig) -> Result<Option<Real>> {
    probe_pair_dip_depth(q, kap, prec, MAX_PROBE_DEPTH)
}

/// Brackets the k-th real zero of theta(q, .), rightmost first.
///
/// Uses the refined fractional-exponent windows for q <= 0.2 and an interior
/// probe for larger q; endpoints are verified to sign-separate.
pub fn bracket_real_zero(q: &Param, k: usize, prec: &PrecisionConfig) -> Result<ZeroBracket> {
    if k == 0 {
        return Err(Error::InvalidInput("zero index k starts at 1".into()));
    }
    let kap = k.div_ceil(2);
    let odd = k % 2 == 1;
    let fail = |detail: &str| Error::BracketFailure {
        k,
        q: format!("{:.6}", q.to_f64()),
        detail: detail.into(),
    };

    let fifth = Real::parse("0.2", 64).unwrap();
    if q.value() <= &fifth {
        // refined windows: xi_{2k+1} in (-q^{-2k-1.2}, -q^{-2k-1}),
        //                  xi_{2k+2} in (-q^{-2k-2}, -q^{-2k-1.8})
        let (lo_e, hi_e) = if odd {
            (2.0 * kap as f64 - 0.8, 2.0 * kap as f64 - 1.0)
        } else {
            (2.0 * kap as f64, 2.0 * kap as f64 - 0.2)
        };
        let lo = endpoint(q, lo_e, prec);
        let hi = endpoint(q, hi_e, prec);
        let (slo, _) = certified_sign(q, &lo, prec)?;
        let (shi, _) = certified_sign(q, &hi, prec)?;
        if slo != 0 && shi != 0 && slo != shi {
            return Ok(ZeroBracket {
                k,
                lo,
                hi,
                sign_separating: true,
            });
        }
        // fall through to the probe path when the refined window fails
    }

    let lo_end = endpoint(q, 2.0 * kap as f64, prec);
    let hi_end = endpoint(q, 2.0 * kap as f64 - 1.0, prec);
    let dip = probe_pair_dip(q, kap, prec)?
        .ok_or_else(|| fail("no negative dip found in the pair window"))?;
    let (lo, hi) = if odd { (dip, hi_end) } else { (lo_end, dip) };
    let (slo, _) = certified_sign(q, &lo, prec)?;
    let (shi, _) = certified_sign(q, &hi, prec)?;
    if slo == 0 || shi == 0 || slo == shi {
        return Err(fail("endpoint signs do not separate"));
    }
    Ok(ZeroBracket {
        k,
        lo,
        hi,
        sign_separating: true,
    })
}

/// Bisection plus Newton refinement inside a verified bracket.
pub fn find_real_zero(q: &Param, k: usize, prec: &PrecisionConfig) -> Result<RealZero> {
    let bracket = bracket_real_zero(q, k, prec)?;
    refine_in_bracket(q, &bracket, prec)
}

pub(crate) fn refine_in_bracket(
    q: &Param,
    bracket: &ZeroBracket,
    prec: &PrecisionConfig,
) -> Result<RealZero> {
    let k = bracket.k;
    let bits = prec.bits() + theta_extra_bits(q.to_f64(), bracket.lo.to_f64().abs());
    let qv = q.at(bits);
    let tail_eps = Real::ten_pow(-(prec.target_digits() as i64 + 10), bits);
    let eps = Real::ten_pow(-(prec.target_digits() as i64), bits);
    let two = Real::from_u64(2, bits);
    let half = Real::from_f64(0.5, bits);

    let mut lo = bracket.lo.with_prec(bits);
    let mut hi = bracket.hi.with_prec(bits);
    let (slo, _) = certified_sign(q, &lo, prec)?;
    if slo == 0 {
        return Err(Error::ConvergenceFailure(format!(
            "cannot certify the endpoint sign for zero {k}"
        )));
    }

    // 20 bisection steps to shrink the Newton basin
    for _ in 0..20 {
        let mid = (&lo + &hi) * &half;
        let r = theta_real_raw(&qv, &mid, bits, &tail_eps)?;
        if r.value.abs() <= &two * &r.err {
            // already inside the zero's uncertainty ball
            return finish(q, k, mid, prec);
        }
        if r.value.signum_i() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton polish from the midpoint, with bisection fallback when a step
    // leaves the bracket or the derivative is too small
    let mut x = (&lo + &hi) * &half;
    let deriv_guard = Real::ten_pow(-(prec.target_digits() as i64) / 2, bits);
    for _ in 0..200 {
        let (th, dth) = theta_dx_real_raw(&qv, &x, bits, &tail_eps)?;
        if th.value.abs() <= (&eps * &th.scale).max(&(&two * &th.err)) {
            // near-spectral guard: an uncertifiably flat derivative means the
            // zero is about to collide with its pair partner
            if dth.value.abs() < &deriv_guard * &dth.scale {
                return Err(Error::ConvergenceFailure(format!(
                    "derivative too small near zero {k}: near-double zero (spectral parameter)"
                )));
            }
            return finish(q, k, x, prec);
        }
        let newton_ok = dth.value.abs() >= &deriv_guard * &dth.scale;
        let candidate = if newton_ok {
            let c = &x - &(&th.value / &dth.value);
            if c > lo && c < hi {
                Some(c)
            } else {
                None
            }
        } else {
            None
        };
        let next = match candidate {
            Some(c) => c,
            None => (&lo + &hi) * &half,
        };
        let r = theta_real_raw(&qv, &next, bits, &tail_eps)?;
        if r.value.abs() <= &two * &r.err {
            return finish(q, k, next, prec);
        }
        if r.value.signum_i() == slo {
            lo = next.clone();
        } else {
            hi = next.clone();
        }
        x = next;
    }
    Err(Error::ConvergenceFailure(format!(
        "zero {k} did not converge within 200 iterations"
    )))
}

fn finish(q: &Param, k: usize, x: Real, prec: &PrecisionConfig) -> Result<RealZero> {
    let (_, r) = certified_sign(q, &x, prec)?;
    Ok(RealZero {
        k,
        location: x,
        residual: r.value.abs() + r.err,
    })
}

/// Lists the first `count` real zeros, skipping leading complex pairs.
///
/// When q exceeds a spectral value the first pairs of zeros are complex; the
/// list then starts at the first real index and `first_index` reports the gap.
/// A bracket failure after real zeros have been found stops the list early
/// with `short_count` set.
pub fn list_real_zeros(q: &Param, count: usize, prec: &PrecisionConfig) -> Result<RealZeroList> {
    if count == 0 {
        return Err(Error::InvalidInput("count must be at least 1".into()));
    }
    // leading complex pairs cannot exceed the spectral index of q < 1
    const MAX_LEADING_PAIRS: usize = 64;

    let mut zeros: Vec<RealZero> = Vec::with_capacity(count);
    let mut first_index = 1usize;
    let mut kap = 1usize;
    let mut short_count = false;

    while zeros.len() < count {
        let odd_idx = 2 * kap - 1;
        match bracket_real_zero(q, odd_idx, prec) {
            Ok(br) => {
                zeros.push(refine_in_bracket(q, &br, prec)?);
                if zeros.len() < count {
                    let br2 = bracket_real_zero(q, odd_idx + 1, prec)?;
                    zeros.push(refine_in_bracket(q, &br2, prec)?);
                }
            }
            Err(Error::BracketFailure { .. }) if zeros.is_empty() => {
                // leading pair is complex: skip it
                first_index += 2;
                if first_index > 2 * MAX_LEADING_PAIRS {
                    return Err(Error::BracketFailure {
                        k: odd_idx,
                        q: format!("{:.6}", q.to_f64()),
                        detail: "no real zeros found within the leading-pair cap".into(),
                    });
                }
            }
            Err(Error::BracketFailure { .. }) => {
                short_count = true;
                break;
            }
            Err(e) => return Err(e),
        }
        kap += 1;
    }
    Ok(RealZeroList {
        zeros,
        first_index,
        short_count,
    })
}
