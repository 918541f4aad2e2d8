//! Evaluation of the partial theta function, its bilateral companion and the
//! tail series, with rigorous error bounds.
//!
//! Definitions used throughout (q in (0,1)):
//!
//! ```text
//! theta(q,x)      = sum_{j>=0} q^{j(j+1)/2} x^j
//! theta_star(q,x) = sum_{j in Z} q^{j(j+1)/2} x^j
//!                 = (1+1/x) prod_{m>=1} (1-q^m)(1+x q^m)(1+q^m/x)
//! g(q,x)          = sum_{m>=1} q^{m(m-1)/2} x^{-m},   so theta = theta_star - g
//! ```
//!
//! Every evaluation returns an [`EvalResult`] whose `abs_error` accounts for
//! the truncation tail and a rounding allowance. Summation is plain ascending
//! order; the working precision is chosen from the size of the largest term
//! (which controls the cancellation loss) and escalated until the certified
//! error meets the target, so callers get target-digit answers even in the
//! badly cancelling corners of the domain.

use crate::error::{Error, Result};
use crate::num::{Complex, Real};
use crate::precision::{check_finite, EvalResult, Param, PrecisionConfig};

/// Hard cap on summed terms; reached only for q extremely close to 1.
const MAX_TERMS: usize = 2_000_000;

/// Escalation rounds; each doubles the working precision.
const MAX_ESCALATIONS: usize = 6;

pub(crate) struct RawEval {
    pub value: Complex,
    pub err: Real,
    pub terms: usize,
    /// Upper bound on the sum of term magnitudes (conditioning scale).
    pub scale: Real,
}

pub(crate) struct RawRealEval {
    pub value: Real,
    pub err: Real,
    /// Upper bound on the sum of term magnitudes (conditioning scale).
    pub scale: Real,
}

/// Extra mantissa bits needed to absorb cancellation in the theta series:
/// the base-2 log of the largest term `q^{j(j+1)/2} |x|^j`.
pub(crate) fn theta_extra_bits(q: f64, abs_x: f64) -> usize {
    if !(q > 0.0 && q < 1.0) || abs_x <= 1.0 {
        return 0;
    }
    let lq = q.ln(); // < 0
    let lr = abs_x.ln();
    let jstar = -lr / lq - 0.5;
    if jstar <= 0.0 {
        return 0;
    }
    let ln_max = jstar * (jstar + 1.0) / 2.0 * lq + jstar * lr;
    if ln_max <= 0.0 {
        return 0;
    }
    ((ln_max / std::f64::consts::LN_2).ceil() as usize + 16).min(1 << 20)
}

/// Upper bound on |x| that is safe against downward rounding.
fn abs_upper(x: &Complex) -> Real {
    let p = x.prec();
    let bump = Real::one(p) + Real::ten_pow(-(p as i64 / 4), p);
    x.abs() * bump
}

/// Raw complex theta sum at fixed precision.
///
/// Stops at the smallest N with `q^{N+1}|x| <= 1/2` and geometric tail bound
/// `2 t_{N+1} <= tail_eps`; `err` = tail + rounding allowance.
pub(crate) fn theta_raw(q: &Real, x: &Complex, bits: usize, tail_eps: &Real) -> Result<RawEval> {
    if x.is_zero() {
        // only the j = 0 term survives
        return Ok(RawEval {
            value: Complex::one(bits),
            err: Real::zero(bits),
            terms: 1,
            scale: Real::one(bits),
        });
    }
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let r = abs_upper(&x);

    let mut sum = Complex::one(bits);
    let mut qj = one.clone(); // q^j
    let mut qpow = one.clone(); // q^{j(j+1)/2}
    let mut xp = Complex::one(bits); // x^j
    let mut tb = one.clone(); // bound on |t_j| = q^{j(j+1)/2} r^j
    let mut abs_sum = one.clone(); // sum of |t_j| bounds
    let mut terms;

    for j in 1..=MAX_TERMS {
        qj *= &q;
        qpow *= &qj;
        xp = &xp * &x;
        let t = xp.scale(&qpow);
        sum = &sum + &t;
        tb = &tb * &(&qj * &r);
        abs_sum += &tb;
        terms = j + 1;

        // ratio of the next term to this one
        let ratio = &qj * &q * &r;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            if &tail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let rounding = Real::from_u64(3 * terms as u64 + 3, bits) * &u * &abs_sum;
                return Ok(RawEval {
                    value: sum,
                    err: tail + rounding,
                    terms,
                    scale: abs_sum,
                });
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "theta series did not reach its tail bound within {MAX_TERMS} terms"
    )))
}

/// Raw theta sum for real x (used heavily by the zero finders).
pub(crate) fn theta_real_raw(
    q: &Real,
    x: &Real,
    bits: usize,
    tail_eps: &Real,
) -> Result<RawRealEval> {
    if x.is_zero() {
        return Ok(RawRealEval {
            value: Real::one(bits),
            err: Real::zero(bits),
            scale: Real::one(bits),
        });
    }
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let r = x.abs();

    let mut sum = one.clone();
    let mut qj = one.clone();
    let mut qpow = one.clone();
    let mut xp = one.clone();
    let mut tb = one.clone();
    let mut abs_sum = one.clone();
    let mut terms;

    for j in 1..=MAX_TERMS {
        qj *= &q;
        qpow *= &qj;
        xp *= &x;
        sum += &(&qpow * &xp);
        tb = &tb * &(&qj * &r);
        abs_sum += &tb;
        terms = j + 1;

        let ratio = &qj * &q * &r;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            if &tail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let rounding = Real::from_u64(3 * terms as u64 + 3, bits) * &u * &abs_sum;
                return Ok(RawRealEval {
                    value: sum,
                    err: tail + rounding,
                    scale: abs_sum,
                });
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "theta series did not reach its tail bound within {MAX_TERMS} terms"
    )))
}

/// theta and d(theta)/dx in one pass, real argument.
pub(crate) fn theta_dx_real_raw(
    q: &Real,
    x: &Real,
    bits: usize,
    tail_eps: &Real,
) -> Result<(RawRealEval, RawRealEval)> {
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let r = x.abs();

    let mut sum = one.clone();
    let mut dsum = Real::zero(bits);
    let mut qj = one.clone();
    let mut qpow = one.clone();
    let mut xp_prev = one.clone(); // x^{j-1}
    let mut tb = one.clone();
    let mut abs_sum = one.clone();
    let mut dabs_sum = Real::zero(bits);
    let mut terms;

    for j in 1..=MAX_TERMS {
        qj *= &q;
        qpow *= &qj;
        let jr = Real::from_u64(j as u64, bits);
        dsum += &(&(&qpow * &jr) * &xp_prev);
        let xp = &xp_prev * &x;
        sum += &(&qpow * &xp);

        let tb_prev = tb.clone();
        tb = &tb * &(&qj * &r);
        abs_sum += &tb;
        dabs_sum += &(&tb_prev * &(&qj * &jr));
        xp_prev = xp;
        terms = j + 1;

        let ratio = &qj * &q * &r;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            let dnext = &tb * &(&qj * &q) * &Real::from_u64(j as u64 + 1, bits);
            let dtail = (&dnext + &dnext) + &dnext;
            if &tail <= tail_eps && &dtail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let k = Real::from_u64(3 * terms as u64 + 3, bits);
                let rounding = &k * &u * &abs_sum;
                let drounding = &k * &u * &dabs_sum;
                return Ok((
                    RawRealEval {
                        value: sum,
                        err: tail + rounding,
                        scale: abs_sum,
                    },
                    RawRealEval {
                        value: dsum,
                        err: dtail + drounding,
                        scale: dabs_sum,
                    },
                ));
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "theta series did not reach its tail bound within {MAX_TERMS} terms"
    )))
}

/// theta and d(theta)/dx in one pass, complex argument.
pub(crate) fn theta_dx_raw(
    q: &Real,
    x: &Complex,
    bits: usize,
    tail_eps: &Real,
) -> Result<(RawEval, RawEval)> {
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let r = abs_upper(&x);

    let mut sum = Complex::one(bits);
    let mut dsum = Complex::zero(bits);
    let mut qj = one.clone();
    let mut qpow = one.clone();
    let mut xp_prev = Complex::one(bits); // x^{j-1}
    let mut tb = one.clone();
    let mut abs_sum = one.clone();
    let mut dabs_sum = Real::zero(bits);
    let mut terms;

    for j in 1..=MAX_TERMS {
        qj *= &q;
        qpow *= &qj;
        let jr = Real::from_u64(j as u64, bits);
        dsum = &dsum + &xp_prev.scale(&(&qpow * &jr));
        let xp = &xp_prev * &x;
        sum = &sum + &xp.scale(&qpow);

        let tb_prev = tb.clone();
        tb = &tb * &(&qj * &r);
        abs_sum += &tb;
        dabs_sum += &(&tb_prev * &(&qj * &jr));
        xp_prev = xp;
        terms = j + 1;

        let ratio = &qj * &q * &r;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            // derivative tail: term bounds (j+1) q^{T_{j+1}} r^j, also geometric
            let dnext = &tb * &(&qj * &q) * &Real::from_u64(j as u64 + 1, bits);
            let dtail = (&dnext + &dnext) + &dnext; // extra slack for the (j+1) growth
            if &tail <= tail_eps && &dtail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let k = Real::from_u64(3 * terms as u64 + 3, bits);
                let rounding = &k * &u * &abs_sum;
                let drounding = &k * &u * &dabs_sum;
                return Ok((
                    RawEval {
                        value: sum,
                        err: tail + rounding,
                        terms,
                        scale: abs_sum,
                    },
                    RawEval {
                        value: dsum,
                        err: dtail + drounding,
                        terms,
                        scale: dabs_sum,
                    },
                ));
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "theta series did not reach its tail bound within {MAX_TERMS} terms"
    )))
}

/// Jet of theta at real (q, x) for the fold (double-zero) solver:
/// values of theta, theta_x, theta_q, theta_xq, theta_xx in one pass.
/// Certified error/scale pairs are carried for theta and theta_x (the fold
/// residuals); the Jacobian entries are raw values.
pub(crate) struct FoldJet {
    pub th: RawRealEval,
    pub tx: RawRealEval,
    pub tq: Real,
    pub txq: Real,
    pub txx: Real,
}

pub(crate) fn fold_jet_raw(q: &Real, x: &Real, bits: usize, tail_eps: &Real) -> Result<FoldJet> {
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let r = x.abs();
    let qinv = q.recip();
    let xinv = x.recip();

    let mut th = one.clone();
    let mut tx = Real::zero(bits);
    let mut tq = Real::zero(bits);
    let mut txq = Real::zero(bits);
    let mut txx = Real::zero(bits);
    let mut qj = one.clone();
    let mut qpow = one.clone();
    let mut xp_prev = one.clone(); // x^{j-1}
    let mut tb = one.clone();
    let mut abs_sum = one.clone();
    let mut dabs_sum = Real::zero(bits);
    let mut tri = 0u64; // j(j+1)/2
    let mut terms;

    for j in 1..=MAX_TERMS as u64 {
        qj *= &q;
        qpow *= &qj;
        tri += j;
        let jr = Real::from_u64(j, bits);
        let trir = Real::from_u64(tri, bits);
        let xj1 = xp_prev.clone();
        let xj = &xp_prev * &x;
        let base = &qpow * &xj; // q^{T_j} x^j

        th += &base;
        tx += &(&(&qpow * &jr) * &xj1);
        tq += &(&(&trir * &qinv) * &base);
        txq += &(&(&(&trir * &jr) * &qinv) * &(&qpow * &xj1));
        if j >= 2 {
            let jj1 = Real::from_u64(j * (j - 1), bits);
            txx += &(&(&qpow * &jj1) * &(&xj1 * &xinv));
        }

        let tb_prev = tb.clone();
        tb = &tb * &(&qj * &r);
        abs_sum += &tb;
        dabs_sum += &(&tb_prev * &(&qj * &jr));
        xp_prev = xj;
        terms = (j + 1) as usize;

        let ratio = &qj * &q * &r;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            // dominant growth among the tracked series is j^2-ish: charge extra
            let heavy = &next * &Real::from_u64((j + 2) * (j + 2), bits);
            let heavy_tail = &heavy + &heavy;
            if &heavy_tail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let k = Real::from_u64(3 * terms as u64 + 3, bits);
                let rounding = &k * &u * &abs_sum;
                let drounding = &k * &u * &dabs_sum;
                return Ok(FoldJet {
                    th: RawRealEval {
                        value: th,
                        err: &tail + &rounding,
                        scale: abs_sum,
                    },
                    tx: RawRealEval {
                        value: tx,
                        err: &heavy_tail + &drounding,
                        scale: dabs_sum,
                    },
                    tq,
                    txq,
                    txx,
                });
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "fold jet did not reach its tail bound within {MAX_TERMS} terms"
    )))
}

/// Raw bilateral product evaluation.
pub(crate) fn theta_star_raw(
    q: &Real,
    x: &Complex,
    bits: usize,
    rel_eps: &Real,
) -> Result<RawEval> {
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let xinv = x.recip();
    let r = abs_upper(&x);
    let rinv = abs_upper(&xinv);
    let k = r.max(&rinv).max(&one);

    let mut prod = &Complex::one(bits) + &xinv;
    let mut qm = one.clone();
    let mut factors;

    for m in 1..=MAX_TERMS {
        qm *= &q;
        let a = &Complex::one(bits) - &Complex::from_real(qm.clone());
        let b = &Complex::one(bits) + &x.scale(&qm);
        let c = &Complex::one(bits) + &xinv.scale(&qm);
        prod = &(&(&prod * &a) * &b) * &c;
        factors = m;

        // remaining log-product bound: sum_{m'>M} K q^{m'} / (1 - K q^{m'})
        let w = &qm * &q * &k;
        if w < half {
            let l = &w / &(&(&one - &q) * &(&one - &w));
            let tail_rel = &l + &l;
            if &tail_rel <= rel_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let rounding = Real::from_u64(8 * factors as u64 + 8, bits) * &u;
                let err = prod.abs() * (tail_rel + rounding);
                let scale = prod.abs();
                return Ok(RawEval {
                    value: prod,
                    err,
                    terms: factors,
                    scale,
                });
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "triple product did not converge within {MAX_TERMS} factors"
    )))
}

/// Raw tail series g(q,x) = sum_{m>=1} q^{m(m-1)/2} x^{-m}.
pub(crate) fn g_raw(q: &Real, x: &Complex, bits: usize, tail_eps: &Real) -> Result<RawEval> {
    let one = Real::one(bits);
    let half = Real::from_f64(0.5, bits);
    let q = q.with_prec(bits);
    let x = x.with_prec(bits);
    let xinv = x.recip();
    let rinv = abs_upper(&xinv);

    let mut sum = Complex::zero(bits);
    let mut qm1 = one.clone(); // q^{m-1}
    let mut qpow = one.clone(); // q^{m(m-1)/2}
    let mut xm = xinv.clone(); // x^{-m}
    let mut tb = rinv.clone();
    let mut abs_sum = Real::zero(bits);
    let mut terms;

    for m in 1..=MAX_TERMS {
        if m > 1 {
            qm1 *= &q;
            qpow *= &qm1;
            tb = &tb * &(&qm1 * &rinv);
        }
        sum = &sum + &xm.scale(&qpow);
        abs_sum += &tb;
        xm = &xm * &xinv;
        terms = m;

        let ratio = &qm1 * &q * &rinv;
        if ratio <= half {
            let next = &tb * &ratio;
            let tail = &next + &next;
            if &tail <= tail_eps {
                let u = Real::ten_pow(-((bits as f64 / std::f64::consts::LOG2_10) as i64 - 2), bits);
                let rounding = Real::from_u64(3 * terms as u64 + 3, bits) * &u * &abs_sum;
                return Ok(RawEval {
                    value: sum,
                    err: tail + rounding,
                    terms,
                    scale: abs_sum,
                });
            }
        }
    }
    Err(Error::ConvergenceFailure(format!(
        "tail series did not converge within {MAX_TERMS} terms"
    )))
}

fn meets_target(err: &Real, value: &Complex, eps: &Real) -> bool {
    let one = Real::one(err.prec());
    let scale = value.abs().max(&one);
    err <= &(eps * &scale)
}

/// Evaluates theta(q,x) with a certified absolute error bound.
pub fn eval_theta(q: &Param, x: &Complex, prec: &PrecisionConfig) -> Result<EvalResult> {
    check_finite(x)?;
    let eps = prec.target_eps();
    let extra = theta_extra_bits(q.to_f64(), x.abs().to_f64());
    let mut bits = prec.bits() + extra;
    for _ in 0..=MAX_ESCALATIONS {
        let raw = theta_raw(&q.at(bits), &x.with_prec(bits), bits, &eps.with_prec(bits))?;
        if meets_target(&raw.err, &raw.value, &eps) {
            return Ok(EvalResult {
                value: raw.value,
                abs_error: raw.err,
                terms_used: raw.terms,
            });
        }
        bits *= 2;
    }
    Err(Error::ConvergenceFailure(
        "theta evaluation could not certify the target accuracy".into(),
    ))
}

/// Evaluates the bilateral theta_star(q,x) via the triple product.
pub fn eval_theta_star(q: &Param, x: &Complex, prec: &PrecisionConfig) -> Result<EvalResult> {
    check_finite(x)?;
    if x.is_zero() {
        return Err(Error::InvalidInput("theta_star requires x != 0".into()));
    }
    let eps = prec.target_eps();
    let mut bits = prec.bits();
    for _ in 0..=MAX_ESCALATIONS {
        let raw = theta_star_raw(&q.at(bits), &x.with_prec(bits), bits, &eps.with_prec(bits))?;
        // the product has no cancellation between factors: the relative bound
        // already holds, but keep the absolute contract of the interface
        if meets_target(&raw.err, &raw.value, &eps) {
            return Ok(EvalResult {
                value: raw.value,
                abs_error: raw.err,
                terms_used: raw.terms,
            });
        }
        bits *= 2;
    }
    Err(Error::ConvergenceFailure(
        "theta_star evaluation could not certify the target accuracy".into(),
    ))
}

/// Evaluates the tail series g(q,x); for |x| >= 5 the result satisfies
/// |g| <= 1/4 + abs_error.
pub fn eval_g(q: &Param, x: &Complex, prec: &PrecisionConfig) -> Result<EvalResult> {
    check_finite(x)?;
    if x.is_zero() {
        return Err(Error::InvalidInput("g requires x != 0".into()));
    }
    let eps = prec.target_eps();
    // cancellation scale for |x| < 1 mirrors the theta estimate in 1/|x|
    let ax = x.abs().to_f64();
    let extra = if ax < 1.0 {
        theta_extra_bits(q.to_f64(), 1.0 / ax)
    } else {
        0
    };
    let mut bits = prec.bits() + extra;
    for _ in 0..=MAX_ESCALATIONS {
        let raw = g_raw(&q.at(bits), &x.with_prec(bits), bits, &eps.with_prec(bits))?;
        if meets_target(&raw.err, &raw.value, &eps) {
            return Ok(EvalResult {
                value: raw.value,
                abs_error: raw.err,
                terms_used: raw.terms,
            });
        }
        bits *= 2;
    }
    Err(Error::ConvergenceFailure(
        "g evaluation could not certify the target accuracy".into(),
    ))
}

/// Residuals of the three structural identities, with the error budget each
/// one is entitled to.
#[derive(Clone, Debug)]
pub struct IdentityResiduals {
    /// |theta(q,x) - 1 - qx theta(q,qx)|
    /// |theta(q,x) - theta(q^4,x^2/q) - qx theta(q^4,q x^2)|
    /// |theta(q,x) - theta_star(q,x) + g(q,x)|
    pub residuals: [Real; 3],
    /// Sum of the operand error bounds for each identity.
    pub bounds: [Real; 3],
}

impl IdentityResiduals {
    pub fn all_within_bounds(&self) -> bool {
        self.residuals
            .iter()
            .zip(&self.bounds)
            .all(|(r, b)| r <= b)
    }
}

/// Checks the functional equation, the even/odd split and the bilateral
/// decomposition at (q, x).
pub fn check_identities(
    q: &Param,
    x: &Complex,
    prec: &PrecisionConfig,
) -> Result<IdentityResiduals> {
    check_finite(x)?;
    if x.is_zero() {
        return Err(Error::InvalidInput(
            "identity checks need x != 0 (theta_star and g are undefined at 0)".into(),
        ));
    }
    let bits = prec.bits();
    let qv = q.at(bits);
    let x = x.with_prec(bits);
    let u = prec.unit_roundoff();

    let slack = |vals: &[&EvalResult]| -> Real {
        let mut s = Real::from_u64(16, bits) * &u;
        for v in vals {
            s = s + &(Real::from_u64(16, bits) * &u * &v.value.abs());
        }
        s
    };

    // (1) theta(q,x) = 1 + q x theta(q, qx)
    let th = eval_theta(q, &x, prec)?;
    let qx = x.scale(&qv);
    let th_qx = eval_theta(q, &qx, prec)?;
    let rhs1 = &Complex::one(bits) + &(&qx * &th_qx.value);
    let r1 = (&th.value - &rhs1).abs();
    let b1 = &th.abs_error() + &(qx.abs() * th_qx.abs_error()) + slack(&[&th, &th_qx]);

    // (2) theta(q,x) = theta(q^4, x^2/q) + q x theta(q^4, q x^2)
    let q4 = Param::from_real(qv.powu(4))?;
    let x2 = &x * &x;
    let arg_a = Complex::new(&x2.re / &qv, &x2.im / &qv);
    let arg_b = x2.scale(&qv);
    let ta = eval_theta(&q4, &arg_a, prec)?;
    let tb = eval_theta(&q4, &arg_b, prec)?;
    let rhs2 = &ta.value + &(&qx * &tb.value);
    let r2 = (&th.value - &rhs2).abs();
    let b2 = &th.abs_error() + &ta.abs_error() + &(qx.abs() * tb.abs_error()) + slack(&[&th, &ta, &tb]);

    // (3) theta = theta_star - g
    let ts = eval_theta_star(q, &x, prec)?;
    let g = eval_g(q, &x, prec)?;
    let rhs3 = &ts.value - &g.value;
    let r3 = (&th.value - &rhs3).abs();
    let b3 = &th.abs_error() + &ts.abs_error() + &g.abs_error() + slack(&[&th, &ts, &g]);

    Ok(IdentityResiduals {
        residuals: [r1, r2, r3],
        bounds: [b1, b2, b3],
    })
}

impl EvalResult {
    fn abs_error(&self) -> Real {
        self.abs_error.clone()
    }
}

/// Evaluates the Gauss-kernel family f_eps(z) = sum_n exp(-eps n^2) z^n
/// = theta(exp(-2 eps), z exp(eps)).
pub fn eval_katsnelson_family(
    eps: &Real,
    z: &Complex,
    prec: &PrecisionConfig,
) -> Result<EvalResult> {
    check_finite(z)?;
    if !eps.is_positive() {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let target = prec.target_eps();
    // q = e^{-2 eps} is close to 1 for small eps; the largest term of the
    // series at |z| > 1 has exponent ~ ln^2|z| / (4 eps)
    let az = z.abs().to_f64();
    let e = eps.to_f64();
    let extra = if az > 1.0 && e > 0.0 {
        ((az.ln().powi(2) / (4.0 * e) + e) / std::f64::consts::LN_2).ceil() as usize + 16
    } else {
        0
    };
    let mut bits = prec.bits() + extra;
    for _ in 0..=MAX_ESCALATIONS {
        let ew = eps.with_prec(bits);
        let two = Real::from_u64(2, bits);
        let qv = (-(&two * &ew)).exp();
        let scale = ew.exp();
        let arg = z.with_prec(bits).scale(&scale);
        let raw = theta_raw(&qv, &arg, bits, &target.with_prec(bits))?;
        if meets_target(&raw.err, &raw.value, &target) {
            return Ok(EvalResult {
                value: raw.value,
                abs_error: raw.err,
                terms_used: raw.terms,
            });
        }
        bits *= 2;
    }
    Err(Error::ConvergenceFailure(
        "katsnelson family evaluation could not certify the target accuracy".into(),
    ))
}
