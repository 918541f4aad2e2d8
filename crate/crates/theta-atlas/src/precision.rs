//! Precision configuration and validated input types.

use crate::error::{Error, Result};
use crate::num::{bits_for_digits, Complex, Real};

/// Requested accuracy for an evaluation.
///
/// `target_digits` is what the caller gets certified; `working_digits` is the
/// arithmetic precision used internally. Evaluations escalate the working
/// precision on their own when cancellation eats into the target, so the
/// configured values are a floor, not a ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionConfig {
    target_digits: u32,
    working_digits: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            target_digits: 30,
            working_digits: 50,
        }
    }
}

impl PrecisionConfig {
    /// Requires `target >= 10` and `working >= target + 10`.
    pub fn new(target_digits: u32, working_digits: u32) -> Result<Self> {
        if target_digits < 10 {
            return Err(Error::InvalidInput(format!(
                "target_digits = {target_digits}, need at least 10"
            )));
        }
        if working_digits < target_digits + 10 {
            return Err(Error::InvalidInput(format!(
                "working_digits = {working_digits} < target_digits + 10 = {}",
                target_digits + 10
            )));
        }
        Ok(PrecisionConfig {
            target_digits,
            working_digits,
        })
    }

    /// Target digits with the default guard-digit margin for working precision.
    pub fn with_target(target_digits: u32) -> Result<Self> {
        Self::new(target_digits, target_digits + 20)
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    /// Mantissa bits for the working precision.
    pub fn bits(&self) -> usize {
        bits_for_digits(self.working_digits)
    }

    /// `10^-target_digits` at working precision.
    pub fn target_eps(&self) -> Real {
        Real::ten_pow(-(self.target_digits as i64), self.bits())
    }

    /// Unit roundoff charged per arithmetic operation in error bounds.
    pub fn unit_roundoff(&self) -> Real {
        Real::ten_pow(-(self.working_digits as i64), self.bits())
    }
}

/// The series parameter q, pinned to (0, 1).
///
/// A `Param` remembers its decimal literal when it was built from one, so a
/// precision escalation can recover additional digits exactly instead of
/// widening a rounded value.
#[derive(Clone, Debug)]
pub struct Param {
    value: Real,
    decimal: Option<String>,
}

impl Param {
    pub fn from_real(value: Real) -> Result<Self> {
        if !value.is_finite() || !value.is_positive() || value >= Real::one(value.prec()) {
            return Err(Error::InvalidInput(format!(
                "q must lie in (0,1), got {value}"
            )));
        }
        Ok(Param {
            value,
            decimal: None,
        })
    }

    /// Parses a decimal literal such as `"0.8"`.
    pub fn from_str(s: &str, prec: &PrecisionConfig) -> Result<Self> {
        let value = Real::parse(s, prec.bits())
            .ok_or_else(|| Error::InvalidInput(format!("cannot parse q from {s:?}")))?;
        let mut p = Param::from_real(value)?;
        p.decimal = Some(s.trim().to_string());
        Ok(p)
    }

    /// Embeds an `f64` exactly.
    pub fn from_f64(q: f64, prec: &PrecisionConfig) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::InvalidInput(format!("q must be finite, got {q}")));
        }
        Param::from_real(Real::from_f64(q, prec.bits()))
    }

    pub fn value(&self) -> &Real {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// The parameter at `bits` precision, exact with respect to the original input.
    pub fn at(&self, bits: usize) -> Real {
        if bits <= self.value.prec() {
            return self.value.with_prec(bits);
        }
        match &self.decimal {
            Some(s) => Real::parse(s, bits).expect("literal parsed before"),
            None => self.value.with_prec(bits),
        }
    }
}

/// Evaluation output: a value plus a rigorous absolute error bound.
#[derive(Clone, Debug)]
pub struct EvalResult {
    /// Approximate function value.
    pub value: Complex,
    /// Upper bound on the distance to the true value (truncation tail plus
    /// rounding allowance).
    pub abs_error: Real,
    /// Truncation index actually summed (series) or factors used (products).
    pub terms_used: usize,
}

impl EvalResult {
    /// Upper bound on the true |f|: |value| + abs_error.
    pub fn abs_upper(&self) -> Real {
        self.value.abs() + self.abs_error.clone()
    }

    /// Lower bound on the true |f|, clamped at zero.
    pub fn abs_lower(&self) -> Real {
        let l = self.value.abs() - self.abs_error.clone();
        let z = Real::zero(l.prec());
        if l < z {
            z
        } else {
            l
        }
    }
}

/// Validates a finite complex argument.
pub fn check_finite(x: &Complex) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::InvalidInput("non-finite argument".into()));
    }
    Ok(())
}
