//! Arbitrary-precision real arithmetic on top of `astro-float`.
//!
//! [`Real`] wraps `BigFloat` with value-carried precision: binary operators
//! work at the larger operand precision, so a computation stays at the
//! precision its inputs were created with. Transcendentals share a
//! thread-local constants cache.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

const RM: RoundingMode = RoundingMode::ToEven;

/// Fallback precision for values whose own precision is unavailable (NaN/Inf).
const FALLBACK_BITS: usize = 128;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Number of mantissa bits that guarantee `digits` significant decimal digits,
/// with guard bits on top.
pub fn bits_for_digits(digits: u32) -> usize {
    let raw = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 16;
    (raw + 63) / 64 * 64
}

/// Arbitrary-precision floating-point real number.
#[derive(Clone)]
pub struct Real(BigFloat);

impl Real {
    pub fn zero(bits: usize) -> Self {
        Real(BigFloat::from_i8(0, bits))
    }

    pub fn one(bits: usize) -> Self {
        Real(BigFloat::from_i8(1, bits))
    }

    pub fn from_i64(v: i64, bits: usize) -> Self {
        Real(BigFloat::from_i64(v, bits))
    }

    pub fn from_u64(v: u64, bits: usize) -> Self {
        Real(BigFloat::from_u64(v, bits))
    }

    /// Exact embedding of an `f64` (every finite double is representable).
    pub fn from_f64(v: f64, bits: usize) -> Self {
        Real(BigFloat::from_f64(v, bits))
    }

    /// Parses a decimal literal at the given precision.
    pub fn parse(s: &str, bits: usize) -> Option<Self> {
        let v = CONSTS.with(|cc| BigFloat::parse(s, Radix::Dec, bits, RM, &mut cc.borrow_mut()));
        if v.is_nan() && s.trim().to_ascii_lowercase() != "nan" {
            return None;
        }
        Some(Real(v))
    }

    pub fn pi(bits: usize) -> Self {
        Real(CONSTS.with(|cc| cc.borrow_mut().pi(bits, RM)))
    }

    pub fn prec(&self) -> usize {
        match self.0.precision() {
            Some(p) if p > 0 => p,
            _ => FALLBACK_BITS,
        }
    }

    /// Returns the same value carried at `bits` precision (exact when widening).
    pub fn with_prec(&self, bits: usize) -> Self {
        let mut v = self.0.clone();
        if v.set_precision(bits, RM).is_err() {
            return Real(BigFloat::nan(None));
        }
        Real(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    /// Sign as -1, 0 or +1.
    pub fn signum_i(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn neg(&self) -> Self {
        let mut v = self.0.clone();
        v.inv_sign();
        Real(v)
    }

    pub fn square(&self) -> Self {
        let p = self.prec();
        Real(self.0.mul(&self.0, p, RM))
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        Real(self.0.reciprocal(p, RM))
    }

    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        Real(self.0.sqrt(p, RM))
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        Real(CONSTS.with(|cc| self.0.exp(p, RM, &mut cc.borrow_mut())))
    }

    pub fn ln(&self) -> Self {
        let p = self.prec();
        Real(CONSTS.with(|cc| self.0.ln(p, RM, &mut cc.borrow_mut())))
    }

    pub fn atan(&self) -> Self {
        let p = self.prec();
        Real(CONSTS.with(|cc| self.0.atan(p, RM, &mut cc.borrow_mut())))
    }

    pub fn sin(&self) -> Self {
        let p = self.prec();
        Real(CONSTS.with(|cc| self.0.sin(p, RM, &mut cc.borrow_mut())))
    }

    pub fn cos(&self) -> Self {
        let p = self.prec();
        Real(CONSTS.with(|cc| self.0.cos(p, RM, &mut cc.borrow_mut())))
    }

    /// Integer power with a non-negative exponent.
    pub fn powu(&self, n: u64) -> Self {
        let p = self.prec();
        Real(self.0.powi(n as usize, p, RM))
    }

    /// Integer power, negative exponents via the reciprocal.
    pub fn powi(&self, n: i64) -> Self {
        if n >= 0 {
            self.powu(n as u64)
        } else {
            self.powu(n.unsigned_abs()).recip()
        }
    }

    /// Real power `self^e` (requires `self > 0` unless `e` is an integer).
    pub fn pow(&self, e: &Real) -> Self {
        let p = self.prec().max(e.prec());
        Real(CONSTS.with(|cc| self.0.pow(&e.0, p, RM, &mut cc.borrow_mut())))
    }

    pub fn min(&self, other: &Real) -> Self {
        Real(self.0.min(&other.0))
    }

    pub fn max(&self, other: &Real) -> Self {
        Real(self.0.max(&other.0))
    }

    /// Power of ten at this value's precision.
    pub fn ten_pow(k: i64, bits: usize) -> Self {
        Real::from_u64(10, bits).powi(k)
    }

    /// Base-2 exponent of the value (value = mantissa * 2^exp, mantissa in [0.5, 1)).
    pub fn exponent2(&self) -> Option<i64> {
        self.0.exponent().map(|e| e as i64)
    }

    /// Nearest-double approximation; saturates to +/-inf outside the f64 range.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.0.is_zero() {
            return 0.0;
        }
        let (words, _n, sign, exp, _inexact) = match self.0.as_raw_parts() {
            Some(parts) => parts,
            None => return f64::NAN,
        };
        let top = words[words.len() - 1] as f64;
        let next = if words.len() > 1 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        // value = +/- 0.mantissa * 2^exp with the top mantissa bit set
        let frac = top / 2f64.powi(64) + next / 2f64.powi(128);
        let mag = if exp > 1100 {
            f64::INFINITY
        } else if exp < -1100 {
            0.0
        } else {
            frac * 2f64.powi(exp)
        };
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Decimal digits of `|self|` rounded to `ndigits` significant digits.
    ///
    /// Returns `(sign, digits, exp10)` with `value = sign * 0.d1 d2 ... * 10^exp10`.
    /// Zero yields an empty digit vector.
    pub fn to_decimal_parts(&self, ndigits: usize) -> (i8, Vec<u8>, i64) {
        if self.0.is_zero() {
            return (0, Vec::new(), 0);
        }
        let (sign, mut digits, mut exp) = CONSTS
            .with(|cc| self.0.convert_to_radix(Radix::Dec, RM, &mut cc.borrow_mut()))
            .expect("finite value converts to decimal");
        let s = if sign == Sign::Neg { -1i8 } else { 1 };
        if digits.len() > ndigits {
            let round_up = digits[ndigits] >= 5;
            digits.truncate(ndigits);
            if round_up {
                let mut i = ndigits;
                loop {
                    if i == 0 {
                        // 0.999... rounds to 1.000...: shift the exponent
                        digits.insert(0, 1);
                        digits.truncate(ndigits);
                        exp += 1;
                        break;
                    }
                    i -= 1;
                    if digits[i] == 9 {
                        digits[i] = 0;
                    } else {
                        digits[i] += 1;
                        break;
                    }
                }
            }
        } else {
            digits.resize(ndigits, 0);
        }
        (s, digits, exp as i64)
    }

    /// Scientific-notation decimal string with `ndigits` significant digits.
    pub fn to_sci(&self, ndigits: usize) -> String {
        let ndigits = ndigits.max(1);
        let (sign, digits, exp) = self.to_decimal_parts(ndigits);
        if sign == 0 {
            let mut s = String::from("0.");
            s.push_str(&"0".repeat(ndigits.saturating_sub(1)));
            s.push_str("e+0");
            return s;
        }
        let mut s = String::with_capacity(ndigits + 8);
        if sign < 0 {
            s.push('-');
        }
        s.push((b'0' + digits[0]) as char);
        if ndigits > 1 {
            s.push('.');
            for &d in &digits[1..] {
                s.push((b'0' + d) as char);
            }
        }
        let e = exp - 1; // leading digit carries one power of ten
        if e >= 0 {
            s.push_str(&format!("e+{e}"));
        } else {
            s.push_str(&format!("e-{}", -e));
        }
        s
    }

    /// Fixed-point decimal string with `frac` digits after the point.
    /// Intended for values of moderate magnitude (grids, spectral values).
    pub fn to_fixed(&self, frac: usize) -> String {
        let shifted = self * &Real::ten_pow(frac as i64, self.prec());
        let (sign, digits, exp) = shifted.to_decimal_parts(40 + frac);
        if sign == 0 {
            return if frac == 0 {
                "0".into()
            } else {
                format!("0.{}", "0".repeat(frac))
            };
        }
        // integer nearest to |shifted| as a digit string
        let int_len = exp.max(0) as usize;
        let mut int_digits: Vec<u8> = Vec::with_capacity(int_len.max(1));
        for i in 0..int_len {
            int_digits.push(*digits.get(i).unwrap_or(&0));
        }
        // round at the decimal point of the shifted value
        let next = if exp >= 0 {
            *digits.get(exp as usize).unwrap_or(&0)
        } else if exp == -1 {
            // |value| in [0.05, 0.5) after shifting: first digit decides
            digits[0]
        } else {
            0
        };
        if next >= 5 {
            let mut i = int_digits.len();
            let mut carry = true;
            while carry && i > 0 {
                i -= 1;
                if int_digits[i] == 9 {
                    int_digits[i] = 0;
                } else {
                    int_digits[i] += 1;
                    carry = false;
                }
            }
            if carry {
                int_digits.insert(0, 1);
            }
        }
        if int_digits.is_empty() {
            int_digits.push(0);
        }
        let joined: String = int_digits.iter().map(|d| (b'0' + d) as char).collect();
        let joined = joined.trim_start_matches('0');
        let joined = if joined.is_empty() { "0" } else { joined };
        let padded = format!("{:0>width$}", joined, width = frac + 1);
        let (ip, fp) = padded.split_at(padded.len() - frac);
        let mut s = String::new();
        if sign < 0 {
            s.push('-');
        }
        s.push_str(ip);
        if frac > 0 {
            s.push('.');
            s.push_str(fp);
        }
        s
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(20))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $bf:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.prec().max(rhs.prec());
                Real(self.0.$bf(&rhs.0, p, RM))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(self)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::neg(&self)
    }
}

impl AddAssign<&Real> for Real {
    fn add_assign(&mut self, rhs: &Real) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Real> for Real {
    fn sub_assign(&mut self, rhs: &Real) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Real> for Real {
    fn mul_assign(&mut self, rhs: &Real) {
        *self = &*self * rhs;
    }
}
