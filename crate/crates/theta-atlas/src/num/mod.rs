//! Numeric foundation: arbitrary-precision reals and complex numbers.

pub mod complex;
pub mod real;

pub use complex::Complex;
pub use real::{bits_for_digits, Real};
