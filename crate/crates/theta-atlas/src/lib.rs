//! Numerical atlas of the partial theta function
//! `theta(q,x) = sum_{j>=0} q^{j(j+1)/2} x^j` for q in (0,1).
//!
//! The crate evaluates `theta`, its bilateral companion `theta_star` and the
//! tail series `g` with certified error bounds, localizes and certifies all
//! real and complex zeros of `theta(q,.)` inside a disk, computes the spectrum
//! of parameter values where double zeros occur, and verifies the zero-location
//! theorems (half-annulus containment, zero-free right half-plane for small q,
//! left half-disk of radius 49.8) on parameter sweeps.
//!
//! Entry points by task:
//!
//! - evaluation: [`series::eval_theta`], [`series::eval_theta_star`],
//!   [`series::eval_g`], [`series::check_identities`],
//!   [`series::eval_katsnelson_family`]
//! - real zeros: [`realzeros::bracket_real_zero`], [`realzeros::find_real_zero`],
//!   [`realzeros::list_real_zeros`]
//! - complex zeros: [`complexzeros::build_truncation`],
//!   [`complexzeros::find_all_zeros`], [`complexzeros::count_pairs`]
//! - spectrum: [`spectrum::find_spectral_point`], [`spectrum::eval_psi`],
//!   [`spectrum::chi_mu_sequences`], [`spectrum::find_imaginary_axis_solution`]
//! - regions and proof quantities: [`regions::contains`],
//!   [`regions::verify_theorem`], [`regions::eval_s`], [`regions::eval_w`],
//!   [`regions::proof_constants`] and the `check_*` reports
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `theta-atlas` binary exposes the same operations as subcommands emitting
//! JSON/CSV reports and SVG figures.

pub mod complexzeros;
pub mod error;
pub mod num;
pub mod precision;
pub mod realzeros;
pub mod regions;
pub mod report;
pub mod series;
pub mod spectrum;

pub use error::{Error, Result};
pub use num::{Complex, Real};
pub use precision::{EvalResult, Param, PrecisionConfig};
