//! Berezin symbols and Berezin numbers of operators on finite-dimensional
//! models of reproducing kernel Hilbert spaces, together with numerical
//! certifiers for a family of Berezin-number inequalities.
//!
//! The crate is organised bottom-up:
//!
//! * [`rkhs`] builds sampled spaces (Hardy, Bergman, diagonal, custom kernels)
//!   and their direct sums.
//! * [`calculus`] holds the dense complex matrix calculus: modulus, polar
//!   decomposition, Hermitian functional calculus, norms and block assembly.
//! * [`berezin`] evaluates Berezin symbols and grid Berezin numbers.
//! * [`generators`] produces seeded random instances.
//! * [`certifiers`] evaluates each inequality on a concrete instance.
//! * [`suite`] and [`report`] run seeded trial batches and serialise reports.

// `!(x > 0.0)` is used on purpose so NaN is rejected with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod berezin;
pub mod calculus;
pub mod certifiers;
pub mod config;
pub mod error;
pub mod generators;
pub mod report;
pub mod rkhs;
pub mod suite;

pub use berezin::{berezin_number, berezin_set, berezin_symbol, rotation_scan_ber, BerezinEvaluation};
pub use calculus::{FunctionPair, HermitianOperator, Operator};
pub use certifiers::{Certificate, Certification, Mode, Tolerance};
pub use error::{Error, Result};
pub use rkhs::{DirectSumSpace, KernelSpace, Model, SampledSpace, SpaceSpec};

pub use num_complex::Complex64;
