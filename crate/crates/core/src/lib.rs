//! Generalized zeta-function regularization of the divergent sums
//! `sum_{n>=1} n^alpha` driven by a first-order generator `L = -h(t) d/dt`.
//!
//! The Riemann scheme is the case `h = 1`. Any other admissible `h` adds a
//! correction to `zeta(-alpha)` that is computed exactly for integer
//! exponents ([`trace`]) and numerically for fractional ones
//! ([`fractional`], [`hankel`]).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fractional;
pub mod generator;
pub mod hankel;
pub mod quad;
pub mod roots;
pub mod series;
pub mod special;
pub mod stirling;
pub mod trace;
pub mod zeta_fn;

pub use error::{Error, Result};
pub use generator::{GeneratorSpec, HankelValidation, PhiData};
pub use series::{PowerSeries, Rational};
