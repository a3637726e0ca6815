//! Exact arithmetic laboratory for the golden ratio φ, the chi ratio χ, its
//! companion χ′ and the metallic means.
//!
//! The exact core represents every constant in closed form, so identities
//! such as `χ² − χ/φ − 1 = 0` are checked with an exact zero residual. On
//! top of it sit convergent generators, proportional rectangle extension, a
//! paper-folding simulator and an SVG renderer for the constructions.

#![allow(clippy::large_enum_variant)]

pub mod constants;
pub mod error;
pub mod exact;
pub mod fold;
pub mod rect;
pub mod render;
pub mod scalar;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{DecimalApprox, Element, GoldenElem, Interval, TowerElem};
pub use scalar::Field;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact element of Q(√5).
pub type Golden = GoldenElem<Rational>;
/// Exact element `p + q·√r` over Q(√5).
pub type Tower = TowerElem<Rational>;
/// Golden-field element with `f64` coefficients, for quick numeric work.
pub type GoldenF64 = GoldenElem<f64>;
/// Golden-field element with `f32` coefficients.
pub type GoldenF32 = GoldenElem<f32>;
