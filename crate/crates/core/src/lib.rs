//! Certified evaluation of Mathieu's series
//!
//! ```text
//! S(r) = Σ_{n≥1} 2n / (n² + r²)²,   r > 0
//! ```
//!
//! together with the bracketing function α(r), the two-sided nested bounds
//! with constants `ζ(3)/(6ζ(3)−6)` and `13/30`, and machine-checkable
//! replications of the lemmas behind them.
//!
//! Every quantity that matters for rigor is an exact rational or a
//! [`RationalInterval`] with exact rational endpoints. No floating point
//! enters the rigor path; `f64` appears only in diagnostics.
//!
//! Module map:
//!
//! * [`exact`]: rationals, intervals, Bernoulli numbers, π and ζ(s) enclosures.
//! * [`polyalg`]: dense polynomials over rationals and intervals, rational
//!   functions, Taylor shifts and sign certificates.
//! * [`eval`]: certified evaluators for S(r), the cubed companion sum,
//!   α(r), T(r) and the closed-form bounds.
//! * [`asymptotics`]: truncated Laurent series in `x = 1/r²`.
//! * [`verify`]: lemma and theorem reports.

pub mod asymptotics;
pub mod error;
pub mod eval;
pub mod exact;
pub mod polyalg;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{AccuracyRequest, Rational, RationalInterval};
