//! Exact scalars and rigorous enclosures of constants.

mod bernoulli;
mod constants;
mod interval;
mod rational;

pub use bernoulli::{bernoulli, signed_bernoulli};
pub use constants::{
    half_integer_binomial, pi_enclosure, zeta_enclosure, zeta_enclosure_capped,
    zeta_integral_bracket, ZETA_MAX_HEAD,
};
pub use interval::RationalInterval;
pub use rational::{
    bits_for, ceil_scaled, dyadic, floor_scaled, int, parse_rational, pow10, rat, to_decimal,
    to_f64, to_fraction_string, ulp, Rational, Rounding,
};

use num_traits::Signed;

use crate::error::{Error, Result};

/// Requested maximum width of an enclosure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AccuracyRequest {
    max_width: Rational,
}

impl AccuracyRequest {
    pub fn new(max_width: Rational) -> Result<Self> {
        if !max_width.is_positive() {
            return Err(Error::Domain("requested width must be positive".into()));
        }
        Ok(Self { max_width })
    }

    /// `10^exp`.
    pub fn decimal(exp: i32) -> Self {
        Self {
            max_width: pow10(exp),
        }
    }

    pub fn max_width(&self) -> &Rational {
        &self.max_width
    }
}
