//! Guaranteed decimal output.
//!
//! Digits are truncated toward zero. For an irrational value the printed
//! string is the exact truncation and the error bound is strictly below one
//! unit in the last place. Rationals take an exact path.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::interval::{Exact, Interval};
use super::rational::{format_units, pow10, truncated_units, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalApprox {
    pub digits: String,
    /// Upper bound on `|printed − true|`.
    pub error_bound: Rational,
}

impl DecimalApprox {
    /// The printed value as an exact rational.
    pub fn to_rational(&self) -> Rational {
        super::rational::parse_rational(&self.digits).expect("decimal output always parses")
    }
}

impl fmt::Display for DecimalApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

fn ulp(digits: u32) -> Rational {
    Rational::new(BigInt::from(1), pow10(digits))
}

fn from_rational(x: &Rational, digits: u32) -> DecimalApprox {
    let units = truncated_units(x, digits);
    let printed = format_units(x.is_negative(), &units, digits);
    let value = Rational::new(units, pow10(digits));
    let value = if x.is_negative() { -value } else { value };
    DecimalApprox {
        digits: printed,
        error_bound: (x - value).abs(),
    }
}

/// Prints from an enclosure if both endpoints truncate to the same digits
/// and the enclosure is narrower than `10^-(digits+2)`.
pub fn decimal_from_interval(iv: &Interval, digits: u32) -> Option<DecimalApprox> {
    if iv.lo() == iv.hi() {
        return Some(from_rational(iv.lo(), digits));
    }
    if !(iv.is_positive() || iv.is_negative()) {
        return None;
    }
    if iv.width() >= ulp(digits + 2) {
        return None;
    }
    let lo_units = truncated_units(iv.lo(), digits);
    if lo_units != truncated_units(iv.hi(), digits) {
        return None;
    }
    let negative = iv.is_negative();
    let magnitude = Rational::new(lo_units.clone(), pow10(digits));
    let printed = if negative { -magnitude } else { magnitude };
    let error_bound = (iv.lo() - &printed).abs().max((iv.hi() - &printed).abs());
    Some(DecimalApprox {
        digits: format_units(negative, &lo_units, digits),
        error_bound,
    })
}

/// Starting precision, in bits, for `digits` decimals.
pub(crate) fn initial_bits(digits: u32) -> u32 {
    (digits + 2) * 10 / 3 + 40
}

const MAX_BITS: u32 = 1 << 20;

/// Evaluates `x` to `digits` decimals (truncated toward zero) with
/// `error_bound < 10^-digits`.
pub fn eval_decimal<E: Exact + ?Sized>(x: &E, digits: u32) -> Result<DecimalApprox> {
    if digits == 0 {
        return Err(Error::InvalidDigits);
    }
    if x.is_exact_zero() {
        return Ok(from_rational(&Rational::zero(), digits));
    }
    if let Some(r) = x.as_rational() {
        return Ok(from_rational(&r, digits));
    }
    let mut bits = initial_bits(digits);
    loop {
        let iv = x.enclose(bits);
        if let Some(d) = decimal_from_interval(&iv, digits) {
            return Ok(d);
        }
        // An irrational value sits strictly inside some decimal cell, so this
        // only triggers for values within 2^-MAX_BITS of a cell boundary.
        if bits >= MAX_BITS {
            let lo_units = truncated_units(iv.lo(), digits);
            let negative = iv.is_negative();
            let magnitude = Rational::new(lo_units.clone(), pow10(digits));
            let printed = if negative { -magnitude } else { magnitude };
            let error_bound = (iv.lo() - &printed).abs().max((iv.hi() - &printed).abs());
            return Ok(DecimalApprox {
                digits: format_units(negative, &lo_units, digits),
                error_bound,
            });
        }
        bits *= 2;
    }
}
