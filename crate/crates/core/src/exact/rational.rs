//! Helpers around `BigRational`: exact square roots, dyadic rounding,
//! square-root bounds and the `num/den` string form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den`, always with an explicit denominator.
pub fn to_ratio_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p`, `p/q`, or a finite decimal such as `-1.25`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let s = token.trim();
    if s.is_empty() {
        return Err(Error::parse(token, "empty number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::parse(token, "numerator is not an integer"))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::parse(token, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(Error::parse(token, "zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fraction);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(token, "malformed decimal"));
        }
        let n: BigInt = digits.parse().expect("digits checked");
        let value = Rational::new(n, pow10(fraction.len() as u32));
        return Ok(if negative { -value } else { value });
    }
    s.parse::<BigInt>()
        .map(Rational::from_integer)
        .map_err(|_| Error::parse(token, "not an integer, fraction or decimal"))
}

pub fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

pub(crate) fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

/// Exact square root if `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

pub(crate) fn floor_int(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub(crate) fn ceil_int(x: &Rational) -> BigInt {
    -(-x.numer()).div_floor(x.denom())
}

/// Largest `k / 2^bits` that is `<= x`.
pub(crate) fn round_down(x: &Rational, bits: u32) -> Rational {
    Rational::new(
        floor_int(&(x * Rational::from_integer(pow2(bits)))),
        pow2(bits),
    )
}

/// Smallest `k / 2^bits` that is `>= x`.
pub(crate) fn round_up(x: &Rational, bits: u32) -> Rational {
    Rational::new(
        ceil_int(&(x * Rational::from_integer(pow2(bits)))),
        pow2(bits),
    )
}

/// Dyadic bounds `lo <= sqrt(x) <= hi` with `hi - lo <= 2^-bits`. `x` must be `>= 0`.
pub(crate) fn sqrt_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(!x.is_negative());
    let scaled = x * Rational::from_integer(pow2(2 * bits));
    let lo = floor_int(&scaled).sqrt();
    let ceil = ceil_int(&scaled);
    let mut hi = ceil.sqrt();
    if &hi * &hi < ceil {
        hi += 1;
    }
    (Rational::new(lo, pow2(bits)), Rational::new(hi, pow2(bits)))
}

/// Splits a positive integer as `n = s^2 * k` by trial division, pulling out
/// every square factor built from primes below 10^5. A cofactor above that
/// bound is tested once for being a perfect square.
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while &p * &p <= rest && p < limit {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            root *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        return (root * r, BigInt::one());
    }
    (root, rest)
}

/// `|x|` truncated to `digits` decimals, as an integer count of `10^-digits`.
pub(crate) fn truncated_units(x: &Rational, digits: u32) -> BigInt {
    let scaled = x.abs() * Rational::from_integer(pow10(digits));
    scaled.to_integer()
}

/// Renders `units * 10^-digits` with a leading sign.
pub(crate) fn format_units(negative: bool, units: &BigInt, digits: u32) -> String {
    let s = units.to_string();
    let width = digits as usize + 1;
    let s = format!("{s:0>width$}");
    let (int_part, frac_part) = s.split_at(s.len() - digits as usize);
    let sign = if negative && !units.is_zero() {
        "-"
    } else {
        ""
    };
    format!("{sign}{int_part}.{frac_part}")
}

/// Exact decimal rendering of a rational whose denominator divides a power of
/// ten, with trailing zeros removed. Other values fall back to 12 truncated digits.
pub fn format_terminating(x: &Rational) -> String {
    for k in 0..=24u32 {
        let scaled = x * Rational::from_integer(pow10(k));
        if scaled.is_integer() {
            if k == 0 {
                return scaled.to_integer().to_string();
            }
            let s = format_units(x.is_negative(), &scaled.to_integer().abs(), k);
            return s.trim_end_matches('0').trim_end_matches('.').to_string();
        }
    }
    format_units(x.is_negative(), &truncated_units(x, 12), 12)
}
