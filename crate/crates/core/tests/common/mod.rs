//! Reference values for integration tests, computed without the tower code.
#![allow(dead_code)]

pub mod props;
pub mod svg;

use chilab::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// 40-digit references from an independent multiprecision evaluation of the
/// closed forms.
pub const PHI_40: &str = "1.618033988749894848204586834365638117720";
pub const CHI_40: &str = "1.355674293978082226578400594958635462710";
pub const CHI_PRIME_40: &str = "2.095293985223914492746816718866282583166";
pub const SILVER_40: &str = "2.414213562373095048801688724209698078570";
pub const BRONZE_40: &str = "3.302775637731994646559610633735247973126";
pub const SQRT2_40: &str = "1.414213562373095048801688724209698078570";

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn dec(s: &str) -> Rational {
    chilab::exact::rational::parse_rational(s).unwrap()
}

fn eval_int_poly(desc: &[i64], x: &Rational) -> Rational {
    desc.iter().fold(Rational::zero(), |acc, &c| {
        acc * x + Rational::from_integer(c.into())
    })
}

/// Bisection on an integer polynomial (coefficients highest degree first)
/// with a sign change on `[lo, hi]`, halving until the bracket is narrower
/// than `2^-bits`.
pub fn bisect(desc: &[i64], lo: Rational, hi: Rational, bits: u32) -> (Rational, Rational) {
    let (mut lo, mut hi) = (lo, hi);
    let lo_sign = eval_int_poly(desc, &lo).is_positive();
    assert_ne!(
        lo_sign,
        eval_int_poly(desc, &hi).is_positive(),
        "no sign change"
    );
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let v = eval_int_poly(desc, &mid);
        if v.is_zero() {
            return (mid.clone(), mid);
        }
        if v.is_positive() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Midpoint of a 120-bit bracket around the unique root in `[lo, hi]`.
pub fn root(desc: &[i64], lo: i64, hi: i64) -> Rational {
    let (a, b) = bisect(desc, q(lo, 1), q(hi, 1), 120);
    (a + b) / Rational::from_integer(2.into())
}

/// φ from x² − x − 1.
pub fn phi_ref() -> Rational {
    root(&[1, -1, -1], 1, 2)
}

/// χ from its integer minimal polynomial x⁴ + x³ − 3x² − x + 1 on [1, 2].
pub fn chi_ref() -> Rational {
    root(&[1, 1, -3, -1, 1], 1, 2)
}

/// χ′ from x⁴ − x³ − 3x² + x + 1, whose only root in [2, 3] is χ′.
pub fn chi_prime_ref() -> Rational {
    root(&[1, -1, -3, 1, 1], 2, 3)
}

pub fn metallic_ref(n: i64) -> Rational {
    root(&[1, -n, -1], n, n + 1)
}

pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}

pub fn pow10_inv(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}
