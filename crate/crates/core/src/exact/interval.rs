//! Rational intervals with outward dyadic rounding, and the [`Exact`] trait
//! that lets any exactly-defined real be enclosed to a requested precision.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::golden::GoldenElem;
use super::rational::{int, round_down, round_up, sqrt_bounds, Rational};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Upper bound on `|x|` over the interval.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Upper bound on `|x - y|` for `x` in `self`, `y` in `other`.
    pub fn distance_bound(&self, other: &Interval) -> Rational {
        self.sub(other).magnitude()
    }

    pub fn round_out(&self, bits: u32) -> Self {
        Self {
            lo: round_down(&self.lo, bits),
            hi: round_up(&self.hi, bits),
        }
    }

    pub fn add(&self, other: &Interval) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn mul(&self, other: &Interval, bits: u32) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.iter().max().expect("four products").clone();
        Self { lo, hi }.round_out(bits)
    }

    /// `None` when the interval touches zero.
    pub fn recip(&self, bits: u32) -> Option<Self> {
        if !(self.is_positive() || self.is_negative()) {
            return None;
        }
        Some(
            Self {
                lo: self.hi.recip(),
                hi: self.lo.recip(),
            }
            .round_out(bits),
        )
    }

    /// Enclosure of `sqrt(max(x, 0))`.
    pub fn sqrt(&self, bits: u32) -> Self {
        let zero = Rational::zero();
        let lo = if self.lo.is_negative() {
            &zero
        } else {
            &self.lo
        };
        let hi = if self.hi.is_negative() {
            &zero
        } else {
            &self.hi
        };
        Self {
            lo: sqrt_bounds(lo, bits).0,
            hi: sqrt_bounds(hi, bits).1,
        }
    }
}

/// Enclosure of φ = (1 + √5)/2.
pub fn phi_enclosure(bits: u32) -> Interval {
    let (lo, hi) = sqrt_bounds(&int(5), bits + 1);
    let half = Rational::new(1.into(), 2.into());
    Interval::new(
        (lo + Rational::one()) * &half,
        (hi + Rational::one()) * half,
    )
}

/// A real number that can be enclosed to any precision.
///
/// `enclose(bits)` must return an interval containing the value whose width
/// shrinks to zero as `bits` grows. `is_exact_zero` is a structural test:
/// it must be exact for values that are zero, since refinement alone never
/// separates zero from zero.
pub trait Exact {
    fn enclose(&self, bits: u32) -> Interval;

    fn is_exact_zero(&self) -> bool;

    /// The value, when it is structurally a rational.
    fn as_rational(&self) -> Option<Rational> {
        None
    }
}

impl Exact for Rational {
    fn enclose(&self, _bits: u32) -> Interval {
        Interval::point(self.clone())
    }

    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Exact for GoldenElem<Rational> {
    fn enclose(&self, bits: u32) -> Interval {
        if self.a.is_zero() {
            return Interval::point(self.b.clone());
        }
        phi_enclosure(bits + 8)
            .scale(&self.a)
            .add(&Interval::point(self.b.clone()))
            .round_out(bits + 4)
    }

    fn is_exact_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.a.is_zero().then(|| self.b.clone())
    }
}

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 22;

/// Exact sign: structural zero test first, then interval refinement with the
/// precision doubled each round until the enclosure excludes zero.
pub fn sign<E: Exact + ?Sized>(x: &E) -> i8 {
    if x.is_exact_zero() {
        return 0;
    }
    if let Some(r) = x.as_rational() {
        return match r.cmp(&Rational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        };
    }
    let mut bits = START_BITS;
    loop {
        let iv = x.enclose(bits);
        if iv.is_positive() {
            return 1;
        }
        if iv.is_negative() {
            return -1;
        }
        assert!(
            bits < MAX_BITS,
            "sign refinement failed to separate a nonzero value from zero"
        );
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn phi_enclosure_is_tight() {
        let iv = phi_enclosure(100);
        assert!(iv.lo() < iv.hi());
        let phi_lo = frac(1_618_033_988, 1_000_000_000);
        let phi_hi = frac(1_618_033_989, 1_000_000_000);
        assert!(iv.lo() > &phi_lo && iv.hi() < &phi_hi);
        assert!(iv.width() < Rational::new(1.into(), num_bigint::BigInt::from(1) << 99usize));
    }

    #[test]
    fn interval_ops_contain_results() {
        let a = Interval::new(frac(1, 3), frac(1, 2));
        let b = Interval::new(frac(-2, 1), frac(1, 1));
        let m = a.mul(&b, 30);
        assert!(m.contains(&frac(-1, 1)) && m.contains(&frac(1, 2)));
        assert!(a.recip(30).unwrap().contains(&frac(3, 1)));
        assert!(b.recip(30).is_none());
        let s = Interval::point(frac(2, 1)).sqrt(40);
        assert!(s.lo() >= &frac(14142135623, 10_000_000_000));
        assert!(s.hi() <= &frac(14142135624, 10_000_000_000));
    }

    #[test]
    fn golden_sign() {
        type G = GoldenElem<Rational>;
        assert_eq!(sign(&G::new(frac(0, 1), frac(0, 1))), 0);
        // φ − 1 = 1/φ > 0
        assert_eq!(sign(&G::new(frac(1, 1), frac(-1, 1))), 1);
        // 1 − φ < 0
        assert_eq!(sign(&G::new(frac(-1, 1), frac(1, 1))), -1);
        // 1597/987 > φ > 987/610, both within 1e-6 of φ
        assert_eq!(sign(&G::new(frac(987, 1), frac(-1597, 1))), -1);
        assert_eq!(sign(&G::new(frac(610, 1), frac(-987, 1))), 1);
    }
}
