//! Scalar abstraction shared by the generic field types.
//!
//! Everything that only needs field operations (continued fractions, the
//! golden field, polynomial evaluation) is written against [`Field`], so the
//! same code runs over exact rationals and over `f32`/`f64` for quick
//! numeric cross-checks.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub trait Field:
    Clone + PartialEq + Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    fn from_u32(n: u32) -> Self {
        let mut acc = Self::zero();
        let mut bit = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + bit.clone();
            }
            bit = bit.clone() + bit;
            n >>= 1;
        }
        acc
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl Field for f32 {
    fn inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Debug + Neg<Output = T>,
{
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}
