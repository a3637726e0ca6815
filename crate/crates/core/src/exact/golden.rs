//! The quadratic field Q(√5) in the φ-basis.
//!
//! An element is stored as `a·φ + b`. Products reduce with `φ² = φ + 1`:
//!
//! ```text
//! (aφ + b)(cφ + d) = (ac + ad + bc)φ + (ac + bd)
//! ```
//!
//! Since φ is irrational the representation is unique, so structural
//! equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenElem<T> {
    /// Coefficient of φ.
    pub a: T,
    /// Constant term.
    pub b: T,
}

impl<T> GoldenElem<T> {
    pub const fn new(a: T, b: T) -> Self {
        Self { a, b }
    }
}

impl<T: Field> GoldenElem<T> {
    pub fn phi() -> Self {
        Self::new(T::one(), T::zero())
    }

    /// Embeds a base-field scalar as `0·φ + b`.
    pub fn from_base(b: T) -> Self {
        Self::new(T::zero(), b)
    }

    /// True when the element lies in the base field.
    pub fn is_base(&self) -> bool {
        self.a.is_zero()
    }

    /// Galois conjugate: φ ↦ 1 − φ.
    pub fn conjugate(&self) -> Self {
        Self::new(-self.a.clone(), self.a.clone() + self.b.clone())
    }

    /// Field norm `x · conj(x) = b² + ab − a²`.
    pub fn norm(&self) -> T {
        let (a, b) = (&self.a, &self.b);
        b.clone() * b.clone() + a.clone() * b.clone() - a.clone() * a.clone()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Some(Self::new(c.a * n.clone(), c.b * n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.a.clone() * k.clone(), self.b.clone() * k.clone())
    }

    /// `(u, v)` with value `u + v·√5`.
    pub fn to_sqrt5_basis(&self) -> (T, T) {
        let half = T::from_u32(2).inv().expect("2 is invertible");
        let v = self.a.clone() * half;
        (self.b.clone() + v.clone(), v)
    }

    pub fn from_sqrt5_basis(u: T, v: T) -> Self {
        let a = v.clone() + v.clone();
        Self::new(a, u - v)
    }
}

impl GoldenElem<f64> {
    pub fn to_f64(&self) -> f64 {
        self.a * ((1.0 + 5f64.sqrt()) / 2.0) + self.b
    }
}

impl<T: Field> Add for GoldenElem<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Field> Sub for GoldenElem<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Field> Mul for GoldenElem<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let ac = self.a.clone() * rhs.a.clone();
        let ad = self.a * rhs.b.clone();
        let bc = self.b.clone() * rhs.a;
        let bd = self.b * rhs.b;
        Self::new(ac.clone() + ad + bc, ac + bd)
    }
}

impl<T: Field> Neg for GoldenElem<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<'a, T: Field> Add<&'a GoldenElem<T>> for &'a GoldenElem<T> {
    type Output = GoldenElem<T>;
    fn add(self, rhs: Self) -> GoldenElem<T> {
        self.clone() + rhs.clone()
    }
}

impl<'a, T: Field> Sub<&'a GoldenElem<T>> for &'a GoldenElem<T> {
    type Output = GoldenElem<T>;
    fn sub(self, rhs: Self) -> GoldenElem<T> {
        self.clone() - rhs.clone()
    }
}

impl<'a, T: Field> Mul<&'a GoldenElem<T>> for &'a GoldenElem<T> {
    type Output = GoldenElem<T>;
    fn mul(self, rhs: Self) -> GoldenElem<T> {
        self.clone() * rhs.clone()
    }
}

impl<T: Field> Zero for GoldenElem<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Field> One for GoldenElem<T> {
    fn one() -> Self {
        Self::new(T::zero(), T::one())
    }
}

impl<T: Field> Field for GoldenElem<T> {
    fn inv(&self) -> Option<Self> {
        GoldenElem::inv(self)
    }
}

impl<T: fmt::Display> fmt::Display for GoldenElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})φ + ({})", self.a, self.b)
    }
}
