//! One-level radical tower over Q(√5): values `p + q·√r` with `p, q, r`
//! in the golden field.
//!
//! A tower element never stores a radicand that is already a square in
//! Q(√5); [`TowerElem::new`] collapses those. With that guarantee the value
//! is zero exactly when `p = 0` and `q·r = 0`, which is what makes the
//! structural zero test sound.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::golden::GoldenElem;
use super::interval::{sign, Exact, Interval};
use super::rational::{rational_sqrt, square_part, Rational};
use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerElem<T> {
    pub p: GoldenElem<T>,
    pub q: GoldenElem<T>,
    /// Radicand; zero whenever `q` is zero.
    pub r: GoldenElem<T>,
}

impl<T: Field> TowerElem<T> {
    pub fn from_golden(p: GoldenElem<T>) -> Self {
        Self {
            p,
            q: GoldenElem::zero(),
            r: GoldenElem::zero(),
        }
    }

    /// `p − q·√r`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
            r: self.r.clone(),
        }
    }

    pub fn is_structurally_zero(&self) -> bool {
        self.p.is_zero() && (self.q.is_zero() || self.r.is_zero())
    }

    fn normalized(mut self) -> Self {
        if self.q.is_zero() || self.r.is_zero() {
            self.q = GoldenElem::zero();
            self.r = GoldenElem::zero();
        }
        self
    }

    // The `*_same` helpers assume both operands already share `self.r`
    // (or have q = 0).

    fn add_same(&self, other: &Self, r: &GoldenElem<T>) -> Self {
        Self {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
            r: r.clone(),
        }
        .normalized()
    }

    fn mul_same(&self, other: &Self, r: &GoldenElem<T>) -> Self {
        let qq = &self.q * &other.q;
        Self {
            p: &self.p * &other.p + &qq * r,
            q: &self.p * &other.q + &self.q * &other.p,
            r: r.clone(),
        }
        .normalized()
    }

    /// `1/x = conj(x) / (p² − q²r)`.
    fn inv_same(&self) -> Option<Self> {
        let d = &self.p * &self.p - &(&self.q * &self.q) * &self.r;
        let d_inv = d.inv()?;
        let c = self.conjugate();
        Some(
            Self {
                p: c.p * d_inv.clone(),
                q: c.q * d_inv,
                r: self.r.clone(),
            }
            .normalized(),
        )
    }
}

pub type Golden = GoldenElem<Rational>;
pub type Tower = TowerElem<Rational>;

/// Nonnegative square root of `x` inside Q(√5), if there is one.
///
/// With `x = u + v√5` and a root `e + f√5`: `e² + 5f² = u` and `2ef = v`,
/// so `e²` is a root of `t² − u·t + 5v²/4` and the norm `u² − 5v²` must be a
/// rational square.
pub fn golden_sqrt(x: &Golden) -> Option<Golden> {
    if x.is_zero() {
        return Some(Golden::zero());
    }
    if sign(x) < 0 {
        return None;
    }
    let (u, v) = x.to_sqrt5_basis();
    let mut candidates = Vec::new();
    if v.is_zero() {
        if let Some(e) = rational_sqrt(&u) {
            candidates.push((e, Rational::zero()));
        }
        if let Some(f) = rational_sqrt(&(&u / Rational::from_integer(5.into()))) {
            candidates.push((Rational::zero(), f));
        }
    } else {
        let n = rational_sqrt(&(&u * &u - &v * &v * Rational::from_integer(5.into())))?;
        let two = Rational::from_integer(2.into());
        for e2 in [(&u + &n) / &two, (&u - &n) / &two] {
            if let Some(e) = rational_sqrt(&e2) {
                if !e.is_zero() {
                    let f = &v / (&two * &e);
                    candidates.push((e, f));
                }
            }
        }
    }
    candidates.into_iter().find_map(|(e, f)| {
        let s = Golden::from_sqrt5_basis(e, f);
        (&s * &s == *x).then(|| if sign(&s) < 0 { -s } else { s })
    })
}

fn describe(r: &Golden) -> String {
    let (u, v) = r.to_sqrt5_basis();
    format!("{u} + {v}·√5")
}

impl Tower {
    /// Builds `p + q·√r`, collapsing `√r` when `r` is a square in Q(√5).
    pub fn new(p: Golden, q: Golden, r: Golden) -> Result<Self> {
        if sign(&r) < 0 {
            return Err(Error::NegativeRadicand(describe(&r)));
        }
        if q.is_zero() || r.is_zero() {
            return Ok(Self::from_golden(p));
        }
        if let Some(s) = golden_sqrt(&r) {
            return Ok(Self::from_golden(p + q * s));
        }
        Ok(Self { p, q, r })
    }

    /// `√r`.
    pub fn sqrt(r: Golden) -> Result<Self> {
        Self::new(Golden::zero(), Golden::one(), r)
    }

    pub fn from_rational(x: Rational) -> Self {
        Self::from_golden(Golden::from_base(x))
    }

    /// The radicand, or `None` when the element lies in Q(√5).
    pub fn radicand(&self) -> Option<&Golden> {
        (!self.q.is_zero()).then_some(&self.r)
    }

    pub fn as_golden(&self) -> Option<Golden> {
        self.q.is_zero().then(|| self.p.clone())
    }

    /// Rewrites the element over radicand `r`. Works when `self` has no
    /// radical part or when `self.r / r` is a square `s²` in Q(√5), using
    /// `√(self.r) = s·√r`.
    pub fn lift_to(&self, r: &Golden) -> Option<Self> {
        if self.q.is_zero() {
            return Some(self.clone());
        }
        if r.is_zero() {
            return None;
        }
        if &self.r == r {
            return Some(self.clone());
        }
        let ratio = self.r.checked_div(r)?;
        let s = golden_sqrt(&ratio)?;
        Some(Self {
            p: self.p.clone(),
            q: &self.q * &s,
            r: r.clone(),
        })
    }

    fn align(&self, other: &Self) -> Result<(Self, Self, Golden)> {
        match (self.radicand(), other.radicand()) {
            (None, None) => Ok((self.clone(), other.clone(), Golden::zero())),
            (Some(r), None) | (None, Some(r)) => Ok((self.clone(), other.clone(), r.clone())),
            (Some(r), Some(_)) => match other.lift_to(r) {
                Some(o) => Ok((self.clone(), o, r.clone())),
                None => Err(Error::RadicandMismatch {
                    left: describe(&self.r),
                    right: describe(&other.r),
                }),
            },
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (x, y, r) = self.align(other)?;
        Ok(x.add_same(&y, &r))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (x, y, r) = self.align(other)?;
        Ok(x.mul_same(&y, &r))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let (x, y, r) = self.align(other)?;
        let inv = y.inv_same().ok_or(Error::DivisionByZero)?;
        Ok(x.mul_same(&inv, &r))
    }

    pub fn recip(&self) -> Result<Self> {
        self.inv_same().ok_or(Error::DivisionByZero)
    }

    pub fn neg(&self) -> Self {
        Self {
            p: -self.p.clone(),
            q: -self.q.clone(),
            r: self.r.clone(),
        }
    }

    /// Same value with a reduced radicand: rational radicands become
    /// square-free integers, golden radicands get integer coefficients with
    /// no square common factor.
    pub fn canonical(&self) -> Self {
        let Some(r) = self.radicand() else {
            return self.clone();
        };
        let den = r.a.denom().lcm(r.b.denom());
        let scale = Rational::from_integer(&den * &den);
        let a = (&r.a * &scale).to_integer();
        let b = (&r.b * &scale).to_integer();
        // for a rational radicand the content is |b|, so this also leaves a
        // square-free integer
        let content = a.gcd(&b);
        let (s, _) = square_part(&content);
        let s2 = &s * &s;
        Self {
            p: self.p.clone(),
            q: &self.q * &Golden::from_base(Rational::new(s, den)),
            r: Golden::new(
                Rational::from_integer(&a / &s2),
                Rational::from_integer(&b / &s2),
            ),
        }
    }
}

impl Exact for Tower {
    fn enclose(&self, bits: u32) -> Interval {
        let inner = bits + 8;
        let p = self.p.enclose(inner);
        if self.q.is_zero() {
            return p.round_out(bits + 4);
        }
        let q = self.q.enclose(inner);
        let root = self.r.enclose(inner + 4).sqrt(inner);
        p.add(&q.mul(&root, inner)).round_out(bits + 4)
    }

    fn is_exact_zero(&self) -> bool {
        self.is_structurally_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_golden().and_then(|g| g.as_rational())
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√({})", self.p, self.q, self.r)
    }
}

#[cfg(test)]
pub(crate) fn golden_integer(a: i64, b: i64) -> Golden {
    Golden::new(
        Rational::from_integer(num_bigint::BigInt::from(a)),
        Rational::from_integer(num_bigint::BigInt::from(b)),
    )
}
