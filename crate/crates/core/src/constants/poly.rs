use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::exact::{Element, Golden};
use crate::scalar::Field;

/// Polynomial with coefficients stored lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `x² + linear·x + constant`.
    pub fn monic_quadratic(linear: T, constant: T) -> Self {
        Self::new(vec![constant, linear, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl Poly<Golden> {
    /// Horner evaluation at any exact element; coefficients are lifted to the
    /// level of `x`.
    pub fn eval_element(&self, x: &Element) -> Result<Element> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(Element::int(0), |acc, c| {
                acc.checked_mul(x)?.checked_add(&Element::from(c.clone()))
            })
    }

    /// Integer coefficients, if every coefficient is a rational integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| (c.a.is_zero() && c.b.is_integer()).then(|| c.b.to_integer()))
            .collect()
    }
}

/// Exact Horner evaluation `p(x)`.
pub fn poly_eval(p: &Poly<Golden>, x: &Element) -> Result<Element> {
    p.eval_element(x)
}
