//! Closed forms for φ, χ, χ′ and the metallic means, their defining
//! polynomials, and the quartic products of the two golden quadratics.

mod poly;

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use poly::{poly_eval, Poly};

use crate::error::{Error, Result};
use crate::exact::rational::{frac, int};
use crate::exact::{eval_decimal, Element, Golden, Tower};

/// φ as `1·φ + 0`.
pub fn phi() -> Golden {
    Golden::phi()
}

/// 1/φ = φ − 1.
pub fn phi_inverse() -> Golden {
    Golden::new(int(1), int(-1))
}

/// χ = (√5 − 1 + √(22 − 2√5)) / 4, the positive root of `x² − x/φ − 1`.
pub fn chi() -> Tower {
    // (√5 − 1)/4 = (φ − 1)/2 and 22 − 2√5 = 24 − 4φ in the φ-basis
    Tower::new(
        Golden::new(frac(1, 2), frac(-1, 2)),
        Golden::from_base(frac(1, 4)),
        Golden::new(int(-4), int(24)),
    )
    .expect("22 − 2√5 is positive and not a square")
}

/// χ′ = (1 + √5 + √(22 + 2√5)) / 4, the positive root of `x² − φx − 1`.
pub fn chi_prime() -> Tower {
    // (1 + √5)/4 = φ/2 and 22 + 2√5 = 20 + 4φ
    Tower::new(
        Golden::new(frac(1, 2), int(0)),
        Golden::from_base(frac(1, 4)),
        Golden::new(int(4), int(20)),
    )
    .expect("22 + 2√5 is positive and not a square")
}

/// Metallic mean `(n + √(n² + 4)) / 2`, the positive root of `x² − nx − 1`.
///
/// `n = 1` gives φ in the golden field; other `n` use a tower over the
/// rationals with the radicand reduced to a square-free integer.
pub fn metallic(n: u32) -> Result<Element> {
    if n == 0 {
        return Err(Error::domain("metallic mean index must be at least 1"));
    }
    if n == 1 {
        return Ok(Element::Golden(phi()));
    }
    let n = i64::from(n);
    let t = Tower::new(
        Golden::from_base(frac(n, 2)),
        Golden::from_base(frac(1, 2)),
        Golden::from_base(int(n * n + 4)),
    )?;
    Ok(Element::from(t.canonical()))
}

pub fn phi_poly() -> Poly<Golden> {
    metallic_poly(1)
}

/// `x² − x/φ − 1`.
pub fn chi_poly() -> Poly<Golden> {
    Poly::monic_quadratic(-phi_inverse(), -Golden::one())
}

/// `x² − φx − 1`.
pub fn chi_prime_poly() -> Poly<Golden> {
    Poly::monic_quadratic(-phi(), -Golden::one())
}

/// `x² − nx − 1`.
pub fn metallic_poly(n: u32) -> Poly<Golden> {
    Poly::monic_quadratic(
        Golden::from_base(int(-i64::from(n))),
        Golden::from_base(int(-1)),
    )
}

/// Which signs pair up when multiplying the two golden quadratics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `(x − χ)(x + 1/χ)(x − χ′)(x + 1/χ′) = (x² − φx − 1)(x² − x/φ − 1)`.
    SameSigns,
    /// `(x − χ)(x + 1/χ)(x + χ′)(x − 1/χ′) = (x² − x/φ − 1)(x² + φx − 1)`,
    /// the integer minimal polynomial of χ.
    MixedSigns,
    /// `(x² − φx − 1)(x² + x/φ − 1)`, with roots −χ, 1/χ, χ′ and −1/χ′.
    ReflectedSigns,
}

pub fn quartic_expand(pairing: Pairing) -> Poly<Golden> {
    let minus_one = -Golden::one();
    let (left, right) = match pairing {
        Pairing::SameSigns => (-phi(), -phi_inverse()),
        Pairing::MixedSigns => (-phi_inverse(), phi()),
        Pairing::ReflectedSigns => (-phi(), phi_inverse()),
    };
    Poly::monic_quadratic(left, minus_one.clone()).mul(&Poly::monic_quadratic(right, minus_one))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantValue {
    Exact(Element),
    /// Ten truncated decimals; no exact form is carried.
    Display(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstant {
    pub name: &'static str,
    pub value: ConstantValue,
    pub description: &'static str,
    pub defining: Option<Poly<Golden>>,
}

impl NamedConstant {
    /// Truncated decimal string. Display-only values stop at their ten
    /// stored digits.
    pub fn decimal(&self, digits: u32) -> Result<String> {
        match &self.value {
            ConstantValue::Exact(e) => Ok(eval_decimal(e, digits)?.digits),
            ConstantValue::Display(s) => {
                if digits == 0 {
                    return Err(Error::InvalidDigits);
                }
                let (int_part, frac_part) = s.split_once('.').expect("stored with a point");
                let keep = (digits as usize).min(frac_part.len());
                Ok(format!("{int_part}.{}", &frac_part[..keep]))
            }
        }
    }

    pub fn exact(&self) -> Option<&Element> {
        match &self.value {
            ConstantValue::Exact(e) => Some(e),
            ConstantValue::Display(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "value_decimal_10": self.decimal(10).expect("10 digits is valid"),
            "exact": self.exact().map_or(Value::Null, Element::to_json),
            "description": self.description,
        })
    }
}

pub fn named_constants() -> Vec<NamedConstant> {
    let exact = |name, value: Element, description, defining| NamedConstant {
        name,
        value: ConstantValue::Exact(value),
        description,
        defining: Some(defining),
    };
    vec![
        exact(
            "phi",
            Element::Golden(phi()),
            "golden ratio (1+sqrt(5))/2, positive root of x^2 - x - 1; a 1 by phi rectangle splits into a square and a similar rectangle",
            phi_poly(),
        ),
        exact(
            "chi",
            Element::Tower(chi()),
            "chi ratio, positive root of x^2 - x/phi - 1; a 1 by chi rectangle splits into a golden rectangle and a similar rectangle",
            chi_poly(),
        ),
        exact(
            "chi_prime",
            Element::Tower(chi_prime()),
            "chi' ratio, positive root of x^2 - phi*x - 1; a 1 by chi' rectangle splits into a 1 by phi rectangle and a similar rectangle",
            chi_prime_poly(),
        ),
        exact(
            "silver",
            metallic(2).expect("n = 2"),
            "silver section 1+sqrt(2), positive root of x^2 - 2x - 1",
            metallic_poly(2),
        ),
        exact(
            "bronze",
            metallic(3).expect("n = 3"),
            "bronze mean (3+sqrt(13))/2, positive root of x^2 - 3x - 1",
            metallic_poly(3),
        ),
        NamedConstant {
            name: "plastic",
            value: ConstantValue::Display("1.3247179572"),
            description: "van der Laan's plastic number psi (display only)",
            defining: None,
        },
        NamedConstant {
            name: "cordovan",
            value: ConstantValue::Display("1.3065629648"),
            description: "de la Hoz's Cordovan proportion epsilon (display only)",
            defining: None,
        },
        exact(
            "sesquitertia",
            Element::Rational(frac(4, 3)),
            "the classical 4:3 proportion",
            Poly::new(vec![Golden::from_base(int(-4)), Golden::from_base(int(3))]),
        ),
    ]
}

pub fn lookup(name: &str) -> Option<NamedConstant> {
    named_constants().into_iter().find(|c| c.name == name)
}

/// True when `poly_eval(defining, value)` is exactly zero.
pub fn residual_is_zero(c: &NamedConstant) -> Result<bool> {
    match (c.exact(), &c.defining) {
        (Some(x), Some(p)) => Ok(poly_eval(p, x)?.to_rational().is_some_and(|r| r.is_zero())),
        _ => Ok(false),
    }
}
