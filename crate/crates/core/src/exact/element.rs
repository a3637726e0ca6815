//! A value at any level of the exact hierarchy: rational ⊂ Q(√5) ⊂ tower.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::decimal::{eval_decimal, DecimalApprox};
use super::interval::{sign, Exact, Interval};
use super::rational::{parse_rational, to_ratio_string, Rational};
use super::tower::{Golden, Tower};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Rational(Rational),
    Golden(Golden),
    Tower(Tower),
}

impl Element {
    pub fn int(n: i64) -> Self {
        Element::Rational(super::rational::int(n))
    }

    pub fn to_golden(&self) -> Option<Golden> {
        match self {
            Element::Rational(r) => Some(Golden::from_base(r.clone())),
            Element::Golden(g) => Some(g.clone()),
            Element::Tower(t) => t.as_golden(),
        }
    }

    pub fn to_tower(&self) -> Tower {
        match self {
            Element::Rational(r) => Tower::from_rational(r.clone()),
            Element::Golden(g) => Tower::from_golden(g.clone()),
            Element::Tower(t) => t.clone(),
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.as_rational()
    }

    /// Moves the value to the lowest level that can hold it.
    pub fn simplify(self) -> Self {
        match self {
            Element::Tower(t) => match t.as_golden() {
                Some(g) => Element::Golden(g).simplify(),
                None => Element::Tower(t),
            },
            Element::Golden(g) if g.a.is_zero() => Element::Rational(g.b),
            other => other,
        }
    }

    fn level(&self) -> u8 {
        match self {
            Element::Rational(_) => 0,
            Element::Golden(_) => 1,
            Element::Tower(_) => 2,
        }
    }

    fn binary(
        &self,
        other: &Self,
        rat: impl Fn(&Rational, &Rational) -> Result<Rational>,
        gold: impl Fn(&Golden, &Golden) -> Result<Golden>,
        tower: impl Fn(&Tower, &Tower) -> Result<Tower>,
    ) -> Result<Self> {
        let out = match self.level().max(other.level()) {
            0 => Element::Rational(rat(
                &self.as_rational().expect("level 0"),
                &other.as_rational().expect("level 0"),
            )?),
            1 => Element::Golden(gold(
                &self.to_golden().expect("level 1"),
                &other.to_golden().expect("level 1"),
            )?),
            _ => Element::Tower(tower(&self.to_tower(), &other.to_tower())?),
        };
        Ok(out.simplify())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.binary(
            other,
            |a, b| Ok(a + b),
            |a, b| Ok(a + b),
            Tower::checked_add,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.binary(
            other,
            |a, b| Ok(a - b),
            |a, b| Ok(a - b),
            Tower::checked_sub,
        )
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.binary(
            other,
            |a, b| Ok(a * b),
            |a, b| Ok(a * b),
            Tower::checked_mul,
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.binary(
            other,
            |a, b| {
                if b.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(a / b)
                }
            },
            |a, b| a.checked_div(b).ok_or(Error::DivisionByZero),
            Tower::checked_div,
        )
    }

    pub fn neg(&self) -> Self {
        match self {
            Element::Rational(r) => Element::Rational(-r.clone()),
            Element::Golden(g) => Element::Golden(-g.clone()),
            Element::Tower(t) => Element::Tower(t.neg()),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Element::Rational(Rational::one()).checked_div(self)
    }

    pub fn sign(&self) -> i8 {
        sign(self)
    }

    /// Exact value equality. Tower elements whose radicands cannot be lifted
    /// to a common one are never equal: equality would put one square root
    /// inside the other's field, which forces the radicand ratio to be a square.
    pub fn value_eq(&self, other: &Self) -> bool {
        match self.checked_sub(other) {
            Ok(d) => d.is_exact_zero(),
            Err(_) => false,
        }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match self.checked_sub(other) {
            Ok(d) => d.sign().cmp(&0),
            Err(_) => {
                let mut bits = 64;
                loop {
                    let (a, b) = (self.enclose(bits), other.enclose(bits));
                    if a.hi() < b.lo() {
                        return Ordering::Less;
                    }
                    if b.hi() < a.lo() {
                        return Ordering::Greater;
                    }
                    bits *= 2;
                }
            }
        }
    }

    pub fn decimal(&self, digits: u32) -> Result<DecimalApprox> {
        eval_decimal(self, digits)
    }

    /// Reduced radicand, for display.
    pub fn canonical(&self) -> Self {
        match self {
            Element::Tower(t) => Element::Tower(t.canonical()),
            other => other.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Element::Rational(r) => json!({"kind": "rational", "value": to_ratio_string(r)}),
            Element::Golden(g) => golden_json(g),
            Element::Tower(t) => json!({
                "kind": "tower",
                "p": golden_json(&t.p),
                "q": golden_json(&t.q),
                "r": golden_json(&t.r),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse(v.to_string(), "missing \"kind\""))?;
        match kind {
            "rational" => Ok(Element::Rational(rational_field(v, "value")?)),
            "golden" => Ok(Element::Golden(golden_from_json(v)?)),
            "tower" => {
                let part = |k: &str| {
                    v.get(k)
                        .ok_or_else(|| Error::parse(v.to_string(), format!("missing \"{k}\"")))
                        .and_then(golden_from_json)
                };
                Ok(Element::Tower(Tower::new(
                    part("p")?,
                    part("q")?,
                    part("r")?,
                )?))
            }
            other => Err(Error::parse(other, "unknown element kind")),
        }
    }

    /// Human-readable closed form such as `1+sqrt(2)` or `1/2+sqrt(5)/2`.
    pub fn closed_form(&self) -> String {
        match self {
            Element::Rational(r) => fmt_rational(r),
            Element::Golden(g) => golden_closed_form(g),
            Element::Tower(t) => {
                let term = if t.r.a.is_zero() {
                    radical_term(&t.q, &fmt_rational(&t.r.b))
                } else {
                    // √((u + v√5)/d²) = √(d²u + d²v√5)/d with integer d²u, d²v
                    let (u, v) = t.r.to_sqrt5_basis();
                    let d = Rational::from_integer(u.denom().lcm(v.denom()));
                    let d2 = &d * &d;
                    let rad = Golden::from_sqrt5_basis(u * &d2, v * &d2);
                    let q = t.q.scale(&d.recip());
                    radical_term(&q, &golden_closed_form(&rad))
                };
                join_terms(&golden_closed_form(&t.p), t.p.is_zero(), &term)
            }
        }
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `c·sqrt(rad)` with `c` in the golden field; a leading `-` marks negatives.
fn radical_term(c: &Golden, rad: &str) -> String {
    if !c.a.is_zero() {
        return format!("({})*sqrt({rad})", golden_closed_form(c));
    }
    let c = &c.b;
    let sign = if c.is_negative() { "-" } else { "" };
    let n = c.numer().abs();
    let head = if n.is_one() {
        format!("sqrt({rad})")
    } else {
        format!("{n}*sqrt({rad})")
    };
    if c.denom().is_one() {
        format!("{sign}{head}")
    } else {
        format!("{sign}{head}/{}", c.denom())
    }
}

fn join_terms(base: &str, base_is_zero: bool, term: &str) -> String {
    if base_is_zero {
        return term.to_string();
    }
    if term.starts_with('-') {
        format!("{base}{term}")
    } else {
        format!("{base}+{term}")
    }
}

fn golden_closed_form(g: &Golden) -> String {
    let (u, v) = g.to_sqrt5_basis();
    if v.is_zero() {
        return fmt_rational(&u);
    }
    join_terms(
        &fmt_rational(&u),
        u.is_zero(),
        &radical_term(&Golden::from_base(v), "5"),
    )
}

fn golden_json(g: &Golden) -> Value {
    json!({"kind": "golden", "a": to_ratio_string(&g.a), "b": to_ratio_string(&g.b)})
}

fn rational_field(v: &Value, key: &str) -> Result<Rational> {
    let s = v
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(v.to_string(), format!("missing string \"{key}\"")))?;
    parse_rational(s)
}

fn golden_from_json(v: &Value) -> Result<Golden> {
    Ok(Golden::new(
        rational_field(v, "a")?,
        rational_field(v, "b")?,
    ))
}

impl Exact for Element {
    fn enclose(&self, bits: u32) -> Interval {
        match self {
            Element::Rational(r) => r.enclose(bits),
            Element::Golden(g) => g.enclose(bits),
            Element::Tower(t) => t.enclose(bits),
        }
    }

    fn is_exact_zero(&self) -> bool {
        match self {
            Element::Rational(r) => r.is_zero(),
            Element::Golden(g) => g.is_exact_zero(),
            Element::Tower(t) => t.is_exact_zero(),
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self {
            Element::Rational(r) => Some(r.clone()),
            Element::Golden(g) => g.as_rational(),
            Element::Tower(t) => t.as_rational(),
        }
    }
}

impl From<Rational> for Element {
    fn from(r: Rational) -> Self {
        Element::Rational(r)
    }
}

impl From<Golden> for Element {
    fn from(g: Golden) -> Self {
        Element::Golden(g).simplify()
    }
}

impl From<Tower> for Element {
    fn from(t: Tower) -> Self {
        Element::Tower(t).simplify()
    }
}

/// Accepts integers, `p/q`, finite decimals and the symbols `phi`, `1/phi`,
/// `chi`, `chi_prime`, `silver`, `bronze`.
impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "phi" => Ok(Element::Golden(crate::constants::phi())),
            "1/phi" | "phi_inverse" => Ok(Element::Golden(crate::constants::phi_inverse())),
            "chi" => Ok(Element::Tower(crate::constants::chi())),
            "chi_prime" => Ok(Element::Tower(crate::constants::chi_prime())),
            "silver" => crate::constants::metallic(2),
            "bronze" => crate::constants::metallic(3),
            _ => parse_rational(s).map(Element::Rational),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.closed_form())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use crate::exact::tower::golden_integer;

    fn g(a: i64, b: i64) -> Element {
        Element::Golden(golden_integer(a, b))
    }

    #[test]
    fn mixed_levels_lift() {
        let x = g(1, 0).checked_add(&Element::int(1)).unwrap();
        assert_eq!(x, g(1, 1));
        let two = g(2, 2).checked_div(&g(1, 1)).unwrap();
        assert_eq!(two, Element::int(2));
        assert!(two.value_eq(&Element::int(2)));
    }

    #[test]
    fn division_by_zero_reports() {
        assert_eq!(
            Element::int(2).checked_div(&Element::int(0)),
            Err(Error::DivisionByZero)
        );
        assert_eq!(g(1, 0).checked_div(&g(0, 0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_round_trip() {
        let x: Element = "chi".parse().unwrap();
        let v = x.to_json();
        assert_eq!(v["kind"], "tower");
        assert_eq!(v["q"]["b"], "1/4");
        assert_eq!(Element::from_json(&v).unwrap(), x);
        let r = Element::Rational(frac(-3, 2));
        assert_eq!(
            r.to_json().to_string(),
            r#"{"kind":"rational","value":"-3/2"}"#
        );
        assert_eq!(
            g(2, 1).to_json().to_string(),
            r#"{"kind":"golden","a":"2/1","b":"1/1"}"#
        );
        assert!(Element::from_json(&json!({"kind": "quaternion"})).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(g(1, 0).closed_form(), "1/2+sqrt(5)/2");
        assert_eq!(Element::Rational(frac(3, 2)).closed_form(), "3/2");
        let silver = Element::Tower(
            Tower::new(
                golden_integer(0, 1),
                golden_integer(0, 1),
                golden_integer(0, 2),
            )
            .unwrap(),
        );
        assert_eq!(silver.closed_form(), "1+sqrt(2)");
        assert_eq!(silver.neg().closed_form(), "-1-sqrt(2)");
        assert_eq!(
            Element::Tower(crate::constants::chi()).closed_form(),
            "-1/4+sqrt(5)/4+sqrt(22-2*sqrt(5))/4"
        );
        assert_eq!(
            Element::Tower(crate::constants::chi_prime()).closed_form(),
            "1/4+sqrt(5)/4+sqrt(22+2*sqrt(5))/4"
        );
    }

    #[test]
    fn parse_reports_token() {
        match "2/x".parse::<Element>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "2/x"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!("7".parse::<Element>().unwrap(), Element::Rational(int(7)));
    }

    #[test]
    fn ordering_across_radicands() {
        let chi: Element = "chi".parse().unwrap();
        let chi_p: Element = "chi_prime".parse().unwrap();
        assert_eq!(chi.cmp_value(&chi_p), Ordering::Less);
        assert!(!chi.value_eq(&chi_p));
        assert_eq!(chi_p.cmp_value(&chi), Ordering::Greater);
    }
}
