//! Proportional extension of unit-width rectangles.
//!
//! A `1 × x` rectangle cut by the diagonal and the perpendicular through the
//! opposite corner splits into a `1 × (x − 1/x)` piece and a `(1/x) × 1`
//! strip similar to the whole. Picking `x` so that the remaining piece has a
//! given proportion `ρ` gives one of two quadratics, depending on whether the
//! piece ends up long side horizontal (`x > φ`) or vertical (`x < φ`).

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::rational::frac;
use crate::exact::{
    eval_decimal, DecimalApprox, Element, Exact, Golden, Interval, Rational, Tower,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `ρx² − x − ρ = 0`: the piece `x − 1/x` is the short side.
    BelowPhi,
    /// `x² − ρx − 1 = 0`: the piece `x − 1/x` is the long side.
    AbovePhi,
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "below" | "below_phi" => Ok(Branch::BelowPhi),
            "above" | "above_phi" => Ok(Branch::AbovePhi),
            _ => Err(Error::parse(s, "expected `above` or `below`")),
        }
    }
}

/// A side length: exact when it fits the tower, otherwise the positive root
/// of an extension quadratic whose coefficient is itself a length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Length {
    Exact(Element),
    Root(Box<ExtensionRoot>),
}

impl Length {
    pub fn as_exact(&self) -> Option<&Element> {
        match self {
            Length::Exact(e) => Some(e),
            Length::Root(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Length::Exact(_))
    }

    pub fn decimal(&self, digits: u32) -> Result<DecimalApprox> {
        eval_decimal(self, digits)
    }
}

impl Exact for Length {
    fn enclose(&self, bits: u32) -> Interval {
        match self {
            Length::Exact(e) => e.enclose(bits),
            Length::Root(r) => r.enclose(bits),
        }
    }

    fn is_exact_zero(&self) -> bool {
        match self {
            Length::Exact(e) => e.is_exact_zero(),
            Length::Root(_) => false,
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_exact().and_then(Exact::as_rational)
    }
}

/// Positive root of the extension quadratic for `rho ≥ 1`, evaluated by
/// interval arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRoot {
    pub rho: Length,
    pub branch: Branch,
}

impl Exact for ExtensionRoot {
    fn enclose(&self, bits: u32) -> Interval {
        let inner = bits + 12;
        let rho = self.rho.enclose(inner);
        // both branches are (t + √(t² + 4))/2 with t = ρ or 1/ρ
        let t = match self.branch {
            Branch::AbovePhi => rho,
            Branch::BelowPhi => rho.recip(inner).expect("rho is at least 1"),
        };
        let four = Interval::point(Rational::from_integer(4.into()));
        let root = t.mul(&t, inner).add(&four).sqrt(inner);
        t.add(&root).scale(&frac(1, 2)).round_out(bits + 4)
    }

    fn is_exact_zero(&self) -> bool {
        false
    }
}

/// The length `x` whose subdivision leaves a piece of proportion `rho`
/// (long side over short side).
///
/// Rational and golden `rho` give an exact tower element. A `rho` that is
/// already a tower element gives `Error::NotExact`; use [`extend_length`]
/// for the interval-evaluated root.
pub fn extend_ratio(rho: &Element, branch: Branch) -> Result<Element> {
    check_proportion(rho)?;
    let Some(g) = rho.to_golden() else {
        return Err(Error::NotExact(format!(
            "extension of {rho} needs a second radical level"
        )));
    };
    let t = match branch {
        Branch::AbovePhi => g,
        Branch::BelowPhi => g.inv().expect("rho is nonzero"),
    };
    let half = Golden::from_base(frac(1, 2));
    let four = Golden::from_base(Rational::from_integer(4.into()));
    let x = Tower::new(&t * &half, half, &t * &t + four)?;
    Ok(Element::Tower(x.canonical()).simplify())
}

/// [`extend_ratio`] for any length, falling back to an interval-evaluated
/// root when the result leaves the tower.
pub fn extend_length(rho: &Length, branch: Branch) -> Result<Length> {
    match rho {
        Length::Exact(e) => match extend_ratio(e, branch) {
            Ok(x) => Ok(Length::Exact(x)),
            Err(Error::NotExact(_)) => Ok(Length::Root(Box::new(ExtensionRoot {
                rho: rho.clone(),
                branch,
            }))),
            Err(e) => Err(e),
        },
        Length::Root(_) => Ok(Length::Root(Box::new(ExtensionRoot {
            rho: rho.clone(),
            branch,
        }))),
    }
}

fn check_proportion(rho: &Element) -> Result<()> {
    if rho.cmp_value(&Element::int(1)).is_lt() {
        return Err(Error::domain(format!(
            "proportion {rho} is below 1; pass long side over short side"
        )));
    }
    Ok(())
}

/// `x₀ = 1`, `x_{n+1}` the [`Branch::BelowPhi`] extension with `ρ = x_n`.
///
/// `x₁ = φ` and `x₂ = χ` are exact; later terms are interval-evaluated and
/// tend to √2, alternating around it.
pub fn extend_sequence(count: usize) -> Result<Vec<Length>> {
    if count == 0 {
        return Err(Error::domain("extend sequence needs count >= 1"));
    }
    let mut out = vec![Length::Exact(Element::int(1))];
    for _ in 0..count {
        let next = extend_length(out.last().expect("non-empty"), Branch::BelowPhi)?;
        out.push(next);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Element,
    pub y: Element,
}

impl Point {
    fn new(x: Element, y: Element) -> Self {
        Self { x, y }
    }

    fn to_json(&self, digits: u32) -> Result<Value> {
        Ok(json!([
            self.x.decimal(digits)?.digits,
            self.y.decimal(digits)?.digits
        ]))
    }
}

/// Axis-aligned rectangle with side `w` along y and `l` along x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub w: Element,
    pub l: Element,
}

impl Rect {
    /// Long side over short side.
    pub fn proportion(&self) -> Result<Element> {
        if self.l.cmp_value(&self.w).is_ge() {
            self.l.checked_div(&self.w)
        } else {
            self.w.checked_div(&self.l)
        }
    }

    fn to_json(&self, digits: u32) -> Result<Value> {
        Ok(json!({
            "w": self.w.decimal(digits)?.digits,
            "l": self.l.decimal(digits)?.digits,
        }))
    }
}

/// Lines of the right-angle construction on the rectangle `[0, x] × [0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    /// `(0, 0)` to `(x, 1)`.
    pub diagonal: [Point; 2],
    /// `(x, 0)` to `(x − 1/x, 1)`.
    pub perpendicular: [Point; 2],
    /// Where the perpendicular meets the diagonal.
    pub foot: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub whole: Rect,
    /// `1 × (x − 1/x)`, at the left.
    pub kept: Rect,
    /// `(1/x) × 1` strip at the right, similar to `whole`.
    pub strip: Rect,
    pub construction: Construction,
}

/// Splits the `1 × x` rectangle by the right-angle construction.
pub fn subdivide(x: &Element) -> Result<Subdivision> {
    if x.cmp_value(&Element::int(1)).is_le() {
        return Err(Error::domain(format!(
            "length {x} leaves no strip; need x > 1"
        )));
    }
    let one = Element::int(1);
    let zero = Element::int(0);
    let inv = x.recip()?;
    let cut = x.checked_sub(&inv)?;
    let x2 = x.checked_mul(x)?;
    let denom = x2.checked_add(&one)?;
    let foot = Point::new(
        x2.checked_mul(x)?.checked_div(&denom)?,
        x2.checked_div(&denom)?,
    );
    Ok(Subdivision {
        whole: Rect {
            w: one.clone(),
            l: x.clone(),
        },
        kept: Rect {
            w: one.clone(),
            l: cut.clone(),
        },
        strip: Rect {
            w: one.clone(),
            l: inv,
        },
        construction: Construction {
            diagonal: [
                Point::new(zero.clone(), zero.clone()),
                Point::new(x.clone(), one.clone()),
            ],
            perpendicular: [Point::new(x.clone(), zero), Point::new(cut, one)],
            foot,
        },
    })
}

impl Subdivision {
    pub fn to_json(&self, digits: u32) -> Result<Value> {
        let c = &self.construction;
        Ok(json!({
            "whole": self.whole.to_json(digits)?,
            "kept": self.kept.to_json(digits)?,
            "strip": self.strip.to_json(digits)?,
            "construction": {
                "diagonal": [c.diagonal[0].to_json(digits)?, c.diagonal[1].to_json(digits)?],
                "perpendicular": [
                    c.perpendicular[0].to_json(digits)?,
                    c.perpendicular[1].to_json(digits)?
                ],
                "foot": c.foot.to_json(digits)?,
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{chi, phi, phi_inverse};

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn silver_and_three_halves() {
        let x = extend_ratio(&Element::int(2), Branch::AbovePhi).unwrap();
        assert!(x.value_eq(&el("silver")));
        assert_eq!(x.closed_form(), "1+sqrt(2)");
        let x = extend_ratio(&Element::from(frac(3, 2)), Branch::AbovePhi).unwrap();
        assert_eq!(x, Element::int(2));
    }

    #[test]
    fn chi_from_phi() {
        let x = extend_ratio(&Element::Golden(phi()), Branch::BelowPhi).unwrap();
        assert!(x.value_eq(&Element::Tower(chi())));
    }

    #[test]
    fn unit_proportion_gives_phi_on_both_branches() {
        for b in [Branch::AbovePhi, Branch::BelowPhi] {
            assert_eq!(
                extend_ratio(&Element::int(1), b).unwrap(),
                Element::Golden(phi())
            );
        }
    }

    #[test]
    fn rejects_short_over_long() {
        assert!(extend_ratio(&Element::from(frac(1, 2)), Branch::AbovePhi).is_err());
        assert!(matches!(
            extend_ratio(&Element::Tower(chi()), Branch::BelowPhi),
            Err(Error::NotExact(_))
        ));
    }

    #[test]
    fn sequence_head() {
        let xs = extend_sequence(3).unwrap();
        assert_eq!(xs.len(), 4);
        assert_eq!(xs[1].as_exact(), Some(&Element::Golden(phi())));
        assert!(xs[2].as_exact().unwrap().value_eq(&Element::Tower(chi())));
        assert!(!xs[3].is_exact());
        assert_eq!(xs[3].decimal(3).unwrap().digits, "1.434");
        assert!(extend_sequence(0).is_err());
    }

    #[test]
    fn golden_subdivision_keeps_a_square() {
        let s = subdivide(&Element::Golden(phi())).unwrap();
        assert_eq!(s.kept.l, Element::int(1));
        assert_eq!(s.strip.l, Element::Golden(phi_inverse()));
    }

    #[test]
    fn chi_subdivision_keeps_a_golden_rectangle() {
        let s = subdivide(&Element::Tower(chi())).unwrap();
        assert!(s.kept.l.value_eq(&Element::Golden(phi_inverse())));
        assert!(s
            .kept
            .proportion()
            .unwrap()
            .value_eq(&Element::Golden(phi())));
    }

    #[test]
    fn two_splits_into_three_halves_and_a_half() {
        let s = subdivide(&Element::int(2)).unwrap();
        assert_eq!(s.kept.l, Element::from(frac(3, 2)));
        assert_eq!(s.strip.l, Element::from(frac(1, 2)));
        assert_eq!(
            s.construction.foot,
            Point::new(Element::from(frac(8, 5)), Element::from(frac(4, 5)))
        );
        assert!(subdivide(&Element::int(1)).is_err());
    }

    #[test]
    fn json_shape() {
        let v = subdivide(&Element::int(2)).unwrap().to_json(3).unwrap();
        assert_eq!(v["kept"]["l"], "1.500");
        assert_eq!(v["construction"]["perpendicular"][1][0], "1.500");
    }
}
