//! SVG figures for subdivisions, the iterated extension, fold traces and
//! the straightedge-and-compass constructions of φ and χ.
//!
//! Every coordinate is computed exactly, truncated to twelve decimals in
//! unit space, then scaled by `unit_px`. Output is deterministic for a
//! given style.

mod svg;

use std::str::FromStr;

use crate::constants::{chi, phi};
use crate::error::{Error, Result};
use crate::exact::rational::frac;
use crate::exact::{Element, Rational};
use crate::fold::{FoldOp, FoldTrace};
use crate::rect::{extend_sequence, subdivide};

use svg::{unit_coord, Canvas};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Style {
    pub unit_px: u32,
    pub stroke_px: Rational,
    pub grey_fill: String,
    pub dash_pattern: String,
}

impl Default for Style {
    fn default() -> Self {
        Self {
            unit_px: 100,
            stroke_px: frac(3, 2),
            grey_fill: "#cccccc".to_string(),
            dash_pattern: "6 4".to_string(),
        }
    }
}

impl Style {
    pub fn validate(&self) -> Result<()> {
        if self.unit_px < 10 {
            return Err(Error::InvalidStyle(format!(
                "unit_px must be at least 10, got {}",
                self.unit_px
            )));
        }
        if self.stroke_px <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidStyle("stroke_px must be positive".into()));
        }
        let fill_ok = !self.grey_fill.is_empty()
            && self
                .grey_fill
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '#');
        if !fill_ok {
            return Err(Error::InvalidStyle(format!(
                "bad fill color {:?}",
                self.grey_fill
            )));
        }
        let dash_ok = self.dash_pattern.chars().any(|c| c.is_ascii_digit())
            && self
                .dash_pattern
                .chars()
                .all(|c| c.is_ascii_digit() || matches!(c, ' ' | ',' | '.'));
        if !dash_ok {
            return Err(Error::InvalidStyle(format!(
                "bad dash pattern {:?}",
                self.dash_pattern
            )));
        }
        Ok(())
    }

    fn font_px(&self) -> u32 {
        (self.unit_px * 3 / 20).max(8)
    }

    fn dashed(&self) -> String {
        format!(r#"stroke-dasharray="{}""#, self.dash_pattern)
    }

    fn grey(&self) -> String {
        format!(r#"fill="{}""#, self.grey_fill)
    }

    fn dot_px(&self) -> Rational {
        &self.stroke_px * Rational::from_integer(2.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Phi,
    Chi,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(Target::Phi),
            "chi" => Ok(Target::Chi),
            _ => Err(Error::parse(s, "expected `phi` or `chi`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Figure {
    Subdivision(Element),
    ExtendSequence(usize),
    FoldTrace(FoldTrace),
    Construction(Target),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureSpec {
    pub figure: Figure,
    pub style: Style,
}

impl FigureSpec {
    pub fn new(figure: Figure) -> Self {
        Self {
            figure,
            style: Style::default(),
        }
    }

    pub fn render(&self) -> Result<String> {
        match &self.figure {
            Figure::Subdivision(x) => render_subdivision(x, &self.style),
            Figure::ExtendSequence(n) => render_extend_sequence(*n, &self.style),
            Figure::FoldTrace(t) => render_fold_trace(t, &self.style),
            Figure::Construction(t) => render_construction(*t, &self.style),
        }
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The `1 × x` outline, the grey kept piece, the dashed strip, the diagonal
/// and the perpendicular, plus a dot at the foot of the perpendicular.
pub fn render_subdivision(x: &Element, style: &Style) -> Result<String> {
    style.validate()?;
    let s = subdivide(x)?;
    let len = unit_coord(x);
    let cut = unit_coord(&s.kept.l);
    let strip = unit_coord(&s.strip.l);
    let (zero, one) = (r(0), r(1));

    let mut c = Canvas::new(style, len.clone(), one.clone());
    c.rect(
        &zero,
        &zero,
        &cut,
        &one,
        &format!(r#"id="kept" {}"#, style.grey()),
    );
    c.rect(
        &cut,
        &zero,
        &strip,
        &one,
        &format!(r#"id="strip" {}"#, style.dashed()),
    );
    c.rect(&zero, &zero, &len, &one, r#"id="whole""#);
    c.line((&zero, &zero), (&len, &one), r#"id="diagonal""#);
    c.line((&len, &zero), (&cut, &one), r#"id="perpendicular""#);
    let foot = &s.construction.foot;
    c.circle(
        (&unit_coord(&foot.x), &unit_coord(&foot.y)),
        &style.dot_px(),
        r#"id="foot" fill="black" stroke="none""#,
    );
    Ok(c.finish(style))
}

const ROW: (i64, i64) = (3, 2);

/// One unit-height rectangle per term `x₀ … x_count`, top to bottom, each
/// labelled with its length to three decimals.
pub fn render_extend_sequence(count: usize, style: &Style) -> Result<String> {
    style.validate()?;
    if count < 2 {
        return Err(Error::domain("render at least two extension steps"));
    }
    let xs = extend_sequence(count)?;
    let lens: Vec<Rational> = xs.iter().map(unit_coord).collect();
    let widest = lens.iter().max().expect("non-empty").clone();
    let row = frac(ROW.0, ROW.1);
    let rows = r(xs.len() as i64);
    let height = &row * (&rows - r(1)) + r(1);
    let mut c = Canvas::new(style, &widest + r(1), height.clone());
    for (k, (x, len)) in xs.iter().zip(&lens).enumerate() {
        let y = &height - r(1) - &row * r(k as i64);
        c.rect(&r(0), &y, len, &r(1), &format!(r#"id="x{k}""#));
        let label = x.decimal(3)?.digits;
        c.text(
            (&(len + frac(1, 10)), &(&y + frac(1, 2))),
            5,
            &label,
            &format!(r#"class="length" id="x{k}-label""#),
        );
    }
    Ok(c.finish(style))
}

/// One panel per step: the strip before (left) and after (right) the move,
/// with the crease drawn and the resulting length written under the
/// right-hand strip.
pub fn render_fold_trace(trace: &FoldTrace, style: &Style) -> Result<String> {
    style.validate()?;
    if trace.is_empty() {
        return Err(Error::EmptyTrace);
    }
    let widest = trace
        .steps
        .iter()
        .flat_map(|s| [&s.before, &s.after])
        .max()
        .expect("non-empty")
        .clone();
    let gap = frac(1, 2);
    let offset = &widest + &gap;
    let row = frac(8, 5);
    let n = r(trace.len() as i64);
    let height = &row * &n;
    let mut c = Canvas::new(style, &offset * r(2) - &gap, height.clone());
    let (zero, one) = (r(0), r(1));
    for (i, step) in trace.steps.iter().enumerate() {
        let y0 = &height - &row * r(i as i64 + 1);
        let y1 = &y0 + &one;
        let b = &step.before;
        let a = &step.after;
        c.open_group(&format!(r#"id="step-{}" class="panel""#, i + 1));
        c.rect(&zero, &y0, b, &one, r#"class="before""#);
        match &step.op {
            FoldOp::Reciprocal => {
                c.line((&zero, &y0), (b, &y1), r#"class="crease""#);
                // perpendicular through (b, 0), clipped to the strip
                let end = if b >= &one {
                    (b - b.recip(), y1.clone())
                } else {
                    (zero.clone(), &y0 + b * b)
                };
                c.line((b, &y0), (&end.0, &end.1), r#"class="crease""#);
                c.rect(
                    &offset,
                    &y0,
                    a,
                    &one,
                    &format!(r#"class="after" {}"#, style.grey()),
                );
            }
            FoldOp::Square | FoldOp::Join(_) => {
                let added = a - b;
                c.rect(&offset, &y0, a, &one, r#"class="after""#);
                c.rect(
                    &(&offset + b),
                    &y0,
                    &added,
                    &one,
                    &format!(r#"class="added" {}"#, style.grey()),
                );
                let x = &offset + b;
                c.line(
                    (&x, &y0),
                    (&x, &y1),
                    &format!(r#"class="crease" {}"#, style.dashed()),
                );
            }
        }
        c.text((&zero, &y0), 14, step.op.name(), r#"class="op""#);
        c.text((&offset, &y0), 14, &a.to_string(), r#"class="value""#);
        c.close_group();
    }
    Ok(c.finish(style))
}

/// Midpoint-arc construction of the positive root of `x² − a·x − 1` on the
/// `a × 1` rectangle `[left, left + a] × [0, 1]`: the arc about the midpoint
/// of the base through the far top corner meets the base line at
/// `left + x`.
struct MidpointArc {
    left: Element,
    side: Element,
    root: Element,
}

impl MidpointArc {
    fn draw(&self, c: &mut Canvas, style: &Style, id: &str) -> Result<()> {
        let half = Element::from(frac(1, 2));
        let mid = self.left.checked_add(&self.side.checked_mul(&half)?)?;
        let corner = self.left.checked_add(&self.side)?;
        let end = self.left.checked_add(&self.root)?;
        let radius = end.checked_sub(&mid)?;
        let (m, k, e, rad) = (
            unit_coord(&mid),
            unit_coord(&corner),
            unit_coord(&end),
            unit_coord(&radius),
        );
        let (zero, one) = (r(0), r(1));
        let dot = r#"class="point" fill="black" stroke="none""#;
        c.open_group(&format!(r#"id="{id}""#));
        c.circle((&m, &zero), &style.dot_px(), dot);
        c.line((&m, &zero), (&k, &one), r#"class="radius""#);
        c.arc(
            (&k, &one),
            (&e, &zero),
            &rad,
            &format!(r#"class="arc" {}"#, style.dashed()),
        );
        c.circle((&e, &zero), &style.dot_px(), dot);
        c.close_group();
        Ok(())
    }
}

/// φ from the unit square; χ continues on the golden rectangle `[1, φ] × [0, 1]`
/// left over from the φ construction.
pub fn render_construction(target: Target, style: &Style) -> Result<String> {
    style.validate()?;
    let phi_el = Element::Golden(phi());
    let one_el = Element::int(1);
    let golden = MidpointArc {
        left: Element::int(0),
        side: one_el.clone(),
        root: phi_el.clone(),
    };
    let (zero, one) = (r(0), r(1));
    let (result_start, result_end, value) = match target {
        Target::Phi => (Element::int(0), phi_el.clone(), phi_el.clone()),
        Target::Chi => {
            let chi_el = Element::Tower(chi());
            (one_el.clone(), one_el.checked_add(&chi_el)?, chi_el)
        }
    };
    let width = unit_coord(&result_end).max(unit_coord(&phi_el)) + frac(1, 4);
    let mut c = Canvas::new(style, width, &one + frac(1, 2));
    let p = unit_coord(&phi_el);

    c.open_group(r#"id="given""#);
    c.rect(&zero, &zero, &one, &one, r#"id="unit-square""#);
    c.close_group();
    golden.draw(&mut c, style, "golden-arc")?;
    if target == Target::Chi {
        c.open_group(r#"id="golden-rectangle""#);
        c.rect(&one, &zero, &(&p - &one), &one, &style.grey());
        c.close_group();
        let chi_arc = MidpointArc {
            left: one_el.clone(),
            side: phi_el.checked_sub(&one_el)?,
            root: value.clone(),
        };
        chi_arc.draw(&mut c, style, "chi-arc")?;
    }
    let (s, e) = (unit_coord(&result_start), unit_coord(&result_end));
    let label = format!("{}…", value.decimal(4)?.digits);
    c.open_group(r#"id="result-layer""#);
    c.line((&s, &zero), (&e, &zero), r#"id="result" stroke-width="3""#);
    let mid = (&s + &e) * frac(1, 2);
    c.text(
        (&mid, &zero),
        18,
        &label,
        r#"id="result-label" text-anchor="middle""#,
    );
    c.close_group();
    Ok(c.finish(style))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::{fold_cf, fold_harmonic};

    #[test]
    fn default_style() {
        let s = Style::default();
        assert_eq!(
            (s.unit_px, s.grey_fill.as_str(), s.dash_pattern.as_str()),
            (100, "#cccccc", "6 4")
        );
        assert!(s.validate().is_ok());
        let bad = Style {
            unit_px: 9,
            ..Style::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidStyle(_))));
        let bad = Style {
            grey_fill: "\"><script".into(),
            ..Style::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn subdivision_structure() {
        let svg = render_subdivision(&Element::Golden(phi()), &Style::default()).unwrap();
        assert_eq!(svg.matches("<rect").count(), 3);
        assert_eq!(svg.matches("<line").count(), 2);
        assert!(render_subdivision(&Element::int(1), &Style::default()).is_err());
    }

    #[test]
    fn extend_labels() {
        let svg = render_extend_sequence(3, &Style::default()).unwrap();
        for label in ["1.000", "1.618", "1.355", "1.434"] {
            assert!(svg.contains(&format!(">{label}<")), "{label}");
        }
        assert!(render_extend_sequence(1, &Style::default()).is_err());
    }

    #[test]
    fn fold_panels() {
        let t = fold_cf(3, 2).unwrap().trace;
        let svg = render_fold_trace(&t, &Style::default()).unwrap();
        assert_eq!(svg.matches(r#"class="panel""#).count(), t.len());
        let h = fold_harmonic(&r(3), &r(2)).unwrap();
        let svg = render_fold_trace(&h.trace, &Style::default()).unwrap();
        let last = svg.rfind(r#"class="value""#).unwrap();
        assert!(svg[last..].starts_with(r#"class="value">5/6<"#));
        assert!(matches!(
            render_fold_trace(&FoldTrace::new(r(1)), &Style::default()),
            Err(Error::EmptyTrace)
        ));
    }

    #[test]
    fn construction_labels() {
        let phi_svg = render_construction(Target::Phi, &Style::default()).unwrap();
        assert!(phi_svg.contains(">1.6180…<"));
        let chi_svg = render_construction(Target::Chi, &Style::default()).unwrap();
        assert!(chi_svg.contains(">1.3556…<"));
    }
}
