//! Minimal SVG 1.1 writer with exact-decimal coordinates.

use std::fmt::Write;

use num_traits::Signed;

use crate::exact::rational::{format_units, truncated_units};
use crate::exact::{eval_decimal, Exact, Rational};

use super::Style;

/// Decimals kept for every coordinate in unit space.
pub(crate) const COORD_DIGITS: u32 = 12;

/// Truncates to [`COORD_DIGITS`] decimals and drops trailing zeros.
pub(crate) fn fmt_num(x: &Rational) -> String {
    let units = truncated_units(x, COORD_DIGITS);
    let s = format_units(x.is_negative(), &units, COORD_DIGITS);
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// The value truncated to [`COORD_DIGITS`] decimals, as a rational.
pub(crate) fn unit_coord<E: Exact + ?Sized>(x: &E) -> Rational {
    eval_decimal(x, COORD_DIGITS)
        .expect("coordinate digits are nonzero")
        .to_rational()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Maps unit coordinates (y up) to pixels (y down) with a fixed margin.
#[derive(Clone, Debug)]
pub(crate) struct Canvas {
    unit: Rational,
    margin: Rational,
    width: Rational,
    height: Rational,
    body: String,
    depth: usize,
}

impl Canvas {
    /// A canvas showing `[0, width] × [0, height]` in unit coordinates.
    pub(crate) fn new(style: &Style, width: Rational, height: Rational) -> Self {
        let unit = Rational::from_integer(style.unit_px.into());
        let margin = &unit / Rational::from_integer(4.into());
        Self {
            width: &width * &unit + &margin * Rational::from_integer(2.into()),
            height: &height * &unit + &margin * Rational::from_integer(2.into()),
            unit,
            margin,
            body: String::new(),
            depth: 1,
        }
    }

    pub(crate) fn px(&self, x: &Rational) -> String {
        fmt_num(&(&self.margin + x * &self.unit))
    }

    pub(crate) fn py(&self, y: &Rational) -> String {
        fmt_num(&(&self.height - &self.margin - y * &self.unit))
    }

    pub(crate) fn len(&self, d: &Rational) -> String {
        fmt_num(&(d * &self.unit))
    }

    fn line_out(&mut self, s: &str) {
        for _ in 0..self.depth {
            self.body.push_str("  ");
        }
        self.body.push_str(s);
        self.body.push('\n');
    }

    pub(crate) fn open_group(&mut self, attrs: &str) {
        self.line_out(&format!("<g {attrs}>"));
        self.depth += 1;
    }

    pub(crate) fn close_group(&mut self) {
        self.depth -= 1;
        self.line_out("</g>");
    }

    /// Rectangle with lower-left corner `(x, y)` in unit coordinates.
    pub(crate) fn rect(
        &mut self,
        x: &Rational,
        y: &Rational,
        w: &Rational,
        h: &Rational,
        attrs: &str,
    ) {
        let top = y + h;
        let s = format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}" {attrs}/>"#,
            self.px(x),
            self.py(&top),
            self.len(w),
            self.len(h)
        );
        self.line_out(&s);
    }

    pub(crate) fn line(
        &mut self,
        a: (&Rational, &Rational),
        b: (&Rational, &Rational),
        attrs: &str,
    ) {
        let s = format!(
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {attrs}/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        );
        self.line_out(&s);
    }

    pub(crate) fn circle(&mut self, c: (&Rational, &Rational), r_px: &Rational, attrs: &str) {
        let s = format!(
            r#"<circle cx="{}" cy="{}" r="{}" {attrs}/>"#,
            self.px(c.0),
            self.py(c.1),
            fmt_num(r_px)
        );
        self.line_out(&s);
    }

    /// Clockwise (on screen) arc of radius `r` from `a` to `b`.
    pub(crate) fn arc(
        &mut self,
        a: (&Rational, &Rational),
        b: (&Rational, &Rational),
        r: &Rational,
        attrs: &str,
    ) {
        let rr = self.len(r);
        let s = format!(
            r#"<path d="M {} {} A {rr} {rr} 0 0 1 {} {}" {attrs}/>"#,
            self.px(a.0),
            self.py(a.1),
            self.px(b.0),
            self.py(b.1)
        );
        self.line_out(&s);
    }

    /// Text anchored at `(x, y)` in unit coordinates, shifted by `dy_px`.
    pub(crate) fn text(
        &mut self,
        at: (&Rational, &Rational),
        dy_px: i64,
        content: &str,
        attrs: &str,
    ) {
        let y =
            &self.height - &self.margin - at.1 * &self.unit + Rational::from_integer(dy_px.into());
        let s = format!(
            r#"<text x="{}" y="{}" fill="black" stroke="none" {attrs}>{}</text>"#,
            self.px(at.0),
            fmt_num(&y),
            escape(content)
        );
        self.line_out(&s);
    }

    pub(crate) fn finish(self, style: &Style) -> String {
        let (w, h) = (fmt_num(&self.width), fmt_num(&self.height));
        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        writeln!(
            out,
            r#"  <g fill="none" stroke="black" stroke-width="{}" font-family="sans-serif" font-size="{}">"#,
            fmt_num(&style.stroke_px),
            style.font_px()
        )
        .unwrap();
        out.push_str(&self.body);
        out.push_str("  </g>\n</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn numbers_are_trimmed_decimals() {
        assert_eq!(fmt_num(&frac(3, 2)), "1.5");
        assert_eq!(fmt_num(&frac(1, 3)), "0.333333333333");
        assert_eq!(fmt_num(&frac(-1, 10_i64.pow(13))), "0");
        assert_eq!(fmt_num(&Rational::from_integer(100.into())), "100");
    }

    #[test]
    fn escapes_text() {
        assert_eq!(escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
    }
}
