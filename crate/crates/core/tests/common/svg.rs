//! SVG parsing and geometric checks shared by the rendering tests.

use std::path::PathBuf;

use chilab::exact::rational::parse_rational;
use chilab::render::Style;
use chilab::Rational;
use roxmltree::{Document, Node};

use super::{abs_diff, pow10_inv};

const NUMERIC: &[&str] = &[
    "x", "y", "width", "height", "x1", "y1", "x2", "y2", "cx", "cy", "r",
];

pub type Pt = (Rational, Rational);

pub fn num(n: Node, attr: &str) -> Rational {
    parse_rational(
        n.attribute(attr)
            .unwrap_or_else(|| panic!("missing {attr}")),
    )
    .unwrap()
}

/// Parses the document and checks the invariants every figure shares.
pub fn parse(svg: &str) -> Document<'_> {
    let doc = Document::parse(svg).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    let vb: Vec<&str> = root
        .attribute("viewBox")
        .expect("viewBox")
        .split(' ')
        .collect();
    assert_eq!(vb.len(), 4);
    for v in vb {
        parse_rational(v).unwrap();
    }
    for n in doc.descendants().filter(Node::is_element) {
        for a in NUMERIC {
            if let Some(v) = n.attribute(*a) {
                parse_rational(v).unwrap_or_else(|_| panic!("{a}={v} is not a finite decimal"));
            }
        }
    }
    doc
}

pub fn by_id<'a>(doc: &'a Document, id: &str) -> Node<'a, 'a> {
    doc.descendants()
        .find(|n| n.attribute("id") == Some(id))
        .unwrap_or_else(|| panic!("no element {id}"))
}

pub fn with_class<'a>(doc: &'a Document, class: &str) -> Vec<Node<'a, 'a>> {
    doc.descendants()
        .filter(|n| n.attribute("class") == Some(class))
        .collect()
}

pub fn count_tag(doc: &Document, tag: &str) -> usize {
    doc.descendants().filter(|n| n.has_tag_name(tag)).count()
}

pub fn endpoints(n: Node) -> (Pt, Pt) {
    ((num(n, "x1"), num(n, "y1")), (num(n, "x2"), num(n, "y2")))
}

/// Distance from `p` to the line through `a` and `b`, squared.
pub fn dist2_to_line(p: &Pt, a: &Pt, b: &Pt) -> Rational {
    let (dx, dy) = (&b.0 - &a.0, &b.1 - &a.1);
    let cross = &dx * (&p.1 - &a.1) - &dy * (&p.0 - &a.0);
    &cross * &cross / (&dx * &dx + &dy * &dy)
}

pub fn dist2(a: &Pt, b: &Pt) -> Rational {
    let (dx, dy) = (&b.0 - &a.0, &b.1 - &a.1);
    &dx * &dx + &dy * &dy
}

/// Cosine of the angle between two segments, squared.
fn cos2(u: &(Pt, Pt), v: &(Pt, Pt)) -> Rational {
    let dot = (&u.1 .0 - &u.0 .0) * (&v.1 .0 - &v.0 .0) + (&u.1 .1 - &u.0 .1) * (&v.1 .1 - &v.0 .1);
    &dot * &dot / (dist2(&u.0, &u.1) * dist2(&v.0, &v.1))
}

/// `1e-9` in unit coordinates, squared and scaled to pixels.
pub fn tol2(style: &Style) -> Rational {
    let t = pow10_inv(9) * Rational::from_integer(style.unit_px.into());
    &t * &t
}

fn unit(style: &Style) -> Rational {
    Rational::from_integer(style.unit_px.into())
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn matches_golden(name: &str, svg: &str) -> bool {
    std::fs::read_to_string(golden_path(name)).is_ok_and(|want| want == svg)
}

/// Three rectangles, a diagonal, its perpendicular and the foot between them.
/// The kept piece's height over width is returned.
pub fn check_subdivision(svg: &str, style: &Style) -> Rational {
    let doc = parse(svg);
    assert_eq!(count_tag(&doc, "rect"), 3);
    assert_eq!(count_tag(&doc, "line"), 2);
    let diag = endpoints(by_id(&doc, "diagonal"));
    let perp = endpoints(by_id(&doc, "perpendicular"));
    let foot = by_id(&doc, "foot");
    let foot = (num(foot, "cx"), num(foot, "cy"));
    assert!(
        dist2_to_line(&foot, &diag.0, &diag.1) < tol2(style),
        "foot off the diagonal"
    );
    assert!(
        dist2_to_line(&foot, &perp.0, &perp.1) < tol2(style),
        "foot off the perpendicular"
    );
    // the strip's top-left corner is where the perpendicular meets the top edge
    let strip = by_id(&doc, "strip");
    let corner = (num(strip, "x"), num(strip, "y"));
    assert!(
        dist2_to_line(&corner, &perp.0, &perp.1) < tol2(style),
        "strip corner off the perpendicular"
    );
    assert!(
        cos2(&diag, &perp) < pow10_inv(18),
        "lines are not perpendicular"
    );
    let kept = by_id(&doc, "kept");
    num(kept, "height") / num(kept, "width")
}

/// Returns the length labels.
pub fn check_extend_sequence(svg: &str, style: &Style) -> Vec<String> {
    let doc = parse(svg);
    for n in doc.descendants().filter(|n| n.has_tag_name("rect")) {
        assert_eq!(num(n, "height"), unit(style));
    }
    with_class(&doc, "length")
        .iter()
        .map(|n| n.text().unwrap().to_string())
        .collect()
}

/// Returns the panel count and the last value label.
pub fn check_fold_trace(svg: &str) -> (usize, String) {
    let doc = parse(svg);
    let panels = with_class(&doc, "panel");
    for p in &panels {
        let creases: Vec<(Pt, Pt)> = p
            .children()
            .filter(|n| n.attribute("class") == Some("crease"))
            .map(endpoints)
            .collect();
        if creases.len() == 2 {
            assert!(
                cos2(&creases[0], &creases[1]) < pow10_inv(18),
                "crease lines are not perpendicular"
            );
        }
    }
    let last = with_class(&doc, "value")
        .last()
        .unwrap()
        .text()
        .unwrap()
        .to_string();
    (panels.len(), last)
}

/// Checks every arc against its centre and the result line. Returns the
/// result length in units and its label.
pub fn check_construction(svg: &str, style: &Style) -> (Rational, String) {
    let doc = parse(svg);
    let result = endpoints(by_id(&doc, "result"));
    assert_eq!(result.0 .1, result.1 .1, "result is not horizontal");
    let len = (&result.1 .0 - &result.0 .0) / unit(style);
    let arcs = with_class(&doc, "arc");
    assert!(!arcs.is_empty());
    for arc in arcs {
        let group = arc.parent().unwrap();
        let center = group
            .children()
            .find(|n| n.attribute("class") == Some("point"))
            .unwrap();
        let c = (num(center, "cx"), num(center, "cy"));
        let d: Vec<&str> = arc.attribute("d").unwrap().split(' ').collect();
        let p = |i: usize| parse_rational(d[i]).unwrap();
        let (start, r, end) = ((p(1), p(2)), p(4), (p(9), p(10)));
        // |d − r| < t is |d² − r²| < t (d + r) ≈ 2rt
        let r2 = &r * &r;
        let slack = pow10_inv(9) * unit(style) * Rational::from_integer(2.into()) * &r;
        assert!(
            abs_diff(&dist2(&c, &start), &r2) < slack,
            "arc start off its circle"
        );
        assert!(
            abs_diff(&dist2(&c, &end), &r2) < slack,
            "arc end off its circle"
        );
        assert!(
            dist2_to_line(&end, &result.0, &result.1) < tol2(style),
            "arc does not land on the baseline"
        );
    }
    (len, by_id(&doc, "result-label").text().unwrap().to_string())
}
