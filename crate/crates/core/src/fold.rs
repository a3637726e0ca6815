//! Folding moves on a strip of width 1, tracked as exact rational lengths.
//!
//! The diagonal-and-perpendicular fold turns length `x` into `1/x`, folding
//! off a unit square adds 1, and laying two strips end to end adds their
//! lengths. Every move is recorded so a trace can be replayed or drawn.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::rational::{parse_rational, to_ratio_string};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoldOp {
    Reciprocal,
    /// One unit square.
    Square,
    /// A second strip of the given length laid alongside.
    Join(Rational),
}

impl FoldOp {
    pub fn name(&self) -> &'static str {
        match self {
            FoldOp::Reciprocal => "reciprocal",
            FoldOp::Square => "square",
            FoldOp::Join(_) => "join",
        }
    }

    fn apply(&self, x: &Rational) -> Result<Rational> {
        match self {
            FoldOp::Reciprocal if x.is_zero() => Err(Error::DivisionByZero),
            FoldOp::Reciprocal => Ok(x.recip()),
            FoldOp::Square => Ok(x + Rational::one()),
            FoldOp::Join(y) => Ok(x + y),
        }
    }
}

impl fmt::Display for FoldOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldStep {
    pub op: FoldOp,
    pub before: Rational,
    pub after: Rational,
}

impl FoldStep {
    pub fn to_json(&self) -> Value {
        json!({
            "op": self.op.name(),
            "before": to_ratio_string(&self.before),
            "after": to_ratio_string(&self.after),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |key: &str| -> Result<Rational> {
            let s = v.get(key).and_then(Value::as_str).ok_or_else(|| {
                Error::parse(v.to_string(), format!("missing string field `{key}`"))
            })?;
            parse_rational(s)
        };
        let before = field("before")?;
        let after = field("after")?;
        let op = match v.get("op").and_then(Value::as_str) {
            Some("reciprocal") => FoldOp::Reciprocal,
            Some("square") => FoldOp::Square,
            Some("join") => FoldOp::Join(&after - &before),
            _ => return Err(Error::parse(v.to_string(), "unknown fold op")),
        };
        Ok(Self { op, before, after })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldTrace {
    pub start: Rational,
    pub steps: Vec<FoldStep>,
}

impl FoldTrace {
    pub fn new(start: Rational) -> Self {
        Self {
            start,
            steps: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn last_length(&self) -> &Rational {
        self.steps.last().map_or(&self.start, |s| &s.after)
    }

    /// Checks that each step starts where the previous one ended and
    /// recomputes every move, returning the final length.
    pub fn replay(&self) -> Result<Rational> {
        let mut x = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if step.before != x {
                return Err(Error::domain(format!(
                    "step {i} starts at {} but the strip is {}",
                    step.before, x
                )));
            }
            x = step.op.apply(&x)?;
            if x != step.after {
                return Err(Error::domain(format!(
                    "step {i} records {} but {} gives {}",
                    step.after, step.op, x
                )));
            }
        }
        Ok(x)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_json().to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_json_lines(text: &str) -> Result<Self> {
        let steps = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let v: Value =
                    serde_json::from_str(l).map_err(|e| Error::parse(l, e.to_string()))?;
                FoldStep::from_json(&v)
            })
            .collect::<Result<Vec<_>>>()?;
        let start = steps.first().ok_or(Error::EmptyTrace)?.before.clone();
        let trace = Self { start, steps };
        trace.replay()?;
        Ok(trace)
    }
}

/// Current strip length plus the moves that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldState {
    pub length: Rational,
    pub trace: FoldTrace,
}

impl FoldState {
    pub fn new(length: Rational) -> Result<Self> {
        if !length.is_positive() {
            return Err(Error::domain(format!(
                "strip length {length} must be positive"
            )));
        }
        Ok(Self {
            trace: FoldTrace::new(length.clone()),
            length,
        })
    }

    fn push(&self, op: FoldOp) -> Result<Self> {
        let after = op.apply(&self.length)?;
        let mut trace = self.trace.clone();
        trace.steps.push(FoldStep {
            op,
            before: self.length.clone(),
            after: after.clone(),
        });
        Ok(Self {
            length: after,
            trace,
        })
    }
}

pub fn fold_reciprocal(s: &FoldState) -> FoldState {
    s.push(FoldOp::Reciprocal)
        .expect("fold state lengths are positive")
}

pub fn fold_add_squares(s: &FoldState, n: u32) -> Result<FoldState> {
    if n == 0 {
        return Err(Error::domain("add at least one square"));
    }
    (0..n).try_fold(s.clone(), |acc, _| acc.push(FoldOp::Square))
}

pub fn fold_join(s: &FoldState, other: &Rational) -> Result<FoldState> {
    if !other.is_positive() {
        return Err(Error::domain(format!(
            "joined strip {other} must be positive"
        )));
    }
    s.push(FoldOp::Join(other.clone()))
}

/// `n + 1/(n + 1/(… + 1/n))` with `depth` fraction bars, folded from a unit
/// square: reach `n`, then repeat a reciprocal fold followed by `n` squares.
pub fn fold_cf(n: u32, depth: usize) -> Result<FoldState> {
    if n == 0 || depth == 0 {
        return Err(Error::domain("fold_cf needs n >= 1 and depth >= 1"));
    }
    let mut s = FoldState::new(Rational::one())?;
    if n > 1 {
        s = fold_add_squares(&s, n - 1)?;
    }
    for _ in 0..depth {
        s = fold_add_squares(&fold_reciprocal(&s), n)?;
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicFold {
    /// `1/m + 1/n`.
    pub sum_recip: Rational,
    /// `2 / (1/m + 1/n)`.
    pub mean: Rational,
    pub trace: FoldTrace,
}

/// Folds `m` to `1/m` and lays a `1/n` strip (itself a reciprocal fold of
/// `n`) alongside.
pub fn fold_harmonic(m: &Rational, n: &Rational) -> Result<HarmonicFold> {
    let other = fold_reciprocal(&FoldState::new(n.clone())?);
    let s = fold_join(&fold_reciprocal(&FoldState::new(m.clone())?), &other.length)?;
    let mean = Rational::from_integer(2.into()) / &s.length;
    Ok(HarmonicFold {
        sum_recip: s.length,
        mean,
        trace: s.trace,
    })
}

/// Starting from `1 × x`, fold one square to get `1 + x`, then repeat a
/// reciprocal fold followed by one square `depth` times.
pub fn fold_golden_from(x: &Rational, depth: usize) -> Result<FoldState> {
    if depth == 0 {
        return Err(Error::domain("depth must be at least 1"));
    }
    let mut s = fold_add_squares(&FoldState::new(x.clone())?, 1)?;
    for _ in 0..depth {
        s = fold_add_squares(&fold_reciprocal(&s), 1)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    fn state(x: Rational) -> FoldState {
        FoldState::new(x).unwrap()
    }

    #[test]
    fn reciprocal_fold() {
        assert_eq!(fold_reciprocal(&state(int(2))).length, frac(1, 2));
        assert_eq!(fold_reciprocal(&state(int(1))).length, int(1));
        let twice = fold_reciprocal(&fold_reciprocal(&state(frac(7, 3))));
        assert_eq!(twice.length, frac(7, 3));
        assert_eq!(twice.trace.len(), 2);
    }

    #[test]
    fn squares() {
        assert_eq!(fold_add_squares(&state(int(1)), 2).unwrap().length, int(3));
        let s = fold_add_squares(&state(frac(1, 2)), 3).unwrap();
        assert_eq!(s.length, frac(7, 2));
        assert_eq!(s.trace.len(), 3);
        assert_eq!(fold_add_squares(&state(int(1)), 1).unwrap().length, int(2));
        assert!(fold_add_squares(&state(int(1)), 0).is_err());
        assert!(FoldState::new(int(0)).is_err());
    }

    #[test]
    fn continued_fraction_fold() {
        assert_eq!(fold_cf(2, 1).unwrap().length, frac(5, 2));
        assert_eq!(fold_cf(2, 2).unwrap().length, frac(12, 5));
        assert_eq!(fold_cf(1, 3).unwrap().length, frac(5, 3));
        // reach 3 with two squares, then (reciprocal + 3 squares) twice
        assert_eq!(fold_cf(3, 2).unwrap().trace.len(), 2 + 2 * 4);
        assert!(fold_cf(0, 1).is_err());
        assert!(fold_cf(2, 0).is_err());
    }

    #[test]
    fn harmonic() {
        let h = fold_harmonic(&int(3), &int(2)).unwrap();
        assert_eq!((h.sum_recip, h.mean), (frac(5, 6), frac(12, 5)));
        let h = fold_harmonic(&int(1), &int(1)).unwrap();
        assert_eq!((h.sum_recip, h.mean), (int(2), int(1)));
        let h = fold_harmonic(&int(4), &int(4)).unwrap();
        assert_eq!((h.sum_recip, h.mean), (frac(1, 2), int(4)));
        assert!(fold_harmonic(&int(-1), &int(2)).is_err());
    }

    #[test]
    fn golden_from_one_gives_fibonacci_ratios() {
        let got: Vec<Rational> = (1..=3)
            .map(|d| fold_golden_from(&int(1), d).unwrap().length)
            .collect();
        assert_eq!(got, [frac(3, 2), frac(5, 3), frac(8, 5)]);
        assert_eq!(fold_golden_from(&int(7), 1).unwrap().length, frac(9, 8));
    }

    #[test]
    fn trace_lines_round_trip() {
        let s = fold_harmonic(&frac(7, 3), &int(2)).unwrap();
        let text = s.trace.to_json_lines();
        assert_eq!(
            text.lines().next().unwrap(),
            r#"{"op":"reciprocal","before":"7/3","after":"3/7"}"#
        );
        let back = FoldTrace::from_json_lines(&text).unwrap();
        assert_eq!(back, s.trace);
        assert!(FoldTrace::from_json_lines("").is_err());
    }

    #[test]
    fn broken_chain_is_rejected() {
        let mut t = fold_cf(2, 2).unwrap().trace;
        t.steps[1].before = int(9);
        assert!(t.replay().is_err());
    }
}
