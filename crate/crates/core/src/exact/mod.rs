//! Exact arithmetic substrate: rationals, Q(√5) in the φ-basis, a one-level
//! radical tower over it, and guaranteed decimal evaluation.

pub mod decimal;
pub mod element;
pub mod golden;
pub mod interval;
pub mod rational;
pub mod tower;

use num_traits::Zero;

use crate::error::{Error, Result};
pub use decimal::{eval_decimal, DecimalApprox};
pub use element::Element;
pub use golden::GoldenElem;
pub use interval::{sign, Exact, Interval};
pub use rational::Rational;
pub use tower::{golden_sqrt, Golden, Tower, TowerElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rational_arith(x: &Rational, y: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x / y
        }
    })
}

pub fn golden_arith(x: &Golden, y: &Golden, op: ArithOp) -> Result<Golden> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y).ok_or(Error::DivisionByZero)?,
    })
}

/// Operands must share a radicand, up to a square factor in Q(√5).
pub fn tower_arith(x: &Tower, y: &Tower, op: ArithOp) -> Result<Tower> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

pub fn value_eq(x: &Element, y: &Element) -> bool {
    x.value_eq(y)
}
