//! Convergent generators: continued fractions with a repeated partial
//! quotient, Fibonacci ratios, the Hₙ sequence in Q(√5), and nested
//! radicals.
//!
//! Continued fractions here always have the form `t + 1/(t + 1/(… + 1/s))`.
//! The first convergent is `t + 1/s` and each further one is `t + 1/c`, so
//! `s = 1` reproduces the golden chains `2, 3/2, 5/3, …` and
//! `φ + 1, 2, (2φ+1)/2, …`, while `s = t` gives the folding chain
//! `n + 1/(n + 1/n)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::decimal::{decimal_from_interval, initial_bits};
use crate::exact::{DecimalApprox, Element, Exact, Golden, Interval, Rational};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct CfConfig<F> {
    /// Repeated partial quotient `t`.
    pub term: F,
    /// Innermost value `s`.
    pub seed: F,
    pub count: usize,
}

impl<F> CfConfig<F> {
    pub fn new(term: F, seed: F, count: usize) -> Self {
        Self { term, seed, count }
    }
}

/// Convergents `c₁ = t + 1/s`, `c_{k+1} = t + 1/c_k`, computed in `F`.
pub fn cf_convergents<F: Field>(cfg: &CfConfig<F>) -> Result<Vec<F>> {
    let step =
        |c: &F| -> Result<F> { Ok(cfg.term.clone() + c.inv().ok_or(Error::DivisionByZero)?) };
    let mut out = Vec::with_capacity(cfg.count);
    let mut c = cfg.seed.clone();
    for _ in 0..cfg.count {
        c = step(&c)?;
        out.push(c.clone());
    }
    Ok(out)
}

/// Exact convergents over any element of the tower, with positivity of
/// `term` and `seed` checked by exact sign.
pub fn cf_convergents_exact(cfg: &CfConfig<Element>) -> Result<Vec<Element>> {
    if cfg.term.sign() <= 0 || cfg.seed.sign() <= 0 {
        return Err(Error::domain(
            "continued fraction term and seed must be positive",
        ));
    }
    let mut out = Vec::with_capacity(cfg.count);
    let mut c = cfg.seed.clone();
    for _ in 0..cfg.count {
        c = cfg.term.checked_add(&c.recip()?)?;
        out.push(c.clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciRun {
    /// `F₁, F₂, …` from the seeds 1, 1.
    pub terms: Vec<BigInt>,
    /// `F_{k+1} / F_k` for consecutive terms.
    pub ratios: Vec<Rational>,
}

pub fn fibonacci_ratios(count: usize) -> Result<FibonacciRun> {
    if count == 0 {
        return Err(Error::domain("count must be at least 1"));
    }
    let mut terms = vec![BigInt::one()];
    while terms.len() < count {
        let n = terms.len();
        let next = if n == 1 {
            BigInt::one()
        } else {
            &terms[n - 1] + &terms[n - 2]
        };
        terms.push(next);
    }
    let ratios = terms
        .windows(2)
        .map(|w| Rational::new(w[1].clone(), w[0].clone()))
        .collect();
    Ok(FibonacciRun { terms, ratios })
}

/// A term `aφ + b` of the Hₙ sequence.
pub type HTerm = Golden;

fn h_seeds() -> [HTerm; 2] {
    [
        Golden::new(Rational::one(), Rational::one()),
        Golden::from_base(Rational::from_integer(2.into())),
    ]
}

/// `(aφ + b, cφ + d) ↦ (a + c + d)φ + (b + c)`, i.e. `φ·next + prev`.
fn h_rule(prev: &HTerm, cur: &HTerm) -> HTerm {
    Golden::new(&prev.a + &cur.a + &cur.b, &prev.b + &cur.a)
}

/// `H₁ = φ + 1`, `H₂ = 2`, then the numerator recurrence of the φ-chain.
///
/// The chain's second convergent cancels, `(2φ + 2)/(φ + 1) = 2`, so the
/// numerator preceding `H₂` is the reduced denominator 1 rather than `H₁`:
/// `H₃ = 2φ + 1` is the rule applied to `(1, 2)` and every later term is the
/// rule applied to its two predecessors.
pub fn h_sequence(count: usize) -> Result<Vec<HTerm>> {
    if count < 2 {
        return Err(Error::domain("the H sequence needs count >= 2"));
    }
    let mut out = h_seeds().to_vec();
    while out.len() < count {
        let n = out.len();
        let prev = if n == 2 {
            Golden::one()
        } else {
            out[n - 2].clone()
        };
        let next = h_rule(&prev, &out[n - 1]);
        out.push(next);
    }
    Ok(out)
}

/// `H_{k+1} / H_k` for `k = 1 .. count − 1`.
pub fn h_ratio_convergence(count: usize) -> Result<Vec<Golden>> {
    if count < 3 {
        return Err(Error::domain("ratio convergence needs count >= 3"));
    }
    let terms = h_sequence(count)?;
    terms
        .windows(2)
        .map(|w| w[1].checked_div(&w[0]).ok_or(Error::DivisionByZero))
        .collect()
}

/// Same seeds with the plain Fibonacci rule `(a + c)φ + (b + d)`; the ratios
/// tend to φ instead of χ′.
pub fn h_sequence_alt_rule(count: usize) -> Result<Vec<HTerm>> {
    if count < 2 {
        return Err(Error::domain("the H sequence needs count >= 2"));
    }
    let mut out = h_seeds().to_vec();
    while out.len() < count {
        let n = out.len();
        let next = &out[n - 2] + &out[n - 1];
        out.push(next);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalConfig {
    /// `c` in `x ↦ √(1 + c·x)`.
    pub coefficient: Element,
    pub start: Rational,
    pub count: usize,
}

/// The `steps`-th iterate of `x ↦ √(1 + c·x)` from `start`, as an exactly
/// specified real that can be enclosed to any precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalIterate {
    pub coefficient: Element,
    pub start: Rational,
    pub steps: usize,
}

fn guard_bits(steps: usize) -> u32 {
    16 + 2 * (usize::BITS - steps.leading_zeros())
}

impl Exact for RadicalIterate {
    fn enclose(&self, bits: u32) -> Interval {
        let inner = bits + guard_bits(self.steps);
        let c = self.coefficient.enclose(inner);
        let one = Interval::point(Rational::one());
        let mut x = Interval::point(self.start.clone());
        for _ in 0..self.steps {
            x = one.add(&c.mul(&x, inner)).sqrt(inner);
        }
        x
    }

    fn is_exact_zero(&self) -> bool {
        self.steps == 0 && self.start.is_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        (self.steps == 0).then(|| self.start.clone())
    }
}

/// Iterates `x₁ … x_count`, validated.
pub fn nested_radical_iterates(cfg: &RadicalConfig) -> Result<Vec<RadicalIterate>> {
    if cfg.coefficient.sign() <= 0 {
        return Err(Error::domain("radical coefficient must be positive"));
    }
    if cfg.start < Rational::zero() {
        return Err(Error::domain("radical start must be non-negative"));
    }
    Ok((1..=cfg.count)
        .map(|steps| RadicalIterate {
            coefficient: cfg.coefficient.clone(),
            start: cfg.start.clone(),
            steps,
        })
        .collect())
}

/// Guaranteed decimals of `x₁ … x_count`.
pub fn nested_radical(cfg: &RadicalConfig, digits: u32) -> Result<Vec<DecimalApprox>> {
    if digits == 0 {
        return Err(Error::InvalidDigits);
    }
    let iterates = nested_radical_iterates(cfg)?;
    let mut bits = initial_bits(digits);
    let mut out: Vec<DecimalApprox> = Vec::with_capacity(iterates.len());
    // enclose the whole run at once and only refine the iterates that did
    // not resolve
    let mut pending: Vec<usize> = (0..iterates.len()).collect();
    let mut resolved: Vec<Option<DecimalApprox>> = vec![None; iterates.len()];
    while !pending.is_empty() {
        pending.retain(
            |&i| match decimal_from_interval(&iterates[i].enclose(bits), digits) {
                Some(d) => {
                    resolved[i] = Some(d);
                    false
                }
                None => true,
            },
        );
        if !pending.is_empty() {
            if bits > 1 << 18 {
                for &i in &pending {
                    resolved[i] = Some(crate::exact::eval_decimal(&iterates[i], digits)?);
                }
                break;
            }
            bits *= 2;
        }
    }
    out.extend(
        resolved
            .into_iter()
            .map(|d| d.expect("all iterates resolved")),
    );
    Ok(out)
}
