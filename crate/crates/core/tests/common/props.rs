//! Strategies and law checks shared by the property suites.

use chilab::exact::Exact;
use chilab::{Element, Field, Golden, Rational, Tower};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=200, 1i64..=50).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn golden() -> impl Strategy<Value = Golden> {
    (rational(), rational()).prop_map(|(a, b)| Golden::new(a, b))
}

/// Radicands that stay irrational: 2, 3, 6 − φ and 20 + 4φ.
pub fn radicand() -> impl Strategy<Value = Golden> {
    let int = |n: i64| Rational::from_integer(n.into());
    prop_oneof![
        Just(Golden::from_base(int(2))),
        Just(Golden::from_base(int(3))),
        Just(Golden::new(int(-1), int(6))),
        Just(Golden::new(int(4), int(20))),
    ]
}

pub fn tower_triple() -> impl Strategy<Value = (Tower, Tower, Tower)> {
    radicand().prop_flat_map(|r| {
        let one = move || {
            let r = r.clone();
            (golden(), golden()).prop_map(move |(p, q)| Tower::new(p, q, r.clone()).unwrap())
        };
        (one(), one(), one())
    })
}

pub fn field_laws<F>(a: F, b: F, c: F) -> Result<(), TestCaseError>
where
    F: Field + std::ops::Add<Output = F> + std::ops::Mul<Output = F>,
{
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    prop_assert_eq!(
        (a.clone() + b.clone()) + c.clone(),
        a.clone() + (b.clone() + c.clone())
    );
    prop_assert_eq!(
        (a.clone() * b.clone()) * c.clone(),
        a.clone() * (b.clone() * c.clone())
    );
    prop_assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    prop_assert_eq!(a.clone() + F::zero(), a.clone());
    prop_assert_eq!(a.clone() * F::one(), a.clone());
    prop_assert!((a.clone() + -a.clone()).is_zero());
    match a.inv() {
        Some(inv) => prop_assert_eq!(a * inv, F::one()),
        None => prop_assert!(a.is_zero()),
    }
    Ok(())
}

pub fn tower_field_laws((a, b, c): (Tower, Tower, Tower)) -> Result<(), TestCaseError> {
    let (a, b, c) = (Element::Tower(a), Element::Tower(b), Element::Tower(c));
    let add = |x: &Element, y: &Element| x.checked_add(y).unwrap();
    let mul = |x: &Element, y: &Element| x.checked_mul(y).unwrap();
    prop_assert!(add(&a, &b).value_eq(&add(&b, &a)));
    prop_assert!(mul(&a, &b).value_eq(&mul(&b, &a)));
    prop_assert!(add(&add(&a, &b), &c).value_eq(&add(&a, &add(&b, &c))));
    prop_assert!(mul(&mul(&a, &b), &c).value_eq(&mul(&a, &mul(&b, &c))));
    prop_assert!(mul(&a, &add(&b, &c)).value_eq(&add(&mul(&a, &b), &mul(&a, &c))));
    prop_assert!(add(&a, &a.neg()).is_exact_zero());
    if a.is_exact_zero() {
        prop_assert!(a.recip().is_err());
    } else {
        prop_assert!(mul(&a, &a.recip().unwrap()).value_eq(&Element::int(1)));
    }
    Ok(())
}
