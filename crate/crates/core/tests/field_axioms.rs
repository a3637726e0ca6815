mod common;

use chilab::exact::Exact;
use chilab::{Element, Golden, Rational};
use common::props::*;
use num_traits::One;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        field_laws(a, b, c)?;
    }

    #[test]
    fn golden_elements_form_a_field(a in golden(), b in golden(), c in golden()) {
        field_laws(a, b, c)?;
    }

    #[test]
    fn golden_norm_is_multiplicative(a in golden(), b in golden()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn tower_elements_form_a_field(t in tower_triple()) {
        tower_field_laws(t)?;
    }

    #[test]
    fn sign_agrees_with_squaring(t in tower_triple().prop_map(|t| t.0)) {
        // p + q√r > 0 decided without intervals: compare p² with q²r when
        // p and q have opposite signs
        let e = Element::Tower(t.clone());
        let s = e.sign();
        let p = Element::Golden(t.p.clone());
        let q = Element::Golden(t.q.clone());
        let (sp, sq) = (p.sign(), q.sign());
        let expected = if sq == 0 {
            sp
        } else if sp == 0 || sp == sq {
            if sp == 0 { sq } else { sp }
        } else {
            let p2 = p.checked_mul(&p).unwrap();
            let q2r = q.checked_mul(&q).unwrap().checked_mul(&Element::Golden(t.r.clone())).unwrap();
            let d = p2.checked_sub(&q2r).unwrap().sign();
            if d > 0 { sp } else if d < 0 { sq } else { 0 }
        };
        prop_assert_eq!(s, expected);
    }
}

#[test]
fn float_instances_satisfy_the_axioms_approximately() {
    let a = chilab::GoldenF64::new(0.5, -1.25);
    let inv = a.inv().unwrap();
    let prod = a * inv;
    assert!((prod.a).abs() < 1e-12 && (prod.b - 1.0).abs() < 1e-12);
    let z = chilab::GoldenF32::new(0.0, 0.0);
    assert!(z.inv().is_none());
    assert!(Golden::one().enclose(8).contains(&Rational::one()));
}
