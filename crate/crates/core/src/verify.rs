//! The exact identity suite behind `chilab verify`.
//!
//! Every check is an exact equality in the tower; none uses a tolerance.

use crate::constants::{
    chi, chi_poly, chi_prime, chi_prime_poly, metallic, metallic_poly, phi, phi_inverse, phi_poly,
    poly_eval, quartic_expand, Pairing,
};
use crate::error::Result;
use crate::exact::rational::int;
use crate::exact::{Element, Exact, Golden};
use crate::fold::{fold_cf, fold_harmonic};
use crate::rect::{extend_ratio, subdivide, Branch};
use crate::sequences::{cf_convergents, h_sequence, CfConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub passed: bool,
    /// Error text when the check could not be evaluated.
    pub detail: Option<String>,
}

type Check = fn() -> Result<bool>;

fn is_root(p: &crate::constants::Poly<Golden>, x: Element) -> Result<bool> {
    Ok(poly_eval(p, &x)?.is_exact_zero())
}

fn chi_el() -> Element {
    Element::Tower(chi())
}

fn chi_prime_el() -> Element {
    Element::Tower(chi_prime())
}

fn phi_el() -> Element {
    Element::Golden(phi())
}

fn vieta(root: Element, linear: Element) -> Result<bool> {
    // the roots of x² − bx − 1 are x and −1/x
    let other = root.recip()?.neg();
    Ok(root.checked_add(&other)?.value_eq(&linear)
        && root.checked_mul(&other)?.value_eq(&Element::int(-1)))
}

fn quartic_descending(p: Pairing) -> Vec<Golden> {
    quartic_expand(p).descending()
}

const CHECKS: &[(&str, Check)] = &[
    ("phi residual", || is_root(&phi_poly(), phi_el())),
    ("chi residual", || is_root(&chi_poly(), chi_el())),
    ("chi_prime residual", || {
        is_root(&chi_prime_poly(), chi_prime_el())
    }),
    ("chi = 1/phi + 1/chi", || {
        let rhs = Element::Golden(phi_inverse()).checked_add(&chi_el().recip()?)?;
        Ok(chi_el().value_eq(&rhs))
    }),
    ("chi_prime = phi + 1/chi_prime", || {
        let rhs = phi_el().checked_add(&chi_prime_el().recip()?)?;
        Ok(chi_prime_el().value_eq(&rhs))
    }),
    ("chi Vieta sum and product", || {
        vieta(chi_el(), Element::Golden(phi_inverse()))
    }),
    ("chi_prime Vieta sum and product", || {
        vieta(chi_prime_el(), phi_el())
    }),
    ("quartic with mixed signs has integer coefficients", || {
        let want = [1, 1, -3, -1, 1].map(|c| Golden::from_base(int(c)));
        Ok(quartic_descending(Pairing::MixedSigns) == want)
    }),
    ("chi is a root of the integer quartic", || {
        is_root(&quartic_expand(Pairing::MixedSigns), chi_el())
    }),
    ("quartic with same signs keeps sqrt(5)", || {
        let sqrt5 = Golden::new(int(2), int(-1));
        let one = Golden::from_base(int(1));
        let want = [one.clone(), sqrt5.clone(), -one.clone(), -sqrt5, one];
        Ok(quartic_expand(Pairing::SameSigns).coeffs() == want)
    }),
    ("metallic means 1..=6 are roots", || {
        for n in 1..=6 {
            if !is_root(&metallic_poly(n), metallic(n)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("H ratios equal the phi-chain convergents", || {
        let h = h_sequence(14)?;
        let cf = cf_convergents(&CfConfig::new(phi(), Golden::from_base(int(1)), 14))?;
        for j in 2..14 {
            let ratio = h[j].checked_div(&h[j - 1]).expect("H terms are nonzero");
            if cf[j] != ratio {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("fold_cf equals the continued fraction", || {
        for n in 1..=3u32 {
            let t = int(i64::from(n));
            let cf = cf_convergents(&CfConfig::new(t.clone(), t, 15))?;
            for (d, c) in cf.iter().enumerate() {
                if &fold_cf(n, d + 1)?.length != c {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }),
    ("harmonic fold satisfies H (1/m + 1/n) = 2", || {
        let h = fold_harmonic(&int(3), &int(2))?;
        Ok(&h.mean * &h.sum_recip == int(2))
    }),
    ("extension of 2 is the silver mean", || {
        Ok(extend_ratio(&Element::int(2), Branch::AbovePhi)?.value_eq(&metallic(2)?))
    }),
    ("extension of phi below is chi", || {
        Ok(extend_ratio(&phi_el(), Branch::BelowPhi)?.value_eq(&chi_el()))
    }),
    ("subdivision strips are similar to the whole", || {
        for x in [phi_el(), chi_el(), chi_prime_el(), Element::int(2)] {
            let s = subdivide(&x)?;
            if !s.strip.proportion()?.value_eq(&x) {
                return Ok(false);
            }
        }
        Ok(true)
    }),
];

/// Runs every identity.
pub fn run_identities() -> Vec<IdentityResult> {
    CHECKS
        .iter()
        .map(|(name, check)| match check() {
            Ok(passed) => IdentityResult {
                name,
                passed,
                detail: None,
            },
            Err(e) => IdentityResult {
                name,
                passed: false,
                detail: Some(e.to_string()),
            },
        })
        .collect()
}
