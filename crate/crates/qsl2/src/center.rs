//! The Casimir element and the center of U_q(sl2).
//!
//! The Casimir element
//!
//! ```text
//! c = E F + (q^(-1) K + q K^(-1)) / (q - q^(-1))^2
//! ```
//!
//! commutes with everything, and the center is exactly the polynomial
//! algebra in c.  [`express_in_casimir`] inverts that description: given a
//! central element it recovers the unique polynomial, and it rejects
//! anything that is not a polynomial in c (in particular anything outside
//! the center).

use std::fmt;

use crate::error::{Error, Result};
use crate::pbw::{commutator, Element, PbwMonomial};
use crate::scalar::{coeff_atom, QParam, Scalar};

/// The Casimir element c, normally ordered.
pub fn casimir(qp: &QParam) -> Element {
    let delta_sq_inv = (&qp.delta() * &qp.delta()).inv().expect("delta is nonzero");
    Element::from_terms(
        qp,
        [
            (PbwMonomial::new(1, 1, 0), qp.one()),
            (PbwMonomial::new(0, 0, 1), &qp.q_pow(-1) * &delta_sq_inv),
            (PbwMonomial::new(0, 0, -1), &qp.q_pow(1) * &delta_sq_inv),
        ],
    )
}

/// The same element written the other way round,
/// c = F E + (q K + q^(-1) K^(-1)) / (q - q^(-1))^2,
/// computed through the product rewriting as an independent cross-check.
pub fn casimir_alt(qp: &QParam) -> Element {
    let delta_sq_inv = (&qp.delta() * &qp.delta()).inv().expect("delta is nonzero");
    let fe = &Element::f(qp) * &Element::e(qp);
    let k_part = &Element::k(qp).scale(&qp.q_pow(1))
        + &Element::k_inv(qp).scale(&qp.q_pow(-1));
    &fe + &k_part.scale(&delta_sq_inv)
}

/// Does x commute with all of U_q(sl2)?  (Checking the generators E, F, K
/// suffices, since they generate the algebra.)
pub fn is_central(x: &Element) -> bool {
    let qp = x.qparam();
    commutator(x, &Element::e(qp)).is_zero()
        && commutator(x, &Element::f(qp)).is_zero()
        && commutator(x, &Element::k(qp)).is_zero()
}

// ---- Polynomials in the Casimir ----

/// A polynomial in the Casimir element c with scalar coefficients;
/// `coeffs[i]` multiplies c^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirPolynomial {
    qp: QParam,
    coeffs: Vec<Scalar>,
}

impl CasimirPolynomial {
    /// Build from low-to-high coefficients; trailing zeros are trimmed.
    pub fn new(qp: &QParam, mut coeffs: Vec<Scalar>) -> CasimirPolynomial {
        for c in &coeffs {
            assert!(qp.matches(c), "coefficient from the wrong parameter context");
        }
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        CasimirPolynomial { qp: qp.clone(), coeffs }
    }

    pub fn zero(qp: &QParam) -> CasimirPolynomial {
        CasimirPolynomial { qp: qp.clone(), coeffs: Vec::new() }
    }

    pub fn qparam(&self) -> &QParam {
        &self.qp
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u64 - 1)
        }
    }

    pub fn coeff(&self, i: u64) -> Scalar {
        self.coeffs
            .get(i as usize)
            .cloned()
            .unwrap_or_else(|| self.qp.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Substitute the Casimir element back in: the central element this
    /// polynomial names.
    pub fn to_element(&self) -> Element {
        let c = casimir(&self.qp);
        // Horner's rule keeps the number of products linear in the degree.
        let mut acc = Element::zero(&self.qp);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &c) + &Element::scalar(&self.qp, a.clone());
        }
        acc
    }
}

impl fmt::Display for CasimirPolynomial {
    /// Descending powers of c, e.g. `c^3 - 2*c + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let (neg, mag) = a.sign_split();
            let sep = match (first, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "c".to_string(),
                _ => format!("c^{i}"),
            };
            let piece = if var.is_empty() {
                coeff_atom(&mag)
            } else if mag.is_one() {
                var
            } else {
                format!("{}*{}", coeff_atom(&mag), var)
            };
            write!(f, "{sep}{piece}")?;
        }
        Ok(())
    }
}

/// Write a central element as a polynomial in the Casimir element.
///
/// Strategy: in normal form, c^d is the only power whose terms reach the
/// balanced monomial E^d F^d, with coefficient exactly 1.  So the
/// coefficient of E^d F^d (with no K) at the top degree d is the leading
/// polynomial coefficient; subtract and recurse.  If the top coefficient
/// sits anywhere else, or subtracting fails to lower the degree, the
/// element is not a polynomial in c.
pub fn express_in_casimir(x: &Element) -> Result<CasimirPolynomial> {
    let qp = x.qparam().clone();
    let c = casimir(&qp);
    let class_of = |w: &Element| w.terms().map(|(m, _)| m.e.max(m.f)).max();

    let mut work = x.clone();
    let mut coeffs: Vec<Scalar> = Vec::new();
    while let Some(d) = class_of(&work) {
        let mu = work.coeff(PbwMonomial::new(d, d, 0));
        if mu.is_zero() {
            return Err(Error::NotInCasimir);
        }
        work = &work - &c.pow(d).scale(&mu);
        if class_of(&work).is_some_and(|nd| nd >= d) {
            return Err(Error::NotInCasimir);
        }
        if coeffs.len() <= d as usize {
            coeffs.resize(d as usize + 1, qp.zero());
        }
        coeffs[d as usize] = mu;
    }
    Ok(CasimirPolynomial::new(&qp, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};
    use proptest::prelude::*;

    fn gq() -> QParam {
        QParam::generic()
    }

    fn nq(n: i64, d: i64) -> QParam {
        QParam::concrete(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
    }

    fn both_modes() -> Vec<QParam> {
        vec![gq(), nq(2, 1), nq(-5, 3)]
    }

    #[test]
    fn casimir_normal_form_and_text() {
        let qp = gq();
        let c = casimir(&qp);
        assert_eq!(c.num_terms(), 3);
        assert!(c.coeff(PbwMonomial::new(1, 1, 0)).is_one());
        assert_eq!(
            c.to_string(),
            "E*F + (q/(q^4-2*q^2+1))*K + (q^3/(q^4-2*q^2+1))*K^(-1)"
        );
    }

    #[test]
    fn two_presentations_agree() {
        for qp in both_modes() {
            assert_eq!(casimir(&qp), casimir_alt(&qp));
        }
    }

    #[test]
    fn casimir_is_central() {
        for qp in both_modes() {
            let c = casimir(&qp);
            assert!(is_central(&c));
            assert!(is_central(&c.pow(2)));
            assert!(is_central(&c.pow(3)));
            assert!(is_central(&Element::one(&qp)));
            assert!(is_central(&Element::zero(&qp)));
        }
    }

    #[test]
    fn generators_are_not_central() {
        let qp = gq();
        for x in [
            Element::e(&qp),
            Element::f(&qp),
            Element::k(&qp),
            &Element::e(&qp) + &Element::f(&qp),
        ] {
            assert!(!is_central(&x));
        }
    }

    #[test]
    fn express_recovers_polynomials() {
        for qp in both_modes() {
            // c^3 - 2 c + 5
            let p = CasimirPolynomial::new(
                &qp,
                vec![qp.int(5), qp.int(-2), qp.zero(), qp.one()],
            );
            let x = p.to_element();
            let back = express_in_casimir(&x).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn express_rejects_non_polynomials() {
        let qp = gq();
        for x in [
            Element::k(&qp),
            &Element::one(&qp) + &Element::k(&qp),
            Element::e(&qp),
            Element::f(&qp),
            &casimir(&qp) + &Element::k(&qp),
            &Element::e(&qp) * &Element::f(&qp),
        ] {
            assert_eq!(express_in_casimir(&x), Err(Error::NotInCasimir), "{x}");
        }
    }

    #[test]
    fn express_zero_and_constants() {
        let qp = gq();
        assert_eq!(
            express_in_casimir(&Element::zero(&qp)).unwrap(),
            CasimirPolynomial::zero(&qp)
        );
        let five = Element::scalar(&qp, qp.int(5));
        let p = express_in_casimir(&five).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.coeff(0), qp.int(5));
    }

    #[test]
    fn polynomial_display() {
        let qp = gq();
        let p = CasimirPolynomial::new(&qp, vec![qp.int(5), qp.int(-2), qp.zero(), qp.one()]);
        assert_eq!(p.to_string(), "c^3 - 2*c + 5");
        let with_frac = CasimirPolynomial::new(
            &qp,
            vec![qp.delta().inv().unwrap(), qp.q_pow(2)],
        );
        assert_eq!(with_frac.to_string(), "q^2*c + (q/(q^2-1))");
        assert_eq!(CasimirPolynomial::zero(&qp).to_string(), "0");
    }

    fn arb_poly_coeffs() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-4i64..=4, 0..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn express_round_trips_random_polynomials(raw in arb_poly_coeffs()) {
            for qp in both_modes() {
                let p = CasimirPolynomial::new(
                    &qp,
                    raw.iter().map(|&c| qp.int(c)).collect(),
                );
                let x = p.to_element();
                prop_assert!(is_central(&x));
                prop_assert_eq!(express_in_casimir(&x).unwrap(), p);
            }
        }
    }
}
