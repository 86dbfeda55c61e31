//! Elements of U_q(sl2) in the normally ordered basis E^i F^j K^s.
//!
//! The generators satisfy
//!
//! ```text
//! K K^(-1) = 1,   K E K^(-1) = q^2 E,   K F K^(-1) = q^(-2) F,
//! E F - F E = (K - K^(-1)) / (q - q^(-1)).
//! ```
//!
//! Every element is stored as a finite sum of basis monomials E^i F^j K^s
//! (i, j >= 0, s in Z) with scalar coefficients.  Multiplication rewrites
//! any product back into this order; the rewriting below is confluent, so
//! products are independent of association order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{coeff_atom, QParam, Scalar};

// ---- Basis monomials ----

/// The basis monomial E^e F^f K^k.  `(0, 0, 0)` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub e: u64,
    pub f: u64,
    pub k: i64,
}

impl PbwMonomial {
    pub fn new(e: u64, f: u64, k: i64) -> PbwMonomial {
        PbwMonomial { e, f, k }
    }

    pub fn unit() -> PbwMonomial {
        PbwMonomial { e: 0, f: 0, k: 0 }
    }

    pub fn is_unit_monomial(self) -> bool {
        self == PbwMonomial::unit()
    }

    /// The K-conjugation weight: ad_K rescales this monomial by q^(2w).
    pub fn weight(self) -> i64 {
        self.e as i64 - self.f as i64
    }
}

fn pow_str(name: &str, exp: i64) -> String {
    if exp == 1 {
        name.to_string()
    } else if exp < 0 {
        format!("{name}^({exp})")
    } else {
        format!("{name}^{exp}")
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.e > 0 {
            parts.push(pow_str("E", self.e as i64));
        }
        if self.f > 0 {
            parts.push(pow_str("F", self.f as i64));
        }
        if self.k != 0 {
            parts.push(pow_str("K", self.k));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

// ---- Rewriting kernel ----

type TermMap = BTreeMap<PbwMonomial, Scalar>;

fn add_term(map: &mut TermMap, m: PbwMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Normal form of F^b E, built iteratively (no recursion, so arbitrary b
/// is safe).  Uses F^b E = (F^(b-1) E) F - F^(b-1) (K - K^(-1)) / delta.
fn fb_e(b: u64, qp: &QParam) -> TermMap {
    let inv_delta = qp.delta().inv().expect("delta is nonzero away from q^2 = 1");
    let neg_inv_delta = -&inv_delta;
    let mut cur = TermMap::new();
    cur.insert(PbwMonomial::new(1, 0, 0), qp.one());
    for step in 1..=b {
        let mut next = TermMap::new();
        // Right-multiply by F: K^g F = q^(-2g) F K^g.
        for (m, c) in &cur {
            let c2 = c * &qp.q_pow(-2 * m.k);
            add_term(&mut next, PbwMonomial::new(m.e, m.f + 1, m.k), c2);
        }
        add_term(&mut next, PbwMonomial::new(0, step - 1, 1), neg_inv_delta.clone());
        add_term(&mut next, PbwMonomial::new(0, step - 1, -1), inv_delta.clone());
        cur = next;
    }
    cur
}

/// Right-multiply a normally ordered term by E:
/// E^a F^b K^g * E = q^(2g) E^a (F^b E) K^g.
fn mul_right_e(m: PbwMonomial, c: &Scalar, qp: &QParam, out: &mut TermMap) {
    let front = c * &qp.q_pow(2 * m.k);
    for (t, tc) in fb_e(m.f, qp) {
        add_term(
            out,
            PbwMonomial::new(m.e + t.e, t.f, m.k + t.k),
            &front * &tc,
        );
    }
}

/// Normal form of F^j E^i.
fn fe_normal(j: u64, i: u64, qp: &QParam) -> TermMap {
    let mut cur = TermMap::new();
    cur.insert(PbwMonomial::new(0, j, 0), qp.one());
    for _ in 0..i {
        let mut next = TermMap::new();
        for (m, c) in &cur {
            mul_right_e(*m, c, qp, &mut next);
        }
        cur = next;
    }
    cur
}

/// Product of two basis monomials, as a normally ordered term map.
fn normal_order_product(m1: PbwMonomial, m2: PbwMonomial, qp: &QParam) -> TermMap {
    // Slide K^s1 through E^i2 F^j2: picks up q^(2 s1 (i2 - j2)).
    let front = qp.q_pow(2 * m1.k * (m2.e as i64 - m2.f as i64));
    let mut out = TermMap::new();
    for (t, tc) in fe_normal(m1.f, m2.e, qp) {
        // E^i1 * (E^a F^b K^g) * F^j2 K^(s1+s2); moving F^j2 past K^g
        // costs q^(-2 g j2).
        let c = &(&front * &tc) * &qp.q_pow(-2 * t.k * m2.f as i64);
        add_term(
            &mut out,
            PbwMonomial::new(m1.e + t.e, t.f + m2.f, t.k + m1.k + m2.k),
            c,
        );
    }
    out
}

// ---- Elements ----

/// An element of U_q(sl2) in normal form: a finite scalar combination of
/// basis monomials E^i F^j K^s.  Carries the parameter context it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    qp: QParam,
    terms: TermMap,
}

impl Element {
    pub fn zero(qp: &QParam) -> Element {
        Element { qp: qp.clone(), terms: TermMap::new() }
    }

    pub fn one(qp: &QParam) -> Element {
        Element::monomial(qp, PbwMonomial::unit(), qp.one())
    }

    pub fn scalar(qp: &QParam, c: Scalar) -> Element {
        Element::monomial(qp, PbwMonomial::unit(), c)
    }

    pub fn monomial(qp: &QParam, m: PbwMonomial, c: Scalar) -> Element {
        assert!(qp.matches(&c), "coefficient from the wrong parameter context");
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { qp: qp.clone(), terms }
    }

    pub fn from_terms<I>(qp: &QParam, iter: I) -> Element
    where
        I: IntoIterator<Item = (PbwMonomial, Scalar)>,
    {
        let mut terms = TermMap::new();
        for (m, c) in iter {
            assert!(qp.matches(&c), "coefficient from the wrong parameter context");
            add_term(&mut terms, m, c);
        }
        Element { qp: qp.clone(), terms }
    }

    pub fn e(qp: &QParam) -> Element {
        Element::monomial(qp, PbwMonomial::new(1, 0, 0), qp.one())
    }

    pub fn f(qp: &QParam) -> Element {
        Element::monomial(qp, PbwMonomial::new(0, 1, 0), qp.one())
    }

    pub fn k(qp: &QParam) -> Element {
        Element::k_pow(qp, 1)
    }

    pub fn k_inv(qp: &QParam) -> Element {
        Element::k_pow(qp, -1)
    }

    pub fn k_pow(qp: &QParam, s: i64) -> Element {
        Element::monomial(qp, PbwMonomial::new(0, 0, s), qp.one())
    }

    pub fn qparam(&self) -> &QParam {
        &self.qp
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (PbwMonomial, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: PbwMonomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(|| self.qp.zero())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        assert!(self.qp.matches(s), "coefficient from the wrong parameter context");
        if s.is_zero() {
            return Element::zero(&self.qp);
        }
        Element {
            qp: self.qp.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Some(c) iff the element is the scalar c (including zero).
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.qp.zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_unit_monomial() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// The common conjugation weight, when there is one: Some(d) if
    /// K x K^(-1) = q^(2d) x, i.e. every monomial has e - f = d.  The
    /// zero element has weight 0 by convention; mixed weights give None.
    pub fn k_weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(|m| m.weight());
        let Some(first) = weights.next() else {
            return Some(0);
        };
        weights.all(|w| w == first).then_some(first)
    }

    /// The highest (e, f) class in lexicographic order, together with all
    /// its K-powers grouped into one pure-K element.  The class of a
    /// product is the componentwise sum of the factors' classes, which is
    /// what makes leading-term arguments work here.
    pub fn leading_term(&self) -> Result<((u64, u64), Element)> {
        let top = self
            .terms
            .keys()
            .map(|m| (m.e, m.f))
            .max()
            .ok_or(Error::ZeroElement)?;
        let coeff = Element::from_terms(
            &self.qp,
            self.terms
                .iter()
                .filter(|(m, _)| (m.e, m.f) == top)
                .map(|(m, c)| (PbwMonomial::new(0, 0, m.k), c.clone())),
        );
        Ok((top, coeff))
    }

    /// Units of U_q(sl2) are exactly the monomials lambda K^m with
    /// lambda != 0; returns Some((lambda, m)) for those, None otherwise.
    pub fn as_unit(&self) -> Option<(Scalar, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.e == 0 && m.f == 0 {
            Some((c.clone(), m.k))
        } else {
            None
        }
    }

    pub fn pow(&self, n: u64) -> Element {
        let mut acc = Element::one(&self.qp);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// The commutator a b - b a.
pub fn commutator(a: &Element, b: &Element) -> Element {
    &(a * b) - &(b * a)
}

fn assert_same_context(a: &Element, b: &Element) {
    assert!(
        a.qp == b.qp,
        "elements from different parameter contexts never mix"
    );
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            qp: self.qp.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_same_context(self, rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Element { qp: self.qp.clone(), terms }
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        assert_same_context(self, rhs);
        let mut terms = TermMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c12 = c1 * c2;
                for (m, c) in normal_order_product(*m1, *m2, &self.qp) {
                    add_term(&mut terms, m, &c12 * &c);
                }
            }
        }
        Element { qp: self.qp.clone(), terms }
    }
}

macro_rules! forward_element_binop {
    ($op:ident, $method:ident) => {
        impl std::ops::$op for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_element_binop!(Add, add);
forward_element_binop!(Sub, sub);
forward_element_binop!(Mul, mul);

// ---- Printing ----

impl fmt::Display for Element {
    /// Deterministic text form: terms in descending basis order, e.g.
    /// `E*F - (q/(q^2-1))*K + (q/(q^2-1))*K^(-1)`.  Output parses back to
    /// the same element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = c.sign_split();
            let sep = match (first, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            let piece = if m.is_unit_monomial() {
                coeff_atom(&mag)
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", coeff_atom(&mag), m)
            };
            write!(f, "{sep}{piece}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::evaluate_at;
    use num::{BigInt, BigRational};
    use proptest::prelude::*;

    fn gq() -> QParam {
        QParam::generic()
    }

    fn nq(n: i64, d: i64) -> QParam {
        QParam::concrete(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
    }

    fn both_modes() -> Vec<QParam> {
        vec![gq(), nq(5, 3), nq(-2, 1)]
    }

    #[test]
    fn defining_relations_hold() {
        for qp in both_modes() {
            let e = Element::e(&qp);
            let f = Element::f(&qp);
            let k = Element::k(&qp);
            let kinv = Element::k_inv(&qp);
            let one = Element::one(&qp);

            assert_eq!(&k * &kinv, one);
            assert_eq!(&kinv * &k, Element::one(&qp));
            assert_eq!(&(&k * &e) * &kinv, e.scale(&qp.q_pow(2)));
            assert_eq!(&(&k * &f) * &kinv, f.scale(&qp.q_pow(-2)));

            let lhs = &(&e * &f) - &(&f * &e);
            let rhs = (&k - &kinv).scale(&qp.delta().inv().unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn normal_form_of_fe() {
        let qp = gq();
        let fe = &Element::f(&qp) * &Element::e(&qp);
        let inv_delta = qp.delta().inv().unwrap();
        let expect = Element::from_terms(
            &qp,
            [
                (PbwMonomial::new(1, 1, 0), qp.one()),
                (PbwMonomial::new(0, 0, 1), -&inv_delta),
                (PbwMonomial::new(0, 0, -1), inv_delta.clone()),
            ],
        );
        assert_eq!(fe, expect);
        assert_eq!(
            fe.to_string(),
            "E*F - (q/(q^2-1))*K + (q/(q^2-1))*K^(-1)"
        );
    }

    #[test]
    fn normal_form_of_ffe() {
        // F^2 E = E F^2 - (q^(-2)+1)/delta F K + (q^2+1)/delta F K^(-1)
        let qp = gq();
        let f = Element::f(&qp);
        let ffe = &(&f * &f) * &Element::e(&qp);
        let inv_delta = qp.delta().inv().unwrap();
        let c_k = -&(&(&qp.q_pow(-2) + &qp.one()) * &inv_delta);
        let c_kinv = &(&qp.q_pow(2) + &qp.one()) * &inv_delta;
        let expect = Element::from_terms(
            &qp,
            [
                (PbwMonomial::new(1, 2, 0), qp.one()),
                (PbwMonomial::new(0, 1, 1), c_k),
                (PbwMonomial::new(0, 1, -1), c_kinv),
            ],
        );
        assert_eq!(ffe, expect);
    }

    #[test]
    fn commutator_k_e() {
        // [K, E] = (q^2 - 1) E K
        let qp = gq();
        let lhs = commutator(&Element::k(&qp), &Element::e(&qp));
        let c = &qp.q_pow(2) - &qp.one();
        let rhs = Element::monomial(&qp, PbwMonomial::new(1, 0, 1), c);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn e_past_f_powers_closed_form() {
        // E F^j = F^j E + [j] F^(j-1) (q^(1-j) K - q^(j-1) K^(-1)) / delta
        for qp in both_modes() {
            let e = Element::e(&qp);
            let f = Element::f(&qp);
            let inv_delta = qp.delta().inv().unwrap();
            for j in 1u64..=6 {
                let fj = f.pow(j);
                let lhs = &e * &fj;
                let bracket = &Element::k(&qp).scale(&qp.q_pow(1 - j as i64))
                    - &Element::k_inv(&qp).scale(&qp.q_pow(j as i64 - 1));
                let correction = (&f.pow(j - 1) * &bracket)
                    .scale(&(&qp.quantum_integer(j as i64) * &inv_delta));
                let rhs = &(&fj * &e) + &correction;
                assert_eq!(lhs, rhs, "closed form fails at j = {j}");
            }
        }
    }

    #[test]
    fn k_slides_past_powers() {
        let qp = gq();
        for s in -3i64..=3 {
            for i in 0u64..=4 {
                let lhs = &Element::k_pow(&qp, s) * &Element::e(&qp).pow(i);
                let rhs =
                    (&Element::e(&qp).pow(i) * &Element::k_pow(&qp, s))
                        .scale(&qp.q_pow(2 * s * i as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn powers_of_binomials() {
        let qp = gq();
        let one_plus_k = &Element::one(&qp) + &Element::k(&qp);
        let sq = one_plus_k.pow(2);
        let expect = Element::from_terms(
            &qp,
            [
                (PbwMonomial::unit(), qp.one()),
                (PbwMonomial::new(0, 0, 1), qp.int(2)),
                (PbwMonomial::new(0, 0, 2), qp.one()),
            ],
        );
        assert_eq!(sq, expect);
        assert_eq!(Element::e(&qp).pow(3).to_string(), "E^3");
        assert!(Element::f(&qp).pow(0).as_scalar().unwrap().is_one());
    }

    #[test]
    fn unit_detection() {
        let qp = gq();
        let u = Element::k_pow(&qp, -2).scale(&qp.int(3));
        let (lambda, m) = u.as_unit().unwrap();
        assert_eq!(lambda, qp.int(3));
        assert_eq!(m, -2);
        // and the claimed inverse really is one
        let inv = Element::k_pow(&qp, 2).scale(&lambda.inv().unwrap());
        assert_eq!(&u * &inv, Element::one(&qp));

        assert!(Element::e(&qp).as_unit().is_none());
        let one_plus_k = &Element::one(&qp) + &Element::k(&qp);
        assert!(one_plus_k.as_unit().is_none());
        assert!(Element::zero(&qp).as_unit().is_none());
    }

    #[test]
    fn conjugation_weights() {
        let qp = gq();
        assert_eq!(Element::e(&qp).k_weight(), Some(1));
        let fk3 = Element::monomial(&qp, PbwMonomial::new(0, 1, 3), qp.one());
        assert_eq!(fk3.k_weight(), Some(-1));
        // weight is blind to the K-exponent, so EF + K is still homogeneous
        let ef_plus_k = &(&Element::e(&qp) * &Element::f(&qp)) + &Element::k(&qp);
        assert_eq!(ef_plus_k.k_weight(), Some(0));
        let e_plus_f = &Element::e(&qp) + &Element::f(&qp);
        assert_eq!(e_plus_f.k_weight(), None);
        assert_eq!(Element::zero(&qp).k_weight(), Some(0));

        // Some(d) really means K x K^(-1) = q^(2d) x.
        let conj = &(&Element::k(&qp) * &Element::e(&qp)) * &Element::k_pow(&qp, -1);
        assert_eq!(conj, Element::e(&qp).scale(&qp.q_pow(2)));
    }

    #[test]
    fn leading_terms() {
        let qp = gq();
        let x = &(&Element::e(&qp).pow(2) * &Element::f(&qp)) + &Element::k(&qp);
        let (class, coeff) = x.leading_term().unwrap();
        assert_eq!(class, (2, 1));
        assert_eq!(coeff, Element::one(&qp));

        let y = &(&Element::one(&qp) + &Element::k(&qp)) + &Element::k_pow(&qp, -1);
        let (class, coeff) = y.leading_term().unwrap();
        assert_eq!(class, (0, 0));
        assert_eq!(coeff, y);

        assert!(matches!(
            Element::zero(&qp).leading_term(),
            Err(Error::ZeroElement)
        ));

        // the leading class of a product is the sum of the leading classes
        let u = &Element::e(&qp).pow(2) * &Element::f(&qp);
        let v = &(&Element::e(&qp) * &Element::f(&qp).pow(2)) + &Element::k_pow(&qp, -2);
        let (cu, _) = u.leading_term().unwrap();
        let (cv, _) = v.leading_term().unwrap();
        let (cuv, _) = (&u * &v).leading_term().unwrap();
        assert_eq!(cuv, (cu.0 + cv.0, cu.1 + cv.1));
    }

    #[test]
    fn display_spellings() {
        let qp = gq();
        assert_eq!(Element::zero(&qp).to_string(), "0");
        assert_eq!(Element::one(&qp).to_string(), "1");
        assert_eq!(
            Element::monomial(&qp, PbwMonomial::new(2, 1, -1), qp.one()).to_string(),
            "E^2*F*K^(-1)"
        );
        let x = &Element::k(&qp).scale(&qp.int(2)) - &Element::e(&qp);
        assert_eq!(x.to_string(), "-E + 2*K");
        let half_k = Element::k(&qp).scale(&qp.rational(&BigRational::new(
            BigInt::from(1),
            BigInt::from(2),
        )));
        assert_eq!(half_k.to_string(), "(1/2)*K");
        let qk = Element::k(&qp).scale(&qp.q_pow(2));
        assert_eq!(qk.to_string(), "q^2*K");
        let mixed = &Element::e(&qp) + &Element::scalar(&qp, &qp.q_pow(2) + &qp.one());
        assert_eq!(mixed.to_string(), "E + (q^2+1)");
        assert_eq!(
            Element::scalar(&qp, &qp.q_pow(2) + &qp.one()).to_string(),
            "q^2+1"
        );
    }

    #[test]
    fn numeric_mode_is_evaluation_of_symbolic_mode() {
        let q0 = BigRational::new(BigInt::from(5), BigInt::from(3));
        let qg = gq();
        let qn = QParam::concrete(q0.clone()).unwrap();
        let sym = &(&Element::f(&qg) * &Element::e(&qg)) * &Element::k_pow(&qg, -1);
        let num = &(&Element::f(&qn) * &Element::e(&qn)) * &Element::k_pow(&qn, -1);
        assert_eq!(sym.num_terms(), num.num_terms());
        for ((ms, cs), (mn, cn)) in sym.terms().zip(num.terms()) {
            assert_eq!(ms, mn);
            assert_eq!(evaluate_at(cs, &q0).unwrap(), cn.as_rational_const().unwrap());
        }
    }

    fn arb_monomial() -> impl Strategy<Value = PbwMonomial> {
        (0u64..=3, 0u64..=3, -3i64..=3).prop_map(|(e, f, k)| PbwMonomial::new(e, f, k))
    }

    fn arb_element() -> impl Strategy<Value = Element> {
        prop::collection::vec((arb_monomial(), -3i64..=3), 1..4).prop_map(|v| {
            let qp = QParam::generic();
            Element::from_terms(&qp, v.into_iter().map(|(m, c)| (m, qp.int(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn one_is_neutral(a in arb_element()) {
            let qp = QParam::generic();
            prop_assert_eq!(&a * &Element::one(&qp), a.clone());
            prop_assert_eq!(&Element::one(&qp) * &a, a.clone());
        }
    }
}
