//! The automorphism group of U_q(sl2).
//!
//! Every algebra automorphism falls into one of four one-parameter-pair
//! families, indexed by whether K is negated and whether it is inverted
//! (the latter swaps the roles of E and F):
//!
//! ```text
//! (1) K -> K,       E -> lambda E K^r,   F -> lambda^(-1) K^(-r) F
//! (2) K -> -K,      E -> lambda E K^r,   F -> -lambda^(-1) K^(-r) F
//! (3) K -> K^(-1),  E -> lambda K^r F,   F -> lambda^(-1) E K^(-r)
//! (4) K -> -K^(-1), E -> lambda K^r F,   F -> -lambda^(-1) E K^(-r)
//! ```
//!
//! with r in Z and lambda a nonzero scalar.  A descriptor (family, r,
//! lambda) is canonical: distinct descriptors denote distinct maps, so
//! equality, composition, and inversion are decidable on descriptors.
//! Composition and inversion are computed by applying one map to the
//! other's generator images and pattern-matching the result back into the
//! four shapes — no hand-derived parameter tables, so there is nothing to
//! transcribe incorrectly.

use std::fmt;

use crate::error::{Error, Result};
use crate::modules::ModuleRep;
use crate::pbw::Element;
use crate::scalar::{LaurentFrac, QParam, Scalar, Sign};

// ---- Families ----

/// The four families, named by what they do to K.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    KFixed,
    KNegated,
    KInverted,
    KNegInverted,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::KFixed,
        Family::KNegated,
        Family::KInverted,
        Family::KNegInverted,
    ];

    /// The conventional 1-based tag used on the command line and in JSON.
    pub fn index(self) -> u8 {
        match self {
            Family::KFixed => 1,
            Family::KNegated => 2,
            Family::KInverted => 3,
            Family::KNegInverted => 4,
        }
    }

    pub fn from_index(i: u8) -> Result<Family> {
        match i {
            1 => Ok(Family::KFixed),
            2 => Ok(Family::KNegated),
            3 => Ok(Family::KInverted),
            4 => Ok(Family::KNegInverted),
            other => Err(Error::BadFamily(other)),
        }
    }

    /// Does this family send K to -K^(+-1)?
    pub fn negates_k(self) -> bool {
        matches!(self, Family::KNegated | Family::KNegInverted)
    }

    /// Does this family send K to +-K^(-1) (and swap E with F)?
    pub fn inverts_k(self) -> bool {
        matches!(self, Family::KInverted | Family::KNegInverted)
    }
}

impl fmt::Display for Family {
    /// Families print as their numeric tag.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

// ---- Descriptors ----

/// A canonical automorphism descriptor (family, r, lambda).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    qp: QParam,
    family: Family,
    r: i64,
    lambda: Scalar,
}

impl Automorphism {
    pub fn new(qp: &QParam, family: Family, r: i64, lambda: Scalar) -> Result<Automorphism> {
        assert!(qp.matches(&lambda), "lambda from the wrong parameter context");
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        Ok(Automorphism { qp: qp.clone(), family, r, lambda })
    }

    pub fn identity(qp: &QParam) -> Automorphism {
        Automorphism {
            qp: qp.clone(),
            family: Family::KFixed,
            r: 0,
            lambda: qp.one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.family == Family::KFixed && self.r == 0 && self.lambda.is_one()
    }

    pub fn qparam(&self) -> &QParam {
        &self.qp
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    // ---- Generator images ----

    pub fn img_k(&self) -> Element {
        let base = if self.family.inverts_k() {
            Element::k_inv(&self.qp)
        } else {
            Element::k(&self.qp)
        };
        if self.family.negates_k() {
            -&base
        } else {
            base
        }
    }

    pub fn img_k_inv(&self) -> Element {
        let (lam, m) = self.img_k().as_unit().expect("K image is a unit");
        Element::k_pow(&self.qp, -m).scale(&lam.inv().expect("unit scalar is nonzero"))
    }

    pub fn img_e(&self) -> Element {
        let qp = &self.qp;
        let word = if self.family.inverts_k() {
            &Element::k_pow(qp, self.r) * &Element::f(qp)
        } else {
            &Element::e(qp) * &Element::k_pow(qp, self.r)
        };
        word.scale(&self.lambda)
    }

    pub fn img_f(&self) -> Element {
        let qp = &self.qp;
        let lambda_inv = self.lambda.inv().expect("lambda is nonzero");
        let word = if self.family.inverts_k() {
            &Element::e(qp) * &Element::k_pow(qp, -self.r)
        } else {
            &Element::k_pow(qp, -self.r) * &Element::f(qp)
        };
        let signed = if self.family.negates_k() { -&word } else { word };
        signed.scale(&lambda_inv)
    }

    /// Extend the generator images multiplicatively and linearly.
    pub fn apply(&self, x: &Element) -> Element {
        assert!(
            x.qparam() == &self.qp,
            "element from a different parameter context"
        );
        let ie = self.img_e();
        let if_ = self.img_f();
        let ik = self.img_k();
        let ik_inv = self.img_k_inv();
        let mut out = Element::zero(&self.qp);
        for (m, c) in x.terms() {
            let k_part = if m.k >= 0 {
                ik.pow(m.k as u64)
            } else {
                ik_inv.pow((-m.k) as u64)
            };
            let word = &(&ie.pow(m.e) * &if_.pow(m.f)) * &k_part;
            out = &out + &word.scale(c);
        }
        out
    }

    /// Do this descriptor's images satisfy the defining relations?
    pub fn verify_homomorphism(&self) -> bool {
        self.homomorphism_checks().iter().all(|(_, ok)| *ok)
    }

    /// Relation-by-relation detail behind [`verify_homomorphism`].
    pub fn homomorphism_checks(&self) -> Vec<(&'static str, bool)> {
        images_homomorphism_checks(&self.img_e(), &self.img_f(), &self.img_k())
    }

    /// The sign s with apply(casimir) = s * casimir: +1 for the families
    /// that fix or invert K, -1 for the families that negate it.
    pub fn casimir_sign(&self) -> Sign {
        if self.family.negates_k() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// The descriptor of self after other (x -> self(other(x))).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert!(self.qp == other.qp, "descriptors from different parameter contexts");
        descriptor_from_images(
            &self.apply(&other.img_e()),
            &self.apply(&other.img_f()),
            &self.apply(&other.img_k()),
        )
        .expect("a composition of automorphisms always lands back in the four families")
    }

    /// The inverse descriptor.
    ///
    /// Let t be this family's basic involution (same family, r = 0,
    /// lambda = 1; t o t = id).  Then self o t lies in the K-fixing
    /// family, where family1(r, lambda)^(-1) = family1(-r, lambda^(-1))
    /// (verified by composing), and self^(-1) = t o (self o t)^(-1).
    pub fn invert(&self) -> Automorphism {
        let t = Automorphism::new(&self.qp, self.family, 0, self.qp.one())
            .expect("one is nonzero");
        let gamma = self.compose(&t);
        debug_assert_eq!(gamma.family, Family::KFixed);
        let gamma_inv = Automorphism::new(
            &self.qp,
            Family::KFixed,
            -gamma.r,
            gamma.lambda.inv().expect("lambda is nonzero"),
        )
        .expect("inverse lambda is nonzero");
        t.compose(&gamma_inv)
    }

    /// Reinterpret this descriptor in another parameter context: same
    /// family and r, with lambda carried across the canonical coefficient
    /// identification.  A rational lambda crosses any boundary; a lambda
    /// that genuinely mentions q cannot be represented in a numeric
    /// context.
    pub fn transport(&self, target: &QParam) -> Result<Automorphism> {
        let lambda = match (&self.lambda, target) {
            (Scalar::Sym(f), QParam::Generic) => Scalar::Sym(f.clone()),
            (Scalar::Num(r), QParam::Concrete(_)) => Scalar::Num(r.clone()),
            (Scalar::Num(r), QParam::Generic) => Scalar::Sym(LaurentFrac::from_rational(r)),
            (Scalar::Sym(f), QParam::Concrete(_)) => match f.as_rational_const() {
                Some(r) => Scalar::Num(r),
                None => return Err(Error::TransportUnrepresentable),
            },
        };
        Automorphism::new(target, self.family, self.r, lambda)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "E -> {}, F -> {}, K -> {}",
            self.img_e(),
            self.img_f(),
            self.img_k()
        )
    }
}

// ---- Raw image triples ----

/// Check the defining relations on an arbitrary generator-image triple
/// (not necessarily one of the four families).
pub fn images_homomorphism_checks(
    img_e: &Element,
    img_f: &Element,
    img_k: &Element,
) -> Vec<(&'static str, bool)> {
    let qp = img_k.qparam().clone();
    let Some((lam, m)) = img_k.as_unit() else {
        return vec![("image of K is invertible", false)];
    };
    let k_inv = Element::k_pow(&qp, -m).scale(&lam.inv().expect("nonzero"));
    let delta_inv = qp.delta().inv().expect("delta is nonzero");
    vec![
        ("image of K is invertible", true),
        (
            "K E K^(-1) = q^2 E on images",
            &(img_k * img_e) * &k_inv == img_e.scale(&qp.q_pow(2)),
        ),
        (
            "K F K^(-1) = q^(-2) F on images",
            &(img_k * img_f) * &k_inv == img_f.scale(&qp.q_pow(-2)),
        ),
        (
            "E F - F E = (K - K^(-1))/(q - q^(-1)) on images",
            &(img_e * img_f) - &(img_f * img_e) == (img_k - &k_inv).scale(&delta_inv),
        ),
    ]
}

/// Recognize a generator-image triple as one of the four canonical
/// descriptors; errors when the triple has any other shape.
pub fn descriptor_from_images(
    img_e: &Element,
    img_f: &Element,
    img_k: &Element,
) -> Result<Automorphism> {
    let qp = img_k.qparam().clone();
    let shape = |msg: &str| Error::NotAutomorphismShape(msg.to_string());

    let single = |x: &Element| -> Option<(crate::pbw::PbwMonomial, Scalar)> {
        if x.num_terms() != 1 {
            return None;
        }
        x.terms().next().map(|(m, c)| (m, c.clone()))
    };

    let (km, kc) = single(img_k).ok_or_else(|| shape("image of K is not a single monomial"))?;
    if km.e != 0 || km.f != 0 || (km.k != 1 && km.k != -1) {
        return Err(shape("image of K is not +-K^(+-1)"));
    }
    let negated = if kc.is_one() {
        false
    } else if (-&kc).is_one() {
        true
    } else {
        return Err(shape("image of K has a coefficient other than +-1"));
    };
    let family = match (km.k == -1, negated) {
        (false, false) => Family::KFixed,
        (false, true) => Family::KNegated,
        (true, false) => Family::KInverted,
        (true, true) => Family::KNegInverted,
    };

    let (em, ec) = single(img_e).ok_or_else(|| shape("image of E is not a single monomial"))?;
    let (r, lambda) = if family.inverts_k() {
        // lambda K^r F normal-orders to lambda q^(-2r) F K^r.
        if em.e != 0 || em.f != 1 {
            return Err(shape("image of E does not match any family"));
        }
        (em.k, &ec * &qp.q_pow(2 * em.k))
    } else {
        if em.e != 1 || em.f != 0 {
            return Err(shape("image of E does not match any family"));
        }
        (em.k, ec)
    };

    let cand = Automorphism::new(&qp, family, r, lambda)?;
    if &cand.img_e() == img_e && &cand.img_f() == img_f && &cand.img_k() == img_k {
        Ok(cand)
    } else {
        Err(shape("image of F is inconsistent with the (family, r, lambda) read from E and K"))
    }
}

/// Twist a module by an automorphism: precompose the action, then
/// renormalize the basis to standard eigenvalue order.
pub fn twist(rep: &ModuleRep, alpha: &Automorphism) -> Result<ModuleRep> {
    assert!(
        rep.qparam() == alpha.qparam(),
        "module and automorphism from different parameter contexts"
    );
    rep.twist_by_images(&alpha.img_e(), &alpha.img_f(), &alpha.img_k())
}
