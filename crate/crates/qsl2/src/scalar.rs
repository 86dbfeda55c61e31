//! The coefficient field: reduced fractions of Laurent polynomials in q,
//! or exact rationals once a concrete q has been fixed.
//!
//! A [`Scalar`] is an element of Q(q) (symbolic mode) or of Q (numeric mode
//! at some q0 with q0 != 0 and q0^2 != 1).  The active mode is decided by a
//! [`QParam`] and is carried by every aggregate (algebra elements, module
//! representations, automorphism descriptors); the two modes never mix.
//!
//! Canonical fraction form: the denominator is an ordinary polynomial in q
//! with nonzero constant term (pure q-powers are absorbed into the
//! numerator, which may hold negative exponents) and positive leading
//! coefficient; numerator and denominator share no polynomial factor and no
//! integer content.  Canonical form makes equality structural and printing
//! deterministic.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat_pow, LaurentPoly};

// ---- Signs ----

/// The sign epsilon in {+1, -1} used by modules and automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Internal(format!("sign must be +-1, got {v}"))),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// +1 or -1 as a scalar in the given mode.
    pub fn scalar(self, qp: &QParam) -> Scalar {
        qp.int(self.as_i8() as i64)
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

// ---- Reduced Laurent fractions ----

/// A canonically reduced fraction of integer Laurent polynomials: an
/// element of Q(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFrac {
    /// Reduce num/den to canonical form.  Errors on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<LaurentFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(LaurentFrac { num: LaurentPoly::zero(), den: LaurentPoly::one() });
        }
        let g = LaurentPoly::gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        // Move the denominator's q-power unit into the numerator and fix
        // the sign so the denominator has a positive leading coefficient.
        let shift = den.min_exp().expect("nonzero");
        let mut num = num.mul_q_pow(-shift);
        let mut den = den.mul_q_pow(-shift);
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = num.mul_int(&BigInt::from(-1));
            den = den.mul_int(&BigInt::from(-1));
        }
        Ok(LaurentFrac { num, den })
    }

    pub fn zero() -> LaurentFrac {
        LaurentFrac { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> LaurentFrac {
        LaurentFrac { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> LaurentFrac {
        LaurentFrac { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> LaurentFrac {
        LaurentFrac {
            num: LaurentPoly::constant(r.numer().clone()),
            den: LaurentPoly::constant(r.denom().clone()),
        }
    }

    pub fn q_pow(e: i64) -> LaurentFrac {
        LaurentFrac::from_poly(LaurentPoly::monomial(BigInt::one(), e))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<LaurentFrac> {
        LaurentFrac::new(self.den.clone(), self.num.clone())
    }

    /// Some(r) iff the fraction is the constant rational r.
    pub fn as_rational_const(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    /// Some((sign, e)) iff the fraction is exactly +-q^e.
    pub fn as_signed_q_power(&self) -> Option<(Sign, i64)> {
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return None;
        }
        let e = self.num.max_exp()?;
        let c = self.num.coeff(e);
        if c.is_one() {
            Some((Sign::Plus, e))
        } else if c == BigInt::from(-1) {
            Some((Sign::Minus, e))
        } else {
            None
        }
    }

    /// True when the numerator's leading coefficient is negative (the
    /// denominator's is always positive), used to split signs for printing.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(x)? / d)
    }

    /// The substitution q -> q^(-1).
    pub fn subst_q_inv(&self) -> LaurentFrac {
        LaurentFrac::new(self.num.subst_q_inv(), self.den.subst_q_inv())
            .expect("denominator stays nonzero under q -> q^(-1)")
    }

    /// Evaluate an ordinary polynomial (exponents >= 0) at this fraction.
    pub fn eval_poly_at(p: &LaurentPoly, x: &LaurentFrac) -> LaurentFrac {
        // Horner over the dense range [0, max_exp].
        let mut acc = LaurentFrac::zero();
        let hi = match p.max_exp() {
            None => return acc,
            Some(h) => h,
        };
        assert!(p.min_exp().unwrap_or(0) >= 0, "eval_poly_at needs an ordinary polynomial");
        for e in (0..=hi).rev() {
            acc = &(&acc * x) + &LaurentFrac::from_poly(LaurentPoly::constant(p.coeff(e)));
        }
        acc
    }
}

impl std::ops::Neg for &LaurentFrac {
    type Output = LaurentFrac;
    fn neg(self) -> LaurentFrac {
        // Negating the numerator preserves every canonical-form invariant.
        LaurentFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl std::ops::Add for &LaurentFrac {
    type Output = LaurentFrac;
    fn add(self, rhs: &LaurentFrac) -> LaurentFrac {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        LaurentFrac::new(num, den).expect("nonzero denominator")
    }
}

impl std::ops::Sub for &LaurentFrac {
    type Output = LaurentFrac;
    fn sub(self, rhs: &LaurentFrac) -> LaurentFrac {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &LaurentFrac {
    type Output = LaurentFrac;
    fn mul(self, rhs: &LaurentFrac) -> LaurentFrac {
        LaurentFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

macro_rules! forward_frac_binop {
    ($op:ident, $method:ident) => {
        impl std::ops::$op for LaurentFrac {
            type Output = LaurentFrac;
            fn $method(self, rhs: LaurentFrac) -> LaurentFrac {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_frac_binop!(Add, add);
forward_frac_binop!(Sub, sub);
forward_frac_binop!(Mul, mul);

impl fmt::Display for LaurentFrac {
    /// Canonical text, e.g. `q/(q^2-1)`; parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_str = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        // A canonical denominator is either a positive integer or has
        // several terms; parenthesize the latter.
        let den_str = if self.den.num_terms() > 1 {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{num_str}/{den_str}")
    }
}

// ---- The quantum parameter ----

/// Symbolic q, or a fixed rational q0 (nonzero, q0^2 != 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QParam {
    Generic,
    Concrete(BigRational),
}

impl QParam {
    pub fn generic() -> QParam {
        QParam::Generic
    }

    /// Fix q = q0; rejects 0, 1 and -1 where the formulas degenerate.
    pub fn concrete(q0: BigRational) -> Result<QParam> {
        if q0.is_zero() || q0.clone().abs().is_one() {
            return Err(Error::DegenerateParameter(q0.to_string()));
        }
        Ok(QParam::Concrete(q0))
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, QParam::Concrete(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            QParam::Generic => Scalar::Sym(LaurentFrac::zero()),
            QParam::Concrete(_) => Scalar::Num(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Scalar {
        match self {
            QParam::Generic => {
                Scalar::Sym(LaurentFrac::from_poly(LaurentPoly::constant(BigInt::from(v))))
            }
            QParam::Concrete(_) => Scalar::Num(BigRational::from(BigInt::from(v))),
        }
    }

    pub fn rational(&self, r: &BigRational) -> Scalar {
        match self {
            QParam::Generic => Scalar::Sym(LaurentFrac::from_rational(r)),
            QParam::Concrete(_) => Scalar::Num(r.clone()),
        }
    }

    /// q^e in the current mode.
    pub fn q_pow(&self, e: i64) -> Scalar {
        match self {
            QParam::Generic => Scalar::Sym(LaurentFrac::q_pow(e)),
            QParam::Concrete(q0) => {
                Scalar::Num(rat_pow(q0, e).expect("q0 is nonzero"))
            }
        }
    }

    /// q - q^(-1), the ubiquitous quantum denominator.
    pub fn delta(&self) -> Scalar {
        &self.q_pow(1) - &self.q_pow(-1)
    }

    /// The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n),
    /// with [0] = 0 and [-n] = -[n].
    pub fn quantum_integer(&self, n: i64) -> Scalar {
        let neg = n < 0;
        let m = n.unsigned_abs() as i64;
        let mut p = LaurentPoly::zero();
        let mut e = m - 1;
        for _ in 0..m {
            p = &p + &LaurentPoly::monomial(BigInt::one(), e);
            e -= 2;
        }
        if neg {
            p = -&p;
        }
        match self {
            QParam::Generic => Scalar::Sym(LaurentFrac::from_poly(p)),
            QParam::Concrete(q0) => Scalar::Num(p.eval(q0).expect("q0 is nonzero")),
        }
    }

    /// [n]! = [1][2]...[n]; [0]! = 1.  Negative n is rejected.
    pub fn quantum_factorial(&self, n: i64) -> Result<Scalar> {
        if n < 0 {
            return Err(Error::NegativeFactorial(n));
        }
        let mut acc = self.one();
        for k in 1..=n {
            acc = &acc * &self.quantum_integer(k);
        }
        Ok(acc)
    }

    /// Does this scalar belong to this parameter context's field?
    pub fn matches(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (QParam::Generic, Scalar::Sym(_)) | (QParam::Concrete(_), Scalar::Num(_))
        )
    }
}

// ---- Scalars ----

/// An exact element of the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    /// Symbolic mode: an element of Q(q).
    Sym(LaurentFrac),
    /// Numeric mode: an exact rational, q already evaluated.
    Num(BigRational),
}

fn mode_mismatch() -> ! {
    panic!("scalar mode mismatch: symbolic and numeric values never mix")
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Sym(f) => f.is_zero(),
            Scalar::Num(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Sym(f) => f.is_one(),
            Scalar::Num(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Sym(f) => Ok(Scalar::Sym(f.inv()?)),
            Scalar::Num(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Num(r.recip()))
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow_i(&self, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.inv()?.pow_i(-e);
        }
        let mut acc = match self {
            Scalar::Sym(_) => Scalar::Sym(LaurentFrac::one()),
            Scalar::Num(_) => Scalar::Num(BigRational::one()),
        };
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Exact value at q = q0 (numeric scalars are already evaluated).
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        match self {
            Scalar::Sym(f) => f.eval(q0),
            Scalar::Num(r) => Ok(r.clone()),
        }
    }

    pub fn as_rational_const(&self) -> Option<BigRational> {
        match self {
            Scalar::Sym(f) => f.as_rational_const(),
            Scalar::Num(r) => Some(r.clone()),
        }
    }

    /// Split into (is_negative, magnitude) for sign-aware printing.  The
    /// "sign" of a symbolic fraction is its numerator's leading sign.
    pub fn sign_split(&self) -> (bool, Scalar) {
        match self {
            Scalar::Sym(f) => {
                if f.is_negative_leading() {
                    (true, Scalar::Sym(-f))
                } else {
                    (false, self.clone())
                }
            }
            Scalar::Num(r) => {
                if r.is_negative() {
                    (true, Scalar::Num(-r))
                } else {
                    (false, self.clone())
                }
            }
        }
    }

    /// The parameter context this scalar lives in, up to the concrete value
    /// (numeric scalars do not remember q0; aggregates carry it).
    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Sym(_))
    }
}

/// A coefficient magnitude as display text, parenthesized unless it is a
/// plain integer or a single Laurent term (those glue onto a following
/// `*monomial` unambiguously).
pub(crate) fn coeff_atom(c: &Scalar) -> String {
    let simple = match c {
        Scalar::Num(r) => r.denom().is_one(),
        Scalar::Sym(f) => f.den().is_one() && f.num().num_terms() <= 1,
    };
    if simple {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Validate q0 and evaluate a scalar exactly at q = q0.
///
/// Rejects q0 in {0, 1, -1} (the quantized formulas degenerate) and any
/// point where the denominator vanishes.
pub fn evaluate_at(x: &Scalar, q0: &BigRational) -> Result<BigRational> {
    let _ = QParam::concrete(q0.clone())?;
    x.eval_at(q0)
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Sym(f) => Scalar::Sym(-f),
            Scalar::Num(r) => Scalar::Num(-r),
        }
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a + b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a + b),
            _ => mode_mismatch(),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a - b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a - b),
            _ => mode_mismatch(),
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a * b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a * b),
            _ => mode_mismatch(),
        }
    }
}

macro_rules! forward_scalar_binop {
    ($op:ident, $method:ident) => {
        impl std::ops::$op for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_scalar_binop!(Add, add);
forward_scalar_binop!(Sub, sub);
forward_scalar_binop!(Mul, mul);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Sym(x) => write!(f, "{x}"),
            Scalar::Num(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn normalize_reduces_common_factors() {
        // (q^2 - 1)/(q - 1) -> q + 1
        let f = LaurentFrac::new(poly(&[(1, 2), (-1, 0)]), poly(&[(1, 1), (-1, 0)])).unwrap();
        assert_eq!(f, LaurentFrac::from_poly(poly(&[(1, 1), (1, 0)])));
        assert_eq!(f.to_string(), "q+1");
    }

    #[test]
    fn normalize_moves_q_powers_to_numerator() {
        // (q - q^(-1)) / (q - q^(-1))^2 -> 1/(q - q^(-1)) -> q/(q^2-1)
        let d = poly(&[(1, 1), (-1, -1)]);
        let f = LaurentFrac::new(d.clone(), &d * &d).unwrap();
        assert_eq!(f.num(), &poly(&[(1, 1)]));
        assert_eq!(f.den(), &poly(&[(1, 2), (-1, 0)]));
        assert_eq!(f.to_string(), "q/(q^2-1)");
    }

    #[test]
    fn normalize_fixes_denominator_sign() {
        // 1/(-q + 1) -> -1/(q - 1)
        let f = LaurentFrac::new(LaurentPoly::one(), poly(&[(-1, 1), (1, 0)])).unwrap();
        assert_eq!(f.den(), &poly(&[(1, 1), (-1, 0)]));
        assert_eq!(f.num(), &poly(&[(-1, 0)]));
        assert!(f.is_negative_leading());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            LaurentFrac::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_equality_matches_cross_multiplication() {
        // a/b == c/d iff ad == cb, spot-checked on a few pairs
        let cases = [
            (poly(&[(1, 2), (-1, 0)]), poly(&[(1, 1), (-1, 0)])),
            (poly(&[(1, 1), (1, 0)]), LaurentPoly::one()),
            (poly(&[(2, 3)]), poly(&[(2, 1)])),
            (poly(&[(1, 2)]), LaurentPoly::one()),
        ];
        for (an, ad) in &cases {
            for (bn, bd) in &cases {
                let a = LaurentFrac::new(an.clone(), ad.clone()).unwrap();
                let b = LaurentFrac::new(bn.clone(), bd.clone()).unwrap();
                let cross = an * bd == bn * ad;
                assert_eq!(a == b, cross);
            }
        }
    }

    #[test]
    fn quantum_integers() {
        let qp = QParam::generic();
        assert!(qp.quantum_integer(0).is_zero());
        assert!(qp.quantum_integer(1).is_one());
        // [3] = q^2 + 1 + q^(-2)
        let q3 = qp.quantum_integer(3);
        assert_eq!(
            q3,
            Scalar::Sym(LaurentFrac::from_poly(poly(&[(1, 2), (1, 0), (1, -2)])))
        );
        // [-n] = -[n]
        assert_eq!(qp.quantum_integer(-3), -&q3);
        // defining identity: [n] * (q - q^(-1)) = q^n - q^(-n)
        for n in -50..=50i64 {
            let lhs = &qp.quantum_integer(n) * &qp.delta();
            let rhs = &qp.q_pow(n) - &qp.q_pow(-n);
            assert_eq!(lhs, rhs, "defining identity fails at n = {n}");
        }
    }

    #[test]
    fn quantum_integer_is_q_inverse_symmetric() {
        let qp = QParam::generic();
        for n in 0..=12i64 {
            match qp.quantum_integer(n) {
                Scalar::Sym(f) => assert_eq!(f.subst_q_inv(), f),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn quantum_factorials() {
        let qp = QParam::generic();
        assert!(qp.quantum_factorial(0).unwrap().is_one());
        assert!(qp.quantum_factorial(1).unwrap().is_one());
        // [3]! = q^3 + 2q + 2q^(-1) + q^(-3)
        let expect = Scalar::Sym(LaurentFrac::from_poly(poly(&[
            (1, 3),
            (2, 1),
            (2, -1),
            (1, -3),
        ])));
        assert_eq!(qp.quantum_factorial(3).unwrap(), expect);
        assert_eq!(qp.quantum_factorial(-2), Err(Error::NegativeFactorial(-2)));
    }

    #[test]
    fn evaluation_examples() {
        let qp = QParam::generic();
        // [2] at q0 = 2 -> 5/2
        let two = rat(2, 1);
        assert_eq!(evaluate_at(&qp.quantum_integer(2), &two).unwrap(), rat(5, 2));
        // (q - q^(-1))^2 at q0 = 3 -> 64/9
        let d2 = &qp.delta() * &qp.delta();
        assert_eq!(evaluate_at(&d2, &rat(3, 1)).unwrap(), rat(64, 9));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        for bad in [0i64, 1, -1] {
            assert!(QParam::concrete(rat(bad, 1)).is_err());
            assert!(evaluate_at(&QParam::generic().one(), &rat(bad, 1)).is_err());
        }
        assert!(QParam::concrete(rat(5, 3)).is_ok());
    }

    #[test]
    fn vanishing_denominator_detected() {
        // 1/(q-2) at q0 = 2
        let f = LaurentFrac::new(LaurentPoly::one(), poly(&[(1, 1), (-2, 0)])).unwrap();
        assert_eq!(
            evaluate_at(&Scalar::Sym(f), &rat(2, 1)),
            Err(Error::DenominatorVanishes)
        );
    }

    #[test]
    fn numeric_mode_tracks_symbolic_mode() {
        let qp = QParam::generic();
        let qn = QParam::concrete(rat(5, 3)).unwrap();
        for n in 0..=8i64 {
            let sym = qp.quantum_integer(n);
            let num = qn.quantum_integer(n);
            assert_eq!(Scalar::Num(sym.eval_at(&rat(5, 3)).unwrap()), num);
        }
    }

    #[test]
    fn signed_q_power_recognition() {
        let f = LaurentFrac::q_pow(-3);
        assert_eq!(f.as_signed_q_power(), Some((Sign::Plus, -3)));
        let g = -&LaurentFrac::q_pow(2);
        assert_eq!(g.as_signed_q_power(), Some((Sign::Minus, 2)));
        let h = LaurentFrac::from_poly(poly(&[(2, 1)]));
        assert_eq!(h.as_signed_q_power(), None);
    }

    #[test]
    fn display_round_trip_spellings() {
        let qp = QParam::generic();
        assert_eq!(qp.quantum_integer(2).to_string(), "q+q^(-1)");
        assert_eq!(qp.delta().to_string(), "q-q^(-1)");
        let inv_delta = qp.delta().inv().unwrap();
        assert_eq!(inv_delta.to_string(), "q/(q^2-1)");
        let half = qp.rational(&rat(1, 2));
        assert_eq!(half.to_string(), "1/2");
        let mixed = LaurentFrac::new(poly(&[(1, 2), (1, 0)]), poly(&[(1, 2), (-1, 0)])).unwrap();
        assert_eq!(mixed.to_string(), "(q^2+1)/(q^2-1)");
    }

    // Small random fractions for the field-axiom sweep.
    fn arb_frac() -> impl Strategy<Value = LaurentFrac> {
        let term = (-3i64..=3, -4i64..=4);
        let poly_strategy = prop::collection::vec(term, 0..4)
            .prop_map(|v| LaurentPoly::from_pairs(v.into_iter()));
        (poly_strategy.clone(), poly_strategy)
            .prop_filter_map("nonzero denominator", |(n, d)| {
                if d.is_zero() {
                    None
                } else {
                    Some(LaurentFrac::new(n, d).unwrap())
                }
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_frac(), b in arb_frac(), c in arb_frac()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &LaurentFrac::zero(), a.clone());
            prop_assert_eq!(&a * &LaurentFrac::one(), a.clone());
            prop_assert_eq!(&a - &a, LaurentFrac::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), LaurentFrac::one());
            }
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_frac(), b in arb_frac()) {
            let x = rat(7, 3);
            let ea = a.eval(&x);
            let eb = b.eval(&x);
            if let (Ok(ea), Ok(eb)) = (ea, eb) {
                prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
                prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
            }
        }
    }
}
