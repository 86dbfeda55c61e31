//! Integer-coefficient Laurent polynomials in the quantum parameter q.
//!
//! These are the raw material for the coefficient field Q(q): a sparse map
//! from integer exponents to nonzero BigInt coefficients.  The fraction
//! field lives in [`crate::scalar`]; this module supplies the ring
//! operations, evaluation, the q -> q^(-1) substitution, and the polynomial
//! GCD needed for canonical fraction reduction.
//!
//! GCD convention: q is a unit in Z[q, q^(-1)], so a GCD is only determined
//! up to +-q^k.  We pick the representative that is an ordinary polynomial
//! (nonzero constant term) with positive leading coefficient, computed by
//! shifting both inputs to ordinary polynomials, running the Euclidean
//! algorithm over Q, and clearing denominators.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// x^e for a rational base and integer exponent; errors on 0^(negative).
pub(crate) fn rat_pow(x: &BigRational, e: i64) -> Result<BigRational> {
    if e == 0 {
        return Ok(BigRational::one());
    }
    if x.is_zero() {
        if e < 0 {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::zero());
    }
    let mag = e.unsigned_abs() as u32;
    let p = BigRational::new(x.numer().pow(mag), x.denom().pow(mag));
    Ok(if e < 0 { p.recip() } else { p })
}

/// Sparse Laurent polynomial with integer coefficients.
///
/// Invariant: no stored coefficient is zero, so the zero polynomial is the
/// empty map and structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// c * q^e.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// Build from (coefficient, exponent) pairs; repeated exponents add up.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (c, e) in pairs {
            p.add_term(BigInt::from(c), e);
        }
        p
    }

    fn add_term(&mut self, c: BigInt, e: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Some(c) iff the polynomial is the constant c (including 0).
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.coeffs.len() == 1 {
            return self.coeffs.get(&0).cloned();
        }
        None
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of the highest power of q (None for the zero polynomial).
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiply by the unit q^e (shifts every exponent).
    pub fn mul_q_pow(&self, e: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// The substitution q -> q^(-1): flips every exponent.
    pub fn subst_q_inv(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// GCD of the absolute coefficient values; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact evaluation at a rational point (x = 0 needs all exponents >= 0).
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            acc += rat_pow(x, *e)? * BigRational::from(c.clone());
        }
        Ok(acc)
    }

    /// Evaluate at another Laurent polynomial's fraction-field value is done
    /// in `scalar`; evaluation at a plain Laurent polynomial lives here.
    /// Only sensible for ordinary polynomials (all exponents >= 0).
    pub fn eval_poly(&self, x: &LaurentPoly) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.coeffs {
            if *e < 0 {
                return Err(Error::ExponentTooLarge(*e));
            }
            let mut p = LaurentPoly::one();
            for _ in 0..*e {
                p = &p * x;
            }
            acc = &acc + &p.mul_int(c);
        }
        Ok(acc)
    }

    /// (shift, dense) with self = q^shift * Σ dense[i] q^i and dense[0] != 0.
    /// None for the zero polynomial.
    fn to_dense(&self) -> Option<(i64, Vec<BigInt>)> {
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e - lo) as usize] = c.clone();
        }
        Some((lo, v))
    }

    fn from_dense(shift: i64, v: &[BigInt]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(shift + i as i64, c.clone());
            }
        }
        LaurentPoly { coeffs }
    }

    /// GCD up to units, canonicalized: ordinary polynomial (constant term
    /// nonzero), positive leading coefficient, content = gcd of contents.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return LaurentPoly::zero(),
            (true, false) => return make_unit_free(b),
            (false, true) => return make_unit_free(a),
            _ => {}
        }
        let (_, da) = a.to_dense().expect("nonzero");
        let (_, db) = b.to_dense().expect("nonzero");
        let cont = a.content().gcd(&b.content());
        let g = gcd_over_q(&da, &db);
        let prim = clear_denominators(&g);
        LaurentPoly::from_dense(0, &prim).mul_int(&cont)
    }

    /// Exact division by a divisor known to divide self (in Z[q, q^(-1)]).
    /// Returns None when it does not divide; callers treat that as a bug.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if d.is_zero() {
            return None;
        }
        let (sn, num) = self.to_dense().expect("nonzero");
        let (sd, den) = d.to_dense().expect("nonzero");
        let q = div_exact_dense(&num, &den)?;
        Some(LaurentPoly::from_dense(sn - sd, &q))
    }
}

/// Shift to an ordinary polynomial with nonzero constant term and positive
/// leading coefficient (the canonical unit multiple).
fn make_unit_free(p: &LaurentPoly) -> LaurentPoly {
    let lo = p.min_exp().expect("nonzero");
    let shifted = p.mul_q_pow(-lo);
    if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
        shifted.mul_int(&BigInt::from(-1))
    } else {
        shifted
    }
}

/// Monic GCD over Q of two nonzero dense integer polynomials.
fn gcd_over_q(a: &[BigInt], b: &[BigInt]) -> Vec<BigRational> {
    let to_q = |v: &[BigInt]| -> Vec<BigRational> {
        v.iter().map(|c| BigRational::from(c.clone())).collect()
    };
    let mut x = to_q(a);
    let mut y = to_q(b);
    while !y.is_empty() {
        let r = rem_over_q(&x, &y);
        x = y;
        y = r;
    }
    // Make monic for a deterministic representative.
    let lead = x.last().expect("gcd of nonzero polys is nonzero").clone();
    x.iter().map(|c| c / &lead).collect()
}

/// Polynomial remainder over Q; inputs dense with nonzero leading entries.
fn rem_over_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].clone() / lead;
        if !c.is_zero() {
            for j in 0..=db {
                let t = &c * &b[j];
                r[dr - db + j] -= t;
            }
        }
        // leading entry is now exactly zero
        while let Some(last) = r.last() {
            if last.is_zero() {
                r.pop();
            } else {
                break;
            }
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let div = content * sign;
    ints.iter().map(|c| c / &div).collect()
}

/// Dense exact division over Z; None when not exact.
fn div_exact_dense(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    if dn < dd {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); dn - dd + 1];
    let lead = &den[dd];
    for i in (0..=dn - dd).rev() {
        let top = rem[i + dd].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dj) in den.iter().enumerate() {
            let t = &c * dj;
            rem[i + j] -= t;
        }
        quo[i] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quo)
    } else {
        None
    }
}

// ---- Arithmetic ----

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(c.clone(), *e);
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(-c, *e);
        }
        out
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($op:ident, $method:ident) => {
        impl std::ops::$op for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---- Printing ----

/// Exponent spelled the way the parser reads it back: `q`, `q^3`, `q^(-2)`.
fn q_power_str(e: i64) -> String {
    match e {
        1 => "q".to_string(),
        e if e > 1 => format!("q^{e}"),
        e => format!("q^({e})"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Compact canonical text, exponents descending: `q^2+1+q^(-2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            let piece = if *e == 0 {
                mag.to_string()
            } else if mag.is_one() {
                q_power_str(*e)
            } else {
                format!("{}*{}", mag, q_power_str(*e))
            };
            if first {
                if neg {
                    write!(f, "-{piece}")?;
                } else {
                    write!(f, "{piece}")?;
                }
                first = false;
            } else if neg {
                write!(f, "-{piece}")?;
            } else {
                write!(f, "+{piece}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn constructors_and_zero_handling() {
        assert!(LaurentPoly::zero().is_zero());
        assert!(LaurentPoly::monomial(BigInt::zero(), 5).is_zero());
        assert_eq!(p(&[(1, 2), (-1, 2)]), LaurentPoly::zero());
        assert_eq!(LaurentPoly::one().constant_value(), Some(BigInt::one()));
    }

    #[test]
    fn ring_ops() {
        let a = p(&[(1, 1), (-1, -1)]); // q - q^(-1)
        let b = p(&[(1, 1), (1, -1)]); // q + q^(-1)
        assert_eq!(&a * &b, p(&[(1, 2), (-1, -2)])); // q^2 - q^(-2)
        assert_eq!(&a + &b, p(&[(2, 1)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        let sq = &a * &a;
        assert_eq!(sq, p(&[(1, 2), (-2, 0), (1, -2)]));
    }

    #[test]
    fn content_and_subst() {
        let a = p(&[(4, 2), (-6, 0)]);
        assert_eq!(a.content(), BigInt::from(2));
        let b = p(&[(1, 3), (2, -1)]);
        assert_eq!(b.subst_q_inv(), p(&[(1, -3), (2, 1)]));
        // [n] is invariant under q -> q^(-1)
        let qint3 = p(&[(1, 2), (1, 0), (1, -2)]);
        assert_eq!(qint3.subst_q_inv(), qint3);
    }

    #[test]
    fn gcd_ordinary_cases() {
        // gcd(q^2-1, q-1) = q-1
        let a = p(&[(1, 2), (-1, 0)]);
        let b = p(&[(1, 1), (-1, 0)]);
        assert_eq!(LaurentPoly::gcd(&a, &b), b);
        // coprime
        let c = p(&[(1, 1), (1, 0)]);
        assert_eq!(LaurentPoly::gcd(&b, &c), LaurentPoly::one());
        // content is respected: gcd(2q+2, 4) = 2
        let d = p(&[(2, 1), (2, 0)]);
        let e = p(&[(4, 0)]);
        assert_eq!(LaurentPoly::gcd(&d, &e), LaurentPoly::constant(BigInt::from(2)));
    }

    #[test]
    fn gcd_strips_q_power_units() {
        // q - q^(-1) = q^(-1)(q^2 - 1); canonical gcd with itself is q^2 - 1
        let a = p(&[(1, 1), (-1, -1)]);
        let expect = p(&[(1, 2), (-1, 0)]);
        assert_eq!(LaurentPoly::gcd(&a, &a), expect);
        // negative leading coefficient is flipped
        let b = p(&[(-1, 2), (1, 0)]);
        assert_eq!(LaurentPoly::gcd(&b, &b), p(&[(1, 2), (-1, 0)]));
    }

    #[test]
    fn gcd_divides_both() {
        let a = p(&[(1, 2), (-1, 0)]); // (q-1)(q+1)
        let b = p(&[(1, 2), (2, 1), (1, 0)]); // (q+1)^2
        let g = LaurentPoly::gcd(&a, &b);
        assert_eq!(g, p(&[(1, 1), (1, 0)]));
        assert_eq!(a.div_exact(&g).map(|x| &x * &g), Some(a.clone()));
        assert_eq!(b.div_exact(&g).map(|x| &x * &g), Some(b.clone()));
    }

    #[test]
    fn div_exact_detects_non_divisors() {
        let a = p(&[(1, 2), (-1, 0)]);
        let b = p(&[(1, 1), (1, 0)]);
        assert!(a.div_exact(&b).is_some());
        let c = p(&[(1, 1), (2, 0)]);
        assert!(a.div_exact(&c).is_none());
    }

    #[test]
    fn eval_points() {
        // (q - q^(-1)) at 2 -> 3/2
        let a = p(&[(1, 1), (-1, -1)]);
        let two = BigRational::from(BigInt::from(2));
        assert_eq!(a.eval(&two).unwrap(), BigRational::new(BigInt::from(3), BigInt::from(2)));
        // negative exponent at zero is rejected
        assert!(a.eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn display_spellings() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, 2), (1, 0), (1, -2)]).to_string(), "q^2+1+q^(-2)");
        assert_eq!(p(&[(1, 1), (-1, -1)]).to_string(), "q-q^(-1)");
        assert_eq!(p(&[(-2, 3), (5, 0)]).to_string(), "-2*q^3+5");
        assert_eq!(p(&[(1, 12)]).to_string(), "q^12");
    }
}
