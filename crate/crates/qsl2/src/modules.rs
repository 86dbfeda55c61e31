//! The finite-dimensional simple modules of U_q(sl2) and module twisting.
//!
//! For each n >= 0 and sign epsilon there is a simple module of dimension
//! n + 1 with basis v_0, ..., v_n on which
//!
//! ```text
//! K v_i = eps q^(n-2i) v_i,
//! E v_i = eps [n-i+1] v_(i-1)   (E v_0 = 0),
//! F v_i = [i+1] v_(i+1)         (F v_n = 0),
//! ```
//!
//! and these exhaust the simple modules of each dimension.  The Casimir
//! element acts on this module by the scalar
//! eps (q^(n+1) + q^(-(n+1))) / (q - q^(-1))^2.
//!
//! Twisting by an automorphism precomposes the action; [`ModuleRep::twist_by_images`]
//! renormalizes the twisted action back to the standard eigenvalue order
//! and reports the new sign.

use std::fmt;

use crate::error::{Error, Result};
use crate::pbw::Element;
use crate::scalar::{QParam, Scalar, Sign};

// ---- Exact matrices ----

/// A square matrix of scalars, all from one parameter context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    qp: QParam,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(qp: &QParam, dim: usize) -> Matrix {
        Matrix {
            qp: qp.clone(),
            dim,
            rows: vec![vec![qp.zero(); dim]; dim],
        }
    }

    pub fn identity(qp: &QParam, dim: usize) -> Matrix {
        let mut m = Matrix::zero(qp, dim);
        for i in 0..dim {
            m.rows[i][i] = qp.one();
        }
        m
    }

    pub fn from_rows(qp: &QParam, rows: Vec<Vec<Scalar>>) -> Matrix {
        let dim = rows.len();
        for row in &rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            for x in row {
                assert!(qp.matches(x), "entry from the wrong parameter context");
            }
        }
        Matrix { qp: qp.clone(), dim, rows }
    }

    pub fn qparam(&self) -> &QParam {
        &self.qp
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert!(self.qp.matches(&x), "entry from the wrong parameter context");
        self.rows[i][j] = x;
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Scalar::is_zero))
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            qp: self.qp.clone(),
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * s).collect())
                .collect(),
        }
    }

    /// Column j as a coefficient vector (the image of basis vector j).
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.rows[i][j].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(self.qp.zero(), |acc, (a, x)| &acc + &(a * x))
            })
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination; errors on a singular
    /// matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut a = self.rows.clone();
        let mut b = Matrix::identity(&self.qp, n).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or_else(|| Error::NotInvertible("matrix is singular".into()))?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = a[col][col].inv().expect("pivot is nonzero");
            for j in 0..n {
                a[col][j] = &a[col][j] * &inv;
                b[col][j] = &b[col][j] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                    b[r][j] = &b[r][j] - &(&factor * &b[col][j]);
                }
            }
        }
        Ok(Matrix { qp: self.qp.clone(), dim: n, rows: b })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow_i(&self, e: i64) -> Result<Matrix> {
        if e < 0 {
            return self.inverse()?.pow_i(-e);
        }
        let mut acc = Matrix::identity(&self.qp, self.dim);
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
}

fn assert_same_matrix_context(a: &Matrix, b: &Matrix) {
    assert!(a.qp == b.qp, "matrices from different parameter contexts");
    assert_eq!(a.dim, b.dim, "matrix dimensions differ");
}

impl std::ops::Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&self.qp.int(-1))
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_same_matrix_context(self, rhs);
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a + b).collect())
            .collect();
        Matrix { qp: self.qp.clone(), dim: self.dim, rows }
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_same_matrix_context(self, rhs);
        let n = self.dim;
        let mut out = Matrix::zero(&self.qp, n);
        for i in 0..n {
            for k in 0..n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if rhs.rows[k][j].is_zero() {
                        continue;
                    }
                    out.rows[i][j] = &out.rows[i][j] + &(&self.rows[i][k] * &rhs.rows[k][j]);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(Scalar::to_string).collect();
                cells.join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

// ---- Module representations ----

/// The module of dimension n + 1 with sign epsilon, given by the three
/// generator matrices in the ladder basis v_0, ..., v_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRep {
    qp: QParam,
    n: u64,
    epsilon: Sign,
    mat_k: Matrix,
    mat_e: Matrix,
    mat_f: Matrix,
}

/// The eigenvalue ladder along the basis: `lambda[i]` is the coefficient
/// of v_(i-1) in E v_i (with lambda[0] = 0), `theta[i]` the coefficient of
/// v_(i+1) in F v_i (with theta[n] = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    pub lambda: Vec<Scalar>,
    pub theta: Vec<Scalar>,
}

impl Ladder {
    /// True when every interior rung is nonzero, so repeated E and F sweep
    /// any nonzero vector through the whole basis: no proper submodule can
    /// contain a nonzero vector, which certifies simplicity.
    pub fn certifies_simplicity(&self) -> bool {
        let n = self.lambda.len();
        debug_assert_eq!(n, self.theta.len());
        self.lambda.iter().skip(1).all(|x| !x.is_zero())
            && self.theta.iter().take(n.saturating_sub(1)).all(|x| !x.is_zero())
    }
}

impl ModuleRep {
    /// Build the standard module for (n, epsilon).
    pub fn build(qp: &QParam, n: u64, epsilon: Sign) -> ModuleRep {
        let dim = (n + 1) as usize;
        let eps = epsilon.scalar(qp);
        let mut mat_k = Matrix::zero(qp, dim);
        let mut mat_e = Matrix::zero(qp, dim);
        let mut mat_f = Matrix::zero(qp, dim);
        for i in 0..=n {
            let iu = i as usize;
            mat_k.set(iu, iu, &eps * &qp.q_pow(n as i64 - 2 * i as i64));
            if i >= 1 {
                mat_e.set(iu - 1, iu, &eps * &qp.quantum_integer((n - i + 1) as i64));
            }
            if i < n {
                mat_f.set(iu + 1, iu, qp.quantum_integer(i as i64 + 1));
            }
        }
        ModuleRep { qp: qp.clone(), n, epsilon, mat_k, mat_e, mat_f }
    }

    pub fn qparam(&self) -> &QParam {
        &self.qp
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        (self.n + 1) as usize
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn mat_k(&self) -> &Matrix {
        &self.mat_k
    }

    pub fn mat_e(&self) -> &Matrix {
        &self.mat_e
    }

    pub fn mat_f(&self) -> &Matrix {
        &self.mat_f
    }

    /// The matrix through which an algebra element acts on this module.
    pub fn matrix_of(&self, x: &Element) -> Result<Matrix> {
        assert!(
            x.qparam() == &self.qp,
            "element from a different parameter context"
        );
        let mut out = Matrix::zero(&self.qp, self.dim());
        for (m, c) in x.terms() {
            let me = self.mat_e.pow_i(m.e as i64)?;
            let mf = self.mat_f.pow_i(m.f as i64)?;
            let mk = self.mat_k.pow_i(m.k)?;
            out = &out + &(&(&me * &mf) * &mk).scale(c);
        }
        Ok(out)
    }

    /// Apply an element to a vector in the v_i basis.
    pub fn act(&self, x: &Element, v: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self.matrix_of(x)?.mul_vec(v))
    }

    /// Each defining relation, instantiated on the generator matrices,
    /// paired with whether it holds.
    pub fn relation_checks(&self) -> Vec<(&'static str, bool)> {
        let qp = &self.qp;
        let dim = self.dim();
        let id = Matrix::identity(qp, dim);
        let k = &self.mat_k;
        let e = &self.mat_e;
        let f = &self.mat_f;
        let k_inv = match k.inverse() {
            Ok(m) => m,
            Err(_) => {
                return vec![("K is invertible", false)];
            }
        };
        let delta_inv = qp.delta().inv().expect("delta is nonzero");
        vec![
            ("K*K^(-1) = 1", &(k * &k_inv) == &id),
            (
                "K E K^(-1) = q^2 E",
                &(k * e) * &k_inv == e.scale(&qp.q_pow(2)),
            ),
            (
                "K F K^(-1) = q^(-2) F",
                &(k * f) * &k_inv == f.scale(&qp.q_pow(-2)),
            ),
            (
                "E F - F E = (K - K^(-1))/(q - q^(-1))",
                &(e * f) - &(f * e) == (k - &k_inv).scale(&delta_inv),
            ),
        ]
    }

    /// Do the generator matrices satisfy all defining relations?
    pub fn verify_relations(&self) -> bool {
        self.relation_checks().iter().all(|(_, ok)| *ok)
    }

    /// Read the raising/lowering ladder off the generator matrices.
    pub fn ladder(&self) -> Ladder {
        let n = self.dim();
        let mut lambda = vec![self.qp.zero(); n];
        let mut theta = vec![self.qp.zero(); n];
        for i in 0..n {
            if i >= 1 {
                lambda[i] = self.mat_e.entry(i - 1, i).clone();
            }
            if i + 1 < n {
                theta[i] = self.mat_f.entry(i + 1, i).clone();
            }
        }
        Ladder { lambda, theta }
    }

    /// Precompose the action with an algebra map given by its images of
    /// the generators, then renormalize: reorder the basis so the K
    /// eigenvalues run eps' q^n, eps' q^(n-2), ..., eps' q^(-n) and report
    /// the new sign.  Errors when the images do not define a twist of this
    /// kind (K image not diagonal with eigenvalues +-q^j, mixed signs, or
    /// an eigenvalue multiset other than the standard one).
    pub fn twist_by_images(
        &self,
        img_e: &Element,
        img_f: &Element,
        img_k: &Element,
    ) -> Result<ModuleRep> {
        let mk = self.matrix_of(img_k)?;
        let me = self.matrix_of(img_e)?;
        let mf = self.matrix_of(img_f)?;
        if !mk.is_diagonal() {
            return Err(Error::InvalidTwist(
                "twisted K action is not diagonal in the ladder basis".into(),
            ));
        }
        let dim = self.dim();
        let mut signed_exps: Vec<(Sign, i64)> = Vec::with_capacity(dim);
        for i in 0..dim {
            let (sign, exp) = recognize_signed_q_power(&self.qp, mk.entry(i, i), self.n)
                .ok_or_else(|| {
                    Error::InvalidTwist(format!(
                        "twisted K eigenvalue {} is not +-q^j",
                        mk.entry(i, i)
                    ))
                })?;
            signed_exps.push((sign, exp));
        }
        let eps = signed_exps[0].0;
        if signed_exps.iter().any(|(s, _)| *s != eps) {
            return Err(Error::InvalidTwist(
                "twisted K eigenvalues carry mixed signs".into(),
            ));
        }
        let mut exps: Vec<i64> = signed_exps.iter().map(|(_, e)| e).copied().collect();
        let mut sorted = exps.clone();
        sorted.sort_unstable();
        let expected: Vec<i64> = (0..dim)
            .map(|i| -(self.n as i64) + 2 * i as i64)
            .collect();
        if sorted != expected {
            return Err(Error::InvalidTwist(format!(
                "twisted K eigenvalue exponents {exps:?} are not the standard ladder"
            )));
        }
        // Permutation sending slot i to the old index whose exponent is
        // n - 2i (strictly descending, so the permutation is unique).
        let mut perm: Vec<usize> = (0..dim).collect();
        perm.sort_by_key(|&i| -exps[i]);
        exps.sort_by_key(|&e| -e);
        let reorder = |m: &Matrix| -> Matrix {
            let mut out = Matrix::zero(&self.qp, dim);
            for i in 0..dim {
                for j in 0..dim {
                    out.set(i, j, m.entry(perm[i], perm[j]).clone());
                }
            }
            out
        };
        let twisted = ModuleRep {
            qp: self.qp.clone(),
            n: self.n,
            epsilon: eps,
            mat_k: reorder(&mk),
            mat_e: reorder(&me),
            mat_f: reorder(&mf),
        };
        if !twisted.verify_relations() {
            return Err(Error::InvalidTwist(
                "twisted action violates the defining relations".into(),
            ));
        }
        Ok(twisted)
    }
}

/// The scalar by which the Casimir element acts on the (n, epsilon)
/// module: eps (q^(n+1) + q^(-(n+1))) / (q - q^(-1))^2.
pub fn casimir_scalar(qp: &QParam, n: u64, epsilon: Sign) -> Scalar {
    let num = &qp.q_pow(n as i64 + 1) + &qp.q_pow(-(n as i64) - 1);
    let delta_sq_inv = (&qp.delta() * &qp.delta()).inv().expect("delta is nonzero");
    &(&epsilon.scalar(qp) * &num) * &delta_sq_inv
}

/// Recognize a scalar as +-q^j.  In symbolic mode this is syntactic; in
/// numeric mode it searches exponents |j| <= n + 1, which is unambiguous
/// because |q0| != 1 makes j -> |q0|^j strictly monotone.
fn recognize_signed_q_power(qp: &QParam, x: &Scalar, n: u64) -> Option<(Sign, i64)> {
    match (qp, x) {
        (QParam::Generic, Scalar::Sym(f)) => f.as_signed_q_power(),
        (QParam::Concrete(_), Scalar::Num(v)) => {
            if num::Zero::is_zero(v) {
                return None;
            }
            let bound = n as i64 + 1;
            for j in -bound..=bound {
                let p = qp.q_pow(j);
                let pv = match &p {
                    Scalar::Num(r) => r.clone(),
                    _ => unreachable!(),
                };
                if *v == pv {
                    return Some((Sign::Plus, j));
                }
                if *v == -&pv {
                    return Some((Sign::Minus, j));
                }
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::casimir;
    use crate::pbw::PbwMonomial;
    use num::{BigInt, BigRational};

    fn gq() -> QParam {
        QParam::generic()
    }

    fn nq(n: i64, d: i64) -> QParam {
        QParam::concrete(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn smallest_modules_by_hand() {
        let qp = gq();
        let m = ModuleRep::build(&qp, 1, Sign::Plus);
        assert_eq!(m.mat_k().entry(0, 0), &qp.q_pow(1));
        assert_eq!(m.mat_k().entry(1, 1), &qp.q_pow(-1));
        assert_eq!(m.mat_e().entry(0, 1), &qp.one());
        assert_eq!(m.mat_f().entry(1, 0), &qp.one());
        assert!(m.mat_e().entry(1, 0).is_zero());

        let neg = ModuleRep::build(&qp, 2, Sign::Minus);
        assert_eq!(neg.mat_k().entry(0, 0), &-&qp.q_pow(2));
        assert_eq!(neg.mat_k().entry(1, 1), &qp.int(-1));
        assert_eq!(neg.mat_k().entry(2, 2), &-&qp.q_pow(-2));
    }

    #[test]
    fn relations_hold_across_modules() {
        for qp in [gq(), nq(2, 1), nq(-5, 3)] {
            for n in 0..=5u64 {
                for eps in [Sign::Plus, Sign::Minus] {
                    let m = ModuleRep::build(&qp, n, eps);
                    assert!(m.verify_relations(), "relations fail for n={n} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn casimir_acts_by_the_stated_scalar() {
        for qp in [gq(), nq(2, 1)] {
            let c = casimir(&qp);
            for n in 0..=4u64 {
                for eps in [Sign::Plus, Sign::Minus] {
                    let m = ModuleRep::build(&qp, n, eps);
                    let lhs = m.matrix_of(&c).unwrap();
                    let rhs = Matrix::identity(&qp, m.dim())
                        .scale(&casimir_scalar(&qp, n, eps));
                    assert_eq!(lhs, rhs, "Casimir scalar mismatch at n={n} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn casimir_scalars_at_two() {
        // eps = +1, q0 = 2: exact values for n = 0..4.
        let qp = nq(2, 1);
        let expect = [
            rat(10, 9),
            rat(17, 9),
            rat(65, 18),
            rat(257, 36),
            rat(1025, 72),
        ];
        for (n, want) in expect.iter().enumerate() {
            let got = casimir_scalar(&qp, n as u64, Sign::Plus);
            assert_eq!(got, Scalar::Num(want.clone()), "n = {n}");
        }
    }

    #[test]
    fn ladder_certifies_simplicity() {
        for qp in [gq(), nq(-2, 1)] {
            for n in 0..=5u64 {
                for eps in [Sign::Plus, Sign::Minus] {
                    let m = ModuleRep::build(&qp, n, eps);
                    let ladder = m.ladder();
                    assert!(ladder.certifies_simplicity(), "n={n} eps={eps}");
                    assert!(ladder.lambda[0].is_zero());
                    if n >= 1 {
                        assert_eq!(ladder.theta[0], qp.one());
                        assert_eq!(
                            ladder.lambda[1],
                            &eps.scalar(&qp) * &qp.quantum_integer(n as i64)
                        );
                    }
                }
            }
        }
        // A broken ladder is not certified.
        let broken = Ladder {
            lambda: vec![QParam::generic().zero(), QParam::generic().zero()],
            theta: vec![QParam::generic().one(), QParam::generic().zero()],
        };
        assert!(!broken.certifies_simplicity());
    }

    #[test]
    fn action_is_a_homomorphism() {
        let qp = gq();
        let m = ModuleRep::build(&qp, 3, Sign::Plus);
        let samples = [
            Element::e(&qp),
            Element::f(&qp),
            Element::k_pow(&qp, -2),
            &Element::e(&qp) * &Element::f(&qp),
            &Element::one(&qp) + &Element::monomial(&qp, PbwMonomial::new(1, 2, 1), qp.q_pow(3)),
        ];
        for x in &samples {
            for y in &samples {
                let lhs = m.matrix_of(&(x * y)).unwrap();
                let rhs = &m.matrix_of(x).unwrap() * &m.matrix_of(y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn boundary_vectors_vanish() {
        let qp = gq();
        let m = ModuleRep::build(&qp, 3, Sign::Minus);
        let mut v0 = vec![qp.zero(); 4];
        v0[0] = qp.one();
        assert!(m.act(&Element::e(&qp), &v0).unwrap().iter().all(Scalar::is_zero));
        let mut vn = vec![qp.zero(); 4];
        vn[3] = qp.one();
        assert!(m.act(&Element::f(&qp), &vn).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn identity_twist_returns_the_module() {
        for qp in [gq(), nq(2, 1)] {
            let m = ModuleRep::build(&qp, 2, Sign::Plus);
            let t = m
                .twist_by_images(&Element::e(&qp), &Element::f(&qp), &Element::k(&qp))
                .unwrap();
            assert_eq!(t, m);
        }
    }

    #[test]
    fn sign_flip_twist() {
        // K -> -K, E -> E, F -> -F sends (1, +) to sign -1.
        for qp in [gq(), nq(2, 1), nq(-5, 3)] {
            let m = ModuleRep::build(&qp, 1, Sign::Plus);
            let t = m
                .twist_by_images(
                    &Element::e(&qp),
                    &-&Element::f(&qp),
                    &-&Element::k(&qp),
                )
                .unwrap();
            assert_eq!(t.epsilon(), Sign::Minus);
            assert!(t.verify_relations());
        }
    }

    #[test]
    fn swap_twist_reverses_the_basis() {
        // K -> K^(-1), E -> F, F -> E keeps the sign and flips the ladder.
        for qp in [gq(), nq(2, 1)] {
            let m = ModuleRep::build(&qp, 1, Sign::Plus);
            let t = m
                .twist_by_images(&Element::f(&qp), &Element::e(&qp), &Element::k_inv(&qp))
                .unwrap();
            assert_eq!(t.epsilon(), Sign::Plus);
            assert!(t.verify_relations());
            // The twisted K matrix is the standard one again.
            assert_eq!(t.mat_k(), m.mat_k());
        }
    }

    #[test]
    fn invalid_twist_is_rejected() {
        let qp = gq();
        let m = ModuleRep::build(&qp, 1, Sign::Plus);
        // E is nilpotent on the module, so K -> E is not diagonal; and
        // K -> K^2 has eigenvalues outside the standard ladder.
        assert!(matches!(
            m.twist_by_images(&Element::e(&qp), &Element::f(&qp), &Element::e(&qp)),
            Err(Error::InvalidTwist(_))
        ));
        assert!(matches!(
            m.twist_by_images(&Element::e(&qp), &Element::f(&qp), &Element::k_pow(&qp, 2)),
            Err(Error::InvalidTwist(_))
        ));
    }

    #[test]
    fn matrix_inverse_and_powers() {
        let qp = gq();
        let m = ModuleRep::build(&qp, 2, Sign::Plus);
        let k = m.mat_k();
        let id = Matrix::identity(&qp, 3);
        assert_eq!(&(k * &k.inverse().unwrap()), &id);
        assert_eq!(k.pow_i(-2).unwrap(), k.inverse().unwrap().pow_i(2).unwrap());
        assert_eq!(k.pow_i(0).unwrap(), id);
        // E is nilpotent, hence singular.
        assert!(m.mat_e().inverse().is_err());
    }
}
