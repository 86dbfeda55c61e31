//! Plain-text expressions over the generators.
//!
//! The surface language is deliberately small:
//!
//! ```text
//! expr    := ['-'] term ( ('+' | '-') ['-'] term )*
//! term    := factor ( ('*' | '/') factor )*
//! factor  := atom [ '^' intlit ]
//! atom    := 'E' | 'F' | 'K' | 'q' | integer | '(' expr ')'
//! intlit  := integer | '(' ['-'] integer ')'
//! ```
//!
//! Multiplication is always explicit (`2*K`, never `2K`), `^` binds
//! tighter than `*` and `/`, and both binary operators associate left.
//! Negative exponents are accepted only on the invertible atoms `K` and
//! `q`; division is defined only by subexpressions that reduce to a
//! nonzero scalar.  Everything [`crate::pbw::Element`] prints is
//! accepted back, so parse after format is the identity.
//!
//! Syntax problems are reported as [`ParseError`] with a byte offset;
//! semantic problems (division by `E`, oversized powers) surface when
//! the tree is evaluated against a [`QParam`].

use num::{BigInt, BigRational};

use crate::error::{Error, ParseError, Result};
use crate::pbw::Element;
use crate::scalar::{QParam, Scalar};

/// Leaf of an expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAtom {
    E,
    F,
    K,
    Q,
    Int(BigInt),
}

/// Parsed shape of an input expression, before any algebra happens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Sum(Vec<ExprAst>),
    Product(Vec<ExprAst>),
    Quotient(Box<ExprAst>, Box<ExprAst>),
    Power(Box<ExprAst>, i64),
    Atom(ExprAtom),
}

// Nesting depth after which the parser gives up rather than risk the
// stack; far beyond anything a human writes.
const MAX_DEPTH: usize = 240;
// Largest exponent literal the parser accepts.
const MAX_EXPONENT: i64 = 1_000_000;
// Largest power of a multi-term element the evaluator will expand.
const MAX_COMPOSITE_POWER: i64 = 64;

impl ExprAst {
    /// Parse a source string into a tree, consuming all of it.
    pub fn parse(src: &str) -> std::result::Result<ExprAst, ParseError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
            depth: 0,
        };
        let ast = p.expr()?;
        p.skip_ws();
        match p.peek() {
            None => Ok(ast),
            Some(c) => Err(p.err_at(p.pos, format!("unexpected '{}'", c as char))),
        }
    }

    /// Evaluate the tree to a normally ordered element over `qp`.
    pub fn to_element(&self, qp: &QParam) -> Result<Element> {
        match self {
            ExprAst::Atom(ExprAtom::E) => Ok(Element::e(qp)),
            ExprAst::Atom(ExprAtom::F) => Ok(Element::f(qp)),
            ExprAst::Atom(ExprAtom::K) => Ok(Element::k(qp)),
            ExprAst::Atom(ExprAtom::Q) => Ok(Element::scalar(qp, qp.q_pow(1))),
            ExprAst::Atom(ExprAtom::Int(n)) => {
                Ok(Element::scalar(qp, qp.rational(&BigRational::from(n.clone()))))
            }
            ExprAst::Sum(parts) => {
                let mut acc = Element::zero(qp);
                for part in parts {
                    acc = &acc + &part.to_element(qp)?;
                }
                Ok(acc)
            }
            ExprAst::Product(parts) => {
                let mut acc = Element::one(qp);
                for part in parts {
                    acc = &acc * &part.to_element(qp)?;
                }
                Ok(acc)
            }
            ExprAst::Quotient(num, den) => {
                let n = num.to_element(qp)?;
                let d = den.to_element(qp)?;
                let Some(s) = d.as_scalar() else {
                    return Err(Error::AlgebraDivision);
                };
                if s.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(n.scale(&s.inv()?))
            }
            ExprAst::Power(base, n) => {
                let b = base.to_element(qp)?;
                if *n >= 0 {
                    if b.num_terms() > 1 && *n > MAX_COMPOSITE_POWER {
                        return Err(Error::ExponentTooLarge(*n));
                    }
                    Ok(b.pow(*n as u64))
                } else {
                    // Negative powers exist exactly for units lambda K^m.
                    let Some((lambda, m)) = b.as_unit() else {
                        return Err(Error::NotInvertible(b.to_string()));
                    };
                    let exp = m
                        .checked_mul(*n)
                        .ok_or(Error::ExponentTooLarge(*n))?;
                    let coeff = lambda.pow_i(*n)?;
                    Ok(Element::monomial(
                        qp,
                        crate::pbw::PbwMonomial::new(0, 0, exp),
                        coeff,
                    ))
                }
            }
        }
    }
}

/// Parse and evaluate in one step.
pub fn parse_element(src: &str, qp: &QParam) -> Result<Element> {
    ExprAst::parse(src)?.to_element(qp)
}

/// Parse an expression that must reduce to a scalar (no E, F or K left).
pub fn parse_scalar(src: &str, qp: &QParam) -> Result<Scalar> {
    let el = parse_element(src, qp)?;
    el.as_scalar().ok_or_else(|| Error::NotScalar(el.to_string()))
}

// ---- The recursive-descent parser ----

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err_at(&self, pos: usize, message: String) -> ParseError {
        ParseError { pos, message }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    /// Consume `c` if it is the next non-space byte.
    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> std::result::Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err_at(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> std::result::Result<ExprAst, ParseError> {
        let mut parts = Vec::new();
        let negated = self.eat(b'-');
        let first = self.term()?;
        parts.push(if negated { negate(first) } else { first });
        loop {
            self.skip_ws();
            let subtract = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            let negated = self.eat(b'-') != subtract;
            let next = self.term()?;
            parts.push(if negated { negate(next) } else { next });
        }
        if parts.len() == 1 {
            Ok(parts.pop().expect("nonempty"))
        } else {
            Ok(ExprAst::Sum(parts))
        }
    }

    fn term(&mut self) -> std::result::Result<ExprAst, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = match acc {
                        ExprAst::Product(mut v) => {
                            v.push(rhs);
                            ExprAst::Product(v)
                        }
                        other => ExprAst::Product(vec![other, rhs]),
                    };
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = ExprAst::Quotient(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> std::result::Result<ExprAst, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(atom);
        }
        self.pos += 1;
        let exp_pos = {
            self.skip_ws();
            self.pos
        };
        let exp = self.exponent_literal()?;
        if exp < 0 {
            match &atom {
                ExprAst::Atom(ExprAtom::K) | ExprAst::Atom(ExprAtom::Q) => {}
                ExprAst::Atom(ExprAtom::E) => {
                    return Err(self.err_at(exp_pos, "E is not invertible".into()));
                }
                ExprAst::Atom(ExprAtom::F) => {
                    return Err(self.err_at(exp_pos, "F is not invertible".into()));
                }
                _ => {
                    return Err(self.err_at(
                        exp_pos,
                        "negative exponents are only allowed on K and q".into(),
                    ));
                }
            }
        }
        Ok(ExprAst::Power(Box::new(atom), exp))
    }

    fn atom(&mut self) -> std::result::Result<ExprAst, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        match self.peek() {
            None => Err(self.err_at(pos, "unexpected end of input".into())),
            Some(b'E') => {
                self.pos += 1;
                Ok(ExprAst::Atom(ExprAtom::E))
            }
            Some(b'F') => {
                self.pos += 1;
                Ok(ExprAst::Atom(ExprAtom::F))
            }
            Some(b'K') => {
                self.pos += 1;
                Ok(ExprAst::Atom(ExprAtom::K))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(ExprAst::Atom(ExprAtom::Q))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digit_run();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(ExprAst::Atom(ExprAtom::Int(n)))
            }
            Some(b'(') => {
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return Err(self.err_at(pos, "expression nested too deeply".into()));
                }
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                self.depth -= 1;
                Ok(inner)
            }
            Some(c) => Err(self.err_at(pos, format!("unexpected '{}'", c as char))),
        }
    }

    /// `intlit := integer | '(' ['-'] integer ')'` — exponents only.
    fn exponent_literal(&mut self) -> std::result::Result<i64, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        let (negative, digits) = if self.eat(b'(') {
            let negative = self.eat(b'-');
            self.skip_ws();
            let digits = self.digit_run();
            if digits.is_empty() {
                return Err(self.err_at(self.pos, "expected an integer exponent".into()));
            }
            self.expect(b')')?;
            (negative, digits)
        } else {
            let digits = self.digit_run();
            if digits.is_empty() {
                return Err(self.err_at(pos, "expected an integer exponent".into()));
            }
            (false, digits)
        };
        let magnitude: i64 = if digits.len() > 7 {
            MAX_EXPONENT + 1
        } else {
            digits.parse().expect("short ascii digits")
        };
        if magnitude > MAX_EXPONENT {
            return Err(self.err_at(pos, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn digit_run(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8(self.src[start..self.pos].to_vec()).expect("ascii digits")
    }
}

fn negate(t: ExprAst) -> ExprAst {
    ExprAst::Product(vec![ExprAst::Atom(ExprAtom::Int(BigInt::from(-1))), t])
}
