//! Exact computer algebra for the quantum group U_q(sl2).
//!
//! Everything is exact: coefficients are reduced fractions of integer
//! Laurent polynomials in q (symbolic mode) or arbitrary-precision
//! rationals at a fixed q0 (numeric mode).  No floats anywhere.
//!
//! The core object is [`Element`], an element of U_q(sl2) kept in the
//! normally ordered basis E^i F^j K^s.  On top of that sit the Casimir
//! element and polynomial-in-Casimir machinery ([`center`]), the
//! finite-dimensional simple modules ([`modules`]), the automorphism
//! group ([`aut`]), the isomorphism decision procedure for pairs of
//! numeric parameters ([`iso`]), and a small expression language
//! ([`expr`]) used by the command-line tool.

pub mod aut;
pub mod center;
pub mod error;
pub mod expr;
pub mod iso;
pub mod laurent;
pub mod modules;
pub mod pbw;
pub mod scalar;

pub use aut::{
    descriptor_from_images, images_homomorphism_checks, twist, Automorphism, Family,
};
pub use center::{casimir, casimir_alt, express_in_casimir, is_central, CasimirPolynomial};
pub use error::{Error, ParseError, Result};
pub use expr::{parse_element, parse_scalar, ExprAst, ExprAtom};
pub use iso::{
    affine_match, casimir_scalar_in_e, decide_isomorphic, differencing_identities,
    factorization_witness, iso_trace, power_sum_poly, AffineWitness, Direction,
    FactorizationReport, IsoDecision, TraceLine,
};
pub use laurent::LaurentPoly;
pub use modules::{casimir_scalar, Ladder, Matrix, ModuleRep};
pub use pbw::{commutator, Element, PbwMonomial};
pub use scalar::{evaluate_at, LaurentFrac, QParam, Scalar, Sign};
