//! Realizations of virtual classes: ring homomorphisms from the
//! Grothendieck ring to concrete invariants.
//!
//! The layers:
//!
//! * [`poly`] — the value rings that are not plain numbers: two-variable
//!   E-polynomials and the one-variable holomorphic column obtained from
//!   them.
//! * [`env`] — [`Environment`]: a realization target (point counts, Euler
//!   characteristics, real-point Euler characteristics, E-polynomials)
//!   plus symbol assignments, and the evaluator with the per-target
//!   symmetric-square rules.
//! * [`fano`] — closed-form specializations of the line-count relation
//!   (complex and real Euler characteristics of the variety of lines),
//!   the product-structure report, and symmetric-power counts truncated
//!   from proposed zeta data.
//!
//! Everything is exact: values are big rationals or integer polynomials,
//! rule divisions are checked, and inconsistent inputs surface as
//! [`RealizeError`] values rather than rounded numbers.

pub mod env;
pub mod fano;
pub mod poly;

pub use env::{Environment, RealizeError, Target, Value};
pub use fano::{
    chi_fano, chi_real_fano, hasse_weil_truncation, indecomposability_report,
    IndecomposabilityReport, IndecomposabilityVerdict,
};
pub use poly::{psi_polynomial, EPolynomial, UnivariatePolynomial};
