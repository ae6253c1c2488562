//! Exact symbolic arithmetic in the localized Grothendieck ring of varieties.
//!
//! A [`VirtualClass`] is a finite integer combination of monomials, each
//! monomial a multiset of opaque [`Symbol`]s times an integer power of the
//! Lefschetz class `L` (the class of the affine line; `L` is an exponent,
//! never a symbol). Symmetric powers act through truncated power series
//! ([`SymSeries`]): `Sym_t` of a sum is the product of the factors' series,
//! and a negative coefficient contributes a series inverse — the unique
//! extension consistent with multiplicativity.
//!
//! On top of the ring sit the rewriting identities tying a cubic
//! hypersurface to its variety of lines: [`hilb2_class`] (length-2
//! subschemes of a hypersurface), [`fano_class_from_defect`] (the variety
//! of lines from the rational defect), and [`ak_coefficients`] (the
//! Lefschetz multiplicities in the smooth-case expansion).

mod class;
mod ops;
mod series;
mod text;

pub use class::{Monomial, Symbol, VirtualClass};
pub use ops::{ak_coefficients, blowup_class, fano_class_from_defect, hilb2_class, projective_space, reduce_mod_L, MotivicError};
pub use series::{sym2, sym_n, sym_series, SymSeries};
pub use text::ParseClassError;
