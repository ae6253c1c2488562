//! Hodge structures attached to cubic hypersurfaces and their varieties
//! of lines.
//!
//! This layer works purely with dimension tables ([`HodgeDiamond`]): maps
//! `(p, q) -> h^{p,q}` with no finer structure. The constructions mirror
//! the motivic ones —
//!
//! * [`primitive_hodge_cubic`] / [`cubic_hodge`] give the middle
//!   primitive part and the full cohomology of a smooth cubic
//!   hypersurface;
//! * [`fano_hodge`] assembles the cohomology of the variety of lines
//!   from the symmetric square of the twisted primitive part, Tate
//!   twists of it, and Tate classes with the same multiplicities the
//!   motivic expansion produces;
//! * [`hilb2_hodge`] does the analogous assembly for the Hilbert scheme
//!   of two points on any smooth projective variety;
//! * [`e_polynomial`] hands the table to the realization layer, where
//!   evaluation at `(1, 1)` recovers Euler characteristics.
//!
//! The symmetric square is graded ([`super_sym2`]): odd-weight classes
//! anticommute, which is exactly the convention under which these
//! assemblies agree with the E-polynomial realization of the motivic
//! identity.

pub mod diamond;
pub mod ops;

pub use diamond::HodgeDiamond;
pub use ops::{
    cubic_hodge, e_polynomial, fano_hodge, hilb2_hodge, primitive_hodge_cubic,
    rational_defect_hodge, super_sym2, tate_twist,
};
