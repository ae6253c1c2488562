//! Symbolic arithmetic for cubic hypersurfaces and their varieties of lines.
//!
//! The crate has four layers:
//!
//! - [`motivic`]: an exact symbolic ring of "virtual classes" — integer
//!   combinations of formal symbols and powers of the Lefschetz class `L` —
//!   with truncated symmetric-power series and the rewriting identities
//!   relating a cubic hypersurface to its variety of lines.
//! - [`geometry`]: brute-force geometry over small prime fields: point,
//!   line, and singular-point enumeration for explicit cubic forms, plus
//!   independent pair-counting cross-checks of the symbolic identities.
//! - [`realize`]: homomorphisms out of the symbolic ring (point counts,
//!   Euler characteristics, real Euler characteristics, E-polynomials)
//!   and the numeric consequences of the line-variety identities.
//! - [`hodge`]: Hodge diamonds of smooth cubic hypersurfaces and of their
//!   varieties of lines, assembled from symmetric squares and Tate twists.
//!
//! All arithmetic is exact (integers and rationals, never floats), and all
//! public values are immutable; everything here is safe to share across
//! threads without coordination.

pub mod geometry;
pub mod hodge;
pub mod motivic;
pub mod realize;
