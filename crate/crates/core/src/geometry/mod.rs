//! Finite-field side of the library: explicit cubic forms over `F_p`,
//! brute-force point/line/pair enumeration, and the counting identities
//! relating a cubic hypersurface to its Hilbert square and its variety of
//! lines.
//!
//! Layering:
//! - [`field`] — arithmetic in `F_p` and in `F_{p^2}`, `F_{p^3}`;
//! - [`cubic`] — sparse cubic forms: construction, parsing, named families,
//!   reducedness, compilation for fast evaluation;
//! - [`points`] — canonical projective representatives, point counts,
//!   singular loci;
//! - [`lines`] — reduced-echelon line enumeration and exact containment;
//! - [`verify`] — symmetric/Hilbert square counts, the line-count formula,
//!   the verification report, and symmetric-power counts via zeta.
//!
//! All enumeration loops are indexed ranges over canonical representatives,
//! so parallel execution is deterministic: results never depend on the
//! number of threads.

pub mod cubic;
pub mod field;
pub mod lines;
pub mod points;
pub mod verify;

pub use cubic::{CompiledCubic, CompiledQuadratic, CubicError, CubicForm};
pub use field::{ExtField, Field, FieldError, PrimeField};
pub use lines::{
    count_lines, enumerate_lines, line_in_cubic, line_space_total, restrict_to_line,
    LineEnumerator, LineRep,
};
pub use points::{count_points, count_singular, singular_points, ProjectivePoints};
pub use verify::{
    count_fano_by_formula, count_hilb2_points, count_sym2_points, verify_yfy_counting,
    zeta_sym_counts, VerificationReport, VerifyError,
};
