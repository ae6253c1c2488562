//! Ring-level constructions: projective spaces, blow-ups, and the rewriting
//! identities that express the variety of lines on a cubic hypersurface
//! through symmetric squares.

use thiserror::Error;

use super::class::VirtualClass;
use super::series::sym2;

/// Errors from operations that require honest (non-localized) classes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotivicError {
    /// The class has a term `L^k` with `k < 0`, so it is not in the image of
    /// the unlocalized ring and has no reduction mod `L`.
    #[error("class has a term with L-exponent {0}; reduction mod L needs all exponents >= 0")]
    NegativeLPower(i64),
}

/// `[P^n] = 1 + L + ... + L^n`.
pub fn projective_space(n: u32) -> VirtualClass {
    let mut c = VirtualClass::zero();
    for k in 0..=i64::from(n) {
        c += &VirtualClass::lefschetz(k);
    }
    c
}

/// The class of the blow-up of `x` along a center `z` of codimension
/// `c >= 1`: the center is replaced by a projective bundle with fiber
/// `P^{c-1}`, so the class is `x - z + [P^{c-1}] * z`.
pub fn blowup_class(x: &VirtualClass, z: &VirtualClass, c: u32) -> VirtualClass {
    assert!(c >= 1, "blow-up center must have positive codimension");
    &(x - z) + &(&projective_space(c - 1) * z)
}

/// The class of length-2 subschemes of a reduced hypersurface of dimension
/// `d` with singular-locus class `sing`:
/// `Sym^2(x) + ([P^{d-1}] - 1) * x + L^d * sing`.
///
/// Blowing up the symmetric square along the diagonal replaces each point by
/// the projectivized tangent space — `P^{d-1}` at a smooth point, `P^d` at a
/// singular one — which is where the two correction terms come from.
pub fn hilb2_class(x: &VirtualClass, d: u32, sing: &VirtualClass) -> VirtualClass {
    assert!(d >= 1, "hypersurface dimension must be at least 1");
    let smooth_fiber = &projective_space(d - 1) - &VirtualClass::one();
    &(&sym2(x) + &(&smooth_fiber * x)) + &sing.shift_l(i64::from(d))
}

/// The class of the variety of lines on a cubic `d`-fold, computed from the
/// rational defect `m_y = ([Y] - [P^d]) / L` and the singular-locus class:
/// `Sym^2(m_y + [P^{d-2}]) - L^{d-2} * (1 - sing)`.
pub fn fano_class_from_defect(m_y: &VirtualClass, d: u32, sing: &VirtualClass) -> VirtualClass {
    assert!(d >= 2, "the defect identity needs dimension at least 2");
    let shifted = m_y + &projective_space(d - 2);
    let correction = (&VirtualClass::one() - sing).shift_l(i64::from(d) - 2);
    &sym2(&shifted) - &correction
}

/// The multiplicities `a_0..a_{2d-4}` of the pure Lefschetz powers in the
/// smooth-case expansion of the variety of lines,
/// `[F] = Sym^2(M) + [P^{d-2}] * M + sum_k a_k L^k`:
/// the coefficients of `Sym^2([P^{d-2}]) - L^{d-2}`.
pub fn ak_coefficients(d: u32) -> Vec<i64> {
    assert!(d >= 2, "the expansion needs dimension at least 2");
    let d = i64::from(d);
    (0..=2 * d - 4)
        .map(|k| {
            if k < d - 2 {
                (k + 2) / 2
            } else if k == d - 2 {
                (d - 2) / 2
            } else {
                (2 * d - 2 - k) / 2
            }
        })
        .collect()
}

/// The image of a class in the quotient by `(L)`: drops every term with a
/// positive power of `L`. Fails if any term has a negative power (such a
/// class is not in the image of the unlocalized ring).
#[allow(non_snake_case)]
pub fn reduce_mod_L(a: &VirtualClass) -> Result<VirtualClass, MotivicError> {
    let mut out = VirtualClass::zero();
    for (&(l, ref m), &c) in a.terms() {
        if l < 0 {
            return Err(MotivicError::NegativeLPower(l));
        }
        if l == 0 {
            out.add_term(0, m.clone(), c);
        }
    }
    Ok(out)
}
