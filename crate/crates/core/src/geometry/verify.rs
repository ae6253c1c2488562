//! Brute-force verification that the point counts of a cubic hypersurface,
//! its symmetric square, its Hilbert square, and its variety of lines
//! satisfy the counting identity
//!
//! ```text
//! #Hilb2(Y)(F_q) = #P^d(F_q) * #Y(F_q) + q^2 * #F(Y)(F_q)
//! ```
//!
//! for reduced cubics, together with the closed-form line count derived
//! from it. Everything here is exact integer arithmetic over literal
//! enumerations; nothing is sampled or approximated.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::cubic::CubicForm;
use super::field::{ExtField, Field, FieldError, PrimeField};
use super::lines::count_lines;
use super::points::{count_points, singular_points, ProjectivePoints};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("the form is not reduced; the counting identity applies to reduced cubics only")]
    NonReduced,
    #[error("line-count formula gave non-integral value {numerator}/{denominator}")]
    NonIntegral { numerator: i128, denominator: i128 },
    #[error("line-count formula gave negative value {0}")]
    NegativeCount(i128),
    #[error("symmetric-power counting is implemented up to order 3, got {0}")]
    UnsupportedOrder(u32),
}

/// Number of points of `P^n` over a field of `q` elements.
fn projective_count(q: u64, n: u32) -> u64 {
    let q = q as u128;
    let total = (q.pow(n + 1) - 1) / (q - 1);
    total as u64
}

/// Number of `F_q`-points of the symmetric square of the hypersurface,
/// counted literally: unordered pairs of `F_{q^2}`-points of the
/// hypersurface that are stable under the Frobenius swap. No closed form
/// is used; the identity `#Sym2 = (N_1^2 + N_2) / 2` is a theorem about
/// this count, checked in tests, not an input to it.
pub fn count_sym2_points(form: &CubicForm, field: &PrimeField) -> Result<u64, VerifyError> {
    let ext = ExtField::new(*field, 2)?;
    let compiled = form.compile(&ext);
    let points = ProjectivePoints::new(&ext, form.nvars());

    // canonical representatives of the F_{q^2}-points on the hypersurface
    let on_curve: Vec<Vec<<ExtField as Field>::E>> = (0..points.len())
        .filter_map(|index| {
            let x = points.decode(index);
            compiled.vanishes_at(&ext, &x).then_some(x)
        })
        .collect();

    // position lookup and the Frobenius permutation on those representatives
    let position: HashMap<&[<ExtField as Field>::E], u32> = on_curve
        .iter()
        .enumerate()
        .map(|(i, x)| (x.as_slice(), i as u32))
        .collect();
    let sigma: Vec<u32> = on_curve
        .iter()
        .map(|x| {
            let image = canonical_frobenius_image(&ext, x);
            position[image.as_slice()]
        })
        .collect();

    // literal enumeration of stable unordered pairs {i, j}, i <= j:
    // stable means the swap fixes the pair, i.e. {sigma(i), sigma(j)} = {i, j}
    let n = sigma.len();
    let count: u64 = (0..n)
        .into_par_iter()
        .with_min_len(16)
        .map(|i| {
            let si = sigma[i] as usize;
            let mut c = 0u64;
            for j in i..n {
                let sj = sigma[j] as usize;
                let stable = (si == i && sj == j) || (si == j && sj == i);
                c += u64::from(stable);
            }
            c
        })
        .sum();
    Ok(count)
}

/// Applies Frobenius coordinatewise and rescales so the first nonzero
/// coordinate is 1, landing back on a canonical representative.
fn canonical_frobenius_image(ext: &ExtField, x: &[<ExtField as Field>::E]) -> Vec<<ExtField as Field>::E> {
    let mut image: Vec<_> = x.iter().map(|&c| ext.frobenius(c)).collect();
    let lead = image
        .iter()
        .copied()
        .find(|&c| !ext.is_zero(c))
        .expect("projective point has a nonzero coordinate");
    let scale = ext.inv(lead);
    for c in image.iter_mut() {
        *c = ext.mul(*c, scale);
    }
    image
}

/// Number of `F_q`-points of the Hilbert square of a reduced hypersurface.
///
/// A length-2 subscheme over `F_q` is either a Frobenius-stable reduced
/// pair — counted by `count_sym2_points` minus its diagonal — or a
/// nonreduced length-2 scheme at a rational point `P`, parametrized by the
/// tangent directions at `P` inside the hypersurface: a `P^{d-1}` at a
/// smooth point, and all of `P^d` at a singular point of the hypersurface
/// (where the Zariski tangent space fills the ambient space).
pub fn count_hilb2_points(form: &CubicForm, field: &PrimeField) -> Result<u64, VerifyError> {
    if !form.is_reduced() {
        return Err(VerifyError::NonReduced);
    }
    let sym2 = count_sym2_points(form, field)?;
    let n1 = count_points(form, field);
    let n_singular = singular_points(form, field).len() as u64;
    Ok(hilb2_from_parts(sym2, n1, n_singular, field.p(), form.dim()))
}

fn hilb2_from_parts(sym2: u64, n1: u64, n_singular: u64, q: u64, d: u32) -> u64 {
    // #P^{d-1}, with the d = 0 case degenerating correctly to 0
    let smooth_directions = (q.pow(d) - 1) / (q - 1);
    sym2 - n1 + (n1 - n_singular) * smooth_directions + n_singular * projective_count(q, d)
}

/// Closed-form line count from the point counts of a reduced cubic:
///
/// ```text
/// #F(Y)(F_q) = (N_1^2 - 2(1 + q^d) N_1 + N_2 + 2 q^d N_s) / (2 q^2)
/// ```
///
/// where `N_m` counts points over `F_{q^m}` and `N_s` counts rational
/// singular points. Exact integer arithmetic; a non-integral or negative
/// value is an error (and, for a reduced cubic, evidence of a wrong input).
pub fn count_fano_by_formula(
    n1: u64,
    n2: u64,
    n_singular: u64,
    q: u64,
    d: u32,
) -> Result<u64, VerifyError> {
    let n1 = n1 as i128;
    let n2 = n2 as i128;
    let ns = n_singular as i128;
    let q = q as i128;
    let qd = q.pow(d);
    let numerator = n1 * n1 - 2 * (1 + qd) * n1 + n2 + 2 * qd * ns;
    let denominator = 2 * q * q;
    if numerator % denominator != 0 {
        return Err(VerifyError::NonIntegral { numerator, denominator });
    }
    let value = numerator / denominator;
    if value < 0 {
        return Err(VerifyError::NegativeCount(value));
    }
    Ok(value as u64)
}

/// Everything the brute-force verification of one cubic produces.
/// Contains only counts and booleans — no timing, no environment — so
/// reports are comparable across runs and parallelism settings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub dim: u32,
    pub p: u64,
    /// `#Y(F_q)`
    pub n1: u64,
    /// `#Y(F_{q^2})`
    pub n2: u64,
    /// rational singular points of `Y`
    pub n_singular: u64,
    /// `#Sym^2 Y(F_q)` by stable-pair enumeration
    pub sym2_points: u64,
    /// `#Hilb^2 Y(F_q)`
    pub hilb2_points: u64,
    /// lines on `Y` over `F_q` by exhaustive containment
    pub fano_lines: u64,
    /// lines on `Y` predicted from point counts alone
    pub fano_by_formula: u64,
    /// `#P^d(F_q) * N_1 + q^2 * fano_lines`
    pub expected_hilb2: u64,
    /// `sym2_points == (1 + q^d) N_1 + q^2 * fano_lines - q^d * N_s`
    pub sym2_matches_identity: bool,
    /// `fano_by_formula == fano_lines`
    pub formula_matches_lines: bool,
    /// `hilb2_points == expected_hilb2`
    pub holds: bool,
}

/// Runs the full battery on one reduced cubic: every count is computed by
/// literal enumeration, then the counting identities are checked against
/// each other.
pub fn verify_yfy_counting(form: &CubicForm, field: &PrimeField) -> Result<VerificationReport, VerifyError> {
    if !form.is_reduced() {
        return Err(VerifyError::NonReduced);
    }
    let q = field.p();
    let d = form.dim();
    let n1 = count_points(form, field);
    let ext2 = ExtField::new(*field, 2)?;
    let n2 = count_points(form, &ext2);
    let n_singular = singular_points(form, field).len() as u64;
    let sym2_points = count_sym2_points(form, field)?;
    let hilb2_points = hilb2_from_parts(sym2_points, n1, n_singular, q, d);
    let fano_lines = count_lines(form, field);
    let fano_by_formula = count_fano_by_formula(n1, n2, n_singular, q, d)?;
    let expected_hilb2 = projective_count(q, d) * n1 + q * q * fano_lines;
    let qd = (q as i128).pow(d);
    let sym2_matches_identity = sym2_points as i128
        == (1 + qd) * n1 as i128 + (q * q * fano_lines) as i128 - qd * n_singular as i128;
    let formula_matches_lines = fano_by_formula == fano_lines;
    let holds = hilb2_points == expected_hilb2;
    Ok(VerificationReport {
        dim: d,
        p: q,
        n1,
        n2,
        n_singular,
        sym2_points,
        hilb2_points,
        fano_lines,
        fano_by_formula,
        expected_hilb2,
        sym2_matches_identity,
        formula_matches_lines,
        holds,
    })
}

/// Point counts of the symmetric powers `Sym^n Y` for `n = 0 ..= order`
/// (at most 3), from the zeta-function recurrence
/// `n z_n = sum_{m=1..n} N_m z_{n-m}` — the coefficients of
/// `exp(sum N_m t^m / m)`, which are exactly `#Sym^n Y(F_q)`.
pub fn zeta_sym_counts(
    form: &CubicForm,
    field: &PrimeField,
    order: u32,
) -> Result<Vec<u64>, VerifyError> {
    if order > 3 {
        return Err(VerifyError::UnsupportedOrder(order));
    }
    let mut n_counts: Vec<u128> = Vec::new(); // N_1 .. N_order
    for m in 1..=order {
        let count = match m {
            1 => count_points(form, field),
            _ => count_points(form, &ExtField::new(*field, m)?),
        };
        n_counts.push(count as u128);
    }
    let mut z: Vec<u128> = vec![1];
    for n in 1..=order as usize {
        let total: u128 = (1..=n).map(|m| n_counts[m - 1] * z[n - m]).sum();
        debug_assert_eq!(total % n as u128, 0, "symmetric-power counts are integers");
        z.push(total / n as u128);
    }
    Ok(z.into_iter().map(|v| v as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn projective_counts() {
        assert_eq!(projective_count(2, 0), 1);
        assert_eq!(projective_count(2, 3), 15);
        assert_eq!(projective_count(3, 2), 13);
        assert_eq!(projective_count(5, 4), 781);
    }

    #[test]
    fn stable_pair_count_matches_the_pairing_formula() {
        // #Sym^2 = (N_1^2 + N_2) / 2, rederived here from the enumeration
        for (form, p) in [
            (CubicForm::fermat(1, 2).unwrap(), 2),
            (CubicForm::fermat(1, 5).unwrap(), 5),
            (CubicForm::node(1, 3).unwrap(), 3),
            (CubicForm::node(2, 3).unwrap(), 3),
        ] {
            let field = prime(p);
            let n1 = count_points(&form, &field);
            let n2 = count_points(&form, &ExtField::new(field, 2).unwrap());
            let sym2 = count_sym2_points(&form, &field).unwrap();
            assert_eq!(sym2, (n1 * n1 + n2) / 2);
        }
    }

    #[test]
    fn sym2_of_smooth_plane_cubics() {
        assert_eq!(count_sym2_points(&CubicForm::fermat(1, 2).unwrap(), &prime(2)).unwrap(), 9);
        assert_eq!(count_sym2_points(&CubicForm::fermat(1, 5).unwrap(), &prime(5)).unwrap(), 36);
    }

    #[test]
    fn hilb2_of_known_forms() {
        assert_eq!(count_hilb2_points(&CubicForm::fermat(2, 2).unwrap(), &prime(2)).unwrap(), 61);
        assert_eq!(count_hilb2_points(&CubicForm::node(2, 3).unwrap(), &prime(3)).unwrap(), 139);
    }

    #[test]
    fn non_reduced_forms_are_rejected() {
        // the Fermat cubic in characteristic 3 is a perfect cube
        let f = CubicForm::fermat(1, 3).unwrap();
        assert_eq!(count_hilb2_points(&f, &prime(3)), Err(VerifyError::NonReduced));
        assert_eq!(
            verify_yfy_counting(&f, &prime(3)).unwrap_err(),
            VerifyError::NonReduced
        );
        // the triple line
        let f = CubicForm::new(1, 2, [(vec![0, 0, 3], 1)]).unwrap();
        assert_eq!(count_hilb2_points(&f, &prime(2)), Err(VerifyError::NonReduced));
    }

    #[test]
    fn line_formula_on_the_fermat_threefold() {
        assert_eq!(count_fano_by_formula(15, 165, 0, 2, 3), Ok(15));
    }

    #[test]
    fn line_formula_rejects_impossible_counts() {
        assert!(matches!(
            count_fano_by_formula(1, 2, 0, 2, 1),
            Err(VerifyError::NonIntegral { .. })
        ));
        assert!(matches!(
            count_fano_by_formula(4, 0, 0, 2, 1),
            Err(VerifyError::NegativeCount(-1))
        ));
    }

    #[test]
    fn full_report_for_the_fermat_surface_over_f2() {
        let report = verify_yfy_counting(&CubicForm::fermat(2, 2).unwrap(), &prime(2)).unwrap();
        assert_eq!(
            report,
            VerificationReport {
                dim: 2,
                p: 2,
                n1: 7,
                n2: 45,
                n_singular: 0,
                sym2_points: 47,
                hilb2_points: 61,
                fano_lines: 3,
                fano_by_formula: 3,
                expected_hilb2: 61,
                sym2_matches_identity: true,
                formula_matches_lines: true,
                holds: true,
            }
        );
    }

    #[test]
    fn symmetric_power_counts_of_small_curves() {
        assert_eq!(
            zeta_sym_counts(&CubicForm::fermat(1, 2).unwrap(), &prime(2), 3).unwrap(),
            vec![1, 3, 9, 21]
        );
        assert_eq!(
            zeta_sym_counts(&CubicForm::node(1, 2).unwrap(), &prime(2), 3).unwrap(),
            vec![1, 2, 4, 8]
        );
        assert_eq!(
            zeta_sym_counts(&CubicForm::fermat(1, 2).unwrap(), &prime(2), 0).unwrap(),
            vec![1]
        );
        assert_eq!(
            zeta_sym_counts(&CubicForm::fermat(1, 2).unwrap(), &prime(2), 4),
            Err(VerifyError::UnsupportedOrder(4))
        );
    }

    #[test]
    fn symmetric_square_count_agrees_with_pair_enumeration() {
        let form = CubicForm::fermat(2, 2).unwrap();
        let field = prime(2);
        let z = zeta_sym_counts(&form, &field, 2).unwrap();
        assert_eq!(z[2], count_sym2_points(&form, &field).unwrap());
    }
}
