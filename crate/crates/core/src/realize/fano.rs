//! Closed consequences of the line-count relation at the level of Euler
//! characteristics, together with two diagnostic computations on the Fano
//! variety of lines: a product-structure (indecomposability) report driven
//! by its holomorphic column, and symmetric-power point counts truncated
//! from proposed Hasse–Weil data.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::env::RealizeError;
use super::poly::UnivariatePolynomial;

/// Euler characteristic of the variety of lines on a cubic hypersurface
/// with Euler characteristic `chi` and singular-locus Euler characteristic
/// `chi_sing`: specializing the line-count relation at the affine line
/// going to 1 gives `chi * (chi - 3) / 2 + chi_sing`, an integer for every
/// integer input because `n(n - 3)` is always even.
pub fn chi_fano(chi: i64, chi_sing: i64) -> i64 {
    let chi = i128::from(chi);
    let product = chi * (chi - 3) / 2 + i128::from(chi_sing);
    i64::try_from(product).expect("Euler characteristic fits in i64")
}

/// Euler characteristic of the real points of the variety of lines, from
/// the real and complex Euler characteristics of a cubic hypersurface of
/// dimension `d` and the real Euler characteristic of its singular locus.
///
/// Specializing the relation at the affine line going to -1 makes the sign
/// of the correction terms depend on the parity of `d`:
///
/// * `d` odd:  `(chi_r^2 + chi_c) / 2 - chi_r_sing`
/// * `d` even: `(chi_r * (chi_r - 4) + chi_c) / 2 + chi_r_sing`
///
/// Both numerators are even exactly when `chi_r` and `chi_c` have the same
/// parity, which holds for every actual variety; mismatched parities are
/// reported as an error.
pub fn chi_real_fano(
    chi_r: i64,
    chi_c: i64,
    d: u32,
    chi_r_sing: i64,
) -> Result<i64, RealizeError> {
    if (chi_r - chi_c) % 2 != 0 {
        return Err(RealizeError::ParityViolation { chi_r, chi_c });
    }
    let r = i128::from(chi_r);
    let c = i128::from(chi_c);
    let sing = i128::from(chi_r_sing);
    let value = if d % 2 == 1 {
        (r * r + c) / 2 - sing
    } else {
        (r * (r - 4) + c) / 2 + sing
    };
    Ok(i64::try_from(value).expect("Euler characteristic fits in i64"))
}

/// How the product-structure search came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndecomposabilityVerdict {
    /// Every candidate product structure is excluded.
    NoProductStructure,
    /// The data does not exclude a product structure.
    Inconclusive,
}

/// Result of testing the holomorphic column of the variety of lines for
/// compatibility with a product or symmetric-square structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndecomposabilityReport {
    /// Dimension of the cubic hypersurface (3 or 4).
    pub dimension: u32,
    /// The polynomial that was analyzed, printed.
    pub psi: String,
    /// Factor pairs `(1 + ... , 1 + ...)` that reproduce it, printed.
    pub factorizations: Vec<[String; 2]>,
    /// Genus `g` for which the polynomial matches the symmetric square of
    /// a genus-`g` curve (dimension 3 only).
    pub sym2_genus_candidate: Option<i64>,
    /// `g^2 + 1`, the middle Hodge number a symmetric square of a curve of
    /// that genus would force.
    pub expected_h11_for_candidate: Option<i64>,
    /// The actual middle Hodge number supplied by the caller, if any.
    pub actual_h11: Option<i64>,
    pub notes: Vec<String>,
    pub verdict: IndecomposabilityVerdict,
}

/// Tests whether the holomorphic column `psi` of the variety of lines on a
/// smooth cubic of dimension `d` (3 or 4) is compatible with a nontrivial
/// product structure.
///
/// For `d = 3` the candidates are products of two curve-like factors
/// `(1 + g t)(1 + g' t)` with nonnegative integer `g, g'`, plus the
/// symmetric square of a single curve; a genus candidate surviving the
/// coefficient match is then compared against the actual middle Hodge
/// number `h11` when the caller provides one. For `d = 4` the candidates
/// are products of two factors of degree at most 2 with nonnegative
/// integer coefficients and constant term 1.
pub fn indecomposability_report(
    psi: &UnivariatePolynomial,
    d: u32,
    h11: Option<i64>,
) -> Result<IndecomposabilityReport, RealizeError> {
    if d != 3 && d != 4 {
        return Err(RealizeError::UnsupportedDimension(d));
    }
    let max_degree = if d == 3 { 2 } else { 4 };
    let coeffs: Option<Vec<i64>> = (0..=max_degree)
        .map(|k| psi.coefficient(k).to_i64())
        .collect();
    let mut report = IndecomposabilityReport {
        dimension: d,
        psi: psi.to_string(),
        factorizations: Vec::new(),
        sym2_genus_candidate: None,
        expected_h11_for_candidate: None,
        actual_h11: h11,
        notes: Vec::new(),
        verdict: IndecomposabilityVerdict::NoProductStructure,
    };

    let degree_fits = psi.degree().unwrap_or(0) <= max_degree
        && psi.terms().all(|(&e, _)| e >= 0);
    let coeffs = match (degree_fits, coeffs) {
        (true, Some(c)) => c,
        _ => {
            report.notes.push(format!(
                "the polynomial has degree above {max_degree}, so it cannot be the \
                 holomorphic column of this variety of lines; no candidate matches"
            ));
            return Ok(report);
        }
    };

    if d == 3 {
        // (1 + g t)(1 + g' t) = 1 + (g + g') t + g g' t^2.
        let mut pairs = BTreeSet::new();
        if coeffs[0] == 1 {
            for g in 0..=coeffs[1].max(0) {
                let g_prime = coeffs[1] - g;
                if g <= g_prime && g.checked_mul(g_prime) == Some(coeffs[2]) {
                    pairs.insert((g, g_prime));
                }
            }
        }
        for (g, g_prime) in pairs {
            report.factorizations.push([
                UnivariatePolynomial::from_coeffs([(0i64, 1i64), (1, g)]).to_string(),
                UnivariatePolynomial::from_coeffs([(0i64, 1i64), (1, g_prime)]).to_string(),
            ]);
        }

        // 1 + g t + g(g-1)/2 t^2: the column of the symmetric square of a
        // genus-g curve.
        let g = coeffs[1];
        if coeffs[0] == 1 && g >= 0 && g * (g - 1) / 2 == coeffs[2] {
            report.sym2_genus_candidate = Some(g);
            let expected = g * g + 1;
            report.expected_h11_for_candidate = Some(expected);
            match h11 {
                Some(actual) if actual != expected => {
                    report.notes.push(format!(
                        "the symmetric square of a genus-{g} curve is excluded: it would \
                         have middle Hodge number {expected}, the actual value is {actual}"
                    ));
                }
                Some(_) => {
                    report.notes.push(format!(
                        "the middle Hodge number matches the symmetric square of a \
                         genus-{g} curve; the holomorphic data does not exclude it"
                    ));
                    report.verdict = IndecomposabilityVerdict::Inconclusive;
                }
                None => {
                    report.notes.push(format!(
                        "the column matches the symmetric square of a genus-{g} curve; \
                         supply the middle Hodge number to test it"
                    ));
                    report.verdict = IndecomposabilityVerdict::Inconclusive;
                }
            }
        }
    } else {
        // (1 + a t + b t^2)(1 + c t + e t^2), all coefficients nonnegative.
        let mut pairs = BTreeSet::new();
        if coeffs[0] == 1 {
            for a in 0..=coeffs[1].max(0) {
                let c = coeffs[1] - a;
                for b in 0..=(coeffs[2] - a * c).max(0) {
                    let e = coeffs[2] - a * c - b;
                    if e < 0 {
                        continue;
                    }
                    if a * e + b * c == coeffs[3] && b * e == coeffs[4] {
                        let left = (a, b);
                        let right = (c, e);
                        pairs.insert(if left <= right { (left, right) } else { (right, left) });
                    }
                }
            }
        }
        for ((a, b), (c, e)) in pairs {
            report.factorizations.push([
                UnivariatePolynomial::from_coeffs([(0i64, 1i64), (1, a), (2, b)]).to_string(),
                UnivariatePolynomial::from_coeffs([(0i64, 1i64), (1, c), (2, e)]).to_string(),
            ]);
        }
        report.notes.push(format!(
            "irregularity {} and geometric genus {}",
            coeffs[1], coeffs[2]
        ));
    }

    if !report.factorizations.is_empty() {
        let trivial_only = report
            .factorizations
            .iter()
            .all(|[left, right]| left.as_str() == "1" || right.as_str() == "1");
        if trivial_only {
            report.notes.push(
                "the only factorizations are trivial (one factor constant), so the \
                 polynomial alone cannot decide; verdict is inconclusive"
                    .to_string(),
            );
        }
        report.verdict = IndecomposabilityVerdict::Inconclusive;
    }
    Ok(report)
}

/// Symmetric-power point counts from proposed counts `N_1, ..., N_r` over
/// the fields of degrees `1, ..., r`: with `z_0 = 1`, the zeta-function
/// recurrence `n z_n = sum_{m=1}^{n} N_m z_{n-m}` determines the number of
/// points on each symmetric power. Returns `[z_1, ..., z_r]`.
///
/// Counts coming from an actual variety always divide evenly; proposed
/// counts that do not are rejected with the degree at which the recurrence
/// first fails. For example `N = (3, 5)` yields `[3, 7]` and
/// `N = (3, 5, 9)` yields `[3, 7, 15]`, while `N = (1, 2)` fails at
/// degree 2 because `(1 + 2) / 2` is not an integer.
pub fn hasse_weil_truncation(counts: &[i64]) -> Result<Vec<BigInt>, RealizeError> {
    let mut z: Vec<BigInt> = vec![BigInt::from(1)];
    for n in 1..=counts.len() {
        let mut total = BigInt::zero();
        for m in 1..=n {
            total += BigInt::from(counts[m - 1]) * &z[n - m];
        }
        let n_big = BigInt::from(n);
        if (&total % &n_big).is_zero() {
            z.push(total / n_big);
        } else {
            return Err(RealizeError::NonIntegralTruncation { degree: n });
        }
    }
    Ok(z.split_off(1))
}
