//! Cross-checks between the Hodge tables, the motivic expansion realized
//! in E-polynomials, and the closed Euler-characteristic formulas.

use num_bigint::BigInt;
use proptest::prelude::*;

use cubist_core::hodge::{
    cubic_hodge, e_polynomial, fano_hodge, hilb2_hodge, super_sym2, HodgeDiamond,
};
use cubist_core::motivic::{fano_class_from_defect, hilb2_class, projective_space, VirtualClass};
use cubist_core::realize::{
    chi_fano, indecomposability_report, psi_polynomial, Environment, IndecomposabilityVerdict,
    UnivariatePolynomial,
};

fn euler_at_one(e: &cubist_core::realize::EPolynomial) -> i64 {
    let one = BigInt::from(1);
    i64::try_from(e.eval(&one, &one)).expect("Euler characteristic fits in i64")
}

/// E-polynomial realization of a virtual class with `Y` assigned the
/// given table and the singular-locus symbol set to zero.
fn realize_epoly(class: &VirtualClass, y: &HodgeDiamond) -> cubist_core::realize::EPolynomial {
    let env = Environment::e_polynomial()
        .assign_polynomial("Y", e_polynomial(y))
        .assign_polynomial("S", cubist_core::realize::EPolynomial::zero());
    env.realize(class)
        .expect("the class realizes in E-polynomials")
        .as_polynomial()
        .expect("polynomial target yields a polynomial")
        .clone()
}

#[test]
fn line_variety_tables_are_symmetric_and_self_dual() {
    for d in 2..=8u32 {
        let f = fano_hodge(d);
        let middle = 2 * i64::from(d) - 4;
        assert!(f.is_symmetric(), "dimension {d}");
        assert!(f.is_self_dual(middle), "dimension {d}");
        assert_eq!(f.max_weight(), Some(2 * middle));
    }
}

#[test]
fn even_dimensional_cubics_have_no_odd_cohomology_on_lines() {
    for d in [2u32, 4, 6, 8] {
        let f = fano_hodge(d);
        for ((p, q), _) in f.entries() {
            assert_eq!((p + q).rem_euclid(2), 0, "odd-weight class at ({p},{q}) for d={d}");
        }
    }
}

#[test]
fn hodge_route_and_euler_formula_route_agree_on_line_varieties() {
    for d in 2..=8u32 {
        let chi_y = euler_at_one(&e_polynomial(&cubic_hodge(d)));
        let chi_f = euler_at_one(&e_polynomial(&fano_hodge(d)));
        assert_eq!(chi_f, chi_fano(chi_y, 0), "dimension {d}");
    }
}

#[test]
fn holomorphic_form_polynomials_of_line_varieties() {
    let psi3 = psi_polynomial(&e_polynomial(&fano_hodge(3)));
    assert_eq!(psi3, UnivariatePolynomial::from_coeffs([(0, 1), (1, 5), (2, 10)]));

    let psi4 = psi_polynomial(&e_polynomial(&fano_hodge(4)));
    assert_eq!(psi4, UnivariatePolynomial::from_coeffs([(0, 1), (2, 1), (4, 1)]));

    // No holomorphic forms at all in higher dimension.
    for d in 5..=8u32 {
        let psi = psi_polynomial(&e_polynomial(&fano_hodge(d)));
        assert_eq!(psi, UnivariatePolynomial::from_coeffs([(0, 1)]), "dimension {d}");
    }
}

/// The symbolic expansion of the defect formula, realized at the
/// E-polynomial of the cubic, reproduces the assembled Hodge table of
/// the variety of lines. This is the statement that the super
/// convention in the graded symmetric square and the plethysm rule of
/// the E-polynomial realization are the same operation.
#[test]
fn defect_expansion_realizes_to_the_line_variety_table() {
    for d in 2..=8u32 {
        let y = VirtualClass::atom("Y");
        let m_y = (&y - &projective_space(d)).shift_l(-1);
        let class = fano_class_from_defect(&m_y, d, &VirtualClass::zero());
        let realized = realize_epoly(&class, &cubic_hodge(d));
        assert_eq!(realized, e_polynomial(&fano_hodge(d)), "dimension {d}");
    }
}

#[test]
fn quartic_surface_square_table_equals_the_fourfold_line_variety() {
    // The two-point Hilbert scheme of a quartic surface and the variety
    // of lines on a cubic fourfold have identical dimension tables.
    let k3 = HodgeDiamond::from_entries([(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1)]);
    assert_eq!(hilb2_hodge(&k3, 2), fano_hodge(4));
}

#[test]
fn line_variety_tables_feed_the_product_detector() {
    let f3 = fano_hodge(3);
    let psi = psi_polynomial(&e_polynomial(&f3));
    let h11 = i64::try_from(f3.dim(1, 1)).unwrap();
    assert_eq!(h11, 25);
    let report = indecomposability_report(&psi, 3, Some(h11)).unwrap();
    assert_eq!(report.verdict, IndecomposabilityVerdict::NoProductStructure);
    assert_eq!(report.sym2_genus_candidate, Some(5));
    assert_eq!(report.expected_h11_for_candidate, Some(26));

    let f4 = fano_hodge(4);
    let psi = psi_polynomial(&e_polynomial(&f4));
    let report = indecomposability_report(&psi, 4, None).unwrap();
    assert_eq!(report.verdict, IndecomposabilityVerdict::NoProductStructure);
}

/// Independent oracle for the graded symmetric square: list the basis
/// vectors one by one and count unordered pairs, skipping the diagonal
/// pair of an odd-weight vector.
fn sym2_by_basis_enumeration(h: &HodgeDiamond) -> HodgeDiamond {
    let mut basis: Vec<(i64, i64)> = Vec::new();
    for ((p, q), dim) in h.entries() {
        for _ in 0..dim {
            basis.push((p, q));
        }
    }
    let mut out = HodgeDiamond::zero();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let (p1, q1) = basis[i];
            let (p2, q2) = basis[j];
            if i == j && (p1 + q1).rem_euclid(2) != 0 {
                continue;
            }
            out.add(p1 + p2, q1 + q2, 1);
        }
    }
    out
}

fn small_diamond() -> impl Strategy<Value = HodgeDiamond> {
    proptest::collection::vec(((0i64..4, 0i64..4), 0u64..6), 0..5)
        .prop_map(|entries| {
            HodgeDiamond::from_entries(entries.into_iter().map(|((p, q), d)| (p, q, d)))
        })
}

/// A symmetric diamond supported in a `(d+1) x (d+1)` square, as for a
/// smooth projective `d`-fold.
fn symmetric_diamond(d: u32) -> impl Strategy<Value = HodgeDiamond> {
    let n = i64::from(d);
    proptest::collection::vec(((0i64..=n, 0i64..=n), 0u64..5), 0..6).prop_map(move |entries| {
        let mut out = HodgeDiamond::zero();
        for ((p, q), dim) in entries {
            out.add(p, q, dim);
            if p != q {
                out.add(q, p, dim);
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graded_symmetric_square_matches_basis_enumeration(h in small_diamond()) {
        prop_assert_eq!(super_sym2(&h), sym2_by_basis_enumeration(&h));
    }

    #[test]
    fn pure_diamonds_have_binomial_square_dimensions(
        w in 0i64..5,
        dims in proptest::collection::vec(0u64..5, 1..4),
    ) {
        // Spread the dimensions along the line p + q = w.
        let mut h = HodgeDiamond::zero();
        for (p, &dim) in dims.iter().enumerate() {
            let p = i64::try_from(p).unwrap().min(w);
            h.add(p, w - p, dim);
        }
        let n = h.total_dim();
        let expected =
            if w.rem_euclid(2) == 0 { n * (n + 1) / 2 } else { n * n.saturating_sub(1) / 2 };
        prop_assert_eq!(super_sym2(&h).total_dim(), expected);
    }

    /// The motivic two-point identity realized in E-polynomials agrees
    /// with the Hodge-table assembly for arbitrary smooth-projective
    /// dimension tables, not only cubics.
    #[test]
    fn hilbert_square_assembly_matches_the_motivic_expansion(
        d in 1u32..5,
        h in symmetric_diamond(4),
    ) {
        let y = VirtualClass::atom("Y");
        let class = hilb2_class(&y, d, &VirtualClass::zero());
        let realized = realize_epoly(&class, &h);
        prop_assert_eq!(realized, e_polynomial(&hilb2_hodge(&h, d)));
    }
}
