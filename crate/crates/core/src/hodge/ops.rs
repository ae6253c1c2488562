//! Hodge-theoretic counterparts of the motivic constructions.
//!
//! Everything here is a pure function on dimension tables. The one
//! genuinely graded ingredient is [`super_sym2`]: classes of odd weight
//! anticommute, so the symmetric square acts as an alternating square on
//! the odd part. That convention is forced by compatibility with the
//! E-polynomial realization, where odd-weight Hodge numbers enter with a
//! minus sign.

use num_bigint::BigInt;

use super::diamond::HodgeDiamond;
use crate::motivic::ak_coefficients;
use crate::realize::EPolynomial;

/// Binomial coefficient for small arguments.
fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut c: u64 = 1;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// Primitive middle cohomology of a smooth cubic hypersurface of
/// dimension `d`: pure of weight `d`, with
/// `h^{d-q,q} = C(d+2, 3q - d + 1)`.
///
/// Requires `d >= 1`.
pub fn primitive_hodge_cubic(d: u32) -> HodgeDiamond {
    assert!(d >= 1, "cubic hypersurfaces of dimension >= 1 only");
    let d = i64::from(d);
    let mut out = HodgeDiamond::zero();
    for q in 0..=d {
        out.add(d - q, q, binomial(d + 2, 3 * q - d + 1));
    }
    out
}

/// Full cohomology of a smooth cubic hypersurface of dimension `d`:
/// one Tate class `(k, k)` for `k = 0..=d`, plus the primitive middle
/// part from [`primitive_hodge_cubic`].
pub fn cubic_hodge(d: u32) -> HodgeDiamond {
    let mut out = primitive_hodge_cubic(d);
    for k in 0..=i64::from(d) {
        out.add(k, k, 1);
    }
    out
}

/// Twist by the inverse Tate object `Q(-k)`: shifts every bidegree by
/// `(k, k)`, so `k = 1` raises the weight by two and `k = -1` lowers it.
/// Twisting by `0` is the identity and twists compose additively.
pub fn tate_twist(h: &HodgeDiamond, k: i64) -> HodgeDiamond {
    h.twist(k)
}

/// Symmetric square of a weight-graded vector space with Hodge bigrading,
/// odd-weight classes anticommuting.
///
/// Unordered pairs of basis vectors from *distinct* bidegrees contribute
/// the product of dimensions at the summed bidegree. A single bidegree
/// `(p, q)` of dimension `h` contributes to `(2p, 2q)`:
/// `h(h+1)/2` if `p + q` is even, `h(h-1)/2` if odd.
pub fn super_sym2(h: &HodgeDiamond) -> HodgeDiamond {
    let entries: Vec<((i64, i64), u64)> = h.entries().collect();
    let mut out = HodgeDiamond::zero();
    for (i, &((p1, q1), h1)) in entries.iter().enumerate() {
        let diag = if (p1 + q1).rem_euclid(2) == 0 {
            h1 * (h1 + 1) / 2
        } else {
            h1 * (h1 - 1) / 2
        };
        out.add(2 * p1, 2 * q1, diag);
        for &((p2, q2), h2) in &entries[i + 1..] {
            out.add(p1 + p2, q1 + q2, h1 * h2);
        }
    }
    out
}

/// Hodge structure of the rational defect of a smooth cubic
/// hypersurface of dimension `d`: the primitive middle cohomology
/// Tate-twisted once, pure of weight `d - 2`.
///
/// This is the structure whose symmetric square drives the variety of
/// lines; for `d = 1` its bidegrees leave the first quadrant, which is
/// fine for a dimension table.
pub fn rational_defect_hodge(d: u32) -> HodgeDiamond {
    tate_twist(&primitive_hodge_cubic(d), -1)
}

/// Hodge structure of the Fano variety of lines on a smooth cubic
/// hypersurface of dimension `d >= 2`, assembled from the primitive
/// cohomology of the cubic exactly as the motivic defect formula
/// dictates:
///
/// `Sym^2(H) + sum_{k=0}^{d-2} H(-k) + sum_k Q(-k)^{a_k}`,
///
/// where `H` is the primitive middle cohomology Tate-twisted once
/// (pure of weight `d - 2`) and the `a_k` are the Lefschetz-power
/// coefficients shared with the motivic module.
pub fn fano_hodge(d: u32) -> HodgeDiamond {
    assert!(d >= 2, "the variety of lines requires dimension >= 2");
    let h = rational_defect_hodge(d);
    let mut out = super_sym2(&h);
    for k in 0..=i64::from(d) - 2 {
        out = out.plus(&tate_twist(&h, k));
    }
    for (k, a) in ak_coefficients(d).iter().enumerate() {
        let a = u64::try_from(*a).expect("Tate multiplicities are nonnegative");
        out.add(k as i64, k as i64, a);
    }
    out
}

/// Hodge structure of the Hilbert scheme of two points on a smooth
/// projective variety of dimension `d` with full cohomology table `h`:
///
/// `Sym^2(h) + sum_{k=1}^{d-1} h(-k)`.
pub fn hilb2_hodge(h: &HodgeDiamond, d: u32) -> HodgeDiamond {
    let mut out = super_sym2(h);
    for k in 1..i64::from(d) {
        out = out.plus(&tate_twist(h, k));
    }
    out
}

/// E-polynomial `sum (-1)^{p+q} h^{p,q} u^p v^q` of a dimension table.
pub fn e_polynomial(h: &HodgeDiamond) -> EPolynomial {
    let mut e = EPolynomial::zero();
    for ((p, q), dim) in h.entries() {
        let dim = i64::try_from(dim).expect("dimension fits in i64");
        let signed = if (p + q).rem_euclid(2) == 0 { dim } else { -dim };
        e.add_term(p, q, &BigInt::from(signed));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 1), 5);
        assert_eq!(binomial(5, 4), 5);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(6, 6), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(binomial(4, -1), 0);
    }

    #[test]
    fn primitive_part_of_a_cubic_threefold() {
        let h = primitive_hodge_cubic(3);
        assert_eq!(h.dim(2, 1), 5);
        assert_eq!(h.dim(1, 2), 5);
        assert_eq!(h.total_dim(), 10);
        assert!(h.is_pure_of_weight(3));
    }

    #[test]
    fn primitive_part_of_a_cubic_fourfold() {
        let h = primitive_hodge_cubic(4);
        assert_eq!(h.dim(3, 1), 1);
        assert_eq!(h.dim(2, 2), 20);
        assert_eq!(h.dim(1, 3), 1);
        assert_eq!(h.dim(4, 0), 0);
        assert_eq!(h.total_dim(), 22);
        assert!(h.is_pure_of_weight(4));
    }

    #[test]
    fn primitive_part_of_a_cubic_surface_and_curve() {
        let s = primitive_hodge_cubic(2);
        assert_eq!(s.dim(1, 1), 6);
        assert_eq!(s.total_dim(), 6);
        // A plane cubic is an elliptic curve.
        let c = primitive_hodge_cubic(1);
        assert_eq!(c.dim(1, 0), 1);
        assert_eq!(c.dim(0, 1), 1);
        assert_eq!(c.total_dim(), 2);
    }

    #[test]
    fn primitive_parts_are_symmetric_in_all_dimensions() {
        for d in 1..=9 {
            let h = primitive_hodge_cubic(d);
            assert!(h.is_symmetric(), "dimension {d}");
            assert!(h.is_pure_of_weight(i64::from(d)), "dimension {d}");
        }
    }

    #[test]
    fn full_cohomology_of_small_cubics() {
        let surface = cubic_hodge(2);
        assert_eq!(surface.betti(2), 7);
        assert_eq!(surface.euler_characteristic(), 9);

        let threefold = cubic_hodge(3);
        assert_eq!(threefold.betti(3), 10);
        assert_eq!(threefold.euler_characteristic(), -6);

        let fourfold = cubic_hodge(4);
        assert_eq!(fourfold.betti(4), 23);
        assert_eq!(fourfold.dim(2, 2), 21);
        assert_eq!(fourfold.euler_characteristic(), 27);
    }

    #[test]
    fn tate_twists_shift_and_compose() {
        let h = primitive_hodge_cubic(3);
        assert_eq!(tate_twist(&h, 0), h);
        let down = tate_twist(&h, -1);
        assert!(down.is_pure_of_weight(1));
        assert_eq!(down.dim(1, 0), 5);
        assert_eq!(tate_twist(&tate_twist(&h, 2), 1), tate_twist(&h, 3));
        assert_eq!(tate_twist(&down, 1), h);
    }

    #[test]
    fn rational_defect_structures_are_pure_of_low_weight() {
        for d in 2..=8 {
            let h = rational_defect_hodge(d);
            assert!(h.is_pure_of_weight(i64::from(d) - 2), "dimension {d}");
            assert!(h.is_symmetric(), "dimension {d}");
            assert_eq!(h, tate_twist(&primitive_hodge_cubic(d), -1));
        }
        let threefold = rational_defect_hodge(3);
        assert_eq!(threefold.dim(1, 0), 5);
        assert_eq!(threefold.dim(0, 1), 5);
        let surface = rational_defect_hodge(2);
        assert_eq!(surface.dim(0, 0), 6);
    }

    #[test]
    fn symmetric_square_of_an_odd_weight_table() {
        // Ten odd classes split five/five across (1,0) and (0,1).
        let h = HodgeDiamond::from_entries([(1, 0, 5), (0, 1, 5)]);
        let s = super_sym2(&h);
        assert_eq!(s.dim(2, 0), 10);
        assert_eq!(s.dim(1, 1), 25);
        assert_eq!(s.dim(0, 2), 10);
        assert_eq!(s.total_dim(), 45);
    }

    #[test]
    fn symmetric_square_of_an_even_weight_table() {
        let h = HodgeDiamond::from_entries([(2, 0, 1), (1, 1, 20), (0, 2, 1)]);
        let s = super_sym2(&h);
        assert_eq!(s.dim(4, 0), 1);
        assert_eq!(s.dim(3, 1), 20);
        assert_eq!(s.dim(2, 2), 211);
        assert_eq!(s.dim(1, 3), 20);
        assert_eq!(s.dim(0, 4), 1);
        assert!(s.is_symmetric());
    }

    #[test]
    fn symmetric_square_of_zero_is_zero() {
        assert!(super_sym2(&HodgeDiamond::zero()).is_zero());
    }

    #[test]
    fn lines_on_a_cubic_threefold() {
        let f = fano_hodge(3);
        // Row by row: 1 / 5 5 / 10 25 10 / 5 5 / 1.
        assert_eq!(f.dim(0, 0), 1);
        assert_eq!(f.dim(1, 0), 5);
        assert_eq!(f.dim(0, 1), 5);
        assert_eq!(f.dim(2, 0), 10);
        assert_eq!(f.dim(1, 1), 25);
        assert_eq!(f.dim(0, 2), 10);
        assert_eq!(f.dim(2, 1), 5);
        assert_eq!(f.dim(1, 2), 5);
        assert_eq!(f.dim(2, 2), 1);
        assert_eq!(f.total_dim(), 1 + 10 + 45 + 10 + 1);
        assert_eq!(f.euler_characteristic(), 27);
    }

    #[test]
    fn lines_on_a_cubic_fourfold() {
        let f = fano_hodge(4);
        // The middle row of the hyperkähler fourfold.
        assert_eq!(f.dim(4, 0), 1);
        assert_eq!(f.dim(3, 1), 21);
        assert_eq!(f.dim(2, 2), 232);
        assert_eq!(f.dim(1, 3), 21);
        assert_eq!(f.dim(0, 4), 1);
        assert_eq!(f.betti(2), 23);
        assert_eq!(f.betti(4), 276);
        assert_eq!(f.betti(6), 23);
        assert_eq!(f.betti(0), 1);
        assert_eq!(f.betti(8), 1);
        assert_eq!(f.betti(1), 0);
        assert_eq!(f.betti(3), 0);
        assert_eq!(f.euler_characteristic(), 324);
    }

    #[test]
    fn lines_on_a_cubic_surface() {
        // Twenty-seven points, all in degree zero.
        let f = fano_hodge(2);
        assert_eq!(f.dim(0, 0), 27);
        assert_eq!(f.total_dim(), 27);
    }

    #[test]
    fn two_point_hilbert_scheme_of_a_curve() {
        let g = 5u64;
        let c = HodgeDiamond::from_entries([(0, 0, 1), (1, 0, g), (0, 1, g), (1, 1, 1)]);
        let h = hilb2_hodge(&c, 1);
        assert_eq!(h.dim(1, 0), g);
        assert_eq!(h.dim(2, 0), g * (g - 1) / 2);
        assert_eq!(h.dim(1, 1), g * g + 1);
        assert_eq!(h.dim(2, 1), g);
        assert_eq!(h.dim(2, 2), 1);
    }

    #[test]
    fn two_point_hilbert_scheme_of_a_surface() {
        // q = 2, p_g = 3 with an arbitrary interior.
        let (q, pg) = (2u64, 3u64);
        let s = HodgeDiamond::from_entries([
            (0, 0, 1),
            (1, 0, q),
            (0, 1, q),
            (2, 0, pg),
            (1, 1, 7),
            (0, 2, pg),
            (2, 1, q),
            (1, 2, q),
            (2, 2, 1),
        ]);
        let h = hilb2_hodge(&s, 2);
        assert_eq!(h.dim(1, 0), q);
        assert_eq!(h.dim(2, 0), pg + q * (q - 1) / 2);
    }

    #[test]
    fn two_point_hilbert_scheme_of_a_quartic_surface() {
        // Trivial canonical class, irregularity zero.
        let k3 = HodgeDiamond::from_entries([(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1)]);
        let h = hilb2_hodge(&k3, 2);
        assert_eq!(h.dim(2, 0), 1);
        assert_eq!(h.betti(2), 23);
        assert_eq!(h.betti(1), 0);
        assert_eq!(h.dim(1, 1), 21);
    }

    #[test]
    fn e_polynomial_signs_follow_weight_parity() {
        let e = e_polynomial(&cubic_hodge(3));
        assert_eq!(e.coefficient(2, 1), BigInt::from(-5));
        assert_eq!(e.coefficient(1, 1), BigInt::from(1));
        let one = BigInt::from(1);
        assert_eq!(e.eval(&one, &one), BigInt::from(-6));
        assert!(e_polynomial(&HodgeDiamond::zero()).is_zero());
    }
}
