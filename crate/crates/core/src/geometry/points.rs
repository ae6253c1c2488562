//! Enumeration of projective points over a finite field, point counting on
//! a cubic hypersurface, and its singular locus over the base field.
//!
//! Projective points are enumerated through canonical representatives: the
//! first nonzero coordinate is 1. Representatives are indexed in blocks by
//! pivot position, so counting loops parallelize by integer range and
//! results are independent of the parallelism degree (each index maps to a
//! fixed point, and the counts are integer sums).

use rayon::prelude::*;

use super::cubic::CubicForm;
use super::field::{Field, PrimeField};

/// Indexed canonical representatives of projective space over a finite
/// field: block `i` holds points whose first nonzero coordinate (a 1) is at
/// position `i`, with the remaining `nvars - 1 - i` free coordinates encoded
/// as base-`q` digits (rightmost coordinate least significant).
pub struct ProjectivePoints<'f, F: Field> {
    field: &'f F,
    nvars: usize,
    block_start: Vec<u64>,
}

impl<'f, F: Field> ProjectivePoints<'f, F> {
    pub fn new(field: &'f F, nvars: usize) -> Self {
        let q = field.size();
        let mut block_start = Vec::with_capacity(nvars + 1);
        let mut total = 0u64;
        for i in 0..nvars {
            block_start.push(total);
            let free = (nvars - 1 - i) as u32;
            total += q.pow(free);
        }
        block_start.push(total);
        ProjectivePoints { field, nvars, block_start }
    }

    /// Number of points, `q^{n-1} + ... + q + 1` for `n = nvars`.
    pub fn len(&self) -> u64 {
        *self.block_start.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Writes the canonical representative of point `index` into `buf`
    /// (length `nvars`).
    pub fn decode_into(&self, index: u64, buf: &mut [F::E]) {
        debug_assert_eq!(buf.len(), self.nvars);
        let pivot = match self.block_start.binary_search(&index) {
            Ok(i) if i + 1 < self.block_start.len() => i,
            Ok(i) => i - 1, // index == total can't happen for valid indices
            Err(i) => i - 1,
        };
        let q = self.field.size();
        let mut rest = index - self.block_start[pivot];
        for slot in buf[..pivot].iter_mut() {
            *slot = self.field.zero();
        }
        buf[pivot] = self.field.one();
        for j in (pivot + 1..self.nvars).rev() {
            buf[j] = self.field.element(rest % q);
            rest /= q;
        }
        debug_assert_eq!(rest, 0);
    }

    pub fn decode(&self, index: u64) -> Vec<F::E> {
        let mut buf = vec![self.field.zero(); self.nvars];
        self.decode_into(index, &mut buf);
        buf
    }
}

/// Number of points of the hypersurface over the given field (which must
/// have the same characteristic as the form's base field).
pub fn count_points<F: Field>(form: &CubicForm, field: &F) -> u64 {
    let compiled = form.compile(field);
    let points = ProjectivePoints::new(field, form.nvars());
    let total = usize::try_from(points.len()).expect("point count fits in usize");
    (0..total)
        .into_par_iter()
        .with_min_len(1024)
        .map_init(
            || vec![field.zero(); form.nvars()],
            |buf, index| {
                points.decode_into(index as u64, buf);
                u64::from(compiled.vanishes_at(field, buf))
            },
        )
        .sum()
}

/// Points where the form and all of its partial derivatives vanish, as
/// canonical representatives over the prime field, in enumeration order.
///
/// The form itself is part of the test: in characteristic 3 the cube terms
/// contribute nothing to any partial derivative, so the partials alone can
/// vanish at a point not on the hypersurface.
pub fn singular_points(form: &CubicForm, field: &PrimeField) -> Vec<Vec<u64>> {
    let compiled = form.compile(field);
    let partials = form.compile_partials(field);
    let points = ProjectivePoints::new(field, form.nvars());
    let total = usize::try_from(points.len()).expect("point count fits in usize");
    (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let x = points.decode(index as u64);
            let singular = compiled.vanishes_at(field, &x)
                && partials.iter().all(|d| d.vanishes_at(field, &x));
            singular.then_some(x)
        })
        .collect()
}

/// Number of singular points over any field of matching characteristic
/// (used for the smoothness proxy over `F_{p^2}`).
pub fn count_singular<F: Field>(form: &CubicForm, field: &F) -> u64 {
    let compiled = form.compile(field);
    let partials = form.compile_partials(field);
    let points = ProjectivePoints::new(field, form.nvars());
    let total = usize::try_from(points.len()).expect("point count fits in usize");
    (0..total)
        .into_par_iter()
        .with_min_len(256)
        .map_init(
            || vec![field.zero(); form.nvars()],
            |buf, index| {
                points.decode_into(index as u64, buf);
                let singular = compiled.vanishes_at(field, buf)
                    && partials.iter().all(|d| d.vanishes_at(field, buf));
                u64::from(singular)
            },
        )
        .sum()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::super::field::ExtField;
    use super::*;

    #[test]
    fn representative_counts_match_the_closed_form() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(ProjectivePoints::new(&f2, 4).len(), 15);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(ProjectivePoints::new(&f5, 3).len(), 31);
        let f4 = ExtField::new(f2, 2).unwrap();
        assert_eq!(ProjectivePoints::new(&f4, 3).len(), 21);
    }

    #[test]
    fn representatives_are_distinct_and_canonical() {
        let field = PrimeField::new(3).unwrap();
        let points = ProjectivePoints::new(&field, 4);
        let mut seen = HashSet::new();
        for index in 0..points.len() {
            let x = points.decode(index);
            let lead = x.iter().position(|&c| c != 0).expect("nonzero point");
            assert_eq!(x[lead], 1, "first nonzero coordinate is 1");
            assert!(seen.insert(x), "representatives must be distinct");
        }
        assert_eq!(seen.len(), 40);
    }

    #[test]
    fn extension_field_representatives_are_distinct() {
        let base = PrimeField::new(2).unwrap();
        let field = ExtField::new(base, 2).unwrap();
        let points = ProjectivePoints::new(&field, 3);
        let mut seen = HashSet::new();
        for index in 0..points.len() {
            let x = points.decode(index);
            let lead = x.iter().position(|&c| c != field.zero()).unwrap();
            assert_eq!(x[lead], field.one());
            assert!(seen.insert(x));
        }
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn fermat_plane_curve_point_counts() {
        let f = CubicForm::fermat(1, 2).unwrap();
        let field = PrimeField::new(2).unwrap();
        assert_eq!(count_points(&f, &field), 3);
        let ext = ExtField::new(field, 2).unwrap();
        assert_eq!(count_points(&f, &ext), 9);
    }

    #[test]
    fn smooth_fermat_surface_has_no_singular_points() {
        let f = CubicForm::fermat(2, 2).unwrap();
        let field = PrimeField::new(2).unwrap();
        assert!(singular_points(&f, &field).is_empty());
        assert_eq!(count_singular(&f, &field), 0);
        let ext = ExtField::new(field, 2).unwrap();
        assert_eq!(count_singular(&f, &ext), 0);
    }

    #[test]
    fn node_surface_singular_locus_contains_the_node() {
        for p in [2, 3, 5, 7] {
            let f = CubicForm::node(2, p).unwrap();
            let field = PrimeField::new(p).unwrap();
            let singular = singular_points(&f, &field);
            assert!(
                singular.contains(&vec![0, 0, 0, 1]),
                "the designed node is singular over F_{p}"
            );
        }
    }

    #[test]
    fn node_surface_singular_counts_by_characteristic() {
        // the dimension-2 form has exactly one rational singular point except
        // over F_5, where a second one appears
        let expected = [(2, 1), (3, 1), (5, 2), (7, 1)];
        for (p, count) in expected {
            let f = CubicForm::node(2, p).unwrap();
            let field = PrimeField::new(p).unwrap();
            assert_eq!(singular_points(&f, &field).len() as u64, count, "p = {p}");
        }
    }

    #[test]
    fn triple_line_is_singular_everywhere_on_itself() {
        // x_2^3 over F_2: the singular locus is the whole line x_2 = 0
        let f = CubicForm::new(1, 2, [(vec![0, 0, 3], 1)]).unwrap();
        let field = PrimeField::new(2).unwrap();
        let singular = singular_points(&f, &field);
        assert_eq!(singular, vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 0]]);
    }

    #[test]
    fn characteristic_three_singularity_needs_the_form_itself() {
        // over F_3 the Fermat plane cubic is (x_0 + x_1 + x_2)^3: every
        // partial derivative vanishes identically, so dropping the f = 0
        // condition would call all 13 points of the plane singular
        let f = CubicForm::fermat(1, 3).unwrap();
        let field = PrimeField::new(3).unwrap();
        let singular = singular_points(&f, &field);
        assert_eq!(singular.len(), 4, "exactly the points of the line x_0 + x_1 + x_2 = 0");
        assert_eq!(count_points(&f, &field), 4);
    }

    #[test]
    fn seeded_smooth_draws_pass_the_proxy() {
        let f = CubicForm::random_smooth(1, 5, 1).unwrap();
        let field = PrimeField::new(5).unwrap();
        assert_eq!(count_singular(&f, &field), 0);
        let ext = ExtField::new(field, 2).unwrap();
        assert_eq!(count_singular(&f, &ext), 0);
        assert!(f.is_reduced());
    }
}
