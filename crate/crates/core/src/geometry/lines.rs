//! Enumeration of projective lines over a finite field and exact line
//! containment in a cubic hypersurface.
//!
//! Lines are 2-dimensional linear subspaces, represented by the reduced
//! row-echelon basis of a 2 x nvars matrix: pivot columns `j1 < j2`, row 1
//! has a 1 at `j1` and a 0 at `j2`, row 2 leads with a 1 at `j2`. Every
//! line has exactly one such basis, and the bases are indexed in blocks by
//! pivot pair, so enumeration parallelizes by integer range.
//!
//! Containment is decided exactly: substituting the parametrized line
//! `s*u + t*v` into the cubic gives a binary cubic in `(s, t)` whose four
//! coefficients are expanded symbolically and tested for vanishing. Testing
//! sample points of the line instead is wrong over `F_2`, where a nonzero
//! binary cubic can vanish at all three points of the projective line.

use rayon::prelude::*;

use super::cubic::{CompiledCubic, CubicForm};
use super::field::Field;

/// Reduced row-echelon basis of a line (two rows of length nvars).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRep<E> {
    pub basis: [Vec<E>; 2],
}

struct Block {
    j1: usize,
    j2: usize,
    start: u64,
    free2: u32,
}

/// Indexed reduced-echelon bases of all lines in projective space.
pub struct LineEnumerator<'f, F: Field> {
    field: &'f F,
    nvars: usize,
    blocks: Vec<Block>,
    total: u64,
}

impl<'f, F: Field> LineEnumerator<'f, F> {
    pub fn new(field: &'f F, nvars: usize) -> Self {
        assert!(nvars >= 2, "lines need at least two coordinates");
        let q = field.size();
        let mut blocks = Vec::new();
        let mut total = 0u64;
        for j1 in 0..nvars {
            for j2 in j1 + 1..nvars {
                // row 1 varies in columns > j1 except j2; row 2 in columns > j2
                let free1 = (nvars - j1 - 2) as u32;
                let free2 = (nvars - j2 - 1) as u32;
                blocks.push(Block { j1, j2, start: total, free2 });
                total += q.pow(free1) * q.pow(free2);
            }
        }
        LineEnumerator { field, nvars, blocks, total }
    }

    /// Number of lines: the Gaussian binomial `[nvars, 2]_q`.
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Decodes line `index` into its canonical basis.
    pub fn decode(&self, index: u64) -> LineRep<F::E> {
        debug_assert!(index < self.total);
        let pos = self.blocks.partition_point(|b| b.start <= index);
        let block = &self.blocks[pos - 1];
        let q = self.field.size();
        let span2 = q.pow(block.free2);
        let mut r1 = (index - block.start) / span2;
        let mut r2 = (index - block.start) % span2;
        let mut row1 = vec![self.field.zero(); self.nvars];
        let mut row2 = vec![self.field.zero(); self.nvars];
        row1[block.j1] = self.field.one();
        row2[block.j2] = self.field.one();
        for j in (block.j1 + 1..self.nvars).rev() {
            if j == block.j2 {
                continue;
            }
            row1[j] = self.field.element(r1 % q);
            r1 /= q;
        }
        for j in (block.j2 + 1..self.nvars).rev() {
            row2[j] = self.field.element(r2 % q);
            r2 /= q;
        }
        debug_assert_eq!(r1, 0);
        debug_assert_eq!(r2, 0);
        LineRep { basis: [row1, row2] }
    }
}

/// Closed form for the number of lines in projective space with `nvars`
/// coordinates over a field of `q` elements:
/// `(q^nvars - 1)(q^{nvars-1} - 1) / ((q^2 - 1)(q - 1))`.
pub fn line_space_total(q: u64, nvars: u32) -> u64 {
    assert!(nvars >= 2);
    let q = q as u128;
    let num = (q.pow(nvars) - 1) * (q.pow(nvars - 1) - 1);
    let den = (q * q - 1) * (q - 1);
    debug_assert_eq!(num % den, 0);
    (num / den) as u64
}

/// Coefficients `[a_0, a_1, a_2, a_3]` of the binary cubic
/// `f(s*u + t*v) = a_0 s^3 + a_1 s^2 t + a_2 s t^2 + a_3 t^3`,
/// expanded exactly term by term (each of a term's three variable picks
/// chooses the `u` or the `v` coordinate).
pub fn restrict_to_line<F: Field>(
    compiled: &CompiledCubic<F>,
    field: &F,
    u: &[F::E],
    v: &[F::E],
) -> [F::E; 4] {
    let mut acc = [field.zero(); 4];
    for &(c, picks) in compiled.terms() {
        for mask in 0u32..8 {
            let mut prod = c;
            for (b, &pick) in picks.iter().enumerate() {
                let coord = if mask >> b & 1 == 1 { v } else { u };
                prod = field.mul(prod, coord[pick as usize]);
            }
            let t_degree = mask.count_ones() as usize;
            acc[t_degree] = field.add(acc[t_degree], prod);
        }
    }
    acc
}

/// Whether the line spanned by `u` and `v` lies on the cubic.
pub fn line_in_cubic<F: Field>(
    compiled: &CompiledCubic<F>,
    field: &F,
    u: &[F::E],
    v: &[F::E],
) -> bool {
    restrict_to_line(compiled, field, u, v)
        .into_iter()
        .all(|a| field.is_zero(a))
}

/// Canonical bases of all lines contained in the hypersurface, in
/// enumeration order.
pub fn enumerate_lines<F: Field>(form: &CubicForm, field: &F) -> Vec<LineRep<F::E>> {
    let compiled = form.compile(field);
    let lines = LineEnumerator::new(field, form.nvars());
    let total = usize::try_from(lines.len()).expect("line count fits in usize");
    (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let rep = lines.decode(index as u64);
            line_in_cubic(&compiled, field, &rep.basis[0], &rep.basis[1]).then_some(rep)
        })
        .collect()
}

/// Number of lines contained in the hypersurface.
pub fn count_lines<F: Field>(form: &CubicForm, field: &F) -> u64 {
    let compiled = form.compile(field);
    let lines = LineEnumerator::new(field, form.nvars());
    let total = usize::try_from(lines.len()).expect("line count fits in usize");
    (0..total)
        .into_par_iter()
        .with_min_len(256)
        .map(|index| {
            let rep = lines.decode(index as u64);
            u64::from(line_in_cubic(&compiled, field, &rep.basis[0], &rep.basis[1]))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::super::field::{ExtField, PrimeField};
    use super::*;

    /// Independently computed line totals for small parameters.
    const LINE_TOTALS: [(u64, u32, u64); 8] = [
        (2, 4, 35),
        (3, 4, 130),
        (5, 4, 806),
        (7, 4, 2850),
        (2, 5, 155),
        (5, 5, 20306),
        (2, 6, 651),
        (3, 6, 11011),
    ];

    #[test]
    fn line_totals_match_the_closed_form() {
        for (q, nvars, expected) in LINE_TOTALS {
            assert_eq!(line_space_total(q, nvars), expected, "q = {q}, nvars = {nvars}");
            let field = PrimeField::new(q).unwrap();
            let enumerator = LineEnumerator::new(&field, nvars as usize);
            assert_eq!(enumerator.len(), expected, "q = {q}, nvars = {nvars}");
        }
    }

    #[test]
    fn extension_field_line_total() {
        let base = PrimeField::new(2).unwrap();
        let f4 = ExtField::new(base, 2).unwrap();
        let enumerator = LineEnumerator::new(&f4, 4);
        assert_eq!(enumerator.len(), line_space_total(4, 4));
        assert_eq!(enumerator.len(), 357);
    }

    #[test]
    fn decoded_bases_are_distinct_and_echelon() {
        let field = PrimeField::new(3).unwrap();
        let enumerator = LineEnumerator::new(&field, 4);
        let mut seen = HashSet::new();
        for index in 0..enumerator.len() {
            let rep = enumerator.decode(index);
            let [row1, row2] = &rep.basis;
            let j1 = row1.iter().position(|&c| c != 0).unwrap();
            let j2 = row2.iter().position(|&c| c != 0).unwrap();
            assert!(j1 < j2, "pivot columns are ordered");
            assert_eq!(row1[j1], 1);
            assert_eq!(row2[j2], 1);
            assert_eq!(row1[j2], 0, "row 1 vanishes at the second pivot");
            assert!(seen.insert(rep.basis.clone()), "bases must be distinct");
        }
        assert_eq!(seen.len(), 130);
    }

    #[test]
    fn restriction_expands_the_binary_cubic() {
        // f = x_0^3 + x_1^3 restricted to the span of e_0, e_1 is s^3 + t^3
        let f = CubicForm::fermat(0, 5).unwrap();
        let field = PrimeField::new(5).unwrap();
        let compiled = f.compile(&field);
        let coeffs = restrict_to_line(&compiled, &field, &[1, 0], &[0, 1]);
        assert_eq!(coeffs, [1, 0, 0, 1]);
        // on u = (1, 2), v = (0, 3): (s + 0)^3 + (2s + 3t)^3
        //   = s^3 + 8s^3 + 36 s^2 t + 54 s t^2 + 27 t^3
        //   = 4 s^3 + s^2 t + 4 s t^2 + 2 t^3 over F_5
        let coeffs = restrict_to_line(&compiled, &field, &[1, 2], &[0, 3]);
        assert_eq!(coeffs, [4, 1, 4, 2]);
    }

    #[test]
    fn fermat_surface_contains_a_classical_line() {
        // over F_7, -1 is a cube root of -1: the line through (1, 6, 0, 0)
        // and (0, 0, 1, 6) lies on the Fermat surface
        let f = CubicForm::fermat(2, 7).unwrap();
        let field = PrimeField::new(7).unwrap();
        let compiled = f.compile(&field);
        assert!(line_in_cubic(&compiled, &field, &[1, 6, 0, 0], &[0, 0, 1, 6]));
        assert!(!line_in_cubic(&compiled, &field, &[1, 0, 0, 0], &[0, 0, 1, 6]));
        let found = enumerate_lines(&f, &field);
        assert!(found.contains(&LineRep { basis: [vec![1, 6, 0, 0], vec![0, 0, 1, 6]] }));
    }

    #[test]
    fn point_sampling_is_not_containment_over_f2() {
        // f = x_0 x_1 (x_0 + x_1): every F_2-point of the line x_2 = 0
        // satisfies f, but the line is not on the curve — its restriction
        // is the nonzero binary cubic s^2 t + s t^2
        let f = CubicForm::new(1, 2, [(vec![2, 1, 0], 1), (vec![1, 2, 0], 1)]).unwrap();
        let field = PrimeField::new(2).unwrap();
        let compiled = f.compile(&field);
        let (u, v) = ([1, 0, 0], [0, 1, 0]);
        for point in [[1, 0, 0], [0, 1, 0], [1, 1, 0]] {
            assert!(compiled.vanishes_at(&field, &point));
        }
        assert_eq!(restrict_to_line(&compiled, &field, &u, &v), [0, 1, 1, 0]);
        assert!(!line_in_cubic(&compiled, &field, &u, &v));
    }

    /// Vanishing at every rational point of a line, the test that fails
    /// over F_2 above.
    fn vanishes_on_sampled_points<F: super::super::field::Field>(
        compiled: &CompiledCubic<F>,
        field: &F,
        u: &[F::E],
        v: &[F::E],
    ) -> bool {
        let n = u.len();
        for t in 0..field.size() {
            let te = field.element(t);
            let point: Vec<F::E> =
                (0..n).map(|i| field.add(u[i], field.mul(te, v[i]))).collect();
            if !compiled.vanishes_at(field, &point) {
                return false;
            }
        }
        compiled.vanishes_at(field, v)
    }

    #[test]
    fn sampling_agrees_with_exact_containment_for_larger_fields() {
        // a binary cubic with more than three projective zeros is zero, so
        // for q >= 3 sampling and exact containment coincide on every line
        for (form, p) in [
            (CubicForm::fermat(2, 5).unwrap(), 5),
            (CubicForm::node(2, 3).unwrap(), 3),
        ] {
            let field = PrimeField::new(p).unwrap();
            let compiled = form.compile(&field);
            let enumerator = LineEnumerator::new(&field, form.nvars());
            for index in 0..enumerator.len() {
                let rep = enumerator.decode(index);
                let [u, v] = &rep.basis;
                assert_eq!(
                    line_in_cubic(&compiled, &field, u, v),
                    vanishes_on_sampled_points(&compiled, &field, u, v),
                );
            }
        }
    }

    #[test]
    fn fermat_surface_line_counts() {
        let field2 = PrimeField::new(2).unwrap();
        assert_eq!(count_lines(&CubicForm::fermat(2, 2).unwrap(), &field2), 3);
        let field7 = PrimeField::new(7).unwrap();
        assert_eq!(count_lines(&CubicForm::fermat(2, 7).unwrap(), &field7), 27);
    }

    #[test]
    fn enumeration_and_count_agree() {
        let field = PrimeField::new(3).unwrap();
        let form = CubicForm::node(2, 3).unwrap();
        let lines = enumerate_lines(&form, &field);
        assert_eq!(lines.len() as u64, count_lines(&form, &field));
        assert_eq!(lines.len(), 1);
    }
}
