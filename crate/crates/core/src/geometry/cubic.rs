//! Explicit cubic forms over a prime field: construction, file format,
//! named families, seeded random generation, reducedness, and compilation
//! into flat evaluation tables.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::field::{Field, FieldError, PrimeField};

/// Errors from building or parsing a cubic form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("exponent vector {0:?} has {1} entries; a form of dimension {2} needs {3}")]
    WrongArity(Vec<u8>, usize, u32, usize),
    #[error("exponent vector {0:?} has total degree {1}; every monomial must have degree 3")]
    WrongDegree(Vec<u8>, u32),
    #[error("the form is identically zero")]
    IdenticallyZero,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no form passing the smoothness proxy in {0} seeded draws")]
    SmoothSearchExhausted(u32),
}

/// A nonzero cubic form in `d + 2` variables over `F_p`, defining a cubic
/// hypersurface of dimension `d` in projective space.
///
/// Stored sparsely: exponent vectors of length `d + 2` summing to 3, mapped
/// to nonzero coefficients in `1..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForm {
    dim: u32,
    field: PrimeField,
    coeffs: BTreeMap<Vec<u8>, u64>,
}

impl CubicForm {
    /// Builds a form from `(exponent vector, coefficient)` terms.
    /// Coefficients are reduced mod `p` and repeated exponent vectors
    /// accumulate; the result must not be identically zero.
    pub fn new(
        dim: u32,
        p: u64,
        terms: impl IntoIterator<Item = (Vec<u8>, i64)>,
    ) -> Result<Self, CubicError> {
        let field = PrimeField::new(p)?;
        let nvars = dim as usize + 2;
        let mut coeffs: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(CubicError::WrongArity(exps.clone(), exps.len(), dim, nvars));
            }
            let degree: u32 = exps.iter().map(|&e| u32::from(e)).sum();
            if degree != 3 {
                return Err(CubicError::WrongDegree(exps.clone(), degree));
            }
            let c = c.rem_euclid(p as i64) as u64;
            let entry = coeffs.entry(exps).or_insert(0);
            *entry = (*entry + c) % p;
        }
        coeffs.retain(|_, &mut c| c != 0);
        if coeffs.is_empty() {
            return Err(CubicError::IdenticallyZero);
        }
        Ok(CubicForm { dim, field, coeffs })
    }

    /// Hypersurface dimension `d`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of variables, `d + 2`.
    pub fn nvars(&self) -> usize {
        self.dim as usize + 2
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn base_field(&self) -> PrimeField {
        self.field
    }

    /// Terms in descending lexicographic exponent order (`x_0^3` first).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, u64)> {
        self.coeffs.iter().rev().map(|(e, &c)| (e, c))
    }

    /// The Fermat cubic `x_0^3 + ... + x_{d+1}^3`.
    pub fn fermat(dim: u32, p: u64) -> Result<Self, CubicError> {
        let nvars = dim as usize + 2;
        let terms = (0..nvars).map(|i| {
            let mut e = vec![0u8; nvars];
            e[i] = 3;
            (e, 1)
        });
        CubicForm::new(dim, p, terms)
    }

    /// A singular named form: cubes of `x_0..x_d` plus `x_{d+1} * Q`, where
    /// `Q = x_0 x_1 + x_2 x_3 + ...` pairs up the first `d + 1` variables
    /// and an unpaired last variable contributes its square.
    ///
    /// The point `(0 : ... : 0 : 1)` is always singular (an ordinary double
    /// point away from characteristic 3, where the tangent cone `Q` is a
    /// smooth quadric); the form is reduced over every prime, because a
    /// squared-linear divisor would force `Q` to be a rank-one quadric.
    /// Other rational singular points can exist at particular primes — the
    /// dimension-2 form picks up a second one over `F_5` — so per-prime
    /// singular counts come from `singular_points`, not from this doc.
    pub fn node(dim: u32, p: u64) -> Result<Self, CubicError> {
        let nvars = dim as usize + 2;
        let d = dim as usize;
        let mut terms = Vec::new();
        for i in 0..=d {
            let mut e = vec![0u8; nvars];
            e[i] = 3;
            terms.push((e, 1));
        }
        let mut i = 0;
        while i + 1 <= d {
            let mut e = vec![0u8; nvars];
            e[nvars - 1] = 1;
            e[i] = 1;
            e[i + 1] = 1;
            terms.push((e, 1));
            i += 2;
        }
        if i == d {
            let mut e = vec![0u8; nvars];
            e[nvars - 1] = 1;
            e[d] = 2;
            terms.push((e, 1));
        }
        CubicForm::new(dim, p, terms)
    }

    /// A seeded random form: every degree-3 monomial draws a uniform
    /// coefficient in `0..p` from a ChaCha8 stream, in the canonical
    /// monomial order (ascending variable picks `i <= j <= k`); identically
    /// zero draws are redrawn from the same stream.
    pub fn random(dim: u32, p: u64, seed: u64) -> Result<Self, CubicError> {
        let field = PrimeField::new(p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::draw(dim, &field, &mut rng)
    }

    fn draw(dim: u32, field: &PrimeField, rng: &mut ChaCha8Rng) -> Result<Self, CubicError> {
        let p = field.p();
        loop {
            let terms: Vec<(Vec<u8>, i64)> = cubic_exponents(dim as usize + 2)
                .into_iter()
                .map(|e| (e, rng.gen_range(0..p) as i64))
                .collect();
            match CubicForm::new(dim, p, terms) {
                Err(CubicError::IdenticallyZero) => continue,
                other => return other,
            }
        }
    }

    /// Draws seeded random forms until one passes the smoothness proxy:
    /// empty singular locus over both `F_p` and `F_{p^2}`. The proxy does
    /// not certify smoothness over the algebraic closure.
    pub fn random_smooth(dim: u32, p: u64, seed: u64) -> Result<Self, CubicError> {
        const MAX_DRAWS: u32 = 10_000;
        let field = PrimeField::new(p)?;
        let ext = super::field::ExtField::new(field, 2)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_DRAWS {
            let form = Self::draw(dim, &field, &mut rng)?;
            if super::points::count_singular(&form, &field) == 0
                && super::points::count_singular(&form, &ext) == 0
            {
                return Ok(form);
            }
        }
        Err(CubicError::SmoothSearchExhausted(MAX_DRAWS))
    }

    /// Parses the text format: a header `cubic d=<d> p=<p>`, then one term
    /// per line, `<coeff> <e_0> ... <e_{d+1}>`. Blank lines and lines
    /// starting with `#` are ignored; repeated exponent vectors accumulate.
    pub fn parse(text: &str) -> Result<Self, CubicError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_no, header) = lines.next().ok_or(CubicError::Parse {
            line: 1,
            message: "empty input; expected a `cubic d=<d> p=<p>` header".to_string(),
        })?;
        let bad_header = |message: String| CubicError::Parse { line: header_no, message };
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "cubic" {
            return Err(bad_header(format!("bad header `{header}`; expected `cubic d=<d> p=<p>`")));
        }
        let dim: u32 = fields[1]
            .strip_prefix("d=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad_header(format!("bad dimension field `{}`", fields[1])))?;
        let p: u64 = fields[2]
            .strip_prefix("p=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad_header(format!("bad prime field `{}`", fields[2])))?;
        let nvars = dim as usize + 2;
        let mut terms = Vec::new();
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let coeff: i64 = parts
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| CubicError::Parse {
                    line: line_no,
                    message: format!("bad coefficient in `{line}`"),
                })?;
            let exps: Vec<u8> = parts
                .map(|v| v.parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|_| CubicError::Parse {
                    line: line_no,
                    message: format!("bad exponent in `{line}`"),
                })?;
            if exps.len() != nvars {
                return Err(CubicError::Parse {
                    line: line_no,
                    message: format!("expected {nvars} exponents, found {}", exps.len()),
                });
            }
            terms.push((exps, coeff));
        }
        CubicForm::new(dim, p, terms)
    }

    /// Compiles the form for a field of the same characteristic into a flat
    /// list of `(coefficient, three variable picks)` products.
    pub fn compile<F: Field>(&self, field: &F) -> CompiledCubic<F> {
        assert_eq!(field.characteristic(), self.p(), "field characteristic must match the form");
        let terms = self
            .coeffs
            .iter()
            .map(|(exps, &c)| (field.embed(c), picks3(exps)))
            .collect();
        CompiledCubic { terms }
    }

    /// Compiles all `d + 2` partial derivatives (quadratic forms). Terms
    /// whose derivative coefficient vanishes mod `p` are dropped — in
    /// characteristic 3 the cube terms disappear entirely, which is why
    /// singularity testing must also check the form itself.
    pub fn compile_partials<F: Field>(&self, field: &F) -> Vec<CompiledQuadratic<F>> {
        assert_eq!(field.characteristic(), self.p(), "field characteristic must match the form");
        let p = self.p();
        (0..self.nvars())
            .map(|i| {
                let mut terms = Vec::new();
                for (exps, &c) in &self.coeffs {
                    if exps[i] == 0 {
                        continue;
                    }
                    let dc = c * u64::from(exps[i]) % p;
                    if dc == 0 {
                        continue;
                    }
                    let mut reduced = exps.clone();
                    reduced[i] -= 1;
                    terms.push((field.embed(dc), picks2(&reduced)));
                }
                CompiledQuadratic { terms }
            })
            .collect()
    }

    /// True unless some squared linear form divides the cubic — the only
    /// way a cubic hypersurface can be non-reduced (a repeated factor of a
    /// cubic is linear, and its Galois orbit must preserve it, so it can be
    /// scaled into `F_p`). Checked by exhaustive division: for every
    /// canonical linear form, divide twice and look at the remainders.
    pub fn is_reduced(&self) -> bool {
        let field = &self.field;
        let nvars = self.nvars();
        let poly: Poly = self.coeffs.clone();
        // canonical linear forms: first nonzero coefficient = 1, so the
        // pivot variable has coefficient one and earlier variables zero
        for pivot in 0..nvars {
            let tail_len = nvars - 1 - pivot;
            let mut tail = vec![0u64; tail_len];
            loop {
                // rho = -(tail part): the substitution x_pivot = rho kills the
                // linear form x_pivot + sum tail[i] x_{pivot+1+i}
                let mut rho: Poly = BTreeMap::new();
                for (i, &t) in tail.iter().enumerate() {
                    if t != 0 {
                        let mut e = vec![0u8; nvars];
                        e[pivot + 1 + i] = 1;
                        rho.insert(e, field.neg(t));
                    }
                }
                let (quotient, remainder) = divrem_linear(&poly, &rho, pivot, field);
                if remainder.is_empty() {
                    let (_, remainder2) = divrem_linear(&quotient, &rho, pivot, field);
                    if remainder2.is_empty() {
                        return false;
                    }
                }
                // next canonical tail
                let mut carried = true;
                for slot in tail.iter_mut().rev() {
                    *slot += 1;
                    if *slot < field.p() {
                        carried = false;
                        break;
                    }
                    *slot = 0;
                }
                if carried {
                    break;
                }
            }
        }
        true
    }
}

impl fmt::Display for CubicForm {
    /// Emits the parseable file format, terms in descending lexicographic
    /// exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cubic d={} p={}", self.dim, self.p())?;
        for (exps, c) in self.terms() {
            write!(f, "{c}")?;
            for e in exps {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All degree-3 exponent vectors in `nvars` variables, ordered by ascending
/// variable picks `i <= j <= k` (so `x_0^3` comes first).
pub fn cubic_exponents(nvars: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..nvars {
        for j in i..nvars {
            for k in j..nvars {
                let mut e = vec![0u8; nvars];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                out.push(e);
            }
        }
    }
    out
}

fn picks3(exps: &[u8]) -> [u8; 3] {
    let mut picks = [0u8; 3];
    let mut slot = 0;
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            picks[slot] = i as u8;
            slot += 1;
        }
    }
    debug_assert_eq!(slot, 3);
    picks
}

fn picks2(exps: &[u8]) -> [u8; 2] {
    let mut picks = [0u8; 2];
    let mut slot = 0;
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            picks[slot] = i as u8;
            slot += 1;
        }
    }
    debug_assert_eq!(slot, 2);
    picks
}

/// A cubic form flattened for fast evaluation over a fixed field.
#[derive(Debug, Clone)]
pub struct CompiledCubic<F: Field> {
    terms: Vec<(F::E, [u8; 3])>,
}

impl<F: Field> CompiledCubic<F> {
    pub fn eval(&self, field: &F, x: &[F::E]) -> F::E {
        let mut total = field.zero();
        for &(c, [i, j, k]) in &self.terms {
            let prod = field.mul(field.mul(x[i as usize], x[j as usize]), x[k as usize]);
            total = field.add(total, field.mul(c, prod));
        }
        total
    }

    pub fn vanishes_at(&self, field: &F, x: &[F::E]) -> bool {
        field.is_zero(self.eval(field, x))
    }

    pub fn terms(&self) -> &[(F::E, [u8; 3])] {
        &self.terms
    }
}

/// A quadratic form (a partial derivative) flattened for fast evaluation.
#[derive(Debug, Clone)]
pub struct CompiledQuadratic<F: Field> {
    terms: Vec<(F::E, [u8; 2])>,
}

impl<F: Field> CompiledQuadratic<F> {
    pub fn eval(&self, field: &F, x: &[F::E]) -> F::E {
        let mut total = field.zero();
        for &(c, [i, j]) in &self.terms {
            total = field.add(total, field.mul(c, field.mul(x[i as usize], x[j as usize])));
        }
        total
    }

    pub fn vanishes_at(&self, field: &F, x: &[F::E]) -> bool {
        field.is_zero(self.eval(field, x))
    }
}

/// Sparse multivariate polynomial over `F_p`: exponent vector -> nonzero
/// coefficient. Only used by the reducedness check.
type Poly = BTreeMap<Vec<u8>, u64>;

fn poly_add_term(poly: &mut Poly, exps: Vec<u8>, c: u64, field: &PrimeField) {
    if c == 0 {
        return;
    }
    match poly.get_mut(&exps) {
        Some(v) => {
            *v = field.add(*v, c);
            if *v == 0 {
                poly.remove(&exps);
            }
        }
        None => {
            poly.insert(exps, c);
        }
    }
}

fn poly_mul(a: &Poly, b: &Poly, field: &PrimeField) -> Poly {
    let mut out = Poly::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let exps: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            poly_add_term(&mut out, exps, field.mul(ca, cb), field);
        }
    }
    out
}

/// Divides `f` by the linear form `x_pivot - rho` (where `rho` involves only
/// later variables): returns `(quotient, remainder)` with the remainder free
/// of `x_pivot`. Exact synthetic division on the `x_pivot`-coefficients.
fn divrem_linear(f: &Poly, rho: &Poly, pivot: usize, field: &PrimeField) -> (Poly, Poly) {
    // split f by the power of x_pivot, stripping that exponent
    let mut by_power: Vec<Poly> = vec![Poly::new(); 4];
    for (exps, &c) in f {
        let k = exps[pivot] as usize;
        let mut stripped = exps.clone();
        stripped[pivot] = 0;
        poly_add_term(&mut by_power[k], stripped, c, field);
    }
    // synthetic division by (x_pivot - rho):
    //   q_k = c_{k+1} + rho * q_{k+1},  r = c_0 + rho * q_0
    let mut quotient = Poly::new();
    let mut carry = Poly::new(); // q_k as we walk down from the top degree
    for k in (0..3).rev() {
        let mut qk = by_power[k + 1].clone();
        for (e, &c) in poly_mul(rho, &carry, field).iter() {
            poly_add_term(&mut qk, e.clone(), c, field);
        }
        for (e, &c) in &qk {
            let mut with_pivot = e.clone();
            with_pivot[pivot] = k as u8;
            poly_add_term(&mut quotient, with_pivot, c, field);
        }
        carry = qk;
    }
    let mut remainder = by_power[0].clone();
    for (e, &c) in poly_mul(rho, &carry, field).iter() {
        poly_add_term(&mut remainder, e.clone(), c, field);
    }
    (quotient, remainder)
}
