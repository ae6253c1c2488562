//! Truncated symmetric-power series.
//!
//! `Sym_t(a) = 1 + Sym^1(a) t + Sym^2(a) t^2 + ...`, truncated at a
//! caller-chosen order. The series of a sum is the product of the series of
//! the summands, so it is enough to know the series of a single term
//! `c * L^k * m`:
//!
//! - `Sym^n(L^k * m) = L^{kn} * Sym^n(m)` (scaling by a Lefschetz power
//!   passes through symmetric powers);
//! - `Sym^n` of a nonempty symbol product `m` is an opaque symbol;
//! - `Sym^n` of the empty product follows the points rule
//!   `Sym^n(c points) = C(n+c-1, n)`, which here emerges from multiplying
//!   `c` copies of the geometric series `1 + t + t^2 + ...`;
//! - a negative coefficient contributes the *inverse* series, the only
//!   choice compatible with multiplicativity.

use super::class::{Monomial, Symbol, VirtualClass};

/// A power series in `t` with [`VirtualClass`] coefficients, truncated at a
/// fixed order `N` (so it stores coefficients of `t^0..t^N` inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSeries {
    coeffs: Vec<VirtualClass>,
}

impl SymSeries {
    /// The constant series 1, truncated at `order`.
    pub fn one(order: u32) -> Self {
        let mut coeffs = vec![VirtualClass::zero(); order as usize + 1];
        coeffs[0] = VirtualClass::one();
        SymSeries { coeffs }
    }

    /// Truncation order `N` (degrees `0..=N` are stored).
    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// The coefficient of `t^n`. Panics if `n` exceeds the order.
    pub fn coefficient(&self, n: u32) -> &VirtualClass {
        &self.coeffs[n as usize]
    }

    /// All coefficients, degree 0 first.
    pub fn coefficients(&self) -> &[VirtualClass] {
        &self.coeffs
    }

    /// Truncated product. Both factors must share one order.
    pub fn mul(&self, rhs: &SymSeries) -> SymSeries {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "series orders must match");
        let n = self.coeffs.len();
        let mut coeffs = vec![VirtualClass::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        SymSeries { coeffs }
    }

    /// Truncated power by square-and-multiply.
    pub fn pow(&self, e: u64) -> SymSeries {
        let mut acc = SymSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Truncated multiplicative inverse; requires constant coefficient 1.
    pub fn inverse(&self) -> SymSeries {
        assert!(self.coeffs[0].is_one(), "only series with constant term 1 are inverted");
        let n = self.coeffs.len();
        let mut inv = vec![VirtualClass::zero(); n];
        inv[0] = VirtualClass::one();
        for k in 1..n {
            // sum_{j=0}^{k} self[j] * inv[k-j] = 0, solve for inv[k] (self[0] = 1)
            let mut acc = VirtualClass::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &(&self.coeffs[j] * &inv[k - j]);
                }
            }
            inv[k] = -acc;
        }
        SymSeries { coeffs: inv }
    }

    /// The series `sum_n L^{kn} Sym^n(m) t^n` of a single monomial term with
    /// coefficient +1.
    fn single_term(l_power: i64, monomial: &Monomial, order: u32) -> SymSeries {
        let mut coeffs = Vec::with_capacity(order as usize + 1);
        coeffs.push(VirtualClass::one());
        for n in 1..=order {
            let sym = sym_power_of_monomial(monomial, n);
            coeffs.push(sym.shift_l(l_power * i64::from(n)));
        }
        SymSeries { coeffs }
    }
}

/// `Sym^n` of a bare monomial (no `L`, coefficient 1): the monomial itself
/// for `n = 1`, an opaque symbol for `n >= 2`, and 1 for the empty product
/// (any symmetric power of a point is a point).
fn sym_power_of_monomial(m: &Monomial, n: u32) -> VirtualClass {
    match n {
        0 => VirtualClass::one(),
        1 => VirtualClass::from_monomial(m.clone()),
        _ if m.is_one() => VirtualClass::one(),
        _ => VirtualClass::from_symbol(Symbol::sym(n, m.clone())),
    }
}

/// The truncated symmetric-power series of an arbitrary class: product over
/// the class's terms of the single-term series, with negative coefficients
/// contributing inverse factors.
pub fn sym_series(a: &VirtualClass, order: u32) -> SymSeries {
    let mut acc = SymSeries::one(order);
    for (&(l_power, ref monomial), &coeff) in a.terms() {
        let base = SymSeries::single_term(l_power, monomial, order);
        let factor = if coeff >= 0 { base } else { base.inverse() };
        acc = acc.mul(&factor.pow(coeff.unsigned_abs()));
    }
    acc
}

/// The degree-`n` symmetric power of a class.
pub fn sym_n(a: &VirtualClass, n: u32) -> VirtualClass {
    sym_series(a, n).coefficient(n).clone()
}

/// The symmetric square of a class.
pub fn sym2(a: &VirtualClass) -> VirtualClass {
    sym_n(a, 2)
}
