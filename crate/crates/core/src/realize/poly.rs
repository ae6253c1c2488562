//! Two-variable polynomials with integer coefficients (the value ring of
//! the E-polynomial realization) and the one-variable polynomials obtained
//! from them by the substitution `u = -t, v = 0`.
//!
//! Negative exponents are allowed — inverting the class of the affine line
//! realizes to `(uv)^{-1}` — but every geometrically meaningful combination
//! cancels down to true polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse two-variable polynomial: `(a, b) -> coefficient of u^a v^b`,
/// zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EPolynomial {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        EPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        EPolynomial::term(1, 0, 0)
    }

    /// The monomial `c * u^a * v^b`.
    pub fn term(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        EPolynomial { terms }
    }

    /// `u^k v^k`, the value of the k-th power of the affine-line class.
    pub fn uv_power(k: i64) -> Self {
        EPolynomial::term(1, k, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Substitutes `u -> u^k, v -> v^k` (used by the symmetric-square rule
    /// with `k = 2`).
    pub fn frobenius_scale(&self, k: i64) -> Self {
        let mut out = EPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a * k, b * k, c);
        }
        out
    }

    /// Evaluates at integer arguments.
    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            assert!(a >= 0 && b >= 0, "cannot evaluate negative exponents at integers");
            total += c * u.pow(a as u32) * v.pow(b as u32);
        }
        total
    }

    /// Whether every exponent is nonnegative (a true polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// Divides every coefficient by two exactly; `None` if any is odd.
    pub fn halved(&self) -> Option<Self> {
        let two = BigInt::from(2);
        let mut out = EPolynomial::zero();
        for (&(a, b), c) in &self.terms {
            if (c % &two).is_zero() {
                out.add_term(a, b, &(c / &two));
            } else {
                return None;
            }
        }
        Some(out)
    }
}

impl From<i64> for EPolynomial {
    fn from(c: i64) -> Self {
        EPolynomial::term(c, 0, 0)
    }
}

impl Add for &EPolynomial {
    type Output = EPolynomial;
    fn add(self, other: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub for &EPolynomial {
    type Output = EPolynomial;
    fn sub(self, other: &EPolynomial) -> EPolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, &(-c));
        }
        out
    }
}

impl Mul for &EPolynomial {
    type Output = EPolynomial;
    fn mul(self, other: &EPolynomial) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &EPolynomial {
    type Output = EPolynomial;
    fn neg(self) -> EPolynomial {
        EPolynomial { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for EPolynomial {
            type Output = EPolynomial;
            fn $method(self, other: EPolynomial) -> EPolynomial {
                (&self).$method(&other)
            }
        }
        impl $trait<&EPolynomial> for EPolynomial {
            type Output = EPolynomial;
            fn $method(self, other: &EPolynomial) -> EPolynomial {
                (&self).$method(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for EPolynomial {
    /// Sparse `c*u^a*v^b` form, e.g. `1 + 21*u*v + u^2*v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let magnitude = c.magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || (a == 0 && b == 0) {
                factors.push(magnitude.to_string());
            }
            for (var, e) in [("u", a), ("v", b)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Sparse one-variable polynomial in `t` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnivariatePolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (i64, impl Into<BigInt>)>) -> Self {
        let mut out = UnivariatePolynomial::zero();
        for (e, c) in coeffs {
            out.add_term(e, &c.into());
        }
        out
    }

    pub fn add_term(&mut self, exponent: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let magnitude = c.magnitude();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !magnitude.is_one() || e == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// The one-variable shadow of an E-polynomial: substitute `u = -t, v = 0`,
/// keeping only the holomorphic column. For the E-polynomial of a smooth
/// projective variety the coefficients are its `h^{p,0}` numbers, so the
/// result has nonnegative coefficients.
pub fn psi_polynomial(e: &EPolynomial) -> UnivariatePolynomial {
    let mut out = UnivariatePolynomial::zero();
    for (&(a, b), c) in e.terms() {
        if b == 0 {
            let signed = if a % 2 == 0 { c.clone() } else { -c };
            out.add_term(a, &signed);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for &(c, a, b) in terms {
            out.add_term(a, b, &BigInt::from(c));
        }
        out
    }

    #[test]
    fn display_uses_sparse_star_form() {
        let e = p(&[(1, 0, 0), (21, 1, 1), (1, 2, 2)]);
        assert_eq!(e.to_string(), "1 + 21*u*v + u^2*v^2");
        assert_eq!(EPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[(1, 0, 0), (-2, 1, 0)]).to_string(), "1 - 2*u");
        assert_eq!(p(&[(-3, 0, 0)]).to_string(), "-3");
        assert_eq!(p(&[(1, -1, -1)]).to_string(), "u^-1*v^-1");
        assert_eq!(p(&[(5, 0, 2)]).to_string(), "5*v^2");
    }

    #[test]
    fn arithmetic_is_ring_arithmetic() {
        let a = p(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1), (1, 1, 1)]);
        let b = p(&[(1, 0, 0), (1, 1, 1)]);
        let sum = &a + &b;
        assert_eq!(sum.coefficient(0, 0), BigInt::from(2));
        assert_eq!(sum.coefficient(1, 1), BigInt::from(2));
        let product = &a * &b;
        // (1 - u)(1 - v)(1 + uv) expanded: constant 1, u^2 v coefficient -1.
        assert_eq!(product.coefficient(0, 0), BigInt::from(1));
        assert_eq!(product.coefficient(2, 1), BigInt::from(-1));
        assert_eq!(&a - &a, EPolynomial::zero());
        assert_eq!(&(-&a) + &a, EPolynomial::zero());
    }

    #[test]
    fn evaluation_and_scaling() {
        // The projective-plane polynomial at u = v = 1 gives its Euler
        // characteristic.
        let plane = p(&[(1, 0, 0), (1, 1, 1), (1, 2, 2)]);
        assert_eq!(plane.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(3));
        // At u = v = q it counts points over the field with q^2... only for
        // Tate classes; here it is just polynomial evaluation.
        assert_eq!(plane.eval(&BigInt::from(2), &BigInt::from(2)), BigInt::from(21));
        let scaled = plane.frobenius_scale(2);
        assert_eq!(scaled.coefficient(2, 2), BigInt::from(1));
        assert_eq!(scaled.coefficient(4, 4), BigInt::from(1));
        assert_eq!(scaled.coefficient(1, 1), BigInt::from(0));
    }

    #[test]
    fn halving_checks_parity() {
        assert_eq!(p(&[(4, 1, 0), (2, 0, 0)]).halved(), Some(p(&[(2, 1, 0), (1, 0, 0)])));
        assert_eq!(p(&[(3, 1, 0)]).halved(), None);
    }

    #[test]
    fn laurent_terms_are_tracked() {
        let m = EPolynomial::uv_power(-1);
        assert!(!m.is_polynomial());
        assert_eq!(&m * &EPolynomial::uv_power(1), EPolynomial::one());
    }

    #[test]
    fn holomorphic_column_of_a_curve() {
        // Genus-g curve: E = 1 - g u - g v + uv; the column is 1 + g t.
        for g in 0..6i64 {
            let e = p(&[(1, 0, 0), (-g, 1, 0), (-g, 0, 1), (1, 1, 1)]);
            let psi = psi_polynomial(&e);
            assert_eq!(psi, UnivariatePolynomial::from_coeffs([(0i64, 1i64), (1, g)]));
            assert!(psi.has_nonnegative_coefficients());
        }
    }

    #[test]
    fn holomorphic_column_of_projective_space_is_one() {
        for n in 0..5 {
            let mut e = EPolynomial::zero();
            for k in 0..=n {
                e.add_term(k, k, &BigInt::from(1));
            }
            assert_eq!(psi_polynomial(&e).to_string(), "1");
        }
    }

    #[test]
    fn holomorphic_column_keeps_signs_straight() {
        // A surface-like polynomial with h^{1,0} = 5, h^{2,0} = 10: the
        // odd-row terms enter E negatively and come back positive.
        let e = p(&[(1, 0, 0), (-5, 1, 0), (10, 2, 0), (-5, 0, 1), (25, 1, 1)]);
        let psi = psi_polynomial(&e);
        assert_eq!(psi.to_string(), "1 + 5*t + 10*t^2");
        assert_eq!(psi.coefficient(1), BigInt::from(5));
        assert_eq!(psi.degree(), Some(2));
    }

    #[test]
    fn univariate_display() {
        assert_eq!(UnivariatePolynomial::zero().to_string(), "0");
        let q = UnivariatePolynomial::from_coeffs([(0i64, 1i64), (2, 1), (4, 1)]);
        assert_eq!(q.to_string(), "1 + t^2 + t^4");
        let r = UnivariatePolynomial::from_coeffs([(1i64, -2i64), (0, 1)]);
        assert_eq!(r.to_string(), "1 - 2*t");
    }
}
