//! The ring elements: symbols, monomials, and integer combinations of them.
//!
//! Canonical form, maintained by every constructor and operation:
//! - a monomial's symbols are kept sorted, so equal products compare equal;
//! - terms are keyed by `(power of L, monomial)` in a `BTreeMap`, giving one
//!   canonical ordering (used for printing, hashing, and equality);
//! - zero coefficients are never stored.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A generator of the ring: either a named class, or an unexpanded symmetric
/// power of a product of symbols.
///
/// Symmetric powers of a single point-count-free product have no closed form
/// in the ring, so `Sym { .. }` stays opaque: nothing in this module ever
/// rewrites it. Realizations evaluate it instead.
///
/// Names are free-form identifiers (`[A-Za-z_][A-Za-z0-9_]*`), except that
/// `L` and `Sym<digits>` are reserved by the textual grammar.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// A named generator, e.g. the class of a fixed curve or surface.
    Atomic(String),
    /// The `n`-th symmetric power (`n >= 2`) of a nonempty product of symbols.
    Sym { n: u32, base: Monomial },
}

impl Symbol {
    /// Named atomic symbol.
    pub fn atomic(name: impl Into<String>) -> Self {
        Symbol::Atomic(name.into())
    }

    /// `Sym^n` of a product of symbols, kept opaque.
    ///
    /// Callers must pass `n >= 2` and a nonempty base: `Sym^0` is 1 and
    /// `Sym^1` is the base itself, neither of which needs a symbol, and
    /// symmetric powers of the empty product (a point) are again a point.
    pub fn sym(n: u32, base: Monomial) -> Self {
        debug_assert!(n >= 2, "Sym^0 and Sym^1 never need a symbol");
        debug_assert!(!base.is_one(), "Sym^n of a point is a point, not a symbol");
        Symbol::Sym { n, base }
    }
}

/// A finite multiset of symbols, kept sorted. The empty product is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Symbol>);

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_symbol(s: Symbol) -> Self {
        Monomial(vec![s])
    }

    /// Builds a monomial from an arbitrary bag of symbols (sorted here).
    pub fn from_symbols(mut symbols: Vec<Symbol>) -> Self {
        symbols.sort();
        Monomial(symbols)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// The sorted symbols, with multiplicity.
    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// True when every factor is a named symbol (no nested symmetric powers).
    pub fn is_atomic(&self) -> bool {
        self.0.iter().all(|s| matches!(s, Symbol::Atomic(_)))
    }

    /// Multiset union.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        Monomial(v)
    }

    /// Distinct factors with multiplicities, in canonical order.
    pub fn grouped(&self) -> Vec<(&Symbol, u32)> {
        let mut out: Vec<(&Symbol, u32)> = Vec::new();
        for s in &self.0 {
            match out.last_mut() {
                Some((prev, count)) if *prev == s => *count += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }
}

/// An element of the ring: a finite integer combination of `L^k * monomial`
/// terms. Supports exact addition, subtraction, and multiplication; `L` may
/// carry negative exponents (the ring is localized at `L`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VirtualClass {
    /// Keyed by `(L-exponent, monomial)`; no stored coefficient is zero.
    terms: BTreeMap<(i64, Monomial), i64>,
}

impl VirtualClass {
    pub fn zero() -> Self {
        VirtualClass::default()
    }

    pub fn one() -> Self {
        VirtualClass::int(1)
    }

    /// The class of `n` points (n may be negative: a virtual difference).
    pub fn int(n: i64) -> Self {
        let mut c = VirtualClass::zero();
        c.add_term(0, Monomial::one(), n);
        c
    }

    /// `L^k`, any integer `k`.
    pub fn lefschetz(k: i64) -> Self {
        let mut c = VirtualClass::zero();
        c.add_term(k, Monomial::one(), 1);
        c
    }

    /// The class of a named generator.
    pub fn atom(name: impl Into<String>) -> Self {
        VirtualClass::from_symbol(Symbol::atomic(name))
    }

    pub fn from_symbol(s: Symbol) -> Self {
        VirtualClass::from_monomial(Monomial::from_symbol(s))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut c = VirtualClass::zero();
        c.add_term(0, m, 1);
        c
    }

    /// A single term `coeff * L^k * monomial`.
    pub fn term(coeff: i64, l_power: i64, monomial: Monomial) -> Self {
        let mut c = VirtualClass::zero();
        c.add_term(l_power, monomial, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(0, &Monomial::one()) == 1
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: `((L-exponent, monomial), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, Monomial), &i64)> {
        self.terms.iter()
    }

    /// The coefficient of `L^k * monomial` (zero if absent).
    pub fn coefficient(&self, l_power: i64, monomial: &Monomial) -> i64 {
        self.terms.get(&(l_power, monomial.clone())).copied().unwrap_or(0)
    }

    /// Adds `coeff * L^k * monomial` in place, dropping the term if the
    /// total cancels.
    pub fn add_term(&mut self, l_power: i64, monomial: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (l_power, monomial);
        match self.terms.get_mut(&key) {
            Some(entry) => {
                *entry += coeff;
                if *entry == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// `self * L^k`: shifts every L-exponent by `k`.
    pub fn shift_l(&self, k: i64) -> VirtualClass {
        let mut out = VirtualClass::zero();
        for ((l, m), &c) in &self.terms {
            out.add_term(l + k, m.clone(), c);
        }
        out
    }

    /// Exact small power by repeated multiplication.
    pub fn pow(&self, e: u32) -> VirtualClass {
        let mut acc = VirtualClass::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when no term involves a symbol (the class is a Laurent
    /// polynomial in `L`).
    pub fn is_symbol_free(&self) -> bool {
        self.terms.keys().all(|(_, m)| m.is_one())
    }

    /// Splits off the purely numeric coefficient of `L^k` for each `k`,
    /// failing with the offending monomial if any term carries a symbol.
    pub fn as_l_polynomial(&self) -> Result<BTreeMap<i64, i64>, &Monomial> {
        let mut out = BTreeMap::new();
        for ((l, m), &c) in &self.terms {
            if !m.is_one() {
                return Err(m);
            }
            out.insert(*l, c);
        }
        Ok(out)
    }
}

impl Add for &VirtualClass {
    type Output = VirtualClass;
    fn add(self, rhs: &VirtualClass) -> VirtualClass {
        let mut out = self.clone();
        for ((l, m), &c) in &rhs.terms {
            out.add_term(*l, m.clone(), c);
        }
        out
    }
}

impl Sub for &VirtualClass {
    type Output = VirtualClass;
    fn sub(self, rhs: &VirtualClass) -> VirtualClass {
        let mut out = self.clone();
        for ((l, m), &c) in &rhs.terms {
            out.add_term(*l, m.clone(), -c);
        }
        out
    }
}

impl Neg for &VirtualClass {
    type Output = VirtualClass;
    fn neg(self) -> VirtualClass {
        let mut out = VirtualClass::zero();
        for ((l, m), &c) in &self.terms {
            out.add_term(*l, m.clone(), -c);
        }
        out
    }
}

impl Mul for &VirtualClass {
    type Output = VirtualClass;
    fn mul(self, rhs: &VirtualClass) -> VirtualClass {
        let mut out = VirtualClass::zero();
        for ((la, ma), &ca) in &self.terms {
            for ((lb, mb), &cb) in &rhs.terms {
                out.add_term(la + lb, ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul<i64> for &VirtualClass {
    type Output = VirtualClass;
    fn mul(self, rhs: i64) -> VirtualClass {
        let mut out = VirtualClass::zero();
        for ((l, m), &c) in &self.terms {
            out.add_term(*l, m.clone(), c * rhs);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for VirtualClass {
            type Output = VirtualClass;
            fn $method(self, rhs: VirtualClass) -> VirtualClass {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&VirtualClass> for VirtualClass {
            type Output = VirtualClass;
            fn $method(self, rhs: &VirtualClass) -> VirtualClass {
                (&self).$method(rhs)
            }
        }
        impl $trait<VirtualClass> for &VirtualClass {
            type Output = VirtualClass;
            fn $method(self, rhs: VirtualClass) -> VirtualClass {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for VirtualClass {
    type Output = VirtualClass;
    fn neg(self) -> VirtualClass {
        -&self
    }
}

impl AddAssign<&VirtualClass> for VirtualClass {
    fn add_assign(&mut self, rhs: &VirtualClass) {
        for ((l, m), &c) in &rhs.terms {
            self.add_term(*l, m.clone(), c);
        }
    }
}

impl From<i64> for VirtualClass {
    fn from(n: i64) -> Self {
        VirtualClass::int(n)
    }
}
