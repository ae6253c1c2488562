//! Realization homomorphisms out of the Grothendieck ring.
//!
//! An [`Environment`] fixes a target invariant — point counts over a finite
//! field, topological Euler characteristics, real-point Euler
//! characteristics, or E-polynomials — together with the values of the
//! atomic symbols. Realizing a virtual class evaluates it ring-
//! homomorphically: the affine-line class goes to `q`, `1`, `-1`, or `uv`
//! according to the target, products and sums go to products and sums, and
//! opaque symmetric-power symbols are resolved by the closed rule each
//! invariant satisfies:
//!
//! * counts: `#Sym^2 X(F_q) = (N(q)^2 + N(q^2)) / 2`, which needs each
//!   symbol's count over the quadratic extension as companion data;
//! * Euler characteristics: `chi(Sym^n X) = C(chi + n - 1, n)`;
//! * real counts: `chi_R(Sym^2 X) = (chi_R^2 + chi_C) / 2`, which needs the
//!   complex Euler characteristic as companion data;
//! * E-polynomials: `E_{Sym^2 X}(u, v) = (E(u, v)^2 + E(u^2, v^2)) / 2`.
//!
//! All arithmetic is exact; the divisions inside the rules are checked and
//! an inconsistent environment is reported as an error rather than rounded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::motivic::{Monomial, Symbol, VirtualClass};

use super::poly::EPolynomial;

/// The invariant a realization computes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Rational points over a field with `q` elements; the affine-line
    /// class realizes to `q`.
    Count { q: u64 },
    /// Topological Euler characteristic of complex points; the affine-line
    /// class realizes to `1`.
    Euler,
    /// Euler characteristic of real points (equivalently, for compact
    /// supports, the signed count of real cells); the affine line
    /// realizes to `-1`.
    RealEuler,
    /// Hodge–Deligne E-polynomial; the affine line realizes to `uv`.
    EPolynomial,
}

/// A value in a realization's target ring: an exact rational number for the
/// numeric targets, a polynomial for the E-polynomial target.
///
/// Numeric values are rationals because inverting the affine-line class is
/// allowed; any value attached to an actual variety comes out integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Number(BigRational),
    Polynomial(EPolynomial),
}

impl Value {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Value::Number(BigRational::from_integer(n.into()))
    }

    /// The value as an integer, if it is a whole number.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Value::Number(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&EPolynomial> {
        match self {
            Value::Polynomial(p) => Some(p),
            _ => None,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Number(r) => write!(f, "{r}"),
            Value::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    /// A symbol in the class has no assignment in the environment.
    #[error("symbol `{0}` has no assigned value in this environment")]
    UnassignedSymbol(String),
    /// A symmetric-square rule needed companion data the environment does
    /// not carry (the count over the quadratic extension, or the complex
    /// Euler characteristic).
    #[error("symbol `{symbol}` needs {needed} to resolve a symmetric square")]
    MissingCompanion { symbol: String, needed: &'static str },
    /// A symmetric-power symbol this target has no closed rule for
    /// (`Sym^n` with `n >= 3` outside the Euler target, or a symmetric
    /// square nested inside another one under the counting target).
    #[error("no rule resolves `{0}` under this target")]
    UnresolvableSym(String),
    /// A rule division came out non-integral, so the assigned data cannot
    /// come from an actual variety.
    #[error("inconsistent environment: the symmetric-square rule for `{symbol}` does not divide evenly")]
    NonIntegralRule { symbol: String },
    /// Real and complex Euler characteristics of different parities cannot
    /// come from the same variety.
    #[error("parity violation: chi_R = {chi_r} and chi_C = {chi_c} differ mod 2")]
    ParityViolation { chi_r: i64, chi_c: i64 },
    /// An analysis only defined for specific cubic dimensions.
    #[error("no analysis is defined for cubics of dimension {0}")]
    UnsupportedDimension(u32),
    /// Proposed point counts failed the symmetric-power recurrence.
    #[error("inconsistent point counts: the degree-{degree} symmetric-power count is not an integer")]
    NonIntegralTruncation { degree: usize },
}

/// Values attached to one atomic symbol.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct SymbolData {
    value: Option<Value>,
    /// Count target: the count over the field with `q^2` elements.
    /// Real-Euler target: the Euler characteristic of the complex points.
    companion: Option<Value>,
    /// Explicit value for the symmetric square of this symbol; takes
    /// precedence over the rule.
    sym2_override: Option<Value>,
}

/// A realization target plus the values of the atomic symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    target: Target,
    symbols: BTreeMap<String, SymbolData>,
}

impl Environment {
    pub fn new(target: Target) -> Self {
        Environment { target, symbols: BTreeMap::new() }
    }

    /// Counting environment over a field with `q` elements.
    pub fn count(q: u64) -> Self {
        Environment::new(Target::Count { q })
    }

    pub fn euler() -> Self {
        Environment::new(Target::Euler)
    }

    pub fn real_euler() -> Self {
        Environment::new(Target::RealEuler)
    }

    pub fn e_polynomial() -> Self {
        Environment::new(Target::EPolynomial)
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    fn numeric_target(&self) -> bool {
        !matches!(self.target, Target::EPolynomial)
    }

    fn data_mut(&mut self, name: &str) -> &mut SymbolData {
        self.symbols.entry(name.to_string()).or_default()
    }

    /// Assigns an integer value to an atomic symbol (numeric targets only).
    ///
    /// # Panics
    /// If the target is the E-polynomial realization, which takes
    /// polynomial values.
    pub fn assign(mut self, name: &str, value: impl Into<BigInt>) -> Self {
        assert!(self.numeric_target(), "integer assignment on a polynomial-valued target");
        self.data_mut(name).value = Some(Value::integer(value));
        self
    }

    /// Assigns an E-polynomial value to an atomic symbol.
    ///
    /// # Panics
    /// If the target is numeric.
    pub fn assign_polynomial(mut self, name: &str, value: EPolynomial) -> Self {
        assert!(!self.numeric_target(), "polynomial assignment on a numeric target");
        self.data_mut(name).value = Some(Value::Polynomial(value));
        self
    }

    /// Attaches companion data to a symbol: under the counting target, its
    /// count over the field with `q^2` elements; under the real-Euler
    /// target, the Euler characteristic of its complex points.
    ///
    /// # Panics
    /// If the target is not one of those two.
    pub fn with_companion(mut self, name: &str, value: impl Into<BigInt>) -> Self {
        assert!(
            matches!(self.target, Target::Count { .. } | Target::RealEuler),
            "companion data only applies to the counting and real-Euler targets"
        );
        self.data_mut(name).companion = Some(Value::integer(value));
        self
    }

    /// Forces the symmetric square of an atomic symbol to a given integer
    /// value, bypassing the rule (numeric targets).
    pub fn with_sym2_override(mut self, name: &str, value: impl Into<BigInt>) -> Self {
        assert!(self.numeric_target(), "integer override on a polynomial-valued target");
        self.data_mut(name).sym2_override = Some(Value::integer(value));
        self
    }

    /// Forces the symmetric square of an atomic symbol to a given
    /// polynomial value (E-polynomial target).
    pub fn with_sym2_override_polynomial(mut self, name: &str, value: EPolynomial) -> Self {
        assert!(!self.numeric_target(), "polynomial override on a numeric target");
        self.data_mut(name).sym2_override = Some(Value::Polynomial(value));
        self
    }

    /// Names of the assigned symbols, for reporting.
    pub fn assigned_symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.keys().map(|s| s.as_str())
    }

    /// Evaluates a virtual class in this environment.
    pub fn realize(&self, class: &VirtualClass) -> Result<Value, RealizeError> {
        match self.target {
            Target::Count { q } => {
                let q = BigRational::from_integer(BigInt::from(q));
                let mut total = BigRational::zero();
                for (&(l_exp, ref monomial), &coeff) in class.terms() {
                    let mut term = rational_power(&q, l_exp);
                    term *= self.count_monomial(monomial, Need::Base)?.base;
                    term *= BigRational::from_integer(BigInt::from(coeff));
                    total += term;
                }
                Ok(Value::Number(total))
            }
            Target::Euler => {
                let mut total = BigRational::zero();
                // The affine line realizes to 1, so L-exponents vanish.
                for (&(_, ref monomial), &coeff) in class.terms() {
                    let mut term = self.euler_monomial(monomial)?;
                    term *= BigRational::from_integer(BigInt::from(coeff));
                    total += term;
                }
                Ok(Value::Number(total))
            }
            Target::RealEuler => {
                let minus_one = BigRational::from_integer(BigInt::from(-1));
                let mut total = BigRational::zero();
                for (&(l_exp, ref monomial), &coeff) in class.terms() {
                    let mut term = rational_power(&minus_one, l_exp);
                    term *= self.real_monomial(monomial, Need::Base)?.base;
                    term *= BigRational::from_integer(BigInt::from(coeff));
                    total += term;
                }
                Ok(Value::Number(total))
            }
            Target::EPolynomial => {
                let mut total = EPolynomial::zero();
                for (&(l_exp, ref monomial), &coeff) in class.terms() {
                    let mut term = EPolynomial::uv_power(l_exp);
                    term = term * self.epoly_monomial(monomial)?;
                    term = term * EPolynomial::from(coeff);
                    total = total + term;
                }
                Ok(Value::Polynomial(total))
            }
        }
    }

    // ----- counting target -----------------------------------------------

    fn count_symbol(&self, symbol: &Symbol, need: Need) -> Result<Pair, RealizeError> {
        match symbol {
            Symbol::Atomic(name) => {
                let data = self
                    .symbols
                    .get(name)
                    .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone()))?;
                let base = data
                    .value
                    .as_ref()
                    .and_then(value_rational)
                    .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone()))?;
                let extension = match need {
                    Need::Base => None,
                    Need::WithCompanion => Some(
                        data.companion.as_ref().and_then(value_rational).ok_or_else(|| {
                            RealizeError::MissingCompanion {
                                symbol: name.clone(),
                                needed: "its count over the quadratic extension",
                            }
                        })?,
                    ),
                };
                Ok(Pair { base, extension })
            }
            Symbol::Sym { n: 2, base } => {
                if let Some(value) = self.atomic_override(base) {
                    let base_value = value_rational(value).ok_or_else(|| {
                        RealizeError::UnassignedSymbol(symbol_name(symbol))
                    })?;
                    return finish_sym2(base_value, need, symbol);
                }
                // The rule needs the base over both the ground field and
                // its quadratic extension; a further extension (demanded
                // when this symbol sits inside another symmetric square)
                // would need quartic-extension data the environment does
                // not carry.
                let inner = self.count_monomial(base, Need::WithCompanion)?;
                let extension = inner.extension.expect("requested companion");
                let doubled = &inner.base * &inner.base + extension;
                let value = exact_half(&doubled, symbol)?;
                finish_sym2(value, need, symbol)
            }
            Symbol::Sym { .. } => Err(RealizeError::UnresolvableSym(symbol_name(symbol))),
        }
    }

    fn count_monomial(&self, monomial: &Monomial, need: Need) -> Result<Pair, RealizeError> {
        let mut base = BigRational::one();
        let mut extension = match need {
            Need::Base => None,
            Need::WithCompanion => Some(BigRational::one()),
        };
        for (symbol, mult) in monomial.grouped() {
            let pair = self.count_symbol(symbol, need)?;
            for _ in 0..mult {
                base *= &pair.base;
                if let Some(ext) = extension.as_mut() {
                    *ext *= pair.extension.as_ref().expect("requested companion");
                }
            }
        }
        Ok(Pair { base, extension })
    }

    // ----- Euler target ---------------------------------------------------

    fn euler_symbol(&self, symbol: &Symbol) -> Result<BigRational, RealizeError> {
        match symbol {
            Symbol::Atomic(name) => self
                .symbols
                .get(name)
                .and_then(|d| d.value.as_ref())
                .and_then(value_rational)
                .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone())),
            Symbol::Sym { n, base } => {
                if *n == 2 {
                    if let Some(value) = self.atomic_override(base) {
                        return value_rational(value)
                            .ok_or_else(|| RealizeError::UnassignedSymbol(symbol_name(symbol)));
                    }
                }
                let chi = self.euler_monomial(base)?;
                if !chi.is_integer() {
                    return Err(RealizeError::NonIntegralRule { symbol: symbol_name(symbol) });
                }
                Ok(BigRational::from_integer(rising_binomial(&chi.to_integer(), *n)))
            }
        }
    }

    fn euler_monomial(&self, monomial: &Monomial) -> Result<BigRational, RealizeError> {
        let mut total = BigRational::one();
        for (symbol, mult) in monomial.grouped() {
            let value = self.euler_symbol(symbol)?;
            for _ in 0..mult {
                total *= &value;
            }
        }
        Ok(total)
    }

    // ----- real-Euler target ----------------------------------------------

    /// Resolves a symbol to its real Euler characteristic, together with
    /// the complex one when the caller needs it. Both recursions close:
    /// `chi_R(Sym^2) = (chi_R^2 + chi_C)/2` and
    /// `chi_C(Sym^2) = chi_C(chi_C + 1)/2`.
    fn real_symbol(&self, symbol: &Symbol, need: Need) -> Result<Pair, RealizeError> {
        match symbol {
            Symbol::Atomic(name) => {
                let data = self
                    .symbols
                    .get(name)
                    .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone()))?;
                let base = data
                    .value
                    .as_ref()
                    .and_then(value_rational)
                    .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone()))?;
                let extension = match need {
                    Need::Base => None,
                    Need::WithCompanion => Some(
                        data.companion.as_ref().and_then(value_rational).ok_or_else(|| {
                            RealizeError::MissingCompanion {
                                symbol: name.clone(),
                                needed: "the Euler characteristic of its complex points",
                            }
                        })?,
                    ),
                };
                Ok(Pair { base, extension })
            }
            Symbol::Sym { n: 2, base } => {
                if let Some(value) = self.atomic_override(base) {
                    let base_value = value_rational(value).ok_or_else(|| {
                        RealizeError::UnassignedSymbol(symbol_name(symbol))
                    })?;
                    return finish_real_sym2(base_value, None, need, symbol);
                }
                let inner = self.real_monomial(base, Need::WithCompanion)?;
                let chi_c = inner.extension.expect("requested companion");
                let doubled = &inner.base * &inner.base + &chi_c;
                let chi_r = exact_half(&doubled, symbol)?;
                finish_real_sym2(chi_r, Some(chi_c), need, symbol)
            }
            Symbol::Sym { .. } => Err(RealizeError::UnresolvableSym(symbol_name(symbol))),
        }
    }

    fn real_monomial(&self, monomial: &Monomial, need: Need) -> Result<Pair, RealizeError> {
        let mut base = BigRational::one();
        let mut extension = match need {
            Need::Base => None,
            Need::WithCompanion => Some(BigRational::one()),
        };
        for (symbol, mult) in monomial.grouped() {
            let pair = self.real_symbol(symbol, need)?;
            for _ in 0..mult {
                base *= &pair.base;
                if let Some(ext) = extension.as_mut() {
                    *ext *= pair.extension.as_ref().expect("requested companion");
                }
            }
        }
        Ok(Pair { base, extension })
    }

    // ----- E-polynomial target --------------------------------------------

    fn epoly_symbol(&self, symbol: &Symbol) -> Result<EPolynomial, RealizeError> {
        match symbol {
            Symbol::Atomic(name) => self
                .symbols
                .get(name)
                .and_then(|d| d.value.as_ref())
                .and_then(|v| v.as_polynomial().cloned())
                .ok_or_else(|| RealizeError::UnassignedSymbol(name.clone())),
            Symbol::Sym { n: 2, base } => {
                if let Some(value) = self.atomic_override(base) {
                    return value
                        .as_polynomial()
                        .cloned()
                        .ok_or_else(|| RealizeError::UnassignedSymbol(symbol_name(symbol)));
                }
                let e = self.epoly_monomial(base)?;
                let doubled = &(&e * &e) + &e.frobenius_scale(2);
                doubled
                    .halved()
                    .ok_or_else(|| RealizeError::NonIntegralRule { symbol: symbol_name(symbol) })
            }
            Symbol::Sym { .. } => Err(RealizeError::UnresolvableSym(symbol_name(symbol))),
        }
    }

    fn epoly_monomial(&self, monomial: &Monomial) -> Result<EPolynomial, RealizeError> {
        let mut total = EPolynomial::one();
        for (symbol, mult) in monomial.grouped() {
            let value = self.epoly_symbol(symbol)?;
            for _ in 0..mult {
                total = total * &value;
            }
        }
        Ok(total)
    }

    /// The override for `Sym^2` of a single atomic symbol, if one is set.
    fn atomic_override(&self, base: &Monomial) -> Option<&Value> {
        match base.symbols() {
            [Symbol::Atomic(name)] => self.symbols.get(name)?.sym2_override.as_ref(),
            _ => None,
        }
    }
}

/// Whether a resolution needs companion data (quadratic-extension count or
/// complex Euler characteristic) alongside the base value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Need {
    Base,
    WithCompanion,
}

struct Pair {
    base: BigRational,
    extension: Option<BigRational>,
}

fn value_rational(value: &Value) -> Option<BigRational> {
    match value {
        Value::Number(r) => Some(r.clone()),
        Value::Polynomial(_) => None,
    }
}

fn symbol_name(symbol: &Symbol) -> String {
    format!("{symbol}")
}

fn rational_power(base: &BigRational, exp: i64) -> BigRational {
    let exp = i32::try_from(exp).expect("exponent fits in i32");
    if exp < 0 {
        assert!(!base.is_zero(), "inverting zero");
    }
    base.pow(exp)
}

/// Halves a rule numerator, rejecting odd values. Symmetric-square bases
/// carry no powers of the affine-line class, so the numerator is always an
/// integer in a well-typed environment.
fn exact_half(value: &BigRational, symbol: &Symbol) -> Result<BigRational, RealizeError> {
    let half = value / BigRational::from_integer(BigInt::from(2));
    if !half.is_integer() {
        return Err(RealizeError::NonIntegralRule { symbol: symbol_name(symbol) });
    }
    Ok(half)
}

fn finish_sym2(value: BigRational, need: Need, symbol: &Symbol) -> Result<Pair, RealizeError> {
    match need {
        Need::Base => Ok(Pair { base: value, extension: None }),
        // The symmetric square's own quadratic-extension count would need
        // quartic-extension data; nothing in the environment carries it.
        Need::WithCompanion => Err(RealizeError::UnresolvableSym(symbol_name(symbol))),
    }
}

fn finish_real_sym2(
    chi_r: BigRational,
    chi_c: Option<BigRational>,
    need: Need,
    symbol: &Symbol,
) -> Result<Pair, RealizeError> {
    match need {
        Need::Base => Ok(Pair { base: chi_r, extension: None }),
        Need::WithCompanion => match chi_c {
            // chi_C of a symmetric square follows the complex rule.
            Some(chi_c) => {
                let ext = &chi_c * (&chi_c + BigRational::one())
                    / BigRational::from_integer(BigInt::from(2));
                Ok(Pair { base: chi_r, extension: Some(ext) })
            }
            None => Err(RealizeError::MissingCompanion {
                symbol: symbol_name(symbol),
                needed: "the Euler characteristic of its complex points",
            }),
        },
    }
}

/// `C(chi + n - 1, n)`: the Euler characteristic of the n-th symmetric
/// power of a space with Euler characteristic `chi`. A product of `n`
/// consecutive integers divided by `n!`, hence always integral.
fn rising_binomial(chi: &BigInt, n: u32) -> BigInt {
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for k in 0..n {
        numerator *= chi + BigInt::from(k);
        denominator *= BigInt::from(k + 1);
    }
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, &denominator);
    debug_assert!(remainder.is_zero());
    quotient
}
