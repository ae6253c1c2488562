//! Exact arithmetic in small prime fields and their quadratic and cubic
//! extensions, built as polynomial quotients.

use thiserror::Error;

/// Errors from field construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (the limit is 2^31 - 1)")]
    PrimeTooLarge(u64),
    #[error("extension degree {0} is not supported (only 2 and 3)")]
    UnsupportedDegree(u32),
    #[error("field of order {p}^{degree} is too large to enumerate")]
    ExtensionTooLarge { p: u64, degree: u32 },
}

/// A finite field whose elements can be enumerated by index.
///
/// Implementations are immutable and shared freely across threads; all
/// arithmetic is exact. `element` is a bijection from `0..size()` with
/// `element(0) = 0` and `element(1) = 1`.
pub trait Field: Sync {
    /// Element representation. `Ord` so points have a deterministic order.
    type E: Copy + Eq + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync;

    /// Number of elements.
    fn size(&self) -> u64;
    /// Characteristic (the underlying prime).
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    /// The `index`-th element; a bijection from `0..size()`.
    fn element(&self, index: u64) -> Self::E;
    fn add(&self, a: Self::E, b: Self::E) -> Self::E;
    fn sub(&self, a: Self::E, b: Self::E) -> Self::E;
    fn mul(&self, a: Self::E, b: Self::E) -> Self::E;
    fn neg(&self, a: Self::E) -> Self::E;
    /// Embeds an integer scalar (reduced mod the characteristic).
    fn embed(&self, scalar: u64) -> Self::E;
    /// The `p`-power Frobenius, `x -> x^p`. Identity on a prime field.
    fn frobenius(&self, a: Self::E) -> Self::E;

    fn is_zero(&self, a: Self::E) -> bool {
        a == self.zero()
    }

    /// Exact exponentiation by square-and-multiply.
    fn pow(&self, a: Self::E, mut e: u128) -> Self::E {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: Self::E) -> Self::E {
        assert!(!self.is_zero(a), "inverse of zero");
        self.pow(a, u128::from(self.size()) - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field `F_p`, `p < 2^31` (so products fit in `u64`).
/// Elements are integers in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > (1 << 31) - 1 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type E = u64;

    fn size(&self) -> u64 {
        self.p
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn element(&self, index: u64) -> u64 {
        debug_assert!(index < self.p);
        index
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }
    fn embed(&self, scalar: u64) -> u64 {
        scalar % self.p
    }
    fn frobenius(&self, a: u64) -> u64 {
        a
    }
}

/// Coefficients of an extension-field element in the polynomial basis
/// `1, x, x^2` (the last entry is zero for quadratic extensions).
pub type ExtElem = [u64; 3];

/// `F_{p^2}` or `F_{p^3}` as `F_p[x]/(m)` for the lexicographically smallest
/// monic irreducible `m` (coefficients compared constant term first).
#[derive(Debug, Clone)]
pub struct ExtField {
    base: PrimeField,
    degree: u32,
    /// Non-leading coefficients of the monic modulus, constant term first.
    modulus: Vec<u64>,
}

impl ExtField {
    pub fn new(base: PrimeField, degree: u32) -> Result<Self, FieldError> {
        if degree != 2 && degree != 3 {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        let p = base.p();
        if p.checked_pow(degree).is_none() || p.pow(degree) > (1 << 62) {
            return Err(FieldError::ExtensionTooLarge { p, degree });
        }
        let modulus = smallest_irreducible(&base, degree);
        Ok(ExtField { base, degree, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Non-leading modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

/// The lexicographically smallest (constant term first) monic irreducible of
/// the given degree. For degree 2 and 3, irreducible = no root in `F_p`.
fn smallest_irreducible(base: &PrimeField, degree: u32) -> Vec<u64> {
    let p = base.p();
    let deg = degree as usize;
    let mut coeffs = vec![0u64; deg];
    loop {
        let has_root = (0..p).any(|x| {
            let mut value = base.pow(x, degree as u128);
            for (i, &c) in coeffs.iter().enumerate() {
                value = base.add(value, base.mul(c, base.pow(x, i as u128)));
            }
            value == 0
        });
        if !has_root {
            return coeffs;
        }
        // increment the coefficient vector, least significant = LAST entry
        // (so the scan is lexicographic in (c_0, c_1, ...))
        for i in (0..deg).rev() {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            assert!(i > 0, "no irreducible of degree {degree} over F_{p}");
        }
    }
}

impl Field for ExtField {
    type E = ExtElem;

    fn size(&self) -> u64 {
        self.base.p().pow(self.degree)
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn zero(&self) -> ExtElem {
        [0, 0, 0]
    }
    fn one(&self) -> ExtElem {
        [1 % self.base.p(), 0, 0]
    }
    fn element(&self, index: u64) -> ExtElem {
        debug_assert!(index < self.size());
        let p = self.base.p();
        let mut e = [0u64; 3];
        let mut rest = index;
        for slot in e.iter_mut().take(self.degree as usize) {
            *slot = rest % p;
            rest /= p;
        }
        e
    }
    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut out = [0u64; 3];
        for i in 0..3 {
            out[i] = self.base.add(a[i], b[i]);
        }
        out
    }
    fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut out = [0u64; 3];
        for i in 0..3 {
            out[i] = self.base.sub(a[i], b[i]);
        }
        out
    }
    fn neg(&self, a: ExtElem) -> ExtElem {
        let mut out = [0u64; 3];
        for i in 0..3 {
            out[i] = self.base.neg(a[i]);
        }
        out
    }
    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let deg = self.degree as usize;
        let mut raw = [0u64; 5];
        for i in 0..deg {
            if a[i] == 0 {
                continue;
            }
            for j in 0..deg {
                raw[i + j] = self.base.add(raw[i + j], self.base.mul(a[i], b[j]));
            }
        }
        // reduce x^k for k >= deg using x^deg = -sum modulus[i] x^i
        for k in (deg..2 * deg - 1).rev() {
            let c = raw[k];
            if c == 0 {
                continue;
            }
            raw[k] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                raw[k - deg + i] = self.base.sub(raw[k - deg + i], self.base.mul(c, m));
            }
        }
        [raw[0], raw[1], raw[2]]
    }
    fn embed(&self, scalar: u64) -> ExtElem {
        [scalar % self.base.p(), 0, 0]
    }
    fn frobenius(&self, a: ExtElem) -> ExtElem {
        self.pow(a, u128::from(self.base.p()))
    }
}
