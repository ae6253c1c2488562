//! Hodge diamonds as finitely supported dimension tables.
//!
//! A diamond records `h^{p,q}` for bidegrees `(p, q)`; nothing finer than
//! dimensions (no polarizations, no lattices) is modeled. Bidegrees are
//! signed so that abstract tables can be Tate-twisted freely; everything
//! produced from geometry stays in the first quadrant.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Finitely supported map `(p, q) -> h^{p,q}`, zero entries never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HodgeDiamond {
    dims: BTreeMap<(i64, i64), u64>,
}

impl HodgeDiamond {
    pub fn zero() -> Self {
        HodgeDiamond { dims: BTreeMap::new() }
    }

    /// Builds a diamond from `(p, q, dim)` entries (summing duplicates).
    pub fn from_entries(entries: impl IntoIterator<Item = (i64, i64, u64)>) -> Self {
        let mut d = HodgeDiamond::zero();
        for (p, q, dim) in entries {
            d.add(p, q, dim);
        }
        d
    }

    /// The table of a single Tate class `Q(-k)`, sitting at `(k, k)`.
    pub fn tate(k: i64) -> Self {
        HodgeDiamond::from_entries([(k, k, 1)])
    }

    pub fn add(&mut self, p: i64, q: i64, dim: u64) {
        if dim == 0 {
            return;
        }
        *self.dims.entry((p, q)).or_insert(0) += dim;
    }

    pub fn dim(&self, p: i64, q: i64) -> u64 {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// All stored entries, ordered by bidegree.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    /// Sum of all dimensions.
    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    /// The Betti number `b_w = sum_{p+q=w} h^{p,q}`.
    pub fn betti(&self, w: i64) -> u64 {
        self.dims.iter().filter(|((p, q), _)| p + q == w).map(|(_, &v)| v).sum()
    }

    /// The alternating sum `sum (-1)^{p+q} h^{p,q}`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .map(|((p, q), &v)| {
                let v = i64::try_from(v).expect("dimension fits in i64");
                if (p + q).rem_euclid(2) == 0 { v } else { -v }
            })
            .sum()
    }

    /// Largest weight with a nonzero entry.
    pub fn max_weight(&self) -> Option<i64> {
        self.dims.keys().map(|(p, q)| p + q).max()
    }

    /// Hodge symmetry `h^{p,q} = h^{q,p}`.
    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().all(|(&(p, q), &v)| self.dim(q, p) == v)
    }

    /// Whether all entries sit on the line `p + q = w`.
    pub fn is_pure_of_weight(&self, w: i64) -> bool {
        self.dims.keys().all(|(p, q)| p + q == w)
    }

    /// Poincaré self-duality about total weight `2n`:
    /// `h^{p,q} = h^{n-p, n-q}`.
    pub fn is_self_dual(&self, n: i64) -> bool {
        self.dims.iter().all(|(&(p, q), &v)| self.dim(n - p, n - q) == v)
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let mut out = self.clone();
        for ((p, q), v) in other.entries() {
            out.add(p, q, v);
        }
        out
    }

    /// Shifts every bidegree by `(k, k)` — the dimension table of a Tate
    /// twist by `-k` (so `k = 1` raises the weight by two).
    pub fn twist(&self, k: i64) -> HodgeDiamond {
        HodgeDiamond {
            dims: self.dims.iter().map(|(&(p, q), &v)| ((p + k, q + k), v)).collect(),
        }
    }
}

impl Serialize for HodgeDiamond {
    /// Serializes as a flat JSON object `{"p,q": dim}` in bidegree order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.dims.len()))?;
        for (&(p, q), &v) in &self.dims {
            map.serialize_entry(&format!("{p},{q}"), &v)?;
        }
        map.end()
    }
}

impl fmt::Display for HodgeDiamond {
    /// Row layout: one row per weight, entries `h^{p,q}` with `p`
    /// descending within the row, rows centered on the widest one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        // The apparent complex dimension: entries of an n-fold satisfy
        // max(p, q) <= n.
        let n = self.dims.keys().map(|&(p, q)| p.max(q)).max().unwrap_or(0).max(0);
        let rows: Vec<String> = (0..=2 * n)
            .map(|w| {
                let lo = (w - n).max(0);
                let hi = w.min(n);
                (lo..=hi)
                    .rev()
                    .map(|p| self.dim(p, w - p).to_string())
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect();
        let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let pad = (width - row.len()) / 2;
            write!(f, "{:pad$}{row}", "", pad = pad)?;
        }
        Ok(())
    }
}
