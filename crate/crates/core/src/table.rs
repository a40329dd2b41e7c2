//! Spectral-pair tables `h^{p,q}_alpha`.
//!
//! A table records, for each Hodge type `(p, q)` and eigenvalue
//! `lambda = e^{2 pi i alpha}` with `alpha` in `[0, 1)`, the dimension of the
//! corresponding eigenspace. The weight of an entry is `p + q`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

/// An eigenvalue argument: an exact reduced fraction in `[0, 1)`.
pub type Alpha = Ratio<i64>;

/// Reduces any rational into `[0, 1)`.
pub fn frac(x: Alpha) -> Alpha {
    x - x.floor()
}

/// `(1 - alpha) mod 1`.
pub fn conjugate_alpha(a: Alpha) -> Alpha {
    frac(Alpha::one() - a)
}

/// Formats `alpha` as `"a/b"`, always with an explicit denominator.
pub fn format_alpha(a: &Alpha) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

/// Parses `"a/b"` or `"a"` into a reduced fraction.
pub fn parse_ratio(s: &str) -> Option<Ratio<i64>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Ratio::new(n.trim().parse().ok()?, d))
        }
        None => Some(Ratio::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    pub p: i32,
    pub q: i32,
    pub alpha: Alpha,
}

impl PairKey {
    /// # Panics
    /// If `alpha` is outside `[0, 1)`.
    pub fn new(p: i32, q: i32, alpha: Alpha) -> Self {
        assert!(
            alpha >= Alpha::zero() && alpha < Alpha::one(),
            "alpha {alpha} outside [0, 1)"
        );
        Self { p, q, alpha }
    }

    pub fn weight(&self) -> i32 {
        self.p + self.q
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, format_alpha(&self.alpha))
    }
}

/// Sparse map `(p, q, alpha) -> count`; zero counts are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SpectralPairTable {
    entries: BTreeMap<PairKey, u64>,
}

impl SpectralPairTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Collects `(p, q, alpha, count)` tuples, summing repeated keys.
    pub fn from_entries<I: IntoIterator<Item = (i32, i32, Alpha, u64)>>(it: I) -> Self {
        let mut t = Self::new();
        for (p, q, a, c) in it {
            t.add(p, q, a, c);
        }
        t
    }

    pub fn add(&mut self, p: i32, q: i32, alpha: Alpha, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry(PairKey::new(p, q, alpha)).or_insert(0) += count;
    }

    pub fn get(&self, p: i32, q: i32, alpha: Alpha) -> u64 {
        self.entries
            .get(&PairKey::new(p, q, alpha))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PairKey, u64)> {
        self.entries.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all counts.
    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Entrywise sum.
    pub fn add_table(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            *out.entries.entry(*k).or_insert(0) += c;
        }
        out
    }

    /// Complex conjugation: `(p, q, alpha) -> (q, p, 1 - alpha)`.
    pub fn conjugate(&self) -> Self {
        Self::from_entries(
            self.entries
                .iter()
                .map(|(k, c)| (k.q, k.p, conjugate_alpha(k.alpha), *c)),
        )
    }

    /// Duality at level `n`: `(p, q, alpha) -> (n - p, n - q, 1 - alpha)`.
    pub fn level_dual(&self, n: i32) -> Self {
        Self::from_entries(
            self.entries
                .iter()
                .map(|(k, c)| (n - k.p, n - k.q, conjugate_alpha(k.alpha), *c)),
        )
    }

    pub fn filter<F: Fn(&PairKey) -> bool>(&self, keep: F) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (*k, *c))
                .collect(),
        }
    }

    /// The non-unipotent part (`alpha > 0`).
    pub fn non_unipotent(&self) -> Self {
        self.filter(|k| !k.alpha.is_zero())
    }

    /// The unipotent part (`alpha = 0`).
    pub fn unipotent(&self) -> Self {
        self.filter(|k| k.alpha.is_zero())
    }

    /// Total count at each eigenvalue argument.
    pub fn alpha_marginals(&self) -> BTreeMap<Alpha, u64> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.entries {
            *out.entry(k.alpha).or_insert(0) += c;
        }
        out
    }

    /// `dim Gr_F^p`, summed over `q` and `alpha`.
    pub fn hodge_graded_dims(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.entries {
            *out.entry(k.p).or_insert(0) += c;
        }
        out
    }

    /// Splits by weight `p + q`.
    pub fn by_weight(&self) -> BTreeMap<i32, SpectralPairTable> {
        let mut out: BTreeMap<i32, SpectralPairTable> = BTreeMap::new();
        for (k, c) in &self.entries {
            out.entry(k.weight()).or_default().entries.insert(*k, *c);
        }
        out
    }
}

impl FromIterator<(i32, i32, Alpha, u64)> for SpectralPairTable {
    fn from_iter<I: IntoIterator<Item = (i32, i32, Alpha, u64)>>(iter: I) -> Self {
        Self::from_entries(iter)
    }
}

impl fmt::Display for SpectralPairTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Shorthand for `Alpha::new(n, d)`.
pub fn alpha(n: i64, d: i64) -> Alpha {
    Alpha::new(n, d)
}
