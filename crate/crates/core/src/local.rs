//! Local invariants of isolated hypersurface singularities.
//!
//! The built-in models are plane-curve germs: the ordinary `m`-fold point
//! `x^m + y^m` and the Brieskorn germ `x^a + y^b`. Anything else (including
//! germs in more variables and germs with non-semisimple monodromy) is
//! supplied as explicit data.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{totient, CyclotomicFactorization};
use crate::error::LocalError;
use crate::table::{frac, Alpha, SpectralPairTable};

/// Explicitly supplied local data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSingularity {
    pub milnor_number: u64,
    pub branches: u64,
    pub alexander: CyclotomicFactorization,
    pub pairs: SpectralPairTable,
    /// `dim Gr_F^p H^n(F_x)` keyed by `p`.
    pub gr_f_dims: Option<BTreeMap<i32, u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalSingularity {
    /// `x^m + y^m`, `m >= 2`.
    Ordinary(u32),
    /// `x^a + y^b`, `a, b >= 2`.
    Brieskorn(u32, u32),
    Explicit(ExplicitSingularity),
}

impl LocalSingularity {
    /// Explicit data for the Brieskorn-Pham germ `x_0^{a_0} + ... + x_n^{a_n}`.
    ///
    /// With two exponents this reproduces [`LocalSingularity::Brieskorn`].
    pub fn brieskorn_pham(exponents: &[u32]) -> Self {
        assert!(!exponents.is_empty() && exponents.iter().all(|a| *a >= 2));
        let n = exponents.len() as i32 - 1;
        let spec = brieskorn_pham_spectrum(exponents);
        let pairs = pairs_from_spectrum(&spec, n);
        let unipotent = pairs.unipotent().total_dim();
        LocalSingularity::Explicit(ExplicitSingularity {
            milnor_number: spec.len() as u64,
            branches: unipotent + 1,
            alexander: alexander_from_spectrum(&spec),
            gr_f_dims: Some(pairs.hodge_graded_dims()),
            pairs,
        })
    }

    pub fn milnor_number(&self) -> u64 {
        match self {
            LocalSingularity::Ordinary(m) => ((*m as u64) - 1).pow(2),
            LocalSingularity::Brieskorn(a, b) => (*a as u64 - 1) * (*b as u64 - 1),
            LocalSingularity::Explicit(e) => e.milnor_number,
        }
    }

    /// Number of local irreducible branches.
    pub fn branches(&self) -> u64 {
        match self {
            LocalSingularity::Ordinary(m) => *m as u64,
            LocalSingularity::Brieskorn(a, b) => a.gcd(b) as u64,
            LocalSingularity::Explicit(e) => e.branches,
        }
    }

    /// Spectrum `{ i/a + j/b }` of a built-in germ, as a sorted multiset in `(0, 2)`.
    pub fn spectrum(&self) -> Result<Vec<Alpha>, LocalError> {
        match self {
            LocalSingularity::Ordinary(m) => Ok(brieskorn_pham_spectrum(&[*m, *m])),
            LocalSingularity::Brieskorn(a, b) => Ok(brieskorn_pham_spectrum(&[*a, *b])),
            LocalSingularity::Explicit(_) => Err(LocalError::ExplicitHasNoSpectrum),
        }
    }

    /// Characteristic polynomial of the local monodromy on `H^n(F_x)`.
    pub fn local_alexander(&self) -> CyclotomicFactorization {
        match self {
            LocalSingularity::Explicit(e) => e.alexander.clone(),
            _ => alexander_from_spectrum(&self.spectrum().expect("built-in germ")),
        }
    }

    /// Spectral pairs of `H^1(F_x)` (or `H^n(F_x)` for explicit data).
    pub fn local_pairs(&self) -> SpectralPairTable {
        match self {
            LocalSingularity::Explicit(e) => e.pairs.clone(),
            _ => pairs_from_spectrum(&self.spectrum().expect("built-in germ"), 1),
        }
    }

    /// `dim Gr_F^p H^n(F_x)`. Built-ins derive it from their pairs; explicit
    /// data must carry it.
    pub fn gr_f_dims(&self) -> Option<BTreeMap<i32, u64>> {
        match self {
            LocalSingularity::Explicit(e) => e.gr_f_dims.clone(),
            _ => Some(self.local_pairs().hodge_graded_dims()),
        }
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, LocalSingularity::Explicit(_))
    }
}

/// `{ sum_i k_i / a_i : 1 <= k_i <= a_i - 1 }`, sorted.
pub fn brieskorn_pham_spectrum(exponents: &[u32]) -> Vec<Alpha> {
    let mut out = vec![Alpha::zero()];
    for &a in exponents {
        let a = a as i64;
        out = out
            .iter()
            .flat_map(|s| (1..a).map(move |k| s + Alpha::new(k, a)))
            .collect();
    }
    out.sort();
    out
}

/// Spectral pairs of a quasi-homogeneous isolated singularity in `n + 1`
/// variables from its spectrum.
///
/// A non-integral `s` gives type `(floor s, n - floor s)` at `alpha = s mod 1`;
/// an integral `s` lies in the eigenvalue-1 part, of type `(s, n + 1 - s)`.
pub fn pairs_from_spectrum(spectrum: &[Alpha], n: i32) -> SpectralPairTable {
    spectrum
        .iter()
        .map(|s| {
            let p = s.floor().to_integer() as i32;
            if s.is_integer() {
                (p, n + 1 - p, Alpha::zero(), 1)
            } else {
                (p, n - p, frac(*s), 1)
            }
        })
        .collect()
}

/// `prod_s (t - e^{2 pi i s})` assembled as cyclotomic multiplicities.
///
/// The spectrum of a germ with rational monodromy is stable under the Galois
/// action, so every primitive `k`-th root appears equally often.
pub fn alexander_from_spectrum(spectrum: &[Alpha]) -> CyclotomicFactorization {
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for s in spectrum {
        *by_order.entry(*frac(*s).denom() as u64).or_insert(0) += 1;
    }
    CyclotomicFactorization::from_factors(by_order.into_iter().map(|(k, count)| {
        let phi = totient(k);
        debug_assert_eq!(count % phi, 0, "spectrum not Galois stable at order {k}");
        (k, (count / phi) as i64)
    }))
}
