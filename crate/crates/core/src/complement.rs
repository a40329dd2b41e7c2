//! Divisibility bounds for `delta_n(U, t)` and upper bounds on the spectral
//! pairs of the middle Alexander module of the complement `U`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::cyclotomic::CyclotomicFactorization;
use crate::error::InvariantError;
use crate::milnor::{milnor_dim, milnor_dim_at};
use crate::spec::{xi, HodgeNumbers, HypersurfaceSpec};
use crate::table::{alpha, conjugate_alpha, Alpha, PairKey, SpectralPairTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    AtMost(u64),
    Exactly(u64),
}

impl Bound {
    pub fn value(self) -> u64 {
        match self {
            Bound::AtMost(v) | Bound::Exactly(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bound::Exactly(_))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtMost(v) => write!(f, "<={v}"),
            Bound::Exactly(v) => write!(f, "={v}"),
        }
    }
}

/// Upper bounds (and known exact values) for spectral pairs. Keys that are
/// absent are bounded by zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundTable {
    entries: BTreeMap<PairKey, Bound>,
}

impl BoundTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, p: i32, q: i32, a: Alpha, bound: Bound) {
        self.entries.insert(PairKey::new(p, q, a), bound);
    }

    pub fn get(&self, p: i32, q: i32, a: Alpha) -> Bound {
        self.entries
            .get(&PairKey::new(p, q, a))
            .copied()
            .unwrap_or(Bound::AtMost(0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PairKey, Bound)> {
        self.entries.iter().map(|(k, b)| (k, *b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keys flagged as exact equalities.
    pub fn exact_entries(&self) -> impl Iterator<Item = (&PairKey, u64)> {
        self.entries
            .iter()
            .filter(|(_, b)| b.is_exact())
            .map(|(k, b)| (k, b.value()))
    }

    /// Every entry of `self` is at most the matching entry of `other`.
    pub fn is_within(&self, other: &BoundTable) -> bool {
        self.entries
            .iter()
            .all(|(k, b)| b.value() <= other.get(k.p, k.q, k.alpha).value())
    }

    /// Whether a concrete table respects these bounds.
    pub fn admits(&self, table: &SpectralPairTable) -> bool {
        let keys_ok = table
            .iter()
            .all(|(k, c)| c <= self.get(k.p, k.q, k.alpha).value());
        let exact_ok = self
            .exact_entries()
            .all(|(k, v)| table.get(k.p, k.q, k.alpha) == v);
        keys_ok && exact_ok
    }
}

/// `m * alpha` if it is an integer, else 1.
pub fn mhat(m: u32, a: Alpha) -> u64 {
    debug_assert!(a > Alpha::zero() && a < Alpha::from_integer(1));
    let x = a * Alpha::from_integer(m as i64);
    if x.is_integer() {
        x.to_integer() as u64
    } else {
        1
    }
}

/// Divisor of `delta_n(U, t)` coming from the Milnor fiber at infinity:
/// `(t - 1)^{(-1)^{n+1}} (t^d - 1)^xi`.
///
/// Formal: for even `n` the `Phi_1` multiplicity can be zero or negative.
pub fn divisibility_bound_infinity(n: u32, d: u32) -> CyclotomicFactorization {
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let (xi, _) = xi(n, d);
    CyclotomicFactorization::phi(1, sign)
        .mul(&CyclotomicFactorization::t_pow_minus_one(d as u64).pow(xi))
}

/// Divisor of `delta_n(U, t)` coming from the singular points:
/// `(t - 1)^mu prod_x Delta_x(t)`.
pub fn divisibility_bound_local(
    spec: &HypersurfaceSpec,
) -> Result<CyclotomicFactorization, InvariantError> {
    let global = spec.global_milnor();
    let local = spec.local_milnor_sum();
    if local > global {
        return Err(InvariantError::NegativeMu {
            local: local as u64,
            global: global as u64,
        });
    }
    Ok(spec
        .singularities
        .iter()
        .fold(CyclotomicFactorization::phi(1, global - local), |acc, e| {
            acc.mul(&e.singularity.local_alexander().pow(e.count as i64))
        }))
}

fn summed_local_pairs(spec: &HypersurfaceSpec) -> SpectralPairTable {
    spec.singularities
        .iter()
        .fold(SpectralPairTable::new(), |acc, e| {
            let local = e.singularity.local_pairs();
            (0..e.count).fold(acc, |t, _| t.add_table(&local))
        })
}

/// General bound: `min(local side, Milnor algebra side)` for weight `n`,
/// `alpha > 0`, and for weight `n + 1`, `alpha = 0`.
///
/// Without `hodge_d` the weight `n + 1` entries carry only the Milnor
/// algebra side.
pub fn spectral_bound_complement(
    spec: &HypersurfaceSpec,
    hodge_d: Option<&HodgeNumbers>,
) -> BoundTable {
    let (n, d) = (spec.n, spec.d);
    let ni = n as i32;
    let local = summed_local_pairs(spec);
    let mut out = BoundTable::new();

    let mut alphas: Vec<Alpha> = (1..d as i64).map(|j| alpha(j, d as i64)).collect();
    alphas.extend(local.non_unipotent().iter().map(|(k, _)| k.alpha));
    alphas.sort();
    alphas.dedup();
    for p in 0..=ni {
        for &a in &alphas {
            let local_side = local.get(p, ni - p, a);
            let milnor_side = milnor_dim_at(n, d, p, a);
            if local_side > 0 || milnor_side > 0 {
                out.set(p, ni - p, a, Bound::AtMost(local_side.min(milnor_side)));
            }
        }
    }

    for p in 0..=ni + 1 {
        let q = ni + 1 - p;
        let milnor_side = milnor_dim(n, d, p as i64 * d as i64 - n as i64 - 1);
        let bound = match hodge_d {
            Some(h) => {
                let local_side =
                    local.get(p, q, Alpha::zero()) + h.get(&(p, q)).copied().unwrap_or(0);
                local_side.min(milnor_side)
            }
            None => milnor_side,
        };
        if bound > 0 || milnor_side > 0 {
            out.set(p, q, Alpha::zero(), Bound::AtMost(bound));
        }
    }
    out
}

/// Plane-curve bounds: `h^{0,1}_{j/d} = h^{1,0}_{1-j/d} <= j - 1` and
/// `h^{1,1}_0 = r - 1` exactly.
pub fn spectral_bound_curve(d: u32, r: u32) -> BoundTable {
    let mut out = BoundTable::new();
    let di = d as i64;
    for j in 1..di {
        let a = alpha(j, di);
        out.set(0, 1, a, Bound::AtMost(j as u64 - 1));
        out.set(1, 0, conjugate_alpha(a), Bound::AtMost(j as u64 - 1));
    }
    out.set(1, 1, Alpha::zero(), Bound::Exactly(r as u64 - 1));
    out
}

/// Line-arrangement bounds from the weak combinatorial data:
/// `min(d alpha - 1, sum_i (mhat_i(alpha) - 1))` and `h^{1,1}_0 = d - 1`.
pub fn spectral_bound_arrangement(d: u32, multiplicities: &[u32]) -> BoundTable {
    let mut out = BoundTable::new();
    let di = d as i64;
    for j in 1..di {
        let a = alpha(j, di);
        let local: u64 = multiplicities.iter().map(|m| mhat(*m, a) - 1).sum();
        let b = Bound::AtMost((j as u64 - 1).min(local));
        out.set(0, 1, a, b);
        out.set(1, 0, conjugate_alpha(a), b);
    }
    out.set(1, 1, Alpha::zero(), Bound::Exactly(d as u64 - 1));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::LocalSingularity;

    #[test]
    fn mhat_examples() {
        assert_eq!(mhat(6, alpha(1, 2)), 3);
        assert_eq!(mhat(6, alpha(1, 4)), 1);
        assert_eq!(mhat(3, alpha(2, 3)), 2);
    }

    #[test]
    fn infinity_divisibility_examples() {
        assert_eq!(
            divisibility_bound_infinity(1, 3),
            CyclotomicFactorization::from_factors([(1, 2), (3, 1)])
        );
        let b = divisibility_bound_infinity(2, 2);
        assert_eq!(b.multiplicity(1), 0);
        assert_eq!(b, CyclotomicFactorization::phi(2, 1));
        assert_eq!(
            divisibility_bound_infinity(1, 2),
            CyclotomicFactorization::phi(1, 1)
        );
    }

    #[test]
    fn local_divisibility_examples() {
        let generic = HypersurfaceSpec::line_arrangement(3, &[2, 2, 2]);
        assert_eq!(
            divisibility_bound_local(&generic).unwrap(),
            CyclotomicFactorization::phi(1, 4)
        );
        let cusp =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 3), 1);
        assert_eq!(
            divisibility_bound_local(&cusp).unwrap(),
            CyclotomicFactorization::from_factors([(1, 2), (6, 1)])
        );
        let quartic = HypersurfaceSpec::new(1, 4, 1);
        assert_eq!(
            divisibility_bound_local(&quartic).unwrap(),
            CyclotomicFactorization::phi(1, 9)
        );
        let too_many =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 6), 1);
        assert!(matches!(
            divisibility_bound_local(&too_many),
            Err(InvariantError::NegativeMu {
                local: 5,
                global: 4
            })
        ));
    }

    #[test]
    fn general_bound_examples() {
        let cusp =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 3), 1);
        let b = spectral_bound_complement(&cusp, None);
        assert_eq!(b.get(0, 1, alpha(5, 6)), Bound::AtMost(0));
        assert_eq!(b.get(0, 1, alpha(2, 3)), Bound::AtMost(0));

        let concurrent = HypersurfaceSpec::line_arrangement(3, &[3]);
        let b = spectral_bound_complement(&concurrent, None);
        assert_eq!(b.get(0, 1, alpha(2, 3)), Bound::AtMost(1));
        assert_eq!(b.get(1, 0, alpha(1, 3)), Bound::AtMost(1));

        let smooth = HypersurfaceSpec::new(1, 5, 1);
        let b = spectral_bound_complement(&smooth, None);
        assert!(b
            .iter()
            .filter(|(k, _)| !k.alpha.is_zero())
            .all(|(_, v)| v.value() == 0));
    }

    #[test]
    fn hodge_d_enters_weight_n_plus_one() {
        let concurrent = HypersurfaceSpec::line_arrangement(3, &[3]);
        let without = spectral_bound_complement(&concurrent, None);
        assert_eq!(without.get(1, 1, Alpha::zero()), Bound::AtMost(2));
        let hd = HodgeNumbers::new();
        let with = spectral_bound_complement(&concurrent, Some(&hd));
        // local (1,1,0) mass of an ordinary triple point is 2
        assert_eq!(with.get(1, 1, Alpha::zero()), Bound::AtMost(2));
        let nodal =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Ordinary(2), 1);
        let with = spectral_bound_complement(&nodal, Some(&hd));
        assert_eq!(with.get(1, 1, Alpha::zero()), Bound::AtMost(1));
    }

    #[test]
    fn curve_bound_examples() {
        let b = spectral_bound_curve(3, 3);
        assert_eq!(b.get(1, 1, Alpha::zero()), Bound::Exactly(2));
        assert_eq!(b.get(0, 1, alpha(2, 3)), Bound::AtMost(1));
        assert_eq!(b.get(1, 0, alpha(1, 3)), Bound::AtMost(1));
        let b = spectral_bound_curve(2, 2);
        assert_eq!(b.get(1, 1, Alpha::zero()), Bound::Exactly(1));
        assert!(b.iter().filter(|(_, v)| v.value() > 0).count() == 1);
        for d in 2..=12 {
            assert_eq!(
                spectral_bound_curve(d, 1)
                    .get(0, 1, alpha(1, d as i64))
                    .value(),
                0
            );
        }
    }

    #[test]
    fn arrangement_bound_examples() {
        assert_eq!(
            spectral_bound_arrangement(3, &[2, 2, 2]).get(0, 1, alpha(2, 3)),
            Bound::AtMost(0)
        );
        assert_eq!(
            spectral_bound_arrangement(3, &[3]).get(0, 1, alpha(2, 3)),
            Bound::AtMost(1)
        );
        assert_eq!(
            spectral_bound_arrangement(4, &[2; 6]).get(0, 1, alpha(1, 4)),
            Bound::AtMost(0)
        );
        let b = spectral_bound_arrangement(6, &[3, 3, 3, 3, 2, 2, 2]);
        assert!(b.is_within(&spectral_bound_curve(6, 6)));
    }

    #[test]
    fn admits_checks_exact_entries() {
        let b = spectral_bound_curve(3, 3);
        let t = SpectralPairTable::from_entries([(1, 1, Alpha::zero(), 2)]);
        assert!(b.admits(&t));
        let t = SpectralPairTable::from_entries([(1, 1, Alpha::zero(), 1)]);
        assert!(!b.admits(&t));
    }
}
