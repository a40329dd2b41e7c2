//! Alexander polynomial and spectral pairs of the middle Alexander module
//! `H^n(M^c)` of the boundary manifold `M`.
//!
//! The non-unipotent part is always determined by local data and the fiber at
//! infinity. The unipotent part is known for plane curves and for rational
//! homology manifolds; in other cases only `delta_n(M, t)` and the
//! non-unipotent table are produced.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::complement::mhat;
use crate::cyclotomic::CyclotomicFactorization;
use crate::error::InvariantError;
use crate::local::LocalSingularity;
use crate::milnor::{milnor_dim, steenbrink_infinity};
use crate::spec::{xi, HodgeNumbers, HypersurfaceSpec};
use crate::table::{alpha, conjugate_alpha, Alpha, SpectralPairTable};

/// Everything known about `H^n(M^c)` for a given hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryInvariants {
    pub delta_m: CyclotomicFactorization,
    pub error_term: Option<CyclotomicFactorization>,
    pub pairs_nonunipotent: SpectralPairTable,
    pub pairs_unipotent: Option<SpectralPairTable>,
    pub pairs_full: Option<SpectralPairTable>,
    pub weight_resolved: Option<BTreeMap<i32, SpectralPairTable>>,
}

fn check_mu(spec: &HypersurfaceSpec) -> Result<i64, InvariantError> {
    let global = spec.global_milnor();
    let local = spec.local_milnor_sum();
    if local > global {
        return Err(InvariantError::NegativeMu {
            local: local as u64,
            global: global as u64,
        });
    }
    Ok(global - local)
}

fn require_curve(spec: &HypersurfaceSpec) -> Result<(), InvariantError> {
    if spec.n == 1 {
        Ok(())
    } else {
        Err(InvariantError::NotACurve(spec.n))
    }
}

/// `delta_n(M, t) = (t-1)^{(-1)^{n+1} + mu} (t^d - 1)^xi prod_x Delta_x(t)`.
///
/// The `Phi_1` exponents are combined before checking signs: for even `n`
/// with `mu = 0` the first factor is `(t-1)^{-1}`, which `t^d - 1` absorbs.
pub fn boundary_alexander(
    spec: &HypersurfaceSpec,
) -> Result<CyclotomicFactorization, InvariantError> {
    let mu = check_mu(spec)?;
    let sign = if spec.n.is_multiple_of(2) { -1 } else { 1 };
    let (xi, _) = xi(spec.n, spec.d);
    let product = spec.singularities.iter().fold(
        CyclotomicFactorization::phi(1, sign + mu)
            .mul(&CyclotomicFactorization::t_pow_minus_one(spec.d as u64).pow(xi)),
        |acc, e| acc.mul(&e.singularity.local_alexander().pow(e.count as i64)),
    );
    if let Some((_, m)) = product.factors().iter().find(|(_, m)| **m < 0) {
        return Err(InvariantError::NegativeExponent(*m));
    }
    Ok(product)
}

/// `e(t) = delta_n(M, t) / (delta_n(U, t) delta_n(U, t^-1))`, normalized.
pub fn error_term(
    spec: &HypersurfaceSpec,
    delta_u: &CyclotomicFactorization,
) -> Result<CyclotomicFactorization, InvariantError> {
    let delta_m = boundary_alexander(spec)?;
    let square = delta_u.mul(&delta_u.bar());
    if !delta_m.is_divisible_by(&square) {
        return Err(InvariantError::NotDivisible);
    }
    let e = delta_m.div(&square).normalized();
    if e.degree() % 2 != 0 {
        return Err(InvariantError::OddDegree(e.degree()));
    }
    Ok(e)
}

fn summed_local_pairs(spec: &HypersurfaceSpec) -> SpectralPairTable {
    spec.singularities
        .iter()
        .fold(SpectralPairTable::new(), |acc, e| {
            let local = e.singularity.local_pairs();
            (0..e.count).fold(acc, |t, _| t.add_table(&local))
        })
}

/// `h^{p,q}_alpha(M^c) = sum_x h^{p,q}_alpha(F_x) + h^{p,q}_alpha(F_inf)` for `alpha > 0`.
pub fn boundary_pairs_nonunipotent(spec: &HypersurfaceSpec) -> SpectralPairTable {
    summed_local_pairs(spec)
        .non_unipotent()
        .add_table(&steenbrink_infinity(spec.n, spec.d).non_unipotent())
}

/// `(2 h^{0,1}_0, h^{0,0}_0)` for a plane curve, checking sign and parity.
fn curve_unipotent_counts(spec: &HypersurfaceSpec) -> Result<(u64, u64), InvariantError> {
    let mu = check_mu(spec)?;
    let excess = spec.branch_excess();
    let (r, d) = (spec.r as i64, spec.d as i64);
    let h00 = excess + d - r;
    if h00 < 0 {
        return Err(InvariantError::NegativeCount {
            what: "sum(r_x - 1) + d - r",
            value: h00,
        });
    }
    let twice_h01 = mu + 2 * r - d - 1 - excess;
    if twice_h01 < 0 {
        return Err(InvariantError::NegativeCount {
            what: "mu + 2r - d - 1 - sum(r_x - 1)",
            value: twice_h01,
        });
    }
    if twice_h01 % 2 != 0 {
        return Err(InvariantError::ParityViolation(twice_h01));
    }
    Ok((twice_h01 as u64, h00 as u64))
}

/// Full table of `H^1(M^c)` for a plane curve, from the local singularities.
pub fn boundary_pairs_curve(spec: &HypersurfaceSpec) -> Result<SpectralPairTable, InvariantError> {
    require_curve(spec)?;
    let (twice_h01, h00) = curve_unipotent_counts(spec)?;
    let zero = Alpha::zero();
    let mut table = SpectralPairTable::from_entries([
        (0, 0, zero, h00),
        (1, 1, zero, h00),
        (0, 1, zero, twice_h01 / 2),
        (1, 0, zero, twice_h01 / 2),
    ]);

    let local = summed_local_pairs(spec);
    let di = spec.d as i64;
    let mut alphas: Vec<Alpha> = (1..di).map(|j| alpha(j, di)).collect();
    alphas.extend(
        local
            .iter()
            .filter(|(k, _)| !k.alpha.is_zero() && matches!((k.p, k.q), (0, 1) | (0, 0)))
            .map(|(k, _)| k.alpha),
    );
    alphas.sort();
    alphas.dedup();
    for a in alphas {
        let v = local.get(0, 1, a) + mhat(spec.d, a) - 1;
        table.add(0, 1, a, v);
        table.add(1, 0, conjugate_alpha(a), v);
        let w = local.get(0, 0, a);
        table.add(0, 0, a, w);
        table.add(1, 1, a, w);
    }
    Ok(table)
}

/// Full table of `H^1(M^c)` for a line arrangement from its weak
/// combinatorial data (number of lines and point multiplicities).
pub fn boundary_pairs_arrangement(d: u32, multiplicities: &[u32]) -> SpectralPairTable {
    let zero = Alpha::zero();
    let h00: u64 = multiplicities.iter().map(|m| *m as u64 - 1).sum();
    let mut table = SpectralPairTable::from_entries([(0, 0, zero, h00), (1, 1, zero, h00)]);
    let mut alphas: Vec<Alpha> = Vec::new();
    for m in multiplicities.iter().copied().chain([d]) {
        alphas.extend((1..m as i64).map(|j| alpha(j, m as i64)));
    }
    alphas.sort();
    alphas.dedup();
    for a in alphas {
        let v: u64 = multiplicities.iter().map(|m| mhat(*m, a) - 1).sum::<u64>() + mhat(d, a) - 1;
        table.add(0, 1, a, v);
        table.add(1, 0, conjugate_alpha(a), v);
    }
    table
}

/// Hodge numbers of `H^k(CP^dim)`.
pub fn projective_space_hodge(dim: u32, k: u32) -> HodgeNumbers {
    let mut out = HodgeNumbers::new();
    if k.is_multiple_of(2) && k <= 2 * dim {
        out.insert((k as i32 / 2, k as i32 / 2), 1);
    }
    out
}

/// `h^{p, n-p}` of the primitive middle cohomology of a smooth degree-`d`
/// hypersurface in `CP^{n+1}`: `sum_{i=1}^{d-1} dim M(n, d)_{pd + i - n - 1}`.
///
/// This is `Gr^W_n H^n(F_inf)` summed over eigenvalues.
pub fn smooth_hypersurface_primitive(n: u32, d: u32) -> BTreeMap<i32, u64> {
    let mut out = BTreeMap::new();
    for p in 0..=n as i64 {
        let v: u64 = (1..d as i64)
            .map(|i| milnor_dim(n, d, p * d as i64 + i - n as i64 - 1))
            .sum();
        if v > 0 {
            out.insert(p as i32, v);
        }
    }
    out
}

/// `h^{p, n-p}(H^n(V_sm))`: primitive part plus the class from `CP^{n+1}`.
pub fn smooth_hypersurface_middle(n: u32, d: u32) -> BTreeMap<i32, u64> {
    let mut out = smooth_hypersurface_primitive(n, d);
    for ((p, _), v) in projective_space_hodge(n + 1, n) {
        *out.entry(p).or_insert(0) += v;
    }
    out
}

/// Unipotent spectral pairs of `H^n(M^c)` when `D` is a rational homology
/// manifold, keyed by weight `n - 1`, `n`, `n + 1`.
pub fn boundary_pairs_qhm(
    spec: &HypersurfaceSpec,
) -> Result<BTreeMap<i32, SpectralPairTable>, InvariantError> {
    if !spec.rational_homology_manifold {
        return Err(InvariantError::NotRationalHomologyManifold);
    }
    let ni = spec.n as i32;
    let zero = Alpha::zero();
    let infinity = steenbrink_infinity(spec.n, spec.d).unipotent();

    let mut gr_f_total: BTreeMap<i32, u64> = BTreeMap::new();
    for (index, e) in spec.singularities.iter().enumerate() {
        let dims = e
            .singularity
            .gr_f_dims()
            .ok_or(InvariantError::MissingLocalHodgeData(index))?;
        for (p, v) in dims {
            *gr_f_total.entry(p).or_insert(0) += v * e.count;
        }
    }

    let mut weight_n = SpectralPairTable::new();
    let primitive = smooth_hypersurface_primitive(spec.n, spec.d);
    for p in 0..=ni {
        let v = primitive.get(&p).copied().unwrap_or(0) as i64
            - gr_f_total.get(&p).copied().unwrap_or(0) as i64;
        if v < 0 {
            return Err(InvariantError::NegativeCount {
                what: "primitive Hodge number minus local Gr_F dimensions",
                value: v,
            });
        }
        weight_n.add(p, ni - p, zero, v as u64);
    }

    let weight_below: SpectralPairTable = (0..ni)
        .map(|p| (p, ni - 1 - p, zero, infinity.get(p + 1, ni - p, zero)))
        .collect();

    Ok(BTreeMap::from([
        (ni - 1, weight_below),
        (ni, weight_n),
        (ni + 1, infinity),
    ]))
}

/// Merges a weight-resolved table into one.
pub fn flatten_weights(w: &BTreeMap<i32, SpectralPairTable>) -> SpectralPairTable {
    w.values()
        .fold(SpectralPairTable::new(), |acc, t| acc.add_table(t))
}

/// `(b_1(M), J_1)`: the first Betti number of the boundary manifold and the
/// number of unipotent Jordan blocks on `H^1(M^c)`.
pub fn betti_and_jordan(spec: &HypersurfaceSpec) -> Result<(i64, i64), InvariantError> {
    require_curve(spec)?;
    let mu = check_mu(spec)?;
    let b1 = 2 * spec.r as i64 + mu - 1;
    Ok((b1, b1 - 1))
}

/// Mixed Hodge numbers of the projective closure `V` and of `H^*_c(D)` for a
/// plane curve, keyed by `(degree, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveHodgeNumbers {
    pub projective: BTreeMap<(u32, i32, i32), u64>,
    pub compact_support: BTreeMap<(u32, i32, i32), u64>,
}

pub fn projective_curve_hodge(
    spec: &HypersurfaceSpec,
) -> Result<CurveHodgeNumbers, InvariantError> {
    require_curve(spec)?;
    let (twice_h01, _) = curve_unipotent_counts(spec)?;
    let h01 = twice_h01 / 2;
    let excess = spec.branch_excess();
    let r = spec.r as i64;
    let d = spec.d as i64;
    let h00_v = excess + 1 - r;
    if h00_v < 0 {
        return Err(InvariantError::NegativeCount {
            what: "sum(r_x - 1) + 1 - r",
            value: h00_v,
        });
    }
    let nonzero = |entries: [((u32, i32, i32), u64); 5]| {
        entries.into_iter().filter(|(_, v)| *v > 0).collect()
    };
    Ok(CurveHodgeNumbers {
        projective: nonzero([
            ((0, 0, 0), 1),
            ((1, 0, 0), h00_v as u64),
            ((1, 0, 1), h01),
            ((1, 1, 0), h01),
            ((2, 1, 1), r as u64),
        ]),
        compact_support: nonzero([
            ((1, 0, 0), (excess + d - r) as u64),
            ((1, 0, 1), h01),
            ((1, 1, 0), h01),
            ((2, 1, 1), r as u64),
            ((0, 0, 0), 0),
        ]),
    })
}

/// Assembles every boundary invariant available for `spec`.
pub fn boundary_invariants(spec: &HypersurfaceSpec) -> Result<BoundaryInvariants, InvariantError> {
    let delta_m = boundary_alexander(spec)?;
    let error_term = match &spec.delta_u {
        Some(du) => Some(error_term(spec, du)?),
        None => None,
    };
    let pairs_nonunipotent = boundary_pairs_nonunipotent(spec);
    let (pairs_full, weight_resolved) = if spec.n == 1 {
        let full = boundary_pairs_curve(spec)?;
        let weights = full.by_weight();
        (Some(full), Some(weights))
    } else if spec.rational_homology_manifold {
        let unipotent = boundary_pairs_qhm(spec)?;
        let full = flatten_weights(&unipotent).add_table(&pairs_nonunipotent);
        let weights = full.by_weight();
        (Some(full), Some(weights))
    } else {
        (None, None)
    };
    let pairs_unipotent = pairs_full.as_ref().map(SpectralPairTable::unipotent);
    Ok(BoundaryInvariants {
        delta_m,
        error_term,
        pairs_nonunipotent,
        pairs_unipotent,
        pairs_full,
        weight_resolved,
    })
}

/// Whether every singular point is one of the built-in curve germs.
pub fn all_builtin(spec: &HypersurfaceSpec) -> bool {
    spec.points().all(LocalSingularity::is_builtin)
}
