//! Full invariant report for one hypersurface, with cross-checks.
//!
//! Checks come in two kinds. An `Identity` failure means two independent
//! computations disagree, which points at a bug. An `Input` failure means
//! user-supplied optional data (such as `delta_U`) is inconsistent with the
//! rest of the description.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::Zero;
use serde::Serialize;

use crate::boundary::{
    boundary_alexander, boundary_pairs_arrangement, boundary_pairs_curve,
    boundary_pairs_nonunipotent, boundary_pairs_qhm, error_term, flatten_weights,
    projective_curve_hodge, CurveHodgeNumbers,
};
use crate::complement::{
    divisibility_bound_infinity, divisibility_bound_local, spectral_bound_arrangement,
    spectral_bound_complement, spectral_bound_curve, Bound, BoundTable,
};
use crate::cyclotomic::CyclotomicFactorization;
use crate::error::InvariantError;
use crate::io::{
    factorization_to_document, table_to_rows, FactorizationDocument, PairRow, SpecDocument,
};
use crate::milnor::steenbrink_infinity;
use crate::spec::{validate, xi, DerivedQuantities, HypersurfaceSpec, Violation};
use crate::table::{format_alpha, SpectralPairTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Identity,
    Input,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub kind: CheckKind,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, kind: CheckKind, passed: bool, detail: String) -> Self {
        let status = if passed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            name,
            kind,
            status,
            detail,
        }
    }

    fn skipped(name: &'static str, kind: CheckKind, detail: &str) -> Self {
        Self {
            name,
            kind,
            status: CheckStatus::Skipped,
            detail: detail.to_string(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Names of the checks, in report order.
pub const CHECK_NAMES: [&str; 11] = [
    "degree_identity",
    "xi_integrality",
    "root_orders",
    "conjugation_symmetry",
    "level_duality",
    "two_path_agreement",
    "total_mass",
    "divisibility_product",
    "delta_u_divisibility",
    "error_term_even_degree",
    "bound_consistency",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub divisibility_infinity: CyclotomicFactorization,
    pub divisibility_local: CyclotomicFactorization,
    pub complement: BoundTable,
    pub curve: Option<BoundTable>,
    pub arrangement: Option<BoundTable>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub infinity: SpectralPairTable,
    pub local_sum: SpectralPairTable,
    pub nonunipotent: SpectralPairTable,
    pub unipotent: Option<SpectralPairTable>,
    pub full: Option<SpectralPairTable>,
    pub by_weight: Option<BTreeMap<i32, SpectralPairTable>>,
    pub arrangement: Option<SpectralPairTable>,
    pub curve_hodge: Option<CurveHodgeNumbers>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub spec: HypersurfaceSpec,
    pub warnings: Vec<Violation>,
    pub derived: DerivedQuantities,
    pub delta_m: CyclotomicFactorization,
    pub error_term: Option<CyclotomicFactorization>,
    pub bounds: Bounds,
    pub tables: Tables,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }

    pub fn identity_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.failed() && c.kind == CheckKind::Identity)
    }

    pub fn input_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.failed() && c.kind == CheckKind::Input)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument::from(self)
    }

    /// Pretty-printed JSON; identical inputs give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("reports always serialize")
    }
}

fn summed_local_pairs(spec: &HypersurfaceSpec) -> SpectralPairTable {
    spec.singularities
        .iter()
        .fold(SpectralPairTable::new(), |acc, e| {
            let local = e.singularity.local_pairs();
            (0..e.count).fold(acc, |t, _| t.add_table(&local))
        })
}

/// Computes every available invariant of a valid `spec` and runs the checks.
pub fn build_report(spec: &HypersurfaceSpec) -> Result<InvariantReport, InvariantError> {
    let n = spec.n;
    let ni = n as i32;
    let derived = spec.derived();
    let delta_m = boundary_alexander(spec)?;

    let infinity = steenbrink_infinity(n, spec.d);
    let local_sum = summed_local_pairs(spec);
    let nonunipotent = boundary_pairs_nonunipotent(spec);

    let curve_table = if n == 1 {
        Some(boundary_pairs_curve(spec)?)
    } else {
        None
    };
    let qhm = if spec.rational_homology_manifold {
        Some(boundary_pairs_qhm(spec)?)
    } else {
        None
    };
    let qhm_full = qhm
        .as_ref()
        .map(|w| flatten_weights(w).add_table(&nonunipotent));
    let full = curve_table.clone().or_else(|| qhm_full.clone());
    let multiplicities = if spec.line_arrangement {
        spec.multiplicities()
    } else {
        None
    };
    let arrangement = multiplicities
        .as_ref()
        .map(|m| boundary_pairs_arrangement(spec.d, m));
    let curve_hodge = if n == 1 {
        Some(projective_curve_hodge(spec)?)
    } else {
        None
    };

    let bounds = Bounds {
        divisibility_infinity: divisibility_bound_infinity(n, spec.d),
        divisibility_local: divisibility_bound_local(spec)?,
        complement: spectral_bound_complement(spec, spec.hodge_d.as_ref()),
        curve: (n == 1).then(|| spectral_bound_curve(spec.d, spec.r)),
        arrangement: multiplicities
            .as_ref()
            .map(|m| spectral_bound_arrangement(spec.d, m)),
    };

    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    use CheckKind::{Identity, Input};

    let expected_degree = 2 * spec.global_milnor();
    checks.push(Check::new(
        "degree_identity",
        Identity,
        delta_m.degree() == expected_degree,
        format!(
            "deg delta_M = {}, 2(d-1)^(n+1) = {expected_degree}",
            delta_m.degree()
        ),
    ));

    let (xi_value, exact) = xi(n, spec.d);
    checks.push(Check::new(
        "xi_integrality",
        Identity,
        exact,
        format!("xi = {xi_value}"),
    ));

    let bad_orders: Vec<u64> = delta_m
        .factors()
        .keys()
        .copied()
        .filter(|k| {
            !(spec.d as u64).is_multiple_of(*k)
                && !spec
                    .points()
                    .any(|s| s.local_alexander().multiplicity(*k) != 0)
        })
        .collect();
    checks.push(Check::new(
        "root_orders",
        Identity,
        bad_orders.is_empty(),
        if bad_orders.is_empty() {
            "every root of delta_M is a d-th root of unity or a local monodromy eigenvalue".into()
        } else {
            format!("unexplained cyclotomic orders {bad_orders:?}")
        },
    ));

    let main_table = full.as_ref().unwrap_or(&nonunipotent);
    let conj_ok = main_table.conjugate() == *main_table
        && infinity.conjugate() == infinity
        && local_sum.conjugate() == local_sum;
    checks.push(Check::new(
        "conjugation_symmetry",
        Identity,
        conj_ok,
        "boundary, infinity and local tables are fixed by (p,q,a) -> (q,p,1-a)".into(),
    ));

    checks.push(Check::new(
        "level_duality",
        Identity,
        main_table.level_dual(ni) == *main_table,
        format!("boundary table fixed by (p,q,a) -> ({ni}-p,{ni}-q,1-a)"),
    ));

    let mut agreements = Vec::new();
    if let Some(c) = &curve_table {
        agreements.push((
            "curve table vs local/infinity sum for a > 0",
            c.non_unipotent() == nonunipotent,
        ));
        if let Some(q) = &qhm_full {
            agreements.push(("curve table vs rational homology manifold table", c == q));
        }
        if let Some(a) = &arrangement {
            agreements.push(("curve table vs arrangement table", c == a));
        }
    }
    checks.push(if agreements.is_empty() {
        Check::skipped(
            "two_path_agreement",
            Identity,
            "only one computation path available",
        )
    } else {
        let failed: Vec<&str> = agreements
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(w, _)| *w)
            .collect();
        Check::new(
            "two_path_agreement",
            Identity,
            failed.is_empty(),
            if failed.is_empty() {
                agreements
                    .iter()
                    .map(|(w, _)| *w)
                    .collect::<Vec<_>>()
                    .join("; ")
            } else {
                format!("disagreement: {}", failed.join("; "))
            },
        )
    });

    let roots = delta_m.root_arguments();
    checks.push(match &full {
        Some(t) => {
            let marginals = t.alpha_marginals();
            let ok = t.total_dim() as i64 == delta_m.degree()
                && marginals.len() == roots.len()
                && marginals
                    .iter()
                    .all(|(a, c)| roots.get(a) == Some(&(*c as i64)));
            Check::new(
                "total_mass",
                Identity,
                ok,
                format!(
                    "table mass {} against deg delta_M = {}, per eigenvalue",
                    t.total_dim(),
                    delta_m.degree()
                ),
            )
        }
        None => {
            let marginals = nonunipotent.alpha_marginals();
            let expected: BTreeMap<_, _> = roots.iter().filter(|(a, _)| !a.is_zero()).collect();
            let ok = marginals.len() == expected.len()
                && marginals
                    .iter()
                    .all(|(a, c)| expected.get(a) == Some(&&(*c as i64)));
            Check::new(
                "total_mass",
                Identity,
                ok,
                "non-unipotent mass per eigenvalue matches delta_M".into(),
            )
        }
    });

    let product = bounds.divisibility_infinity.mul(&bounds.divisibility_local);
    checks.push(Check::new(
        "divisibility_product",
        Identity,
        product == delta_m,
        "delta_M equals the product of the infinity and local divisors".into(),
    ));

    let mut error = None;
    match &spec.delta_u {
        None => {
            checks.push(Check::skipped(
                "delta_u_divisibility",
                Input,
                "no delta_U given",
            ));
            checks.push(Check::skipped(
                "error_term_even_degree",
                Identity,
                "no delta_U given",
            ));
        }
        Some(du) => {
            let divides = bounds.divisibility_infinity.is_divisible_by(du)
                && bounds.divisibility_local.is_divisible_by(du);
            checks.push(Check::new(
                "delta_u_divisibility",
                Input,
                divides,
                format!("delta_U = {du} against both divisibility bounds"),
            ));
            checks.push(match error_term(spec, du) {
                Ok(e) => {
                    let detail = format!("e(t) = {e}, degree {}", e.degree());
                    error = Some(e);
                    Check::new("error_term_even_degree", Identity, true, detail)
                }
                Err(InvariantError::NotDivisible) => Check::new(
                    "error_term_even_degree",
                    Input,
                    false,
                    "NotDivisible: delta_U(t) delta_U(1/t) does not divide delta_M".into(),
                ),
                Err(e) => Check::new("error_term_even_degree", Identity, false, e.to_string()),
            });
        }
    }

    let mut problems = Vec::new();
    if let Some(curve) = &bounds.curve {
        let general_ok = bounds
            .complement
            .iter()
            .filter(|(k, _)| !k.alpha.is_zero())
            .all(|(k, b)| b.value() <= curve.get(k.p, k.q, k.alpha).value());
        if !general_ok {
            problems.push("general bound exceeds curve bound");
        }
        if let Some(a) = &bounds.arrangement {
            if !a.is_within(curve) {
                problems.push("arrangement bound exceeds curve bound");
            }
        }
    }
    let infinity_ok = bounds
        .complement
        .iter()
        .all(|(k, b)| b.value() <= infinity.get(k.p, k.q, k.alpha));
    if !infinity_ok {
        problems.push("general bound exceeds the Milnor algebra side");
    }
    checks.push(Check::new(
        "bound_consistency",
        Identity,
        problems.is_empty(),
        if problems.is_empty() {
            "complement bounds within the Milnor algebra and curve bounds".into()
        } else {
            problems.join("; ")
        },
    ));
    debug_assert_eq!(
        checks.iter().map(|c| c.name).collect::<Vec<_>>(),
        CHECK_NAMES.to_vec()
    );

    let warnings = validate(spec)
        .into_iter()
        .filter(Violation::is_warning)
        .collect();
    let by_weight = full.as_ref().map(SpectralPairTable::by_weight);
    Ok(InvariantReport {
        spec: spec.clone(),
        warnings,
        derived,
        delta_m,
        error_term: error,
        bounds,
        tables: Tables {
            infinity,
            local_sum,
            unipotent: full.as_ref().map(SpectralPairTable::unipotent),
            nonunipotent,
            by_weight,
            full,
            arrangement,
            curve_hodge,
        },
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub p: i32,
    pub q: i32,
    pub alpha: String,
    pub relation: &'static str,
    pub value: u64,
}

fn bound_rows(b: &BoundTable) -> Vec<BoundRow> {
    b.iter()
        .map(|(k, bound)| BoundRow {
            p: k.p,
            q: k.q,
            alpha: format_alpha(&k.alpha),
            relation: match bound {
                Bound::AtMost(_) => "at_most",
                Bound::Exactly(_) => "exactly",
            },
            value: bound.value(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedDocument {
    pub mu: i64,
    pub xi: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b1: Option<i64>,
    #[serde(rename = "J1", skip_serializing_if = "Option::is_none")]
    pub j1: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsDocument {
    pub divisibility_infinity: FactorizationDocument,
    pub divisibility_local: FactorizationDocument,
    pub complement: Vec<BoundRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<Vec<BoundRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Vec<BoundRow>>,
}

/// `[degree, p, q, count]`.
pub type HodgeRow = (u32, i32, i32, u64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveHodgeDocument {
    pub projective: Vec<HodgeRow>,
    pub compact_support: Vec<HodgeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TablesDocument {
    pub infinity: Vec<PairRow>,
    pub local_sum: Vec<PairRow>,
    pub boundary_nonunipotent: Vec<PairRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_unipotent: Option<Vec<PairRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_full: Option<Vec<PairRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_by_weight: Option<BTreeMap<i32, Vec<PairRow>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Vec<PairRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve_hodge: Option<CurveHodgeDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub spec: SpecDocument,
    pub warnings: Vec<String>,
    pub derived: DerivedDocument,
    #[serde(rename = "delta_M")]
    pub delta_m: FactorizationDocument,
    #[serde(rename = "delta_M_degree")]
    pub delta_m_degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_term: Option<FactorizationDocument>,
    pub bounds: BoundsDocument,
    pub tables: TablesDocument,
    pub checks: Vec<Check>,
}

fn hodge_rows(m: &BTreeMap<(u32, i32, i32), u64>) -> Vec<HodgeRow> {
    m.iter().map(|((k, p, q), c)| (*k, *p, *q, *c)).collect()
}

impl From<&InvariantReport> for ReportDocument {
    fn from(r: &InvariantReport) -> Self {
        let t = &r.tables;
        ReportDocument {
            spec: SpecDocument::from_spec(&r.spec),
            warnings: r.warnings.iter().map(ToString::to_string).collect(),
            derived: DerivedDocument {
                mu: r.derived.mu,
                xi: r.derived.xi,
                b1: r.derived.b1,
                j1: r.derived.j1,
            },
            delta_m: factorization_to_document(&r.delta_m),
            delta_m_degree: r.delta_m.degree(),
            error_term: r.error_term.as_ref().map(factorization_to_document),
            bounds: BoundsDocument {
                divisibility_infinity: factorization_to_document(&r.bounds.divisibility_infinity),
                divisibility_local: factorization_to_document(&r.bounds.divisibility_local),
                complement: bound_rows(&r.bounds.complement),
                curve: r.bounds.curve.as_ref().map(bound_rows),
                arrangement: r.bounds.arrangement.as_ref().map(bound_rows),
            },
            tables: TablesDocument {
                infinity: table_to_rows(&t.infinity),
                local_sum: table_to_rows(&t.local_sum),
                boundary_nonunipotent: table_to_rows(&t.nonunipotent),
                boundary_unipotent: t.unipotent.as_ref().map(table_to_rows),
                boundary_full: t.full.as_ref().map(table_to_rows),
                boundary_by_weight: t
                    .by_weight
                    .as_ref()
                    .map(|w| w.iter().map(|(k, v)| (*k, table_to_rows(v))).collect()),
                arrangement: t.arrangement.as_ref().map(table_to_rows),
                curve_hodge: t.curve_hodge.as_ref().map(|h| CurveHodgeDocument {
                    projective: hodge_rows(&h.projective),
                    compact_support: hodge_rows(&h.compact_support),
                }),
            },
            checks: r.checks.clone(),
        }
    }
}

/// Aligned `p q alpha count` rows.
pub fn format_table(t: &SpectralPairTable, indent: &str) -> String {
    let rows: Vec<[String; 4]> = t
        .iter()
        .map(|(k, c)| {
            [
                k.p.to_string(),
                k.q.to_string(),
                format_alpha(&k.alpha),
                c.to_string(),
            ]
        })
        .collect();
    let header = ["p", "q", "alpha", "count"];
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header.map(String::from)).chain(rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{indent}{}", cells.join("  "));
    }
    out
}

fn format_bounds(b: &BoundTable, indent: &str) -> String {
    let mut out = String::new();
    for (k, bound) in b.iter() {
        let _ = writeln!(
            out,
            "{indent}h^{{{},{}}}_{} {bound}",
            k.p,
            k.q,
            format_alpha(&k.alpha)
        );
    }
    out
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.spec;
        write!(f, "hypersurface: n = {}, d = {}, r = {}", s.n, s.d, s.r)?;
        if s.line_arrangement {
            write!(f, ", line arrangement")?;
        }
        if s.rational_homology_manifold {
            write!(f, ", rational homology manifold")?;
        }
        writeln!(f)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        let dq = &self.derived;
        write!(f, "mu = {}, xi = {}", dq.mu, dq.xi)?;
        if let (Some(b1), Some(j1)) = (dq.b1, dq.j1) {
            write!(f, ", b1(M) = {b1}, J1 = {j1}")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "delta_M = {} (degree {})",
            self.delta_m,
            self.delta_m.degree()
        )?;
        if let Some(e) = &self.error_term {
            writeln!(f, "error term = {e} (degree {})", e.degree())?;
        }
        writeln!(f)?;
        writeln!(f, "divisibility bounds for delta_U:")?;
        writeln!(f, "  infinity: {}", self.bounds.divisibility_infinity)?;
        writeln!(f, "  local:    {}", self.bounds.divisibility_local)?;
        writeln!(f, "spectral bounds for the complement:")?;
        f.write_str(&format_bounds(&self.bounds.complement, "  "))?;
        if let Some(c) = &self.bounds.curve {
            writeln!(f, "curve bounds:")?;
            f.write_str(&format_bounds(c, "  "))?;
        }
        if let Some(a) = &self.bounds.arrangement {
            writeln!(f, "arrangement bounds:")?;
            f.write_str(&format_bounds(a, "  "))?;
        }
        writeln!(f)?;
        writeln!(f, "spectral pairs at infinity:")?;
        f.write_str(&format_table(&self.tables.infinity, "  "))?;
        match &self.tables.full {
            Some(t) => {
                writeln!(f, "boundary spectral pairs:")?;
                f.write_str(&format_table(t, "  "))?;
            }
            None => {
                writeln!(f, "boundary spectral pairs (non-unipotent part only):")?;
                f.write_str(&format_table(&self.tables.nonunipotent, "  "))?;
            }
        }
        if let Some(h) = &self.tables.curve_hodge {
            writeln!(f, "Hodge numbers of the projective closure (k p q count):")?;
            for ((k, p, q), c) in &h.projective {
                writeln!(f, "  {k} {p} {q} {c}")?;
            }
            writeln!(f, "compactly supported Hodge numbers of D (k p q count):")?;
            for ((k, p, q), c) in &h.compact_support {
                writeln!(f, "  {k} {p} {q} {c}")?;
            }
        }
        writeln!(f)?;
        writeln!(f, "checks:")?;
        let width = CHECK_NAMES.iter().map(|n| n.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            writeln!(f, "  {tag} {:<width$}  {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::LocalSingularity;
    use crate::table::alpha;

    fn cusp_cubic() -> HypersurfaceSpec {
        HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 3), 1)
    }

    #[test]
    fn generic_lines_all_pass() {
        let r = build_report(&HypersurfaceSpec::line_arrangement(3, &[2, 2, 2])).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(
            r.check("two_path_agreement").unwrap().status,
            CheckStatus::Pass
        );
        let names: Vec<_> = r.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES.to_vec());
    }

    #[test]
    fn cusp_cubic_report() {
        let r = build_report(&cusp_cubic()).unwrap();
        assert!(r.all_passed(), "{r}");
        // (t-1)^3 (t^3-1) Phi_6
        let expected = CyclotomicFactorization::phi(1, 3)
            .mul(&CyclotomicFactorization::t_pow_minus_one(3))
            .mul(&CyclotomicFactorization::phi(6, 1));
        assert_eq!(r.delta_m, expected);
        assert_eq!(r.derived.b1, Some(3));
    }

    #[test]
    fn wrong_delta_u_is_reported() {
        let mut spec = HypersurfaceSpec::line_arrangement(3, &[2, 2, 2]);
        spec.delta_u = Some(CyclotomicFactorization::phi(2, 1));
        let r = build_report(&spec).unwrap();
        let c = r.check("error_term_even_degree").unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert!(c.detail.contains("NotDivisible"));
        assert_eq!(r.identity_failures().count(), 0);
        assert_eq!(r.input_failures().count(), 2);
    }

    #[test]
    fn error_term_reported() {
        let mut spec = HypersurfaceSpec::line_arrangement(3, &[3]);
        spec.delta_u = Some(CyclotomicFactorization::from_factors([(1, 2), (3, 1)]));
        let r = build_report(&spec).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.error_term, Some(CyclotomicFactorization::one()));
    }

    #[test]
    fn surfaces_without_full_table() {
        let spec = HypersurfaceSpec::new(2, 4, 1)
            .with_singularity(LocalSingularity::brieskorn_pham(&[2, 2, 2]), 3)
            .with_singularity(LocalSingularity::brieskorn_pham(&[2, 3, 4]), 1);
        let r = build_report(&spec).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.tables.full.is_none());
        assert_eq!(
            r.check("two_path_agreement").unwrap().status,
            CheckStatus::Skipped
        );
    }

    #[test]
    fn smooth_surface_full_table() {
        let mut spec = HypersurfaceSpec::new(2, 4, 1);
        spec.rational_homology_manifold = true;
        let r = build_report(&spec).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.tables.full.as_ref().unwrap().total_dim(), 54);
    }

    #[test]
    fn json_is_deterministic() {
        let spec = cusp_cubic();
        let a = build_report(&spec).unwrap().to_json();
        let b = build_report(&spec.clone()).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"delta_M\""));
    }

    #[test]
    fn plain_table_columns() {
        let t = SpectralPairTable::from_entries([(0, 1, alpha(2, 3), 1), (1, 1, alpha(0, 1), 12)]);
        let text = format_table(&t, "");
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0].split_whitespace().collect::<Vec<_>>(),
            ["p", "q", "alpha", "count"]
        );
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            ["0", "1", "2/3", "1"]
        );
        assert_eq!(lines[0].len(), lines[2].len());
    }
}
