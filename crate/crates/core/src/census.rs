//! Enumeration of line-arrangement weak combinatorial data: all multisets of
//! point multiplicities `2 <= m_i <= d` with `sum C(m_i, 2) = C(d, 2)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::CyclotomicFactorization;
use crate::error::InvariantError;
use crate::io::{factorization_to_document, table_to_rows, FactorizationDocument, PairRow};
use crate::report::build_report;
use crate::spec::HypersurfaceSpec;
use crate::table::SpectralPairTable;

/// One census entry. Multiplicities are sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub d: u32,
    pub multiplicities: Vec<u32>,
    pub mu: i64,
    pub delta_m: CyclotomicFactorization,
    pub table: SpectralPairTable,
    pub checks_passed: bool,
    pub failed_checks: Vec<&'static str>,
    pub possibly_unrealizable: bool,
}

/// Two points of multiplicity `a` and `b` share at most one line, so they
/// need `a + b - 1` distinct lines.
pub fn possibly_unrealizable(d: u32, multiplicities: &[u32]) -> bool {
    match multiplicities {
        [a, b, ..] => a + b - 1 > d,
        _ => false,
    }
}

fn choose2(m: u32) -> u64 {
    m as u64 * (m as u64 - 1) / 2
}

/// Every multiplicity multiset for `d` lines, each sorted decreasingly; the
/// list is sorted lexicographically on the increasing rearrangement, so
/// `d = 3` gives `[2, 2, 2]` before `[3]`.
pub fn weak_data(d: u32) -> Vec<Vec<u32>> {
    fn go(budget: u64, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if budget == 0 {
            out.push(current.clone());
            return;
        }
        for m in (2..=max).rev() {
            let c = choose2(m);
            if c <= budget {
                current.push(m);
                go(budget - c, m, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    if d >= 2 {
        go(choose2(d), d, &mut Vec::new(), &mut out);
    }
    out.sort_by_cached_key(|m| m.iter().rev().copied().collect::<Vec<_>>());
    out
}

/// Census rows for `d` lines, computed in parallel, in the order of
/// [`weak_data`]. `max_rows` truncates the enumeration.
pub fn census(d: u32, max_rows: Option<usize>) -> Result<Vec<CensusRow>, InvariantError> {
    let mut data = weak_data(d);
    if let Some(limit) = max_rows {
        data.truncate(limit);
    }
    data.into_par_iter()
        .map(|multiplicities| {
            let spec = HypersurfaceSpec::line_arrangement(d, &multiplicities);
            let report = build_report(&spec)?;
            let failed_checks: Vec<&'static str> = report
                .checks
                .iter()
                .filter(|c| c.failed())
                .map(|c| c.name)
                .collect();
            Ok(CensusRow {
                d,
                possibly_unrealizable: possibly_unrealizable(d, &multiplicities),
                multiplicities,
                mu: report.derived.mu,
                delta_m: report.delta_m,
                table: report.tables.full.expect("arrangements are curves"),
                checks_passed: failed_checks.is_empty(),
                failed_checks,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRowDocument {
    pub d: u32,
    pub multiplicities: Vec<u32>,
    pub mu: i64,
    #[serde(rename = "delta_M")]
    pub delta_m: FactorizationDocument,
    pub table: Vec<PairRow>,
    pub checks_passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<&'static str>,
    pub possibly_unrealizable: bool,
}

impl From<&CensusRow> for CensusRowDocument {
    fn from(r: &CensusRow) -> Self {
        CensusRowDocument {
            d: r.d,
            multiplicities: r.multiplicities.clone(),
            mu: r.mu,
            delta_m: factorization_to_document(&r.delta_m),
            table: table_to_rows(&r.table),
            checks_passed: r.checks_passed,
            failed_checks: r.failed_checks.clone(),
            possibly_unrealizable: r.possibly_unrealizable,
        }
    }
}
