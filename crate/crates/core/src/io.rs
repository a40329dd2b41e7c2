//! JSON document format for hypersurface descriptions, factorizations and
//! spectral-pair tables.
//!
//! ```json
//! {
//!   "ambient_dim": 2, "degree": 3, "components": 3,
//!   "line_arrangement": true,
//!   "singularities": [{"kind": "ordinary", "multiplicity": 2, "count": 3}],
//!   "delta_U": {"factors": [[1, 2]]}
//! }
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicFactorization;
use crate::error::SpecError;
use crate::local::{ExplicitSingularity, LocalSingularity};
use crate::spec::{validate, HodgeNumbers, HypersurfaceSpec, SingularityEntry, Violation};
use crate::table::{format_alpha, parse_ratio, SpectralPairTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub ambient_dim: u32,
    pub degree: u32,
    pub components: u32,
    #[serde(default)]
    pub line_arrangement: bool,
    #[serde(default)]
    pub rational_homology_manifold: bool,
    #[serde(default)]
    pub singularities: Vec<SingularityDocument>,
    #[serde(rename = "delta_U", default, skip_serializing_if = "Option::is_none")]
    pub delta_u: Option<FactorizationDocument>,
    #[serde(rename = "hD", default, skip_serializing_if = "Option::is_none")]
    pub hodge_d: Option<Vec<(i32, i32, u64)>>,
}

fn one() -> u64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SingularityDocument {
    Ordinary {
        multiplicity: u32,
        #[serde(default = "one")]
        count: u64,
    },
    Brieskorn {
        exponents: [u32; 2],
        #[serde(default = "one")]
        count: u64,
    },
    Explicit {
        milnor_number: u64,
        branches: u64,
        alexander: FactorizationDocument,
        spectral_pairs: Vec<PairRow>,
        #[serde(rename = "grF_dims", default, skip_serializing_if = "Option::is_none")]
        gr_f_dims: Option<Vec<(i32, u64)>>,
        #[serde(default = "one")]
        count: u64,
    },
}

/// `[p, q, "a/b", count]`.
pub type PairRow = (i32, i32, String, u64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDocument {
    #[serde(default = "unit_one", skip_serializing_if = "is_unit_one")]
    pub unit: String,
    #[serde(default, skip_serializing_if = "is_zero_i64")]
    pub t_power: i64,
    /// `[order, multiplicity]` pairs.
    pub factors: Vec<(u64, i64)>,
}

fn unit_one() -> String {
    "1".to_string()
}
fn is_unit_one(s: &str) -> bool {
    s == "1"
}
fn is_zero_i64(x: &i64) -> bool {
    *x == 0
}

fn malformed(msg: impl Into<String>) -> SpecError {
    SpecError::MalformedDocument(msg.into())
}

pub fn factorization_to_document(f: &CyclotomicFactorization) -> FactorizationDocument {
    FactorizationDocument {
        unit: f.unit().to_string(),
        t_power: f.t_power(),
        factors: f.factors().iter().map(|(k, m)| (*k, *m)).collect(),
    }
}

pub fn factorization_from_document(
    doc: &FactorizationDocument,
) -> Result<CyclotomicFactorization, SpecError> {
    let unit =
        parse_big_ratio(&doc.unit).ok_or_else(|| malformed(format!("bad unit {:?}", doc.unit)))?;
    if unit.is_zero() {
        return Err(malformed("unit must be nonzero"));
    }
    let mut factors = BTreeMap::new();
    for (k, m) in &doc.factors {
        if *k == 0 {
            return Err(malformed("cyclotomic order must be positive"));
        }
        *factors.entry(*k).or_insert(0) += *m;
    }
    Ok(CyclotomicFactorization::new(unit, doc.t_power, factors))
}

fn parse_big_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(BigInt::from_str(n.trim()).ok()?, d))
        }
        None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
    }
}

pub fn table_to_rows(t: &SpectralPairTable) -> Vec<PairRow> {
    t.iter()
        .map(|(k, c)| (k.p, k.q, format_alpha(&k.alpha), c))
        .collect()
}

pub fn table_from_rows(rows: &[PairRow]) -> Result<SpectralPairTable, SpecError> {
    let mut table = SpectralPairTable::new();
    for (p, q, a, c) in rows {
        let alpha =
            parse_ratio(a).ok_or_else(|| malformed(format!("bad eigenvalue argument {a:?}")))?;
        if alpha < num_rational::Ratio::zero() || alpha >= num_rational::Ratio::one() {
            return Err(malformed(format!("eigenvalue argument {a} not in [0,1)")));
        }
        table.add(*p, *q, alpha, *c);
    }
    Ok(table)
}

impl SingularityDocument {
    fn into_entry(self) -> Result<SingularityEntry, SpecError> {
        Ok(match self {
            SingularityDocument::Ordinary {
                multiplicity,
                count,
            } => SingularityEntry::new(LocalSingularity::Ordinary(multiplicity), count),
            SingularityDocument::Brieskorn {
                exponents: [a, b],
                count,
            } => SingularityEntry::new(LocalSingularity::Brieskorn(a, b), count),
            SingularityDocument::Explicit {
                milnor_number,
                branches,
                alexander,
                spectral_pairs,
                gr_f_dims,
                count,
            } => SingularityEntry::new(
                LocalSingularity::Explicit(ExplicitSingularity {
                    milnor_number,
                    branches,
                    alexander: factorization_from_document(&alexander)?,
                    pairs: table_from_rows(&spectral_pairs)?,
                    gr_f_dims: gr_f_dims.map(|v| {
                        let mut m = BTreeMap::new();
                        for (p, c) in v {
                            *m.entry(p).or_insert(0) += c;
                        }
                        m
                    }),
                }),
                count,
            ),
        })
    }

    fn from_entry(e: &SingularityEntry) -> Self {
        let count = e.count;
        match &e.singularity {
            LocalSingularity::Ordinary(m) => SingularityDocument::Ordinary {
                multiplicity: *m,
                count,
            },
            LocalSingularity::Brieskorn(a, b) => SingularityDocument::Brieskorn {
                exponents: [*a, *b],
                count,
            },
            LocalSingularity::Explicit(x) => SingularityDocument::Explicit {
                milnor_number: x.milnor_number,
                branches: x.branches,
                alexander: factorization_to_document(&x.alexander),
                spectral_pairs: table_to_rows(&x.pairs),
                gr_f_dims: x
                    .gr_f_dims
                    .as_ref()
                    .map(|m| m.iter().map(|(p, c)| (*p, *c)).collect()),
                count,
            },
        }
    }
}

impl SpecDocument {
    pub fn into_spec(self) -> Result<HypersurfaceSpec, SpecError> {
        if self.ambient_dim == 0 {
            return Err(malformed("ambient_dim must be at least 1"));
        }
        let mut spec = HypersurfaceSpec::new(self.ambient_dim - 1, self.degree, self.components);
        spec.line_arrangement = self.line_arrangement;
        spec.rational_homology_manifold = self.rational_homology_manifold;
        spec.singularities = self
            .singularities
            .into_iter()
            .map(SingularityDocument::into_entry)
            .collect::<Result<_, _>>()?;
        spec.delta_u = self
            .delta_u
            .as_ref()
            .map(factorization_from_document)
            .transpose()?;
        spec.hodge_d = self.hodge_d.map(|rows| {
            let mut h = HodgeNumbers::new();
            for (p, q, c) in rows {
                *h.entry((p, q)).or_insert(0) += c;
            }
            h
        });
        Ok(spec)
    }

    pub fn from_spec(spec: &HypersurfaceSpec) -> Self {
        SpecDocument {
            ambient_dim: spec.n + 1,
            degree: spec.d,
            components: spec.r,
            line_arrangement: spec.line_arrangement,
            rational_homology_manifold: spec.rational_homology_manifold,
            singularities: spec
                .singularities
                .iter()
                .map(SingularityDocument::from_entry)
                .collect(),
            delta_u: spec.delta_u.as_ref().map(factorization_to_document),
            hodge_d: spec
                .hodge_d
                .as_ref()
                .map(|h| h.iter().map(|((p, q), c)| (*p, *q, *c)).collect()),
        }
    }
}

/// A validated specification together with any warnings raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedSpec {
    pub spec: HypersurfaceSpec,
    pub warnings: Vec<Violation>,
}

/// Reads a document without checking the mathematical constraints.
pub fn read_spec(document: &str) -> Result<HypersurfaceSpec, SpecError> {
    let doc: SpecDocument = serde_json::from_str(document).map_err(|e| malformed(e.to_string()))?;
    doc.into_spec()
}

/// Reads and validates a document. Warnings do not make parsing fail.
pub fn parse_spec(document: &str) -> Result<ParsedSpec, SpecError> {
    let spec = read_spec(document)?;
    let (warnings, errors): (Vec<_>, Vec<_>) =
        validate(&spec).into_iter().partition(Violation::is_warning);
    if !errors.is_empty() {
        return Err(SpecError::Validation(errors));
    }
    Ok(ParsedSpec { spec, warnings })
}

pub fn serialize_spec(spec: &HypersurfaceSpec) -> String {
    serde_json::to_string_pretty(&SpecDocument::from_spec(spec))
        .expect("spec documents always serialize")
}
