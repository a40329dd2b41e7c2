//! Global input data: an affine hypersurface `D = f^{-1}(0)` in `C^{n+1}`,
//! of degree `d`, transversal at infinity, with isolated singularities.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CyclotomicFactorization;
use crate::local::LocalSingularity;

/// Hodge numbers `h^{p,q}` keyed by `(p, q)`.
pub type HodgeNumbers = BTreeMap<(i32, i32), u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityEntry {
    pub singularity: LocalSingularity,
    pub count: u64,
}

impl SingularityEntry {
    pub fn new(singularity: LocalSingularity, count: u64) -> Self {
        Self { singularity, count }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    /// Dimension of `D`; the ambient space is `C^{n+1}`.
    pub n: u32,
    pub d: u32,
    /// Number of irreducible components of `D`.
    pub r: u32,
    pub singularities: Vec<SingularityEntry>,
    pub line_arrangement: bool,
    pub rational_homology_manifold: bool,
    /// Known global Alexander polynomial of the complement, if any.
    pub delta_u: Option<CyclotomicFactorization>,
    /// Known Hodge numbers of `H^n(D)`, if any.
    pub hodge_d: Option<HodgeNumbers>,
}

impl HypersurfaceSpec {
    pub fn new(n: u32, d: u32, r: u32) -> Self {
        Self {
            n,
            d,
            r,
            singularities: Vec::new(),
            line_arrangement: false,
            rational_homology_manifold: false,
            delta_u: None,
            hodge_d: None,
        }
    }

    pub fn with_singularity(mut self, s: LocalSingularity, count: u64) -> Self {
        self.singularities.push(SingularityEntry::new(s, count));
        self
    }

    /// A line arrangement of `d` lines from its multiplicity list.
    pub fn line_arrangement(d: u32, multiplicities: &[u32]) -> Self {
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for m in multiplicities {
            *counts.entry(*m).or_insert(0) += 1;
        }
        let mut spec = Self::new(1, d, d);
        spec.line_arrangement = true;
        for (m, c) in counts {
            spec = spec.with_singularity(LocalSingularity::Ordinary(m), c);
        }
        spec
    }

    /// `(d - 1)^{n+1}`, the Milnor number of the generic fiber.
    pub fn global_milnor(&self) -> i64 {
        (self.d as i64 - 1).pow(self.n + 1)
    }

    pub fn local_milnor_sum(&self) -> i64 {
        self.singularities
            .iter()
            .map(|e| e.count as i64 * e.singularity.milnor_number() as i64)
            .sum()
    }

    /// `sum_x (r_x - 1)`.
    pub fn branch_excess(&self) -> i64 {
        self.singularities
            .iter()
            .map(|e| e.count as i64 * (e.singularity.branches() as i64 - 1))
            .sum()
    }

    /// Each singular point, repeated according to its count.
    pub fn points(&self) -> impl Iterator<Item = &LocalSingularity> {
        self.singularities
            .iter()
            .flat_map(|e| std::iter::repeat_n(&e.singularity, e.count as usize))
    }

    /// Multiplicities of an arrangement, sorted descending; `None` unless every
    /// point is an ordinary point.
    pub fn multiplicities(&self) -> Option<Vec<u32>> {
        let mut out = Vec::new();
        for s in self.points() {
            match s {
                LocalSingularity::Ordinary(m) => out.push(*m),
                _ => return None,
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Some(out)
    }

    pub fn derived(&self) -> DerivedQuantities {
        derived_quantities(self)
    }
}

/// `mu`, `xi` and, for curves, the first Betti number of the boundary
/// manifold and the number of unipotent Jordan blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedQuantities {
    pub mu: i64,
    pub xi: i64,
    pub b1: Option<i64>,
    pub j1: Option<i64>,
}

/// `xi = ((d-1)^{n+1} + (-1)^n) / d`.
///
/// Always an integer, since `(d - 1)^{n+1} = (-1)^{n+1} mod d`. Returns the
/// quotient and whether the division was exact.
pub fn xi(n: u32, d: u32) -> (i64, bool) {
    let sign: i128 = if n.is_multiple_of(2) { 1 } else { -1 };
    let num = (d as i128 - 1).pow(n + 1) + sign;
    let d = d as i128;
    ((num.div_euclid(d)) as i64, num.rem_euclid(d) == 0)
}

pub fn derived_quantities(spec: &HypersurfaceSpec) -> DerivedQuantities {
    let mu = spec.global_milnor() - spec.local_milnor_sum();
    let (xi, _) = xi(spec.n, spec.d);
    let (b1, j1) = if spec.n == 1 {
        let b1 = 2 * spec.r as i64 + mu - 1;
        (Some(b1), Some(b1 - 1))
    } else {
        (None, None)
    };
    DerivedQuantities { mu, xi, b1, j1 }
}

/// A failed necessary condition on the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DegreeTooSmall,
    NoComponents,
    TooManyComponents {
        r: u32,
        d: u32,
    },
    TooLarge,
    ZeroCount {
        index: usize,
    },
    InvalidLocalModel {
        index: usize,
        reason: String,
    },
    BuiltinRequiresCurve {
        index: usize,
    },
    ExplicitInconsistent {
        index: usize,
        reason: String,
    },
    NegativeMu {
        local: i64,
        global: i64,
    },
    NotALineArrangement {
        reason: String,
    },
    PairCount {
        pairs: u64,
        expected: u64,
    },
    /// Two points of multiplicities `a` and `b` would need `a + b - 1 > d`
    /// lines. Only a warning: tables are still functions of the weak data.
    SharedLine {
        a: u32,
        b: u32,
        d: u32,
    },
    NegativeCount {
        what: &'static str,
        value: i64,
    },
    ParityViolation {
        value: i64,
    },
    RationalHomologyManifold {
        reason: String,
    },
    DeltaUNotPolynomial,
}

impl Violation {
    pub fn is_warning(&self) -> bool {
        matches!(self, Violation::SharedLine { .. })
    }

    pub fn code(&self) -> &'static str {
        match self {
            Violation::DegreeTooSmall => "DegreeTooSmall",
            Violation::NoComponents => "NoComponents",
            Violation::TooManyComponents { .. } => "TooManyComponents",
            Violation::TooLarge => "TooLarge",
            Violation::ZeroCount { .. } => "ZeroCount",
            Violation::InvalidLocalModel { .. } => "InvalidLocalModel",
            Violation::BuiltinRequiresCurve { .. } => "BuiltinRequiresCurve",
            Violation::ExplicitInconsistent { .. } => "ExplicitInconsistent",
            Violation::NegativeMu { .. } => "NegativeMu",
            Violation::NotALineArrangement { .. } => "NotALineArrangement",
            Violation::PairCount { .. } => "PairCount",
            Violation::SharedLine { .. } => "SharedLine",
            Violation::NegativeCount { .. } => "NegativeCount",
            Violation::ParityViolation { .. } => "ParityViolation",
            Violation::RationalHomologyManifold { .. } => "RationalHomologyManifold",
            Violation::DeltaUNotPolynomial => "DeltaUNotPolynomial",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Violation::DegreeTooSmall => write!(f, "degree must be at least 1"),
            Violation::NoComponents => write!(f, "component count must be positive"),
            Violation::TooManyComponents { r, d } => {
                write!(f, "{r} components exceed degree {d}")
            }
            Violation::TooLarge => write!(f, "(d-1)^(n+1) does not fit in 64 bits"),
            Violation::ZeroCount { index } => write!(f, "singularity #{index} has count 0"),
            Violation::InvalidLocalModel { index, reason }
            | Violation::ExplicitInconsistent { index, reason } => {
                write!(f, "singularity #{index}: {reason}")
            }
            Violation::BuiltinRequiresCurve { index } => write!(
                f,
                "singularity #{index}: built-in germs are plane curve germs; use explicit data when n != 1"
            ),
            Violation::NegativeMu { local, global } => {
                write!(f, "sum of local Milnor numbers {local} exceeds {global}")
            }
            Violation::NotALineArrangement { reason } => write!(f, "{reason}"),
            Violation::PairCount { pairs, expected } => {
                write!(f, "sum of C(m_i,2) is {pairs}, expected C(d,2) = {expected}")
            }
            Violation::SharedLine { a, b, d } => write!(
                f,
                "points of multiplicity {a} and {b} need {} > {d} lines (possibly unrealizable)",
                a + b - 1
            ),
            Violation::NegativeCount { what, value } => write!(f, "{what} = {value} < 0"),
            Violation::ParityViolation { value } => {
                write!(f, "mu + 2r - d - 1 - sum(r_x - 1) = {value} is odd")
            }
            Violation::RationalHomologyManifold { reason } => write!(f, "{reason}"),
            Violation::DeltaUNotPolynomial => {
                write!(f, "delta_U has a negative cyclotomic multiplicity")
            }
        }
    }
}

fn choose2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Checks every necessary condition; an empty list means the data is valid.
/// Warnings (see [`Violation::is_warning`]) are included.
pub fn validate(spec: &HypersurfaceSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    if spec.d < 1 {
        out.push(Violation::DegreeTooSmall);
        return out;
    }
    if (spec.d as i128 - 1)
        .checked_pow(spec.n + 1)
        .is_none_or(|g| g > i64::MAX as i128 / 4)
    {
        out.push(Violation::TooLarge);
        return out;
    }
    if spec.r == 0 {
        out.push(Violation::NoComponents);
    }
    if spec.r > spec.d {
        out.push(Violation::TooManyComponents {
            r: spec.r,
            d: spec.d,
        });
    }

    for (index, entry) in spec.singularities.iter().enumerate() {
        if entry.count == 0 {
            out.push(Violation::ZeroCount { index });
        }
        match &entry.singularity {
            LocalSingularity::Ordinary(m) if *m < 2 => out.push(Violation::InvalidLocalModel {
                index,
                reason: format!("ordinary multiplicity {m} < 2"),
            }),
            LocalSingularity::Brieskorn(a, b) if *a < 2 || *b < 2 => {
                out.push(Violation::InvalidLocalModel {
                    index,
                    reason: format!("Brieskorn exponents ({a},{b}) must be >= 2"),
                })
            }
            LocalSingularity::Explicit(e) => {
                for reason in explicit_problems(e, spec.n) {
                    out.push(Violation::ExplicitInconsistent { index, reason });
                }
            }
            _ => {}
        }
        if entry.singularity.is_builtin() && spec.n != 1 {
            out.push(Violation::BuiltinRequiresCurve { index });
        }
    }
    if out.iter().any(|v| !v.is_warning()) {
        // later checks read local invariants, which are meaningless now
        return out;
    }

    let global = spec.global_milnor();
    let local = spec.local_milnor_sum();
    if local > global {
        out.push(Violation::NegativeMu { local, global });
    }
    let mu = global - local;

    if spec.line_arrangement {
        check_arrangement(spec, &mut out);
    }

    if spec.n == 1 && mu >= 0 {
        let excess = spec.branch_excess();
        let r = spec.r as i64;
        let d = spec.d as i64;
        let h00 = excess + 1 - r;
        if h00 < 0 {
            out.push(Violation::NegativeCount {
                what: "sum(r_x - 1) + 1 - r",
                value: h00,
            });
        }
        let twice_h01 = mu + 2 * r - d - 1 - excess;
        if twice_h01 < 0 {
            out.push(Violation::NegativeCount {
                what: "mu + 2r - d - 1 - sum(r_x - 1)",
                value: twice_h01,
            });
        } else if twice_h01 % 2 != 0 {
            out.push(Violation::ParityViolation { value: twice_h01 });
        }
    }

    if spec.rational_homology_manifold {
        for (index, entry) in spec.singularities.iter().enumerate() {
            if entry.singularity.local_alexander().multiplicity(1) > 0 {
                out.push(Violation::RationalHomologyManifold {
                    reason: format!("singularity #{index} has local monodromy eigenvalue 1"),
                });
            }
        }
        if spec.n == 1 && spec.r != 1 {
            out.push(Violation::RationalHomologyManifold {
                reason: format!(
                    "a plane curve transversal at infinity with {} components has singular points with several branches",
                    spec.r
                ),
            });
        }
    }

    if let Some(du) = &spec.delta_u {
        if !du.is_polynomial() {
            out.push(Violation::DeltaUNotPolynomial);
        }
    }
    out
}

fn check_arrangement(spec: &HypersurfaceSpec, out: &mut Vec<Violation>) {
    let mut bad = |reason: String| out.push(Violation::NotALineArrangement { reason });
    if spec.n != 1 {
        bad(format!("line arrangements live in C^2, got n = {}", spec.n));
    }
    if spec.r != spec.d {
        bad(format!(
            "an arrangement of {} lines has {} components",
            spec.d, spec.r
        ));
    }
    let Some(mults) = spec.multiplicities() else {
        bad("every singular point of an arrangement is an ordinary point".into());
        return;
    };
    if let Some(m) = mults.iter().find(|m| **m > spec.d) {
        bad(format!(
            "multiplicity {m} exceeds the number of lines {}",
            spec.d
        ));
        return;
    }
    let pairs: u64 = mults.iter().map(|m| choose2(*m as u64)).sum();
    let expected = choose2(spec.d as u64);
    if pairs != expected {
        out.push(Violation::PairCount { pairs, expected });
    }
    // Two distinct points share at most one line.
    if let [a, b, ..] = mults[..] {
        if a + b - 1 > spec.d {
            out.push(Violation::SharedLine { a, b, d: spec.d });
        }
    }
}

fn explicit_problems(e: &crate::local::ExplicitSingularity, n: u32) -> Vec<String> {
    let mut out = Vec::new();
    if e.milnor_number == 0 {
        out.push("Milnor number must be positive".into());
    }
    if e.branches == 0 {
        out.push("branch count must be positive".into());
    }
    if !e.alexander.is_polynomial() {
        out.push("local Alexander polynomial has a negative multiplicity".into());
        return out;
    }
    if e.alexander.degree() != e.milnor_number as i64 {
        out.push(format!(
            "local Alexander polynomial has degree {}, Milnor number is {}",
            e.alexander.degree(),
            e.milnor_number
        ));
    }
    if e.pairs.total_dim() != e.milnor_number {
        out.push(format!(
            "spectral pairs sum to {}, Milnor number is {}",
            e.pairs.total_dim(),
            e.milnor_number
        ));
    }
    let roots = e.alexander.root_arguments();
    let marginals = e.pairs.alpha_marginals();
    let agree = roots.len() == marginals.len()
        && roots
            .iter()
            .all(|(a, m)| marginals.get(a).copied() == Some(*m as u64));
    if !agree {
        out.push(
            "eigenvalues of the local Alexander polynomial disagree with the spectral pairs".into(),
        );
    }
    if n == 1 && e.pairs.unipotent().total_dim() + 1 != e.branches {
        out.push(format!(
            "eigenvalue-1 part has dimension {}, expected branches - 1 = {}",
            e.pairs.unipotent().total_dim(),
            e.branches as i64 - 1
        ));
    }
    if let Some(g) = &e.gr_f_dims {
        if g.values().sum::<u64>() != e.milnor_number {
            out.push("graded Hodge dimensions do not sum to the Milnor number".into());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp_cubic() -> HypersurfaceSpec {
        HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 3), 1)
    }

    #[test]
    fn derived_examples() {
        let generic = HypersurfaceSpec::line_arrangement(3, &[2, 2, 2]);
        assert_eq!(
            generic.derived(),
            DerivedQuantities {
                mu: 1,
                xi: 1,
                b1: Some(6),
                j1: Some(5)
            }
        );
        assert_eq!(
            cusp_cubic().derived(),
            DerivedQuantities {
                mu: 2,
                xi: 1,
                b1: Some(3),
                j1: Some(2)
            }
        );
        let quartic_surface = HypersurfaceSpec::new(2, 4, 1);
        assert_eq!(
            quartic_surface.derived(),
            DerivedQuantities {
                mu: 27,
                xi: 7,
                b1: None,
                j1: None
            }
        );
    }

    #[test]
    fn xi_is_integral() {
        for n in 0..=6 {
            for d in 1..=12 {
                assert!(xi(n, d).1, "n={n} d={d}");
            }
        }
        assert_eq!(xi(1, 3), (1, true));
        assert_eq!(xi(2, 2), (1, true));
        assert_eq!(xi(1, 2), (0, true));
    }

    #[test]
    fn valid_examples() {
        assert!(validate(&HypersurfaceSpec::line_arrangement(3, &[3])).is_empty());
        assert!(validate(&HypersurfaceSpec::line_arrangement(3, &[2, 2, 2])).is_empty());
        assert!(validate(&cusp_cubic()).is_empty());
        assert!(validate(&HypersurfaceSpec::new(1, 3, 1)).is_empty());
    }

    #[test]
    fn too_many_components() {
        let v = validate(&HypersurfaceSpec::new(1, 2, 3));
        assert!(v.contains(&Violation::TooManyComponents { r: 3, d: 2 }));
    }

    #[test]
    fn negative_mu() {
        let spec =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Brieskorn(2, 6), 1);
        assert_eq!(
            validate(&spec),
            vec![Violation::NegativeMu {
                local: 5,
                global: 4
            }]
        );
    }

    #[test]
    fn curve_count_constraints() {
        // nodal cubic: mu = 3, 3 + 2 - 3 - 1 - 1 = 0
        let nodal =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Ordinary(2), 1);
        assert!(validate(&nodal).is_empty());
        // node and cusp on an irreducible cubic: 1 + 2 - 3 - 1 - 1 = -2
        let spec = HypersurfaceSpec::new(1, 3, 1)
            .with_singularity(LocalSingularity::Brieskorn(2, 2), 1)
            .with_singularity(LocalSingularity::Brieskorn(2, 3), 1);
        assert!(matches!(
            validate(&spec)[..],
            [Violation::NegativeCount { .. }]
        ));
        // two disjoint components: 0 + 1 - 2 < 0
        let spec = HypersurfaceSpec::new(1, 3, 2);
        assert_eq!(
            validate(&spec),
            vec![Violation::NegativeCount {
                what: "sum(r_x - 1) + 1 - r",
                value: -1
            }]
        );
    }

    #[test]
    fn odd_parity_is_flagged() {
        // explicit germ with mu = 1 and no eigenvalue 1: 3 + 2 - 3 - 1 - 0 = 1
        let e = crate::local::ExplicitSingularity {
            milnor_number: 1,
            branches: 1,
            alexander: CyclotomicFactorization::phi(2, 1),
            pairs: crate::table::SpectralPairTable::from_entries([(
                0,
                1,
                crate::table::alpha(1, 2),
                1,
            )]),
            gr_f_dims: None,
        };
        let spec =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Explicit(e), 1);
        assert_eq!(
            validate(&spec),
            vec![Violation::ParityViolation { value: 1 }]
        );
    }

    #[test]
    fn arrangement_rules() {
        let v = validate(&HypersurfaceSpec::line_arrangement(4, &[2, 2]));
        assert!(v.contains(&Violation::PairCount {
            pairs: 2,
            expected: 6
        }));
        let v = validate(&HypersurfaceSpec::line_arrangement(4, &[3, 3]));
        assert_eq!(v, vec![Violation::SharedLine { a: 3, b: 3, d: 4 }]);
        assert!(v.iter().all(Violation::is_warning));
        let mut spec = HypersurfaceSpec::line_arrangement(3, &[3]);
        spec.r = 2;
        assert!(validate(&spec)
            .iter()
            .any(|v| matches!(v, Violation::NotALineArrangement { .. })));
    }

    #[test]
    fn builtin_germs_need_curves() {
        let spec =
            HypersurfaceSpec::new(2, 3, 1).with_singularity(LocalSingularity::Ordinary(2), 1);
        assert!(validate(&spec).contains(&Violation::BuiltinRequiresCurve { index: 0 }));
        let spec = HypersurfaceSpec::new(2, 3, 1)
            .with_singularity(LocalSingularity::brieskorn_pham(&[2, 2, 2]), 2);
        assert!(validate(&spec).is_empty());
    }

    #[test]
    fn rational_homology_manifold_flag() {
        let mut spec = cusp_cubic();
        spec.rational_homology_manifold = true;
        assert!(validate(&spec).is_empty());
        let mut nodal =
            HypersurfaceSpec::new(1, 3, 1).with_singularity(LocalSingularity::Ordinary(2), 1);
        nodal.rational_homology_manifold = true;
        assert!(matches!(
            validate(&nodal)[..],
            [Violation::RationalHomologyManifold { .. }]
        ));
    }

    #[test]
    fn explicit_consistency() {
        let bad = crate::local::ExplicitSingularity {
            milnor_number: 3,
            branches: 1,
            alexander: CyclotomicFactorization::phi(6, 1),
            pairs: crate::table::SpectralPairTable::new(),
            gr_f_dims: None,
        };
        let spec =
            HypersurfaceSpec::new(1, 4, 1).with_singularity(LocalSingularity::Explicit(bad), 1);
        let v = validate(&spec);
        assert!(v.len() >= 2);
        assert!(v
            .iter()
            .all(|v| matches!(v, Violation::ExplicitInconsistent { index: 0, .. })));
    }
}
