mod common;

use std::collections::BTreeMap;

use alexhodge::boundary::{boundary_alexander, boundary_pairs_curve, boundary_pairs_nonunipotent};
use alexhodge::census::weak_data;
use alexhodge::cyclotomic::{cyclotomic, factor_roots_of_unity, totient};
use alexhodge::io::{read_spec, serialize_spec};
use alexhodge::milnor::{milnor_dim, steenbrink_infinity, top_degree};
use alexhodge::report::build_report;
use alexhodge::{CyclotomicFactorization, LaurentPoly, LocalSingularity};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn factorization() -> impl Strategy<Value = CyclotomicFactorization> {
    (
        prop::collection::btree_map(1u64..=24, 1i64..=3, 0..4),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3)],
        prop_oneof![Just(1i64), Just(2), Just(5)],
        -3i64..=3,
    )
        .prop_map(|(factors, num, den, t_power)| {
            CyclotomicFactorization::new(
                BigRational::new(BigInt::from(num), BigInt::from(den)),
                t_power,
                factors,
            )
        })
}

proptest! {
    #[test]
    fn factor_expand_round_trip(f in factorization()) {
        let p = f.expand().unwrap();
        prop_assert_eq!(factor_roots_of_unity(&p).unwrap(), f.clone());
        let span = p.highest_exponent().unwrap() - p.lowest_exponent().unwrap();
        prop_assert_eq!(span, f.degree());
    }

    #[test]
    fn degree_is_weighted_totient_sum(f in factorization()) {
        let expected: i64 = f.factors().iter().map(|(k, m)| totient(*k) as i64 * m).sum();
        prop_assert_eq!(f.degree(), expected);
    }

    #[test]
    fn bar_matches_polynomial_bar(f in factorization()) {
        prop_assert_eq!(f.bar().expand().unwrap(), f.expand().unwrap().bar());
        prop_assert_eq!(f.bar().bar(), f);
    }

    #[test]
    fn products_expand_to_products(f in factorization(), g in factorization()) {
        prop_assert_eq!(f.mul(&g).expand().unwrap(), f.expand().unwrap() * g.expand().unwrap());
        prop_assert!(f.mul(&g).is_divisible_by(&f));
        prop_assert_eq!(f.mul(&g).div(&g), f);
    }

    #[test]
    fn non_cyclotomic_polynomials_are_rejected(a in 2i64..=9) {
        // t - a has a root off the unit circle
        let p = LaurentPoly::from_int_coeffs([-a, 1]);
        prop_assert!(factor_roots_of_unity(&p).is_err());
    }

    #[test]
    fn milnor_dim_symmetry_and_mass(n in 0u32..=5, d in 2u32..=9) {
        let top = top_degree(n, d);
        let mut mass = 0;
        for m in 0..=top {
            prop_assert_eq!(milnor_dim(n, d, m), milnor_dim(n, d, top - m));
            mass += milnor_dim(n, d, m);
        }
        prop_assert_eq!(mass, (d as u64 - 1).pow(n + 1));
    }

    #[test]
    fn steenbrink_infinity_symmetries(n in 0u32..=4, d in 2u32..=8) {
        let t = steenbrink_infinity(n, d);
        prop_assert_eq!(t.conjugate(), t.clone());
        let ni = n as i32;
        prop_assert_eq!(t.non_unipotent().level_dual(ni), t.non_unipotent());
        prop_assert_eq!(t.unipotent().level_dual(ni + 1), t.unipotent());
        prop_assert_eq!(t.total_dim(), (d as u64 - 1).pow(n + 1));
    }

    #[test]
    fn brieskorn_local_invariants(a in 2u32..=15, b in 2u32..=15) {
        let g = LocalSingularity::Brieskorn(a, b);
        let pairs = g.local_pairs();
        prop_assert_eq!(pairs.total_dim(), g.milnor_number());
        prop_assert_eq!(g.local_alexander().degree() as u64, g.milnor_number());
        prop_assert_eq!(pairs.conjugate(), pairs.clone());
        prop_assert_eq!(pairs.non_unipotent().level_dual(1), pairs.non_unipotent());
        prop_assert_eq!(pairs.unipotent().level_dual(2), pairs.unipotent());
        prop_assert_eq!(pairs.unipotent().total_dim() + 1, g.branches());
        let roots: BTreeMap<_, _> = g.local_alexander().root_arguments();
        let marginals: BTreeMap<_, _> =
            pairs.alpha_marginals().into_iter().map(|(a, c)| (a, c as i64)).collect();
        prop_assert_eq!(roots, marginals);
    }

    #[test]
    fn brieskorn_pham_mass(exponents in prop::collection::vec(2u32..=5, 1..=4)) {
        let g = LocalSingularity::brieskorn_pham(&exponents);
        let mu: u64 = exponents.iter().map(|a| *a as u64 - 1).product();
        prop_assert_eq!(g.milnor_number(), mu);
        prop_assert_eq!(g.local_alexander().degree() as u64, mu);
        let n = exponents.len() as i32 - 1;
        let pairs = g.local_pairs();
        prop_assert_eq!(pairs.conjugate(), pairs.clone());
        prop_assert_eq!(pairs.non_unipotent().level_dual(n), pairs.non_unipotent());
        prop_assert_eq!(pairs.unipotent().level_dual(n + 1), pairs.unipotent());
    }

    #[test]
    fn random_curves_report_cleanly(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = common::random_curve(&mut rng);
        let report = build_report(&spec).unwrap();
        prop_assert!(report.all_passed(), "{}", report);
        let full = boundary_pairs_curve(&spec).unwrap();
        prop_assert_eq!(full.non_unipotent(), boundary_pairs_nonunipotent(&spec));
    }

    #[test]
    fn random_hypersurfaces_report_cleanly(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = common::random_hypersurface(&mut rng);
        let report = build_report(&spec).unwrap();
        prop_assert!(report.all_passed(), "{}", report);
        prop_assert_eq!(
            boundary_alexander(&spec).unwrap().degree(),
            2 * (spec.d as i64 - 1).pow(spec.n + 1)
        );
    }

    #[test]
    fn spec_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = common::random_hypersurface(&mut rng);
        prop_assert_eq!(read_spec(&serialize_spec(&spec)).unwrap(), spec);
    }
}

#[test]
fn cyclotomic_polynomials_are_irreducible_factors() {
    for k in 1..=40 {
        let f = factor_roots_of_unity(&cyclotomic(k)).unwrap();
        assert_eq!(f, CyclotomicFactorization::phi(k, 1));
        assert_eq!(cyclotomic(k).degree(), Some(totient(k) as i64));
    }
}

#[test]
fn census_rows_are_sorted_and_distinct() {
    for d in 2..=7 {
        let rows = weak_data(d);
        let keys: Vec<Vec<u32>> = rows
            .iter()
            .map(|m| m.iter().rev().copied().collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "d={d}");
    }
}
