//! Seeded generators of valid hypersurface descriptions.
#![allow(dead_code)]

use alexhodge::spec::validate;
use alexhodge::{HypersurfaceSpec, LocalSingularity};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn is_valid(spec: &HypersurfaceSpec) -> bool {
    validate(spec).iter().all(|v| v.is_warning())
}

fn random_curve_germ(rng: &mut ChaCha8Rng, d: u32) -> LocalSingularity {
    if rng.gen_bool(0.5) {
        LocalSingularity::Ordinary(rng.gen_range(2..=d.max(2)))
    } else {
        LocalSingularity::Brieskorn(
            rng.gen_range(2..=d.max(2) + 1),
            rng.gen_range(2..=d.max(2) + 2),
        )
    }
}

/// A valid plane curve of degree `2..=8` with built-in singularities.
pub fn random_curve(rng: &mut ChaCha8Rng) -> HypersurfaceSpec {
    loop {
        let d = rng.gen_range(2..=8);
        let mut spec = HypersurfaceSpec::new(1, d, 1);
        for _ in 0..rng.gen_range(0..=4) {
            let germ = random_curve_germ(rng, d);
            spec = spec.with_singularity(germ, rng.gen_range(1..=3));
        }
        let excess = spec.branch_excess().max(0) as u32;
        spec.r = rng.gen_range(1..=d.min(excess + 1));
        if is_valid(&spec) {
            return spec;
        }
    }
}

/// A valid hypersurface with `n = 1`, `2` or `3` and `d <= 8`; germs in more
/// than two variables are Brieskorn-Pham germs given as explicit data.
pub fn random_hypersurface(rng: &mut ChaCha8Rng) -> HypersurfaceSpec {
    let n = rng.gen_range(1..=3u32);
    if n == 1 {
        return random_curve(rng);
    }
    loop {
        let d = rng.gen_range(2..=8);
        let mut spec = HypersurfaceSpec::new(n, d, 1);
        for _ in 0..rng.gen_range(0..=3) {
            let exponents: Vec<u32> = (0..=n).map(|_| rng.gen_range(2..=4)).collect();
            spec = spec.with_singularity(
                LocalSingularity::brieskorn_pham(&exponents),
                rng.gen_range(1..=2),
            );
        }
        spec.rational_homology_manifold = spec.singularities.is_empty() && rng.gen_bool(0.5);
        if is_valid(&spec) {
            return spec;
        }
    }
}

/// Weak combinatorial data of an arrangement of `d` lines with every
/// multiplicity below `d`.
pub fn random_arrangement(rng: &mut ChaCha8Rng, d: u32) -> Vec<u32> {
    assert!(d >= 3);
    let mut budget = (d * (d - 1) / 2) as u64;
    let mut out = Vec::new();
    while budget > 0 {
        let feasible: Vec<u32> = (2..d)
            .filter(|m| (m * (m - 1) / 2) as u64 <= budget)
            .collect();
        let m = feasible[rng.gen_range(0..feasible.len())];
        budget -= (m * (m - 1) / 2) as u64;
        out.push(m);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
