//! Fixtures shared by the criterion benches.

use alexhodge::{HypersurfaceSpec, LocalSingularity};

/// Named hypersurfaces of increasing size.
pub fn sample_specs() -> Vec<(&'static str, HypersurfaceSpec)> {
    let mut quintic_threefold = HypersurfaceSpec::new(3, 5, 1);
    quintic_threefold.rational_homology_manifold = true;
    vec![
        (
            "generic_lines_6",
            HypersurfaceSpec::line_arrangement(6, &[2; 15]),
        ),
        (
            "ceva_like_6",
            HypersurfaceSpec::line_arrangement(6, &[3, 3, 3, 3, 2, 2, 2]),
        ),
        (
            "cuspidal_sextic",
            HypersurfaceSpec::new(1, 6, 1).with_singularity(LocalSingularity::Brieskorn(2, 3), 6),
        ),
        (
            "nodal_quartic_surface",
            HypersurfaceSpec::new(2, 4, 1)
                .with_singularity(LocalSingularity::brieskorn_pham(&[2, 2, 2]), 16),
        ),
        ("smooth_quintic_threefold", quintic_threefold),
    ]
}
