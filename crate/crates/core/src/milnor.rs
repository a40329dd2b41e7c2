//! Graded pieces of the Fermat Milnor algebra and the spectral pairs at infinity.
//!
//! `M(n, d) = C[x_0..x_n] / (x_0^{d-1}, ..., x_n^{d-1})` has a monomial basis
//! `x^a` with `0 <= a_i <= d - 2`, so `dim M(n, d)_m` counts bounded
//! compositions of `m` into `n + 1` parts.

use crate::error::MilnorError;
use crate::table::{alpha, Alpha, SpectralPairTable};

/// Upper limit on the number of exponent tuples the brute-force oracle visits.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Top degree of `M(n, d)`, i.e. `(n + 1)(d - 2)`.
pub fn top_degree(n: u32, d: u32) -> i64 {
    (n as i64 + 1) * (d as i64 - 2)
}

/// `dim M(n, d)_m` by inclusion-exclusion over the parts exceeding `d - 2`.
pub fn milnor_dim(n: u32, d: u32, m: i64) -> u64 {
    if d < 2 || m < 0 || m > top_degree(n, d) {
        return 0;
    }
    let parts = n as i64 + 1;
    let step = d as i64 - 1;
    let mut sum: i128 = 0;
    for j in 0..=parts {
        let rest = m - j * step;
        if rest < 0 {
            break;
        }
        let term = binomial(parts, j) * binomial(rest + n as i64, n as i64);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(sum >= 0);
    sum as u64
}

/// `dim M(n, d)_m` by enumerating every exponent tuple.
pub fn milnor_dim_bruteforce(n: u32, d: u32, m: i64) -> Result<u64, MilnorError> {
    if d < 2 {
        return Ok(0);
    }
    let base = (d - 1) as u128;
    let tuples = base.checked_pow(n + 1).unwrap_or(u128::MAX);
    if tuples > ENUMERATION_LIMIT {
        return Err(MilnorError::EnumerationTooLarge {
            tuples,
            limit: ENUMERATION_LIMIT,
        });
    }
    let top = d as i64 - 2;
    let mut exps = vec![0i64; n as usize + 1];
    let mut count = 0u64;
    loop {
        if exps.iter().sum::<i64>() == m {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(count);
            }
            if exps[i] < top {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Spectral pairs of `H^n(F_inf)` for a degree-`d` form in `n + 1` variables.
///
/// Weight `n`, `alpha = j/d`: `h^{p, n-p}_alpha = dim M_{pd - n - 1 + j}`.
/// Weight `n + 1`, `alpha = 0`: `h^{p, n+1-p}_0 = dim M_{pd - n - 1}`.
pub fn steenbrink_infinity(n: u32, d: u32) -> SpectralPairTable {
    let mut table = SpectralPairTable::new();
    if d < 2 {
        return table;
    }
    let (ni, di) = (n as i64, d as i64);
    for p in 0..=ni + 1 {
        let base = p * di - ni - 1;
        table.add(
            p as i32,
            (ni + 1 - p) as i32,
            Alpha::from_integer(0),
            milnor_dim(n, d, base),
        );
        for j in 1..di {
            table.add(
                p as i32,
                (ni - p) as i32,
                alpha(j, di),
                milnor_dim(n, d, base + j),
            );
        }
    }
    table
}

/// Infinity-side bound `dim M(n, d)_{pd - n - 1 + d*alpha}`; zero when the
/// grading index is not an integer.
pub fn milnor_dim_at(n: u32, d: u32, p: i32, a: Alpha) -> u64 {
    let shift = a * Alpha::from_integer(d as i64);
    if !shift.is_integer() {
        return 0;
    }
    let index = p as i64 * d as i64 - n as i64 - 1 + shift.to_integer();
    milnor_dim(n, d, index)
}
