//! Cyclotomic polynomials and Laurent polynomials factored into them.
//!
//! Every order that appears in this crate (global and local Alexander
//! polynomials, divisibility bounds, error terms) has only roots of unity as
//! zeros, so it is stored as `unit * t^k * prod Phi_j^{m_j}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::poly::{dense, LaurentPoly};

/// Euler's totient.
pub fn totient(k: u64) -> u64 {
    let mut n = k;
    let mut out = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Positive divisors in ascending order.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= k {
        if k.is_multiple_of(i) {
            small.push(i);
            if i != k / i {
                large.push(k / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(k: u64) -> i32 {
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn cyclotomic_dense(k: u64) -> Vec<BigInt> {
    // Phi_k = prod_{e | k} (t^e - 1)^{mu(k/e)}
    let mut num = vec![BigInt::one()];
    let mut dens = Vec::new();
    for e in divisors(k) {
        match mobius(k / e) {
            1 => num = dense::mul(&num, &dense::t_pow_minus_one(e as usize)),
            -1 => dens.push(e),
            _ => {}
        }
    }
    for e in dens {
        num = dense::div_exact_monic(&num, &dense::t_pow_minus_one(e as usize))
            .expect("Mobius product is exact");
    }
    num
}

/// The `k`-th cyclotomic polynomial.
///
/// # Panics
/// If `k == 0`.
pub fn cyclotomic(k: u64) -> LaurentPoly {
    assert!(k >= 1, "cyclotomic order must be positive");
    LaurentPoly::from_dense_integer(0, &cyclotomic_dense(k))
}

/// `unit * t^t_power * prod_k Phi_k(t)^{m_k}`.
///
/// Multiplicities are normally nonnegative. Negative ones only occur in
/// formal divisibility bounds, which cannot be expanded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicFactorization {
    unit: BigRational,
    t_power: i64,
    factors: BTreeMap<u64, i64>,
}

impl Default for CyclotomicFactorization {
    fn default() -> Self {
        Self::one()
    }
}

impl CyclotomicFactorization {
    pub fn one() -> Self {
        Self {
            unit: BigRational::one(),
            t_power: 0,
            factors: BTreeMap::new(),
        }
    }

    /// `Phi_k^m`.
    pub fn phi(k: u64, m: i64) -> Self {
        Self::from_factors([(k, m)])
    }

    /// `t^d - 1 = prod_{k | d} Phi_k`.
    pub fn t_pow_minus_one(d: u64) -> Self {
        Self::from_factors(divisors(d).into_iter().map(|k| (k, 1)))
    }

    /// Monic factorization from `(order, multiplicity)` pairs; repeated
    /// orders accumulate.
    pub fn from_factors<I: IntoIterator<Item = (u64, i64)>>(factors: I) -> Self {
        let mut out = Self::one();
        for (k, m) in factors {
            out.add_multiplicity(k, m);
        }
        out
    }

    pub fn new(unit: BigRational, t_power: i64, factors: BTreeMap<u64, i64>) -> Self {
        assert!(!unit.is_zero(), "unit must be nonzero");
        let mut out = Self {
            unit,
            t_power,
            factors: BTreeMap::new(),
        };
        for (k, m) in factors {
            out.add_multiplicity(k, m);
        }
        out
    }

    fn add_multiplicity(&mut self, k: u64, m: i64) {
        assert!(k >= 1, "cyclotomic order must be positive");
        let e = self.factors.entry(k).or_insert(0);
        *e += m;
        if *e == 0 {
            self.factors.remove(&k);
        }
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn t_power(&self) -> i64 {
        self.t_power
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn multiplicity(&self, k: u64) -> i64 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    /// `sum_k m_k * phi(k)`.
    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(k, m)| m * totient(*k) as i64)
            .sum()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.factors.values().all(|m| *m >= 0)
    }

    /// The order-theoretic representative: unit 1 and no `t`-power.
    pub fn normalized(&self) -> Self {
        Self {
            unit: BigRational::one(),
            t_power: 0,
            factors: self.factors.clone(),
        }
    }

    /// Equality up to units of `Q[t, t^-1]`.
    pub fn same_order(&self, other: &Self) -> bool {
        self.factors == other.factors
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self {
            unit: &self.unit * &other.unit,
            t_power: self.t_power + other.t_power,
            factors: self.factors.clone(),
        };
        for (k, m) in &other.factors {
            out.add_multiplicity(*k, *m);
        }
        out
    }

    /// Formal quotient; multiplicities may become negative.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> Self {
        Self {
            unit: self.unit.recip(),
            t_power: -self.t_power,
            factors: self.factors.iter().map(|(k, m)| (*k, -m)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let unit = if e >= 0 {
            num_traits::pow(self.unit.clone(), e as usize)
        } else {
            num_traits::pow(self.unit.recip(), e.unsigned_abs() as usize)
        };
        Self {
            unit,
            t_power: self.t_power * e,
            factors: self
                .factors
                .iter()
                .filter(|_| e != 0)
                .map(|(k, m)| (*k, m * e))
                .collect(),
        }
    }

    /// True when `other` divides `self` multiplicity-wise (units ignored).
    pub fn is_divisible_by(&self, other: &Self) -> bool {
        self.factors
            .keys()
            .chain(other.factors.keys())
            .all(|k| self.multiplicity(*k) >= other.multiplicity(*k))
    }

    /// The involution `t -> t^-1`, kept exact.
    ///
    /// `Phi_k(t^-1) = t^{-phi(k)} Phi_k(t)` for `k >= 2` and
    /// `Phi_1(t^-1) = -t^-1 Phi_1(t)`.
    pub fn bar(&self) -> Self {
        let m1 = self.multiplicity(1);
        let unit = if m1.rem_euclid(2) == 1 {
            -self.unit.clone()
        } else {
            self.unit.clone()
        };
        Self {
            unit,
            t_power: -self.t_power - self.degree(),
            factors: self.factors.clone(),
        }
    }

    /// Multiset of eigenvalue arguments `alpha = j/k` (reduced, in `[0,1)`)
    /// with multiplicities, i.e. the zeros `e^{2 pi i alpha}`.
    pub fn root_arguments(&self) -> BTreeMap<crate::table::Alpha, i64> {
        let mut out = BTreeMap::new();
        for (k, m) in &self.factors {
            for j in 0..*k {
                if j.gcd(k) == 1 {
                    let a = crate::table::Alpha::new(j as i64, *k as i64);
                    *out.entry(a).or_insert(0) += m;
                }
            }
        }
        out
    }

    /// Expands into a Laurent polynomial.
    pub fn expand(&self) -> Result<LaurentPoly, AlgebraError> {
        if let Some((k, m)) = self.factors.iter().find(|(_, m)| **m < 0) {
            return Err(AlgebraError::NegativeMultiplicity {
                order: *k,
                multiplicity: *m,
            });
        }
        let mut acc = vec![BigInt::one()];
        for (k, m) in &self.factors {
            let phi = cyclotomic_dense(*k);
            for _ in 0..*m {
                acc = dense::mul(&acc, &phi);
            }
        }
        Ok(LaurentPoly::from_dense_integer(self.t_power, &acc).scale(&self.unit))
    }
}

/// Factors a nonzero Laurent polynomial whose zeros are all roots of unity.
///
/// The result expands back to `p` exactly: the unit is the leading
/// coefficient and the `t`-power is the lowest exponent.
pub fn factor_roots_of_unity(p: &LaurentPoly) -> Result<CyclotomicFactorization, AlgebraError> {
    let low = p.lowest_exponent().ok_or(AlgebraError::ZeroPolynomial)?;
    let unit = p
        .leading_coeff()
        .cloned()
        .ok_or(AlgebraError::ZeroPolynomial)?;
    let monic = p.scale(&unit.recip()).shift(-low);
    // A product of cyclotomic polynomials is monic with integer coefficients.
    let (_, mut rest) = monic
        .dense_integer()
        .ok_or(AlgebraError::NotCyclotomicProduct)?;
    let mut factors = BTreeMap::new();
    let mut k: u64 = 1;
    // phi(k) >= sqrt(k/2), so orders beyond 2*deg^2 cannot divide.
    loop {
        let deg = (rest.len() - 1) as u64;
        if deg == 0 {
            break;
        }
        if k > 2 * deg * deg {
            return Err(AlgebraError::NotCyclotomicProduct);
        }
        if totient(k) <= deg {
            let phi = cyclotomic_dense(k);
            while rest.len() > phi.len() - 1 {
                match dense::div_exact_monic(&rest, &phi) {
                    Some(mut q) => {
                        dense::trim(&mut q);
                        rest = q;
                        *factors.entry(k).or_insert(0) += 1;
                    }
                    None => break,
                }
            }
        }
        k += 1;
    }
    if !rest[0].is_one() {
        return Err(AlgebraError::NotCyclotomicProduct);
    }
    Ok(CyclotomicFactorization::new(unit, low, factors))
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() {
            parts.push(format!("({})", self.unit));
        }
        if self.t_power != 0 {
            parts.push(format!("t^{}", self.t_power));
        }
        for (k, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("Phi{k}"));
            } else {
                parts.push(format!("Phi{k}^{m}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Least common multiple of the cyclotomic orders present.
pub fn order_lcm(f: &CyclotomicFactorization) -> u64 {
    f.factors.keys().fold(1u64, |acc, k| acc.lcm(k))
}
