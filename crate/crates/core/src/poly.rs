//! Laurent polynomials over the rationals, `Q[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial with exact rational coefficients.
///
/// Stored sparsely; zero coefficients are never kept, so structural equality
/// is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, BigRational::one())
    }

    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds `c_0 + c_1 t + ... ` from integer coefficients listed from degree 0.
    pub fn from_int_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn highest_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Width of the support, `highest - lowest`. This is the degree of the
    /// order the polynomial represents in `Q[t, t^-1]`.
    pub fn degree(&self) -> Option<i64> {
        Some(self.highest_exponent()? - self.lowest_exponent()?)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point; `None` when `x = 0` and a negative power occurs.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            if *e < 0 && x.is_zero() {
                return None;
            }
            let xe = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += c * xe;
        }
        Some(acc)
    }

    /// Dense integer coefficients starting from the lowest exponent, if every
    /// coefficient is an integer.
    pub(crate) fn dense_integer(&self) -> Option<(i64, Vec<BigInt>)> {
        let low = self.lowest_exponent()?;
        let high = self.highest_exponent()?;
        let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out[(e - low) as usize] = c.to_integer();
        }
        Some((low, out))
    }

    pub(crate) fn from_dense_integer(low: i64, dense: &[BigInt]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, BigRational::from_integer(c.clone()))),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense integer polynomial helpers used by the cyclotomic code.
pub(crate) mod dense {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    pub fn trim(p: &mut Vec<BigInt>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// `t^k - 1`.
    pub fn t_pow_minus_one(k: usize) -> Vec<BigInt> {
        let mut p = vec![BigInt::zero(); k + 1];
        p[0] = -BigInt::one();
        p[k] = BigInt::one();
        p
    }

    /// Exact division by a monic polynomial; `None` if the remainder is nonzero.
    pub fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
        let dn = den.len() - 1;
        if num.len() < den.len() {
            return None;
        }
        let mut rem = num.to_vec();
        let mut quot = vec![BigInt::zero(); num.len() - dn];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dn].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(quot)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &LaurentPoly::from_int_coeffs([1, 2]) - &LaurentPoly::from_int_coeffs([1, 2]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn product_and_degree() {
        let a = LaurentPoly::from_int_coeffs([-1, 1]);
        let b = LaurentPoly::from_int_coeffs([1, 1, 1]);
        let p = &a * &b;
        assert_eq!(p, LaurentPoly::from_int_coeffs([-1, 0, 0, 1]));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.shift(-2).degree(), Some(3));
        assert_eq!(p.shift(-2).lowest_exponent(), Some(-2));
    }

    #[test]
    fn bar_is_involution() {
        let p = LaurentPoly::from_terms([(-3, q(2)), (1, q(5))]);
        assert_eq!(p.bar().bar(), p);
        assert_eq!(p.bar().coeff(3), q(2));
    }

    #[test]
    fn eval_at_one() {
        let p = LaurentPoly::from_int_coeffs([1, 1, 1]).shift(-1);
        assert_eq!(p.eval(&q(1)), Some(q(3)));
        assert_eq!(p.eval(&q(0)), None);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_int_coeffs([-1, 0, 1]);
        assert_eq!(p.to_string(), "t^2 - 1");
        assert_eq!(
            LaurentPoly::from_int_coeffs([1, -1, 1]).to_string(),
            "t^2 - t + 1"
        );
    }

    #[test]
    fn dense_division() {
        let num = dense::t_pow_minus_one(6);
        let den = dense::t_pow_minus_one(3);
        let quot = dense::div_exact_monic(&num, &den).unwrap();
        assert_eq!(
            quot,
            vec![BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()]
        );
        assert!(dense::div_exact_monic(&den, &dense::t_pow_minus_one(2)).is_none());
    }
}
