//! Laurent polynomials in one variable `q` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff.into());
        p
    }

    /// `q^e`.
    pub fn q_power(exponent: i64) -> Self {
        Self::monomial(exponent, 1)
    }

    /// The q-integer `[a] = 1 + q + ... + q^{a-1}`; zero for `a ≤ 0`.
    pub fn q_integer(a: i64) -> Self {
        let mut p = Self::zero();
        for e in 0..a.max(0) {
            p.add_term(e, BigInt::one());
        }
        p
    }

    /// `q^lo + q^{lo+1} + ... + q^hi`; zero when `hi < lo`.
    pub fn q_range(lo: i64, hi: i64) -> Self {
        Self::q_integer(hi - lo + 1).shift(lo)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k` for a positive `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k > 0, "substitution exponent must be positive");
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact division; fails if the remainder is nonzero or a quotient
    /// coefficient would not be an integer.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (d_lo, d_hi) = match (divisor.min_exponent(), divisor.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InexactDivision),
        };
        let (n_lo, _) = match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(Self::zero()),
        };
        let lead = divisor.coeff(d_hi);
        // Any exact quotient has exponents no smaller than this.
        let floor = n_lo - d_lo;
        let mut remainder = self.clone();
        let mut quotient = Self::zero();
        while let Some(r_hi) = remainder.max_exponent() {
            let e = r_hi - d_hi;
            if e < floor {
                return Err(Error::InexactDivision);
            }
            let (c, rem) = remainder.coeff(r_hi).div_rem(&lead);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            let term = Self::monomial(e, c);
            remainder = &remainder - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Ok(quotient)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> Self {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl std::iter::Product for LaurentPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// JSON: sorted [[exponent, "coefficient"], ...].
impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(i64, String)> = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.to_string()))
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut p = LaurentPolynomial::zero();
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}
