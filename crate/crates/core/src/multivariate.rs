//! Polynomials in `x_1..x_n` with big-integer coefficients, truncated at a
//! fixed total degree. Products silently drop every term above the cap, so
//! identities between power series can be compared degree by degree.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPolynomial;

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMultiPolynomial {
    vars: usize,
    max_degree: u32,
    terms: BTreeMap<Exponents, BigInt>,
}

impl TruncatedMultiPolynomial {
    pub fn zero(vars: usize, max_degree: u32) -> Self {
        TruncatedMultiPolynomial {
            vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize, max_degree: u32) -> Self {
        let mut p = Self::zero(vars, max_degree);
        p.add_term(vec![0; vars], BigInt::one());
        p
    }

    /// `x_i` (0-based index).
    pub fn variable(vars: usize, max_degree: u32, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars, max_degree);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Adds `coeff * x^exponents`; terms above the degree cap are dropped.
    pub fn add_term(&mut self, exponents: Exponents, coeff: BigInt) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        if coeff.is_zero() || exponents.iter().sum::<u32>() > self.max_degree {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The homogeneous component of degree `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Total degrees that occur.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * k);
        }
        out
    }

    /// Exchanges the variables `x_i` and `x_j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.vars, self.max_degree);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.terms.insert(e, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars, "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * x.pow(k))
            })
            .sum()
    }

    /// Substitutes `x_i = q^{exponents[i]}`.
    pub fn specialize(&self, exponents: &[i64]) -> LaurentPolynomial {
        assert_eq!(exponents.len(), self.vars, "specialization dimension");
        let mut out = LaurentPolynomial::zero();
        for (e, c) in &self.terms {
            let deg: i64 = e.iter().zip(exponents).map(|(&k, &s)| k as i64 * s).sum();
            out.add_term(deg, c.clone());
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        assert_eq!(self.max_degree, other.max_degree, "degree cap mismatch");
    }
}

impl<'a> Add<&'a TruncatedMultiPolynomial> for &'a TruncatedMultiPolynomial {
    type Output = TruncatedMultiPolynomial;
    fn add(self, rhs: &TruncatedMultiPolynomial) -> TruncatedMultiPolynomial {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TruncatedMultiPolynomial> for &'a TruncatedMultiPolynomial {
    type Output = TruncatedMultiPolynomial;
    fn sub(self, rhs: &TruncatedMultiPolynomial) -> TruncatedMultiPolynomial {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a TruncatedMultiPolynomial> for &'a TruncatedMultiPolynomial {
    type Output = TruncatedMultiPolynomial;
    fn mul(self, rhs: &TruncatedMultiPolynomial) -> TruncatedMultiPolynomial {
        self.check_compatible(rhs);
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &rhs.terms {
                let d2: u32 = e2.iter().sum();
                if d1 + d2 > self.max_degree {
                    continue;
                }
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncatedMultiPolynomial {
            vars: self.vars,
            max_degree: self.max_degree,
            terms: acc,
        }
    }
}

impl Neg for TruncatedMultiPolynomial {
    type Output = TruncatedMultiPolynomial;
    fn neg(self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

#[derive(Serialize, Deserialize)]
struct MultiJson {
    n: usize,
    #[serde(rename = "D")]
    max_degree: u32,
    terms: Vec<(Exponents, String)>,
}

impl Serialize for TruncatedMultiPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MultiJson {
            n: self.vars,
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedMultiPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MultiJson::deserialize(d)?;
        let mut p = TruncatedMultiPolynomial::zero(raw.n, raw.max_degree);
        for (e, c) in raw.terms {
            if e.len() != raw.n {
                return Err(serde::de::Error::custom("exponent vector has wrong length"));
            }
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_drops_high_degree() {
        let x = TruncatedMultiPolynomial::variable(2, 3, 0);
        let y = TruncatedMultiPolynomial::variable(2, 3, 1);
        let s = &x + &y;
        let s2 = &s * &s;
        assert_eq!(s2.coeff(&[1, 1]), BigInt::from(2));
        let s4 = &s2 * &s2;
        assert!(s4.is_zero());
        let s3 = &s2 * &s;
        assert_eq!(s3.degrees(), vec![3]);
        assert_eq!(s3.coeff(&[2, 1]), BigInt::from(3));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = TruncatedMultiPolynomial::variable(2, 4, 0);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn eval_and_specialize() {
        let x = TruncatedMultiPolynomial::variable(2, 4, 0);
        let y = TruncatedMultiPolynomial::variable(2, 4, 1);
        let p = &(&x * &y) + &x;
        let v = p.eval(&[BigInt::from(3), BigInt::from(-2)]);
        assert_eq!(v, BigInt::from(-3));
        let l = p.specialize(&[-1, 2]);
        assert_eq!(l, LaurentPolynomial::from_terms([(1, 1), (-1, 1)]));
    }

    #[test]
    fn json_layout() {
        let x = TruncatedMultiPolynomial::variable(2, 2, 1);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"n":2,"D":2,"terms":[[[0,1],"1"]]}));
        let back: TruncatedMultiPolynomial = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }
}
