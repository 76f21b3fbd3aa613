//! Semistandard tableaux, Schur polynomials and their specializations.
//!
//! Every quantity here has two independent routes: a closed form (hook
//! content formula, bialternant, principal specialization product) and a
//! sum over explicitly enumerated tableaux.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::multivariate::TruncatedMultiPolynomial;
use crate::partition::Partition;
use crate::DEFAULT_CAP;

/// A semistandard tableau: rows weakly increase, columns strictly increase,
/// entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ssyt {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl Ssyt {
    /// Occurrences of each value `1..=n`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0u32; n];
        for &v in self.rows.iter().flatten() {
            w[v - 1] += 1;
        }
        w
    }

    pub fn is_valid(&self, n: usize) -> bool {
        let shape_ok = self.rows.len() == self.shape.length()
            && self
                .rows
                .iter()
                .zip(self.shape.parts())
                .all(|(r, &p)| r.len() == p);
        if !shape_ok {
            return false;
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n {
                    return false;
                }
                if j > 0 && row[j - 1] > v {
                    return false;
                }
                if i > 0 && self.rows[i - 1][j] >= v {
                    return false;
                }
            }
        }
        true
    }
}

/// Hook-content dimension `∏ (n + c(u)) / h(u)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension(BigInt);

impl Dimension {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// Calls `visit` on every SSYT of shape `lambda` with entries at most `n`,
/// in row-major lexicographic order. Stops with an error once more than
/// `cap` tableaux have been produced.
pub fn for_each_ssyt<F: FnMut(&[Vec<usize>])>(
    lambda: &Partition,
    n: usize,
    cap: u64,
    mut visit: F,
) -> Result<u64> {
    if lambda.length() > n {
        return Ok(0);
    }
    let cells: Vec<(usize, usize)> = lambda.cells().map(|(r, c)| (r - 1, c - 1)).collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut count = 0u64;

    fn go<F: FnMut(&[Vec<usize>])>(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        n: usize,
        cap: u64,
        count: &mut u64,
        visit: &mut F,
    ) -> Result<()> {
        if k == cells.len() {
            *count += 1;
            if *count > cap {
                return Err(Error::EnumerationTooLarge {
                    what: "semistandard tableaux",
                    estimate: format!("more than {cap}"),
                    cap,
                });
            }
            visit(rows);
            return Ok(());
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        // Column below needs room for strictly larger entries.
        let below = rows.iter().skip(i + 1).take_while(|r| r.len() > j).count();
        let hi = n.saturating_sub(below);
        for v in lo..=hi {
            rows[i][j] = v;
            go(k + 1, cells, rows, n, cap, count, visit)?;
        }
        Ok(())
    }

    go(0, &cells, &mut rows, n, cap, &mut count, &mut visit)?;
    Ok(count)
}

pub fn enumerate_ssyt(lambda: &Partition, n: usize, cap: u64) -> Result<Vec<Ssyt>> {
    let mut out = Vec::new();
    for_each_ssyt(lambda, n, cap, |rows| {
        out.push(Ssyt {
            shape: lambda.clone(),
            rows: rows.to_vec(),
        })
    })?;
    Ok(out)
}

pub fn count_ssyt(lambda: &Partition, n: usize, cap: u64) -> Result<u64> {
    for_each_ssyt(lambda, n, cap, |_| {})
}

/// `∏ (n + c(u)) / ∏ h(u)` for any integer `n`; zero once `n < ℓ(π)`.
pub fn hook_content_value(pi: &Partition, n: i64) -> Result<BigInt> {
    let numerator: BigInt = pi
        .contents()
        .iter()
        .map(|&c| BigInt::from(n + c))
        .product();
    let hooks: BigInt = pi.hooks().iter().map(|&h| BigInt::from(h)).product();
    let (q, r) = numerator.div_rem(&hooks);
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

pub fn dim_hook_content(pi: &Partition, n: usize) -> Result<Dimension> {
    if pi.length() > n {
        return Err(Error::LengthExceedsN {
            length: pi.length(),
            n,
        });
    }
    hook_content_value(pi, n as i64).map(Dimension)
}

/// `s_λ(x_1..x_n)` as the sum of `x^{weight(T)}` over SSYT, truncated at
/// total degree `max_degree`.
pub fn schur_truncated(
    lambda: &Partition,
    n: usize,
    max_degree: u32,
    cap: u64,
) -> Result<TruncatedMultiPolynomial> {
    let mut out = TruncatedMultiPolynomial::zero(n, max_degree);
    if lambda.weight() as u64 > max_degree as u64 {
        return Ok(out);
    }
    let shape = lambda.clone();
    for_each_ssyt(lambda, n, cap, |rows| {
        let t = Ssyt {
            shape: shape.clone(),
            rows: rows.to_vec(),
        };
        out.add_term(t.weight(n), BigInt::one());
    })?;
    Ok(out)
}

/// Fraction-free Gaussian elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(x_i^{λ_j + n - j}) / det(x_i^{n - j})` at distinct integer points.
pub fn schur_bialternant_eval(lambda: &Partition, points: &[i64]) -> Result<BigInt> {
    let n = points.len();
    for (i, &x) in points.iter().enumerate() {
        if points[..i].contains(&x) {
            return Err(Error::RepeatedPoint(x));
        }
    }
    if lambda.length() > n {
        return Ok(BigInt::zero());
    }
    let power = |x: i64, e: usize| BigInt::from(x).pow(e as u32);
    let numerator: Vec<Vec<BigInt>> = points
        .iter()
        .map(|&x| (1..=n).map(|j| power(x, lambda.part(j) + n - j)).collect())
        .collect();
    let vandermonde: Vec<Vec<BigInt>> = points
        .iter()
        .map(|&x| (1..=n).map(|j| power(x, n - j)).collect())
        .collect();
    let den = determinant(&vandermonde);
    debug_assert_eq!(den, vandermonde_product(points));
    let (q, r) = determinant(&numerator).div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde_product(points: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            acc *= BigInt::from(points[i] - points[j]);
        }
    }
    acc
}

/// Evaluates the tableau sum at integer points.
pub fn schur_ssyt_eval(lambda: &Partition, points: &[i64], cap: u64) -> Result<BigInt> {
    let s = schur_truncated(lambda, points.len(), lambda.weight() as u32, cap)?;
    let pts: Vec<BigInt> = points.iter().map(|&x| BigInt::from(x)).collect();
    Ok(s.eval(&pts))
}

/// `s_λ(1, q, ..., q^{n-1}) = q^{k(λ)} ∏ [n + c(u)] / [h(u)]`.
pub fn principal_specialization(lambda: &Partition, n: usize) -> Result<LaurentPolynomial> {
    if lambda.length() > n {
        return Err(Error::LengthExceedsN {
            length: lambda.length(),
            n,
        });
    }
    let numerator: LaurentPolynomial = lambda
        .contents()
        .iter()
        .map(|&c| LaurentPolynomial::q_integer(n as i64 + c))
        .product();
    let denominator: LaurentPolynomial = lambda
        .hooks()
        .iter()
        .map(|&h| LaurentPolynomial::q_integer(h as i64))
        .product();
    Ok(numerator
        .exact_div(&denominator)?
        .shift(lambda.k_statistic()))
}

/// `s_λ(1, q, ..., q^{n-1})` by substituting into the tableau sum.
pub fn principal_specialization_oracle(
    lambda: &Partition,
    n: usize,
    cap: u64,
) -> Result<LaurentPolynomial> {
    let exponents: Vec<i64> = (0..n as i64).collect();
    Ok(schur_truncated(lambda, n, lambda.weight() as u32, cap)?.specialize(&exponents))
}

/// `s_λ(q^{s}, q^{s+2}, ..., q^{s+2(count-1)})`, from the tableau sum.
pub fn stepped_specialization(
    lambda: &Partition,
    start: i64,
    count: usize,
    cap: u64,
) -> Result<LaurentPolynomial> {
    let exponents: Vec<i64> = (0..count as i64).map(|i| start + 2 * i).collect();
    Ok(schur_truncated(lambda, count, lambda.weight() as u32, cap)?.specialize(&exponents))
}

/// The same specialization as `q^{s|λ|}` times the principal
/// specialization in `q^2`.
pub fn stepped_specialization_by_product(
    lambda: &Partition,
    start: i64,
    count: usize,
) -> Result<LaurentPolynomial> {
    if lambda.length() > count {
        return Ok(LaurentPolynomial::zero());
    }
    Ok(principal_specialization(lambda, count)?
        .substitute_power(2)
        .shift(start * lambda.weight() as i64))
}

/// Both routes; errors if they disagree.
pub fn stepped_specialization_checked(
    lambda: &Partition,
    start: i64,
    count: usize,
) -> Result<LaurentPolynomial> {
    let by_tableaux = stepped_specialization(lambda, start, count, DEFAULT_CAP)?;
    let by_product = stepped_specialization_by_product(lambda, start, count)?;
    if by_tableaux != by_product {
        return Err(Error::PreconditionViolated(format!(
            "stepped specialization routes disagree for {lambda}: {by_tableaux} vs {by_product}"
        )));
    }
    Ok(by_product)
}
