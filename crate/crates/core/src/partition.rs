//! Integer partitions, Frobenius coordinates and per-cell statistics.
//!
//! Partitions are stored normalized: weakly decreasing, no trailing zeros.
//! Cells are addressed 1-based as `(row, col)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from signed parts, dropping trailing zeros.
    pub fn new(parts: &[i64]) -> Result<Self> {
        for (index, &value) in parts.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing { index: index + 1 });
            }
        }
        let parts = parts
            .iter()
            .take_while(|&&p| p > 0)
            .map(|&p| p as usize)
            .collect();
        Ok(Partition { parts })
    }

    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing { index: index + 1 });
            }
        }
        Ok(Self::from_sorted(parts.iter().copied().filter(|&p| p > 0).collect()))
    }

    /// Caller guarantees `parts` is weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Size of the first row (0 for the empty partition).
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Row `i` (1-based); 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// Transposed diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Largest `k` with `λ_k ≥ k`.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let r = self.rank();
        let conj = self.conjugate();
        let alpha = (1..=r).map(|i| self.part(i) - i).collect();
        let beta = (1..=r).map(|j| conj.part(j) - j).collect();
        FrobeniusCoords { alpha, beta }
    }

    pub fn from_frobenius(coords: &FrobeniusCoords) -> Partition {
        let r = coords.rank();
        if r == 0 {
            return Partition::empty();
        }
        // Rows below the diagonal are read off the leg lengths: row i > r has
        // #{j : β_j ≥ i - j} boxes.
        let length = coords.beta[0] + 1;
        let parts = (1..=length)
            .map(|i| {
                if i <= r {
                    coords.alpha[i - 1] + i
                } else {
                    (1..=r).filter(|&j| coords.beta[j - 1] + j >= i).count()
                }
            })
            .collect();
        Partition::from_sorted(parts)
    }

    /// `a + λ`, applied to the stored parts only.
    pub fn add_scalar(&self, a: usize) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|&p| p + a).collect())
    }

    /// `λ = (α | α + z)` in Frobenius coordinates.
    pub fn is_z_asymmetric(&self, z: i64) -> bool {
        let f = self.frobenius();
        f.alpha
            .iter()
            .zip(&f.beta)
            .all(|(&a, &b)| b as i64 == a as i64 + z)
    }

    /// Iterates cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Content `col - row` of every cell, row-major.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// Hook lengths, row-major.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| self.part(i) - j + conj.part(j) - i + 1)
            .collect()
    }

    pub fn cell_stats(&self) -> Vec<CellStats> {
        let conj = self.conjugate();
        self.cells()
            .map(|(row, col)| {
                let arm = self.part(row) - col;
                let leg = conj.part(col) - row;
                CellStats {
                    row,
                    col,
                    content: col as i64 - row as i64,
                    hook: arm + leg + 1,
                    arm,
                    leg,
                }
            })
            .collect()
    }

    /// `k(λ) = Σ (i-1) λ_i`, cross-checked against `Σ C(λ'_j, 2)`.
    pub fn k_statistic(&self) -> i64 {
        let by_rows: usize = self.parts.iter().enumerate().map(|(i, &p)| i * p).sum();
        let by_cols: usize = self
            .conjugate()
            .parts
            .iter()
            .map(|&c| c * (c.saturating_sub(1)) / 2)
            .sum();
        assert_eq!(by_rows, by_cols, "k statistic mismatch for {self}");
        by_rows as i64
    }

    /// Sum of contents, cross-checked against `k(λ') - k(λ)`.
    pub fn content_sum(&self) -> i64 {
        let direct: i64 = self.contents().iter().sum();
        assert_eq!(
            direct,
            self.conjugate().k_statistic() - self.k_statistic(),
            "content sum mismatch for {self}"
        );
        direct
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Frobenius coordinates `(α | β)`: two strictly decreasing sequences of
/// nonnegative integers of common length (the rank).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCoords")]
pub struct FrobeniusCoords {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCoords {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl TryFrom<RawCoords> for FrobeniusCoords {
    type Error = Error;
    fn try_from(raw: RawCoords) -> Result<Self> {
        FrobeniusCoords::new(raw.alpha, raw.beta)
    }
}

fn is_strict(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] > w[1])
}

impl FrobeniusCoords {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::LengthMismatch {
                alpha: alpha.len(),
                beta: beta.len(),
            });
        }
        if !is_strict(&alpha) || !is_strict(&beta) {
            return Err(Error::NonStrictCoordinates);
        }
        Ok(FrobeniusCoords { alpha, beta })
    }

    pub fn empty() -> Self {
        FrobeniusCoords {
            alpha: Vec::new(),
            beta: Vec::new(),
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    pub fn weight(&self) -> usize {
        self.alpha.iter().sum::<usize>() + self.beta.iter().sum::<usize>() + self.rank()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_frobenius(self)
    }

    /// `(β | α)`, the coordinates of the conjugate.
    pub fn transpose(&self) -> Self {
        FrobeniusCoords {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// `(α + m | β)`.
    pub fn shift_arms(&self, m: usize) -> Self {
        FrobeniusCoords {
            alpha: self.alpha.iter().map(|a| a + m).collect(),
            beta: self.beta.clone(),
        }
    }

    /// `(α | β + m)`.
    pub fn shift_legs(&self, m: usize) -> Self {
        self.transpose().shift_arms(m).transpose()
    }

    /// `(α - m | β)`, if every arm coordinate is at least `m`.
    pub fn unshift_arms(&self, m: usize) -> Option<Self> {
        if self.alpha.iter().any(|&a| a < m) {
            return None;
        }
        Some(FrobeniusCoords {
            alpha: self.alpha.iter().map(|a| a - m).collect(),
            beta: self.beta.clone(),
        })
    }

    /// `(α | β - m)`, if every leg coordinate is at least `m`.
    pub fn unshift_legs(&self, m: usize) -> Option<Self> {
        self.transpose().unshift_arms(m).map(|c| c.transpose())
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", join(&self.alpha), join(&self.beta))
    }
}

/// Statistics of one cell of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    pub content: i64,
    pub hook: usize,
    /// Cells strictly to the right.
    pub arm: usize,
    /// Cells strictly below.
    pub leg: usize,
}

/// All partitions of `weight`, optionally with at most `max_length` parts,
/// in decreasing lexicographic order.
pub fn enumerate_partitions(weight: usize, max_length: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(
        weight,
        weight,
        max_length.unwrap_or(usize::MAX),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All partitions with weight at most `max_weight`, by increasing weight.
pub fn partitions_up_to(max_weight: usize) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(|w| enumerate_partitions(w, None))
        .collect()
}

/// Strictly decreasing sequences of nonnegative integers of the given length
/// whose entries sum to `total`, in decreasing lexicographic order.
pub fn strict_sequences(total: usize, length: usize) -> Vec<Vec<usize>> {
    fn go(
        remaining: usize,
        slots: usize,
        upper: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let tail = slots - 1;
        let tail_min = tail * tail.saturating_sub(1) / 2;
        for x in (tail..=upper.min(remaining)).rev() {
            // Largest tail below x is (x-1) + ... + (x-tail).
            let tail_max = tail * x - tail * (tail + 1) / 2;
            if remaining - x > tail_max {
                break;
            }
            if remaining - x < tail_min {
                continue;
            }
            prefix.push(x);
            go(remaining - x, tail, x.saturating_sub(1), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, length, total, &mut Vec::new(), &mut out);
    out
}

/// Every Frobenius coordinate pair whose partition has weight at most
/// `max_weight`, by increasing weight, then rank, then `α`, then `β`.
pub fn frobenius_up_to(max_weight: usize) -> Vec<FrobeniusCoords> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for r in 0..=w {
            if r * r > w {
                break;
            }
            let rest = w - r;
            for sa in 0..=rest {
                for alpha in strict_sequences(sa, r) {
                    for beta in strict_sequences(rest - sa, r) {
                        out.push(FrobeniusCoords {
                            alpha: alpha.clone(),
                            beta,
                        });
                    }
                }
            }
        }
    }
    out
}

/// The z-asymmetric partitions of `weight`, built from strict `α` with
/// `Σ (2α_i + z + 1) = weight`. Order is decreasing lexicographic.
pub fn enumerate_z_asymmetric(weight: usize, z: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let w = weight as i64;
    for r in 0..=weight {
        // Σ(2α_i + z + 1) = 2Σα + r(z+1)
        let base = r as i64 * (z + 1);
        let twice = w - base;
        if twice < 0 {
            if z + 1 >= 0 {
                break;
            }
            continue;
        }
        if twice % 2 != 0 {
            continue;
        }
        let sum_alpha = (twice / 2) as usize;
        if r > 0 && r * (r - 1) / 2 > sum_alpha {
            if z + 1 >= 0 {
                break;
            }
            continue;
        }
        for alpha in strict_sequences(sum_alpha, r) {
            let beta: Option<Vec<usize>> = alpha
                .iter()
                .map(|&a| usize::try_from(a as i64 + z).ok())
                .collect();
            if let Some(beta) = beta {
                let coords = FrobeniusCoords {
                    alpha,
                    beta,
                };
                out.push(coords.to_partition());
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}
