//! Content sequences and the diagonal labelling of cells.
//!
//! A content sequence records how many boxes lie on each diagonal of a
//! Young diagram. It is unimodal with its peak (the rank) at content 0, and
//! determines the partition uniquely.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{FrobeniusCoords, Partition};

/// Box counts per content, with zero counts omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ContentSequence {
    counts: BTreeMap<i64, usize>,
}

impl ContentSequence {
    /// Validates unimodality and the coverage condition.
    pub fn new(counts: BTreeMap<i64, usize>) -> Result<Self> {
        let counts: BTreeMap<i64, usize> = counts.into_iter().filter(|&(_, x)| x > 0).collect();
        let seq = ContentSequence { counts };
        seq.validate()?;
        Ok(seq)
    }

    /// Reads a window of values; `origin` is the index of content 0.
    pub fn from_window(values: &[usize], origin: usize) -> Result<Self> {
        if origin >= values.len() && !values.is_empty() {
            return Err(Error::NotAContentSequence(format!(
                "origin index {origin} outside window of length {}",
                values.len()
            )));
        }
        let counts = values
            .iter()
            .enumerate()
            .map(|(i, &x)| (i as i64 - origin as i64, x))
            .collect();
        Self::new(counts)
    }

    fn validate(&self) -> Result<()> {
        let peak = self.peak();
        let (lo, hi) = match (self.counts.keys().next(), self.counts.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo.min(0), hi.max(0)),
            _ => return Ok(()),
        };
        for a in lo..0 {
            if self.get(a) > self.get(a + 1) {
                return Err(Error::NotAContentSequence(format!(
                    "x_{a} > x_{} on the negative side",
                    a + 1
                )));
            }
        }
        for a in 0..hi {
            if self.get(a) < self.get(a + 1) {
                return Err(Error::NotAContentSequence(format!(
                    "x_{a} < x_{} on the positive side",
                    a + 1
                )));
            }
        }
        for v in 1..peak {
            if !(lo..0).any(|a| self.get(a) == v) {
                return Err(Error::NotAContentSequence(format!(
                    "value {v} missing left of the origin"
                )));
            }
            if !(1..=hi).any(|a| self.get(a) == v) {
                return Err(Error::NotAContentSequence(format!(
                    "value {v} missing right of the origin"
                )));
            }
        }
        Ok(())
    }

    pub fn of(lambda: &Partition) -> Self {
        let mut counts = BTreeMap::new();
        for c in lambda.contents() {
            *counts.entry(c).or_insert(0) += 1;
        }
        ContentSequence { counts }
    }

    /// `x_a`; zero outside the support.
    pub fn get(&self, a: i64) -> usize {
        self.counts.get(&a).copied().unwrap_or(0)
    }

    pub fn peak(&self) -> usize {
        self.get(0)
    }

    /// Smallest and largest content with a nonzero count.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.counts.keys().next()?, *self.counts.keys().next_back()?))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&a, &x)| (a, x))
    }

    /// The sequence translated `m` steps to the right: `y_a = x_{a-m}`.
    pub fn shifted(&self, m: i64) -> Self {
        ContentSequence {
            counts: self.counts.iter().map(|(&a, &x)| (a + m, x)).collect(),
        }
    }

    /// Reflection about the origin: `y_a = x_{-a}`.
    pub fn reflected(&self) -> Self {
        ContentSequence {
            counts: self.counts.iter().map(|(&a, &x)| (-a, x)).collect(),
        }
    }

    /// The unique partition with this content sequence.
    ///
    /// Diagonal `a ≥ 0` holds `#{i : α_i ≥ a}` boxes, so `α_i` is the last
    /// content at which the count is still at least `i`; legs likewise.
    pub fn to_partition(&self) -> Partition {
        let r = self.peak();
        let reach = |i: usize, dir: i64| -> usize {
            let mut a = 0usize;
            while self.get(dir * (a as i64 + 1)) >= i {
                a += 1;
            }
            a
        };
        let alpha = (1..=r).map(|i| reach(i, 1)).collect();
        let beta = (1..=r).map(|i| reach(i, -1)).collect();
        FrobeniusCoords::new(alpha, beta)
            .expect("validated content sequence yields strict coordinates")
            .to_partition()
    }
}

#[derive(Serialize, Deserialize)]
struct ContentSequenceJson {
    counts: Vec<(i64, usize)>,
    peak_at: i64,
}

impl Serialize for ContentSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ContentSequenceJson {
            counts: self.iter().collect(),
            peak_at: 0,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ContentSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ContentSequenceJson::deserialize(d)?;
        // Counts are keyed relative to the peak position.
        let counts = raw
            .counts
            .into_iter()
            .map(|(a, x)| (a - raw.peak_at, x))
            .collect();
        ContentSequence::new(counts).map_err(serde::de::Error::custom)
    }
}

pub fn content_sequence(lambda: &Partition) -> ContentSequence {
    ContentSequence::of(lambda)
}

pub fn partition_from_content_sequence(seq: &ContentSequence) -> Partition {
    seq.to_partition()
}

/// Whether `λ = (α + m | α)` for a strict `α`, read from the content
/// sequence as `x_a = x_{m-a}` for all `a`.
pub fn is_shifted_form(lambda: &Partition, m: usize) -> bool {
    let x = ContentSequence::of(lambda);
    let mirrored = x.reflected().shifted(m as i64);
    let by_sequence = x == mirrored;
    debug_assert_eq!(by_sequence, lambda.conjugate().is_z_asymmetric(m as i64));
    by_sequence
}

/// Position `(i, a)` of a cell: `a` is its content, `i` its index along that
/// diagonal counted from the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagonalLabel {
    pub index: usize,
    pub content: i64,
}

/// Label of cell `(row, col)`; the cell must lie in the diagram.
pub fn label_of(lambda: &Partition, row: usize, col: usize) -> Result<DiagonalLabel> {
    if !lambda.contains(row, col) {
        return Err(Error::CellOutOfShape((row as i64, col as i64)));
    }
    Ok(DiagonalLabel {
        index: row.min(col),
        content: col as i64 - row as i64,
    })
}

/// Cell `(row, col)` carrying the label `(i, a)`.
pub fn cell_of(lambda: &Partition, label: DiagonalLabel) -> Result<(usize, usize)> {
    let i = label.index as i64;
    let a = label.content;
    let row = i + (-a).max(0);
    let col = i + a.max(0);
    if i < 1 || !lambda.contains(row as usize, col as usize) {
        return Err(Error::CellOutOfShape((row, col)));
    }
    Ok((row as usize, col as usize))
}

/// Labels of all cells in row-major order.
pub fn diagonal_labels(lambda: &Partition) -> Vec<DiagonalLabel> {
    lambda
        .cells()
        .map(|(r, c)| DiagonalLabel {
            index: r.min(c),
            content: c as i64 - r as i64,
        })
        .collect()
}
