//! Content tabloids, hook tabloids and the diagonal-shift bijection between
//! content tabloids of `(α + m | β)` and of `(α | β + m)`.
//!
//! A content tabloid of shape `λ` with bound `n` puts an integer in
//! `[1 - c(b), n]` into each cell `b`; a hook tabloid puts one in
//! `[-a(b), ℓ(b)]`. The norm of a tabloid is the sum of its entries.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::content::{cell_of, DiagonalLabel};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::partition::{FrobeniusCoords, Partition};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TabloidKind {
    /// Entries bounded above by `n`.
    Content { n: i64 },
    Hook,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    shape: Partition,
    kind: TabloidKind,
    rows: Vec<Vec<i64>>,
}

/// Inclusive entry range of every cell, row-major.
pub fn cell_bounds(shape: &Partition, kind: TabloidKind) -> Vec<(i64, i64)> {
    match kind {
        TabloidKind::Content { n } => shape.contents().into_iter().map(|c| (1 - c, n)).collect(),
        TabloidKind::Hook => shape
            .cell_stats()
            .into_iter()
            .map(|s| (-(s.arm as i64), s.leg as i64))
            .collect(),
    }
}

impl Tabloid {
    pub fn new(shape: Partition, kind: TabloidKind, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.len() != shape.length()
            || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p)
        {
            return Err(Error::InvalidTabloid(format!(
                "row lengths do not match shape {shape}"
            )));
        }
        let bounds = cell_bounds(&shape, kind);
        for ((row, col), ((lo, hi), &v)) in shape
            .cells()
            .zip(bounds.iter().zip(rows.iter().flatten()))
        {
            if v < *lo || v > *hi {
                return Err(Error::InvalidTabloid(format!(
                    "entry {v} at ({row},{col}) outside [{lo},{hi}]"
                )));
            }
        }
        Ok(Tabloid { shape, kind, rows })
    }

    /// Builds a tabloid whose shape is read from the row lengths.
    pub fn from_rows(kind: TabloidKind, rows: Vec<Vec<i64>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if lengths.contains(&0) {
            return Err(Error::InvalidTabloid("empty row".into()));
        }
        let shape = Partition::from_parts(&lengths)?;
        Self::new(shape, kind, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn kind(&self) -> TabloidKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Option<i64> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn entry_at(&self, label: DiagonalLabel) -> Result<i64> {
        let (r, c) = cell_of(&self.shape, label)?;
        Ok(self.rows[r - 1][c - 1])
    }

    pub fn norm(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    /// The filling with every cell at its lower bound.
    pub fn minimal(shape: &Partition, kind: TabloidKind) -> Result<Self> {
        let mut values = cell_bounds(shape, kind).into_iter().map(|(lo, _)| lo);
        let rows = shape
            .parts()
            .iter()
            .map(|&p| values.by_ref().take(p).collect())
            .collect();
        Self::new(shape.clone(), kind, rows)
    }
}

impl fmt::Display for Tabloid {
    /// Aligned grid, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TabloidJson {
    shape: Partition,
    kind: String,
    n: Option<i64>,
    rows: Vec<Vec<i64>>,
}

impl Serialize for Tabloid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, n) = match self.kind {
            TabloidKind::Content { n } => ("content", Some(n)),
            TabloidKind::Hook => ("hook", None),
        };
        TabloidJson {
            shape: self.shape.clone(),
            kind: kind.into(),
            n,
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tabloid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TabloidJson::deserialize(d)?;
        let kind = match (raw.kind.as_str(), raw.n) {
            ("content", Some(n)) => TabloidKind::Content { n },
            ("content", None) => return Err(D::Error::custom("content tabloid needs n")),
            ("hook", _) => TabloidKind::Hook,
            (other, _) => return Err(D::Error::custom(format!("unknown kind {other:?}"))),
        };
        Tabloid::new(raw.shape, kind, raw.rows).map_err(D::Error::custom)
    }
}

/// `∏ (n + c(u))`, or zero if some factor is not positive.
pub fn count_content_tabloids(lambda: &Partition, n: i64) -> BigInt {
    let factors: Vec<i64> = lambda.contents().iter().map(|&c| n + c).collect();
    if factors.iter().any(|&f| f <= 0) {
        return BigInt::zero();
    }
    factors.into_iter().map(BigInt::from).product()
}

/// `∏ h(u)`.
pub fn count_hook_tabloids(lambda: &Partition) -> BigInt {
    lambda.hooks().into_iter().map(BigInt::from).product()
}

/// Odometer over all fillings within the per-cell bounds; the last cell in
/// row-major order moves fastest.
pub struct TabloidIter {
    shape: Partition,
    kind: TabloidKind,
    bounds: Vec<(i64, i64)>,
    current: Option<Vec<i64>>,
}

impl TabloidIter {
    fn new(shape: Partition, kind: TabloidKind) -> Self {
        let bounds = cell_bounds(&shape, kind);
        let current = if bounds.iter().all(|(lo, hi)| lo <= hi) {
            Some(bounds.iter().map(|&(lo, _)| lo).collect())
        } else {
            None
        };
        TabloidIter {
            shape,
            kind,
            bounds,
            current,
        }
    }
}

impl Iterator for TabloidIter {
    type Item = Tabloid;

    fn next(&mut self) -> Option<Tabloid> {
        let flat = self.current.as_mut()?;
        let mut values = flat.iter().copied();
        let rows = self
            .shape
            .parts()
            .iter()
            .map(|&p| values.by_ref().take(p).collect())
            .collect();
        let out = Tabloid {
            shape: self.shape.clone(),
            kind: self.kind,
            rows,
        };
        let mut k = flat.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            if flat[k] < self.bounds[k].1 {
                flat[k] += 1;
                for (v, &(lo, _)) in flat[k + 1..].iter_mut().zip(&self.bounds[k + 1..]) {
                    *v = lo;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Number of fillings the odometer would visit.
pub fn enumeration_size(shape: &Partition, kind: TabloidKind) -> BigInt {
    cell_bounds(shape, kind)
        .into_iter()
        .map(|(lo, hi)| BigInt::from((hi - lo + 1).max(0)))
        .product()
}

/// Streams every tabloid of the given shape and kind.
pub fn enumerate_tabloids(shape: &Partition, kind: TabloidKind, cap: u64) -> Result<TabloidIter> {
    let size = enumeration_size(shape, kind);
    if size > BigInt::from(cap) {
        return Err(Error::EnumerationTooLarge {
            what: "tabloids",
            estimate: size.to_string(),
            cap,
        });
    }
    Ok(TabloidIter::new(shape.clone(), kind))
}

/// `Σ_T q^{n(T)}` over content tabloids, as `∏_u (q^{1-c(u)} + ... + q^n)`.
pub fn content_gf(lambda: &Partition, n: i64) -> LaurentPolynomial {
    if lambda.contents().iter().any(|&c| n + c < 1) {
        return LaurentPolynomial::zero();
    }
    lambda
        .contents()
        .iter()
        .map(|&c| LaurentPolynomial::q_range(1 - c, n))
        .product()
}

/// The same generating function summed over an explicit enumeration.
pub fn content_gf_by_enumeration(lambda: &Partition, n: i64, cap: u64) -> Result<LaurentPolynomial> {
    let mut gf = LaurentPolynomial::zero();
    for t in enumerate_tabloids(lambda, TabloidKind::Content { n }, cap)? {
        gf.add_term(t.norm(), BigInt::one());
    }
    Ok(gf)
}

fn content_bound(t: &Tabloid) -> Result<i64> {
    match t.kind {
        TabloidKind::Content { n } => Ok(n),
        TabloidKind::Hook => Err(Error::InvalidTabloid(
            "the diagonal shift acts on content tabloids".into(),
        )),
    }
}

/// Maps a content tabloid of shape `(α + m | β)` with bound `n` to one of
/// shape `(α | β + m)` with bound `n + m`. The entry at diagonal label
/// `(i, a)` of the image is the entry of `t` at `(i, a + m)` plus `m`.
pub fn phi(t: &Tabloid, m: usize) -> Result<Tabloid> {
    let n = content_bound(t)?;
    let source = t.shape.frobenius();
    let base = source.unshift_arms(m).ok_or_else(|| {
        Error::ShapeNotOfForm(format!(
            "{} has an arm coordinate below {m}",
            t.shape
        ))
    })?;
    let target = base.shift_legs(m).to_partition();
    let rows = relabel(t, &target, m as i64, m as i64)?;
    Tabloid::new(target, TabloidKind::Content { n: n + m as i64 }, rows)
}

/// Inverse of [`phi`]: from shape `(α | β + m)` with bound `n + m` back to
/// `(α + m | β)` with bound `n`.
pub fn phi_inverse(s: &Tabloid, m: usize) -> Result<Tabloid> {
    let n = content_bound(s)?;
    let source = s.shape.frobenius();
    let base = source.unshift_legs(m).ok_or_else(|| {
        Error::ShapeNotOfForm(format!(
            "{} has a leg coordinate below {m}",
            s.shape
        ))
    })?;
    let target = base.shift_arms(m).to_partition();
    let rows = relabel(s, &target, -(m as i64), -(m as i64))?;
    Tabloid::new(target, TabloidKind::Content { n: n - m as i64 }, rows)
}

/// Fills `target` by reading `t` at content offset `offset` and adding `add`.
fn relabel(t: &Tabloid, target: &Partition, offset: i64, add: i64) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<Vec<i64>> = target.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    for (r, c) in target.cells() {
        let label = DiagonalLabel {
            index: r.min(c),
            content: c as i64 - r as i64 + offset,
        };
        rows[r - 1].push(t.entry_at(label)? + add);
    }
    Ok(rows)
}

/// Checks that [`phi`] is a norm-shifting bijection between the content
/// tabloids of `(α + m | β)` (bound `n`) and `(α | β + m)` (bound `n + m`).
///
/// The norm moves by `m` times the number of cells. When both sides fit
/// under `cap` the check is exhaustive; the generating-function identity is
/// checked in every case.
pub fn verify_phi(
    coords: &FrobeniusCoords,
    m: usize,
    n: i64,
    cap: u64,
) -> Result<VerificationReport> {
    let domain = coords.shift_arms(m).to_partition();
    let codomain = coords.shift_legs(m).to_partition();
    if domain.length() as i64 > n {
        return Err(Error::PreconditionViolated(format!(
            "{domain} has more than {n} rows"
        )));
    }
    let shift = (m * domain.weight()) as i64;
    let dom_kind = TabloidKind::Content { n };
    let cod_kind = TabloidKind::Content { n: n + m as i64 };
    let exhaustive = enumeration_size(&domain, dom_kind) <= BigInt::from(cap)
        && enumeration_size(&codomain, cod_kind) <= BigInt::from(cap);

    let params = json!({
        "alpha": coords.alpha(),
        "beta": coords.beta(),
        "m": m,
        "n": n,
        "domain": domain,
        "codomain": codomain,
        "mode": if exhaustive { "enumeration" } else { "closed-form" },
    });
    let lhs = content_gf(&codomain, n + m as i64);
    let rhs = content_gf(&domain, n).shift(shift);
    let mut report = VerificationReport::new("bijection", params)
        .sides(&lhs, &rhs)
        .require(lhs == rhs, || {
            json!({"codomain_gf": lhs.to_string(), "shifted_domain_gf": rhs.to_string()})
        });

    if exhaustive {
        let mut image: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut size = 0u64;
        for t in enumerate_tabloids(&domain, dom_kind, cap)? {
            size += 1;
            let s = match phi(&t, m) {
                Ok(s) => s,
                Err(e) => {
                    report = report.fail(json!({"tabloid": t, "error": e.to_string()}));
                    break;
                }
            };
            if s.norm() != t.norm() + shift {
                report = report.fail(json!({"tabloid": t, "image": s, "expected_shift": shift}));
                break;
            }
            if phi_inverse(&s, m).ok().as_ref() != Some(&t) {
                report = report.fail(json!({"tabloid": t, "image": s, "error": "not inverted"}));
                break;
            }
            if !image.insert(s.rows.clone()) {
                report = report.fail(json!({"tabloid": t, "image": s, "error": "collision"}));
                break;
            }
        }
        if report.passed() {
            for s in enumerate_tabloids(&codomain, cod_kind, cap)? {
                if !image.contains(&s.rows) {
                    report = report.fail(json!({"unreached": s}));
                    break;
                }
            }
        }
        report = report.domain_size(size);
    }
    Ok(report)
}
