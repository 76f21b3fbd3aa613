//! One verifier per identity, each returning a [`VerificationReport`], plus
//! deterministic sweeps over parameter ranges.
//!
//! Verifiers never assume the identity they check: both sides are computed
//! from the primitive operations, and closed forms are compared against
//! enumeration wherever it is affordable.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::multivariate::TruncatedMultiPolynomial;
use crate::partition::{
    enumerate_z_asymmetric, frobenius_up_to, partitions_up_to, strict_sequences,
    FrobeniusCoords, Partition,
};
use crate::report::VerificationReport;
use crate::schur::{
    count_ssyt, dim_hook_content, hook_content_value, principal_specialization,
    principal_specialization_oracle, schur_bialternant_eval, schur_ssyt_eval, schur_truncated,
    stepped_specialization, stepped_specialization_by_product,
};
use crate::tabloid::{
    content_gf, content_gf_by_enumeration, count_hook_tabloids, enumeration_size, verify_phi,
    TabloidKind,
};

/// Enumeration budget for the optional brute-force cross-checks.
const CROSS_CHECK_CAP: u64 = 200_000;

/// Which of the two product identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LittlewoodForm {
    /// `∏_{i ≤ j ≤ n} (1 - x_i x_j) = Σ (-1)^{|λ|/2} s_λ(x_1..x_n)`.
    WithDiagonal,
    /// `∏_{i < j ≤ n+1} (1 - x_i x_j) = Σ (-1)^{|λ|/2} s_{λ'}(x_1..x_{n+1})`.
    OffDiagonal,
}

/// Both sides of a Littlewood product identity up to total degree `degree`.
/// The sum runs over `λ = (α + 1 | α)` with `ℓ(λ) ≤ n`. With
/// `signed = false` the sign is dropped, which must break the identity.
pub fn littlewood_report(
    form: LittlewoodForm,
    n: usize,
    degree: u32,
    signed: bool,
) -> Result<VerificationReport> {
    let vars = match form {
        LittlewoodForm::WithDiagonal => n,
        LittlewoodForm::OffDiagonal => n + 1,
    };
    let mut lhs = TruncatedMultiPolynomial::one(vars, degree);
    for i in 0..vars {
        let start = match form {
            LittlewoodForm::WithDiagonal => i,
            LittlewoodForm::OffDiagonal => i + 1,
        };
        for j in start..vars {
            let xi = TruncatedMultiPolynomial::variable(vars, degree, i);
            let xj = TruncatedMultiPolynomial::variable(vars, degree, j);
            let factor = &TruncatedMultiPolynomial::one(vars, degree) - &(&xi * &xj);
            lhs = &lhs * &factor;
        }
    }

    let mut rhs = TruncatedMultiPolynomial::zero(vars, degree);
    let mut shapes = Vec::new();
    for w in (0..=degree as usize).step_by(2) {
        for lambda in enumerate_z_asymmetric(w, -1) {
            if lambda.length() > n {
                continue;
            }
            let shape = match form {
                LittlewoodForm::WithDiagonal => lambda.clone(),
                LittlewoodForm::OffDiagonal => lambda.conjugate(),
            };
            let s = schur_truncated(&shape, vars, degree, crate::DEFAULT_CAP)?;
            let sign = if signed && (w / 2) % 2 == 1 { -1 } else { 1 };
            rhs = &rhs + &s.scale(&BigInt::from(sign));
            shapes.push(lambda);
        }
    }

    let claim = match form {
        LittlewoodForm::WithDiagonal => "littlewood1",
        LittlewoodForm::OffDiagonal => "littlewood2",
    };
    let params = json!({"n": n, "D": degree, "signed": signed, "shapes": shapes});
    let lhs_json = serde_json::to_string(&lhs).expect("polynomial serializes");
    let rhs_json = serde_json::to_string(&rhs).expect("polynomial serializes");
    let report = VerificationReport::new(claim, params).sides(lhs_json, rhs_json);
    let diff = &lhs - &rhs;
    Ok(report.require(diff.is_zero(), || {
        let (e, _) = diff.terms().next().expect("nonzero difference");
        json!({
            "exponents": e,
            "lhs": lhs.coeff(e).to_string(),
            "rhs": rhs.coeff(e).to_string(),
        })
    }))
}

pub fn verify_littlewood_1(n: usize, degree: u32) -> Result<VerificationReport> {
    littlewood_report(LittlewoodForm::WithDiagonal, n, degree, true)
}

pub fn verify_littlewood_2(n: usize, degree: u32) -> Result<VerificationReport> {
    littlewood_report(LittlewoodForm::OffDiagonal, n, degree, true)
}

/// `dim F^(p)_{(α+m|β)} · dim F^(q)_{(β+m|α)} = dim F^(p+m)_{(α|β+m)} · dim F^(q+m)_{(β|α+m)}`
/// for `(α|β)` with at most `p` rows and first row at most `q`.
pub fn verify_thm21(
    coords: &FrobeniusCoords,
    m: usize,
    p: usize,
    q: usize,
) -> Result<VerificationReport> {
    let lambda = coords.to_partition();
    if lambda.length() > p || lambda.first_part() > q {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} needs at most {p} rows and first part at most {q}"
        )));
    }
    let transposed = coords.transpose();
    let factors = [
        (coords.shift_arms(m).to_partition(), p),
        (transposed.shift_arms(m).to_partition(), q),
        (coords.shift_legs(m).to_partition(), p + m),
        (transposed.shift_legs(m).to_partition(), q + m),
    ];
    let dims = factors
        .iter()
        .map(|(shape, n)| dim_hook_content(shape, *n).map(|d| d.into_inner()))
        .collect::<Result<Vec<BigInt>>>()?;
    let lhs = &dims[0] * &dims[1];
    let rhs = &dims[2] * &dims[3];

    // Count tableaux directly when every factor is small.
    let small = dims.iter().all(|d| *d <= BigInt::from(CROSS_CHECK_CAP));
    let mut ssyt_counts = None;
    if small {
        let counts = factors
            .iter()
            .map(|(shape, n)| count_ssyt(shape, *n, CROSS_CHECK_CAP).map(BigInt::from))
            .collect::<Result<Vec<BigInt>>>()?;
        ssyt_counts = Some(counts);
    }

    let params = json!({
        "alpha": coords.alpha(),
        "beta": coords.beta(),
        "m": m,
        "p": p,
        "q": q,
        "ssyt_cross_check": small,
    });
    let witness = || {
        json!({
            "shapes": factors.iter().map(|(s, n)| json!({"shape": s, "n": n})).collect::<Vec<_>>(),
            "dimensions": dims.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "ssyt_counts": ssyt_counts.as_ref().map(|c| c.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
        })
    };
    let mut report = VerificationReport::new("thm21", params).sides(&lhs, &rhs);
    report = report.require(lhs == rhs, witness);
    if let Some(counts) = &ssyt_counts {
        report = report.require(*counts == dims, witness);
    }
    Ok(report)
}

/// First `n` in `range` at which `dim F^(n)_λ ≠ dim F^(n+m)_{λ'}`.
fn first_dimension_mismatch(
    lambda: &Partition,
    m: usize,
    range: std::ops::RangeInclusive<usize>,
) -> Result<Option<usize>> {
    let conj = lambda.conjugate();
    for n in range {
        let left = hook_content_value(lambda, n as i64)?;
        let right = hook_content_value(&conj, (n + m) as i64)?;
        if left != right {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// "`dim F^(n)_λ = dim F^(m+n)_{λ'}` for every `n ≥ ℓ(λ)`" against
/// "`λ'` is m-asymmetric".
///
/// Both dimensions are `∏(n + c(u)) / H` over shapes with the same hook
/// product `H`, so they are monic-up-to-scale polynomials in `n` of degree
/// `|λ|`; agreement at the `|λ| + 1` points `ℓ(λ), ..., ℓ(λ) + |λ|` decides
/// agreement for all `n`.
pub fn verify_thm22(lambda: &Partition, m: usize) -> Result<VerificationReport> {
    let start = lambda.length();
    let mismatch = first_dimension_mismatch(lambda, m, start..=start + lambda.weight())?;
    let dims_agree = mismatch.is_none();
    let asymmetric = lambda.conjugate().is_z_asymmetric(m as i64);
    let params = json!({"shape": lambda, "m": m});
    Ok(VerificationReport::new("thm22", params)
        .sides(dims_agree, asymmetric)
        .require(dims_agree == asymmetric, || {
            json!({
                "shape": lambda,
                "m": m,
                "dimensions_agree": dims_agree,
                "conjugate_asymmetric": asymmetric,
                "first_mismatch_n": mismatch,
            })
        }))
}

/// Compares the finite-point decision with a direct comparison over the
/// longer window `[ℓ(λ), ℓ(λ) + |λ| + extra]` for `count` random shapes.
pub fn verify_thm22_reduction(
    seed: u64,
    count: usize,
    max_weight: usize,
    max_m: usize,
    extra: usize,
) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = partitions_up_to(max_weight);
    let mut cases = Vec::with_capacity(count);
    let mut report = VerificationReport::new(
        "thm22-reduction",
        json!({"seed": seed, "count": count, "max_weight": max_weight, "max_m": max_m, "extra": extra}),
    );
    for _ in 0..count {
        let lambda = pool.choose(&mut rng).expect("nonempty pool").clone();
        let m = rng.gen_range(0..=max_m);
        let start = lambda.length();
        let short = first_dimension_mismatch(&lambda, m, start..=start + lambda.weight())?;
        let long =
            first_dimension_mismatch(&lambda, m, start..=start + lambda.weight() + extra)?;
        report = report.require(short.is_some() == long.is_some(), || {
            json!({"shape": lambda, "m": m, "short_window": short, "long_window": long})
        });
        cases.push(json!({"shape": lambda, "m": m, "agree": short.is_none()}));
    }
    report.parameters["cases"] = json!(cases);
    Ok(report.domain_size(count as u64))
}

/// `s_λ(q^{1-n-m}, q^{3-n-m}, ..., q^{n+m-1}) = s_{λ'}(q^{1-n}, ..., q^{n-1})`
/// for m-asymmetric `λ` of length at most `m + n`.
pub fn verify_thm33(lambda: &Partition, m: usize, n: usize) -> Result<VerificationReport> {
    if !lambda.is_z_asymmetric(m as i64) {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} is not {m}-asymmetric"
        )));
    }
    if lambda.length() > m + n {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} has more than {} rows",
            m + n
        )));
    }
    let conj = lambda.conjugate();
    let lhs_start = 1 - (n + m) as i64;
    let rhs_start = 1 - n as i64;
    let lhs = stepped_specialization(lambda, lhs_start, n + m, crate::DEFAULT_CAP)?;
    let rhs = stepped_specialization(&conj, rhs_start, n, crate::DEFAULT_CAP)?;
    let lhs_product = stepped_specialization_by_product(lambda, lhs_start, n + m)?;
    let rhs_product = stepped_specialization_by_product(&conj, rhs_start, n)?;
    let params = json!({"shape": lambda, "m": m, "n": n});
    let witness = || {
        json!({
            "shape": lambda, "m": m, "n": n,
            "lhs": lhs.to_string(), "rhs": rhs.to_string(),
            "lhs_product_route": lhs_product.to_string(),
            "rhs_product_route": rhs_product.to_string(),
        })
    };
    Ok(VerificationReport::new("thm33", params)
        .sides(&lhs, &rhs)
        .require(lhs == rhs, witness)
        .require(lhs == lhs_product && rhs == rhs_product, witness))
}

fn require_asymmetric(lambda: &Partition, m: usize) -> Result<()> {
    if lambda.is_z_asymmetric(m as i64) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "{lambda} is not {m}-asymmetric"
        )))
    }
}

/// `2(k(λ) - k(λ')) = m|λ|` for m-asymmetric `λ`.
pub fn verify_lemma_k(lambda: &Partition, m: usize) -> Result<VerificationReport> {
    require_asymmetric(lambda, m)?;
    let lhs = 2 * (lambda.k_statistic() - lambda.conjugate().k_statistic());
    let rhs = (m * lambda.weight()) as i64;
    Ok(VerificationReport::new("lemma-k", json!({"shape": lambda, "m": m}))
        .sides(lhs, rhs)
        .require(lhs == rhs, || json!({"shape": lambda, "m": m, "lhs": lhs, "rhs": rhs})))
}

/// `Σ_{u∈λ} c(u) - Σ_{u∈λ'} c(u) = -m|λ|` for m-asymmetric `λ`.
pub fn verify_cor_content(lambda: &Partition, m: usize) -> Result<VerificationReport> {
    require_asymmetric(lambda, m)?;
    let lhs: i64 = lambda.contents().iter().sum::<i64>()
        - lambda.conjugate().contents().iter().sum::<i64>();
    let rhs = -((m * lambda.weight()) as i64);
    Ok(VerificationReport::new("cor-content", json!({"shape": lambda, "m": m}))
        .sides(lhs, rhs)
        .require(lhs == rhs, || json!({"shape": lambda, "m": m, "lhs": lhs, "rhs": rhs})))
}

/// `∏_{u∈(α+m|β)} (n + c(u)) = ∏_{u∈(α|β+m)} (m + n + c(u))` for `(α|β)`
/// of length at most `n`.
pub fn verify_cor34(coords: &FrobeniusCoords, m: usize, n: usize) -> Result<VerificationReport> {
    let lambda = coords.to_partition();
    if lambda.length() > n {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} has more than {n} rows"
        )));
    }
    let product = |shape: &Partition, shift: i64| -> BigInt {
        shape
            .contents()
            .iter()
            .map(|&c| BigInt::from(shift + c))
            .product()
    };
    let domain = coords.shift_arms(m).to_partition();
    let codomain = coords.shift_legs(m).to_partition();
    let lhs = product(&domain, n as i64);
    let rhs = product(&codomain, (m + n) as i64);
    let params = json!({"alpha": coords.alpha(), "beta": coords.beta(), "m": m, "n": n});
    Ok(VerificationReport::new("cor34", params)
        .sides(&lhs, &rhs)
        .require(lhs == rhs, || {
            json!({"domain": domain, "codomain": codomain, "n": n, "m": m,
                   "lhs": lhs.to_string(), "rhs": rhs.to_string()})
        }))
}

/// `Σ_{T∈C_λ(m+n)} q^{n(T)} = q^{m|λ|} Σ_{T∈C_{λ'}(n)} q^{n(T)}` for
/// m-asymmetric `λ` of length at most `m + n`. Each generating function is
/// also summed by enumeration when that is cheap.
pub fn verify_cor35(lambda: &Partition, m: usize, n: usize) -> Result<VerificationReport> {
    require_asymmetric(lambda, m)?;
    if lambda.length() > m + n {
        return Err(Error::PreconditionViolated(format!(
            "{lambda} has more than {} rows",
            m + n
        )));
    }
    let conj = lambda.conjugate();
    let big = (m + n) as i64;
    let small = n as i64;
    let shift = (m * lambda.weight()) as i64;
    let lhs = content_gf(lambda, big);
    let rhs = content_gf(&conj, small).shift(shift);

    let cheap = enumeration_size(lambda, TabloidKind::Content { n: big })
        <= BigInt::from(CROSS_CHECK_CAP)
        && enumeration_size(&conj, TabloidKind::Content { n: small })
            <= BigInt::from(CROSS_CHECK_CAP);
    let params = json!({"shape": lambda, "m": m, "n": n, "enumerated": cheap});
    let mut report = VerificationReport::new("cor35", params)
        .sides(&lhs, &rhs)
        .require(lhs == rhs, || {
            json!({"shape": lambda, "m": m, "n": n, "lhs": lhs.to_string(), "rhs": rhs.to_string()})
        });
    if cheap {
        let lhs_enum = content_gf_by_enumeration(lambda, big, CROSS_CHECK_CAP)?;
        let rhs_enum = content_gf_by_enumeration(&conj, small, CROSS_CHECK_CAP)?.shift(shift);
        report = report.require(lhs_enum == lhs && rhs_enum == rhs, || {
            json!({"shape": lambda, "m": m, "n": n,
                   "lhs_enumerated": lhs_enum.to_string(), "rhs_enumerated": rhs_enum.to_string()})
        });
    }
    Ok(report)
}

/// Searches for `(α|β)`, `m ≥ 1` with `|(α+m|β)| ≤ max_weight` whose two
/// shifted shapes have different hook products. Passes iff one exists; the
/// first one found is reported as the witness.
pub fn verify_hook_products_can_differ(max_weight: usize, max_m: usize) -> VerificationReport {
    let params = json!({"max_weight": max_weight, "max_m": max_m});
    let report = VerificationReport::new("hook-products-differ", params);
    for m in 1..=max_m {
        for coords in frobenius_up_to(max_weight) {
            let domain = coords.shift_arms(m).to_partition();
            if domain.weight() > max_weight {
                continue;
            }
            let codomain = coords.shift_legs(m).to_partition();
            let (a, b) = (count_hook_tabloids(&domain), count_hook_tabloids(&codomain));
            if a != b {
                let mut report = report.sides(&a, &b);
                report.witness = Some(json!({
                    "alpha": coords.alpha(), "beta": coords.beta(), "m": m,
                    "domain": domain, "codomain": codomain,
                    "domain_hook_product": a.to_string(), "codomain_hook_product": b.to_string(),
                }));
                return report;
            }
        }
    }
    report.fail(json!({"searched_up_to": max_weight}))
}

/// Hook-content dimension against a direct tableau count.
pub fn verify_dimension_oracle(lambda: &Partition, n: usize, cap: u64) -> Result<VerificationReport> {
    let formula = dim_hook_content(lambda, n)?.into_inner();
    let counted = BigInt::from(count_ssyt(lambda, n, cap)?);
    Ok(VerificationReport::new("dim-oracle", json!({"shape": lambda, "n": n}))
        .sides(&formula, &counted)
        .require(formula == counted, || {
            json!({"shape": lambda, "n": n, "formula": formula.to_string(), "count": counted.to_string()})
        }))
}

/// Bialternant quotient against the tableau sum at the given points.
pub fn verify_bialternant(lambda: &Partition, points: &[i64], cap: u64) -> Result<VerificationReport> {
    let quotient = schur_bialternant_eval(lambda, points)?;
    let summed = schur_ssyt_eval(lambda, points, cap)?;
    Ok(
        VerificationReport::new("bialternant-oracle", json!({"shape": lambda, "points": points}))
            .sides(&quotient, &summed)
            .require(quotient == summed, || {
                json!({"shape": lambda, "points": points,
                       "bialternant": quotient.to_string(), "tableau_sum": summed.to_string()})
            }),
    )
}

/// Principal specialization product against substitution into the
/// tableau sum.
pub fn verify_principal(lambda: &Partition, n: usize, cap: u64) -> Result<VerificationReport> {
    let closed = principal_specialization(lambda, n)?;
    let oracle = principal_specialization_oracle(lambda, n, cap)?;
    Ok(VerificationReport::new("principal-oracle", json!({"shape": lambda, "n": n}))
        .sides(&closed, &oracle)
        .require(closed == oracle, || {
            json!({"shape": lambda, "n": n, "closed_form": closed.to_string(), "oracle": oracle.to_string()})
        }))
}

/// `count` sets of `size` distinct integers drawn from `[-bound, bound]`.
pub fn random_point_sets(rng: &mut impl Rng, count: usize, size: usize, bound: i64) -> Vec<Vec<i64>> {
    let pool: Vec<i64> = (-bound..=bound).collect();
    (0..count)
        .map(|_| pool.choose_multiple(rng, size).copied().collect())
        .collect()
}

/// The claims a sweep can range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    Littlewood1,
    Littlewood2,
    Thm21,
    Thm22,
    Thm33,
    LemmaK,
    CorContent,
    Cor34,
    Cor35,
    Bijection,
    HookProducts,
    Oracles,
}

impl Claim {
    pub const ALL: [Claim; 12] = [
        Claim::Littlewood1,
        Claim::Littlewood2,
        Claim::Thm21,
        Claim::Thm22,
        Claim::Thm33,
        Claim::LemmaK,
        Claim::CorContent,
        Claim::Cor34,
        Claim::Cor35,
        Claim::Bijection,
        Claim::HookProducts,
        Claim::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Littlewood1 => "littlewood1",
            Claim::Littlewood2 => "littlewood2",
            Claim::Thm21 => "thm21",
            Claim::Thm22 => "thm22",
            Claim::Thm33 => "thm33",
            Claim::LemmaK => "lemma-k",
            Claim::CorContent => "cor-content",
            Claim::Cor34 => "cor34",
            Claim::Cor35 => "cor35",
            Claim::Bijection => "bijection",
            Claim::HookProducts => "hook-products",
            Claim::Oracles => "oracles",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim {s:?}"))
    }
}

/// Parameter ranges for [`sweep`].
#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Largest partition weight considered.
    pub max_weight: usize,
    /// Largest shift `m`.
    pub max_m: usize,
    /// Largest bound `n` for the product and bijection sweeps.
    pub max_n: usize,
    /// Truncation degree for the Littlewood identities.
    pub degree: u32,
    /// Largest variable count for the Littlewood identities.
    pub vars: usize,
    /// Enumeration budget for exhaustive bijection checks.
    pub cap: u64,
    pub seed: u64,
    pub jobs: usize,
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_weight: 8,
            max_m: 2,
            max_n: 4,
            degree: 8,
            vars: 3,
            cap: CROSS_CHECK_CAP,
            seed: 0,
            jobs: 1,
            timings: false,
        }
    }
}

type Job = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>;

/// Strict `(α, β)` of equal length with `|α| + |β| ≤ max_total`.
pub fn strict_pairs(max_total: usize) -> Vec<FrobeniusCoords> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for r in 0..=total + 1 {
            for sa in 0..=total {
                for alpha in strict_sequences(sa, r) {
                    for beta in strict_sequences(total - sa, r) {
                        out.push(FrobeniusCoords::new(alpha.clone(), beta).expect("strict"));
                    }
                }
            }
        }
    }
    out
}

fn jobs_for(claim: Claim, cfg: &SweepConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    match claim {
        Claim::Littlewood1 | Claim::Littlewood2 => {
            let form = if claim == Claim::Littlewood1 {
                LittlewoodForm::WithDiagonal
            } else {
                LittlewoodForm::OffDiagonal
            };
            for n in 1..=cfg.vars {
                let d = cfg.degree;
                jobs.push(Box::new(move || littlewood_report(form, n, d, true)));
            }
        }
        Claim::Thm21 => {
            for coords in strict_pairs(cfg.max_weight) {
                let lambda = coords.to_partition();
                let (p0, q0) = (lambda.length(), lambda.first_part());
                for m in 1..=cfg.max_m {
                    for extra in [0, 2] {
                        let c = coords.clone();
                        jobs.push(Box::new(move || verify_thm21(&c, m, p0 + extra, q0 + extra)));
                    }
                }
            }
        }
        Claim::Thm22 => {
            for lambda in partitions_up_to(cfg.max_weight) {
                for m in 0..=cfg.max_m {
                    let l = lambda.clone();
                    jobs.push(Box::new(move || verify_thm22(&l, m)));
                }
            }
            let (seed, w, mm) = (cfg.seed, cfg.max_weight, cfg.max_m);
            jobs.push(Box::new(move || verify_thm22_reduction(seed, 20, w, mm, 5)));
        }
        Claim::Thm33 | Claim::Cor35 => {
            let extra = if claim == Claim::Thm33 { 2 } else { 3 };
            for m in 1..=cfg.max_m {
                for w in 0..=cfg.max_weight {
                    for lambda in enumerate_z_asymmetric(w, m as i64) {
                        let lo = lambda.conjugate().length();
                        for n in lo..=lo + extra {
                            let l = lambda.clone();
                            jobs.push(if claim == Claim::Thm33 {
                                Box::new(move || verify_thm33(&l, m, n))
                            } else {
                                Box::new(move || verify_cor35(&l, m, n))
                            });
                        }
                    }
                }
            }
        }
        Claim::LemmaK | Claim::CorContent => {
            for m in 0..=cfg.max_m {
                for w in 0..=cfg.max_weight {
                    for lambda in enumerate_z_asymmetric(w, m as i64) {
                        jobs.push(if claim == Claim::LemmaK {
                            Box::new(move || verify_lemma_k(&lambda, m))
                        } else {
                            Box::new(move || verify_cor_content(&lambda, m))
                        });
                    }
                }
            }
        }
        Claim::Cor34 => {
            for coords in frobenius_up_to(cfg.max_weight) {
                let len = coords.to_partition().length();
                for m in 0..=cfg.max_m {
                    for n in len..=cfg.max_n.max(len) {
                        let c = coords.clone();
                        jobs.push(Box::new(move || verify_cor34(&c, m, n)));
                    }
                }
            }
        }
        Claim::Bijection => {
            for m in 1..=cfg.max_m {
                for lambda in partitions_up_to(cfg.max_weight) {
                    let Some(coords) = lambda.frobenius().unshift_arms(m) else {
                        continue;
                    };
                    let len = lambda.length();
                    for n in len..=cfg.max_n.max(len) {
                        let (c, cap) = (coords.clone(), cfg.cap);
                        jobs.push(Box::new(move || verify_phi(&c, m, n as i64, cap)));
                    }
                }
            }
        }
        Claim::HookProducts => {
            let (w, m) = (cfg.max_weight, cfg.max_m.max(1));
            jobs.push(Box::new(move || Ok(verify_hook_products_can_differ(w, m))));
        }
        Claim::Oracles => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for lambda in partitions_up_to(cfg.max_weight) {
                for n in 1..=cfg.vars.max(1) + 2 {
                    if lambda.length() > n {
                        continue;
                    }
                    let l = lambda.clone();
                    jobs.push(Box::new(move || verify_dimension_oracle(&l, n, crate::DEFAULT_CAP)));
                    let l = lambda.clone();
                    jobs.push(Box::new(move || verify_principal(&l, n, crate::DEFAULT_CAP)));
                    for pts in random_point_sets(&mut rng, 1, n, 6) {
                        let l = lambda.clone();
                        jobs.push(Box::new(move || verify_bialternant(&l, &pts, crate::DEFAULT_CAP)));
                    }
                }
            }
        }
    }
    jobs
}

fn run_job(job: &Job, claim: Claim, timings: bool) -> VerificationReport {
    let started = Instant::now();
    let mut report = match job() {
        Ok(r) => r,
        Err(e) => VerificationReport::new(claim.name(), json!({}))
            .fail(json!({"error": e.to_string()})),
    };
    if timings {
        report.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    report
}

/// Runs every instance of `claim` in the configured ranges. Reports come
/// back in parameter order regardless of `jobs`.
pub fn sweep(claim: Claim, cfg: &SweepConfig) -> Vec<VerificationReport> {
    let jobs = jobs_for(claim, cfg);
    if cfg.jobs <= 1 {
        return jobs.iter().map(|j| run_job(j, claim, cfg.timings)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        jobs.par_iter()
            .map(|j| run_job(j, claim, cfg.timings))
            .collect()
    })
}

pub fn sweep_all(cfg: &SweepConfig) -> Vec<VerificationReport> {
    Claim::ALL.iter().flat_map(|&c| sweep(c, cfg)).collect()
}
