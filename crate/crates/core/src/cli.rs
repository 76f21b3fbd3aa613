//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the captured output, so the binary only prints.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::content::{partition_from_content_sequence, ContentSequence};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, enumerate_z_asymmetric, FrobeniusCoords, Partition};
use crate::report::{SweepSummary, VerificationReport};
use crate::schur::{
    dim_hook_content, principal_specialization, schur_bialternant_eval, schur_ssyt_eval,
    stepped_specialization,
};
use crate::tabloid::{
    content_gf, count_content_tabloids, count_hook_tabloids, enumerate_tabloids, phi, phi_inverse,
    verify_phi, Tabloid, TabloidKind,
};
use crate::verify::{sweep, Claim, SweepConfig};
use crate::DEFAULT_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "zasym", version, about = "Partitions, content tabloids and Schur identities")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Enumeration cap.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate partitions of a weight.
    Partitions {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        max_length: Option<usize>,
        /// Keep only z-asymmetric partitions.
        #[arg(long, allow_hyphen_values = true)]
        z_asym: Option<i64>,
    },
    /// Frobenius coordinates of a shape, or the shape of given coordinates.
    Frobenius(ShapeOrCoords),
    /// Cell statistics of a shape.
    Stats {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
    },
    /// Content sequence of a shape, or the shape of a content sequence.
    ContentSeq {
        #[arg(long, value_parser = parse_partition, conflicts_with_all = ["values", "origin"])]
        shape: Option<Partition>,
        /// Window of the sequence, comma separated.
        #[arg(long, value_delimiter = ',', requires = "origin")]
        values: Option<Vec<usize>>,
        /// Index within the window of content 0.
        #[arg(long)]
        origin: Option<usize>,
    },
    #[command(subcommand)]
    Tabloids(TabloidCommand),
    #[command(subcommand)]
    Bijection(BijectionCommand),
    /// Number of SSYT of a shape with entries at most n.
    Dim {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        n: usize,
    },
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Check an identity over a range of parameters.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ShapeOrCoords {
    #[arg(long, value_parser = parse_partition, conflicts_with_all = ["alpha", "beta"])]
    shape: Option<Partition>,
    #[arg(long, value_delimiter = ',', requires = "beta")]
    alpha: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',', requires = "alpha")]
    beta: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct KindArgs {
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,
    /// Upper bound for content tabloids.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "hook")]
    n: Option<i64>,
    /// Hook tabloids instead of content tabloids.
    #[arg(long, conflicts_with = "n")]
    hook: bool,
}

impl KindArgs {
    fn kind(&self) -> TabloidKind {
        match self.n {
            Some(n) if !self.hook => TabloidKind::Content { n },
            _ => TabloidKind::Hook,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum TabloidCommand {
    Count(KindArgs),
    Enum(KindArgs),
    /// Norm generating function of content tabloids.
    Gf {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Debug, Args)]
pub struct TabloidArgs {
    /// Rows separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rows)]
    rows: Rows,
    /// Entry bound of the input tabloid.
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long)]
    m: usize,
}

#[derive(Debug, Subcommand)]
pub enum BijectionCommand {
    /// Map a content tabloid of (α+m|β) to one of (α|β+m).
    Apply(TabloidArgs),
    /// Map a content tabloid of (α|β+m) back to (α+m|β).
    Invert(TabloidArgs),
    /// Check the bijection on all content tabloids of (α+m|β).
    Verify {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        beta: Vec<usize>,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchurCommand {
    /// Evaluate s_λ at integer points.
    Eval {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        points: Vec<i64>,
    },
    /// s_λ(1, q, ..., q^{n-1}).
    Specialize {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long)]
        n: usize,
    },
    /// s_λ(q^s, q^{s+2}, ..., q^{s+2(count-1)}).
    Stepped {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, allow_hyphen_values = true)]
        start: i64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
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
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    claim: ClaimArg,
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Truncation degree for the product identities.
    #[arg(long = "degree", visible_alias = "D")]
    degree: Option<u32>,
    /// Largest variable count for the product identities.
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include wall-clock time in each report.
    #[arg(long)]
    timings: bool,
}

type Rows = Vec<Vec<i64>>;

fn parse_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    Partition::new(&parse_list(s)?).map_err(|e| e.to_string())
}

fn parse_rows(s: &str) -> std::result::Result<Rows, String> {
    s.split(';').map(parse_list).collect()
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

/// Rows of `#`, one per part.
pub fn young_diagram(lambda: &Partition) -> String {
    lambda
        .parts()
        .iter()
        .map(|&p| "#".repeat(p) + "\n")
        .collect()
}

fn grid(rows: &[Vec<i64>]) -> String {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let text = cli.format == Format::Text;
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    let out = match &cli.command {
        Command::Partitions { weight, max_length, z_asym } => {
            let mut list = match z_asym {
                Some(z) => enumerate_z_asymmetric(*weight, *z),
                None => enumerate_partitions(*weight, *max_length),
            };
            if let Some(l) = max_length {
                list.retain(|p| p.length() <= *l);
            }
            if text {
                list.iter().map(|p| format!("{p}\n")).collect()
            } else {
                to_json(&list)
            }
        }
        Command::Frobenius(args) => frobenius(args, text)?,
        Command::Stats { shape } => stats(shape, text),
        Command::ContentSeq { shape, values, origin } => {
            if let Some(shape) = shape {
                let seq = ContentSequence::of(shape);
                if text {
                    let (lo, hi) = seq.support().unwrap_or((0, 0));
                    (lo..=hi)
                        .map(|a| format!("{a:>3} {}\n", seq.get(a)))
                        .collect()
                } else {
                    to_json(&seq)
                }
            } else {
                let values = values.clone().unwrap_or_default();
                let seq = ContentSequence::from_window(&values, origin.unwrap_or(0))?;
                let lambda = partition_from_content_sequence(&seq);
                if text {
                    format!("{lambda}\n{}", young_diagram(&lambda))
                } else {
                    to_json(&lambda)
                }
            }
        }
        Command::Tabloids(cmd) => tabloids(cmd, cap, text)?,
        Command::Bijection(cmd) => return bijection(cmd, cap, text),
        Command::Dim { shape, n } => {
            let d = dim_hook_content(shape, *n)?;
            format!("{d}\n")
        }
        Command::Schur(cmd) => schur(cmd, cap, text)?,
        Command::Verify(args) => return Ok(verify(args, cli.cap, text)),
    };
    Ok(Outcome::ok(out))
}

fn frobenius(args: &ShapeOrCoords, text: bool) -> Result<String> {
    if let Some(shape) = &args.shape {
        let coords = shape.frobenius();
        return Ok(if text { format!("{coords}\n") } else { to_json(&coords) });
    }
    let (Some(alpha), Some(beta)) = (&args.alpha, &args.beta) else {
        return Err(Error::PreconditionViolated(
            "give --shape or both --alpha and --beta".into(),
        ));
    };
    let lambda = FrobeniusCoords::new(alpha.clone(), beta.clone())?.to_partition();
    Ok(if text {
        format!("{lambda}\n{}", young_diagram(&lambda))
    } else {
        to_json(&lambda)
    })
}

fn stats(shape: &Partition, text: bool) -> String {
    let conj = shape.conjugate();
    if !text {
        return to_json(&json!({
            "shape": shape,
            "conjugate": conj,
            "rank": shape.rank(),
            "frobenius": shape.frobenius(),
            "cells": shape.cell_stats(),
            "k": shape.k_statistic(),
            "k_conjugate": conj.k_statistic(),
            "content_sum": shape.content_sum(),
        }));
    }
    let mut contents: Rows = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut hooks = contents.clone();
    for s in shape.cell_stats() {
        contents[s.row - 1].push(s.content);
        hooks[s.row - 1].push(s.hook as i64);
    }
    let mut out = String::new();
    let _ = writeln!(out, "shape {shape}  conjugate {conj}  frobenius {}", shape.frobenius());
    let _ = writeln!(
        out,
        "k {}  k' {}  content sum {}",
        shape.k_statistic(),
        conj.k_statistic(),
        shape.content_sum()
    );
    out += "contents\n";
    out += &grid(&contents);
    out += "hooks\n";
    out += &grid(&hooks);
    out
}

fn tabloids(cmd: &TabloidCommand, cap: u64, text: bool) -> Result<String> {
    Ok(match cmd {
        TabloidCommand::Count(args) => {
            let count = match args.kind() {
                TabloidKind::Content { n } => count_content_tabloids(&args.shape, n),
                TabloidKind::Hook => count_hook_tabloids(&args.shape),
            };
            format!("{count}\n")
        }
        TabloidCommand::Enum(args) => {
            let all: Vec<Tabloid> = enumerate_tabloids(&args.shape, args.kind(), cap)?.collect();
            if text {
                all.iter().map(|t| format!("{t}\n\n")).collect()
            } else {
                to_json(&all)
            }
        }
        TabloidCommand::Gf { shape, n } => {
            let gf = content_gf(shape, *n);
            if text {
                format!("{gf}\n")
            } else {
                to_json(&gf)
            }
        }
    })
}

fn bijection(cmd: &BijectionCommand, cap: u64, text: bool) -> Result<Outcome> {
    let show = |t: &Tabloid| if text { format!("{t}\n") } else { to_json(t) };
    match cmd {
        BijectionCommand::Apply(a) => {
            let t = Tabloid::from_rows(TabloidKind::Content { n: a.n }, a.rows.clone())?;
            Ok(Outcome::ok(show(&phi(&t, a.m)?)))
        }
        BijectionCommand::Invert(a) => {
            let t = Tabloid::from_rows(TabloidKind::Content { n: a.n }, a.rows.clone())?;
            Ok(Outcome::ok(show(&phi_inverse(&t, a.m)?)))
        }
        BijectionCommand::Verify { alpha, beta, m, n } => {
            let coords = FrobeniusCoords::new(alpha.clone(), beta.clone())?;
            let report = verify_phi(&coords, *m, *n, cap)?;
            Ok(reports_outcome(&[report], text))
        }
    }
}

fn schur(cmd: &SchurCommand, cap: u64, text: bool) -> Result<String> {
    Ok(match cmd {
        SchurCommand::Eval { shape, points } => {
            let value = match schur_bialternant_eval(shape, points) {
                Err(Error::RepeatedPoint(_)) => schur_ssyt_eval(shape, points, cap)?,
                other => other?,
            };
            format!("{value}\n")
        }
        SchurCommand::Specialize { shape, n } => {
            let p = principal_specialization(shape, *n)?;
            if text {
                format!("{p}\n")
            } else {
                to_json(&p)
            }
        }
        SchurCommand::Stepped { shape, start, count } => {
            let p = stepped_specialization(shape, *start, *count, cap)?;
            if text {
                format!("{p}\n")
            } else {
                to_json(&p)
            }
        }
    })
}

fn claim_of(arg: ClaimArg) -> Option<Claim> {
    Some(match arg {
        ClaimArg::Littlewood1 => Claim::Littlewood1,
        ClaimArg::Littlewood2 => Claim::Littlewood2,
        ClaimArg::Thm21 => Claim::Thm21,
        ClaimArg::Thm22 => Claim::Thm22,
        ClaimArg::Thm33 => Claim::Thm33,
        ClaimArg::LemmaK => Claim::LemmaK,
        ClaimArg::CorContent => Claim::CorContent,
        ClaimArg::Cor34 => Claim::Cor34,
        ClaimArg::Cor35 => Claim::Cor35,
        ClaimArg::Bijection => Claim::Bijection,
        ClaimArg::HookProducts => Claim::HookProducts,
        ClaimArg::Oracles => Claim::Oracles,
        ClaimArg::All => return None,
    })
}

fn verify(args: &VerifyArgs, cap: Option<u64>, text: bool) -> Outcome {
    let defaults = SweepConfig::default();
    let cfg = SweepConfig {
        max_weight: args.max_weight.unwrap_or(defaults.max_weight),
        max_m: args.max_m.unwrap_or(defaults.max_m),
        max_n: args.max_n.unwrap_or(defaults.max_n),
        degree: args.degree.unwrap_or(defaults.degree),
        vars: args.vars.unwrap_or(defaults.vars),
        cap: cap.unwrap_or(defaults.cap),
        seed: args.seed,
        jobs: args.jobs.max(1),
        timings: args.timings,
    };
    let claims: Vec<Claim> = match claim_of(args.claim) {
        Some(c) => vec![c],
        None => Claim::ALL.to_vec(),
    };
    let reports: Vec<VerificationReport> = claims.iter().flat_map(|&c| sweep(c, &cfg)).collect();
    reports_outcome(&reports, text)
}

fn reports_outcome(reports: &[VerificationReport], text: bool) -> Outcome {
    let summary = SweepSummary::of(reports);
    let mut out = String::new();
    for r in reports {
        if text {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} {}", r.claim, r.parameters);
            if let Some(w) = r.witness.as_ref().filter(|_| !r.passed()) {
                let _ = writeln!(out, "  witness {w}");
            }
        } else {
            out += &to_json(r);
        }
    }
    if text {
        let _ = writeln!(out, "{} of {} passed", summary.passed, summary.total);
    } else {
        out += &to_json(&json!({"summary": summary}));
    }
    Outcome {
        code: if summary.all_passed() { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}
