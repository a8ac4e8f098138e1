//! Command-line grammar and input parsing.
//!
//! Every subcommand addresses a flag variety through the shared [`Target`]
//! arguments: a family letter with a rank (either positional, as in
//! `flagspec describe A 2 --nodes 1`, or through `--type`/`--rank`) and the
//! painted node set. Vector-valued flags take comma-separated entries in
//! painted-node order; rational entries accept `p/q` or plain integers.

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagspec::{Family, Int, LieType, Rat};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "flagspec",
    version,
    about = "Exact Dirac spectra on generalized flag varieties",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the geometry of a flag variety: dimension, radical roots,
    /// anticanonical coordinates, Fano index, parity vector
    Describe(DescribeArgs),
    /// Check whether a line bundle class admits a spin-c structure
    #[command(name = "spinc-check")]
    SpincCheck(SpincCheckArgs),
    /// Exact spectrum of the Clifford contraction of a two-form
    #[command(name = "theta-spectrum")]
    ThetaSpectrum(ThetaSpectrumArgs),
    /// Exact curvature-term spectrum for a twisted Dirac operator
    Spectrum(SpectrumArgs),
    /// Smallest curvature-term eigenvalue
    Min(MinArgs),
    /// Lower bound for the square of the first Dirac eigenvalue
    Bound(BoundArgs),
    /// Existence of harmonic spinors, with the kernel dimension and index
    Harmonic(HarmonicArgs),
    /// Sweep anticanonical twists over a range of charges
    Scan(ScanArgs),
}

/// Flag variety address shared by every subcommand.
#[derive(Args)]
pub struct Target {
    /// Family letter A-G (alternative to --type)
    #[arg(value_name = "TYPE")]
    pub family_pos: Option<String>,
    /// Rank (alternative to --rank)
    #[arg(value_name = "RANK")]
    pub rank_pos: Option<usize>,
    /// Family letter A-G
    #[arg(long = "type", value_name = "TYPE")]
    pub family_flag: Option<String>,
    /// Rank
    #[arg(long = "rank", value_name = "RANK")]
    pub rank_flag: Option<usize>,
    /// Painted nodes: comma-separated 1-based indices in Bourbaki numbering
    #[arg(long, value_name = "NODES")]
    pub nodes: String,
}

#[derive(Args)]
pub struct OutputOpts {
    /// Emit a machine-readable JSON document instead of a table
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Units {
    /// Coefficients multiply the Chern classes directly
    Plain,
    /// Coefficients carry one factor of pi each
    Pi,
}

impl Units {
    pub fn is_pi(self) -> bool {
        matches!(self, Units::Pi)
    }

    pub fn label(self) -> &'static str {
        match self {
            Units::Plain => "plain",
            Units::Pi => "pi",
        }
    }
}

#[derive(Args)]
pub struct DescribeArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct SpincCheckArgs {
    #[command(flatten)]
    pub target: Target,
    /// Line bundle class: comma-separated integers over the painted nodes
    #[arg(long = "line-bundle", value_name = "INTS", allow_hyphen_values = true)]
    pub line_bundle: String,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct ThetaSpectrumArgs {
    #[command(flatten)]
    pub target: Target,
    /// Two-form class to contract: comma-separated rationals
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    pub theta: String,
    /// Kahler class: comma-separated rationals over the painted nodes
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    pub kahler: String,
    /// Units for --kahler and --theta coefficients
    #[arg(long = "kahler-units", value_enum, default_value_t = Units::Plain)]
    pub kahler_units: Units,
    /// Cap on distinct eigenvalues before the spectrum degrades to a summary
    #[arg(long = "max-distinct", value_name = "N")]
    pub max_distinct: Option<usize>,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub target: Target,
    /// Line bundle class: comma-separated integers over the painted nodes
    #[arg(long = "line-bundle", value_name = "INTS", allow_hyphen_values = true)]
    pub line_bundle: String,
    /// Kahler class: comma-separated rationals over the painted nodes
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    pub kahler: Option<String>,
    /// Units for --kahler coefficients
    #[arg(long = "kahler-units", value_enum, default_value_t = Units::Plain)]
    pub kahler_units: Units,
    /// Scalar curvature target: a positive rational, or `auto-ke`
    #[arg(long = "scalar-target", value_name = "TARGET")]
    pub scalar_target: Option<String>,
    /// Cap on distinct eigenvalues before the spectrum degrades to a summary
    #[arg(long = "max-distinct", value_name = "N")]
    pub max_distinct: Option<usize>,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct MinArgs {
    #[command(flatten)]
    pub target: Target,
    /// Line bundle class: comma-separated integers over the painted nodes
    #[arg(long = "line-bundle", value_name = "INTS", allow_hyphen_values = true)]
    pub line_bundle: String,
    /// Kahler class: comma-separated rationals over the painted nodes
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    pub kahler: Option<String>,
    /// Units for --kahler coefficients
    #[arg(long = "kahler-units", value_enum, default_value_t = Units::Plain)]
    pub kahler_units: Units,
    /// Scalar curvature target: a positive rational, or `auto-ke`
    #[arg(long = "scalar-target", value_name = "TARGET")]
    pub scalar_target: Option<String>,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub target: Target,
    /// Line bundle class: comma-separated integers over the painted nodes
    #[arg(long = "line-bundle", value_name = "INTS", allow_hyphen_values = true)]
    pub line_bundle: String,
    /// Kahler class: comma-separated rationals over the painted nodes
    #[arg(long, value_name = "RATS", allow_hyphen_values = true)]
    pub kahler: Option<String>,
    /// Units for --kahler coefficients
    #[arg(long = "kahler-units", value_enum, default_value_t = Units::Plain)]
    pub kahler_units: Units,
    /// Scalar curvature target: a positive rational, or `auto-ke`
    #[arg(long = "scalar-target", value_name = "TARGET")]
    pub scalar_target: Option<String>,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct HarmonicArgs {
    #[command(flatten)]
    pub target: Target,
    /// Line bundle class: comma-separated integers over the painted nodes
    #[arg(long = "line-bundle", value_name = "INTS", allow_hyphen_values = true)]
    pub line_bundle: String,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub target: Target,
    /// Charge range `LO,HI`; only charges with the right parity are scanned
    #[arg(long = "q-range", value_name = "LO,HI", allow_hyphen_values = true)]
    pub q_range: String,
    /// Scalar curvature target for the Kahler class: a rational, or `auto-ke`
    #[arg(long = "scalar-target", value_name = "TARGET")]
    pub scalar_target: Option<String>,
    #[command(flatten)]
    pub output: OutputOpts,
}

/// Resolved flag variety address: Lie type plus painted node set.
pub fn resolve_target(target: &Target) -> Result<(LieType, Vec<usize>), String> {
    let (family, rank) = match (
        &target.family_pos,
        target.rank_pos,
        &target.family_flag,
        target.rank_flag,
    ) {
        (Some(f), Some(r), None, None) => (f.as_str(), r),
        (None, None, Some(f), Some(r)) => (f.as_str(), r),
        (None, None, None, None) => {
            return Err("missing Lie type: give `TYPE RANK` positionally or --type with --rank".into())
        }
        _ => {
            return Err(
                "give the Lie type either positionally (`A 2`) or via --type/--rank, not a mixture"
                    .into(),
            )
        }
    };
    let family: Family = family.parse()?;
    let lie_type = LieType::new(family, rank).map_err(|e| e.to_string())?;
    let painted = parse_node_list(&target.nodes)?;
    Ok((lie_type, painted))
}

pub fn parse_node_list(text: &str) -> Result<Vec<usize>, String> {
    split_entries(text, "--nodes")?
        .iter()
        .map(|part| {
            part.parse::<usize>()
                .map_err(|_| format!("invalid node index {part:?} in --nodes"))
        })
        .collect()
}

pub fn parse_int_list(text: &str, flag: &str) -> Result<Vec<Int>, String> {
    split_entries(text, flag)?
        .iter()
        .map(|part| {
            part.parse::<BigInt>()
                .map_err(|_| format!("invalid integer {part:?} in {flag}"))
        })
        .collect()
}

pub fn parse_rat_list(text: &str, flag: &str) -> Result<Vec<Rat>, String> {
    split_entries(text, flag)?
        .iter()
        .map(|part| parse_rational(part).map_err(|e| format!("{e} in {flag}")))
        .collect()
}

/// Parses `p/q` or a plain integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rat, String> {
    let bad = || format!("invalid rational {text:?}, expected `p/q` or an integer");
    match text.split_once('/') {
        None => {
            let n = text.parse::<BigInt>().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n = num.parse::<BigInt>().map_err(|_| bad())?;
            let d = den.parse::<BigInt>().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(format!("invalid rational {text:?}, denominator is zero"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

pub fn parse_q_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| format!("invalid --q-range {text:?}, expected `LO,HI`"))?;
    let lo = lo
        .trim()
        .parse::<i64>()
        .map_err(|_| format!("invalid --q-range endpoint {lo:?}"))?;
    let hi = hi
        .trim()
        .parse::<i64>()
        .map_err(|_| format!("invalid --q-range endpoint {hi:?}"))?;
    if lo > hi {
        return Err(format!("--q-range low endpoint {lo} exceeds high endpoint {hi}"));
    }
    Ok((lo, hi))
}

fn split_entries(text: &str, flag: &str) -> Result<Vec<String>, String> {
    let parts: Vec<String> = text.split(',').map(|p| p.trim().to_string()).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(format!("empty entry in {flag}, expected comma-separated values"));
    }
    Ok(parts)
}
