use clap::{Args, Parser, Subcommand, ValueEnum};
use frey_core::algebra::{is_odd_prime, parse_rat, Rat};
use frey_core::classifier::{Mode, Signature};
use frey_core::local::WeightInterval;

pub const MAX_R: u32 = 19;

#[derive(Parser, Debug)]
#[command(
    name = "frey",
    version,
    about = "Frey hyperelliptic curves: identities, 2-adic reduction and conductor exponents at 2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check identities, closed-form discriminants and the change-of-variables law.
    Verify(VerifyArgs),
    /// Conductor exponent at 2 for one parameter value.
    Classify(ClassifyArgs),
    /// Run a reduction pipeline and describe the special fiber.
    Reduce(ReduceArgs),
    /// The conductor table, annotated against the pipelines.
    Table(TableArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Odd primes to check: `N` or `A..B`.
    #[arg(long = "r", value_parser = parse_r_range, default_value = "3..7")]
    pub r: RRange,
    /// Random (equation, change) pairs for the transformation law.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 2)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = parse_signature)]
    pub signature: Signature,
    /// Ignored for 35p.
    #[arg(long = "r", value_parser = parse_single_r, default_value = "3")]
    pub r: u32,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub t: Rat,
    #[arg(long, value_parser = parse_mode, default_value = "printed")]
    pub mode: Mode,
    /// Also run the matching reduction pipeline and compare.
    #[arg(long)]
    pub cross_validate: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PipelineName {
    PprEvenVneg,
    PprEvenVt,
    PprEvenV1mt,
    #[value(name = "35p-vneg")]
    P35Vneg,
    #[value(name = "35p-vt")]
    P35Vt,
    #[value(name = "35p-v1mt")]
    P35V1mt,
    OddGood,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(long, value_enum)]
    pub pipeline: PipelineName,
    #[arg(long = "r", value_parser = parse_single_r, default_value = "3")]
    pub r: u32,
    /// `odd-good` only.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub z: Option<Rat>,
    /// `odd-good` only.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub s: Option<Rat>,
    /// Weight of the uniformizing parameter for ppr-even: `W` or an open
    /// interval `A..B`. Defaults to all positive weights.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: Option<WeightInterval>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long = "r", value_parser = parse_r_range, default_value = "3..7")]
    pub r: RRange,
    #[arg(long, value_parser = parse_mode, default_value = "printed")]
    pub mode: Mode,
    /// Restrict to one signature.
    #[arg(long, value_parser = parse_signature)]
    pub signature: Option<Signature>,
    /// List classifications for these 2-adic valuations instead of the rows.
    #[arg(long, value_parser = parse_int_range, allow_hyphen_values = true)]
    pub grid_exponents: Option<(i64, i64)>,
}

/// Odd primes, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRange(pub Vec<u32>);

fn bound(s: &str) -> Result<u32, String> {
    let r: u32 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not an integer"))?;
    if !is_odd_prime(r) {
        return Err(format!("{r} is not an odd prime"));
    }
    if r > MAX_R {
        return Err(format!("{r} exceeds the supported maximum {MAX_R}"));
    }
    Ok(r)
}

pub fn parse_r_range(s: &str) -> Result<RRange, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (bound(a)?, bound(b)?),
        None => {
            let r = bound(s)?;
            (r, r)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(RRange((lo..=hi).filter(|&r| is_odd_prime(r)).collect()))
}

fn parse_single_r(s: &str) -> Result<u32, String> {
    bound(s)
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: frey_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: frey_core::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<WeightInterval, String> {
    let w = match s.split_once("..") {
        Some((a, b)) => WeightInterval::open(parse_rational(a)?, parse_rational(b)?),
        None => WeightInterval::point(parse_rational(s)?),
    };
    w.map_err(|e| e.to_string())
}

pub fn parse_int_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let int = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| format!("{x:?} is not an integer"))
    };
    let (a, b) = (int(a)?, int(b)?);
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}
