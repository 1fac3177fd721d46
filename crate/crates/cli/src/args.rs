use clap::{Args, Parser, Subcommand, ValueEnum};
use triharm::catalog::FamilyTag;
use triharm::conditions::Verdict;

#[derive(Debug, Parser)]
#[command(
    name = "triharm",
    version,
    about = "Exact checks of the triharmonic condition on isoparametric hypersurfaces"
)]
pub struct Cli {
    /// Leave the timing block out of the report.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one catalog hypersurface.
    Check(CheckArgs),
    /// Root t0 of f_n, the torus radius and their consistency.
    Corollary(CorollaryArgs),
    /// Replay the formal identities and certificates.
    Identities(IdentitiesArgs),
    /// Sweep one family parameter and tabulate invariants and verdicts.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma3,
    Lemma4,
    Vandermonde,
    Theorem3,
    R6,
    Certificates,
    All,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Ambient sectional curvature.
    #[arg(long, allow_hyphen_values = true, value_parser = clap::value_parser!(i64).range(-1..=1))]
    pub curvature: i64,

    /// Hypersurface dimension.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub n: u64,

    /// Family name, e.g. small-sphere, clifford, hcylinder.
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyTag,

    /// Family parameter `key=value`; values are integers or `p/q`.
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_kv)]
    pub params: Vec<(String, String)>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Expected verdict: minimal, proper or not.
    #[arg(long, value_parser = parse_verdict)]
    pub expect: Option<Verdict>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CorollaryArgs {
    #[arg(long)]
    pub n: u64,

    /// Requested decimal digits of t0 and a^2.
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..=2000))]
    pub digits: u64,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,

    /// Largest power q in the recurrence and formal derivation checks.
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub qmax: u32,

    /// Random tuples in the Vandermonde suite.
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,

    #[arg(long, default_value_t = 20_240_601)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// `key=lo:hi:steps`; `steps >= 2` samples including both ends.
    #[arg(long = "param-range", value_name = "KEY=LO:HI:STEPS", value_parser = parse_kv)]
    pub range: (String, String),

    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    pub out: SweepFormat,

    /// Write the sweep here instead of stdout.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse::<FamilyTag>().map_err(|e| {
        let names: Vec<&str> = FamilyTag::ALL.iter().map(|t| t.cli_name()).collect();
        format!("{e}; known families: {}", names.join(", "))
    })
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((k.to_string(), v.to_string())),
        _ => Err(format!("expected KEY=VALUE, got `{s}`")),
    }
}

fn parse_verdict(s: &str) -> Result<Verdict, String> {
    Verdict::parse_short(s).ok_or_else(|| format!("unknown verdict `{s}` (minimal, proper, not)"))
}
