use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use stcore::search::Filter;

/// Exact enumeration of (s,t)-core partitions.
#[derive(Debug, Parser)]
#[command(name = "stcore", version, about, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for table and verify (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Only explore beta-sets inside [1, H], i.e. partitions of perimeter at
    /// most H. Allows non-coprime pairs; results are labeled partial.
    #[arg(long, global = true, value_name = "H")]
    pub bound: Option<u32>,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every (s,t)-core passing a filter.
    Enumerate(EnumerateArgs),
    /// Grid of core counts for 1 <= s <= max_s, 1 <= t <= max_t.
    Table(TableArgs),
    /// Check a registered claim against its closed form.
    Verify(VerifyArgs),
    /// Show a composition together with its distinct and odd partitions.
    Bijection(BijectionArgs),
    /// Draw a Young diagram.
    Render(RenderArgs),
}

fn parse_filter(s: &str) -> Result<Filter, stcore::Error> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub s: u32,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub t: u32,

    /// all, distinct, odd or self_conjugate.
    #[arg(long, default_value = "all", value_parser = parse_filter)]
    pub filter: Filter,
}

pub const TABLE_CAP: u32 = 12;

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Sets both --max-s and --max-t.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub max: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_s: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_t: Option<u32>,

    /// all, distinct, odd or self_conjugate.
    #[arg(long, default_value = "distinct", value_parser = parse_filter)]
    pub filter: Filter,

    /// Allow grids larger than 12 x 12.
    #[arg(long)]
    pub force: bool,

    /// Symbol for gcd > 1 cells [default: "inf" in csv, "∞" in text].
    #[arg(long, value_name = "SYMBOL")]
    pub inf: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim identifier; run with an unknown name to list them.
    pub claim: String,

    #[arg(long)]
    pub max_s: Option<u32>,

    #[arg(long)]
    pub max_t: Option<u32>,

    /// Largest perimeter M (distinct-odd).
    #[arg(long)]
    pub max_m: Option<u32>,

    /// Largest d (fibx-distinct).
    #[arg(long)]
    pub max_d: Option<u32>,

    /// Largest s + t (anderson, fms).
    #[arg(long)]
    pub max_sum: Option<u32>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["mu", "distinct", "odd"])))]
pub struct BijectionArgs {
    /// Composition into 1s and 2s ending in 1, e.g. 1,2,1.
    #[arg(long, value_name = "PARTS", allow_hyphen_values = true)]
    pub mu: Option<String>,

    /// Partition into distinct parts, e.g. 4,3.
    #[arg(long, value_name = "PARTS", allow_hyphen_values = true)]
    pub distinct: Option<String>,

    /// Partition into odd parts, e.g. 3,1,1.
    #[arg(long, value_name = "PARTS", allow_hyphen_values = true)]
    pub odd: Option<String>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Parts, e.g. "(3,2,1)" or "3 2 1"; "()" is the empty partition.
    #[arg(allow_hyphen_values = true)]
    pub partition: String,

    /// Print hook lengths instead of boxes.
    #[arg(long)]
    pub hooks: bool,
}
