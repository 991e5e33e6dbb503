use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use matrep::decide::{AnalysisOptions, DecideConfig, Mode};
use matrep::groebner::Limits;
use matrep::poly::MonomialOrder;

#[derive(Debug, Parser)]
#[command(name = "matrep", version, about = "Matroid representability via Gröbner bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide representability over the requested characteristics.
    Check(CheckArgs),
    /// Check that a matrix over GF(q) represents a matroid.
    Verify(VerifyArgs),
    /// Print the dual matroid.
    Dual(InputArgs),
    /// Delete loops and merge parallel classes.
    Simplify(InputArgs),
    /// Print the symbolic matrix and the polynomial system.
    DumpSystem(DumpArgs),
    /// Exhaustive search for a representation over GF(q) with the normalized pattern.
    Search(SearchArgs),
    /// Run `check` on many files in parallel.
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matroid file (`n r` header, then circuits).
    pub file: PathBuf,
    /// Accept input that violates the circuit axioms.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Maximum number of elements ever added to a basis.
    #[arg(long, env = "MATREP_MAX_BASIS", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_basis: Option<u64>,
    /// Maximum number of terms summed over all basis elements.
    #[arg(long, env = "MATREP_MAX_TERMS", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_terms: Option<u64>,
    /// Maximum bit length of a coefficient.
    #[arg(long, env = "MATREP_MAX_COEFF_BITS", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_coeff_bits: Option<u64>,
    /// Maximum number of critical pairs.
    #[arg(long, env = "MATREP_MAX_PAIRS", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_pairs: Option<u64>,
}

impl LimitArgs {
    pub fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_basis: self.max_basis.map_or(d.max_basis, |v| v as usize),
            max_total_terms: self.max_terms.map_or(d.max_total_terms, |v| v as usize),
            max_coeff_bits: self.max_coeff_bits.unwrap_or(d.max_coeff_bits),
            max_pairs: self.max_pairs.map_or(d.max_pairs, |v| v as usize),
        }
    }
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    /// Characteristic to test (0 or a prime); repeatable. Default: 0, 2, 3, 5.
    #[arg(long = "char", value_name = "P")]
    pub chars: Vec<u64>,
    /// Compute over the integers first and test every candidate characteristic.
    #[arg(long)]
    pub all_fields: bool,
    /// Also run the radical test, which can prove representability over the closure.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value = "degrevlex", value_parser = parse_order)]
    pub order: MonomialOrder,
    /// Never replace the matroid by its dual.
    #[arg(long)]
    pub no_dual: bool,
    /// Record one line per critical pair.
    #[arg(long)]
    pub trace: bool,
    #[command(flatten)]
    pub limits: LimitArgs,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse()
}

impl DecideArgs {
    pub fn options(&self) -> AnalysisOptions {
        let d = AnalysisOptions::default();
        AnalysisOptions {
            characteristics: if self.chars.is_empty() { d.characteristics } else { self.chars.clone() },
            all_fields: self.all_fields,
            config: DecideConfig {
                mode: if self.exact { Mode::Exact } else { Mode::Fast },
                order: self.order,
                limits: self.limits.limits(),
                trace: self.trace,
                ..DecideConfig::default()
            },
            allow_dual: !self.no_dual,
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub decide: DecideArgs,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Leave timings out of the JSON report.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matroid file.
    pub matroid: PathBuf,
    /// Matrix file (`r n q` header, then rows).
    pub matrix: PathBuf,
    /// Expected field size; must agree with the matrix header.
    #[arg(long)]
    pub field: Option<u32>,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "degrevlex", value_parser = parse_order)]
    pub order: MonomialOrder,
    #[arg(long)]
    pub no_dual: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Field size q.
    #[arg(long)]
    pub field: u32,
    /// Largest number of assignments to try.
    #[arg(long, env = "MATREP_SEARCH_LIMIT", default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Matroid files, or directories whose `*.txt` files are read.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Directory for the per-file JSON reports.
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub decide: DecideArgs,
    #[arg(long)]
    pub force: bool,
    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
}
