//! Command-line grammar.
//!
//! Global options may appear before or after the subcommand. Precedence for
//! shared knobs is flags > config file > environment (`RINGSHIFT_WORKERS`)
//! > defaults.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ringshift", version, about = "Shifted-ring algebra, monochromatic patterns, largeness analysis, and coloring search")]
pub struct Cli {
    /// TOML or JSON config file (flags override it).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Seed for every sampled computation; echoed in the manifest.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads for the search commands.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Report format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<ReportFormat>,

    /// Report destination (default stdout). For `pr export-cnf` this is the
    /// DIMACS file instead, and the report stays on stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Include wall-clock timing in the manifest (makes reports
    /// non-reproducible byte-for-byte).
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact star-product algebra.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Pattern enumeration and monochromatic matching.
    #[command(subcommand)]
    Patterns(PatternsCmd),
    /// Thick / syndetic / piecewise-syndetic detectors.
    #[command(subcommand)]
    Largeness(LargenessCmd),
    /// Avoidability search, Rado numbers, CNF export.
    #[command(subcommand)]
    Pr(PrCmd),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Run the seeded identity suite for star parameters (l, k).
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Sampled (a, b) pairs.
        #[arg(long, default_value_t = 100_000)]
        samples: u32,
        /// Sample magnitude bound.
        #[arg(long, default_value_t = 1_000_000)]
        bound: i64,
    },
    /// Evaluate one operation.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub op: EvalOp,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    /// Shift t for oplus / odot / h / products / sums.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
    #[arg(short, long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(short, long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    /// Comma-separated sequence, e.g. `--xs 1,2,3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub xs: Option<Vec<i64>>,
    /// Index for elem-sym.
    #[arg(long)]
    pub j: Option<usize>,
    /// Subset depth for products / sums.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Direction for the isomorphism h.
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    pub direction: Direction,
    /// Require pairwise distinct sequence entries.
    #[arg(long)]
    pub distinct: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalOp {
    /// a ⊛ b.
    Star,
    /// Fold of ⊛ over xs.
    Fold,
    /// Symmetric-polynomial closed form of the fold (arbitrary precision).
    SymPoly,
    /// j-th elementary symmetric polynomial of xs.
    ElemSym,
    /// a ⊕_t b.
    Oplus,
    /// a ⊙_t b.
    Odot,
    /// The isomorphism h(x) = x + t (x passed as -a).
    H,
    /// ⊙_t-product set of xs up to --depth.
    Products,
    /// ⊕_t-sum set of xs up to --depth.
    Sums,
    /// Seeded symmetry falsifier for the (l,k) fold at arity --depth.
    CheckSym,
}

#[derive(Debug, Subcommand)]
pub enum PatternsCmd {
    /// List solution tuples of a pattern inside a window.
    Enumerate {
        #[arg(long)]
        pattern: String,
        /// Window `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Search a coloring for the least monochromatic witness.
    Find {
        #[arg(long)]
        pattern: String,
        /// Inline color table, e.g. `0,1,1,0` (needs --window).
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<u8>>,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Color count for inline colorings (default: largest color + 1).
        #[arg(long)]
        colors: Option<u32>,
        /// Coloring JSON file (alternative to --coloring).
        #[arg(long)]
        coloring_file: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LargenessCmd {
    /// Analyze one set in one structure.
    Analyze {
        /// `add`, `mul`, or `star:l,k`.
        #[arg(long)]
        structure: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Inline interval list, e.g. `1:10,20:30`.
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
        /// RLE set JSON file.
        #[arg(long)]
        set_file: Option<PathBuf>,
        /// Syndetic gap bound g.
        #[arg(long, default_value_t = 2)]
        gap: i64,
        /// Thickness run length L.
        #[arg(long, default_value_t = 8)]
        run: i64,
        /// Translate bound m.
        #[arg(long, default_value_t = 3)]
        translates: i64,
        /// Also report the longest arithmetic progression (star structure).
        #[arg(long)]
        ap_experiment: bool,
    },
    /// Paired multiplicative vs star analysis across the shift t.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
        #[arg(long)]
        set_file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        gap: i64,
        #[arg(long, default_value_t = 8)]
        run: i64,
        #[arg(long, default_value_t = 3)]
        translates: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum PrCmd {
    /// Decide avoidability of a pattern on [1, n] (or the symmetric domain).
    Decide {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        n: i64,
        /// `positive` (default) or `z` for [−n, n] without zero (`z:n` also
        /// sets n).
        #[arg(long)]
        domain: Option<String>,
    },
    /// Least n at which the pattern is unavoidable, up to --max.
    Rado {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        max: i64,
        #[arg(long)]
        domain: Option<String>,
    },
    /// Write the avoidability CNF in DIMACS format to --out.
    ExportCnf {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        n: i64,
    },
    /// Validate a DIMACS model against an exported CNF.
    CheckModel {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        model: PathBuf,
    },
}
