//! Command-line grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "thom", version, about = "Thom polynomials of contact singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Thom polynomial of one algebra at (n, p) or at l = p − n.
    Tp {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
        /// Euler data file in the `algebra | ideal | expression` format.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Thom series up to an index bound.
    Series {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        index_bound: i64,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Euler classes e(Q, I) at the fixed-point representatives.
    Euler {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Iterated residue of the catalog generating function.
    Residue {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
    },
    /// The consistency suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Roots,
    Chern,
    Schur,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Fast,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Roots => "roots",
            Basis::Chern => "chern",
            Basis::Schur => "schur",
        }
    }
}
