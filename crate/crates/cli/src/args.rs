use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cubiccm",
    version,
    about = "Exact arithmetic for rank-21 CM cubic fourfolds"
)]
pub struct Cli {
    /// Output format; `csv` applies to tabular results only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice invariants, complements and the standard lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Primitive embeddings into U + U and into L.
    #[command(subcommand)]
    Embed(EmbedCmd),
    /// Even binary forms: classes, endomorphism fields, isometries.
    #[command(subcommand)]
    Forms(FormsCmd),
    /// Imaginary quadratic fields.
    #[command(subcommand)]
    Field(FieldCmd),
    /// The weight-3 CM newform of a Hecke character.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Frobenius traces, determinants and Euler factors.
    #[command(subcommand)]
    Frob(FrobCmd),
    /// Orders of finite special orthogonal groups.
    #[command(subcommand)]
    Levels(LevelsCmd),
    /// Worked examples.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

/// A lattice given either as an explicit Gram matrix or by name.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct LatticeSource {
    /// Gram matrix as a JSON array of rows, e.g. `[[2,1],[1,2]]`.
    #[arg(long)]
    pub gram: Option<String>,
    /// Named lattice: U, A2, E8, L0, L, diag(..), <d>, optionally twisted as NAME(m).
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    Invariants {
        #[command(flatten)]
        source: LatticeSource,
        /// Number of copies for `<d>`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Orthogonal complement of a primitive vector.
    Complement {
        #[command(flatten)]
        source: LatticeSource,
        #[arg(long)]
        n: Option<usize>,
        /// Vector as a JSON array; defaults to the distinguished vector of L0.
        #[arg(long)]
        vector: Option<String>,
    },
    Standard {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbedCmd {
    /// Trace form of the ring of integers of Q(sqrt(-D)), embedded in L.
    TraceForm {
        /// Absolute value of the fundamental discriminant.
        #[arg(long = "d", visible_alias = "D")]
        d: u64,
    },
    /// An even binary form embedded in U + U.
    Binary {
        #[arg(long)]
        gram: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FormsCmd {
    /// Reduced positive-definite even forms of a given determinant.
    Classes {
        #[arg(long)]
        det: u64,
    },
    /// Endomorphism field, finite isometry and period points of a definite form.
    Endo {
        #[arg(long)]
        gram: String,
        /// Entry bound for the isometry search.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FieldCmd {
    /// Splitting type of a rational prime.
    Split {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        p: u64,
    },
    /// Ideals of a given norm.
    Ideals {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        norm: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HeckeCmd {
    /// Coefficients c_1..c_B.
    Qexp {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        limit: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FrobCmd {
    /// One row per prime up to the bound.
    Table {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        pmax: u64,
    },
    /// Newform and representation normalizations side by side, good primes only.
    Shift {
        #[arg(long = "D")]
        d: u64,
        #[arg(long)]
        pmax: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LevelsCmd {
    /// Order of SO of a lattice modulo N, optionally fixing a vector.
    Order {
        #[command(flatten)]
        source: LatticeSource,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        modulus: u64,
        /// Fixed vector as a JSON array.
        #[arg(long)]
        fixed: Option<String>,
    },
    /// Closed-form order of SO_n(F_q) of a given type.
    Formula {
        /// split, nonsplit or odd.
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCmd {
    Run { name: String },
    List,
}
