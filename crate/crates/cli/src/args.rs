use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "subbundles")]
#[command(about = "Count maximal subbundles of a generic vector bundle on a curve")]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct InstanceArgs {
    /// Rank of the ambient bundle
    #[arg(long)]
    pub r: i64,

    /// Degree of the ambient bundle (may be negative)
    #[arg(long, allow_negative_numbers = true)]
    pub d: i64,

    /// Rank of the subbundles being counted
    #[arg(long = "r-prime")]
    pub r_prime: i64,

    /// Genus of the curve
    #[arg(long, allow_negative_numbers = true)]
    pub g: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count maximal subbundles for one instance
    Count {
        #[command(flatten)]
        instance: InstanceArgs,

        /// Computation path; `all` runs every path and checks they agree
        #[arg(long, value_enum, default_value_t = MethodChoice::All)]
        method: MethodChoice,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },

    /// Print counts for g = 1..max-g
    Table {
        #[arg(long, value_enum)]
        case: CaseArg,

        /// Ambient rank, for `--case line`
        #[arg(long)]
        r: Option<i64>,

        #[arg(long = "max-g", allow_negative_numbers = true)]
        max_g: i64,

        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },

    /// Cross-check every computation path and identity up to max-g
    Verify {
        #[arg(long = "max-g", allow_negative_numbers = true, default_value_t = 512)]
        max_g: i64,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },

    /// Show the degree-split contributions of the last genus increment
    Trace {
        #[command(flatten)]
        instance: InstanceArgs,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Line,
    #[value(name = "rank2of4")]
    Rank2Of4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodChoice {
    All,
    Recurrence,
    MatrixPower,
    BinomialSum,
    EigenForm,
}

impl MethodChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodChoice::All => "all",
            MethodChoice::Recurrence => "recurrence",
            MethodChoice::MatrixPower => "matrix-power",
            MethodChoice::BinomialSum => "binomial-sum",
            MethodChoice::EigenForm => "eigen-form",
        }
    }
}
