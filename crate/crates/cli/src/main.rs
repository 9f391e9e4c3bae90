//! `tableaux`: exact path counts in graded graphs, identity checks, phi
//! series and count tables.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod budget;
mod commands;
mod failure;
mod graph;

use budget::Budget;
use failure::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "tableaux",
    version,
    about = "Exact path counts in graded graphs and checks of the identities behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count paths between two vertices.
    Count(CountArgs),
    /// Check an identity exactly; prints one JSON line per report.
    Verify(VerifyArgs),
    /// Hook lengths, their product and the number of standard tableaux.
    Hooks(HooksArgs),
    /// Construct a phi series for a vertex and verify its conditions.
    Phi(PhiArgs),
    /// Path counts from the base vertex to every vertex up to a degree.
    Table(TableArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphName {
    Pascal,
    Young,
    Strict,
    Custom,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long, value_enum)]
    pub graph: GraphName,
    #[arg(long)]
    pub k: usize,
    /// Vertices of a custom graph, `;`-separated, e.g. "0,0;1,0;0,1".
    #[arg(long)]
    pub vertices: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Phi,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Start vertex, increasing coordinates; defaults to the base vertex.
    #[arg(long, conflicts_with = "from_partition")]
    pub from: Option<String>,
    /// Start diagram as decreasing rows.
    #[arg(long)]
    pub from_partition: Option<String>,
    #[arg(long, conflicts_with = "to_partition", required_unless_present = "to_partition")]
    pub to: Option<String>,
    #[arg(long)]
    pub to_partition: Option<String>,
    #[arg(long, value_enum, default_value = "formula")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Vandermonde,
    Multinomial,
    Hook,
    Skew,
    Polycomponent,
    Ivanov,
    Pfaffian,
    Cross,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Strictly increasing exponents for the skew identity, e.g. "0,2".
    #[arg(long)]
    pub m: Option<String>,
    /// Strict partition as decreasing rows, e.g. "2,1"; "-" for empty.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// Graph for `cross`.
    #[arg(long, value_enum)]
    pub graph: Option<GraphName>,
    /// Levels above the base vertex for `cross`.
    #[arg(long)]
    pub levels: Option<i64>,
    /// Random pairs for `cross`; all vertices when absent.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Run the default parameter sweep instead of a single point.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Leave out wall-clock times so output is reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct HooksArgs {
    /// Decreasing rows, e.g. "3,2,1".
    pub partition: String,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct PhiArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub v: String,
    /// Highest total degree the series must serve.
    #[arg(long = "D", alias = "d")]
    pub max_degree: i64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Highest total degree listed.
    #[arg(long)]
    pub deg: i64,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

fn run(cli: Cli) -> Result<commands::Output, Failure> {
    let budget = Budget::from_env()?;
    match cli.command {
        Command::Count(a) => commands::count(&a, &budget),
        Command::Verify(a) => commands::verify(&a, &budget),
        Command::Hooks(a) => commands::hooks(&a, &budget),
        Command::Phi(a) => commands::phi(&a, &budget),
        Command::Table(a) => commands::table(&a, &budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("tableaux: {e}");
            e.exit_code()
        }
    }
}
