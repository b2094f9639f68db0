//! `codescope`: mine Java inner comments, link them to code, build task
//! datasets, score predictions and run the annotation service.
//!
//! Exit codes: 0 success, 1 failure, 2 usage error, 3 schema or id mismatch
//! in the input files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use codescope_core::linkers::ModelError;
use codescope_core::schema::DataError;

mod commands;
mod evaluate;

#[derive(Parser, Debug)]
#[command(name = "codescope", version, about = "Inner-comment mining, linking and evaluation for Java")]
struct Cli {
    /// Master seed; every stochastic step derives its own seed from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// More log output on stderr (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Walk a corpus of projects and write the method manifest.
    Mine(MineArgs),
    /// List the inner comments of a manifest.
    Extract(ExtractArgs),
    /// Predict documented lines for comments with one of the linkers.
    Link(LinkArgs),
    /// Build classification, linking and summarization datasets.
    Encode(EncodeArgs),
    /// IR-Jaccard summaries for a summarization test set.
    Retrieve(RetrieveArgs),
    /// Score predictions against a dataset split.
    Eval(EvalArgs),
    /// Compare per-instance reports with paired tests.
    Stats(StatsArgs),
    /// Run the annotation HTTP service.
    Serve(ServeArgs),
}

#[derive(Args, Debug)]
pub struct MineArgs {
    /// Corpus root; each top-level directory is one project.
    #[arg(long, env = "CODESCOPE_CORPUS")]
    pub root: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Methods with more tokens are skipped (1024 for labeling, 512 for summarization).
    #[arg(long, default_value_t = codescope_core::corpus::LABELING_TOKEN_CAP)]
    pub max_tokens: usize,
    /// Keep methods annotated with a test annotation.
    #[arg(long)]
    pub include_tests: bool,
}

#[derive(Args, Debug)]
pub struct ExtractArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    BlankLine,
    TokenSimilarity,
    Forest,
}

#[derive(Args, Debug)]
pub struct LinkArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long, value_enum)]
    pub engine: Engine,
    /// Similarity threshold for the token-similarity engine.
    #[arg(long, default_value_t = 0.1)]
    pub lambda: f64,
    /// Only link the comments of this dataset file, in its order.
    #[arg(long)]
    pub select: Option<PathBuf>,
    /// Trained forest to load.
    #[arg(long, conflicts_with = "train")]
    pub model: Option<PathBuf>,
    /// Linking dataset to train the forest on.
    #[arg(long)]
    pub train: Option<PathBuf>,
    /// Where to save a freshly trained forest.
    #[arg(long, requires = "train")]
    pub save_model: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub trees: usize,
    #[arg(long, default_value_t = 12)]
    pub max_depth: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grouping {
    File,
    None,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long)]
    pub gold: PathBuf,
    /// Link predictions to build summarization data from; gold links otherwise.
    #[arg(long)]
    pub links: Option<PathBuf>,
    /// Manifest the link predictions refer to, if not `--manifest`.
    #[arg(long)]
    pub links_manifest: Option<PathBuf>,
    #[arg(long, default_value_t = codescope_core::corpus::SUMMARIZATION_TOKEN_CAP)]
    pub max_summary_tokens: usize,
    /// Train, eval and test fractions.
    #[arg(long, value_delimiter = ',', num_args = 3, default_values_t = [0.8, 0.1, 0.1])]
    pub ratios: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Grouping::File)]
    pub group: Grouping,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Args, Debug)]
pub struct RetrieveArgs {
    #[arg(long)]
    pub train: PathBuf,
    #[arg(long)]
    pub test: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Dataset split holding the expected targets.
    #[arg(long)]
    pub gold: PathBuf,
    #[arg(long)]
    pub pred: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// Report of the reference technique.
    pub reference: PathBuf,
    /// Reports of the techniques compared against it.
    #[arg(required = true)]
    pub against: Vec<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
    /// Also write a Markdown table.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ServeArgs {
    /// TOML file with annotators and tokens.
    #[arg(long, env = "CODESCOPE_SERVICE_CONFIG")]
    pub config: PathBuf,
    /// Manifest to sample annotation batches from.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
    /// Directory for the event log and snapshots.
    #[arg(long, env = "CODESCOPE_STORE")]
    pub store: PathBuf,
    #[arg(long, default_value = "127.0.0.1:8080")]
    pub addr: String,
}

/// Prediction and gold files that do not cover the same instances.
#[derive(Debug)]
pub struct IdMismatch(pub String);

impl std::fmt::Display for IdMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for IdMismatch {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<IdMismatch>().is_some() {
            return 3;
        }
        if let Some(d) = cause.downcast_ref::<DataError>() {
            if d.is_schema_mismatch() {
                return 3;
            }
        }
        match cause.downcast_ref::<ModelError>() {
            Some(ModelError::FeatureSchema { .. }) => return 3,
            Some(ModelError::Data(d)) if d.is_schema_mismatch() => return 3,
            _ => {}
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .init();

    let seed = cli.seed;
    let result = match cli.command {
        Command::Mine(a) => commands::mine(&a),
        Command::Extract(a) => commands::extract(&a),
        Command::Link(a) => commands::link(&a, seed),
        Command::Encode(a) => commands::encode(&a, seed),
        Command::Retrieve(a) => commands::retrieve(&a),
        Command::Eval(a) => evaluate::eval(&a),
        Command::Stats(a) => evaluate::stats(&a),
        Command::Serve(a) => commands::serve(&a, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
