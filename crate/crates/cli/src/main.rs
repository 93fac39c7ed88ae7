use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use entsort_cli::{
    bench, generate, render_bench, render_linear, render_poset, render_schmidt, schmidt_report,
    sort_linear, sort_poset, BenchMode, CommandError, GenerateKind, GenerateSpec, OutputFormat,
    StateFailure, StateFile,
};
use entsort_core::Tolerances;

const EXIT_PARTIAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISSING: u8 = 3;

/// Order collections of bipartite quantum states by entanglement content:
/// linearly by von Neumann entropy, or partially by Schmidt rank and
/// majorization (where "preceding" means no less entangled).
#[derive(Parser)]
#[command(name = "entsort", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a deterministic state ensemble file
    Generate {
        /// Ensemble kind
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Qudit level count
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Number of states
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Base RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Destination file (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report the Schmidt decomposition of one state
    Schmidt {
        /// State file to read ("-" for stdin)
        #[arg(long)]
        input: PathBuf,
        /// Record id to decompose
        #[arg(long)]
        id: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sort states by entanglement entropy, ascending
    SortLinear {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sort states into rank buckets and majorization chains
    SortPoset {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the sorts over seeded random ensembles of growing size
    Bench {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Ensemble sizes, comma-separated, strictly ascending
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Repetitions per size; the median wall time is reported
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Bell,
    Random,
    Product,
    Mixture,
}

impl From<KindArg> for GenerateKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Bell => GenerateKind::Bell,
            KindArg::Random => GenerateKind::Random,
            KindArg::Product => GenerateKind::Product,
            KindArg::Mixture => GenerateKind::Mixture,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Linear,
    Poset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match tolerances_from_env() {
        Ok(t) => t,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command, &tol) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn run(command: Command, tol: &Tolerances<f64>) -> Result<ExitCode, Failure> {
    match command {
        Command::Generate {
            kind,
            d,
            count,
            seed,
            output,
        } => {
            let spec = GenerateSpec {
                kind: kind.into(),
                d,
                count,
                seed,
            };
            let file = generate(&spec).map_err(|e| Failure::usage(format!("invalid spec: {e}")))?;
            emit(output.as_deref(), &file.to_string_lossless())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Schmidt {
            input,
            id,
            format,
            output,
        } => {
            let file = read_state_file(&input)?;
            let report = schmidt_report(&file, &id, tol).map_err(|e| match e {
                CommandError::MissingId { .. } => Failure {
                    code: EXIT_MISSING,
                    message: e.to_string(),
                },
                other => Failure::usage(other.to_string()),
            })?;
            let rendered = render_schmidt(&report, format.into())
                .map_err(|e| Failure::usage(e.to_string()))?;
            emit(output.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::SortLinear {
            input,
            format,
            output,
        } => {
            let file = read_state_file(&input)?;
            let report = sort_linear(&file, tol);
            emit(output.as_deref(), &render_linear(&report, format.into()))?;
            report_failures(&report.failures);
            Ok(exit_for_failures(&report.failures))
        }
        Command::SortPoset {
            input,
            format,
            output,
        } => {
            let file = read_state_file(&input)?;
            let report = sort_poset(&file, tol).map_err(|e| Failure::usage(e.to_string()))?;
            let rendered =
                render_poset(&report, format.into()).map_err(|e| Failure::usage(e.to_string()))?;
            emit(output.as_deref(), &rendered)?;
            report_failures(&report.failures);
            Ok(exit_for_failures(&report.failures))
        }
        Command::Bench {
            mode,
            sizes,
            d,
            seed,
            reps,
            format,
            output,
        } => {
            let mode = match mode {
                ModeArg::Linear => BenchMode::Linear,
                ModeArg::Poset => BenchMode::Poset,
            };
            let rows =
                bench(mode, &sizes, d, seed, reps).map_err(|e| Failure::usage(e.to_string()))?;
            emit(output.as_deref(), &render_bench(&rows, format.into()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// ENTSORT_TOLERANCE scales every default threshold by the given positive
/// factor.
fn tolerances_from_env() -> Result<Tolerances<f64>, String> {
    match std::env::var("ENTSORT_TOLERANCE") {
        Ok(raw) => {
            let factor: f64 = raw
                .trim()
                .parse()
                .map_err(|_| format!("ENTSORT_TOLERANCE must be a number, got {raw:?}"))?;
            if !factor.is_finite() || factor <= 0.0 {
                return Err(format!(
                    "ENTSORT_TOLERANCE must be a positive finite factor, got {raw:?}"
                ));
            }
            Ok(Tolerances::standard().scaled(factor))
        }
        Err(std::env::VarError::NotPresent) => Ok(Tolerances::standard()),
        Err(e) => Err(format!("ENTSORT_TOLERANCE: {e}")),
    }
}

fn read_state_file(path: &Path) -> Result<StateFile, Failure> {
    let parsed = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        StateFile::parse(&buf)
    } else {
        let file =
            File::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        StateFile::read_from(BufReader::new(file))
    };
    parsed.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, content: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, content).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))
        }
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| Failure::usage(format!("stdout: {e}")))?;
            Ok(())
        }
    }
}

fn report_failures(failures: &[StateFailure]) {
    for failure in failures {
        eprintln!("state {}: {}", failure.id, failure.error);
    }
}

fn exit_for_failures(failures: &[StateFailure]) -> ExitCode {
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_PARTIAL)
    }
}
