use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dirac_pmf::{BasisOrdering, Method};
use dirac_pmf_cli::{
    cmd_basis, cmd_bench, cmd_estimate, cmd_lemma, cmd_spectrum, BasisCheck, BenchConfig, CliError,
    Verdict,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "dirac-pmf",
    version,
    about = "Probability-mass estimation on {0,1}^L: Rademacher-Walsh expansion vs Dirac kernel"
)]
struct Cli {
    /// Compact single-line JSON (default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Expansion,
    Dirac,
    Fwht,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Expansion => Method::Expansion,
            MethodArg::Dirac => Method::Dirac,
            MethodArg::Fwht => Method::Fwht,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Table,
    Orthogonality,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    Canonical,
    Cardinality,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate p(query) from a dataset file.
    Estimate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        query: String,
        #[arg(long, value_enum, default_value = "dirac")]
        method: MethodArg,
    },
    /// Dump the estimated coefficient spectrum of a dataset file.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the basis table or run the pairwise orthogonality check.
    Basis {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "table")]
        check: CheckArg,
        #[arg(long, value_enum, default_value = "canonical")]
        ordering: OrderingArg,
    },
    /// Sum of all subset products of a sign vector, e.g. --signs +-+.
    Lemma {
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// Time the expansion and Dirac estimators over a list of lengths.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,10,12")]
        length: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1000)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> Result<(), CliError> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| CliError::Invariant(format!("serialisation failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn emit_checked<T: Serialize + Verdict>(
    value: &T,
    pretty: bool,
    what: &str,
) -> Result<(), CliError> {
    emit(value, pretty)?;
    if value.holds() {
        Ok(())
    } else {
        Err(CliError::Invariant(format!("{what} check failed")))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Estimate {
            input,
            query,
            method,
        } => emit(&cmd_estimate(&input, &query, method.into())?, pretty),
        Command::Spectrum { input } => emit(&cmd_spectrum(&input)?, pretty),
        Command::Basis {
            length,
            check,
            ordering,
        } => {
            let check = match check {
                CheckArg::Orthogonality => BasisCheck::Orthogonality,
                CheckArg::Table => BasisCheck::Table(match ordering {
                    OrderingArg::Canonical => BasisOrdering::Canonical,
                    OrderingArg::Cardinality => BasisOrdering::ByCardinality,
                }),
            };
            emit_checked(&cmd_basis(length, check)?, pretty, "orthogonality")
        }
        Command::Lemma { length, signs } => {
            emit_checked(&cmd_lemma(length, signs.as_deref())?, pretty, "lemma")
        }
        Command::Bench {
            length,
            samples,
            queries,
            seed,
        } => {
            let config = BenchConfig {
                lengths: length,
                samples,
                queries,
                seed,
                ..BenchConfig::default()
            };
            emit_checked(&cmd_bench(&config)?, pretty, "expansion/dirac agreement")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
