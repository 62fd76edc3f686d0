//! `krtorus` — classify Real affine tori, construct their T-duals, compute
//! twisted KR-theory group tables, and verify the transform degree by
//! degree.  One JSON request document per invocation, from a file or
//! standard input; results as JSON or markdown.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use krtorus_cli::model::{ErrorResponse, SCHEMA_VERSION};
use krtorus_cli::run::{self, CommandOutput};
use krtorus_cli::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Request document: a file path, or '-' for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decomposition invariants and canonical factors of a torus.
    Classify(CommonArgs),
    /// Real T-dual of a classified (torus, gerbe) pair.
    Dualize(CommonArgs),
    /// Graded KR groups of a product of factor types.
    KrGroups(CommonArgs),
    /// Degree-wise isomorphism check for a dual pair.
    FmVerify(CommonArgs),
    /// Cohomology of the two-element group with module or circle-quotient
    /// coefficients.
    Cohomology(CommonArgs),
    /// Affine gerbe classes of a torus, whole and factorwise.
    AffineGerbes(CommonArgs),
    /// Index constraint of a Real spin-c structure of type k.
    Index(CommonArgs),
    /// Degree bookkeeping for the families index over the Jacobian.
    JacobianShift(CommonArgs),
}

#[derive(Parser, Debug)]
#[command(
    name = "krtorus",
    version,
    about = "Exact classification and twisted KR-theory of Real affine tori"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn read_document(input: &str) -> Result<String, CliError> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io(format!("failed to read standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::io(format!("failed to read {input}: {e}")))
    }
}

type Runner = fn(&str) -> Result<CommandOutput, CliError>;

fn dispatch(command: &Command) -> Result<(CommandOutput, Format), CliError> {
    let (args, runner): (&CommonArgs, Runner) = match command {
        Command::Classify(a) => (a, run::classify),
        Command::Dualize(a) => (a, run::dualize),
        Command::KrGroups(a) => (a, run::kr_groups),
        Command::FmVerify(a) => (a, run::fm_verify_cmd),
        Command::Cohomology(a) => (a, run::cohomology_cmd),
        Command::AffineGerbes(a) => (a, run::affine_gerbes),
        Command::Index(a) => (a, run::index),
        Command::JacobianShift(a) => (a, run::jacobian_shift),
    };
    let document = read_document(&args.input)?;
    Ok((runner(&document)?, args.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok((output, format)) => {
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&output.json)
                            .expect("response is serializable")
                    );
                }
                Format::Markdown => println!("{}", output.markdown.trim_end()),
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let doc = ErrorResponse {
                schema_version: SCHEMA_VERSION.to_string(),
                error: err.body(),
            };
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("error document is serializable")
            );
            ExitCode::from(err.exit_code())
        }
    }
}
