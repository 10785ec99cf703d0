use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use uqsl2_cli::{
    cmd_center, cmd_cohomology, cmd_verify, parse_mode, render_center_table,
    render_cohomology_table, render_verify_table, to_json, CliError, EXIT_USAGE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "uqsl2",
    version,
    about = "Exact computer algebra for U_q(sl2): identity verification, weight-module \
             Dirac cohomology, and center queries over Q(q) or cyclotomic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the symbolic identity suite (Clifford and Casimir relations,
    /// Hopf axioms, K-invariance, the D^2 decomposition, and the
    /// homotopy identities for the central generators).
    Verify {
        /// Coefficient field: `generic` or `root:N` (primitive N-th root, N >= 3)
        #[arg(long)]
        mode: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a module from a descriptor and report its Dirac
    /// cohomology, irreducibility verdict, and infinitesimal character.
    Cohomology {
        #[arg(long)]
        mode: String,
        /// Descriptor, e.g. "Tok omega=+1 twok=4", "Tabl a=1 b=1 lambda=q",
        /// "verma lambda=0 window=20"
        #[arg(long)]
        module: String,
        /// Default window size for windowed families
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test centrality of an element and print its Harish-Chandra data.
    Center {
        #[arg(long)]
        mode: String,
        /// Element expression, e.g. "Cas", "E^3", "K^3 - 2"
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        None => {
            print!("{}", text);
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| CliError {
                code: EXIT_USAGE,
                message: format!("cannot write {}: {}", path.display(), e),
            })?;
            file.write_all(text.as_bytes()).map_err(|e| CliError {
                code: EXIT_USAGE,
                message: format!("cannot write {}: {}", path.display(), e),
            })
        }
    }
}

fn run() -> Result<i32, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { mode, format, out } => {
            let mode = parse_mode(&mode)?;
            let (report, code) = cmd_verify(mode)?;
            let text = match format {
                Format::Json => to_json(&report),
                Format::Table => render_verify_table(&report),
            };
            emit(&text, out.as_ref())?;
            Ok(code)
        }
        Command::Cohomology {
            mode,
            module,
            window,
            format,
            out,
        } => {
            let mode = parse_mode(&mode)?;
            let (report, code) = cmd_cohomology(&module, mode, window)?;
            let text = match format {
                Format::Json => to_json(&report),
                Format::Table => render_cohomology_table(&report),
            };
            emit(&text, out.as_ref())?;
            Ok(code)
        }
        Command::Center {
            mode,
            expr,
            format,
            out,
        } => {
            let mode = parse_mode(&mode)?;
            let (report, code) = cmd_center(&expr, mode)?;
            let text = match format {
                Format::Json => to_json(&report),
                Format::Table => render_center_table(&report),
            };
            emit(&text, out.as_ref())?;
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code as u8)
        }
    }
}
