use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use nilsplit_cli::commands::{
    cohomology_cmd, csplit_cmd, parse_alpha_arg, parse_base, symplectic_cmd, validate_cmd,
    AlphaArg, CliError, Exit, Options, Outcome,
};
use nilsplit_cli::document::{catalog_input, resolve};
use nilsplit_core::catalog;
use nilsplit_core::hamiltonian::BaseModel;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// Exact cohomology, symplectic structures and twisted bundle models of nilmanifolds.
#[derive(Debug, Parser)]
#[command(name = "nilsplit", version)]
struct Cli {
    /// Seed for the symplectic search.
    #[arg(long, global = true, env = "NILSPLIT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Highest degree computed.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Jacobi identity, nilpotency and lower central series.
    Validate {
        /// A document path, `catalog:NAME`, or a bare catalog name.
        input: String,
    },
    /// Betti numbers of the Chevalley-Eilenberg complex.
    Cohomology { input: String },
    /// Certify or search for a symplectic form; hard Lefschetz table.
    Symplectic {
        input: String,
        /// Certify the document's `omega` instead of searching.
        #[arg(long)]
        omega_from_file: bool,
    },
    /// Twisted model over a base: forcing, obstruction and c-splitting.
    Csplit {
        input: String,
        /// `s2` or `formal:m`.
        #[arg(long, default_value = "s2", value_parser = parse_base)]
        base: BaseModel,
        /// `solve`, or a matrix with rows separated by `;` and entries by `,`.
        #[arg(long, default_value = "solve", value_parser = parse_alpha_arg, allow_hyphen_values = true)]
        alpha: AlphaArg,
        #[arg(long)]
        omega_from_file: bool,
    },
    /// List or emit built-in algebras.
    #[command(group(ArgGroup::new("action").required(true).args(["list", "emit"])))]
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long, value_name = "NAME")]
        emit: Option<String>,
    },
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    dim: usize,
    symplectic: bool,
    description: &'static str,
}

fn catalog_cmd(list: bool, emit: Option<String>, format: Format) -> Result<ExitCode, CliError> {
    if let Some(name) = emit {
        print!("{}", catalog_input(&name)?.document.emit());
        return Ok(ExitCode::SUCCESS);
    }
    debug_assert!(list);
    let entries: Vec<ListEntry> = catalog::entries()
        .iter()
        .map(|e| ListEntry {
            name: e.name,
            dim: e.spec.dim(),
            symplectic: e.omega.is_some(),
            description: e.description,
        })
        .collect();
    match format {
        Format::Machine => println!(
            "{}",
            serde_json::to_string_pretty(&entries).expect("list serializes")
        ),
        Format::Human => {
            for e in &entries {
                let tag = if e.symplectic { "symplectic" } else { "-" };
                println!(
                    "{:<18} dim {}  {:<10}  {}",
                    e.name, e.dim, tag, e.description
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let opts = Options {
        seed: cli.seed,
        max_degree: cli.max_degree,
    };
    let outcome: Outcome = match cli.command {
        Command::Catalog { list, emit } => return catalog_cmd(list, emit, cli.format),
        Command::Validate { input } => validate_cmd(&resolve(&input)?, opts)?,
        Command::Cohomology { input } => cohomology_cmd(&resolve(&input)?, opts)?,
        Command::Symplectic {
            input,
            omega_from_file,
        } => symplectic_cmd(&resolve(&input)?, opts, omega_from_file)?,
        Command::Csplit {
            input,
            base,
            alpha,
            omega_from_file,
        } => csplit_cmd(&resolve(&input)?, opts, omega_from_file, base, &alpha)?,
    };
    match cli.format {
        Format::Human => print!("{}", outcome.report.human()),
        Format::Machine => print!("{}", outcome.report.machine()),
    }
    Ok(ExitCode::from(outcome.exit as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::InputError as u8)
        }
    }
}
