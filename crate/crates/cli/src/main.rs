use std::path::PathBuf;
use std::process::ExitCode;

use a3kit::par::env_threads;
use a3kit_cli::commands::{
    cmd_aybe, cmd_check, cmd_classify, cmd_delta, cmd_double, cmd_rb2ybe, cmd_search, EXIT_INPUT,
};
use a3kit_cli::{Format, Outcome, SearchKind};
use clap::{Parser, Subcommand, ValueEnum};

/// Exact checks and constructions for A3-associative algebras.
#[derive(Parser)]
#[command(name = "a3kit", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rb,
    Aybe,
}

#[derive(Subcommand)]
enum Command {
    /// Check the listed laws (all seven when omitted).
    Check {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        laws: Vec<String>,
    },
    /// Verdicts for every law.
    Classify { file: PathBuf },
    /// Build the double from the algebra and its delta block.
    Double { file: PathBuf },
    /// Comultiplication induced by a named tensor.
    Delta {
        file: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Yang-Baxter residual of a named tensor.
    Aybe {
        file: PathBuf,
        #[arg(long)]
        r: String,
    },
    /// Skew solution on the double from a named Rota-Baxter operator.
    Rb2ybe {
        file: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Enumerate grid solutions. A3KIT_THREADS caps the worker count.
    Search {
        file: PathBuf,
        #[arg(value_enum)]
        kind: Kind,
        /// Comma-separated rationals.
        #[arg(long, default_value = "-2,-1,0,1,2", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 10_000)]
        max_solutions: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    let path = match &cli.command {
        Command::Check { file, .. }
        | Command::Classify { file }
        | Command::Double { file }
        | Command::Delta { file, .. }
        | Command::Aybe { file, .. }
        | Command::Rb2ybe { file, .. }
        | Command::Search { file, .. } => file,
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let out: Outcome = match &cli.command {
        Command::Check { laws, .. } => cmd_check(&text, laws, format),
        Command::Classify { .. } => cmd_classify(&text, format),
        Command::Double { .. } => cmd_double(&text, format),
        Command::Delta { r, .. } => cmd_delta(&text, r, format),
        Command::Aybe { r, .. } => cmd_aybe(&text, r, format),
        Command::Rb2ybe { map, .. } => cmd_rb2ybe(&text, map, format),
        Command::Search {
            kind,
            grid,
            max_solutions,
            ..
        } => {
            let kind = match kind {
                Kind::Rb => SearchKind::Rb,
                Kind::Aybe => SearchKind::Aybe,
            };
            cmd_search(&text, kind, grid, *max_solutions, env_threads(), format)
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
