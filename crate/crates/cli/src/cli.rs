//! Argument parsing, file IO and exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use posetrep_core::{Bound, Params, Poset};

use crate::commands::{self, CliError, Outcome, Syntax, EXIT_OK, EXIT_USAGE};
use crate::format::{parse_poset, write_poset};
use crate::render::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "posetrep", version, about = "Check (alpha, beta)-representability of finite posets")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write the output here instead of stdout (replaced atomically).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    /// Meets of fewer than ALPHA elements: an integer >= 2 or "omega".
    #[arg(long, default_value = "3", value_parser = parse_bound)]
    pub alpha: Bound,
    /// Joins of fewer than BETA elements: an integer >= 2 or "omega".
    #[arg(long, default_value = "3", value_parser = parse_bound)]
    pub beta: Bound,
}

impl ParamArgs {
    fn params(self) -> Params {
        Params { alpha: self.alpha, beta: self.beta }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide representability by filters and cross-check with the game.
    Check {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Play the game from ({P}, {Q}) and show how long the defender lasts.
    Game {
        file: PathBuf,
        p: String,
        q: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Also report whether the defender survives N rounds.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the axioms psi_{r,s,0} .. psi_{r,s,n}.
    Axioms {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "tptp")]
        syntax: Syntax,
    },
    /// Evaluate psi_{r,s,k} on a poset for k = 0 .. n.
    Eval {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        /// Decide through the game instead of evaluating the formulas.
        #[arg(long)]
        via_game: bool,
    },
    /// Build and verify a representation by filters.
    Represent {
        file: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Lattice, semilattice and distributivity report.
    Analyze { file: PathBuf },
    /// Write the product of two posets as a poset file.
    Product { left: PathBuf, right: PathBuf },
}

fn parse_bound(s: &str) -> Result<Bound, String> {
    if s.eq_ignore_ascii_case("omega") {
        return Ok(Bound::Omega);
    }
    let k: u32 = s.parse().map_err(|_| format!("expected an integer >= 2 or \"omega\", got {s:?}"))?;
    Bound::finite(k).map_err(|e| e.to_string())
}

fn read_poset(path: &Path) -> Result<Poset, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    parse_poset(&text).map_err(|source| CliError::Parse { path: shown, source })
}

/// Runs a parsed command; returns the exit code and the rendered output.
pub fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let outcome: Outcome = match &cli.command {
        Command::Check { file, params } => commands::check(&read_poset(file)?, params.params())?,
        Command::Game { file, p, q, params, n } => commands::game(&read_poset(file)?, p, q, params.params(), *n)?,
        Command::Axioms { r, s, n, syntax } => commands::axioms(*r, *s, *n, *syntax)?,
        Command::Eval { file, r, s, n, via_game } => commands::eval(&read_poset(file)?, *r, *s, *n, *via_game)?,
        Command::Represent { file, params } => commands::represent(&read_poset(file)?, params.params())?,
        Command::Analyze { file } => commands::analyze(&read_poset(file)?),
        Command::Product { left, right } => {
            let product = read_poset(left)?.product(&read_poset(right)?)?;
            let text = match cli.format {
                Format::Text => write_poset(&product),
                Format::Json => {
                    let mut r = Report::new();
                    r.json_member("elements", product.names().iter().map(|n| serde_json::Value::from(n.as_str())).collect());
                    let le = product
                        .covers()
                        .iter()
                        .map(|&(a, b)| serde_json::json!([product.name(a), product.name(b)]))
                        .collect();
                    r.json_member("le", le);
                    r.render(Format::Json)
                }
            };
            return Ok((EXIT_OK, text));
        }
    };
    Ok((outcome.code, outcome.report.render(cli.format)))
}

fn write_atomically(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (code, text) = match execute(&cli) {
        Ok(result) => result,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => write_atomically(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "stdout".into(),
            source,
        }),
    };
    match written {
        Ok(()) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
