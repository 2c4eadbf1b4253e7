//! The `toric` command line: parses input documents, runs checks and classifications,
//! and reports in text or JSON.
//!
//! Exit codes: `0` success or property holds, `1` negative verdict on valid input,
//! `2` invalid input.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

mod report;

pub use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "toric",
    version,
    about = "Exact checks and classifications for toric moment data"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Process the documents of a directory in parallel (output order stays sorted).
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix.
    Snf { file: PathBuf },
    /// Structural checks.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        file: PathBuf,
    },
    /// Cohomology of a simplicial complex.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// `Z`, `Q` or `lattice:n`.
        #[arg(long, default_value = "Z", value_parser = parse_coefficients)]
        coeff: Coefficients,
    },
    /// Cohomology of a complex relative to its subcomplex, with the exact-sequence check.
    Relative {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Classify moment data over a modelled orbit space.
    Classify { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Unimodular,
    Cone,
    GoodCone,
    Polytope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Rationals,
    Lattice(usize),
}

fn parse_coefficients(text: &str) -> Result<Coefficients, String> {
    match text {
        "Z" | "z" => Ok(Coefficients::Integers),
        "Q" | "q" => Ok(Coefficients::Rationals),
        _ => {
            let n = text
                .strip_prefix("lattice:")
                .ok_or_else(|| format!("expected Z, Q or lattice:n, got {text:?}"))?;
            match n.parse::<usize>() {
                Ok(n) if n >= 1 => Ok(Coefficients::Lattice(n)),
                _ => Err(format!(
                    "lattice rank must be a positive integer, got {n:?}"
                )),
            }
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub(crate) fn verdict(&self, ok: bool, text: &str) -> String {
        if !self.color {
            return text.to_string();
        }
        let code = if ok { 32 } else { 31 };
        format!("\x1b[{code}m{text}\x1b[0m")
    }
}

/// Runs the command line given by `args` (including the program name).
pub fn run<I, T>(args: I, style: Style) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    execute(&cli, style)
}

fn target(command: &Command) -> &Path {
    match command {
        Command::Snf { file }
        | Command::Check { file, .. }
        | Command::Cohomology { file, .. }
        | Command::Relative { file, .. }
        | Command::Classify { file } => file,
    }
}

fn json_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json") && p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

fn process(cli: &Cli, path: &Path, style: Style) -> Report {
    match fs::read_to_string(path) {
        Ok(text) => report::dispatch(&cli.command, &text, style),
        Err(e) => Report::invalid(format!("cannot read {}: {e}", path.display())),
    }
}

pub fn execute(cli: &Cli, style: Style) -> Outcome {
    let path = target(&cli.command);
    if !path.is_dir() {
        let r = process(cli, path, style);
        return r.into_outcome(cli.json);
    }
    let files = match json_files(path) {
        Ok(f) => f,
        Err(e) => {
            return Report::invalid(format!("cannot list {}: {e}", path.display()))
                .into_outcome(cli.json)
        }
    };
    let reports: Vec<Report> = if cli.parallel {
        files.par_iter().map(|f| process(cli, f, style)).collect()
    } else {
        files.iter().map(|f| process(cli, f, style)).collect()
    };
    let code = reports.iter().map(|r| r.code).max().unwrap_or(0);
    if cli.json {
        let entries: Vec<Value> = files
            .iter()
            .zip(&reports)
            .map(
                |(f, r)| json!({"file": f.display().to_string(), "exit": r.code, "report": r.json}),
            )
            .collect();
        let stdout = serde_json::to_string_pretty(&Value::Array(entries))
            .expect("json values serialize")
            + "\n";
        return Outcome {
            code,
            stdout,
            stderr: String::new(),
        };
    }
    let mut stdout = String::new();
    let mut stderr = String::new();
    for (f, r) in files.iter().zip(&reports) {
        stdout.push_str(&format!("== {} ==\n{}", f.display(), r.text));
        if !r.error.is_empty() {
            stderr.push_str(&format!("{}: {}\n", f.display(), r.error));
        }
    }
    Outcome {
        code,
        stdout,
        stderr,
    }
}
