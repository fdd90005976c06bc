//! The `multiplate` command line.
//!
//! Exit codes: 0 success, 1 parse, decode, IO or law failure, 2 usage.
//! Diagnostics go to the error stream only.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::minilang::codec::{encode, read_term};
use crate::minilang::passes::{
    collect_vars_fold, count_nodes_fold, parse_pipeline, run_pipeline, Pass,
};
use crate::minilang::{Sort, Term};
use crate::suites::{self, Suite, SuiteOptions, DEFAULT_SIZE, MAX_SIZE};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "multiplate",
    version,
    about = "Generic traversal passes and law suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a comma-separated pass pipeline to a program.
    Run {
        /// Passes to run left to right: rename, constfold.
        #[arg(long = "pass", value_parser = parse_pipeline)]
        passes: Pipeline,
        /// Root sort; inferred from the head constructor by default.
        #[arg(long)]
        root: Option<Sort>,
        /// Output file; standard output by default.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        input: PathBuf,
    },
    /// Run a fold over a program.
    Stats {
        #[arg(long, value_enum)]
        fold: Fold,
        #[arg(long)]
        root: Option<Sort>,
        input: PathBuf,
    },
    /// Run the exhaustive law suites.
    Laws {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Term-size bound for the mini-language universe.
        #[arg(long, default_value_t = DEFAULT_SIZE as u64,
              value_parser = clap::value_parser!(u64).range(1..=MAX_SIZE as u64))]
        size: u64,
        /// Check the deliberately broken fixtures instead of the shipped ones.
        #[arg(long)]
        broken: bool,
    },
}

type Pipeline = Vec<Pass>;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fold {
    Vars,
    Count,
}

/// Runs the command line `args` (program name first) against the given
/// streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().ansi().to_string();
            // Help and version requests are output, not diagnostics.
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match cli.command {
        Command::Run {
            passes,
            root,
            output,
            input,
        } => cmd_run(&passes, root, output.as_deref(), &input, out, err),
        Command::Stats { fold, root, input } => cmd_stats(fold, root, &input, out, err),
        Command::Laws {
            suite,
            size,
            broken,
        } => cmd_laws(
            suite,
            &SuiteOptions {
                size: size as usize,
                broken,
            },
            out,
            err,
        ),
    }
}

fn load(path: &std::path::Path, root: Option<Sort>, err: &mut dyn Write) -> Option<Term> {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return None;
        }
    };
    match read_term(&text, root) {
        Ok(t) => Some(t),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            None
        }
    }
}

fn cmd_run(
    passes: &[Pass],
    root: Option<Sort>,
    output: Option<&std::path::Path>,
    input: &std::path::Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let Some(term) = load(input, root, err) else {
        return EXIT_FAILURE;
    };
    let text = format!("{}\n", encode(&run_pipeline(passes, term)));
    let written = match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn cmd_stats(
    fold: Fold,
    root: Option<Sort>,
    input: &std::path::Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let Some(term) = load(input, root, err) else {
        return EXIT_FAILURE;
    };
    let text = match fold {
        Fold::Vars => collect_vars_fold(&term)
            .iter()
            .map(|v| format!("{v}\n"))
            .collect(),
        Fold::Count => format!("{}\n", count_nodes_fold(&term)),
    };
    match out.write_all(text.as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_FAILURE
        }
    }
}

fn cmd_laws(suite: Suite, opts: &SuiteOptions, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let lines = suites::run(suite, opts);
    let failed = lines.iter().filter(|l| !l.passed()).count();
    for line in &lines {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "{} laws checked, {failed} failed", lines.len());
    if failed == 0 {
        EXIT_OK
    } else {
        let _ = writeln!(err, "error: {failed} law(s) failed");
        EXIT_FAILURE
    }
}
