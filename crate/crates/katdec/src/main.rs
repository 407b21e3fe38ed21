use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use katdec::{run_source, Options, Report, Status};
use katdec_core::syntax::{DEFAULT_ATOM_LIMIT, MAX_ATOM_LIMIT};
use katdec_core::DEFAULT_MAX_STATES;

/// Decide KAT equations, program equivalences and Hoare triples.
///
/// Exit status: 0 proved, 1 not proved, 2 parse or semantic error,
/// 3 resource limit. With several files the worst status wins.
#[derive(Parser, Debug)]
#[command(name = "katdec", version)]
struct Cli {
    /// Compare bounded languages up to K letters instead of deciding.
    #[arg(long, value_name = "K")]
    oracle_bound: Option<usize>,
    /// Give up after exploring N pairs of derivative states.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_STATES)]
    max_states: usize,
    /// Refuse signatures with more than 2^n atoms.
    #[arg(long, value_name = "n", default_value_t = DEFAULT_ATOM_LIMIT as u32,
          value_parser = clap::value_parser!(u32).range(0..=MAX_ATOM_LIMIT as i64))]
    atoms_limit: u32,
    /// Extra hypothesis, as on an `assume` line.
    #[arg(short = 'H', value_name = "EQUATION")]
    hypotheses: Vec<String>,
    /// Goal files; `-` reads standard input.
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

fn load(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn check_file(path: &PathBuf, opts: &Options) -> Report {
    let name = path.display().to_string();
    match load(path) {
        Ok(src) => run_source(&name, &src, opts),
        Err(e) => Report { status: Status::Error, stdout: String::new(), stderr: format!("{name}: {e}\n") },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        max_states: cli.max_states,
        atom_limit: cli.atoms_limit as usize,
        oracle_bound: cli.oracle_bound,
        hypotheses: cli.hypotheses,
    };
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = cli.files.iter().map(|f| s.spawn(|| check_file(f, &opts))).collect();
        handles.into_iter().map(|h| h.join().expect("checker thread panicked")).collect()
    });
    let mut worst = Status::Proved;
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    for r in reports {
        let _ = err.write_all(r.stderr.as_bytes());
        let _ = out.write_all(r.stdout.as_bytes());
        worst = worst.max(r.status);
    }
    ExitCode::from(worst.exit_code())
}
