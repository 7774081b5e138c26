//! The `ibs` command line: `check`, `recognize`, `tables`, `fuzz`, `derive`.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 property violation
//! (criterion and oracle disagree), 4 search budget exceeded.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bases::{basis_catalog, derive_bounded, Derivation};
use crate::criteria::Criterion;
use crate::error::Error;
use crate::fuzz::fuzz;
use crate::parser::{parse_identity, parse_system, Identity};
use crate::recognizer::{rs_recognize_with, MembershipOracle, RecognizeOptions};
use crate::semigroups::{catalog_with, satisfies_bruteforce, CatalogParams};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ibs", version, about = "Identity checking for the indicator Burnside semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide an identity in one semigroup with its polynomial criterion.
    Check {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        identity: String,
        /// Also evaluate exhaustively in the table and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether an identity file defines a Rees-Sushkevich variety.
    Recognize {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Test membership by exhaustive evaluation instead of the criteria.
        #[arg(long)]
        brute_force: bool,
        /// Also test K_n for every n up to this bound.
        #[arg(long)]
        k_bound: Option<u32>,
    },
    /// Dump a catalog table as JSON.
    Tables {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Compare a criterion with exhaustive evaluation on all small identities.
    Fuzz {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 2)]
        letters: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Search for a derivation of an identity from a basis.
    Derive {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Outcome {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::System(_) | Error::EmptySystem => EXIT_PARSE,
        _ => EXIT_USAGE,
    }
}

fn fail_with(e: Error) -> Outcome {
    Outcome::fail(error_code(&e), format!("error: {e}\n"))
}

fn holds_word(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => fail_with(e),
    }
}

fn execute(command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Check { semigroup, n, r, d, identity, oracle } => {
            let id = parse_identity(&identity)?;
            let criterion = Criterion::with_params(&semigroup, CatalogParams { n, r, d })?;
            let verdict = criterion.holds(&id);
            if !oracle {
                return Ok(Outcome::ok(format!("{}\n", holds_word(verdict))));
            }
            let brute = satisfies_bruteforce(&criterion.semigroup(), &id);
            let mut out = format!("criterion: {}\noracle: {}\n", holds_word(verdict), holds_word(brute));
            if verdict == brute {
                out.push_str("agree\n");
                Ok(Outcome::ok(out))
            } else {
                out.push_str("MISMATCH\n");
                Ok(Outcome { code: EXIT_VIOLATION, stdout: out, stderr: String::new() })
            }
        }
        Command::Recognize { file, json, brute_force, k_bound } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", file.display())))?;
            let system = parse_system(&text)?.with_source(file.display().to_string());
            let oracle = if brute_force { MembershipOracle::BruteForce } else { MembershipOracle::Criteria };
            let report = rs_recognize_with(&system, RecognizeOptions { oracle, k_bound });
            Ok(Outcome::ok(if json { format!("{}\n", report.to_json()) } else { report.to_string() }))
        }
        Command::Tables { semigroup, n, r, d } => {
            let s = catalog_with(&semigroup, CatalogParams { n, r, d })?;
            Ok(Outcome::ok(format!("{}\n", s.to_json())))
        }
        Command::Fuzz { semigroup, n, r, d, letters, max_len, json } => {
            if letters == 0 || max_len == 0 {
                return Err(Error::Parameter("letters and max-len must be positive".into()));
            }
            let criterion = Criterion::with_params(&semigroup, CatalogParams { n, r, d })?;
            let report = fuzz(&criterion, letters, max_len);
            let out = if json {
                format!("{}\n", serde_json::to_string_pretty(&report).expect("reports serialize"))
            } else {
                let mut s = format!("{report}\n");
                for e in &report.examples {
                    s.push_str(&format!("  mismatch: {e}\n"));
                }
                s
            };
            let code = if report.mismatches == 0 { 0 } else { EXIT_VIOLATION };
            Ok(Outcome { code, stdout: out, stderr: String::new() })
        }
        Command::Derive { basis, n, identity, max_len, max_states } => {
            let id: Identity = parse_identity(&identity)?;
            let basis = basis_catalog(&basis, n)?;
            match derive_bounded(&basis, &id, max_len, max_states)? {
                Derivation::Found(trace) if trace.is_empty() => Ok(Outcome::ok("trivial identity\n".into())),
                Derivation::Found(trace) => Ok(Outcome::ok(trace.to_string())),
                Derivation::Exhausted { states } => {
                    Ok(Outcome::ok(format!("not found ({states} words within length {max_len} explored)\n")))
                }
                Derivation::BudgetExceeded { states } => Ok(Outcome {
                    code: EXIT_BUDGET,
                    stdout: format!("not found (budget of {states} words exceeded)\n"),
                    stderr: String::new(),
                }),
            }
        }
    }
}
