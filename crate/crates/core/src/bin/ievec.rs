//! Command-line front end: generate systems, standardize, solve (Möbius or
//! randomized tube), validate, and report statistics, over the stable JSON
//! interchange formats.
//!
//! Exit codes: 0 ok, 2 bad input, 3 empty union, 4 restarts exhausted,
//! 5 validation failure, 6 resource budget exceeded.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ievec::error::Error;
use ievec::generators;
use ievec::json::{self, TubeMeta};
use ievec::mobius::mobius_ie_vector;
use ievec::standardize::{compute_nerve_with_budget, DEFAULT_NERVE_BUDGET};
use ievec::tube::{build_tube, d_bound};
use ievec::validate::{check_ie_vector, measure_oracle_check, Report};

#[derive(Parser)]
#[command(name = "ievec", version, about = "Small inclusion-exclusion formulas for finite set systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one of the built-in set-system families
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Compute the unique IE-vector supported on the Venn diagram
    Mobius {
        #[command(flatten)]
        io: InOut,
    },
    /// Compute a ±1 abstract-tube IE-vector via random permutations
    Tube {
        #[command(flatten)]
        io: InOut,
        /// RNG seed for the permutation stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Permutation draws before giving up
        #[arg(long, default_value_t = 64)]
        max_restarts: u32,
    },
    /// Check an IE-vector against a system, exactly and with measure spot checks
    Validate {
        /// System file (set_system or venn JSON), "-" for stdin
        #[arg(long)]
        system: String,
        /// IE-vector file, "-" for stdin
        #[arg(long)]
        vector: String,
        /// Number of random measures to test
        #[arg(long, default_value_t = 20)]
        trials: u32,
        /// RNG seed for the random measures
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print summary statistics of a system
    Stats {
        /// Input file (set_system or venn JSON), "-" for stdin
        #[arg(long = "in")]
        input: String,
        /// Also count the nerve faces (exponential; budget-guarded)
        #[arg(long)]
        nerve: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The family whose only IE-vector is the full 2^n − 1 term formula
    Uniqueness {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// The family with exponentially large Möbius coefficients
    Exponential {
        #[arg(long)]
        ell: u32,
        #[arg(long, default_value_t = 5)]
        y: u32,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// The subspace-lattice family of PG(d, q), q prime
    Projective {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// A random standardized system with a prescribed Venn size
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Args)]
struct InOut {
    /// Input file (set_system or venn JSON), "-" for stdin
    #[arg(long = "in")]
    input: String,
    /// Output file, "-" for stdout
    #[arg(long, default_value = "-")]
    out: String,
}

fn read_source(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading {path}: {e}")))
    }
}

fn write_sink(path: &str, text: &str) -> Result<(), Error> {
    if path == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidInput(format!("writing stdout: {e}")))
    } else {
        if let Some(dir) = PathBuf::from(path).parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::InvalidInput(format!("creating {}: {e}", dir.display())))?;
            }
        }
        std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("writing {path}: {e}")))
    }
}

#[derive(Serialize)]
struct StatsOut {
    n: u32,
    m: usize,
    d_bound: u32,
    mobius_l1: String,
    mobius_support: usize,
    max_abs_coeff: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    nerve_size: Option<usize>,
}

#[derive(Serialize)]
struct ValidateOut {
    passed: bool,
    exact: Report,
    measures: Report,
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Gen { family } => {
            let (fs, out) = match family {
                Family::Uniqueness { n, out } => (generators::gen_uniqueness(n)?, out),
                Family::Exponential { ell, y, out } => (generators::gen_exponential(ell, y)?, out),
                Family::Projective { d, q, out } => (generators::gen_projective(d, q)?.0, out),
                Family::Random { n, m, seed, out } => (generators::gen_random(n, m, seed)?, out),
            };
            write_sink(&out, &json::write_set_system(&fs))
        }
        Command::Mobius { io } => {
            let venn = json::read_as_venn(&read_source(&io.input)?)?;
            let x = mobius_ie_vector(&venn);
            write_sink(&io.out, &json::write_ie_vector(&x, None))
        }
        Command::Tube { io, seed, max_restarts } => {
            let venn = json::read_as_venn(&read_source(&io.input)?)?;
            let result = build_tube(&venn, seed, max_restarts)?;
            let meta = TubeMeta {
                permutation: result.permutation.clone(),
                restarts: result.restarts,
                d_bound: result.d_bound,
                complex_size: result.complex.len(),
            };
            write_sink(&io.out, &json::write_ie_vector(&result.ie, Some(&meta)))
        }
        Command::Validate { system, vector, trials, seed } => {
            let venn = json::read_as_venn(&read_source(&system)?)?;
            let doc = json::read_ie_vector(&read_source(&vector)?)?;
            if doc.vector.n() != venn.n() {
                return Err(Error::InvalidInput(format!(
                    "n mismatch: system has n = {}, vector has n = {}",
                    venn.n(),
                    doc.vector.n()
                )));
            }
            let exact = check_ie_vector(&venn, &doc.vector);
            let measures = measure_oracle_check(&venn, &doc.vector, trials.max(1), seed);
            let passed = exact.passed() && measures.passed();
            let report = ValidateOut { passed, exact, measures };
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            write_sink("-", &text)?;
            if passed {
                Ok(())
            } else {
                // distinct from input errors: the artifact itself is invalid
                std::io::stdout().flush().ok();
                std::process::exit(5);
            }
        }
        Command::Stats { input, nerve } => {
            let venn = json::read_as_venn(&read_source(&input)?)?;
            let x = mobius_ie_vector(&venn);
            let nerve_size = if nerve {
                Some(compute_nerve_with_budget(&venn, DEFAULT_NERVE_BUDGET)?.len())
            } else {
                None
            };
            let stats = StatsOut {
                n: venn.n(),
                m: venn.m(),
                d_bound: if venn.m() >= 2 { d_bound(venn.n(), venn.m()) } else { venn.n() },
                mobius_l1: x.l1_norm().to_string(),
                mobius_support: x.support_size(),
                max_abs_coeff: x.max_abs_coeff().to_string(),
                nerve_size,
            };
            let mut text = serde_json::to_string_pretty(&stats).expect("stats serialize");
            text.push('\n');
            write_sink("-", &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
