use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use chartab_core::mnrule::steinberg_value;
use chartab_core::partitions::enumerate_patterns;
use chartab_core::{ClassType, ColoredPattern, Engine, Partition, Rational, RationalFunctionQ};

use crate::cache::Cache;
use crate::record::{write_csv, write_json_lines, CharRecord};
use crate::verify::{self, Report};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "chartab", version, about = "Unipotent character values of GL_n(F_q)")]
pub struct Cli {
    /// Memo cache file, loaded before and appended to after the command.
    #[arg(long, global = true, env = "CHARTAB_CACHE")]
    pub cache: Option<PathBuf>,

    /// Print recursion statistics to standard error.
    #[arg(long, global = true)]
    pub stats: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One character value.
    Charvalue {
        /// Label as JSON, e.g. '[{"d":1,"parts":[2]}]'.
        #[arg(long)]
        label: String,
        /// Unipotent class, e.g. "2,1".
        #[arg(long)]
        mu: String,
        #[arg(long)]
        eval_q: Option<Rational>,
    },
    /// Every label of size n against every unipotent class.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        eval_q: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check the engine against independent identities.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: u32,
        /// Field size for the orthogonality suite.
        #[arg(long)]
        q: Option<Rational>,
    },
    /// Steinberg character on an arbitrary class type.
    Steinberg {
        /// Class as JSON, e.g. '[{"f_deg":1,"parts":[1]},{"f_deg":2,"parts":[1]}]'.
        #[arg(long)]
        class: String,
        #[arg(long)]
        eval_q: Option<Rational>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Orthogonality,
    Closedforms,
    Steinberg,
}

#[derive(Serialize)]
struct SteinbergRecord {
    class: ClassType,
    value: RationalFunctionQ,
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    value_at_q: Option<String>,
}

enum Failure {
    Usage(String),
    Verify,
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn run(cli: Cli) -> ExitCode {
    let engine = Engine::new();
    let mut cache = cli.cache.as_ref().map(|path| {
        let (cache, report) = Cache::open(path, &engine);
        for w in &report.warnings {
            eprintln!("warning: {w}");
        }
        cache
    });

    let outcome = dispatch(&cli.command, &engine);

    if let Some(cache) = cache.as_mut() {
        if let Err(e) = cache.save(&engine) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    if cli.stats {
        let s = engine.stats();
        eprintln!("stats: calls={} hits={} entries={}", s.calls, s.hits, s.entries);
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn dispatch(command: &Command, engine: &Engine) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Charvalue { label, mu, eval_q } => {
            let label: ColoredPattern = label.parse().map_err(usage)?;
            let mu: Partition = mu.parse().map_err(usage)?;
            let value = engine.char_value(&label, &mu).map_err(usage)?;
            let record = CharRecord::new(label, mu, &value, eval_q.as_ref()).map_err(usage)?;
            write_json_lines(&mut out, &[record]).map_err(usage)?;
        }
        Command::Table {
            n,
            max_degree,
            eval_q,
            format,
            jobs,
        } => {
            if *n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            let records = table(engine, *n, max_degree.unwrap_or(*n), eval_q.as_ref(), *jobs)?;
            match format {
                Format::Json => write_json_lines(&mut out, &records).map_err(usage)?,
                Format::Csv => write_csv(&mut out, &records).map_err(usage)?,
            }
        }
        Command::Verify { suite, n, q } => {
            let report = match suite {
                Suite::Oracle => verify::oracle(engine, *n),
                Suite::Closedforms => verify::closed_forms(engine, *n),
                Suite::Steinberg => verify::steinberg(engine, *n),
                Suite::Orthogonality => {
                    let q0 = q
                        .as_ref()
                        .ok_or_else(|| usage("the orthogonality suite needs --q"))?;
                    verify::orthogonality(engine, *n, q0).map_err(usage)?
                }
            };
            print_report(&mut out, &report).map_err(usage)?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::Steinberg { class, eval_q } => {
            let class: ClassType = class.parse().map_err(usage)?;
            let value = steinberg_value(&class);
            let value_at_q = match eval_q {
                Some(q0) => Some(value.eval(q0).map_err(usage)?.to_string()),
                None => None,
            };
            let record = SteinbergRecord {
                class,
                text: value.to_string(),
                value,
                value_at_q,
            };
            serde_json::to_writer(&mut out, &record).map_err(usage)?;
            writeln!(out).map_err(usage)?;
        }
    }
    Ok(())
}

/// Labels in enumeration order, classes in `Partition::all` order.
fn table(
    engine: &Engine,
    n: u32,
    max_degree: u32,
    eval_q: Option<&Rational>,
    jobs: usize,
) -> Result<Vec<CharRecord>, Failure> {
    let classes = Partition::all(n);
    let cells: Vec<(usize, ColoredPattern, Partition)> = enumerate_patterns(n, max_degree)
        .into_iter()
        .flat_map(|label| classes.iter().map(move |mu| (label.clone(), mu.clone())))
        .enumerate()
        .map(|(i, (l, m))| (i, l, m))
        .collect();
    let cell = |(i, label, mu): &(usize, ColoredPattern, Partition)| {
        let value = engine.char_value(label, mu).map_err(|e| e.to_string())?;
        CharRecord::new(label.clone(), mu.clone(), &value, eval_q).map(|r| (*i, r))
    };
    let mut indexed: Vec<(usize, CharRecord)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(usage)?;
        pool.install(|| cells.par_iter().map(cell).collect::<Result<_, _>>())
    } else {
        cells.iter().map(cell).collect::<Result<_, _>>()
    }
    .map_err(Failure::Usage)?;
    indexed.sort_by_key(|(i, _)| *i);
    Ok(indexed.into_iter().map(|(_, r)| r).collect())
}

fn print_report<W: Write>(out: &mut W, report: &Report) -> io::Result<()> {
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {}", c.description)?;
    }
    writeln!(
        out,
        "{} of {} identities hold",
        report.checks.len() - report.failures(),
        report.checks.len()
    )
}
