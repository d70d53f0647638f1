//! `wbound`: bounds, exclusion reports, spectra, residual codes and table
//! reproduction from the command line.
//!
//! Exit status: 0 on success, 1 when a check fails (table mismatch, audit or
//! self-test violation, violated bound), 2 on usage or input errors.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wbound_core::bounds::evaluate;
use wbound_core::code::{
    engine, parse_generator, residual_with_distance, spectrum, spectrum_with, weight, CodeError,
    CodeParams, CodewordWalker, LinearCode, RankPolicy, DEFAULT_ENUMERATION_LIMIT,
};
use wbound_core::exclusion::{audit_with_spectrum, criteria, ExclusionReport};
use wbound_core::properties::run_property_suite;
use wbound_core::reproduce::compare_table;

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "wbound",
    version,
    about = "Weight-aware bounds and excluded weights for linear codes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Maximum number of codewords to enumerate.
    #[arg(
        long,
        env = "WBOUND_ENUM_LIMIT",
        default_value_t = DEFAULT_ENUMERATION_LIMIT,
        value_parser = clap::value_parser!(u64).range(1..),
        global = true
    )]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    q: u64,
}

impl ParamArgs {
    fn params(&self) -> CodeParams {
        CodeParams::new(self.n, self.k, self.d, self.q)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every applicable bound for (n, k, d, q) and optionally a weight w.
    Bounds {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        w: Option<u64>,
    },
    /// Excluded-weight sets for (n, k, d, q).
    Exclude {
        #[command(flatten)]
        p: ParamArgs,
        /// chen-xie, singleton, griesmer or all.
        #[arg(long, default_value = "all")]
        method: String,
        /// Keep weights above n instead of clamping to [1, n].
        #[arg(long)]
        raw: bool,
    },
    /// Weight spectrum of a generator-matrix file.
    Spectrum {
        file: PathBuf,
        /// Spectrum engine; defaults to the first one supporting the code.
        #[arg(long)]
        engine: Option<String>,
    },
    /// Residual code with respect to a codeword of the given weight.
    Residual {
        file: PathBuf,
        #[arg(long)]
        weight: usize,
        /// 0-based index among weight-W codewords in message order.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Recompute a printed comparison table and grade every cell.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Check every exclusion criterion against a code's true spectrum.
    Audit { file: PathBuf },
    /// Run the seeded property suite over random small codes.
    Selftest {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1234567)]
        seed: u64,
    },
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, Copy)]
struct RunConfig {
    enumeration_limit: u64,
    clamp: bool,
    output_format: Format,
    seed: u64,
    trials: u64,
}

enum Failure {
    /// A check ran and failed; the report is still printed.
    Check(String),
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_generator(&text, RankPolicy::Reject)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn checked(report: String, ok: bool) -> Outcome {
    if ok {
        Ok(report)
    } else {
        Err(Failure::Check(report))
    }
}

fn run(cmd: &Command, cfg: RunConfig) -> Outcome {
    let fmt = cfg.output_format;
    match cmd {
        Command::Bounds { p, w } => {
            let params = p.params();
            let verdicts = evaluate(&params, *w)?;
            let ok = verdicts.iter().all(|v| v.holds);
            checked(render::bounds(&params, *w, &verdicts, fmt), ok)
        }
        Command::Exclude { p, method, .. } => {
            let methods: Vec<&str> = match method.as_str() {
                "all" => vec!["chen-xie", "singleton", "griesmer", "union"],
                m if criteria().iter().any(|c| c.name() == m) => vec![m],
                m => {
                    let known: Vec<&str> = criteria().iter().map(|c| c.name()).collect();
                    return Err(Failure::Input(format!(
                        "--method: unknown criterion `{m}` (expected {} or all)",
                        known.join(", ")
                    )));
                }
            };
            let report = ExclusionReport::build(&p.params(), cfg.clamp)?;
            Ok(render::exclusion(&report, &methods, fmt))
        }
        Command::Spectrum { file, engine: name } => {
            let code = load(file)?;
            let spec = match name {
                None => spectrum(&code, cfg.enumeration_limit)?,
                Some(name) => {
                    let e = engine(name).ok_or_else(|| {
                        Failure::Input(format!("--engine: unknown engine `{name}`"))
                    })?;
                    if !e.supports(&code) {
                        return Err(Failure::Input(format!(
                            "--engine: `{name}` does not support this code"
                        )));
                    }
                    spectrum_with(&code, e, cfg.enumeration_limit)?
                }
            };
            Ok(render::spectrum(&code.params_from(&spec), &spec, fmt))
        }
        Command::Residual {
            file,
            weight: w,
            index,
        } => {
            let code = load(file)?;
            let spec = spectrum(&code, cfg.enumeration_limit)?;
            let params = code.params_from(&spec);
            let d = params.d as usize;
            let mut walker = CodewordWalker::new(&code);
            let mut seen = 0;
            let mut found = None;
            while walker.advance() {
                if *w > 0 && weight(walker.codeword()) == *w {
                    if seen == *index {
                        found = Some((walker.message().to_vec(), walker.codeword().to_vec()));
                        break;
                    }
                    seen += 1;
                }
            }
            let Some((message, c)) = found else {
                return Err(Failure::Input(format!(
                    "--index: code has {} codeword(s) of weight {w}, index {index} requested",
                    spec.count(*w)
                )));
            };
            let r = match residual_with_distance(&code, &c, d) {
                Ok(r) => r,
                Err(e @ CodeError::ResidualRankMismatch { .. }) => {
                    return Err(Failure::Check(format!("{e}\n")))
                }
                Err(e) => return Err(e.into()),
            };
            let rd = spectrum(&r.code, cfg.enumeration_limit)?
                .min_distance()
                .expect("nonzero dimension");
            let ok = !r.in_window || rd as i64 >= r.distance_floor();
            checked(render::residual(&params, &message, &c, &r, rd, fmt), ok)
        }
        Command::Tables { which } => {
            let t = compare_table(*which)?;
            checked(render::table(&t, fmt), t.passes())
        }
        Command::Audit { file } => {
            let code = load(file)?;
            let spec = spectrum(&code, cfg.enumeration_limit)?;
            let a = audit_with_spectrum(&code, spec)?;
            checked(render::audit(&a, fmt), a.is_sound())
        }
        Command::Selftest { .. } => {
            let r = run_property_suite(cfg.trials, cfg.seed, cfg.enumeration_limit)?;
            checked(render::selftest(&r, fmt), r.passes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (seed, trials) = match cli.command {
        Command::Selftest { trials, seed } => (seed, trials),
        _ => (1234567, 1000),
    };
    let cfg = RunConfig {
        enumeration_limit: cli.limit,
        clamp: !matches!(cli.command, Command::Exclude { raw: true, .. }),
        output_format: cli.format,
        seed,
        trials,
    };
    match run(&cli.command, cfg) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
