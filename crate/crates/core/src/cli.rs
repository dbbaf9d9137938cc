//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification came back FALSIFIED, 2 usage,
//! I/O or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::discovery::{self, DiscoveryQuery, Emitted};
use crate::dsl::{self, Format};
use crate::fourier::{linearize_closed, linearize_oracle, HarmonicMode};
use crate::identity::{self, catalog_entries, IdentityStatement};
use crate::polar::{self, PolarForm, ZeroSumTriple};
use crate::Expansion;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "powersum",
    version,
    about = "Linearize shifted cosine power sums and verify power-sum identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fourier expansion of f_n(θ) = Σ_k cos^n(θ + 2kπ/N)
    Linearize {
        /// Number of equally spaced shifts
        #[arg(short = 'N', value_parser = clap::value_parser!(u32).range(1..))]
        shift_count: u32,
        /// Power of the cosine
        #[arg(short = 'n')]
        power: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Plain)]
        format: TextFormat,
        /// Use the binomial-expansion oracle instead of the closed form
        #[arg(long)]
        oracle: bool,
    },
    /// Verify a catalog identity or a .rid file
    Verify {
        /// Catalog name or path to a .rid file
        target: String,
        /// Exact spot checks at random rational points instead of a symbolic proof
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 100, requires = "numeric", value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long, default_value_t = 0, requires = "numeric")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
    /// Enumerate product-equals-square identities
    Discover {
        #[arg(short = 'N', value_parser = clap::value_parser!(u32).range(1..))]
        shift_count: u32,
        #[arg(long = "max-n", value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Diff)]
        mode: ModeArg,
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
    },
    /// Polar form of zero-sum triples
    Polar {
        #[command(subcommand)]
        op: PolarCommand,
    },
    /// List built-in identities
    Catalog {
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
}

#[derive(Subcommand, Debug)]
enum PolarCommand {
    /// (x, y, z) -> (rho, theta)
    Decompose {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(allow_negative_numbers = true)]
        z: f64,
    },
    /// (rho, theta) -> (x, y, z)
    Compose {
        #[arg(allow_negative_numbers = true)]
        rho: f64,
        #[arg(allow_negative_numbers = true)]
        theta: f64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextFormat {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Diff,
    Point,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EmitFormat {
    Latex,
    Dsl,
    Json,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome::usage(rendered)
            } else {
                // --help / --version
                Outcome::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Linearize {
            shift_count,
            power,
            format,
            oracle,
        } => {
            let e: Expansion = if oracle {
                linearize_oracle(shift_count, power)
            } else {
                linearize_closed(shift_count, power)
            };
            let text = match format {
                TextFormat::Plain => e.render_plain(),
                TextFormat::Latex => e.render_latex(),
                TextFormat::Json => e.to_json(),
            };
            Outcome::ok(text + "\n")
        }
        Command::Verify {
            target,
            numeric,
            trials,
            seed,
            format,
        } => {
            let stmt = match resolve_target(&target) {
                Ok(stmt) => stmt,
                Err(message) => return Outcome::usage(message),
            };
            let report = if numeric {
                identity::spot_check(&stmt, trials, seed)
            } else {
                identity::verify(&stmt)
            };
            let text = match format {
                ReportFormat::Plain => report.render_plain(),
                ReportFormat::Json => report.to_json(),
            };
            Outcome {
                code: if report.is_proved() {
                    EXIT_OK
                } else {
                    EXIT_FALSIFIED
                },
                stdout: text + "\n",
                stderr: String::new(),
            }
        }
        Command::Discover {
            shift_count,
            max_n,
            mode,
            emit,
        } => {
            let mode = match mode {
                ModeArg::Diff => HarmonicMode::Difference,
                ModeArg::Point => HarmonicMode::Pointwise,
            };
            let found = discovery::discover(&DiscoveryQuery {
                shift_count,
                max_power: max_n,
                mode,
            });
            Outcome::ok(render_discoveries(&found, emit))
        }
        Command::Polar { op } => match op {
            PolarCommand::Decompose { x, y, z } => match ZeroSumTriple::new(x, y, z) {
                Ok(t) => {
                    let p = polar::decompose(&t);
                    Outcome::ok(format!(
                        "rho={} theta={}\n",
                        significant(p.rho()),
                        significant(p.theta())
                    ))
                }
                Err(e) => Outcome::usage(format!("error: {e}")),
            },
            PolarCommand::Compose { rho, theta } => match PolarForm::new(rho, theta) {
                Ok(p) => {
                    let t = polar::compose(&p);
                    Outcome::ok(format!(
                        "x={} y={} z={}\n",
                        significant(t.x),
                        significant(t.y),
                        significant(t.z)
                    ))
                }
                Err(e) => Outcome::usage(format!("error: {e}")),
            },
        },
        Command::Catalog { format } => Outcome::ok(render_catalog(format)),
    }
}

fn resolve_target(target: &str) -> Result<IdentityStatement, String> {
    if let Some(stmt) = identity::lookup(target) {
        return Ok(stmt);
    }
    let path = Path::new(target);
    let looks_like_file = path.extension().is_some_and(|e| e == "rid") || path.is_file();
    if !looks_like_file {
        return Err(format!(
            "error: unknown identity `{target}`; run `powersum catalog` for the built-in names"
        ));
    }
    let source = std::fs::read_to_string(path)
        .map_err(|e| format!("error: cannot read {}: {e}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| target.to_string());
    dsl::parse_named(&name, &source).map_err(|e| format!("error: {}: {e}", path.display()))
}

fn render_discoveries(found: &[discovery::DiscoveredIdentity], emit: Option<EmitFormat>) -> String {
    let mut out = String::new();
    match emit {
        None => {
            for d in found {
                writeln!(
                    out,
                    "m={} n={} p={} harmonic={} P={} Q={}",
                    d.m, d.n, d.p, d.harmonic, d.square_coeff, d.product_coeff
                )
                .unwrap();
            }
        }
        Some(EmitFormat::Json) => {
            out = discovery::to_json(found);
            out.push('\n');
        }
        Some(EmitFormat::Dsl) => {
            for d in found {
                let line = match discovery::emit_statement(d) {
                    Emitted::Statement(s) => dsl::render(&s, Format::Plain),
                    Emitted::Trigonometric(t) => t,
                };
                writeln!(out, "{line}").unwrap();
            }
        }
        Some(EmitFormat::Latex) => {
            for d in found {
                let line = match discovery::emit_statement(d) {
                    Emitted::Statement(s) => dsl::render(&s, Format::Latex),
                    Emitted::Trigonometric(_) => discovery::trig_latex(d),
                };
                writeln!(out, "{line}").unwrap();
            }
        }
    }
    out
}

fn render_catalog(format: ReportFormat) -> String {
    let entries = catalog_entries();
    match format {
        ReportFormat::Plain => {
            let width = entries
                .iter()
                .map(|e| e.statement.name.len())
                .max()
                .unwrap_or(0);
            let mut out = String::new();
            for e in &entries {
                writeln!(out, "{:width$}  {}", e.statement.name, e.description).unwrap();
            }
            out
        }
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Item<'a> {
                name: &'a str,
                description: &'a str,
                statement: String,
            }
            let items: Vec<Item> = entries
                .iter()
                .map(|e| Item {
                    name: &e.statement.name,
                    description: e.description,
                    statement: dsl::render(&e.statement, Format::Plain),
                })
                .collect();
            serde_json::to_string(&items).expect("catalog serializes") + "\n"
        }
    }
}

/// Fixed-point rendering with 15 significant digits.
fn significant(value: f64) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{:.14}", value.abs());
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (14 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
