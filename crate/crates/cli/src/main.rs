use std::io::{self, Write};
use std::process::ExitCode;

use areal_cli::cases::{closed_case, CaseOptions, CASES};
use areal_cli::render::{self, Format};
use areal_cli::{run_suite, CliError, Suite, SuiteConfig};
use areal_core::closed::ZetaForm;
use areal_core::numeric::{mc_areal_mm, mc_zeta_mm, semi_analytic_mm};
use areal_core::{parse, QuadratureSettings};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Areal Mahler measures: closed forms, numerical estimates and the verification suite.
#[derive(Parser)]
#[command(name = "areal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for Monte Carlo estimates.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Monte Carlo sample count.
    #[arg(long, global = true)]
    samples: Option<u64>,
    /// Quadrature tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a registered closed form, or m_D of an affine one-variable expression.
    Closed {
        /// Case name (see --list) or expression.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// List the registered cases.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Power(s) h, comma separated for higher-coords.
        #[arg(long, value_delimiter = ',')]
        h: Vec<u32>,
        /// Exponent s of the zeta Mahler measure.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        #[arg(long, value_enum)]
        form: Option<FormArg>,
    },
    /// Estimate m_D (or Z_D) of an expression numerically.
    Estimate {
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Mc)]
        method: Method,
        /// Estimate Z_D(s, P) instead of m_D(P).
        #[arg(long, allow_hyphen_values = true)]
        zeta_s: Option<f64>,
        /// Variable integrated in closed form by the quadrature method.
        #[arg(long)]
        inner: Option<String>,
    },
    /// Run the verification suite; exits nonzero if any record fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
        #[arg(long, value_enum)]
        output: Option<OutputArg>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Mc,
    Quad,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Product,
    Gamma,
}

#[derive(Serialize)]
struct McReport<'a> {
    expr: &'a str,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta_s: Option<f64>,
    mean: f64,
    stderr: f64,
    count: u64,
    seed: u64,
    discarded: u64,
}

#[derive(Serialize)]
struct QuadReport<'a> {
    expr: &'a str,
    method: &'static str,
    inner: String,
    value: f64,
    tolerance: f64,
}

const DEFAULT_SAMPLES: u64 = 1_000_000;

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Closed { list: true, .. } => {
            for (case, thm) in CASES {
                writeln!(out, "{case:<16} {thm}").map_err(|e| CliError::Output(e.to_string()))?;
            }
        }
        Command::Closed { name, m, n, h, s, form, .. } => {
            let opts = CaseOptions {
                m,
                n,
                h,
                s,
                form: form.map(|f| match f {
                    FormArg::Product => ZetaForm::Product,
                    FormArg::Gamma => ZetaForm::Gamma,
                }),
            };
            let report = closed_case(name.as_deref().unwrap_or_default(), &opts)?;
            render::closed(&mut out, &report, cli.json)?;
        }
        Command::Estimate { expr, method, zeta_s, inner } => {
            let ast = parse(&expr)?;
            match method {
                Method::Mc => {
                    let samples = cli.samples.unwrap_or(DEFAULT_SAMPLES);
                    let est = match zeta_s {
                        Some(s) => mc_zeta_mm(&ast, s, samples, cli.seed)?,
                        None => mc_areal_mm(&ast, samples, cli.seed)?,
                    };
                    let r = McReport {
                        expr: &expr,
                        method: "mc",
                        zeta_s,
                        mean: est.mean,
                        stderr: est.stderr,
                        count: est.count,
                        seed: est.seed,
                        discarded: est.discarded,
                    };
                    render::fields(&mut out, &r, cli.json)?;
                }
                Method::Quad => {
                    if zeta_s.is_some() {
                        return Err(CliError::Unsupported("--zeta-s needs --method mc".into()));
                    }
                    let settings = match cli.tolerance {
                        Some(t) => QuadratureSettings::with_tolerance(t)?,
                        None => QuadratureSettings::default(),
                    };
                    // without --inner, try the variables from last to first
                    let candidates: Vec<String> = match inner {
                        Some(v) => vec![v],
                        None => ast.variables().iter().rev().cloned().collect(),
                    };
                    let mut last = None;
                    for var in candidates {
                        match semi_analytic_mm(&ast, &var, &settings) {
                            Ok(value) => {
                                let r = QuadReport {
                                    expr: &expr,
                                    method: "quad",
                                    inner: var,
                                    value,
                                    tolerance: settings.tolerance(),
                                };
                                render::fields(&mut out, &r, cli.json)?;
                                return Ok(true);
                            }
                            Err(e) => last = Some(e),
                        }
                    }
                    return Err(last.map_or_else(
                        || CliError::Unsupported("expression has no variables".into()),
                        CliError::from,
                    ));
                }
            }
        }
        Command::Verify { suite, output, inject_fault } => {
            let cfg = SuiteConfig {
                suite: match suite {
                    SuiteArg::Fast => Suite::Fast,
                    SuiteArg::Full => Suite::Full,
                },
                seed: cli.seed,
                samples: cli.samples,
                tolerance: cli.tolerance,
                fault: inject_fault,
            };
            let format = match output {
                Some(OutputArg::Text) => Format::Text,
                Some(OutputArg::Json) => Format::Json,
                Some(OutputArg::Csv) => Format::Csv,
                None if cli.json => Format::Json,
                None => Format::Text,
            };
            let report = run_suite(&cfg);
            render::report(&mut out, &report, format)?;
            if format != Format::Text {
                for note in &report.notes {
                    eprintln!("note: {note}");
                }
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
