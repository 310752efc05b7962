use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncfact_core::export::{hasse_dot, render_ncs_svg};
use ncfact_core::ncs::NcsPartition;
use ncfact_core::session::{complex_kinds, poset_kinds, GroupSpec, Session};
use ncfact_core::verify::{run_suite, VerifyConfig};
use ncfact_core::{Error, Limits};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_DATA: u8 = 4;

#[derive(Parser)]
#[command(name = "ncfact", version, about = "Factorization posets, weighted complexes and noncrossing partitions")]
struct Cli {
    /// Overrides NCFACT_SIZE_GUARD, the cap on enumerated elements.
    #[arg(long, global = true)]
    size_guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a factorization poset or interval.
    Enumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// fact-linear, fact-circular, comp-linear, comp-circular or interval.
        #[arg(long, default_value = "fact-linear")]
        poset: String,
        /// Only list elements of this rank.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Summarize an order complex, interval complex or rank stratum.
    Complex {
        #[command(flatten)]
        group: GroupArgs,
        /// order, interval or stratum.
        #[arg(long, default_value = "interval")]
        kind: String,
        /// Stratum rank.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a partition of the circle given as JSON.
    Render {
        /// JSON file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Add the panel of base points under z -> z^d.
        #[arg(long)]
        panel: bool,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        /// paper-counts, catalan, armstrong, top-poset, ncs, psi or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Restrict degree-parametrized suites to one degree.
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// sym:d or int:n.
    #[arg(long, default_value = "sym:3")]
    group: String,
    /// Element to factor; defaults to the d-cycle or to n.
    #[arg(long)]
    target: Option<String>,
    /// Element labels for symmetric groups: letters or cycle.
    #[arg(long, default_value = "letters")]
    labels: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Usage(_) | Error::UnknownName { .. } => EXIT_USAGE,
            Error::Resource { .. } => EXIT_RESOURCE,
            _ => EXIT_DATA,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn limits(size_guard: Option<usize>) -> Result<Limits, Failure> {
    match size_guard {
        Some(n) => Ok(Limits::new(n)),
        None => Limits::from_env().map_err(|e| usage(e.to_string())),
    }
}

fn session(args: &GroupArgs, limits: Limits) -> Result<Session, Failure> {
    let spec: GroupSpec = args.group.parse()?;
    Session::new(spec, args.target.as_deref(), &args.labels, limits).map_err(|e| match e {
        Error::Parse(m) | Error::Domain(m) => usage(format!("bad target: {m}")),
        other => other.into(),
    })
}

fn json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string(value).expect("plain data serializes");
    text.push('\n');
    text
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let limits = limits(cli.size_guard)?;
    match cli.command {
        Command::Enumerate {
            group,
            poset,
            rank,
            format,
        } => {
            let kind = poset_kinds().get(&poset)?;
            let s = session(&group, limits)?;
            let listing = kind.build(&s)?;
            let shown = match rank {
                Some(r) => listing.restrict_to_rank(r),
                None => listing.clone(),
            };
            let out = match format {
                Format::Text => {
                    let mut out = listing.counts_text();
                    out.push('\n');
                    for e in &shown.elements {
                        out.push_str(&format!("{}  {}\n", e.rank, e.text));
                    }
                    out
                }
                Format::Json => json(&shown),
                Format::Dot => hasse_dot(&shown),
                Format::Svg => return Err(usage("enumerate supports text, json and dot")),
            };
            Ok((out, 0))
        }
        Command::Complex {
            group,
            kind,
            rank,
            format,
        } => {
            let builder = complex_kinds().get(&kind)?;
            let s = session(&group, limits)?;
            let summary = builder.build(&s, rank)?;
            let out = match format {
                Format::Text => {
                    let mut out = format!("{}\n{}\n", summary.counts_text(), summary.shape_text());
                    for c in summary.covers.iter().flatten() {
                        out.push_str(&format!("cover of degree {} over {}\n", c.k, c.h));
                    }
                    out
                }
                Format::Json => json(&summary),
                Format::Dot | Format::Svg => return Err(usage("complex supports text and json")),
            };
            Ok((out, 0))
        }
        Command::Render { input, panel, format } => {
            if format != Format::Svg {
                return Err(usage("render supports svg"));
            }
            let mut text = String::new();
            match input {
                Some(path) => {
                    text = std::fs::read_to_string(&path).map_err(|e| Failure {
                        code: EXIT_DATA,
                        message: format!("{}: {e}", path.display()),
                    })?;
                }
                None => {
                    io::stdin().read_to_string(&mut text).map_err(|e| Failure {
                        code: EXIT_DATA,
                        message: e.to_string(),
                    })?;
                }
            }
            let p = NcsPartition::from_json(&text).map_err(|e| Failure {
                code: EXIT_DATA,
                message: e.to_string(),
            })?;
            Ok((render_ncs_svg(&p, panel), 0))
        }
        Command::Verify { suite, seed, d } => {
            let config = VerifyConfig { seed, d, limits };
            let checks = run_suite(&suite, &config)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut out = String::new();
            for c in &checks {
                out.push_str(&format!("{c}\n"));
            }
            out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            Ok((out, if failed == 0 { 0 } else { EXIT_VERIFY }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("ncfact: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
