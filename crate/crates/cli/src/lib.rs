//! Argument parsing and dispatch for the `apery` command.

use std::ffi::OsString;
use std::ops::RangeInclusive;

use apery::{Error, Execution, Family, FamilyParams, NumericalSemigroup};
use clap::{Parser, Subcommand, ValueEnum};

mod output;

pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "apery",
    version,
    about = "Apéry sets, Apéry tables, tangent cones and Hilbert series of numerical semigroups"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Apéry set modulus for the `apery` subcommand (default: the multiplicity).
    #[arg(long, global = true, value_name = "A")]
    apery_rep: Option<u64>,

    /// Lay out Apéry tables of family members in closed-form block order.
    #[arg(long, global = true)]
    paper_order: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apéry set and the order of each element.
    Apery {
        #[arg(required = true, value_name = "GEN")]
        gens: Vec<u64>,
    },
    /// Full Apéry table of the maximal-ideal powers.
    Table {
        #[arg(required = true, value_name = "GEN")]
        gens: Vec<u64>,
    },
    /// Per-column ladders: landings, p, d, b and c.
    Ladders {
        #[arg(required = true, value_name = "GEN")]
        gens: Vec<u64>,
    },
    /// Tangent-cone decomposition over the fiber cone, freeness and Cohen-Macaulayness.
    Cone {
        #[arg(required = true, value_name = "GEN")]
        gens: Vec<u64>,
    },
    /// Hilbert series numerator and the first r+5 Hilbert-function values.
    Hilbert {
        #[arg(required = true, value_name = "GEN")]
        gens: Vec<u64>,
    },
    /// Closed-form data of a Bresinsky or Arslan family member.
    Family {
        family: FamilyArg,
        parameter: u64,
    },
    /// Compare every computation against the brute-force oracle.
    Verify {
        #[arg(long)]
        family: Option<FamilyArg>,
        /// Inclusive parameter range `lo..hi`.
        #[arg(long, value_parser = parse_range)]
        range: Option<RangeInclusive<u64>>,
        #[arg(value_name = "GEN")]
        gens: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bresinsky,
    Arslan,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Bresinsky => Family::Bresinsky,
            FamilyArg::Arslan => Family::Arslan,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo.parse().map_err(|e| format!("bad lower bound `{lo}`: {e}"))?;
    let hi: u64 = hi.parse().map_err(|e| format!("bad upper bound `{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::new(gens)?)
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    let format = if cli.json { Format::Json } else { Format::Text };
    match dispatch(&cli, format) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {msg}\n")),
        Err(Failure::Domain(e)) => Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
    }
}

fn dispatch(cli: &Cli, format: Format) -> Result<Outcome, Failure> {
    let is_apery = matches!(cli.command, Command::Apery { .. });
    if cli.apery_rep.is_some() && !is_apery {
        return Err(Failure::Usage("--apery-rep applies to the apery subcommand only".into()));
    }
    let takes_block_order = matches!(cli.command, Command::Table { .. } | Command::Family { .. });
    if cli.paper_order && !takes_block_order {
        return Err(Failure::Usage(
            "--paper-order applies to the table and family subcommands only".into(),
        ));
    }

    let doc = match &cli.command {
        Command::Apery { gens } => {
            let s = semigroup(gens)?;
            let a = cli.apery_rep.unwrap_or(s.multiplicity());
            output::apery(&s, a)?.render(format)
        }
        Command::Table { gens } => {
            let s = semigroup(gens)?;
            if cli.paper_order {
                let params = FamilyParams::recognize(&s)
                    .ok_or_else(|| Error::NotFamilyMember(s.to_string()))?;
                output::block_table(&params)?.render(format)
            } else {
                output::table(&s)?.render(format)
            }
        }
        Command::Ladders { gens } => output::ladders(&semigroup(gens)?)?.render(format),
        Command::Cone { gens } => output::cone(&semigroup(gens)?)?.render(format),
        Command::Hilbert { gens } => output::hilbert(&semigroup(gens)?)?.render(format),
        Command::Family { family, parameter } => {
            let params = FamilyParams::new((*family).into(), *parameter)?;
            output::family(&params)?.render(format)
        }
        Command::Verify {
            family,
            range,
            gens,
        } => {
            let reports = match (family, gens.is_empty()) {
                (Some(_), false) => {
                    return Err(Failure::Usage(
                        "give either --family or generators, not both".into(),
                    ))
                }
                (None, true) => {
                    return Err(Failure::Usage("verify needs --family or generators".into()))
                }
                (Some(f), true) => {
                    let family: Family = (*f).into();
                    let range = range.clone().unwrap_or(match family {
                        Family::Bresinsky => 2..=6,
                        Family::Arslan => 2..=8,
                    });
                    apery::verify_family_range(family, range, Execution::Parallel)?
                }
                (None, false) => {
                    if range.is_some() {
                        return Err(Failure::Usage("--range needs --family".into()));
                    }
                    vec![apery::full_verify(&semigroup(gens)?, Execution::Parallel)?]
                }
            };
            let doc = output::verify(reports);
            let passed = doc.passed();
            let text = doc.render(format);
            return Ok(Outcome {
                code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED },
                stdout: text,
                stderr: String::new(),
            });
        }
    };
    Ok(Outcome::ok(doc))
}
