//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 counterexample.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::contact::BaseCurve;
use crate::kclass::KClass;
use crate::monge::MongeSurface;
use crate::report::{
    contact_report, cylinder_report, default_targets, full_report, invariants_report, projection_report,
    stratum_report, Report,
};
use num_traits::Signed;

use crate::scalar::{parse_decimal, parse_rational};
use crate::sign::SignRule;
use crate::specfile::{parse_curve, print_surface, read_surface, ParseOptions};
use crate::stratifier::{sample_stratum, StratumId};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "parabolic-contact",
    version,
    about = "Classify parabolic surface germs exactly"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print every coordinate change of the reductions.
    #[arg(long, global = true)]
    trace: bool,
    /// Treat values with |v| <= T as indeterminate; such verdicts become boundary cases.
    #[arg(long, global = true, value_name = "T")]
    tolerance: Option<String>,
    /// Re-read the surface with this degree bound (truncating or padding with zeros).
    #[arg(long, global = true, value_name = "K")]
    degree_bound: Option<u32>,
    /// Accept decimal coefficients, converted to exact rationals.
    #[arg(long, global = true)]
    float: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the closed-form invariants and the roots of DC_f.
    Invariants { file: PathBuf },
    /// Classify a surface.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Directrix coefficients g1,g2,... (required for contact mode).
        #[arg(long, value_name = "G1,G2,...")]
        curve: Option<String>,
    },
    /// Classify the contact with the cylinder over a directrix.
    Contact {
        file: PathBuf,
        #[arg(long, value_name = "G1,G2,...")]
        curve: String,
    },
    /// Construct directrices realizing contact classes.
    Cylinder {
        file: PathBuf,
        /// Class such as D_5 or A_3^-; defaults to the stratum's list.
        #[arg(long)]
        target: Vec<String>,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Per stratum for theorem45, per class for determinacy, total otherwise.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Write random surfaces from a stratum as files.
    Sample {
        #[arg(value_parser = parse_stratum)]
        stratum: StratumId,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Stratum,
    Projection,
    Contact,
    All,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_stratum(s: &str) -> Result<StratumId, String> {
    s.parse()
        .map_err(|e: crate::stratifier::ParseStratumError| e.to_string())
}

fn default_count(suite: Suite) -> usize {
    match suite {
        Suite::Theorem45 => 100,
        Suite::Oracle => 500,
        Suite::Discriminant => 1000,
        Suite::Determinacy => 200,
    }
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn invalid(msg: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVALID,
        msg: msg.to_string(),
    }
}

fn read_curve(text: &str, float: bool) -> Result<BaseCurve, Failure> {
    parse_curve(text, ParseOptions { allow_decimal: float }).map_err(|e| usage(format!("--curve: {e}")))
}

impl Global {
    fn sign_rule(&self) -> Result<SignRule, Failure> {
        match &self.tolerance {
            None => Ok(SignRule::Exact),
            Some(t) => {
                let r = parse_rational(t.trim())
                    .ok()
                    .or_else(|| parse_decimal(t.trim()))
                    .filter(|r| !r.is_negative())
                    .ok_or_else(|| usage(format!("--tolerance: `{t}` is not a nonnegative number")))?;
                Ok(SignRule::Tolerance(r))
            }
        }
    }

    fn surface(&self, path: &Path) -> Result<MongeSurface, Failure> {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let o = ParseOptions {
            allow_decimal: self.float,
        };
        let s = read_surface(&text, o).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        match self.degree_bound {
            Some(k) if k != s.bound() => MongeSurface::new(s.jet().with_bound(k)).map_err(invalid),
            _ => Ok(s),
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = &cli.global;
    let report = match cli.command {
        Command::Invariants { file } => invariants_report(&g.surface(&file)?),
        Command::Classify { file, mode, curve } => {
            let s = g.surface(&file)?;
            let sr = g.sign_rule()?;
            match mode {
                Mode::Stratum => stratum_report(&s, &sr),
                Mode::Projection => projection_report(&s, &sr, g.trace).map_err(invalid)?,
                Mode::Contact => {
                    let c = curve.ok_or_else(|| usage("contact mode needs --curve"))?;
                    contact_report(&s, &read_curve(&c, g.float)?, &sr, g.trace).map_err(invalid)?
                }
                Mode::All => {
                    let mut r = full_report(&s, &sr, g.trace).map_err(invalid)?;
                    if let Some(c) = curve {
                        r.extend(contact_report(&s, &read_curve(&c, g.float)?, &sr, g.trace).map_err(invalid)?);
                    }
                    r
                }
            }
        }
        Command::Contact { file, curve } => {
            let s = g.surface(&file)?;
            let sr = g.sign_rule()?;
            contact_report(&s, &read_curve(&curve, g.float)?, &sr, g.trace).map_err(invalid)?
        }
        Command::Cylinder { file, target } => {
            let s = g.surface(&file)?;
            let sr = g.sign_rule()?;
            if target.is_empty() {
                cylinder_report(&s, &default_targets(&s, &sr))
            } else {
                let targets = target
                    .iter()
                    .map(|t| t.parse::<KClass>().map_err(|e| usage(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                let r = cylinder_report(&s, &targets);
                let _ = write!(out, "{r}");
                let missing = r.fields().any(|(_, v)| v.starts_with("unreachable"));
                return Ok(if missing { EXIT_INVALID } else { EXIT_OK });
            }
        }
        Command::Verify { suite, seed, count } => {
            let count = count.unwrap_or_else(|| default_count(suite));
            let sum = run_suite(suite, seed, count);
            let mut r = Report::new();
            r.field("suite", suite)
                .field("seed", seed)
                .field("count", count)
                .field("checked", sum.checked)
                .field("failures", sum.failures.len());
            for (k, v) in &sum.counters {
                r.field(format!("counter[{k}]"), v);
            }
            for f in &sum.failures {
                r.field("counterexample", format!("{}: {}", f.label, f.detail));
                if let Some(c) = &f.curve {
                    r.field("counterexample_curve", c);
                }
                r.block("counterexample_file", print_surface(&f.surface));
            }
            r.field("result", if sum.passed() { "pass" } else { "fail" });
            let _ = write!(out, "{r}");
            return Ok(if sum.passed() { EXIT_OK } else { EXIT_COUNTEREXAMPLE });
        }
        Command::Sample {
            stratum,
            seed,
            count,
            out: dir,
        } => {
            fs::create_dir_all(&dir).map_err(|e| invalid(format!("{}: {e}", dir.display())))?;
            let mut r = Report::new();
            for (n, s) in sample_stratum(stratum, seed, count).iter().enumerate() {
                let path = dir.join(format!("stratum_{}_{seed}_{n}.monge", stratum.roman()));
                fs::write(&path, print_surface(s)).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
                r.field("wrote", path.display());
            }
            r
        }
    };
    let _ = write!(out, "{report}");
    Ok(EXIT_OK)
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("parabolic-contact").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["invariants", "/nonexistent/file.monge"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
