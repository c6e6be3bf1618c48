//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out` and returns the process exit code.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use minreal_core::cohom;
use minreal_core::liealg::{RealForm, SlAlgebra};
use minreal_core::reps::{self, gram_discrete, gram_solve, Realization, RepParam};
use minreal_core::weylop::minimal_realization_basis;

use crate::config::{
    self, check_deg, check_n, parse_range, parse_scalar, Plan, UsageError, DEFAULT_SEED,
};
use crate::export::{self, Rendered};
use crate::report::Format;
use crate::suites;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "minreal",
    version,
    about = "Exact verification of the minimal realization of sl(n+1) by Weyl quantization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify {
        /// Restrict to rank n (default: every rank of each suite).
        #[arg(long)]
        n: Option<usize>,
        /// Suite id, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Degree window for the h1 suite, e.g. `3..6`.
        #[arg(long, value_parser = parse_range)]
        deg: Option<(u32, u32)>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an engine object.
    Show {
        #[arg(value_enum)]
        object: Object,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 3)]
        pmax: u32,
        /// Basis label, e.g. `H1` or `E12`.
        #[arg(long = "X")]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension, weights, Casimir, irreducibility and Gram positivity of
    /// the SU(2) modules P_m.
    Su2Table {
        #[arg(long, default_value_t = 5)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Truncated first cohomology over a degree window.
    H1Scan {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_parser = parse_range)]
        deg: Option<(u32, u32)>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Search for a finite-dimensional invariant subspace of rho_a.
    InvariantScan {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Degree cap.
        #[arg(long, default_value_t = 6)]
        deg: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Operator,
    Gram,
    Weights,
    Psi,
    Tilde,
    Structure,
}

enum Outcome {
    Report { body: String, passed: bool },
    Usage(String),
}

impl From<UsageError> for Outcome {
    fn from(e: UsageError) -> Self {
        Outcome::Usage(e.0)
    }
}

fn emit(r: Rendered, format: Format) -> Outcome {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable") + "\n",
        Format::Text | Format::Tsv => r.text,
    };
    Outcome::Report { body, passed: true }
}

fn engine(e: minreal_core::Error) -> Outcome {
    Outcome::Usage(e.to_string())
}

fn verify(
    n: Option<usize>,
    suite: &str,
    deg: Option<(u32, u32)>,
    seed: u64,
    format: Format,
) -> Result<Outcome, UsageError> {
    let plan = match n {
        Some(n) => {
            let n = check_n(n)?;
            if let Some((_, hi)) = deg {
                check_deg(hi)?;
            }
            Plan::for_n(n, deg, seed)
        }
        None => {
            let mut p = Plan::acceptance(seed);
            if let Some((lo, hi)) = deg {
                check_deg(hi)?;
                p.h1 = p.h1.iter().map(|&(k, _, _)| (k, lo, hi)).collect();
            }
            p
        }
    };
    let ids = plan.select(suite)?;
    let report = plan.run(n.unwrap_or(0), &ids);
    Ok(Outcome::Report {
        body: report.render(format),
        passed: report.passed,
    })
}

#[allow(clippy::too_many_arguments)]
fn show(
    object: Object,
    n: usize,
    lambda: Option<&str>,
    a: Option<&str>,
    m: Option<u32>,
    pmax: u32,
    x: Option<&str>,
    format: Format,
) -> Result<Outcome, UsageError> {
    let n = check_n(n)?;
    let alg = SlAlgebra::new(n).expect("rank checked");
    let pick = |x: Option<&str>| -> Result<Vec<usize>, UsageError> {
        match x {
            Some(l) => alg
                .basis()
                .index(l)
                .map(|i| vec![i])
                .map_err(|e| UsageError(e.to_string())),
            None => Ok((0..alg.dim()).collect()),
        }
    };
    let out = match object {
        Object::Operator => {
            let ops = match (lambda, a) {
                (Some(_), Some(_)) => {
                    return Err(UsageError("give at most one of --lambda and --a".into()))
                }
                (Some(l), None) => {
                    Realization::rho_lambda(&RepParam::generic(n, parse_scalar("--lambda", l)?))
                }
                (None, Some(a)) => Realization::rho_a(n, &parse_scalar("--a", a)?),
                (None, None) => minimal_realization_basis(&alg)
                    .map(|ops| Realization::from_ops(alg.basis().clone(), ops)),
            };
            let real = match ops {
                Ok(r) => r,
                Err(e) => return Ok(engine(e)),
            };
            let chosen: Vec<_> = pick(x)?
                .into_iter()
                .map(|i| (i, real.basis_ops()[i].clone()))
                .collect();
            emit(export::operators(alg.basis(), &chosen), format)
        }
        Object::Gram => {
            check_deg(pmax)?;
            let table = match (lambda, m) {
                (Some(l), None) => {
                    gram_discrete(&RepParam::generic(n, parse_scalar("--lambda", l)?), pmax)
                }
                (None, Some(m)) => {
                    gram_solve(&RepParam::compact(n, m), RealForm::Compact, pmax.min(m))
                }
                _ => {
                    return Err(UsageError(
                        "show gram needs exactly one of --lambda and --m".into(),
                    ))
                }
            };
            match table {
                Ok(t) => emit(export::gram(&t), format),
                Err(e) => engine(e),
            }
        }
        Object::Weights => {
            let m = m.ok_or_else(|| UsageError("show weights needs --m".into()))?;
            check_deg(m)?;
            match reps::weights(n, m) {
                Ok(w) => emit(export::weights(&w), format),
                Err(e) => engine(e),
            }
        }
        Object::Psi => emit(export::psi_matrix(n), format),
        Object::Tilde => emit(export::tildes(&alg, &pick(x)?), format),
        Object::Structure => emit(export::structure(alg.basis()), format),
    };
    Ok(out)
}

fn dispatch(cmd: Command) -> Result<Outcome, UsageError> {
    match cmd {
        Command::Verify {
            n,
            suite,
            deg,
            seed,
            format,
        } => verify(n, &suite, deg, seed, format),
        Command::Show {
            object,
            n,
            lambda,
            a,
            m,
            pmax,
            x,
            format,
        } => show(
            object,
            n,
            lambda.as_deref(),
            a.as_deref(),
            m,
            pmax,
            x.as_deref(),
            format,
        ),
        Command::Su2Table { m, format } => {
            check_deg(m)?;
            let rows: Result<Vec<_>, _> = (0..=m).map(suites::su2_row).collect();
            Ok(match rows {
                Ok(rows) => {
                    let ok = rows
                        .iter()
                        .all(|r| r.irreducible && r.positive_gram && r.casimir.is_some());
                    match emit(export::su2_table(&rows), format) {
                        Outcome::Report { body, .. } => Outcome::Report { body, passed: ok },
                        u => u,
                    }
                }
                Err(e) => engine(e),
            })
        }
        Command::H1Scan { n, deg, format } => {
            let n = check_n(n)?;
            let (lo, hi) = deg.unwrap_or_else(|| config::default_h1_range(n));
            check_deg(hi)?;
            Ok(match cohom::h1_scan(n, lo, hi) {
                Ok(rows) => emit(export::h1_rows(&rows), format),
                Err(e) => engine(e),
            })
        }
        Command::InvariantScan { n, a, deg, format } => {
            let n = check_n(n)?;
            check_deg(deg)?;
            let a = parse_scalar("--a", &a)?;
            Ok(match reps::invariant_subspace_scan(n, &a, deg) {
                Ok(rep) => emit(export::invariant_scan(&rep), format),
                Err(e) => engine(e),
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Report { body, passed }) => {
            let _ = out.write_all(body.as_bytes());
            if passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Ok(Outcome::Usage(msg)) | Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("minreal").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn show_operator_text() {
        let (code, out, _) = call(&["show", "operator", "--n", "1", "--lambda", "3", "--X", "H1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(-3) + (-2)*z1*d[z1]\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["verify", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["show", "gram", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["show", "operator", "--X", "E13"]).0, EXIT_USAGE);
        assert_eq!(call(&["invariant-scan", "--a", "x"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    }

    #[test]
    fn negative_parameters_parse() {
        let (code, out, _) = call(&["show", "gram", "--lambda", "-2"]);
        assert_eq!(code, EXIT_USAGE, "{out}");
        let (code, out, _) = call(&["show", "operator", "--a", "-2", "--X", "E21"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(-1)*d[z1]\n");
    }
}
