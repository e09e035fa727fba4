//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a mathematical negative (classes differ,
//! the algebra does not split, an axiom fails), 2 on bad input.

pub mod specs;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cohomology::{brute_force_cohomologous, h2_order, h2_order_brute, solve_coboundary, Cochain1};
use crate::torsion::{check_tqft, splitting_verdict, AxiomCheck, TwistedAlgebra};
pub use specs::{load_cocycle, load_config, parse_coeff, parse_group, InputError, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "discrete-torsion", version, about = "Cocycle-twisted loop homology algebras over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Linalg,
    Brute,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, conjugacy classes and multiplication table of a group
    Group { spec: String },
    /// Order of H²(G; A) with trivial action
    H2 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        coeff: String,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
    },
    /// Whether two cocycle files define the same class
    Cohomologous {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
    },
    /// Multiplication table of a twisted algebra
    Twist {
        config: PathBuf,
        /// Write the table here instead of stdout
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Associativity, coassociativity and Frobenius checks
    Tqft { config: PathBuf },
    /// Decide whether the twisted algebra splits as a tensor product
    Verdict {
        config: PathBuf,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also write the multiplication table
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

enum Outcome {
    Positive,
    Negative,
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Positive) => 0,
        Ok(Outcome::Negative) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), InputError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| InputError::new(p.display().to_string(), e)),
        None => out.write_all(text.as_bytes()).map_err(|e| InputError::new("stdout", e)),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome, InputError> {
    let here = Path::new(".");
    match command {
        Command::Group { spec } => {
            let g = parse_group(&spec, here).map_err(|e| InputError::new("group", e))?;
            emit(out, None, &json(&GroupReport::new(&g)))?;
            Ok(Outcome::Positive)
        }
        Command::H2 { group, coeff, method } => {
            let g = parse_group(&group, here).map_err(|e| InputError::new("group", e))?;
            let a = parse_coeff(&coeff).map_err(|e| InputError::new("coeff", e))?;
            let order = match method {
                Method::Linalg => h2_order(&g, &a),
                Method::Brute => h2_order_brute(&g, &a),
            }
            .map_err(|e| InputError::new("method", e))?;
            emit(out, None, &format!("{order}\n"))?;
            Ok(Outcome::Positive)
        }
        Command::Cohomologous { first, second, method } => {
            let c = load_cocycle(&first)?;
            let c2 = load_cocycle(&second)?;
            if !c.same_domain(&c2) {
                return Err(InputError::new(
                    second.display().to_string(),
                    "group or coefficients differ from the first cocycle",
                ));
            }
            for (path, x) in [(&first, &c), (&second, &c2)] {
                if let Some((g, h, k)) = x.cocycle_defect() {
                    return Err(InputError::new(
                        format!("{}: values", path.display()),
                        format!("cocycle identity fails at ({g}, {h}, {k})"),
                    ));
                }
            }
            let xi = match method {
                Method::Linalg => solve_coboundary(&c, &c2),
                Method::Brute => brute_force_cohomologous(&c, &c2),
            }
            .map_err(|e| InputError::new("method", e))?;
            let report = CohomologousReport {
                verdict: if xi.is_some() { "cohomologous" } else { "not cohomologous" },
                method,
                witness: xi.as_ref().map(witness_strings),
            };
            emit(out, None, &json(&report))?;
            Ok(if xi.is_some() { Outcome::Positive } else { Outcome::Negative })
        }
        Command::Twist { config, table } => {
            let cfg = load_config(&config)?;
            let alg = &cfg.algebra;
            emit(out, table.as_deref(), &alg.product_table().to_tsv(alg))?;
            Ok(Outcome::Positive)
        }
        Command::Tqft { config } => {
            let cfg = load_config(&config)?;
            let report = check_tqft(&cfg.algebra, cfg.window);
            let passed = report.passed();
            let named = TqftOutput {
                passed,
                associativity: AxiomOutput::new(&cfg.algebra, &report.associativity),
                coassociativity: AxiomOutput::new(&cfg.algebra, &report.coassociativity),
                frobenius: AxiomOutput::new(&cfg.algebra, &report.frobenius),
                cocommutative: report.cocommutative,
            };
            emit(out, None, &json(&named))?;
            Ok(if passed { Outcome::Positive } else { Outcome::Negative })
        }
        Command::Verdict { config, report, table } => {
            let cfg = load_config(&config)?;
            let alg = &cfg.algebra;
            let verdict = splitting_verdict(alg);
            let witness = verdict.witness.as_ref().map(|w| {
                w.iter().map(|&a| alg.coeff().format_element(a)).collect::<Vec<_>>()
            });
            let summary = match (&verdict.witness, &witness, verdict.obstruction_order) {
                (Some(raw), _, _) if raw.iter().all(|&a| a == 0) => "splits: true, witness: ξ ≡ 0".to_string(),
                (_, Some(w), _) => format!("splits: true, witness: ξ = ({})", w.join("; ")),
                (_, None, Some(k)) => format!("splits: false, obstruction of order {k}"),
                (_, None, None) => "splits: false".to_string(),
            };
            let out_report = VerdictOutput {
                summary,
                splits: verdict.splits,
                witness,
                checked_iso: verdict.checked_iso,
                h2_order: verdict.h2_order,
                obstruction: verdict.obstruction.clone(),
                obstruction_order: verdict.obstruction_order,
                failures: verdict.failures.clone(),
                warnings: verdict.warnings.clone(),
            };
            if let Some(t) = table {
                emit(out, Some(&t), &alg.product_table().to_tsv(alg))?;
            }
            emit(out, report.as_deref(), &json(&out_report))?;
            Ok(if verdict.splits && verdict.checked_iso { Outcome::Positive } else { Outcome::Negative })
        }
    }
}

fn witness_strings(xi: &Cochain1) -> Vec<String> {
    xi.values().iter().map(|&a| xi.coeff().format_element(a)).collect()
}

#[derive(Serialize)]
struct GroupReport {
    order: usize,
    abelian: bool,
    cyclic: bool,
    classes: Vec<Vec<String>>,
    table: Vec<Vec<String>>,
}

impl GroupReport {
    fn new(g: &crate::fingroup::FiniteGroup) -> Self {
        let classes = g
            .conjugacy_classes()
            .classes()
            .iter()
            .map(|c| c.iter().map(|&x| g.element_name(x)).collect())
            .collect();
        let table = g
            .elements()
            .map(|a| g.elements().map(|b| g.element_name(g.mul(a, b))).collect())
            .collect();
        Self {
            order: g.order(),
            abelian: g.is_abelian(),
            cyclic: g.cyclic_generator().is_some(),
            classes,
            table,
        }
    }
}

#[derive(Serialize)]
struct CohomologousReport {
    verdict: &'static str,
    method: Method,
    /// `ξ` with `first = second + dξ`, one coefficient element per group element.
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct AxiomOutput {
    applicable: bool,
    checked: usize,
    skipped: usize,
    failures: Vec<Vec<String>>,
}

impl AxiomOutput {
    fn new(alg: &TwistedAlgebra, check: &AxiomCheck) -> Self {
        Self {
            applicable: check.applicable,
            checked: check.checked,
            skipped: check.skipped,
            failures: check
                .failures
                .iter()
                .map(|w| w.iter().map(|&b| alg.basis_name(b)).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct TqftOutput {
    passed: bool,
    associativity: AxiomOutput,
    coassociativity: AxiomOutput,
    frobenius: AxiomOutput,
    cocommutative: Option<bool>,
}

#[derive(Serialize)]
struct VerdictOutput {
    summary: String,
    splits: bool,
    witness: Option<Vec<String>>,
    checked_iso: bool,
    h2_order: Option<u64>,
    obstruction: Option<String>,
    obstruction_order: Option<u64>,
    failures: Vec<String>,
    warnings: Vec<String>,
}
