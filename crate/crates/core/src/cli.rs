//! Command-line front end.
//!
//! Exit codes: 0 success, 1 axiom violations / failed checks, 2 parse,
//! structural, I/O or capacity errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::acyclicity::{check_theorem, is_acyclic};
use crate::error::{Error, Result};
use crate::explorer::{enumerate, survey, EnumSpec, TheoremSurvey};
use crate::fpdim::{fp_dimensions, DEFAULT_TOLERANCE};
use crate::generators::{drinfeld_double, named_fixture, pointed, su2k, FiniteGroup};
use crate::io::{adjoint_dot, parse_group, parse_rule, write_rule};
use crate::nilpotency::central_series;
use crate::rule::{product, FusionRule, ValidationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "acyclic-fusion", version, about = "Fusion rules: acyclicity, nilpotency, FP dimensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Pointed,
    Su2k,
    Fixture,
    Double,
    Product,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a rule file against the fusion-rule axioms.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Acyclicity, central series, FP dimensions and the equivalence check.
    Analyze {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
    },
    /// Emit the adjoint graph as DOT.
    Graph {
        path: PathBuf,
        /// Write to this file instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a rule file: `pointed --group G`, `su2k K`, `fixture NAME`,
    /// `double --group G`, `product A.rule B.rule`.
    Gen {
        family: Family,
        params: Vec<String>,
        /// Built-in group name or group file.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every rule of a given rank and multiplicity bound.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long = "max-mult", default_value_t = 2)]
        max_mult: u32,
        #[arg(long)]
        survey: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Drop the N_ij^0 = δ(j, dual i) requirement; with --survey also
        /// prints the standard count for comparison.
        #[arg(long = "literal-axioms")]
        literal_axioms: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
    },
}

/// Result of running one command: what to print and the exit status.
#[derive(Debug, Default)]
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

    fn error(err: &Error) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }

    fn error_at(path: &Path, err: &Error) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {}: {err}\n", path.display()),
        }
    }
}

fn read_rule(path: &Path) -> Result<FusionRule> {
    parse_rule(&std::fs::read_to_string(path)?)
}

fn resolve_group(spec: &str) -> Result<FiniteGroup> {
    match FiniteGroup::builtin(spec) {
        Ok(g) => Ok(g),
        Err(unknown) => {
            let path = Path::new(spec);
            if path.exists() {
                parse_group(&std::fs::read_to_string(path)?)
            } else {
                Err(unknown)
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn format_report(rule: &FusionRule, report: &ValidationReport) -> String {
    let mut out = String::new();
    if report.valid {
        let _ = writeln!(out, "valid: rank {}", rule.rank());
    } else {
        let _ = writeln!(out, "invalid: {} violation(s)", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(out, "  [{}] {:?}: {}", v.axiom, v.indices, v.message);
        }
    }
    out
}

fn cmd_validate(path: &Path, json: bool) -> Outcome {
    let rule = match read_rule(path) {
        Ok(r) => r,
        Err(e) => return Outcome::error_at(path, &e),
    };
    let report = rule.validate();
    let stdout = if json {
        to_json(&report)
    } else {
        format_report(&rule, &report)
    };
    Outcome {
        code: if report.valid { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: String::new(),
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub labels: Vec<String>,
    pub multiplicities: Vec<u32>,
}

/// Everything `analyze` prints; also the `--json` document.
#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub rank: usize,
    pub labels: Vec<String>,
    pub acyclic: bool,
    pub witness: Option<WitnessReport>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub central_series: Vec<Vec<String>>,
    pub fp_dims: Vec<f64>,
    pub global_dim: f64,
    pub integral: bool,
    pub weakly_integral: bool,
    pub tolerance: f64,
    pub theorem_agree: bool,
}

pub fn analyze(rule: &FusionRule, tolerance: f64) -> Result<AnalysisReport> {
    let acyc = is_acyclic(rule);
    let series = central_series(rule);
    let fp = fp_dimensions(rule, tolerance)?;
    let check = check_theorem(rule);
    Ok(AnalysisReport {
        rank: rule.rank(),
        labels: rule.labels().to_vec(),
        acyclic: acyc.acyclic,
        witness: acyc.witness.map(|w| WitnessReport {
            labels: w.names(rule),
            multiplicities: w.multiplicities,
        }),
        nilpotent: series.nilpotent,
        nilpotency_class: series.class,
        central_series: series.chain.iter().map(|s| s.names(rule)).collect(),
        fp_dims: fp.dims,
        global_dim: fp.global,
        integral: fp.is_integral,
        weakly_integral: fp.is_weakly_integral,
        tolerance,
        theorem_agree: check.agree,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn format_analysis(a: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank: {}", a.rank);
    let _ = writeln!(out, "labels: {}", a.labels.join(", "));
    let _ = writeln!(out, "acyclic: {}", yes_no(a.acyclic));
    if let Some(w) = &a.witness {
        let _ = writeln!(
            out,
            "cycle witness: ({}) with multiplicities {:?}",
            w.labels.join(", "),
            w.multiplicities
        );
    }
    match a.nilpotency_class {
        Some(c) => {
            let _ = writeln!(out, "nilpotent: yes (class {c})");
        }
        None => {
            let _ = writeln!(out, "nilpotent: no");
        }
    }
    let _ = writeln!(out, "central series:");
    for (n, term) in a.central_series.iter().enumerate() {
        let _ = writeln!(out, "  A({n}) = {{{}}}", term.join(", "));
    }
    let dims: Vec<String> = a.fp_dims.iter().map(|d| format!("{d:.6}")).collect();
    let _ = writeln!(out, "FP dims: {}", dims.join(", "));
    let _ = writeln!(out, "global dim: {:.6}", a.global_dim);
    let _ = writeln!(out, "integral: {}", yes_no(a.integral));
    let _ = writeln!(out, "weakly integral: {}", yes_no(a.weakly_integral));
    let _ = writeln!(
        out,
        "acyclic <=> nilpotent: {}",
        if a.theorem_agree { "agree" } else { "DISAGREE" }
    );
    out
}

fn cmd_analyze(path: &Path, tolerance: f64, json: bool) -> Outcome {
    let rule = match read_rule(path) {
        Ok(r) => r,
        Err(e) => return Outcome::error_at(path, &e),
    };
    let report = rule.validate();
    if !report.valid {
        return Outcome {
            code: EXIT_FAILED,
            stdout: format_report(&rule, &report),
            stderr: "error: rule is not valid; analysis skipped\n".into(),
        };
    }
    match analyze(&rule, tolerance) {
        Ok(a) => Outcome {
            code: if a.theorem_agree { EXIT_OK } else { EXIT_FAILED },
            stdout: if json { to_json(&a) } else { format_analysis(&a) },
            stderr: String::new(),
        },
        Err(e) => Outcome::error(&e),
    }
}

fn cmd_graph(path: &Path, dot: Option<&Path>) -> Outcome {
    let rule = match read_rule(path) {
        Ok(r) => r,
        Err(e) => return Outcome::error_at(path, &e),
    };
    let report = rule.validate();
    if !report.valid {
        return Outcome {
            code: EXIT_FAILED,
            stdout: format_report(&rule, &report),
            stderr: "error: rule is not valid\n".into(),
        };
    }
    let text = adjoint_dot(&rule);
    match dot {
        Some(out) => match std::fs::write(out, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::error(&e.into()),
        },
        None => Outcome::ok(text),
    }
}

/// Builds the rule requested by `gen`.
pub fn generate(family: Family, params: &[String], group: Option<&str>) -> Result<FusionRule> {
    let need_group = || {
        group
            .map(str::to_string)
            .or_else(|| params.first().cloned())
            .ok_or_else(|| Error::Parse("this family needs --group".into()))
    };
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        Family::Pointed => Ok(pointed(&resolve_group(&need_group()?)?)),
        Family::Double => drinfeld_double(&resolve_group(&need_group()?)?, DEFAULT_TOLERANCE),
        Family::Su2k => {
            arity(1)?;
            let k: usize = params[0]
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::Parse(format!("level must be a positive integer, got {}", params[0])))?;
            Ok(su2k(k))
        }
        Family::Fixture => {
            arity(1)?;
            named_fixture(&params[0])
        }
        Family::Product => {
            arity(2)?;
            let a = read_rule(Path::new(&params[0]))?;
            let b = read_rule(Path::new(&params[1]))?;
            for (p, r) in [(&params[0], &a), (&params[1], &b)] {
                if !r.validate().valid {
                    return Err(Error::Structural(format!("{p} is not a valid rule")));
                }
            }
            Ok(product(&a, &b))
        }
    }
}

fn cmd_gen(family: Family, params: &[String], group: Option<&str>, out: Option<&Path>) -> Outcome {
    let rule = match generate(family, params, group) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let text = write_rule(&rule);
    match out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::error(&e.into()),
        },
        None => Outcome::ok(text),
    }
}

fn format_survey(s: &TheoremSurvey) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank {} max_mult {}", s.rank, s.max_mult);
    let _ = writeln!(out, "total: {}", s.total);
    let _ = writeln!(out, "acyclic: {}", s.acyclic_count);
    let _ = writeln!(out, "nilpotent: {}", s.nilpotent_count);
    let _ = writeln!(out, "disagreements: {}", s.disagreements.len());
    let _ = writeln!(
        out,
        "weak integrality failures: {}",
        s.weak_integrality_failures.len()
    );
    let _ = writeln!(out, "rank-drop failures: {}", s.rank_drop_failures.len());
    let hist: Vec<String> = s
        .class_histogram
        .iter()
        .map(|(c, n)| format!("{c}:{n}"))
        .collect();
    let _ = writeln!(out, "class histogram: {{{}}}", hist.join(", "));
    out
}

#[derive(Serialize)]
struct LiteralComparison<'a> {
    literal: &'a TheoremSurvey,
    standard_total: usize,
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    rank: usize,
    max_mult: u32,
    do_survey: bool,
    limit: Option<usize>,
    literal: bool,
    tolerance: f64,
    json: bool,
) -> Outcome {
    let mut spec = EnumSpec::new(rank, max_mult);
    if literal {
        spec = spec.literal();
    }
    if let Some(n) = limit {
        spec = spec.with_limit(n);
    }
    if !do_survey {
        return match enumerate(&spec) {
            Ok(rules) => Outcome::ok(
                rules
                    .iter()
                    .map(write_rule)
                    .collect::<Vec<_>>()
                    .join("\n"),
            ),
            Err(e) => Outcome::error(&e),
        };
    }
    let s = match survey(&spec, tolerance) {
        Ok(s) => s,
        Err(e) => return Outcome::error(&e),
    };
    let code = if s.is_clean() { EXIT_OK } else { EXIT_FAILED };
    let mut stdout = if literal {
        let standard = match enumerate(&EnumSpec {
            axioms: Default::default(),
            ..spec.clone()
        }) {
            Ok(r) => r.len(),
            Err(e) => return Outcome::error(&e),
        };
        if json {
            to_json(&LiteralComparison {
                literal: &s,
                standard_total: standard,
            })
        } else {
            let mut t = String::from("axioms: literal (no vacuum-channel condition)\n");
            t.push_str(&format_survey(&s));
            let _ = writeln!(t, "standard-axiom total: {standard}");
            t
        }
    } else if json {
        to_json(&s)
    } else {
        format_survey(&s)
    };
    if !json && code != EXIT_OK {
        stdout.push_str("FAILED: survey found counterexamples\n");
    }
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { path, json } => cmd_validate(&path, json),
        Command::Analyze {
            path,
            tolerance,
            json,
        } => cmd_analyze(&path, tolerance, json),
        Command::Graph { path, dot } => cmd_graph(&path, dot.as_deref()),
        Command::Gen {
            family,
            params,
            group,
            out,
        } => cmd_gen(family, &params, group.as_deref(), out.as_deref()),
        Command::Enumerate {
            rank,
            max_mult,
            survey,
            limit,
            literal_axioms,
            tolerance,
            json,
        } => cmd_enumerate(rank, max_mult, survey, limit, literal_axioms, tolerance, json),
    }
}

/// Parses arguments, runs the command, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let outcome = run(cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
