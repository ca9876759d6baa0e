//! The `bohr` command line: radius tables, verification sweeps, sharpness
//! probes and the lemma suite, written as JSON or CSV.
//!
//! Exit codes: 0 success, 1 other numerical failure, 2 invalid flags or
//! failed precondition, 3 hypothesis violation, 4 no root, 5 inequality
//! violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::BohrError;
use crate::function_lab::lemmas::run_lemma_suite;
use crate::function_lab::{
    majorant_lhs_with_weights, majorant_rhs, mobius_coefficients, sharpness_probe, MobiusAtom, Weights,
    DEFAULT_ORDER, DEFAULT_PROBE_GRID, VIOLATION_MARGIN,
};
use crate::psi_family::PsiFamily;
use crate::radius::{closed_form_radius, solve_radius, PolynomialG, RadiusProblem, RadiusResult, Theorem, DEFAULT_TOL};
use crate::special_fn::HypergeometricParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERIC: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_NO_ROOT: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

const DEFAULT_VERIFY_A: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 0.9, 0.99];
const VERIFY_R_FRACTIONS: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Generalized Bohr radii for K-quasiconformal harmonic mappings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the radius of one theorem instance.
    Radius(ProblemArgs),
    /// Check the inequality on Möbius atoms below the radius.
    Verify(VerifyArgs),
    /// Look for a violating Möbius atom just beyond the radius.
    Sharpness(SharpnessArgs),
    /// Radius as a function of K.
    Table(TableArgs),
    /// Coefficient inequalities on seeded random Blaschke products.
    Lemmas(LemmaArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// t1, c1, t2, c2, t3, t4 or conv.
    #[arg(long)]
    pub theorem: String,
    /// geometric, harmonic, zeta2 or hyp:a,b,c (conv defaults to hyp:1,1,2).
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long = "K", default_value_t = 1.0)]
    pub distortion: f64,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    /// Coefficients c1,c2,... of G(x) = c1 x + c2 x^2 + ... (t1/t2 only).
    #[arg(long = "G")]
    pub g: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long = "a-grid", value_delimiter = ',')]
    pub a_grid: Option<Vec<f64>>,
    /// Largest probed radius; defaults to the solved radius.
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    /// Argument of the evaluation point z for t3/t4, in radians.
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub direction: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SharpnessArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Offset beyond the radius; defaults to 0.05 (1 - radius).
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long = "a-grid", value_delimiter = ',')]
    pub a_grid: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long = "G")]
    pub g: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long = "K-list", value_delimiter = ',')]
    pub k_list: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
pub struct LemmaArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
}

/// Failure of a command together with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<BohrError> for CliError {
    fn from(e: BohrError) -> Self {
        let code = match e {
            BohrError::Domain { .. } | BohrError::InvalidParameter(_) | BohrError::Precondition(_) => EXIT_USAGE,
            BohrError::Hypothesis(_) => EXIT_HYPOTHESIS,
            BohrError::NoRoot { .. } => EXIT_NO_ROOT,
            BohrError::ZeroOutsideDisk(_) => EXIT_USAGE,
            _ => EXIT_NUMERIC,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Tabular and structured forms of one command's result.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Non-zero when the command ran but found a violation.
    pub code: i32,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report values are finite");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(csv_cell).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) if s.contains(',') || s.contains('"') => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Rounds to 15 significant digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number)
}

fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

fn parse_theorem(s: &str) -> Result<Theorem, CliError> {
    s.parse().map_err(CliError::from)
}

fn parse_family(theorem: Theorem, family: Option<&str>) -> Result<PsiFamily, CliError> {
    let family = match family {
        Some(f) => f.parse::<PsiFamily>()?,
        None if theorem == Theorem::Convolution => {
            PsiFamily::Hypergeometric(HypergeometricParams::new(1.0, 1.0, 2.0)?)
        }
        None => PsiFamily::Geometric,
    };
    if theorem == Theorem::Convolution && !matches!(family, PsiFamily::Hypergeometric(_)) {
        return Err(usage(format!("theorem conv needs a hyp:a,b,c family, got '{family}'")));
    }
    Ok(family)
}

fn parse_g(theorem: Theorem, g: Option<&str>) -> Result<PolynomialG, CliError> {
    match g {
        None => Ok(PolynomialG::zero()),
        Some(s) => {
            let g: PolynomialG = s.parse()?;
            if !g.is_zero() && !theorem.uses_g() {
                return Err(usage(format!("--G only applies to t1 and t2, not {theorem}")));
            }
            Ok(g)
        }
    }
}

fn build_problem(args: &ProblemArgs) -> Result<RadiusProblem, CliError> {
    let theorem = parse_theorem(&args.theorem)?;
    let family = parse_family(theorem, args.family.as_deref())?;
    let g = parse_g(theorem, args.g.as_deref())?;
    Ok(RadiusProblem::new(theorem, family, args.distortion, args.p)?.with_g(g))
}

fn problem_fields(problem: &RadiusProblem) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("theorem".into(), json!(problem.theorem.id()));
    m.insert("family".into(), json!(problem.family.id()));
    m.insert("K".into(), num(problem.distortion));
    m.insert("p".into(), num(problem.p));
    m.insert(
        "G".into(),
        Value::Array(problem.effective_g().coefficients().iter().map(|&c| num(c)).collect()),
    );
    m
}

fn g_cell(problem: &RadiusProblem) -> Value {
    let parts: Vec<String> = problem
        .effective_g()
        .coefficients()
        .iter()
        .map(|&c| sig15(c).to_string())
        .collect();
    json!(parts.join(";"))
}

fn radius_fields(problem: &RadiusProblem, solved: &RadiusResult) -> Map<String, Value> {
    let mut m = problem_fields(problem);
    m.insert("radius".into(), num(solved.radius));
    m.insert("residual".into(), num(solved.residual));
    m.insert("constraint_radius_R".into(), opt_num(solved.constraint_radius_r));
    m.insert("closed_form".into(), opt_num(closed_form_radius(problem)));
    m.insert("iterations".into(), json!(solved.iterations));
    m
}

pub fn cmd_radius(args: &ProblemArgs) -> Result<Report, CliError> {
    let problem = build_problem(args)?;
    let solved = solve_radius(&problem, args.tol)?;
    let fields = radius_fields(&problem, &solved);
    let header = vec![
        "theorem",
        "family",
        "K",
        "p",
        "G",
        "radius",
        "residual",
        "constraint_radius_R",
        "closed_form",
        "iterations",
    ];
    let row = header
        .iter()
        .map(|&h| if h == "G" { g_cell(&problem) } else { fields[h].clone() })
        .collect();
    Ok(Report {
        json: Value::Object(fields),
        header,
        rows: vec![row],
        code: EXIT_OK,
    })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let problem = build_problem(&args.problem)?;
    let solved = solve_radius(&problem, args.problem.tol)?;
    let r_max = match args.r_max {
        Some(r) if !(r > 0.0 && r <= solved.radius) => {
            return Err(usage(format!(
                "--r-max {r} must lie in (0, radius = {}]",
                solved.radius
            )))
        }
        Some(r) => r,
        None => solved.radius,
    };
    let a_grid = args.a_grid.clone().unwrap_or_else(|| DEFAULT_VERIFY_A.to_vec());
    let k = problem.dilatation();
    let g = problem.effective_g();
    let maps = a_grid
        .iter()
        .map(|&a| mobius_coefficients(&MobiusAtom::new(a, Complex64::new(1.0, 0.0), k)?, DEFAULT_ORDER))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rows = Vec::new();
    let mut cells = Vec::new();
    let mut min_margin = f64::INFINITY;
    for fraction in VERIFY_R_FRACTIONS {
        let r = r_max * fraction;
        let weights = Weights::for_order(&problem.family, r, DEFAULT_ORDER)?;
        let z = Complex64::from_polar(r, args.direction);
        for (map, &a) in maps.iter().zip(&a_grid) {
            let lhs = majorant_lhs_with_weights(map, problem.theorem, &problem.family, &weights, problem.p, &g, Some(z))?;
            let rhs = majorant_rhs(map, &problem.family, r)?;
            let margin = rhs - lhs;
            min_margin = min_margin.min(margin);
            rows.push(vec![num(a), num(r), num(lhs), num(rhs), num(margin)]);
            cells.push(json!({"a": num(a), "r": num(r), "lhs": num(lhs), "rhs": num(rhs), "margin": num(margin)}));
        }
    }
    let pass = min_margin >= -VIOLATION_MARGIN;
    if !pass {
        log::error!("inequality violated below the radius: min margin {min_margin:e}");
    }
    let mut fields = radius_fields(&problem, &solved);
    fields.insert("r_max".into(), num(r_max));
    fields.insert("min_margin".into(), num(min_margin));
    fields.insert("pass".into(), json!(pass));
    fields.insert("cells".into(), Value::Array(cells));
    Ok(Report {
        json: Value::Object(fields),
        header: vec!["a", "r", "lhs", "rhs", "margin"],
        rows,
        code: if pass { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn cmd_sharpness(args: &SharpnessArgs) -> Result<Report, CliError> {
    let problem = build_problem(&args.problem)?;
    let solved = solve_radius(&problem, args.problem.tol)?;
    let eps = args.eps.unwrap_or(0.05 * (1.0 - solved.radius));
    let a_grid = args.a_grid.clone().unwrap_or_else(|| DEFAULT_PROBE_GRID.to_vec());
    let witness = sharpness_probe(&problem, &solved, eps, &a_grid)?;
    if witness.is_none() {
        log::warn!("no violating atom at r = {} on the given a grid", solved.radius + eps);
    }
    let mut fields = radius_fields(&problem, &solved);
    fields.insert("epsilon".into(), num(eps));
    fields.insert("r".into(), num(solved.radius + eps));
    fields.insert(
        "witness".into(),
        witness.map_or(Value::Null, |w| {
            json!({"a": num(w.a), "r": num(w.r), "lhs": num(w.lhs), "rhs": num(w.rhs)})
        }),
    );
    let rows = witness
        .map(|w| vec![vec![json!(true), num(w.a), num(w.r), num(w.lhs), num(w.rhs)]])
        .unwrap_or_else(|| vec![vec![json!(false), Value::Null, num(solved.radius + eps), Value::Null, Value::Null]]);
    Ok(Report {
        json: Value::Object(fields),
        header: vec!["found", "a", "r", "lhs", "rhs"],
        rows,
        code: EXIT_OK,
    })
}

pub fn cmd_table(args: &TableArgs) -> Result<Report, CliError> {
    let theorem = parse_theorem(&args.theorem)?;
    let family = parse_family(theorem, args.family.as_deref())?;
    let g = parse_g(theorem, args.g.as_deref())?;
    let ks = args
        .k_list
        .clone()
        .unwrap_or_else(|| (1..=10).map(f64::from).collect());
    if ks.is_empty() {
        return Err(usage("--K-list is empty"));
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for &k in &ks {
        let problem = RadiusProblem::new(theorem, family.clone(), k, args.p)?.with_g(g.clone());
        let solved = solve_radius(&problem, args.tol)?;
        let closed = closed_form_radius(&problem);
        rows.push(vec![
            num(k),
            num(solved.radius),
            opt_num(closed),
            opt_num(solved.constraint_radius_r),
            num(solved.residual),
        ]);
        entries.push(json!({
            "K": num(k),
            "radius": num(solved.radius),
            "closed_form": opt_num(closed),
            "constraint_radius_R": opt_num(solved.constraint_radius_r),
            "residual": num(solved.residual),
        }));
    }
    let reference = RadiusProblem::new(theorem, family, ks[0], args.p)?.with_g(g);
    let mut fields = problem_fields(&reference);
    fields.remove("K");
    fields.insert("rows".into(), Value::Array(entries));
    Ok(Report {
        json: Value::Object(fields),
        header: vec!["K", "radius", "closed_form", "constraint_radius_R", "residual"],
        rows,
        code: EXIT_OK,
    })
}

pub fn cmd_lemmas(args: &LemmaArgs) -> Result<Report, CliError> {
    let report = run_lemma_suite(args.seed, args.count, args.order)?;
    let passed = report.passed();
    let rows = report
        .outcomes
        .iter()
        .map(|o| vec![json!(o.lemma.name()), json!(o.checks), num(o.min_slack), json!(o.passed())])
        .collect();
    let outcomes: Vec<Value> = report
        .outcomes
        .iter()
        .map(|o| {
            json!({"lemma": o.lemma.name(), "checks": o.checks, "min_slack": num(o.min_slack), "pass": o.passed()})
        })
        .collect();
    let json = json!({
        "seed": report.seed,
        "functions": report.functions,
        "order": report.order,
        "mobius_equality_gap": num(report.mobius_equality_gap),
        "pass": passed,
        "outcomes": outcomes,
    });
    Ok(Report {
        json,
        header: vec!["lemma", "checks", "min_slack", "pass"],
        rows,
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
    })
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Radius(a) => cmd_radius(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sharpness(a) => cmd_sharpness(a),
        Command::Table(a) => cmd_table(a),
        Command::Lemmas(a) => cmd_lemmas(a),
    }
}

/// Parses `args`, runs the command, writes the output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let report = match execute(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return e.code;
        }
    };
    let text = report.render(cli.format);
    let written = match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    };
    match written {
        Ok(()) => report.code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_NUMERIC
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig15_rounds() {
        assert_eq!(sig15(1.0 / 3.0), 0.333333333333333);
        assert_eq!(sig15(0.0), 0.0);
        assert_eq!(sig15(2.0), 2.0);
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_cell(&json!("a,b")), "\"a,b\"");
        assert_eq!(csv_cell(&Value::Null), "");
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(BohrError::NoRoot { upper: 1.0 }).code, EXIT_NO_ROOT);
        assert_eq!(CliError::from(BohrError::Hypothesis("x".into())).code, EXIT_HYPOTHESIS);
        assert_eq!(CliError::from(BohrError::Precondition("x".into())).code, EXIT_USAGE);
        assert_eq!(CliError::from(BohrError::NonConvergence { terms: 1 }).code, EXIT_NUMERIC);
    }
}
