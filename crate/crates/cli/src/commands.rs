//! Command dispatch and rendering. `run` is pure apart from reading the
//! input file, so identical commands give byte-identical output.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_threshold::boolean_domain::{format_point_set, Point, MAX_ENUMERATION_ARITY};
use lattice_threshold::closure_system::ClosureSystem;
use lattice_threshold::lattice::{FiniteLattice, LatticeSpec};
use lattice_threshold::lattice_valued::{LValuedFunction, LValuedFunctionSpec};
use lattice_threshold::representability::{
    synthesize_linear_representation, ClosureSystemSpec, ConditionOutcome,
};
use lattice_threshold::threshold::{
    beta_bar, format_rational, is_classical_threshold, isotonicity_violation, synthesize_threshold,
    BooleanFunction,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::{parse_truth_table, Expression, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] lattice_threshold::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Parser, Debug, Clone)]
#[command(
    name = "lithresh",
    version,
    about = "Lattice-induced threshold functions: synthesis, cuts and representability"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Threshold representation over the free distributive lattice.
    Synthesize(CommonArgs),
    /// Decide whether a Boolean function is isotone.
    CheckIsotone(CommonArgs),
    /// Decide whether a Boolean function has real weights and threshold.
    CheckClassical(CommonArgs),
    /// The distinct cuts of the universal function on n variables.
    BetaCuts(CommonArgs),
    /// Decide whether a closure system of up-sets (JSON file) is the cut
    /// system of a linear combination.
    Representable(CommonArgs),
    /// Cuts of a lattice-valued function (JSON file).
    Cuts(CommonArgs),
    /// Canonical representation of a lattice-valued function (JSON file).
    Canonical(CommonArgs),
    /// Quotient of the codomain by "same cut" (JSON file).
    Quotient(CommonArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Truth table: 2^n characters, position k is the point with bits k.
    #[arg(long)]
    pub table: Option<String>,
    /// Monotone expression such as "x1&x2 | x3&x4".
    #[arg(long)]
    pub expr: Option<String>,
    /// Input file; `-` reads standard input.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

/// Rendered result: `code` is 0 for a positive answer and 1 for a negative one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn new(text: String, positive: bool) -> Self {
        Output {
            text,
            code: if positive { 0 } else { 1 },
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.verb {
        Verb::Synthesize(a) => synthesize(a),
        Verb::CheckIsotone(a) => check_isotone(a),
        Verb::CheckClassical(a) => check_classical(a),
        Verb::BetaCuts(a) => beta_cuts(a),
        Verb::Representable(a) => representable(a),
        Verb::Cuts(a) => cuts(a),
        Verb::Canonical(a) => canonical(a),
        Verb::Quotient(a) => quotient(a),
    }
}

// ---------------------------------------------------------------------------
// Inputs

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    table: Option<String>,
    expr: Option<String>,
}

/// A Boolean function plus the names of its variables.
struct NamedFunction {
    function: BooleanFunction,
    variables: Vec<String>,
}

fn from_table(s: &str, n: Option<usize>) -> Result<NamedFunction, CliError> {
    let function = parse_truth_table(s)?;
    if let Some(n) = n.filter(|&n| n != function.arity()) {
        return usage(format!(
            "--n {n} does not match the {}-variable table",
            function.arity()
        ));
    }
    let variables = (1..=function.arity()).map(|i| format!("x{i}")).collect();
    Ok(NamedFunction {
        function,
        variables,
    })
}

fn from_expr(s: &str, n: Option<usize>) -> Result<NamedFunction, CliError> {
    let e = Expression::parse(s)?;
    let function = e.to_function(n)?;
    let mut variables = e.variables().to_vec();
    variables.extend((variables.len() + 1..=function.arity()).map(|i| format!("x{i}")));
    Ok(NamedFunction {
        function,
        variables,
    })
}

fn exactly_one_source(a: &CommonArgs) -> Result<(), CliError> {
    let given = [a.table.is_some(), a.expr.is_some(), a.file.is_some()];
    match given.iter().filter(|&&g| g).count() {
        1 => Ok(()),
        0 => usage("give one input: --table, --expr or --file"),
        _ => usage("give only one of --table, --expr and --file"),
    }
}

/// Function input. A file holds a truth table, an expression, or JSON
/// `{"table": ...}` / `{"expr": ...}`.
fn boolean_input(a: &CommonArgs) -> Result<NamedFunction, CliError> {
    exactly_one_source(a)?;
    if let Some(t) = &a.table {
        return from_table(t, a.n);
    }
    if let Some(e) = &a.expr {
        return from_expr(e, a.n);
    }
    let text = read_file(a.file.as_ref().expect("checked"))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let f: FunctionFile = serde_json::from_str(trimmed)?;
        return match (f.table, f.expr) {
            (Some(t), None) => from_table(&t, a.n),
            (None, Some(e)) => from_expr(&e, a.n),
            _ => usage("function file needs exactly one of \"table\" and \"expr\""),
        };
    }
    if !trimmed.is_empty() && trimmed.chars().all(|c| c == '0' || c == '1') && trimmed.len() > 1 {
        from_table(trimmed, a.n)
    } else {
        from_expr(trimmed, a.n)
    }
}

fn json_input<T: serde::de::DeserializeOwned>(a: &CommonArgs, what: &str) -> Result<T, CliError> {
    if a.table.is_some() || a.expr.is_some() || a.n.is_some() {
        return usage(format!("this command reads {what} JSON from --file"));
    }
    let Some(path) = &a.file else {
        return usage(format!("this command reads {what} JSON from --file"));
    };
    Ok(serde_json::from_str(&read_file(path)?)?)
}

fn no_dot(a: &CommonArgs, verb: &str) -> Result<(), CliError> {
    if a.format == Format::Dot {
        return usage(format!(
            "{verb} has no lattice to draw; use --format text or json"
        ));
    }
    Ok(())
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PointPair {
    x: String,
    y: String,
}

fn pair(p: Option<(Point, Point)>) -> Option<PointPair> {
    p.map(|(x, y)| PointPair {
        x: x.to_string(),
        y: y.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Boolean-function verbs

#[derive(Serialize)]
struct SynthesisJson {
    n: usize,
    variables: Vec<String>,
    isotone: bool,
    weights: Option<Vec<String>>,
    threshold: Option<String>,
    /// Clause supports as 1-based variable indices.
    clauses: Option<Vec<Vec<usize>>>,
    counterexample: Option<PointPair>,
}

fn variable_note(v: &[String]) -> Option<String> {
    let renamed = v
        .iter()
        .enumerate()
        .any(|(i, name)| *name != format!("x{}", i + 1));
    renamed.then(|| {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .map(|(i, name)| format!("{name} = x{}", i + 1))
            .collect();
        format!("variables: {}\n", parts.join(", "))
    })
}

fn synthesize(a: &CommonArgs) -> Result<Output, CliError> {
    no_dot(a, "synthesize")?;
    let NamedFunction {
        function: f,
        variables,
    } = boolean_input(a)?;
    let n = f.arity();
    let violation = isotonicity_violation(&f);
    let repr = match violation {
        None => Some(synthesize_threshold(&f)?),
        Some(_) => None,
    };
    let weights: Vec<String> = (1..=n).map(|i| format!("w{i}")).collect();
    if a.format == Format::Json {
        let json = SynthesisJson {
            n,
            variables,
            isotone: repr.is_some(),
            threshold: repr.as_ref().map(|r| r.threshold().to_string()),
            clauses: repr.as_ref().map(|r| {
                r.threshold()
                    .clauses()
                    .iter()
                    .map(|&c| (0..n).filter(|i| c >> i & 1 == 1).map(|i| i + 1).collect())
                    .collect()
            }),
            weights: repr.as_ref().map(|_| weights),
            counterexample: pair(violation),
        };
        return Ok(Output::new(to_json(&json), repr.is_some()));
    }
    let text = match (&repr, violation) {
        (Some(r), _) => format!(
            "{}weights = ({})\nt = {}\n",
            variable_note(&variables).unwrap_or_default(),
            weights.join(", "),
            r.threshold()
        ),
        (None, Some((x, y))) => format!(
            "not isotone: {x} <= {y} but f({x}) = 1 and f({y}) = 0; no threshold representation\n"
        ),
        (None, None) => unreachable!("isotone functions always synthesize"),
    };
    Ok(Output::new(text, repr.is_some()))
}

#[derive(Serialize)]
struct IsotoneJson {
    n: usize,
    isotone: bool,
    counterexample: Option<PointPair>,
}

fn check_isotone(a: &CommonArgs) -> Result<Output, CliError> {
    no_dot(a, "check-isotone")?;
    let f = boolean_input(a)?.function;
    let violation = isotonicity_violation(&f);
    let text = match (a.format, violation) {
        (Format::Json, v) => to_json(&IsotoneJson {
            n: f.arity(),
            isotone: v.is_none(),
            counterexample: pair(v),
        }),
        (_, None) => "isotone\n".to_string(),
        (_, Some((x, y))) => format!("not isotone: {x} <= {y} but f({x}) = 1 and f({y}) = 0\n"),
    };
    Ok(Output::new(text, violation.is_none()))
}

#[derive(Serialize)]
struct ClassicalJson {
    n: usize,
    classical: bool,
    weights: Option<Vec<String>>,
    threshold: Option<String>,
}

fn check_classical(a: &CommonArgs) -> Result<Output, CliError> {
    no_dot(a, "check-classical")?;
    let f = boolean_input(a)?.function;
    let witness = is_classical_threshold(&f)?;
    let text = match (a.format, &witness) {
        (Format::Json, w) => to_json(&ClassicalJson {
            n: f.arity(),
            classical: w.is_some(),
            weights: w
                .as_ref()
                .map(|w| w.weights.iter().map(format_rational).collect()),
            threshold: w.as_ref().map(|w| format_rational(&w.threshold)),
        }),
        (_, Some(w)) => format!("classical threshold function: {w}\n"),
        (_, None) => "not a classical threshold function\n".to_string(),
    };
    Ok(Output::new(text, witness.is_some()))
}

// ---------------------------------------------------------------------------
// Lattice verbs

#[derive(Serialize)]
struct CutJson {
    threshold: String,
    points: Vec<String>,
}

#[derive(Serialize)]
struct BetaCutsJson {
    n: usize,
    count: usize,
    cuts: Vec<CutJson>,
}

fn beta_cuts(a: &CommonArgs) -> Result<Output, CliError> {
    if a.table.is_some() || a.expr.is_some() || a.file.is_some() {
        return usage("beta-cuts takes only --n");
    }
    let Some(n) = a.n else {
        return usage("beta-cuts needs --n");
    };
    if n == 0 || n > MAX_ENUMERATION_ARITY {
        return usage(format!(
            "beta-cuts supports 1 <= n <= {MAX_ENUMERATION_ARITY}"
        ));
    }
    let system = beta_bar(n)?.function.cut_collection();
    if a.format == Format::Dot {
        return Ok(Output::new(
            FiniteLattice::from_closure_system(&system).to_dot("cuts"),
            true,
        ));
    }
    // The greatest level with a given cut is the threshold synthesized for it.
    let cuts = system
        .members()
        .iter()
        .map(|m| {
            let f = BooleanFunction::new(n, m.clone())?;
            Ok(CutJson {
                threshold: synthesize_threshold(&f)?.threshold().to_string(),
                points: format_point_set(n, m),
            })
        })
        .collect::<Result<Vec<_>, lattice_threshold::Error>>()?;
    let text = if a.format == Format::Json {
        to_json(&BetaCutsJson {
            n,
            count: cuts.len(),
            cuts,
        })
    } else {
        let mut s = format!("{} distinct cuts\n", cuts.len());
        for c in &cuts {
            s.push_str(&format!(
                "t = {}: {{{}}}\n",
                c.threshold,
                c.points.join(", ")
            ));
        }
        s
    };
    Ok(Output::new(text, true))
}

#[derive(Serialize)]
struct ConditionJson {
    holds: bool,
    counterexample: Option<PointPair>,
}

impl From<&ConditionOutcome> for ConditionJson {
    fn from(c: &ConditionOutcome) -> Self {
        ConditionJson {
            holds: c.holds,
            counterexample: pair(c.counterexample),
        }
    }
}

#[derive(Serialize)]
struct RepresentationJson {
    lattice: LatticeSpec,
    /// Each weight as the member of the system it denotes.
    weights: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RepresentableJson {
    n: usize,
    condition_i: ConditionJson,
    condition_ii: ConditionJson,
    representation: Option<RepresentationJson>,
}

fn describe_condition(name: &str, c: &ConditionOutcome) -> String {
    match c.counterexample {
        None => format!("condition ({name}): holds\n"),
        Some((x, y)) => format!("condition ({name}): fails at x = {x}, y = {y}\n"),
    }
}

fn representable(a: &CommonArgs) -> Result<Output, CliError> {
    let spec: ClosureSystemSpec = json_input(a, "closure system")?;
    let system = spec.to_system()?;
    let n = spec.n;
    let report = synthesize_linear_representation(&system)?;
    let ok = report.is_representable();
    let text = match a.format {
        Format::Dot => FiniteLattice::from_closure_system(&system).to_dot("system"),
        Format::Json => to_json(&RepresentableJson {
            n,
            condition_i: (&report.conditions.condition_i).into(),
            condition_ii: (&report.conditions.condition_ii).into(),
            representation: report.representation.as_ref().map(|r| RepresentationJson {
                lattice: r.lattice.to_spec(),
                weights: r
                    .weights
                    .iter()
                    .map(|&w| format_point_set(n, &r.system.members()[w]))
                    .collect(),
            }),
        }),
        Format::Text => {
            let mut s = describe_condition("i", &report.conditions.condition_i);
            s.push_str(&describe_condition("ii", &report.conditions.condition_ii));
            match &report.representation {
                Some(r) => {
                    s.push_str(&format!(
                        "representable over the {}-element lattice of the system\n",
                        r.lattice.len()
                    ));
                    for (i, &w) in r.weights.iter().enumerate() {
                        let pts = format_point_set(n, &r.system.members()[w]);
                        s.push_str(&format!("w{} = {{{}}}\n", i + 1, pts.join(", ")));
                    }
                }
                None => s.push_str("not representable\n"),
            }
            s
        }
    };
    Ok(Output::new(text, ok))
}

fn function_input(a: &CommonArgs) -> Result<LValuedFunction, CliError> {
    let spec: LValuedFunctionSpec = json_input(a, "lattice-valued function")?;
    Ok(LValuedFunction::from_spec(&spec)?)
}

#[derive(Serialize)]
struct LevelCut {
    level: String,
    members: Vec<String>,
}

#[derive(Serialize)]
struct CutsJson {
    cuts: Vec<LevelCut>,
    collection: Vec<Vec<String>>,
}

fn cut_lattice_dot(system: &ClosureSystem) -> String {
    FiniteLattice::from_closure_system(system).to_dot("cuts")
}

fn cuts(a: &CommonArgs) -> Result<Output, CliError> {
    let mu = function_input(a)?;
    let system = mu.cut_collection();
    if a.format == Format::Dot {
        return Ok(Output::new(cut_lattice_dot(&system), true));
    }
    let l = mu.codomain();
    let levels = (0..l.len())
        .map(|p| {
            Ok(LevelCut {
                level: l.label(p).to_string(),
                members: mu.domain().format_subset(&mu.cut(p)?),
            })
        })
        .collect::<Result<Vec<_>, lattice_threshold::Error>>()?;
    let text = if a.format == Format::Json {
        to_json(&CutsJson {
            cuts: levels,
            collection: system.member_labels(),
        })
    } else {
        let mut s = String::new();
        for c in &levels {
            s.push_str(&format!("{}: {{{}}}\n", c.level, c.members.join(",")));
        }
        s.push_str(&format!("{} distinct cuts\n", system.len()));
        s
    };
    Ok(Output::new(text, true))
}

fn canonical(a: &CommonArgs) -> Result<Output, CliError> {
    let mu = function_input(a)?;
    let hat = mu.canonical_representation();
    let text = match a.format {
        Format::Dot => hat.codomain().to_dot("canonical"),
        Format::Json => to_json(&hat.to_spec()),
        Format::Text => {
            let mut s = String::new();
            for x in 0..hat.domain().size() {
                let value = hat.codomain().label(hat.value(x));
                s.push_str(&format!("{} -> {value}\n", hat.domain().label(x)));
            }
            s
        }
    };
    Ok(Output::new(text, true))
}

#[derive(Serialize)]
struct CutClass {
    cut: Vec<String>,
    class: String,
}

#[derive(Serialize)]
struct QuotientJson {
    classes: Vec<Vec<String>>,
    lattice: LatticeSpec,
    cut_to_class: Vec<CutClass>,
}

fn quotient(a: &CommonArgs) -> Result<Output, CliError> {
    let mu = function_input(a)?;
    let q = mu.quotient_lattice()?;
    let system = mu.cut_collection();
    let l = mu.codomain();
    let pairs: Vec<CutClass> = system
        .members()
        .iter()
        .zip(&q.cut_to_class)
        .map(|(m, &k)| CutClass {
            cut: mu.domain().format_subset(m),
            class: q.lattice.label(k).to_string(),
        })
        .collect();
    let text = match a.format {
        Format::Dot => q.lattice.to_dot("quotient"),
        Format::Json => to_json(&QuotientJson {
            classes: q
                .theta
                .classes
                .iter()
                .map(|c| c.iter().map(|&p| l.label(p).to_string()).collect())
                .collect(),
            lattice: q.lattice.to_spec(),
            cut_to_class: pairs,
        }),
        Format::Text => {
            let mut s = format!("{} classes\n", q.lattice.len());
            for p in &pairs {
                s.push_str(&format!("{} <- {{{}}}\n", p.class, p.cut.join(",")));
            }
            for (lo, hi) in q.lattice.covers() {
                s.push_str(&format!(
                    "{} < {}\n",
                    q.lattice.label(lo),
                    q.lattice.label(hi)
                ));
            }
            s
        }
    };
    Ok(Output::new(text, true))
}
