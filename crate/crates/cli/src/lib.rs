//! The `ncforms` command line: argument definitions, command dispatch and
//! output formatting.

pub mod parse;
pub mod suites;

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncforms_core::algebras::{Element, Laurent, QuantumPlane, Supercircle};
use ncforms_core::forms::InnerStructure;
use ncforms_core::instances::{self, Params};
use ncforms_core::integral::{integral_berezin, integral_laurent, Functional1, Normalization};
use ncforms_core::multideriv::MultiDerivation;
use ncforms_core::report::CheckReport;
use ncforms_core::scalars::{Assignment, Param};
use num_rational::BigRational;
use serde::Serialize;

use crate::parse::{parse, parse_element, print, ParseError, Value};
use crate::suites::{Instance, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "ncforms",
    version,
    about = "Exact noncommutative differential forms and integrals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply the differential to an element or a one-form.
    Diff(ExprArgs),
    /// Apply a divergence to a functional given by its values on the basis forms.
    Div(DivArgs),
    /// Integrate an element.
    Integrate(IntegrateArgs),
    /// Run a check suite.
    Check(CheckArgs),
    /// Print the normal form of an expression.
    Normalize(ExprArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraTag {
    QuantumPlane,
    Laurent,
    Super,
}

impl AlgebraTag {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::QuantumPlane => "quantum-plane",
            AlgebraTag::Laurent => "laurent",
            AlgebraTag::Super => "super",
        }
    }

    fn relevant(self) -> &'static [Param] {
        match self {
            AlgebraTag::QuantumPlane => &[Param::Q, Param::P],
            AlgebraTag::Laurent => &[Param::Q],
            AlgebraTag::Super => &[Param::Tau],
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum)]
    pub algebra: AlgebraTag,
    /// Exact parameter values, e.g. `q=2/3,p=-5`.
    #[arg(long, value_parser = parse_assignment)]
    pub set: Option<Assignment>,
    /// Print a JSON object instead of plain text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ExprArgs {
    #[command(flatten)]
    pub common: Common,
    /// The expression; read from stdin when omitted.
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DivergenceKind {
    General,
    Diagonal,
    Inner,
}

#[derive(Args, Debug)]
pub struct DivArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "general")]
    pub divergence: DivergenceKind,
    /// Value of the functional on dx.
    #[arg(long, allow_hyphen_values = true)]
    pub fx: Option<String>,
    /// Value of the functional on dy.
    #[arg(long, allow_hyphen_values = true)]
    pub fy: Option<String>,
    /// Value of the functional on dth.
    #[arg(long, allow_hyphen_values = true)]
    pub fth: Option<String>,
}

#[derive(Args, Debug)]
pub struct IntegrateArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "c", value_parser = parse_normalization)]
    pub normalize: Normalization,
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub degree_bound: Option<u32>,
}

fn parse_assignment(s: &str) -> Result<Assignment, String> {
    let mut out = Assignment::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got '{part}'"))?;
        let param = Param::from_name(name.trim())
            .ok_or_else(|| format!("unknown parameter '{}'", name.trim()))?;
        let value: BigRational = value
            .trim()
            .parse()
            .map_err(|_| format!("'{}' is not a rational number", value.trim()))?;
        out.set(param, value);
    }
    Ok(out)
}

fn parse_normalization(s: &str) -> Result<Normalization, String> {
    Normalization::from_name(s).ok_or_else(|| format!("expected c, tau or 1, got '{s}'"))
}

/// Parameters as they appear in JSON output.
#[derive(Serialize, Debug, Default, Clone, PartialEq, Eq)]
pub struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SuiteEntry {
    pub name: String,
    pub status: &'static str,
}

/// Everything a command produces on success.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub command: &'static str,
    pub algebra: &'static str,
    pub params: ParamsJson,
    pub result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Vec<SuiteEntry>>,
    #[serde(skip)]
    pub passed: bool,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string(self).expect("output serializes")
        } else {
            self.result.clone()
        }
    }
}

/// A failure that maps to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainError(pub String);

impl std::fmt::Display for DomainError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<ncforms_core::Error> for DomainError {
    fn from(e: ncforms_core::Error) -> Self {
        DomainError(e.to_string())
    }
}

impl From<ParseError> for DomainError {
    fn from(e: ParseError) -> Self {
        DomainError(e.to_string())
    }
}

macro_rules! with_calculus {
    ($c:expr, $md:ident => $body:expr) => {
        match $c {
            Calculus::Qp($md) => $body,
            Calculus::Laurent($md) => $body,
            Calculus::Super($md) => $body,
        }
    };
}

type Res<T> = Result<T, DomainError>;

fn domain<T>(msg: impl Into<String>) -> Res<T> {
    Err(DomainError(msg.into()))
}

enum Calculus {
    Qp(MultiDerivation<QuantumPlane>),
    Laurent(MultiDerivation<Laurent>),
    Super(MultiDerivation<Supercircle>),
}

fn build(tag: AlgebraTag, params: &Params) -> Res<Calculus> {
    Ok(match tag {
        AlgebraTag::QuantumPlane => Calculus::Qp(instances::quantum_plane(
            params.q.clone(),
            params.p.clone(),
        )?),
        AlgebraTag::Laurent => Calculus::Laurent(instances::jackson(params.q.clone())?),
        AlgebraTag::Super => Calculus::Super(instances::supercircle(params.tau.clone())?),
    })
}

fn params_json(tag: AlgebraTag, params: &Params) -> ParamsJson {
    let mut out = ParamsJson::default();
    for &param in tag.relevant() {
        let v = Some(params.get(param).to_string());
        match param {
            Param::Q => out.q = v,
            Param::P => out.p = v,
            Param::Tau => out.tau = v,
        }
    }
    out
}

fn read_expr(expr: &Option<String>) -> Res<String> {
    match expr {
        Some(e) => Ok(e.clone()),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| DomainError(format!("reading stdin: {e}")))?;
            Ok(s.trim().to_string())
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Res<Output> {
    let common = match &cli.command {
        Command::Diff(a) | Command::Normalize(a) => &a.common,
        Command::Div(a) => &a.common,
        Command::Integrate(a) => &a.common,
        Command::Check(a) => &a.common,
    };
    let assignment = common.set.clone().unwrap_or_default();
    let params = Params::from_assignment(&assignment);
    let calculus = build(common.algebra, &params)?;
    let (command, result, suite, passed) = match &cli.command {
        Command::Diff(a) => {
            let e = read_expr(&a.expr)?;
            let r = with_calculus!(&calculus, md => diff(md, &e, &params))?;
            ("diff", r, None, true)
        }
        Command::Normalize(a) => {
            let e = read_expr(&a.expr)?;
            let r = with_calculus!(&calculus, md => normalize(md, &e, &params))?;
            ("normalize", r, None, true)
        }
        Command::Integrate(a) => {
            let e = read_expr(&a.expr)?;
            (
                "integrate",
                integrate(&calculus, &e, &params, a.normalize)?,
                None,
                true,
            )
        }
        Command::Div(a) => ("div", div(&calculus, a, &params)?, None, true),
        Command::Check(a) => {
            let bound = a.degree_bound.unwrap_or(match common.algebra {
                AlgebraTag::QuantumPlane => 4,
                AlgebraTag::Laurent => 6,
                AlgebraTag::Super => 4,
            });
            let outcome = with_calculus!(&calculus, md => suites::run(md, a.suite, bound))?;
            let (lines, entries) = render_outcome(common.algebra, bound, outcome);
            let passed = entries.iter().all(|e| e.status == "pass");
            ("check", lines, Some(entries), passed)
        }
    };
    Ok(Output {
        command,
        algebra: common.algebra.name(),
        params: params_json(common.algebra, &params),
        result,
        suite,
        passed,
    })
}

fn render_outcome(
    tag: AlgebraTag,
    bound: u32,
    groups: Vec<Vec<CheckReport>>,
) -> (String, Vec<SuiteEntry>) {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for group in groups {
        let ok = group.iter().all(|r| r.passed());
        let body = group
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        lines.push(format!(
            "{} ({}, degree bound {bound}) {body}",
            if ok { "PASS" } else { "FAIL" },
            tag.name()
        ));
        for r in group {
            entries.push(SuiteEntry {
                name: r.name.clone(),
                status: if r.passed() { "pass" } else { "fail" },
            });
        }
    }
    (lines.join("\n"), entries)
}

fn diff<A: Instance>(md: &MultiDerivation<A>, expr: &str, params: &Params) -> Res<String> {
    let v = match parse(expr, md, params)? {
        Value::Element(a) => Value::OneForm(md.differential0(&a)),
        Value::OneForm(w) => Value::TwoForm(md.differential1(&w)?),
        Value::TwoForm(_) => Value::Element(Element::zero()),
    };
    Ok(print(&v, md))
}

fn normalize<A: Instance>(md: &MultiDerivation<A>, expr: &str, params: &Params) -> Res<String> {
    Ok(print(&parse(expr, md, params)?, md))
}

fn integrate(calculus: &Calculus, expr: &str, params: &Params, norm: Normalization) -> Res<String> {
    match calculus {
        Calculus::Laurent(md) => {
            let a = parse_element(expr, md, params)?;
            Ok(integral_laurent(&a, norm).to_string())
        }
        Calculus::Super(md) => {
            let a = parse_element(expr, md, params)?;
            Ok(integral_berezin(&a).to_string())
        }
        Calculus::Qp(_) => domain("no integral is defined on algebra 'quantum-plane'"),
    }
}

fn functional<A: Instance>(
    md: &MultiDerivation<A>,
    args: &DivArgs,
    params: &Params,
) -> Res<Functional1<A::Monomial>> {
    let mut values = vec![Element::zero(); md.dim()];
    for (flag, label, value) in [
        ("--fx", "dx", &args.fx),
        ("--fy", "dy", &args.fy),
        ("--fth", "dth", &args.fth),
    ] {
        let Some(expr) = value else { continue };
        let Some(i) = md.labels().iter().position(|l| l == label) else {
            return domain(format!(
                "{flag} does not apply to algebra '{}'",
                md.algebra().name()
            ));
        };
        values[i] = parse_element(expr, md, params)?;
    }
    Ok(md.functional(values)?)
}

fn divergence<A: Instance>(
    md: &MultiDerivation<A>,
    args: &DivArgs,
    params: &Params,
) -> Res<Element<A::Monomial>> {
    let f = functional(md, args, params)?;
    Ok(match args.divergence {
        DivergenceKind::General => md.divergence_general(&f)?,
        DivergenceKind::Diagonal => md.divergence_diagonal(&f)?,
        DivergenceKind::Inner => {
            return domain(format!(
                "no inner structure is known for algebra '{}'",
                md.algebra().name()
            ))
        }
    })
}

fn div(calculus: &Calculus, args: &DivArgs, params: &Params) -> Res<String> {
    match calculus {
        Calculus::Laurent(md) if args.divergence == DivergenceKind::Inner => {
            let f = functional(md, args, params)?;
            let s = InnerStructure::jackson(&params.q)?;
            Ok(md.divergence_inner(&f, &s)?.to_string())
        }
        _ => with_calculus!(calculus, md => divergence(md, args, params).map(|e| e.to_string())),
    }
}
