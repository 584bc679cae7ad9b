//! Command-line front end for the `ncreal-core` algorithms.
//!
//! [`run`] parses an argument vector and returns the exit code together with
//! the text destined for stdout and stderr, so the binary and the tests share
//! one code path. Exit codes: 0 for a decided answer, 2 when a realness test
//! ends `NumericallyReal` or `Inconclusive`, 1 for usage and input errors and
//! for certificates that fail verification.

pub mod input;
pub mod json;

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ncreal_core::factor::factor_homogeneous;
use ncreal_core::gram::{is_sos_homogeneous, sos_quadratic_lambda, SosCertificate, SosCheck, SymQuadratic};
use ncreal_core::ideal::left_groebner;
use ncreal_core::parse::parse_word;
use ncreal_core::real::MethodChoice;
use ncreal_core::{
    eval, real_test, verify_nonreal_certificate, MonomialOrder, NonRealCertificate, Polynomial, RealTestConfig,
    RealnessVerdict,
};
use serde_json::json;

use input::Sources;
use json::{CertificateJson, PointJson, SosJson, VerdictJson};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Core(ncreal_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Core(e) => write!(f, "error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ncreal_core::Error> for CliError {
    fn from(e: ncreal_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Parser, Debug)]
#[command(name = "ncreal", version, about = "Realness of left ideals in the free *-algebra")]
pub struct Cli {
    /// Number of variables g (default: the largest index that occurs)
    #[arg(short = 'g', long = "vars", global = true, value_name = "G")]
    pub vars: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and print polynomials in normal form
    Parse(Sources),
    /// Factor homogeneous polynomials into irreducibles
    Factor(Sources),
    /// Decide whether a polynomial is a sum of hermitian squares
    Sos(Sources),
    /// Decide whether a word is left unshrinkable
    Unshrinkable {
        #[arg(value_name = "WORD")]
        word: String,
    },
    /// Compute a left Gröbner basis
    Groebner {
        #[command(flatten)]
        sources: Sources,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Decide whether the left ideal generated by the inputs is real
    Real(RealArgs),
    /// Check a non-real certificate against generators
    Verify {
        #[command(flatten)]
        sources: Sources,
        /// JSON certificate, or a verdict as printed by `real --json`
        #[arg(long, value_name = "PATH")]
        cert: PathBuf,
        /// Tolerance of the realness test that produced a numeric certificate
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Evaluate polynomials at a matrix point
    Eval {
        #[command(flatten)]
        sources: Sources,
        /// JSON point {"n": .., "X": [..], "v": [..]}
        #[arg(long, value_name = "PATH")]
        point: PathBuf,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct OrderArg {
    /// Letter ranking from largest to smallest, e.g. "x1,x1*,x2,x2*"
    #[arg(long, value_name = "RANKING")]
    pub order: Option<String>,
}

impl OrderArg {
    fn resolve(&self, g: usize) -> Result<MonomialOrder, CliError> {
        match &self.order {
            None => Ok(MonomialOrder::deglex()),
            Some(text) => Ok(MonomialOrder::parse(text, g)?),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Exact,
    Sdp,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RealArgs {
    #[command(flatten)]
    pub sources: Sources,
    #[command(flatten)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Feasibility tolerance of the SDP solver
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long = "max-iter", default_value_t = 20_000)]
    pub max_iter: usize,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_DECIDED, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(code) => Output { code, stdout: out, stderr: String::new() },
        Err(e) => Output { code: EXIT_ERROR, stdout: out, stderr: format!("{e}\n") },
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32, CliError> {
    match &cli.command {
        Command::Parse(sources) => cmd_parse(cli, sources, out),
        Command::Factor(sources) => cmd_factor(cli, sources, out),
        Command::Sos(sources) => cmd_sos(cli, sources, out),
        Command::Unshrinkable { word } => cmd_unshrinkable(cli, word, out),
        Command::Groebner { sources, order } => cmd_groebner(cli, sources, order, out),
        Command::Real(args) => cmd_real(cli, args, out),
        Command::Verify { sources, cert, tol } => cmd_verify(cli, sources, cert, *tol, out),
        Command::Eval { sources, point } => cmd_eval(cli, sources, point, out),
    }
}

fn load(cli: &Cli, sources: &Sources) -> Result<(usize, Vec<Polynomial>), CliError> {
    let texts = sources.texts()?;
    let g = input::num_vars(cli.vars, texts.iter().map(String::as_str));
    Ok((g, input::parse_all(&texts, g)?))
}

fn emit_json(out: &mut String, value: &impl serde::Serialize) {
    out.push_str(&serde_json::to_string_pretty(value).expect("output types serialize"));
    out.push('\n');
}

fn cmd_parse(cli: &Cli, sources: &Sources, out: &mut String) -> Result<i32, CliError> {
    let (_, polys) = load(cli, sources)?;
    if cli.json {
        let items: Vec<_> = polys
            .iter()
            .map(|p| {
                json!({
                    "poly": p.to_string(),
                    "degree": p.degree(),
                    "homogeneous": p.is_homogeneous(),
                    "symmetric": p.is_symmetric(),
                })
            })
            .collect();
        emit_json(out, &json!(items));
    } else {
        for p in &polys {
            writeln!(out, "{p}").unwrap();
        }
    }
    Ok(EXIT_DECIDED)
}

fn cmd_factor(cli: &Cli, sources: &Sources, out: &mut String) -> Result<i32, CliError> {
    let (_, polys) = load(cli, sources)?;
    let mut items = Vec::new();
    for p in &polys {
        let f = factor_homogeneous(p)?;
        if cli.json {
            items.push(json!({
                "scalar": f.scalar.to_string(),
                "factors": f.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }));
        } else {
            writeln!(out, "{f}").unwrap();
        }
    }
    if cli.json {
        emit_json(out, &json!(items));
    }
    Ok(EXIT_DECIDED)
}

fn write_sos(out: &mut String, cert: &SosCertificate, indent: &str) {
    if cert.is_empty() {
        writeln!(out, "{indent}0").unwrap();
    }
    for (d, r) in cert.weights.iter().zip(&cert.polys) {
        writeln!(out, "{indent}+ {d} · ({r})* ({r})").unwrap();
    }
}

fn cmd_sos(cli: &Cli, sources: &Sources, out: &mut String) -> Result<i32, CliError> {
    let (_, polys) = load(cli, sources)?;
    let mut items = Vec::new();
    for p in &polys {
        let check = if p.is_zero() || p.is_homogeneous() {
            is_sos_homogeneous(p)?
        } else if let Some(a) = SymQuadratic::from_poly(p) {
            match sos_quadratic_lambda(&a) {
                Some((_, cert)) => SosCheck::Yes(cert),
                None => SosCheck::No(None),
            }
        } else {
            return Err(CliError::Input(format!(
                "{p}: the SOS test needs a homogeneous polynomial or a symmetric univariate quadratic"
            )));
        };
        match &check {
            SosCheck::Yes(cert) if cli.json => items.push(json!({"sos": true, "certificate": SosJson::from(cert)})),
            SosCheck::Yes(cert) => {
                writeln!(out, "yes").unwrap();
                write_sos(out, cert, "  ");
            }
            SosCheck::No(witness) if cli.json => items.push(json!({
                "sos": false,
                "witness": witness.as_ref().map(|w| json!({
                    "basis": w.gram.col_basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "vector": w.vector.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "value": w.value().to_string(),
                })),
            })),
            SosCheck::No(witness) => {
                writeln!(out, "no").unwrap();
                if let Some(w) = witness {
                    let basis: Vec<_> = w.gram.col_basis.iter().map(ToString::to_string).collect();
                    let vector: Vec<_> = w.vector.iter().map(ToString::to_string).collect();
                    writeln!(
                        out,
                        "  witness c = [{}] over [{}], cᵀGc = {}",
                        vector.join(", "),
                        basis.join(", "),
                        w.value()
                    )
                    .unwrap();
                }
            }
        }
    }
    if cli.json {
        emit_json(out, &json!(items));
    }
    Ok(EXIT_DECIDED)
}

fn cmd_unshrinkable(cli: &Cli, text: &str, out: &mut String) -> Result<i32, CliError> {
    let g = input::num_vars(cli.vars, [text]);
    let w = parse_word(text, g).map_err(|e| CliError::Input(format!("{text:?}: {e}")))?;
    let split = w.shrink_length().map(|k| (w.prefix(k), w.suffix(w.degree() - 2 * k)));
    if cli.json {
        emit_json(
            out,
            &json!({
                "word": w.to_string(),
                "unshrinkable": split.is_none(),
                "u": split.as_ref().map(|(u, _)| u.to_string()),
                "v": split.as_ref().map(|(_, v)| v.to_string()),
            }),
        );
    } else {
        match &split {
            None => writeln!(out, "true").unwrap(),
            Some((u, v)) => writeln!(out, "false (w = u u* v with u = {u}, v = {v})").unwrap(),
        }
    }
    Ok(EXIT_DECIDED)
}

fn cmd_groebner(cli: &Cli, sources: &Sources, order: &OrderArg, out: &mut String) -> Result<i32, CliError> {
    let (g, gens) = load(cli, sources)?;
    let basis = left_groebner(&gens, &order.resolve(g)?);
    if cli.json {
        emit_json(out, &json!({"basis": basis.polys.iter().map(ToString::to_string).collect::<Vec<_>>()}));
    } else {
        for p in &basis.polys {
            writeln!(out, "{p}").unwrap();
        }
    }
    Ok(EXIT_DECIDED)
}

fn write_certificate(out: &mut String, cert: &NonRealCertificate) {
    let kind = if cert.is_exact() { "exact" } else { "numeric" };
    writeln!(out, "certificate ({kind}): Σ_j (q_j p_j + p_j* q_j*) =").unwrap();
    write_sos(out, &cert.sos, "  ");
    for (j, q) in cert.multipliers.iter().enumerate() {
        writeln!(out, "  q{} = {q}", j + 1).unwrap();
    }
}

fn write_verdict(out: &mut String, v: &RealnessVerdict) {
    writeln!(out, "status: {}", v.status).unwrap();
    writeln!(out, "method: {}", v.method).unwrap();
    if let Some(r) = v.residual {
        writeln!(out, "residual: {r:e}").unwrap();
    }
    if let Some(note) = &v.note {
        writeln!(out, "note: {note}").unwrap();
    }
    if let Some(cert) = &v.certificate {
        write_certificate(out, cert);
    }
}

fn cmd_real(cli: &Cli, args: &RealArgs, out: &mut String) -> Result<i32, CliError> {
    let (g, gens) = load(cli, &args.sources)?;
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(CliError::Usage(String::from("--tol must be positive")));
    }
    let config = RealTestConfig {
        tol: args.tol,
        max_iter: args.max_iter,
        method: match args.method {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Exact => MethodChoice::Exact,
            MethodArg::Sdp => MethodChoice::Sdp,
        },
        order: args.order.resolve(g)?,
        ..RealTestConfig::default()
    };
    let verdict = real_test(&gens, &config)?;
    if cli.json {
        emit_json(out, &VerdictJson::from(&verdict));
    } else {
        write_verdict(out, &verdict);
    }
    Ok(if verdict.status.is_decided() { EXIT_DECIDED } else { EXIT_UNDECIDED })
}

fn cmd_verify(cli: &Cli, sources: &Sources, cert: &Path, tol: f64, out: &mut String) -> Result<i32, CliError> {
    let (g, gens) = load(cli, sources)?;
    let text = fs::read_to_string(cert).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", cert.display())))?;
    let parsed = CertificateJson::parse(&text)?;
    // the certificate may mention variables absent from the generators
    let g = g.max(input::num_vars(None, parsed.multipliers.iter().chain(&parsed.sos.polys).map(String::as_str)));
    let gens: Vec<Polynomial> = gens.into_iter().map(|p| p.with_num_vars(g)).collect();
    let certificate = parsed.to_certificate(g)?;
    let tol = if certificate.is_exact() {
        0.0
    } else {
        RealTestConfig { tol, ..RealTestConfig::default() }.certificate_tol()
    };
    let valid = verify_nonreal_certificate(&gens, &certificate, tol)?;
    if cli.json {
        emit_json(out, &json!({"valid": valid}));
    } else {
        writeln!(out, "{}", if valid { "valid" } else { "invalid" }).unwrap();
    }
    Ok(if valid { EXIT_DECIDED } else { EXIT_ERROR })
}

fn format_vector(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", parts.join(", "))
}

fn cmd_eval(cli: &Cli, sources: &Sources, point: &Path, out: &mut String) -> Result<i32, CliError> {
    let text =
        fs::read_to_string(point).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", point.display())))?;
    let parsed: PointJson = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("point JSON: {e}")))?;
    let pt = parsed.to_point()?;
    let texts = sources.texts()?;
    let g = cli.vars.unwrap_or(pt.num_vars());
    let polys = input::parse_all(&texts, g)?;
    let mut items = Vec::new();
    for p in &polys {
        let m = eval::evaluate(p, &pt)?;
        let v = m.matvec(&pt.v);
        if cli.json {
            items.push(json!({"poly": p.to_string(), "matrix": m.to_rows(), "vector": v}));
        } else {
            writeln!(out, "{p}:").unwrap();
            for r in 0..m.rows() {
                writeln!(out, "  {}", format_vector(m.row(r))).unwrap();
            }
            writeln!(out, "  p(X) v = {}", format_vector(&v)).unwrap();
        }
    }
    if cli.json {
        emit_json(out, &json!(items));
    }
    Ok(EXIT_DECIDED)
}
