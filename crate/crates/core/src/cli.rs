//! Command-line front end. JSON on stdout is the machine contract; `--format text`
//! prints the same fields one per line.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or validation error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::arthur::{
    aj_parameter, exponents, infinitesimal_character, is_regular, predicates, AjCharacters,
    ArchArthurParameter, PairMultiplicity, PredicateQuery,
};
use crate::cocycles::{evaluate_cocycle, vz_ktype_weight, FundamentalWeightVector};
use crate::error::{Error, Result};
use crate::exterior::euler_form;
use crate::partitions::characters::so_decomposition;
use crate::partitions::{
    binomial, cauchy_decompose, littlewood_so_multiplicity, lr_coefficient, lr_tableaux,
    o_harmonic_dim, schur_dim, so_harmonic_dim, Partition,
};
use crate::polyfock::{
    gl_act, harmonic_space_dim, minor_delta, witt_w, Ambient, SparsePoly, Twist, VarIndex,
    WittKind, DEFAULT_NULLSPACE_CAP,
};
use crate::scalar::GaussianRational;
use crate::verify::{run_all, run_suite, SuiteReport, SUITES};
use crate::vz::{
    all_levis, cohomology_degrees, dim_u_cap_p, low_degree_levis, two_rho_u_cap_p,
    CohomologyFamily, LeviDatum,
};

/// Environment variable overriding the dense nullspace size cap.
pub const NULLSPACE_CAP_ENV: &str = "FOCKCALC_NULLSPACE_CAP";

#[derive(Parser, Debug)]
#[command(name = "fockcalc", version, about = "Exact Fock-model and Arthur-parameter calculus")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conjugate, size and dimensions of a partition.
    Partition {
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        /// Also report dim S_lam(C^n).
        #[arg(long)]
        n: Option<usize>,
        /// Also report the O(m) harmonic dimension.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Littlewood–Richardson coefficient c^lam_{mu,nu}.
    Lr {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// List the tableaux.
        #[arg(long)]
        tableaux: bool,
    },
    /// Multiplicity of S_[nu] in S_mu restricted to the orthogonal group.
    Branch {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Cross-check against the torus character decomposition for SO(p).
        #[arg(long)]
        p: Option<usize>,
    },
    /// Pairs (mu, mu*) in a p x q box with the dimension identity.
    Cauchy {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
    },
    /// Polynomial operations in the Fock model.
    Poly(PolyArgs),
    /// Dimension of degree-ell pluriharmonic polynomials on p x n variables.
    HarmonicDim {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: u32,
    },
    /// Leading principal minor Δ_k of W''.
    Minor {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        k: usize,
    },
    /// Cocycle values on the Vogan–Zuckerman vector.
    Cocycle {
        #[command(subcommand)]
        action: CocycleAction,
    },
    /// Euler form e_q and its wedge powers.
    Euler {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Include the multivector terms.
        #[arg(long)]
        terms: bool,
    },
    /// θ-stable Levi bookkeeping.
    Vz {
        #[command(subcommand)]
        action: VzAction,
    },
    /// Archimedean Arthur parameters.
    Arthur {
        #[command(subcommand)]
        action: ArthurAction,
    },
    /// Run identity suites.
    Verify {
        /// Run every suite.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// Run one suite by name.
        #[arg(long)]
        suite: Option<String>,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
        /// List suite names.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct AmbientArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub n: usize,
}

impl AmbientArgs {
    fn ambient(self) -> Ambient {
        Ambient::new(self.p, self.q, self.n)
    }
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub amb: AmbientArgs,
    #[command(subcommand)]
    pub op: PolyAction,
}

#[derive(Subcommand, Debug)]
pub enum PolyAction {
    /// Parse and normalize.
    Show { expr: String },
    Add { a: String, b: String },
    Mul { a: String, b: String },
    /// ∂/∂z[alpha,j].
    Partial {
        expr: String,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        j: usize,
    },
    /// Δ_ij.
    Laplacian {
        expr: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Whether every Δ_ij kills the polynomial.
    Pluriharmonic { expr: String },
    /// Witt coordinate w' or w''.
    Witt {
        #[arg(long, value_enum)]
        kind: WittArg,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        j: usize,
    },
    /// det(g)^(twice/2) · P(Z g); g is a JSON array of rows of scalar strings.
    GlAct {
        expr: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twice: i64,
        /// Designated square root of det(g) for odd `twice`.
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WittArg {
    Prime,
    DoublePrime,
}

#[derive(Subcommand, Debug)]
pub enum CocycleAction {
    /// Value on e(q) with its closed form.
    Value {
        #[command(flatten)]
        amb: AmbientArgs,
        /// Fundamental weight multiplicities a_1,…,a_n.
        #[arg(long, default_value = "")]
        a: String,
    },
    /// Check the value against its closed form; exit 1 on mismatch.
    Verify {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long, default_value = "")]
        a: String,
    },
    /// Highest weight of the K-type carrying the class.
    Ktype {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long, default_value = "")]
        lam: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VzAction {
    /// Normalized Levi data for SO(p,q), optionally only those with dim(u ∩ p) = r.
    Levis {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// dim(u ∩ p) and 2ρ(u ∩ p) for a Levi given as JSON.
    Dim {
        #[arg(long)]
        levi: String,
    },
    /// Cohomology table of a worked family, given as JSON.
    Cohomology {
        #[arg(long)]
        family: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum ArthurAction {
    /// Validate a parameter.
    Validate {
        #[arg(long)]
        psi: String,
    },
    /// Infinitesimal character and regularity.
    Infchar {
        #[arg(long)]
        psi: String,
    },
    /// Exponents of a parameter, or of the default Adams–Johnson parameter of a Levi.
    Exponents {
        #[arg(long, conflicts_with = "levi")]
        psi: Option<String>,
        #[arg(long)]
        levi: Option<String>,
        #[arg(long, value_enum, default_value_t = PairArg::Two)]
        pair_multiplicity: PairArg,
    },
    /// Hypothesis flags for a parameter and/or (n, p, q, r).
    Predicates {
        #[arg(long)]
        psi: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Adams–Johnson parameter of a Levi.
    AjParam {
        #[arg(long)]
        levi: String,
        /// Character choices as JSON; defaults make the infinitesimal character ρ.
        #[arg(long)]
        chars: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairArg {
    One,
    Two,
}

/// Result of a command: JSON body plus exit code.
struct Outcome {
    body: Value,
    code: i32,
}

impl From<Value> for Outcome {
    fn from(body: Value) -> Self {
        Outcome { body, code: 0 }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let cap = nullspace_cap();
    match execute(&cli.command, cap) {
        Ok(out) => (out.code, render(&out.body, cli.format)),
        Err(e) => {
            let body = json!({ "error": e.to_string(), "kind": error_kind(&e) });
            (2, render(&body, cli.format))
        }
    }
}

fn nullspace_cap() -> usize {
    std::env::var(NULLSPACE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_NULLSPACE_CAP)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::AmbientMismatch(..) | Error::ExteriorAmbientMismatch(..) => "ambient_mismatch",
        Error::IndexOutOfRange(_) => "index_out_of_range",
        Error::NegativeVariables => "negative_variables",
        Error::Singular => "singular",
        Error::NoSquareRoot(_) | Error::BadSquareRoot => "square_root",
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::DegreeMismatch { .. } | Error::LengthMismatch(..) => "shape_mismatch",
        Error::Precondition(_) => "precondition",
        Error::InvalidLevi(_) => "invalid_levi",
        Error::MalformedParameter(_) => "malformed_parameter",
        Error::Parse(_) => "parse",
        Error::Unsupported(_) => "unsupported",
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            match v {
                Value::Object(map) => {
                    for (k, x) in map {
                        let shown = match x {
                            Value::String(t) => t.clone(),
                            other => other.to_string(),
                        };
                        s.push_str(&format!("{k}: {shown}\n"));
                    }
                }
                other => {
                    s.push_str(&other.to_string());
                    s.push('\n');
                }
            }
            s
        }
    }
}

fn partition(s: &str) -> Result<Partition> {
    s.parse()
}

fn from_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("{what} JSON: {e}")))
}

fn weight_vector(s: &str, n: usize) -> Result<FundamentalWeightVector> {
    let mut a: Vec<u32> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad weight entry '{t}'"))))
        .collect::<Result<_>>()?;
    if a.len() > n {
        return Err(Error::LengthMismatch(a.len(), n));
    }
    a.resize(n, 0);
    Ok(FundamentalWeightVector::new(a))
}

fn uint(x: BigUint) -> Value {
    match u64::try_from(&x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn poly_value(p: &SparsePoly) -> Value {
    json!({ "text": p.to_string(), "json": p.to_json() })
}

fn execute(cmd: &Command, cap: usize) -> Result<Outcome> {
    Ok(match cmd {
        Command::Partition { lam, n, m } => {
            let lam = partition(lam)?;
            let mut out = Map::new();
            out.insert("op".into(), json!("conjugate"));
            out.insert("partition".into(), json!(lam));
            out.insert("conjugate".into(), json!(lam.conjugate()));
            out.insert("size".into(), json!(lam.size()));
            out.insert("length".into(), json!(lam.length()));
            if let Some(n) = n {
                out.insert("schur_dim".into(), uint(schur_dim(&lam, *n)));
            }
            if let Some(m) = m {
                out.insert("o_harmonic_dim".into(), uint(o_harmonic_dim(&lam, *m)));
                if lam.length() <= m / 2 {
                    out.insert("so_harmonic_dim".into(), uint(so_harmonic_dim(&lam, *m)?));
                }
            }
            Value::Object(out).into()
        }
        Command::Lr { lam, mu, nu, tableaux } => {
            let (lam, mu, nu) = (partition(lam)?, partition(mu)?, partition(nu)?);
            let mut out = json!({
                "op": "lr_coefficient",
                "lam": lam, "mu": mu, "nu": nu,
                "value": lr_coefficient(&lam, &mu, &nu),
            });
            if *tableaux {
                let ts: Vec<Value> = lr_tableaux(&lam, &mu, &nu)
                    .iter()
                    .map(|t| json!(t.filling))
                    .collect();
                out["tableaux"] = json!(ts);
            }
            out.into()
        }
        Command::Branch { mu, nu, p } => {
            let (mu, nu) = (partition(mu)?, partition(nu)?);
            let value = littlewood_so_multiplicity(&mu, &nu);
            let mut out = json!({
                "op": "littlewood_so_multiplicity",
                "mu": mu, "nu": nu, "value": value,
            });
            if let Some(p) = p {
                if mu.length() > p / 2 {
                    return Err(Error::Precondition(format!(
                        "character check needs length(mu) ≤ ⌊p/2⌋ = {}",
                        p / 2
                    )));
                }
                let by_chars = so_decomposition(&mu, *p).get(&nu).copied().unwrap_or(0);
                out["character_multiplicity"] = json!(by_chars);
                out["agrees"] = json!(by_chars == value);
            }
            out.into()
        }
        Command::Cauchy { p, q, r } => {
            let pairs = cauchy_decompose(*p, *q, *r);
            let total: BigUint = pairs
                .iter()
                .map(|(mu, c)| schur_dim(mu, *p) * schur_dim(c, *q))
                .sum();
            let binom = binomial(p * q, *r);
            json!({
                "op": "cauchy_decompose",
                "pairs": pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "dimension_sum": uint(total.clone()),
                "binomial": uint(binom.clone()),
                "matches": total == binom,
            })
            .into()
        }
        Command::Poly(args) => poly(args)?,
        Command::HarmonicDim { p, n, ell } => {
            let amb = Ambient::new(*p, 0, *n);
            let dim = harmonic_space_dim(amb, *ell, cap)?;
            let decomposition: BigUint = Partition::all_of(*ell as usize, *n, *ell as usize)
                .iter()
                .map(|lam| schur_dim(lam, *n) * o_harmonic_dim(lam, *p))
                .sum();
            json!({
                "op": "harmonic_space_dim",
                "p": p, "n": n, "ell": ell,
                "value": dim,
                "decomposition_sum": uint(decomposition.clone()),
                "matches": BigUint::from(dim) == decomposition,
                "nullspace_cap": cap,
            })
            .into()
        }
        Command::Minor { amb, k } => {
            let d = minor_delta(*k, amb.ambient())?;
            json!({ "op": "minor_delta", "k": k, "ambient": amb.ambient(), "value": poly_value(&d) }).into()
        }
        Command::Cocycle { action } => cocycle(action)?,
        Command::Euler { p, q, k, terms } => {
            let e = euler_form(*p, *q)?.wedge_power(*k);
            let mut out = json!({
                "op": "euler_form",
                "p": p, "q": q, "k": k,
                "is_zero": e.is_zero(),
                "degree": e.degree(),
                "num_terms": e.terms().len(),
            });
            if *terms {
                out["terms"] = e.to_json();
            }
            out.into()
        }
        Command::Vz { action } => vz(action)?,
        Command::Arthur { action } => arthur(action)?,
        Command::Verify { all, suite, timings, list } => {
            if *list {
                return Ok(json!({ "suites": SUITES }).into());
            }
            let reports: Vec<SuiteReport> = match (all, suite) {
                (true, _) | (false, None) => run_all(cap),
                (false, Some(name)) => vec![run_suite(name, cap).ok_or_else(|| {
                    Error::Parse(format!("unknown suite '{name}'; known: {}", SUITES.join(", ")))
                })?],
            };
            let passed = reports.iter().all(|r| r.passed);
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("report serializes");
                    if !timings {
                        v.as_object_mut().expect("object").remove("millis");
                    }
                    v
                })
                .collect();
            Outcome {
                body: json!({ "op": "verify", "passed": passed, "suites": rows }),
                code: if passed { 0 } else { 1 },
            }
        }
    })
}

fn poly(args: &PolyArgs) -> Result<Outcome> {
    let amb = args.amb.ambient();
    let parse = |s: &str| SparsePoly::parse(amb, s);
    Ok(match &args.op {
        PolyAction::Show { expr } => json!({ "op": "parse", "value": poly_value(&parse(expr)?) }).into(),
        PolyAction::Add { a, b } => {
            let r = parse(a)?.checked_add(&parse(b)?)?;
            json!({ "op": "poly_arith", "kind": "add", "value": poly_value(&r) }).into()
        }
        PolyAction::Mul { a, b } => {
            let r = parse(a)?.checked_mul(&parse(b)?)?;
            json!({ "op": "poly_arith", "kind": "mul", "value": poly_value(&r) }).into()
        }
        PolyAction::Partial { expr, alpha, j } => {
            let r = parse(expr)?.partial(VarIndex { alpha: *alpha, j: *j })?;
            json!({ "op": "partial", "value": poly_value(&r) }).into()
        }
        PolyAction::Laplacian { expr, i, j } => {
            let r = parse(expr)?.laplacian(*i, *j)?;
            json!({ "op": "laplacian", "value": poly_value(&r) }).into()
        }
        PolyAction::Pluriharmonic { expr } => {
            json!({ "op": "is_pluriharmonic", "value": parse(expr)?.is_pluriharmonic()? }).into()
        }
        PolyAction::Witt { kind, alpha, j } => {
            let k = match kind {
                WittArg::Prime => WittKind::Prime,
                WittArg::DoublePrime => WittKind::DoublePrime,
            };
            json!({ "op": "witt_w", "value": poly_value(&witt_w(k, *alpha, *j, amb)?) }).into()
        }
        PolyAction::GlAct { expr, g, twice, root } => {
            let rows: Vec<Vec<String>> = from_json("matrix", g)?;
            let g: Vec<Vec<GaussianRational>> = rows
                .iter()
                .map(|r| r.iter().map(|x| x.parse()).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            let root: Option<GaussianRational> = root.as_deref().map(str::parse).transpose()?;
            let t = gl_act(&g, &parse(expr)?, Twist { twice: *twice }, root.as_ref())?;
            json!({
                "op": "gl_act",
                "det": t.det.to_string(),
                "pending_half_power": t.pending_half,
                "value": poly_value(&t.poly),
            })
            .into()
        }
    })
}

fn cocycle(action: &CocycleAction) -> Result<Outcome> {
    Ok(match action {
        CocycleAction::Value { amb, a } => {
            let amb = amb.ambient();
            let cv = evaluate_cocycle(&weight_vector(a, amb.n)?, amb)?;
            let mut body = cv.to_json()?;
            body["op"] = json!("full_cocycle_value");
            body.into()
        }
        CocycleAction::Verify { amb, a } => {
            let amb = amb.ambient();
            let cv = evaluate_cocycle(&weight_vector(a, amb.n)?, amb)?;
            let ok = cv.matches_closed_form() && cv.is_pluriharmonic()?;
            Outcome {
                body: json!({
                    "op": "full_cocycle_value",
                    "ambient": amb,
                    "closed_form": cv.closed_form.to_string(),
                    "matches_closed_form": cv.matches_closed_form(),
                    "pluriharmonic": cv.is_pluriharmonic()?,
                    "passed": ok,
                }),
                code: if ok { 0 } else { 1 },
            }
        }
        CocycleAction::Ktype { amb, lam } => {
            let w = vz_ktype_weight(amb.ambient(), &partition(lam)?)?;
            let mut body = serde_json::to_value(&w).expect("weight serializes");
            body["op"] = json!("vz_ktype_weight");
            body["twist"] = json!(w.twist.to_string());
            body.into()
        }
    })
}

fn vz(action: &VzAction) -> Result<Outcome> {
    Ok(match action {
        VzAction::Levis { p, q, r } => {
            let levis = match r {
                Some(r) => low_degree_levis(*r, *p, *q)?,
                None => all_levis(*p, *q),
            };
            let rows: Vec<Value> = levis
                .iter()
                .map(|l| {
                    let dim = dim_u_cap_p(l, *p, *q).expect("enumerated Levis are valid");
                    json!({ "levi": l, "display": l.to_string(), "r": dim, "shape": l.shape() })
                })
                .collect();
            json!({ "op": "low_degree_levis", "p": p, "q": q, "levis": rows }).into()
        }
        VzAction::Dim { levi } => {
            let l: LeviDatum = from_json("Levi", levi)?;
            let (p, q) = l.signature();
            let (e, f) = two_rho_u_cap_p(&l, p, q)?;
            json!({
                "op": "dim_u_cap_p",
                "levi": l,
                "p": p, "q": q,
                "value": dim_u_cap_p(&l, p, q)?,
                "two_rho_so_p": e,
                "two_rho_so_q": f,
                "shape": l.shape(),
            })
            .into()
        }
        VzAction::Cohomology { family } => {
            let fam: CohomologyFamily = from_json("family", family)?;
            let t = cohomology_degrees(fam)?;
            let mut body = serde_json::to_value(&t).expect("table serializes");
            body["op"] = json!("cohomology_degrees");
            body["nonzero_degrees"] = json!(t.nonzero_degrees());
            body.into()
        }
    })
}

fn parameter(s: &str) -> Result<ArchArthurParameter> {
    let psi: ArchArthurParameter = from_json("parameter", s)?;
    psi.validate()?;
    Ok(psi)
}

fn arthur(action: &ArthurAction) -> Result<Outcome> {
    Ok(match action {
        ArthurAction::Validate { psi } => {
            let psi = parameter(psi)?;
            json!({ "op": "validate", "valid": true, "display": psi.to_string() }).into()
        }
        ArthurAction::Infchar { psi } => {
            let psi = parameter(psi)?;
            let ic = infinitesimal_character(&psi)?;
            json!({
                "op": "infinitesimal_character",
                "entries": ic.entries.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
                "display": ic.to_string(),
                "regular": is_regular(&ic),
            })
            .into()
        }
        ArthurAction::Exponents { psi, levi, pair_multiplicity } => {
            let mult = match pair_multiplicity {
                PairArg::One => PairMultiplicity::One,
                PairArg::Two => PairMultiplicity::Two,
            };
            let psi = match (psi, levi) {
                (Some(s), _) => parameter(s)?,
                (None, Some(l)) => aj_parameter(&from_json("Levi", l)?, &AjCharacters::default())?,
                (None, None) => {
                    return Err(Error::Parse("exponents needs --psi or --levi".into()));
                }
            };
            let exps = exponents(&psi, mult)?;
            json!({
                "op": "exponents",
                "parameter": psi,
                "display": psi.to_string(),
                "pair_multiplicity": mult,
                "exponents": exps,
                "max": exps.first(),
            })
            .into()
        }
        ArthurAction::Predicates { psi, n, p, q, r } => {
            let query = PredicateQuery {
                psi: psi.as_deref().map(parameter).transpose()?,
                n: *n,
                p: *p,
                q: *q,
                r: *r,
            };
            let mut body = serde_json::to_value(predicates(&query)?).expect("report serializes");
            body["op"] = json!("predicates");
            body.into()
        }
        ArthurAction::AjParam { levi, chars } => {
            let l: LeviDatum = from_json("Levi", levi)?;
            let chars: AjCharacters = match chars {
                Some(c) => from_json("characters", c)?,
                None => AjCharacters::default(),
            };
            let psi = aj_parameter(&l, &chars)?;
            let ic = infinitesimal_character(&psi)?;
            json!({
                "op": "aj_parameter",
                "parameter": psi,
                "display": psi.to_string(),
                "infinitesimal_character": ic.to_string(),
                "regular": is_regular(&ic),
            })
            .into()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["fockcalc"];
        argv.extend_from_slice(args);
        let (code, out) = run(argv);
        (code, serde_json::from_str(&out).unwrap_or(Value::Null))
    }

    #[test]
    fn lr_example() {
        let (code, v) = call(&["lr", "--lam", "2", "--mu", "1", "--nu", "1"]);
        assert_eq!(code, 0);
        assert_eq!(v["value"], json!(1));
        assert_eq!(v["op"], json!("lr_coefficient"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["fockcalc", "lr", "--lam", "2"]).0, 2);
        assert_eq!(run(["fockcalc", "lr", "--lam", "1,2", "--mu", "1", "--nu", "1"]).0, 2);
        assert_eq!(run(["fockcalc", "nonsense"]).0, 2);
    }

    #[test]
    fn text_format() {
        let (code, out) = run(["fockcalc", "--format", "text", "partition", "--lam", "3,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("conjugate: [2,1,1]"), "{out}");
    }
}
