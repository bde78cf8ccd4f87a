//! `nearfield` command-line front end.
//!
//! Every command prints one JSON report on stdout (or CSV / a plain table
//! on request). Exit codes: 0 ok, 1 domain error, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nearfield::census::{dset_sweep, SweepMode};
use nearfield::dickson::{list_dickson_pairs, subnearfield_orders, DicksonPair, NearfieldCtx};
use nearfield::dist::{classify_pair, dset};
use nearfield::gf::{format_poly, parse_modulus, FFElem, FieldCtx};
use nearfield::nearvec::{ege, parse_vectors, r_dim, seed_construct_full, NFVector};
use nearfield::verify::{check_ids, run_check};
use nearfield::Error;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nearfield", version, about = "Finite Dickson nearfields and their near-vector spaces")]
struct Cli {
    /// Print a plain-text table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct CtxArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u64,
    /// Monic irreducible polynomial of degree l*n, e.g. `x^4+2`.
    #[arg(long)]
    modulus: Option<String>,
    /// Generator of the multiplicative group, e.g. `x+2`.
    #[arg(long)]
    generator: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List Dickson pairs (q, n) with q = p^l.
    Pairs {
        #[arg(long)]
        max_p: u64,
        #[arg(long)]
        max_l: u32,
        #[arg(long)]
        max_n: u64,
    },
    /// Describe the field, cosets and distributive elements of DN(q, n).
    FieldInfo {
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Nearfield product a ∘ b
    NfMul {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Inverse of a under ∘
    NfInv {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: String,
    },
    /// The coset index k with a in g^[k]_q H.
    Coset {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        a: String,
    },
    /// Basis and classification of D(alpha, beta).
    Dset {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Classification of D(alpha, beta) only
    Classify {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Census of D(alpha, beta) keyed by coset triple.
    DsetSweep {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Scan all ordered non-zero pairs.
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow exhaustive sweeps above the size limit.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        csv: bool,
    },
    /// R-basis of gen(vectors) by expanded Gaussian elimination.
    Gen {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Vectors separated by `|`, entries by `;`.
        #[arg(long)]
        vectors: String,
    },
    /// R-dimension of gen(vectors)
    Rdim {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        vectors: String,
    },
    /// Two vectors generating all of R^m.
    SeedConstruct {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        m: usize,
    },
    /// Run the verification suite.
    VerifyPaper {
        /// Run only these check ids.
        #[arg(long = "check")]
        checks: Vec<u32>,
    },
}

enum Failure {
    /// A flag value that could not be read; carries the flag name.
    Usage(String, Error),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(flag: &str, e: Error) -> Failure {
    Failure::Usage(flag.to_string(), e)
}

#[derive(Serialize)]
struct ContextEcho {
    q: u64,
    n: u64,
    modulus: String,
    generator: String,
}

#[derive(Serialize)]
struct Report {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    context: Option<ContextEcho>,
    payload: Value,
    status: Value,
}

/// What a command produced, before rendering.
enum Output {
    Json(Value),
    Csv(String),
    /// JSON payload that also decides the exit status.
    Verdict(Value, bool),
}

fn build_ctx(a: &CtxArgs) -> Result<NearfieldCtx, Failure> {
    let pair = DicksonPair::new(a.q, a.n)?;
    let d = pair.degree();
    let modulus = match &a.modulus {
        Some(t) => Some(parse_modulus(pair.p, d, t).map_err(|e| usage("modulus", e))?),
        None => None,
    };
    let generator = match &a.generator {
        Some(t) => {
            let f = FieldCtx::new(pair.p, d, modulus.as_deref(), None)?;
            Some(f.parse(t).map_err(|e| usage("generator", e))?.coeffs().to_vec())
        }
        None => None,
    };
    Ok(NearfieldCtx::new(a.q, a.n, modulus.as_deref(), generator.as_deref())?)
}

fn echo(ctx: &NearfieldCtx) -> ContextEcho {
    let f = ctx.field();
    ContextEcho { q: ctx.q(), n: ctx.n(), modulus: format_poly(f.modulus()), generator: f.format(f.generator()) }
}

fn elem(ctx: &NearfieldCtx, flag: &str, text: &str) -> Result<FFElem, Failure> {
    ctx.field().parse(text).map_err(|e| usage(flag, e))
}

fn vectors(ctx: &NearfieldCtx, text: &str) -> Result<Vec<NFVector>, Failure> {
    parse_vectors(ctx, text).map_err(|e| usage("vectors", e))
}

fn fmt_list(ctx: &NearfieldCtx, xs: &[FFElem]) -> Vec<String> {
    xs.iter().map(|e| ctx.field().format(e)).collect()
}

fn coset_label(k: usize, n: u64) -> String {
    if k as u64 == n {
        "H".into()
    } else {
        format!("g^[{k}]H")
    }
}

fn ctx_args(cmd: &Cmd) -> Option<&CtxArgs> {
    match cmd {
        Cmd::FieldInfo { ctx }
        | Cmd::NfMul { ctx, .. }
        | Cmd::NfInv { ctx, .. }
        | Cmd::Coset { ctx, .. }
        | Cmd::Dset { ctx, .. }
        | Cmd::Classify { ctx, .. }
        | Cmd::DsetSweep { ctx, .. }
        | Cmd::Gen { ctx, .. }
        | Cmd::Rdim { ctx, .. }
        | Cmd::SeedConstruct { ctx, .. } => Some(ctx),
        Cmd::Pairs { .. } | Cmd::VerifyPaper { .. } => None,
    }
}

fn run(cmd: &Cmd, ctx: Option<&NearfieldCtx>) -> Result<Output, Failure> {
    let need = || ctx.expect("context built for this command");
    let out = match cmd {
        Cmd::Pairs { max_p, max_l, max_n } => {
            let pairs: Vec<Value> = list_dickson_pairs(*max_p, *max_l, *max_n)
                .iter()
                .map(|d| json!({"q": d.q, "n": d.n, "p": d.p, "l": d.l}))
                .collect();
            Output::Json(json!({ "pairs": pairs }))
        }
        Cmd::FieldInfo { .. } => {
            let r = need();
            let f = r.field();
            let pair = r.pair();
            let dr = if r.q() <= 1000 { json!(fmt_list(r, &r.dist_elements_dr())) } else { Value::Null };
            let orders: Vec<String> = subnearfield_orders(r.q(), r.n())?.iter().map(u128::to_string).collect();
            Output::Json(json!({
                "p": pair.p,
                "l": pair.l,
                "degree": f.degree(),
                "size": r.size(),
                "residues": r.residues(),
                "coset_reps": fmt_list(r, r.coset_reps()),
                "dist_elements": dr,
                "subnearfield_orders": orders,
            }))
        }
        Cmd::NfMul { a, b, .. } => {
            let r = need();
            let (x, y) = (elem(r, "a", a)?, elem(r, "b", b)?);
            Output::Json(json!({ "result": r.field().format(&r.nf_mul(&x, &y)) }))
        }
        Cmd::NfInv { a, .. } => {
            let r = need();
            let x = elem(r, "a", a)?;
            Output::Json(json!({ "result": r.field().format(&r.nf_inv(&x)?) }))
        }
        Cmd::Coset { a, .. } => {
            let r = need();
            let k = r.coset_index(&elem(r, "a", a)?)?;
            Output::Json(json!({ "k": k, "coset": coset_label(k, r.n()) }))
        }
        Cmd::Dset { alpha, beta, .. } => {
            let r = need();
            let res = dset(r, &elem(r, "alpha", alpha)?, &elem(r, "beta", beta)?);
            Output::Json(json!({
                "cosets": {"r": res.cosets.r, "s": res.cosets.s, "t": res.cosets.t},
                "basis": fmt_list(r, &res.basis),
                "dim_p": res.dim_p,
                "classification": res.classification.to_string(),
            }))
        }
        Cmd::Classify { alpha, beta, .. } => {
            let r = need();
            let c = classify_pair(r, &elem(r, "alpha", alpha)?, &elem(r, "beta", beta)?);
            Output::Json(json!({ "classification": c.to_string() }))
        }
        Cmd::DsetSweep { exhaustive, samples, seed, force, csv, .. } => {
            let r = need();
            let mode = if *exhaustive { SweepMode::Exhaustive } else { SweepMode::Sample { n: *samples, seed: *seed } };
            let census = dset_sweep(r, mode, *force)?;
            if *csv {
                Output::Csv(census.to_csv())
            } else {
                let rows: Vec<Value> = census
                    .rows
                    .iter()
                    .map(|row| {
                        json!({
                            "r": row.r, "s": row.s, "t": row.t, "dim_p": row.dim_p,
                            "classification": row.classification.to_string(), "count": row.count,
                        })
                    })
                    .collect();
                Output::Json(json!({ "pairs": census.pairs, "rows": rows }))
            }
        }
        Cmd::Gen { vectors: v, .. } => {
            let r = need();
            let basis = ege(r, &vectors(r, v)?)?;
            let trace: Vec<Value> = basis
                .trace
                .iter()
                .map(|t| {
                    json!({
                        "column": t.column, "row_r": t.row_r, "row_s": t.row_s,
                        "alpha": r.field().format(&t.alpha),
                        "beta": r.field().format(&t.beta),
                        "lambda": r.field().format(&t.lambda),
                    })
                })
                .collect();
            let rows: Vec<String> = basis.rows.iter().map(|u| u.format(r)).collect();
            Output::Json(json!({ "dim": basis.dim, "rows": rows, "trace": trace }))
        }
        Cmd::Rdim { vectors: v, .. } => {
            let r = need();
            Output::Json(json!({ "r_dim": r_dim(r, &vectors(r, v)?)? }))
        }
        Cmd::SeedConstruct { m, .. } => {
            let r = need();
            let (v, w) = seed_construct_full(r, *m)?;
            let d = r_dim(r, &[v.clone(), w.clone()])?;
            Output::Json(json!({ "v": v.format(r), "w": w.format(r), "r_dim": d }))
        }
        Cmd::VerifyPaper { checks } => {
            let ids = if checks.is_empty() { check_ids() } else { checks.clone() };
            let mut outcomes = Vec::new();
            for id in ids {
                let o =
                    run_check(id).ok_or_else(|| usage("check", Error::OutOfRange(format!("no check with id {id}"))))?;
                eprintln!("{o}");
                outcomes.push(o);
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let total = outcomes.len();
            eprintln!("{passed} of {total} checks passed");
            let all = passed == total;
            Output::Verdict(json!({ "checks": outcomes, "passed": passed, "total": total }), all)
        }
    };
    Ok(out)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            xs.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

fn render_table(payload: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = payload else {
        return scalar(payload);
    };
    for (k, v) in map {
        match v {
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str(&format!("{k}:\n"));
                for item in items {
                    let Value::Object(fields) = item else { continue };
                    let cells: Vec<String> = fields.iter().map(|(fk, fv)| format!("{fk}={}", scalar(fv))).collect();
                    out.push_str(&format!("  {}\n", cells.join("  ")));
                }
            }
            _ => out.push_str(&format!("{k}: {}\n", scalar(v))),
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = command_name(&cli.cmd).to_string();
    let ctx = match ctx_args(&cli.cmd).map(build_ctx).transpose() {
        Ok(c) => c,
        Err(f) => return fail(&command, None, f),
    };
    match run(&cli.cmd, ctx.as_ref()) {
        Ok(Output::Csv(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(payload)) => {
            emit(&cli, Report { command, context: ctx.as_ref().map(echo), payload, status: json!("ok") });
            ExitCode::SUCCESS
        }
        Ok(Output::Verdict(payload, ok)) => {
            let status = if ok {
                json!("ok")
            } else {
                json!({"error": {"code": "CheckFailed", "message": "some checks failed"}})
            };
            emit(&cli, Report { command, context: None, payload, status });
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => fail(&command, ctx.as_ref(), f),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Pairs { .. } => "pairs",
        Cmd::FieldInfo { .. } => "field-info",
        Cmd::NfMul { .. } => "nf-mul",
        Cmd::NfInv { .. } => "nf-inv",
        Cmd::Coset { .. } => "coset",
        Cmd::Dset { .. } => "dset",
        Cmd::Classify { .. } => "classify",
        Cmd::DsetSweep { .. } => "dset-sweep",
        Cmd::Gen { .. } => "gen",
        Cmd::Rdim { .. } => "rdim",
        Cmd::SeedConstruct { .. } => "seed-construct",
        Cmd::VerifyPaper { .. } => "verify-paper",
    }
}

fn emit(cli: &Cli, report: Report) {
    if cli.table {
        print!("{}", render_table(&report.payload));
    } else {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    }
}

fn fail(command: &str, ctx: Option<&NearfieldCtx>, f: Failure) -> ExitCode {
    let (code, message, exit) = match f {
        Failure::Usage(flag, e) => (e.code(), format!("--{flag}: {e}"), 2),
        Failure::Domain(e) => (e.code(), e.to_string(), 1),
    };
    eprintln!("error: {message}");
    let report = Report {
        command: command.to_string(),
        context: ctx.map(echo),
        payload: Value::Null,
        status: json!({"error": {"code": code, "message": message}}),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::from(exit)
}
