use bcdaha::central_char::{
    evaluate_character, expected_y1_squared, nu_var, reference_c2_c3, select_shift_order, ycc_rhs,
    CaseTag, CentralError, YccForm, MU, TAU,
};
use bcdaha::daha::verify_linear_rep;
use bcdaha::exactmath::{format_rational, parse_rational, MultiPoly, Rational};
use bcdaha::functor_image::{
    build_p_tilde, derive, eigenvalue_table, image_presentation, predicted_dimension, validate,
    FunctorParams, ParamError,
};
use bcdaha::selftest::{run_all, SelftestOptions};
use bcdaha::tensor_model::{ModelOptions, TensorError, DEFAULT_MAX_DIM};
use bcdaha::verify::{verify_params, VerifyError};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_PASS: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_REJECT: u8 = 2;
const EXIT_GUARDRAIL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bcdaha",
    version,
    about = "Exact dAHA modules of type BC from U(p,q) principal series"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a parameter file and print the derived quantities.
    CheckParams { file: PathBuf },
    /// Check dimension, spectrum, relations and isomorphism for a parameter file.
    Verify {
        file: Option<PathBuf>,
        /// Build the tensor model and compare it with the closed forms.
        #[arg(long)]
        oracle: bool,
        /// JSON array of parameter sets, checked one after another.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Refuse tensor models with dim(W)·N^n above this.
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u128,
    },
    /// Casimir values and the y₁² identity for n = 1.
    Central {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// 1 or 2
        #[arg(long)]
        case: u8,
        /// Position of the lowered torus entry in case 1.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Keep μ, τ, ν symbolic (the default).
        #[arg(long, conflicts_with = "at")]
        symbolic: bool,
        /// Evaluate at a point, e.g. mu=0,tau=1/2,nu1=3/5
        #[arg(long)]
        at: Option<String>,
    },
    /// Run the acceptance grid.
    Selftest {
        /// Negate κ₁ in the tensor model; the suite should fail.
        #[arg(long)]
        inject_kappa_flip: bool,
    },
}

struct RunReport {
    command: String,
    params: Value,
    results: Value,
    discrepancies: Vec<String>,
    text: Vec<String>,
    exit: u8,
}

impl RunReport {
    fn new(command: &str, params: Value) -> Self {
        RunReport {
            command: command.into(),
            params,
            results: Value::Null,
            discrepancies: Vec::new(),
            text: Vec::new(),
            exit: EXIT_PASS,
        }
    }

    fn status(&self) -> &'static str {
        match self.exit {
            EXIT_PASS if self.discrepancies.is_empty() => "pass",
            EXIT_INPUT => "input-error",
            EXIT_GUARDRAIL => "guardrail",
            _ => "fail",
        }
    }

    fn to_json(&self, timing_ms: u64) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "timing_ms": timing_ms,
            "discrepancies": self.discrepancies,
            "status": self.status(),
        })
    }
}

enum Failure {
    Input(String),
    Reject(String),
    Guardrail(String),
}

impl From<ParamError> for Failure {
    fn from(e: ParamError) -> Self {
        match e {
            ParamError::Inadmissible(_) => Failure::Reject(e.to_string()),
            ParamError::Daha(_) => Failure::Reject(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Params(p) => p.into(),
            VerifyError::Tensor(TensorError::Guardrail { .. }) => Failure::Guardrail(e.to_string()),
            VerifyError::Tensor(TensorError::Params(p)) => p.into(),
            VerifyError::Tensor(t) => Failure::Reject(t.to_string()),
        }
    }
}

impl From<CentralError> for Failure {
    fn from(e: CentralError) -> Self {
        match e {
            CentralError::Params(p) => p.into(),
            CentralError::Tensor(TensorError::Guardrail { .. }) => {
                Failure::Guardrail(e.to_string())
            }
            _ => Failure::Reject(e.to_string()),
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn read_params(path: &PathBuf) -> Result<FunctorParams, Failure> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
    FunctorParams::from_json(&s).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn read_grid(path: &PathBuf) -> Result<Vec<FunctorParams>, Failure> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&s).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn check_params(report: &mut RunReport, file: &PathBuf) -> Result<(), Failure> {
    let params = read_params(file)?;
    report.params = to_value(&params);
    params.check()?;
    let derived = derive(&params)?;
    let validation = validate(&params)?;
    let violations: Vec<String> = validation
        .as_ref()
        .err()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .unwrap_or_default();
    let mut results = json!({
        "admissible": validation.is_ok(),
        "derived": to_value(&derived),
        "violations": violations,
    });
    report
        .text
        .push(format!("tau = {}", format_rational(&derived.tau)));
    report.text.push(format!(
        "kappa1 = {}, kappa2 = {}",
        format_rational(&derived.kappa1),
        format_rational(&derived.kappa2)
    ));
    match validation {
        Ok(a) => {
            let pred = predicted_dimension(&params)?;
            results["predicted_dim"] = json!(pred.dimension as u64);
            report.text.push(format!(
                "admissible: blocks {:?}, xi^mu = {:?}",
                a.blocks(),
                a.xi_mu.parts()
            ));
            report
                .text
                .push(format!("predicted dimension {}", pred.dimension));
        }
        Err(v) => {
            report.text.push("not admissible:".into());
            for x in &v {
                report.text.push(format!("  {}", x));
            }
            report.discrepancies.extend(v.iter().map(|x| x.to_string()));
            report.exit = EXIT_REJECT;
        }
    }
    report.results = results;
    Ok(())
}

/// Closed forms and the induced module only, without the tensor model.
fn verify_closed_forms(params: &FunctorParams) -> Result<(Value, Vec<String>), Failure> {
    params.check()?;
    let derived = derive(params)?;
    if let Err(v) = validate(params)? {
        return Err(Failure::Reject(format!(
            "not admissible: {}",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let pred = predicted_dimension(params)?;
    let table = eigenvalue_table(params)?;
    let rep = build_p_tilde(params)?;
    let pres = image_presentation(params)?;
    let rel = verify_linear_rep(&pres, &rep).map_err(|e| Failure::Reject(e.to_string()))?;
    let mut disc = Vec::new();
    if rep.dim as u128 != pred.dimension {
        disc.push(format!(
            "induced module has dimension {} but {} is predicted",
            rep.dim, pred.dimension
        ));
    }
    disc.extend(
        rel.failures()
            .iter()
            .map(|c| format!("relation fails on the induced module: {}", c.relation)),
    );
    let table: Vec<Vec<String>> = table
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    Ok((
        json!({
            "derived": to_value(&derived),
            "predicted_dim": pred.dimension as u64,
            "induced_dim": rep.dim,
            "eigenvalues": table,
            "relations": to_value(&rel.checks),
        }),
        disc,
    ))
}

fn verify_one(
    params: &FunctorParams,
    oracle: bool,
    max_dim: u128,
) -> Result<(Value, Vec<String>, Vec<String>), Failure> {
    if !oracle {
        let (v, d) = verify_closed_forms(params)?;
        let text = vec![
            format!("predicted dimension {}", v["predicted_dim"]),
            format!("eigenvalues y_k on w_s: {}", v["eigenvalues"]),
            format!(
                "induced module: {} relations checked",
                v["relations"].as_array().map_or(0, |a| a.len())
            ),
        ];
        return Ok((v, d, text));
    }
    params.check()?;
    if let Err(v) = validate(params)? {
        return Err(Failure::Reject(format!(
            "not admissible: {}",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let r = verify_params(
        params,
        ModelOptions {
            max_dim,
            flip_kappa_sign: false,
        },
    )?;
    let mut text = vec![format!(
        "dimension: predicted {}, tensor model {}",
        r.predicted_dim, r.model_dim
    )];
    text.push(format!(
        "relations: {}",
        if r.relations_pass { "all hold" } else { "FAIL" }
    ));
    if let Some(e) = &r.eigen {
        text.push(format!(
            "eigenvalues y_k on varpi_s: {:?} ({})",
            e.table,
            if e.shifted_index { "confirmed" } else { "FAIL" }
        ));
    }
    for (k, s) in r.spectra.iter().enumerate() {
        if let Some(s) = s {
            let parts: Vec<String> = s
                .iter()
                .map(|e| format!("{} (x{})", e.value, e.multiplicity))
                .collect();
            text.push(format!("spectrum of y{}: {}", k + 1, parts.join(", ")));
        }
    }
    if let Some(pc) = &r.varpi {
        text.push(format!(
            "varpi checks: block invariance {}, Specht action {}, sign action {}, orbit spans {}",
            pc.block_invariance, pc.specht_action, pc.sign_action, pc.orbit_spanning
        ));
    }
    text.push(format!(
        "isomorphic to the induced module: {}",
        r.isomorphic.unwrap_or(false)
    ));
    let disc = r.discrepancies.clone();
    Ok((to_value(&r), disc, text))
}

fn verify(
    report: &mut RunReport,
    file: Option<PathBuf>,
    oracle: bool,
    grid: Option<PathBuf>,
    max_dim: u128,
) -> Result<(), Failure> {
    match (file, grid) {
        (Some(f), None) => {
            let params = read_params(&f)?;
            report.params = to_value(&params);
            let (v, d, t) = verify_one(&params, oracle, max_dim)?;
            report.results = v;
            report.discrepancies = d;
            report.text = t;
        }
        (None, Some(g)) => {
            let grid = read_grid(&g)?;
            report.params = to_value(&grid);
            let mut results = Vec::new();
            for (i, params) in grid.iter().enumerate() {
                match verify_one(params, oracle, max_dim) {
                    Ok((v, d, _)) => {
                        report.text.push(format!(
                            "point {}: {}",
                            i + 1,
                            if d.is_empty() { "pass" } else { "FAIL" }
                        ));
                        report
                            .discrepancies
                            .extend(d.into_iter().map(|x| format!("point {}: {}", i + 1, x)));
                        results.push(v);
                    }
                    Err(Failure::Guardrail(m)) => {
                        return Err(Failure::Guardrail(format!("point {}: {}", i + 1, m)))
                    }
                    Err(Failure::Input(m)) => {
                        return Err(Failure::Input(format!("point {}: {}", i + 1, m)))
                    }
                    Err(Failure::Reject(m)) => {
                        report.text.push(format!("point {}: rejected", i + 1));
                        report.discrepancies.push(format!("point {}: {}", i + 1, m));
                        results.push(json!({ "rejected": m }));
                    }
                }
            }
            report.results = Value::Array(results);
        }
        _ => return Err(Failure::Input("give exactly one of FILE or --grid".into())),
    }
    if !report.discrepancies.is_empty() {
        report.exit = EXIT_REJECT;
    }
    Ok(())
}

fn parse_point(s: &str, p: usize) -> Result<BTreeMap<String, Rational>, Failure> {
    let mut vals = BTreeMap::new();
    for part in s.split(',').filter(|x| !x.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("expected name=value, got {:?}", part)))?;
        let v = parse_rational(v.trim()).map_err(|e| Failure::Input(format!("{}: {}", k, e)))?;
        vals.insert(k.trim().to_string(), v);
    }
    let mut needed = vec![MU.to_string(), TAU.to_string()];
    needed.extend((1..=p).map(nu_var));
    for name in needed {
        if !vals.contains_key(&name) {
            return Err(Failure::Input(format!("--at is missing {}", name)));
        }
    }
    Ok(vals)
}

fn central(
    report: &mut RunReport,
    p: usize,
    q: usize,
    case: u8,
    k: usize,
    at: Option<String>,
) -> Result<(), Failure> {
    report.params = json!({ "p": p, "q": q, "case": case, "k": k });
    let tag = match (case, p == q) {
        (1, false) => CaseTag::Case1(k),
        (1, true) => CaseTag::Case1PEqualsQ(k),
        (2, _) => CaseTag::Case2,
        _ => return Err(Failure::Input(format!("case must be 1 or 2, got {}", case))),
    };
    let (c2, c3) = evaluate_character(p, q, tag)?;
    let (d2, d3) = reference_c2_c3(p, q, tag)?;
    let y2 = ycc_rhs(&c2, &c3, p, q, YccForm::Corrected);
    let expected = expected_y1_squared(p, q, tag);
    let identity = y2 == expected;
    let formula = if p == q {
        "p = q formula"
    } else {
        "general formula, corrected constant term"
    };
    let mut results = json!({
        "case": to_value(&tag),
        "shift_order": to_value(&select_shift_order()),
        "formula": formula,
        "c2": c2.to_string(),
        "c3": c3.to_string(),
        "c2_matches_reference": c2 == d2,
        "c3_matches_reference": c3 == d3,
        "y1_squared": y2.to_string(),
        "expected": expected.to_string(),
        "identity_holds": identity,
    });
    if p != q {
        let printed = ycc_rhs(&c2, &c3, p, q, YccForm::Printed);
        results["printed_constant_term_holds"] = json!(printed == expected);
    }
    report.text.push(format!("case {:?}, {}", tag, formula));
    report.text.push(format!("c2 = {}", c2));
    report.text.push(format!("c3 = {}", c3));
    if c3 != d3 {
        report.text.push(format!(
            "c3 differs from the reference value by {}",
            c3.sub_poly(&d3)
        ));
    }
    report.text.push(format!("y1^2 = {}", y2));
    report.text.push(format!(
        "lambda_11^2 = {} ({})",
        expected,
        if identity { "equal" } else { "NOT equal" }
    ));
    if !identity {
        report
            .discrepancies
            .push(format!("y1^2 = {} but lambda_11^2 = {}", y2, expected));
    }
    if let Some(s) = at {
        let vals = parse_point(&s, p)?;
        let ev = |m: &MultiPoly| {
            m.eval(&vals)
                .map(|x| format_rational(&x))
                .map_err(|e| Failure::Input(e.to_string()))
        };
        let point = json!({
            "values": vals.iter().map(|(k, v)| (k.clone(), json!(format_rational(v)))).collect::<serde_json::Map<_, _>>(),
            "c2": ev(&c2)?,
            "c3": ev(&c3)?,
            "y1_squared": ev(&y2)?,
            "expected": ev(&expected)?,
        });
        report.text.push(format!(
            "at {}: c2 = {}, c3 = {}, y1^2 = {}",
            s, point["c2"], point["c3"], point["y1_squared"]
        ));
        results["at"] = point;
    }
    report.results = results;
    if !report.discrepancies.is_empty() {
        report.exit = EXIT_REJECT;
    }
    Ok(())
}

fn selftest(report: &mut RunReport, inject: bool) {
    report.params = json!({ "inject_kappa_flip": inject });
    let results = run_all(SelftestOptions {
        inject_kappa_flip: inject,
    });
    for r in &results {
        report.text.push(r.line());
        if !r.passed {
            report.discrepancies.extend(
                r.failures
                    .iter()
                    .map(|f| format!("criterion {}: {}", r.id, f)),
            );
            if r.failures.is_empty() {
                report
                    .discrepancies
                    .push(format!("criterion {} failed", r.id));
            }
        }
    }
    report.results = to_value(&results);
    if !report.discrepancies.is_empty() {
        report.exit = EXIT_REJECT;
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t0 = Instant::now();
    let (name, outcome, mut report) = match cli.command {
        Command::CheckParams { file } => {
            let mut r = RunReport::new("check-params", Value::Null);
            let o = check_params(&mut r, &file);
            ("check-params", o, r)
        }
        Command::Verify {
            file,
            oracle,
            grid,
            max_dim,
        } => {
            let mut r = RunReport::new("verify", Value::Null);
            let o = verify(&mut r, file, oracle, grid, max_dim);
            ("verify", o, r)
        }
        Command::Central {
            p,
            q,
            case,
            k,
            symbolic: _,
            at,
        } => {
            let mut r = RunReport::new("central", Value::Null);
            let o = central(&mut r, p, q, case, k, at);
            ("central", o, r)
        }
        Command::Selftest { inject_kappa_flip } => {
            let mut r = RunReport::new("selftest", Value::Null);
            selftest(&mut r, inject_kappa_flip);
            ("selftest", Ok(()), r)
        }
    };
    if let Err(f) = outcome {
        let (code, msg) = match f {
            Failure::Input(m) => (EXIT_INPUT, m),
            Failure::Reject(m) => (EXIT_REJECT, m),
            Failure::Guardrail(m) => (EXIT_GUARDRAIL, m),
        };
        report.exit = code;
        report.discrepancies.push(msg.clone());
        if !cli.json {
            eprintln!("{}: {}", name, msg);
        }
    }
    let timing_ms = t0.elapsed().as_millis() as u64;
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = if cli.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report.to_json(timing_ms)).expect("JSON")
        )
    } else {
        report
            .text
            .iter()
            .try_for_each(|line| writeln!(out, "{}", line))
            .and_then(|_| writeln!(out, "status: {} ({} ms)", report.status(), timing_ms))
    };
    ExitCode::from(report.exit)
}
