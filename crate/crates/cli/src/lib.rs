//! Command implementations behind the `varchenko` binary. Each command takes
//! file contents and returns rendered text, a JSON value and a verdict.

use std::fmt;

use clap::ValueEnum;
use serde_json::{json, Value};
use varchenko_core::euler::{classify, euler_closure, lemma_ch_check, lemma_chm_check};
use varchenko_core::format::{parse_arrangement, parse_vmatrix};
use varchenko_core::report::{Context, ReportEntry, SCHEMA_VERSION};
use varchenko_core::tits::tits_suite;
use varchenko_core::varchenko::{
    det_symbolic, expand_factors, factor_by_weights, factorization, format_factors, mad_recurrence_check,
    v_path_identity_check, DetConfig, DetMode,
};
use varchenko_core::witt::witt_sweep;
use varchenko_core::{
    enumerate_apartments, enumerate_faces, Apartment, Arrangement, FaceComplex, Monomial, Polynomial, Sign,
    VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<varchenko_core::Error> for CliError {
    fn from(e: varchenko_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("serializable") + "\n"
        } else {
            self.text.clone()
        }
    }
}

pub fn read_input(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// `h2^- h3^-`, or `1`.
pub fn compact(p: &Polynomial) -> String {
    match p.as_monomial() {
        Some(m) if m.is_one() => "1".into(),
        Some(m) => m.iter().map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect::<Vec<_>>().join(" "),
        None => p.to_string(),
    }
}

pub fn cmd_faces(text: &str) -> CliResult<Outcome> {
    let arr = parse_arrangement(text)?;
    let c = enumerate_faces(&arr)?;
    let mut out = format!(
        "{} faces, {} chambers, dim {}, min face dim {}\n",
        c.len(),
        c.chambers().len(),
        c.dim(),
        c.min_dim()
    );
    let mut faces = Vec::new();
    for f in c.faces() {
        let kind = if f.is_chamber() { "chamber" } else { "face" };
        out.push_str(&format!("{:>4}  {}  dim {}  rank {}  {kind}\n", f.id.0, f.signs, f.dim, c.rank(f.id)));
        faces.push(json!({
            "id": f.id.0,
            "signs": f.signs.to_string(),
            "dim": f.dim,
            "rank": c.rank(f.id),
            "chamber": f.is_chamber(),
            "witness": f.witness.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        }));
    }
    let mut chambers = Vec::new();
    for &d in c.chambers() {
        chambers.push(json!({
            "id": d.0,
            "signs": c.signs(d).to_string(),
            "type": classify(&c, d)?,
            "euler": euler_closure(&c, d)?,
        }));
    }
    let json = json!({
        "schema": SCHEMA_VERSION,
        "arrangement_hash": arr.digest(),
        "dim": c.dim(),
        "min_dim": c.min_dim(),
        "faces": faces,
        "chambers": chambers,
    });
    Ok(Outcome { text: out, json, passed: true })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Symbolic,
    Modular,
}

impl From<Mode> for DetMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Auto => DetMode::Auto,
            Mode::Symbolic => DetMode::Symbolic,
            Mode::Modular => DetMode::Modular,
        }
    }
}

pub fn parse_signs(tokens: &[String]) -> CliResult<Vec<Sign>> {
    tokens
        .iter()
        .map(|t| match t.trim() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(CliError::Input(format!("apartment sign must be + or -, found `{other}`"))),
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct VarchenkoArgs {
    pub subset: Vec<usize>,
    pub signs: Vec<Sign>,
    pub det: DetConfig,
}

pub fn apartment_for(arr: &Arrangement, subset: &[usize], signs: &[Sign]) -> CliResult<Apartment> {
    if subset.is_empty() && signs.is_empty() {
        return Ok(Apartment::whole_space());
    }
    Ok(Apartment::new(arr, subset, signs)?)
}

pub fn cmd_varchenko(text: &str, args: &VarchenkoArgs) -> CliResult<Outcome> {
    let arr = parse_arrangement(text)?;
    let c = enumerate_faces(&arr)?;
    let k = apartment_for(&arr, &args.subset, &args.signs)?;
    let f = factorization(&c, &k, &args.det)?;

    let labels: Vec<String> = f.matrix.labels().iter().map(|&id| c.signs(id).to_string()).collect();
    let mut out = format!("apartment {k}: {} chambers\n", labels.len());
    out.push_str(&format!("chambers: {}\n", labels.join(" ")));
    let mut rows = Vec::new();
    for i in 0..f.matrix.size() {
        let row: Vec<String> = (0..f.matrix.size()).map(|j| compact(f.matrix.entry(i, j))).collect();
        out.push_str(&format!("  [{}]\n", row.join(", ")));
        rows.push((0..f.matrix.size()).map(|j| f.matrix.entry(i, j).to_string()).collect::<Vec<_>>());
    }
    out.push_str(&format!("product: {}\n", f.factored));
    let mut json = json!({
        "schema": SCHEMA_VERSION,
        "arrangement_hash": arr.digest(),
        "apartment": k.to_string(),
        "chambers": labels,
        "matrix": rows,
        "factored": f.factored.to_string(),
        "factors": f.factored.factors.iter().map(|x| json!({
            "face": x.face.0,
            "signs": c.signs(x.face).to_string(),
            "weight": x.weight.to_string(),
            "multiplicity": x.exponent,
        })).collect::<Vec<_>>(),
    });
    if let Some(det) = &f.determinant {
        out.push_str(&format!("determinant: {det}\n"));
        json["mode"] = json!("symbolic");
        json["determinant"] = json!(det.to_string());
    } else {
        out.push_str(&format!("modular check, seed {}, prime {}\n", args.det.seed, args.det.prime));
        let mut trials = Vec::new();
        for t in &f.trials {
            let expected = f.factored.eval_mod_p(&t.assignment, args.det.prime);
            out.push_str(&format!(
                "  trial {:>2} {}: det {} product {} {}\n",
                t.trial,
                t.assignment.digest(),
                t.value,
                expected,
                if expected == t.value { "match" } else { "MISMATCH" }
            ));
            trials.push(json!({"trial": t.trial, "digest": t.assignment.digest(), "value": t.value, "expected": expected}));
        }
        json["mode"] = json!("modular");
        json["seed"] = json!(args.det.seed);
        json["prime"] = json!(args.det.prime);
        json["trials"] = json!(trials);
    }
    let passed = f.passed();
    for cx in &f.details.counterexamples {
        out.push_str(&format!("counterexample: {} (faces {:?})\n", cx.description, cx.faces));
    }
    out.push_str(if passed { "verified\n" } else { "FAILED\n" });
    json["status"] = json!(if passed { "pass" } else { "fail" });
    json["counterexamples"] = serde_json::to_value(&f.details.counterexamples).expect("serializable");
    Ok(Outcome { text: out, json, passed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    #[value(name = "witt")]
    Witt,
    #[value(name = "tits")]
    Tits,
    #[value(name = "lemma_ch")]
    LemmaCh,
    #[value(name = "lemma_chm")]
    LemmaChm,
    #[value(name = "v_path")]
    VPath,
    #[value(name = "mad_recurrence")]
    MadRecurrence,
    #[value(name = "factorization")]
    Factorization,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Witt,
        Check::Tits,
        Check::LemmaCh,
        Check::LemmaChm,
        Check::VPath,
        Check::MadRecurrence,
        Check::Factorization,
    ];
}

#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub checks: Vec<Check>,
    pub all_apartments: bool,
    pub tits_pairs: usize,
    pub max_triple_faces: usize,
    pub det: DetConfig,
}

impl Default for VerifyArgs {
    fn default() -> Self {
        VerifyArgs {
            checks: Check::ALL.to_vec(),
            all_apartments: false,
            tits_pairs: 1000,
            max_triple_faces: 150,
            det: DetConfig::default(),
        }
    }
}

/// Every apartment of every subset of the arrangement, subsets in mask order.
pub fn all_apartments(arr: &Arrangement) -> CliResult<Vec<Apartment>> {
    let m = arr.len();
    if m > 20 {
        return Err(CliError::Input(format!("{m} hyperplanes is too many for --all-apartments")));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << m) {
        let subset: Vec<usize> = (0..m).filter(|&h| mask >> h & 1 == 1).collect();
        out.extend(enumerate_apartments(arr, &subset)?);
    }
    Ok(out)
}

pub fn run_checks(arr: &Arrangement, c: &FaceComplex, args: &VerifyArgs) -> CliResult<VerificationReport> {
    let hash = arr.digest();
    let context = |apartment: Option<String>| Context { arrangement_hash: hash.clone(), apartment };
    let mut checks = args.checks.clone();
    checks.sort();
    checks.dedup();
    let mut report = VerificationReport::default();
    for check in checks {
        let entries: Vec<ReportEntry> = match check {
            Check::Witt => vec![witt_sweep(c)],
            Check::Tits => vec![tits_suite(c, args.tits_pairs, args.det.seed, args.max_triple_faces)],
            Check::LemmaCh => vec![lemma_ch_check(c)],
            Check::LemmaChm => vec![lemma_chm_check(c)],
            Check::VPath => vec![v_path_identity_check(c)],
            Check::MadRecurrence => vec![mad_recurrence_check(c)],
            Check::Factorization => {
                let apartments = if args.all_apartments { all_apartments(arr)? } else { vec![Apartment::whole_space()] };
                apartments
                    .iter()
                    .map(|k| {
                        varchenko_core::varchenko::verify_factorization(c, k, &args.det)
                            .with_context(context(Some(k.to_string())))
                    })
                    .collect()
            }
        };
        for e in entries {
            let e = if e.context.arrangement_hash.is_empty() { e.with_context(context(None)) } else { e };
            report.push(e);
        }
    }
    Ok(report)
}

pub fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let status = serde_json::to_value(e.status).expect("serializable");
        let place = e.context.apartment.as_deref().map(|a| format!(" [{a}]")).unwrap_or_default();
        out.push_str(&format!(
            "{:<7} {}{place}: {} checked, {} skipped\n",
            status.as_str().unwrap_or("?"),
            e.check,
            e.details.checked,
            e.details.skipped
        ));
        for cx in &e.details.counterexamples {
            out.push_str(&format!("  counterexample: {} (faces {:?})\n", cx.description, cx.faces));
            for p in &cx.polynomials {
                out.push_str(&format!("    {p}\n"));
            }
        }
    }
    let failures = report.failures().count();
    out.push_str(&format!("{} entries, {failures} failed\n", report.entries.len()));
    out
}

pub fn cmd_verify(text: &str, args: &VerifyArgs) -> CliResult<Outcome> {
    let arr = parse_arrangement(text)?;
    let c = enumerate_faces(&arr)?;
    let report = run_checks(&arr, &c, args)?;
    Ok(Outcome {
        text: render_report(&report),
        json: serde_json::to_value(&report).expect("serializable"),
        passed: report.all_passed(),
    })
}

/// Parses `h2^+*h2^-:2;h3^+*h3^-:2` into weights and exponents.
pub fn parse_expected(text: &str) -> CliResult<Vec<(Monomial, u32)>> {
    let bad = |msg: String| CliError::Input(format!("--expect: {msg}"));
    let mut out = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (mono, exp) = item.split_once(':').unwrap_or((item, "1"));
        let exp: u32 = exp.trim().parse().map_err(|_| bad(format!("bad exponent in `{item}`")))?;
        let text = format!("1 * {}", mono.trim().split('*').map(str::trim).collect::<Vec<_>>().join(" * "));
        let p = Polynomial::parse(&text).map_err(bad)?;
        let m = p.as_monomial().cloned().ok_or_else(|| bad(format!("`{mono}` is not a monomial")))?;
        out.push((m, exp));
    }
    Ok(out)
}

pub fn cmd_detfile(text: &str, expect: Option<&str>) -> CliResult<Outcome> {
    let m = parse_vmatrix(text)?;
    let shape = m.check_shape();
    let det = det_symbolic(&m)?;
    let mut out = format!("{}×{} matrix over {} hyperplanes\n", m.size(), m.size(), m.num_hyperplanes());
    if let Err(msg) = &shape {
        out.push_str(&format!("note: not a Varchenko-shaped matrix: {msg}\n"));
    }
    out.push_str(&format!("determinant: {det}\n"));
    let mut json = json!({
        "schema": SCHEMA_VERSION,
        "size": m.size(),
        "num_hyperplanes": m.num_hyperplanes(),
        "determinant": det.to_string(),
        "varchenko_shape": shape.is_ok(),
    });
    let passed = match expect {
        Some(text) => {
            let factors = parse_expected(text)?;
            let ok = expand_factors(&factors) == det;
            out.push_str(&format!("expected {}: {}\n", format_factors(&factors), if ok { "match" } else { "MISMATCH" }));
            json["expected"] = json!(format_factors(&factors));
            json["matches_expected"] = json!(ok);
            if ok {
                json["factored"] = json!(format_factors(&factors));
            }
            ok
        }
        None => {
            if let Some(found) = factor_by_weights(&det, m.num_hyperplanes(), 10) {
                out.push_str(&format!("factored: {}\n", format_factors(&found)));
                json["factored"] = json!(format_factors(&found));
            }
            true
        }
    };
    json["status"] = json!(if passed { "pass" } else { "fail" });
    Ok(Outcome { text: out, json, passed })
}
