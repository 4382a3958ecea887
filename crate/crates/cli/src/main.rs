//! Command-line front end: compute single groups, run the verification
//! sweep, validate fact files, and expose the exact linear algebra
//! (Smith normal form, extension enumeration) for scripting.
//!
//! Exit codes are a stable contract: 0 success, 1 internal error,
//! 2 input or fact gap, 3 verification failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use abelian_core::{enumerate_extensions, smith_normal_form, FgAbGroup, IntMatrix};
use clap::{Args, Parser, Subcommand};
use fact_base::{FactBase, ParamAssignment};
use fibration_pipeline::{
    expected_iso_type, param_sweep, pi_moore, verify_tables, PipelineError, Status,
    DEFAULT_R_SET,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_VERIFY_FAIL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "moorepi",
    version,
    about = "Homotopy groups of mod-2^r Moore spaces, computed from a curated fact base"
)]
struct Cli {
    #[command(flatten)]
    facts: FactsArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FactsArg {
    /// Path to the fact file (default: $MOOREPI_FACTS, then facts/core.json
    /// next to the working directory or the executable)
    #[arg(long, global = true)]
    facts: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one group pi_i(P^n(2^r)) and print its iso type
    Compute {
        /// Bottom dimension of the Moore space (the n in P^n)
        #[arg(short)]
        n: u32,
        /// Exponent of the attaching degree 2^r
        #[arg(short)]
        r: u32,
        /// Homotopy dimension
        #[arg(short)]
        i: u32,
        /// Print the step-by-step resolution log
        #[arg(long)]
        trace: bool,
        /// Emit the result as a JSON report entry
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every expected-table entry and diff against the stored value
    Verify {
        /// Comma-separated exponents to sample (default "1,2,3,4,8")
        #[arg(long, value_delimiter = ',')]
        r_set: Vec<u32>,
        /// Sweep all symbolic-parameter assignments instead of the canonical one
        #[arg(long)]
        params_sweep: bool,
        /// Emit the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Validate a fact file: structure, references and dimension chains
    FactsValidate {
        /// File to validate (defaults to the resolved fact base)
        path: Option<PathBuf>,
    },
    /// Smith normal form of an integer matrix (one whitespace-separated row per line)
    Snf { matrix: PathBuf },
    /// Enumerate abelian extensions 0 -> A -> G -> C -> 0 by cocycle class
    Ext {
        /// Orders of the subgroup A's cyclic summands, comma-separated (e.g. "2,4")
        #[arg(long, value_delimiter = ',')]
        sub: Vec<u128>,
        /// Orders of the quotient C's cyclic summands, comma-separated
        #[arg(long, value_delimiter = ',')]
        quot: Vec<u128>,
    },
}

#[derive(Serialize)]
struct JsonReport {
    tool: ToolInfo,
    fact_base_version: String,
    entries: Vec<JsonEntry>,
    summary: Summary,
    timing_ms: u128,
}

#[derive(Serialize)]
struct ToolInfo {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct JsonEntry {
    target: String,
    source: String,
    expected: Option<String>,
    computed: Option<String>,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace_digest: Option<String>,
}

#[derive(Clone, Copy, Serialize)]
struct Summary {
    total: usize,
    pass: usize,
    fail: usize,
    skipped: usize,
}

/// Writes to stdout, ignoring a closed pipe (e.g. `moorepi verify | head`).
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}

fn tool_info() -> ToolInfo {
    ToolInfo {
        name: "moorepi",
        version: env!("CARGO_PKG_VERSION"),
    }
}

fn digest(lines: &[String]) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    let out = h.finalize();
    out.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Resolution order for the fact file: explicit flag, environment variable,
/// working directory, then next to (or above) the executable.
fn resolve_facts_path(flag: &Option<PathBuf>) -> Result<PathBuf, String> {
    if let Some(p) = flag {
        return Ok(p.clone());
    }
    if let Ok(p) = std::env::var("MOOREPI_FACTS") {
        return Ok(PathBuf::from(p));
    }
    let cwd_default = PathBuf::from("facts/core.json");
    if cwd_default.exists() {
        return Ok(cwd_default);
    }
    if let Ok(exe) = std::env::current_exe() {
        let mut dir = exe.parent().map(PathBuf::from);
        while let Some(d) = dir {
            let candidate = d.join("facts/core.json");
            if candidate.exists() {
                return Ok(candidate);
            }
            dir = d.parent().map(PathBuf::from);
        }
    }
    Err("no fact file found; pass --facts or set MOOREPI_FACTS".to_string())
}

fn load_facts(flag: &Option<PathBuf>) -> Result<FactBase, (u8, String)> {
    let path = resolve_facts_path(flag).map_err(|e| (EXIT_INPUT, e))?;
    let fb = FactBase::load(&path)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let findings = fb.validate();
    if !findings.is_empty() {
        let mut msg = format!(
            "{}: fact file fails validation ({} finding(s)):",
            path.display(),
            findings.len()
        );
        for f in &findings {
            msg.push_str(&format!("\n  [{}] {}: {}", f.category, f.record_id, f.message));
        }
        return Err((EXIT_INPUT, msg));
    }
    Ok(fb)
}

fn pipeline_exit(e: &PipelineError) -> u8 {
    match e {
        PipelineError::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn cmd_compute(fb: &FactBase, n: u32, r: u32, i: u32, trace: bool, json: bool) -> u8 {
    let started = Instant::now();
    let params = ParamAssignment::canonical();
    match pi_moore(fb, n, r, i, &params) {
        Ok(c) => {
            let label = c.result.iso_type().label();
            if json {
                let report = JsonReport {
                    tool: tool_info(),
                    fact_base_version: fb.version().to_string(),
                    entries: vec![JsonEntry {
                        target: format!("pi_{i}(P^{n}(2^{r}))"),
                        source: "computed".to_string(),
                        expected: None,
                        computed: Some(label),
                        status: if c.exact_ok && c.order_ok {
                            "PASS".to_string()
                        } else {
                            "FAIL".to_string()
                        },
                        detail: None,
                        trace_digest: Some(digest(&c.trace)),
                    }],
                    summary: Summary {
                        total: 1,
                        pass: usize::from(c.exact_ok && c.order_ok),
                        fail: usize::from(!(c.exact_ok && c.order_ok)),
                        skipped: 0,
                    },
                    timing_ms: started.elapsed().as_millis(),
                };
                emit(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).unwrap()
                ));
            } else {
                if trace {
                    emit(&format!("{}\n", c.trace.join("\n")));
                }
                emit(&format!("{label}\n"));
            }
            if c.exact_ok && c.order_ok {
                0
            } else {
                eprintln!("error: internal audit failed (exactness or order identity)");
                EXIT_INTERNAL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            pipeline_exit(&e)
        }
    }
}

fn cmd_verify(fb: &FactBase, r_set: &[u32], sweep: bool, json: bool) -> u8 {
    let started = Instant::now();
    let r_set: Vec<u32> = if r_set.is_empty() {
        DEFAULT_R_SET.to_vec()
    } else {
        r_set.to_vec()
    };
    let params = if sweep {
        param_sweep()
    } else {
        vec![ParamAssignment::canonical()]
    };
    let report = verify_tables(fb, &r_set, &params);
    let canonical = ParamAssignment::canonical();
    let mut entries = Vec::with_capacity(report.entries.len());
    for e in &report.entries {
        let expected = fb
            .expected_entries()
            .iter()
            .find(|x| {
                x.n == e.n
                    && x.i == e.i
                    && fact_base::RCond::parse(&x.r_cond)
                        .map(|c| c.matches(e.r))
                        .unwrap_or(false)
            })
            .and_then(|x| expected_iso_type(x, e.r, &canonical).ok())
            .map(|t| t.label());
        let (computed, status, detail) = match &e.status {
            Status::Pass => (expected.clone(), "PASS", None),
            Status::Fail { expected: _, computed } => {
                (Some(computed.clone()), "FAIL", None)
            }
            Status::Skipped { reason } => (None, "SKIPPED", Some(reason.clone())),
        };
        entries.push(JsonEntry {
            target: format!("pi_{}(P^{}(2^{}))", e.i, e.n, e.r),
            source: e.source.clone(),
            expected,
            computed,
            status: status.to_string(),
            detail,
            trace_digest: None,
        });
    }
    let summary = Summary {
        total: report.entries.len(),
        pass: report.entries.len() - report.failures() - report.skipped(),
        fail: report.failures(),
        skipped: report.skipped(),
    };
    if json {
        let out = JsonReport {
            tool: tool_info(),
            fact_base_version: fb.version().to_string(),
            entries,
            summary,
            timing_ms: started.elapsed().as_millis(),
        };
        emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&out).unwrap()
        ));
    } else {
        let mut text = String::new();
        for e in &entries {
            match e.status.as_str() {
                "PASS" => text.push_str(&format!(
                    "PASS  {} [{}] = {}\n",
                    e.target,
                    e.source,
                    e.expected.as_deref().unwrap_or("?")
                )),
                "FAIL" => text.push_str(&format!(
                    "FAIL  {} [{}]: expected {}, computed {}\n",
                    e.target,
                    e.source,
                    e.expected.as_deref().unwrap_or("?"),
                    e.computed.as_deref().unwrap_or("?")
                )),
                _ => text.push_str(&format!(
                    "SKIP  {} [{}]: {}\n",
                    e.target,
                    e.source,
                    e.detail.as_deref().unwrap_or("")
                )),
            }
        }
        text.push_str(&format!(
            "{} entries: {} pass, {} fail, {} skipped ({} ms)\n",
            summary.total,
            summary.pass,
            summary.fail,
            summary.skipped,
            started.elapsed().as_millis()
        ));
        emit(&text);
    }
    if summary.fail > 0 {
        EXIT_VERIFY_FAIL
    } else {
        0
    }
}

fn cmd_facts_validate(flag: &Option<PathBuf>, path: Option<PathBuf>) -> u8 {
    let path = match path {
        Some(p) => p,
        None => match resolve_facts_path(flag) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
        },
    };
    let fb = match FactBase::load(&path) {
        Ok(fb) => fb,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let findings = fb.validate();
    if findings.is_empty() {
        println!("{}: 0 findings", path.display());
        0
    } else {
        println!("{}: {} finding(s)", path.display(), findings.len());
        for f in &findings {
            println!("  [{}] {}: {}", f.category, f.record_id, f.message);
        }
        EXIT_INPUT
    }
}

fn cmd_snf(path: &PathBuf) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
        match row {
            Ok(r) => rows.push(r),
            Err(e) => {
                eprintln!("error: line {}: {e}", ln + 1);
                return EXIT_INPUT;
            }
        }
    }
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        eprintln!("error: matrix must be non-empty and rectangular");
        return EXIT_INPUT;
    }
    let a = IntMatrix::from_rows(&rows);
    let snf = smith_normal_form(&a);
    let print = |name: &str, m: &IntMatrix| {
        println!("{name} =");
        for i in 0..m.rows() {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            println!("  [{}]", row.join(", "));
        }
    };
    print("S", snf.s());
    print("U", snf.u());
    print("V", snf.v());
    let recomposed = snf.u().mul(snf.s()).mul(snf.v());
    if recomposed == a {
        println!("check: U*S*V = A");
        0
    } else {
        eprintln!("error: U*S*V != A");
        EXIT_INTERNAL
    }
}

fn group_from_orders(which: &str, orders: &[u128]) -> Result<FgAbGroup, String> {
    let named: Vec<(String, u128)> = orders
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("{which}{i}"), d))
        .collect();
    let refs: Vec<(&str, u128)> = named.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    FgAbGroup::direct_sum_finite(&refs).map_err(|e| e.to_string())
}

fn cmd_ext(sub: &[u128], quot: &[u128]) -> u8 {
    let a = match group_from_orders("a", sub) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: --sub: {e}");
            return EXIT_INPUT;
        }
    };
    let c = match group_from_orders("c", quot) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: --quot: {e}");
            return EXIT_INPUT;
        }
    };
    match enumerate_extensions(&a, &c) {
        Ok(types) => {
            let rendered: Vec<String> = types
                .iter()
                .map(|(t, _)| {
                    if t.torsion.is_empty() {
                        "0".to_string()
                    } else {
                        t.torsion
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join("+")
                    }
                })
                .collect();
            println!("{}", rendered.join(", "));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute { n, r, i, trace, json } => match load_facts(&cli.facts.facts) {
            Ok(fb) => cmd_compute(&fb, n, r, i, trace, json),
            Err((code, msg)) => {
                eprintln!("error: {msg}");
                code
            }
        },
        Command::Verify {
            r_set,
            params_sweep,
            json,
        } => match load_facts(&cli.facts.facts) {
            Ok(fb) => cmd_verify(&fb, &r_set, params_sweep, json),
            Err((code, msg)) => {
                eprintln!("error: {msg}");
                code
            }
        },
        Command::FactsValidate { path } => cmd_facts_validate(&cli.facts.facts, path),
        Command::Snf { matrix } => cmd_snf(&matrix),
        Command::Ext { sub, quot } => cmd_ext(&sub, &quot),
    };
    ExitCode::from(code)
}
