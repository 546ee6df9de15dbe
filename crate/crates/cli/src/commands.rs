//! Subcommands. Each one renders into an [`Outcome`] instead of printing, so
//! the binary and the tests share the same code path.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use cicy_core::invariants::{betti2, euler_number, hilbert_polynomial, hodge_numbers};
use cicy_core::transitions::{analyze, contract, find_contraction_sites, ContractionSite};
use cicy_core::web::{
    connect_to_c1111, describe, random_cicy, verify_chain, ChainReport, StepKind,
};
use cicy_core::{BigInt, ConfigurationMatrix, Error, MultiDegree, TransitionChain};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog;
use crate::json::{int, ChainDoc, Input, Provenance, Report};
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cicy",
    version,
    about = "Exact invariants and conifold transitions of CICY configurations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a configuration file and print its validation report.
    Validate {
        /// Matrix file, or `-` for standard input.
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Euler number, second Betti number, Hodge numbers and Hilbert polynomial.
    Invariants {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Polarization degrees `d1,...,dk` (default: all ones).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        polarization: Option<Vec<i64>>,
    },
    /// Analyze determinantal contraction sites.
    Transition {
        path: PathBuf,
        /// 1-based row of the site to contract.
        #[arg(long, conflicts_with = "all")]
        row: Option<usize>,
        /// Every site (the default when no row is given).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify a chain of transitions to C_1111.
    Connect {
        path: PathBuf,
        /// Write the chain document to this file.
        #[arg(long)]
        emit_chain: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Replay and verify a chain document.
    VerifyChain {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Built-in worked examples.
    Catalog {
        #[arg(long, conflicts_with_all = ["run", "run_all"])]
        list: bool,
        #[arg(long, conflicts_with = "run_all")]
        run: Option<String>,
        #[arg(long)]
        run_all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a pseudo-random CICY configuration.
    Random {
        seed: u64,
        #[arg(long, default_value_t = 7)]
        max_rows: usize,
        #[arg(long, default_value_t = 9)]
        max_cols: usize,
        #[arg(long, default_value_t = 7)]
        max_n: u32,
    },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{}m{}\x1b[0m", code, s)
        } else {
            s.to_owned()
        }
    }

    fn verdict(&self, pass: bool) -> String {
        if pass {
            self.paint("32", "PASS")
        } else {
            self.paint("31", "FAIL")
        }
    }

    fn heading(&self, s: &str) -> String {
        self.paint("1", s)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {}\n", message),
        }
    }
}

/// Exit code for a library error: broken internal bookkeeping is 3,
/// anything the input can cause is 1.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::EulerDisagreement { .. } | Error::NegativeOdpCount(_) | Error::Connect(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_INVALID,
    }
}

fn read_source(path: &Path, stdin: &mut dyn Read) -> Result<(String, String), Outcome> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Outcome::fail(EXIT_INVALID, format!("reading standard input: {}", e)))?;
        Ok((s, "-".to_owned()))
    } else {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Outcome::fail(EXIT_INVALID, format!("{}: {}", path.display(), e)))?;
        Ok((s, path.display().to_string()))
    }
}

fn load(path: &Path, stdin: &mut dyn Read) -> Result<(ConfigurationMatrix, Input), Outcome> {
    let (content, source) = read_source(path, stdin)?;
    let cfg = text::parse(&content)
        .map_err(|e| Outcome::fail(EXIT_INVALID, format!("{}: {}", source, e)))?;
    let input = Input {
        source: Some(source),
        matrix: Some(text::lines(&cfg)),
        ..Input::default()
    };
    Ok((cfg, input))
}

fn table(out: &mut String, rows: &[(&str, String)]) {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        let _ = writeln!(out, "{:<width$}  {}", k, v, width = width);
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_owned()
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_checks(out: &mut String, report: &Report, style: Style) {
    if report.checks.is_empty() {
        return;
    }
    let _ = writeln!(out, "{}", style.heading("checks"));
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &report.checks {
        let _ = writeln!(
            out,
            "  {} {:<width$}  expected {}  got {}  [{}]",
            style.verdict(c.pass),
            c.name,
            show(&c.expected),
            show(&c.got),
            c.provenance.as_str(),
            width = width
        );
    }
}

fn finish(report: Report, human: String, as_json: bool, code: i32) -> Outcome {
    Outcome {
        code,
        stdout: if as_json {
            report.to_json() + "\n"
        } else {
            human
        },
        stderr: String::new(),
    }
}

pub fn execute(command: &Command, stdin: &mut dyn Read, style: Style) -> Outcome {
    let result = match command {
        Command::Validate { path, json } => validate(path, *json, stdin, style),
        Command::Invariants {
            path,
            json,
            polarization,
        } => invariants(path, *json, polarization.as_deref(), stdin, style),
        Command::Transition {
            path, row, json, ..
        } => transition(path, *row, *json, stdin, style),
        Command::Connect {
            path,
            emit_chain,
            json,
        } => connect(path, emit_chain.as_deref(), *json, stdin, style),
        Command::VerifyChain { path, json } => verify(path, *json, stdin, style),
        Command::Catalog {
            list,
            run,
            run_all,
            json,
        } => catalog_cmd(*list, run.as_deref(), *run_all, *json, style),
        Command::Random {
            seed,
            max_rows,
            max_cols,
            max_n,
        } => {
            if *max_rows == 0 || *max_cols == 0 || *max_n == 0 {
                Err(Outcome::fail(EXIT_USAGE, "bounds must be at least 1"))
            } else {
                Ok(Outcome {
                    code: EXIT_OK,
                    stdout: text::render(&random_cicy(*seed, *max_rows, *max_cols, *max_n)),
                    stderr: String::new(),
                })
            }
        }
    };
    result.unwrap_or_else(|o| o)
}

fn validate(
    path: &Path,
    as_json: bool,
    stdin: &mut dyn Read,
    style: Style,
) -> Result<Outcome, Outcome> {
    let (cfg, input) = load(path, stdin)?;
    let v = cfg.validate();
    let mut report = Report::new(input);
    report.result("dimension", v.dimension);
    report.result("nonnegative", v.nonnegative);
    report.result("normalized", v.normalized);
    report.result("calabi_yau", v.calabi_yau);
    report.result("block_diagonal", v.block_diagonal);
    report.result("forbidden_block", v.forbidden_block);
    report.result("valid", v.is_valid());
    report.result("cicy", v.is_cicy());
    report.result("canonical_key", cfg.canonical_key().to_string());
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.heading(&cfg.to_string()));
    table(
        &mut out,
        &[
            ("dimension", v.dimension.to_string()),
            ("nonnegative", yes(v.nonnegative)),
            ("normalized", yes(v.normalized)),
            ("calabi-yau rows", yes(v.calabi_yau)),
            ("block-diagonal", yes(v.block_diagonal)),
            ("[1 || 2] block", yes(v.forbidden_block)),
            ("valid", yes(v.is_valid())),
            ("cicy threefold", yes(v.is_cicy())),
        ],
    );
    let code = if v.is_valid() { EXIT_OK } else { EXIT_INVALID };
    Ok(finish(report, out, as_json, code))
}

fn error_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn invariants(
    path: &Path,
    as_json: bool,
    polarization: Option<&[i64]>,
    stdin: &mut dyn Read,
    style: Style,
) -> Result<Outcome, Outcome> {
    let (cfg, mut input) = load(path, stdin)?;
    if !cfg.is_valid() {
        return Err(Outcome::fail(EXIT_INVALID, "configuration is not valid"));
    }
    let pol = MultiDegree(polarization.map_or_else(|| vec![1; cfg.num_rows()], <[i64]>::to_vec));
    if pol.len() != cfg.num_rows() {
        return Err(Outcome::fail(
            EXIT_USAGE,
            format!(
                "polarization has {} entries, matrix has {} rows",
                pol.len(),
                cfg.num_rows()
            ),
        ));
    }
    input
        .options
        .insert("polarization".into(), Value::from(pol.as_slice().to_vec()));
    let mut report = Report::new(input);
    let mut rows: Vec<(&str, String)> = Vec::new();
    report.result("dimension", cfg.dimension());
    rows.push(("dimension", cfg.dimension().to_string()));

    let euler = euler_number(&cfg).map_err(|e| Outcome::fail(exit_code(&e), e))?;
    report.result("euler", int(&euler));
    rows.push(("euler number", euler.to_string()));

    match betti2(&cfg) {
        Ok(b) => {
            report.result("betti2", b);
            rows.push(("b2", b.to_string()));
        }
        Err(e) => {
            report.result("betti2", error_value(&e));
            rows.push(("b2", format!("unavailable ({})", e)));
        }
    }

    let hodge = if cfg.is_cicy() {
        Some(hodge_numbers(&cfg))
    } else {
        None
    };
    match &hodge {
        Some(Ok(h)) => {
            report.result("hodge", json!({ "h11": h.h11, "h21": h.h21 }));
            rows.push(("h11, h21", format!("{}, {}", h.h11, h.h21)));
        }
        Some(Err(e)) => {
            report.result("hodge", error_value(e));
            rows.push(("h11, h21", format!("unavailable ({})", e)));
        }
        None => {
            report.result("hodge", Value::Null);
        }
    }

    let hilbert = hilbert_polynomial(&cfg, &pol).map_err(|e| Outcome::fail(EXIT_USAGE, e))?;
    let values: Vec<Value> = (0..=5)
        .map(|l| json!({ "l": l, "chi": hilbert.value_at(l).to_string() }))
        .collect();
    report.result(
        "hilbert",
        json!({
            "polynomial": hilbert.to_string(),
            "coefficients": hilbert.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "values": values,
        }),
    );
    rows.push(("hilbert polynomial", hilbert.to_string()));

    if cfg.is_cicy() {
        report.check(
            "chi_0",
            Value::from("0"),
            Value::from(hilbert.value_at(0).to_string()),
            Provenance::Derived,
        );
        if let Some(Ok(h)) = &hodge {
            report.check(
                "hodge_euler",
                int(&euler),
                int(&BigInt::from(h.euler())),
                Provenance::Trivial,
            );
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "{}", style.heading(&cfg.to_string()));
    table(&mut out, &rows);
    let _ = writeln!(out, "{}", style.heading("l   chi(O_X(l))"));
    for l in 0..=5 {
        let _ = writeln!(out, "{:<3} {}", l, hilbert.value_at(l));
    }
    render_checks(&mut out, &report, style);
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    Ok(finish(report, out, as_json, code))
}

fn transition(
    path: &Path,
    row: Option<usize>,
    as_json: bool,
    stdin: &mut dyn Read,
    style: Style,
) -> Result<Outcome, Outcome> {
    let (cfg, mut input) = load(path, stdin)?;
    if !cfg.is_cicy() {
        return Err(Outcome::fail(
            EXIT_INVALID,
            "configuration is not a CICY threefold",
        ));
    }
    let sites = match row {
        Some(r) => {
            input.options.insert("row".into(), Value::from(r));
            let site = r
                .checked_sub(1)
                .ok_or_else(|| Outcome::fail(EXIT_USAGE, "rows are numbered from 1"))
                .and_then(|i| {
                    ContractionSite::new(&cfg, i).map_err(|_| {
                        Outcome::fail(EXIT_INVALID, format!("row {} is not a contraction site", r))
                    })
                })?;
            vec![site]
        }
        None => find_contraction_sites(&cfg),
    };
    let mut report = Report::new(input);
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.heading(&cfg.to_string()));
    if sites.is_empty() {
        let _ = writeln!(out, "no contraction sites");
    }
    let mut entries = Vec::new();
    for site in &sites {
        let r = analyze(site).map_err(|e| Outcome::fail(exit_code(&e), e))?;
        let contracted = contract(site);
        let row = site.row() + 1;
        entries.push(json!({
            "row": row,
            "one_columns": site.one_columns().iter().map(|j| j + 1).collect::<Vec<_>>(),
            "contracted": text::lines(&contracted),
            "odp_count": int(&r.odp_count),
            "euler_resolved": int(&r.euler_resolved),
            "euler_smoothed": int(&r.euler_smoothed),
            "conifold_certified": r.conifold_certified,
            "ineffective": r.ineffective,
        }));
        report.check(
            &format!("row {}: e(resolved) - e(smoothed) = 2N", row),
            int(&(BigInt::from(2) * &r.odp_count)),
            int(&(&r.euler_resolved - &r.euler_smoothed)),
            Provenance::Derived,
        );
        let _ = writeln!(out, "{}", style.heading(&format!("site at row {}", row)));
        table(
            &mut out,
            &[
                ("contracted", text::lines(&contracted).join("; ")),
                ("nodes", r.odp_count.to_string()),
                ("e(resolved)", r.euler_resolved.to_string()),
                ("e(smoothed)", r.euler_smoothed.to_string()),
                ("certified", yes(r.conifold_certified)),
                ("ineffective", yes(r.ineffective)),
            ],
        );
    }
    report.result("sites", Value::from(entries));
    render_checks(&mut out, &report, style);
    Ok(finish(report, out, as_json, EXIT_OK))
}

fn chain_rows(chain: &TransitionChain, verified: &ChainReport) -> (Vec<Value>, String) {
    let mats = chain.configurations().expect("verified chains replay");
    let mut values = Vec::new();
    let mut human = String::new();
    for (i, (step, after)) in verified.steps.iter().zip(&mats[1..]).enumerate() {
        let r = &step.report;
        let (before, after_e) = match step.kind {
            StepKind::Contract { .. } => (&r.euler_resolved, &r.euler_smoothed),
            StepKind::Split { .. } => (&r.euler_smoothed, &r.euler_resolved),
        };
        values.push(json!({
            "step": i + 1,
            "kind": step.kind.name(),
            "description": describe(&step.kind),
            "matrix": text::lines(after),
            "odp_count": int(&r.odp_count),
            "euler_before": int(before),
            "euler_after": int(after_e),
            "ineffective": r.ineffective,
        }));
        let _ = writeln!(
            human,
            "{:>3}  {:<8}  N = {:<4}  e: {} -> {}{}  {}",
            i + 1,
            step.kind.name(),
            r.odp_count,
            before,
            after_e,
            if r.ineffective { "  (ineffective)" } else { "" },
            describe(&step.kind)
        );
    }
    (values, human)
}

fn chain_checks(report: &mut Report, verified: &ChainReport) {
    for (i, step) in verified.steps.iter().enumerate() {
        let r = &step.report;
        report.check(
            &format!("step {}: e(resolved) - e(smoothed) = 2N", i + 1),
            int(&(BigInt::from(2) * &r.odp_count)),
            int(&(&r.euler_resolved - &r.euler_smoothed)),
            Provenance::Derived,
        );
    }
}

const ASSUMPTION: &str = "general members of intermediate configurations are assumed smooth";

fn connect(
    path: &Path,
    emit: Option<&Path>,
    as_json: bool,
    stdin: &mut dyn Read,
    style: Style,
) -> Result<Outcome, Outcome> {
    let (cfg, input) = load(path, stdin)?;
    let chain = connect_to_c1111(&cfg).map_err(|e| Outcome::fail(exit_code(&e), e))?;
    let verified = verify_chain(&chain)
        .map_err(|f| Outcome::fail(EXIT_INTERNAL, format!("chain failed verification: {}", f)))?;
    if let Some(out_path) = emit {
        let doc = ChainDoc::from_chain(&chain).map_err(|e| Outcome::fail(EXIT_INTERNAL, e))?;
        std::fs::write(out_path, doc.to_json() + "\n")
            .map_err(|e| Outcome::fail(EXIT_INVALID, format!("{}: {}", out_path.display(), e)))?;
    }
    let mut report = Report::new(input);
    let (steps, rows) = chain_rows(&chain, &verified);
    report.result("steps", Value::from(steps));
    report.result("chain_length", chain.len());
    report.result("ends_at_c1111", verified.ends_at_c1111);
    report.result("end", text::lines(chain.end()));
    report.result("assumption", ASSUMPTION);
    if let Some(p) = emit {
        report.result("chain_file", p.display().to_string());
    }
    chain_checks(&mut report, &verified);
    report.check(
        "ends_at_c1111",
        Value::from(true),
        Value::from(verified.ends_at_c1111),
        Provenance::Literature,
    );

    let mut out = String::new();
    let _ = writeln!(out, "{}", style.heading(&cfg.to_string()));
    if chain.is_empty() {
        let _ = writeln!(out, "already C_1111: empty chain");
    }
    out.push_str(&rows);
    let _ = writeln!(out, "end: {}", text::lines(chain.end()).join("; "));
    render_checks(&mut out, &report, style);
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    };
    Ok(finish(report, out, as_json, code))
}

fn verify(
    path: &Path,
    as_json: bool,
    stdin: &mut dyn Read,
    style: Style,
) -> Result<Outcome, Outcome> {
    let (content, source) = read_source(path, stdin)?;
    let doc = ChainDoc::from_json(&content)
        .map_err(|e| Outcome::fail(EXIT_INVALID, format!("{}: {}", source, e)))?;
    let chain = doc
        .to_chain()
        .map_err(|e| Outcome::fail(EXIT_INVALID, format!("{}: {}", source, e)))?;
    let verified = verify_chain(&chain)
        .map_err(|f| Outcome::fail(EXIT_INVALID, format!("{}: {}", source, f)))?;
    let mut report = Report::new(Input {
        source: Some(source),
        matrix: Some(text::lines(chain.start())),
        ..Input::default()
    });
    let (steps, rows) = chain_rows(&chain, &verified);
    report.result("steps", Value::from(steps));
    report.result("chain_length", chain.len());
    report.result("ends_at_c1111", verified.ends_at_c1111);
    report.result("assumption", ASSUMPTION);
    chain_checks(&mut report, &verified);
    let mut out = String::new();
    out.push_str(&rows);
    let _ = writeln!(out, "verified {} steps", chain.len());
    render_checks(&mut out, &report, style);
    Ok(finish(report, out, as_json, EXIT_OK))
}

fn render_entry(run: &catalog::EntryRun, name: &str, style: Style) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.heading(&format!("== {}", name)));
    if let Some(e) = &run.error {
        let _ = writeln!(out, "  computation failed: {}", e);
    }
    render_checks(&mut out, &run.report, style);
    out
}

fn catalog_cmd(
    list: bool,
    run: Option<&str>,
    run_all: bool,
    as_json: bool,
    style: Style,
) -> Result<Outcome, Outcome> {
    let entries = catalog::entries();
    if let Some(name) = run {
        let entry = catalog::find(name).ok_or_else(|| {
            let names: Vec<_> = entries.iter().map(|e| e.name).collect();
            Outcome::fail(
                EXIT_USAGE,
                format!("no catalog entry `{}` (known: {})", name, names.join(", ")),
            )
        })?;
        let result = catalog::run(&entry);
        let code = entry_code(&result);
        let human = render_entry(&result, entry.name, style);
        return Ok(finish(result.report, human, as_json, code));
    }
    if run_all {
        let runs: Vec<catalog::EntryRun> = std::thread::scope(|s| {
            let handles: Vec<_> = entries
                .iter()
                .map(|e| s.spawn(move || catalog::run(e)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("catalog entry panicked"))
                .collect()
        });
        let code = runs.iter().map(entry_code).max().unwrap_or(EXIT_OK);
        let stdout = if as_json {
            let reports: Vec<&Report> = runs.iter().map(|r| &r.report).collect();
            serde_json::to_string_pretty(&reports).expect("plain JSON") + "\n"
        } else {
            let mut out = String::new();
            for (entry, r) in entries.iter().zip(&runs) {
                out.push_str(&render_entry(r, entry.name, style));
            }
            let passed = runs.iter().filter(|r| entry_code(r) == EXIT_OK).count();
            let _ = writeln!(out, "{}/{} entries pass", passed, runs.len());
            out
        };
        return Ok(Outcome {
            code,
            stdout,
            stderr: String::new(),
        });
    }
    if !list {
        return Err(Outcome::fail(
            EXIT_USAGE,
            "one of --list, --run NAME, --run-all is required",
        ));
    }
    let mut out = String::new();
    if as_json {
        let listing: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "summary": e.summary,
                    "expected": e.expected.iter().map(|x| json!({
                        "name": x.name,
                        "value": x.value,
                        "provenance": x.provenance,
                        "source": x.source,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        out = serde_json::to_string_pretty(&listing).expect("plain JSON") + "\n";
    } else {
        for e in &entries {
            let _ = writeln!(out, "{}  {}", style.heading(e.name), e.summary);
            for x in &e.expected {
                let _ = writeln!(
                    out,
                    "    {} = {}  [{}] {}",
                    x.name,
                    show(&x.value),
                    x.provenance.as_str(),
                    x.source
                );
            }
        }
    }
    Ok(Outcome {
        code: EXIT_OK,
        stdout: out,
        stderr: String::new(),
    })
}

fn entry_code(run: &catalog::EntryRun) -> i32 {
    match &run.error {
        Some(e) => exit_code(e),
        None if run.report.passed() => EXIT_OK,
        None => EXIT_INVALID,
    }
}
