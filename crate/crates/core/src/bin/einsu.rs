use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use einsu::einstein::{
    isometry_report, lambda_monotonicity_certificate, remark1_certificate, solve_with, SolveOptions, SolveReport,
    SystemParams,
};
use einsu::liealg::Partition;
use einsu::report::{
    to_csv, to_json, to_markdown, CertifyDocument, SolveDocument, SweepDocument, SweepRow, VerifyDocument, SCHEMA,
    SOLUTION_MD_COLUMNS,
};
use einsu::verify::{verify_partition, VERIFY_MAX_N};
use einsu::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_EXPECTATION: u8 = 3;
const EXIT_NUMERICAL: u8 = 4;
const MONOTONICITY_GRID: usize = 100;

#[derive(Parser)]
#[command(name = "einsu", version, about = "Einstein metrics on SU(N) from flag-manifold decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the Einstein system for one triple (k1, k, p)
    Solve(SolveArgs),
    /// Solve every triple in a range and tabulate the counts
    Sweep(SweepArgs),
    /// Run the curvature and structure-constant oracles on a partition
    Verify(VerifyArgs),
    /// Monotonicity and sign-pattern certificates for one triple
    Certify(SolveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Working precision in bits for root refinement
    #[arg(long, env = "EINSU_PRECISION", default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..))]
    precision: u32,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    k1: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    p: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SweepArgs {
    /// Inclusive range `a..b` or a single value
    #[arg(long, value_parser = parse_range)]
    k1: (u32, u32),
    #[arg(long, value_parser = parse_range)]
    k: (u32, u32),
    #[arg(long, value_parser = parse_range)]
    p: (u32, u32),
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Block sizes, e.g. `2,2,2`
    #[arg(long)]
    partition: String,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parameter(_) | Error::DegeneratePartition(_) | Error::UnsupportedShape(_) => EXIT_USAGE,
            Error::TheoremViolation(_) => EXIT_EXPECTATION,
            _ => EXIT_NUMERICAL,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| fail(EXIT_NUMERICAL, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn options(precision_bits: u32) -> SolveOptions {
    SolveOptions { precision_bits, strict: false, ..SolveOptions::default() }
}

fn solve_exit(rep: &SolveReport) -> Result<(), Failure> {
    if !rep.residuals_ok() {
        return Err(fail(EXIT_NUMERICAL, format!("{}: residual or oracle check failed", rep.params)));
    }
    if !rep.theorem.met {
        return Err(fail(EXIT_EXPECTATION, format!("{}: expected {}", rep.params, rep.theorem.expectation)));
    }
    Ok(())
}

fn cmd_solve(a: &SolveArgs) -> Result<(), Failure> {
    let params = SystemParams::new(a.k1, a.k, a.p)?;
    let rep = solve_with(&params, &options(a.common.precision))?;
    let mono = lambda_monotonicity_certificate(&params, MONOTONICITY_GRID)?;
    let iso = isometry_report(&rep, &mono);
    let doc = SolveDocument::new(&rep, Some(mono), Some(iso));
    let text = match a.common.format {
        Format::Json => to_json(&doc)?,
        Format::Csv => to_csv(&doc.records)?,
        Format::Md => to_markdown(&doc.records, Some(SOLUTION_MD_COLUMNS)),
    };
    emit(&a.common, &text)?;
    solve_exit(&rep)
}

fn cmd_certify(a: &SolveArgs) -> Result<(), Failure> {
    let params = SystemParams::new(a.k1, a.k, a.p)?;
    let monotonicity = lambda_monotonicity_certificate(&params, MONOTONICITY_GRID)?;
    let remark1 = remark1_certificate(&params)?;
    let rep = solve_with(&params, &options(a.common.precision))?;
    let isometry = isometry_report(&rep, &monotonicity);
    let passed = monotonicity.holds_on_whole_range && (!remark1.applicable || remark1.passed);
    let doc = CertifyDocument { schema: SCHEMA, command: "certify", params, monotonicity, remark1, isometry, passed };
    let text = match a.common.format {
        Format::Json => to_json(&doc)?,
        Format::Csv | Format::Md => certify_table(&doc, matches!(a.common.format, Format::Md)),
    };
    emit(&a.common, &text)?;
    if passed {
        Ok(())
    } else {
        Err(fail(EXIT_EXPECTATION, format!("{params}: certificate failed")))
    }
}

fn certify_table(doc: &CertifyDocument, md: bool) -> String {
    let m = &doc.monotonicity;
    let r = &doc.remark1;
    let remark1 = if !r.applicable {
        "not applicable (k1 < 8kp)".to_string()
    } else {
        let signs: Vec<&str> = r
            .points
            .iter()
            .map(|p| {
                if p.sign > 0 {
                    "+"
                } else if p.sign < 0 {
                    "-"
                } else {
                    "0"
                }
            })
            .collect();
        format!("signs ({}), sturm count {}, {}", signs.join(","), r.sturm_count, pass(r.passed))
    };
    let rows = [
        ("params", doc.params.to_string()),
        (
            "monotonicity",
            format!(
                "{}/{} negative, {} numerator roots, {}",
                m.negative_points,
                m.grid_size,
                m.numerator_roots_in_range,
                pass(m.holds_on_whole_range)
            ),
        ),
        ("remark1", remark1),
        ("non_isometric", doc.isometry.non_isometric.to_string()),
        ("passed", doc.passed.to_string()),
    ];
    let mut out = String::new();
    if md {
        out += "| certificate | result |\n| --- | --- |\n";
        for (k, v) in rows {
            out += &format!("| {k} | {v} |\n");
        }
    } else {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(["certificate", "result"]).expect("in-memory write");
        for (k, v) in rows {
            w.write_record([k, v.as_str()]).expect("in-memory write");
        }
        out = String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8");
    }
    out
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Rows already present in an earlier output file, keyed by triple.
fn load_previous(a: &SweepArgs) -> BTreeMap<(u32, u32, u32), SweepRow> {
    let Some(path) = &a.common.output else { return BTreeMap::new() };
    let Ok(text) = fs::read_to_string(path) else { return BTreeMap::new() };
    let rows: Vec<SweepRow> = match a.common.format {
        Format::Json => serde_json::from_str::<SweepDocument>(&text)
            .ok()
            .filter(|d| d.schema == SCHEMA && d.precision_bits == a.common.precision)
            .map(|d| d.rows)
            .unwrap_or_default(),
        Format::Csv => einsu::report::from_csv(&text).unwrap_or_default(),
        Format::Md => vec![],
    };
    rows.into_iter().map(|r| (r.params(), r)).collect()
}

fn cmd_sweep(a: &SweepArgs) -> Result<(), Failure> {
    let mut triples = vec![];
    for k1 in a.k1.0..=a.k1.1 {
        for k in a.k.0..=a.k.1 {
            for p in a.p.0..=a.p.1 {
                triples.push(SystemParams::new(k1, k, p)?);
            }
        }
    }
    let previous = load_previous(a);
    let todo: Vec<SystemParams> = triples.iter().copied().filter(|t| !previous.contains_key(&t.triple())).collect();
    if !previous.is_empty() {
        eprintln!("resuming: {} of {} triples already in the output", triples.len() - todo.len(), triples.len());
    }
    let opts = options(a.common.precision);
    let fresh: Vec<(SweepRow, Option<String>)> = todo
        .par_iter()
        .map(|t| -> einsu::Result<_> {
            let rep = solve_with(t, &opts)?;
            let mono = lambda_monotonicity_certificate(t, MONOTONICITY_GRID)?;
            let status = solve_exit(&rep).err().map(|f| f.message);
            Ok((SweepRow::from_report(&rep, &mono), status))
        })
        .collect::<einsu::Result<_>>()?;
    let mut worst = 0u8;
    for (row, status) in &fresh {
        if let Some(msg) = status {
            eprintln!("{msg}");
            let code = if row.residuals_ok { EXIT_EXPECTATION } else { EXIT_NUMERICAL };
            worst = worst.max(code);
        }
    }
    let mut by_triple = previous;
    by_triple.extend(fresh.into_iter().map(|(r, _)| (r.params(), r)));
    let rows: Vec<SweepRow> = triples.iter().filter_map(|t| by_triple.remove(&t.triple())).collect();
    let text = match a.common.format {
        Format::Json => to_json(&SweepDocument {
            schema: SCHEMA.into(),
            command: "sweep".into(),
            precision_bits: a.common.precision,
            rows,
        })?,
        Format::Csv => to_csv(&rows)?,
        Format::Md => to_markdown(&rows, None),
    };
    emit(&a.common, &text)?;
    match worst {
        0 => Ok(()),
        c => Err(fail(c, "sweep finished with failures")),
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<(), Failure> {
    let parts: Vec<usize> = a
        .partition
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|e| fail(EXIT_USAGE, format!("bad partition {:?}: {e}", a.partition)))?;
    let partition = Partition::new(parts)?;
    if partition.n() > VERIFY_MAX_N {
        return Err(fail(EXIT_USAGE, format!("N = {} exceeds the verify cap {VERIFY_MAX_N}", partition.n())));
    }
    let report = verify_partition(&partition, a.trials, a.seed)?;
    let passed = report.passed;
    let text = match a.common.format {
        Format::Json => to_json(&VerifyDocument { schema: SCHEMA, command: "verify", report })?,
        Format::Csv | Format::Md => {
            let rows: Vec<[String; 4]> = report
                .checks
                .iter()
                .map(|c| {
                    [c.name.clone(), format!("{:e}", c.max_error), format!("{:e}", c.tolerance), pass(c.passed).into()]
                })
                .collect();
            let header = ["check", "max_error", "tolerance", "result"];
            if matches!(a.common.format, Format::Md) {
                let mut out = format!("| {} |\n| --- | --- | --- | --- |\n", header.join(" | "));
                for r in rows {
                    out += &format!("| {} |\n", r.join(" | "));
                }
                out
            } else {
                let mut w = csv::Writer::from_writer(vec![]);
                w.write_record(header).expect("in-memory write");
                for r in rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
            }
        }
    };
    emit(&a.common, &text)?;
    if passed {
        Ok(())
    } else {
        Err(fail(EXIT_EXPECTATION, format!("verify {} failed", partition)))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Certify(a) => cmd_certify(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("einsu: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
