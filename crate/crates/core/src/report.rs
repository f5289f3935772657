//! Flat records and documents for the CLI and the bindings. Exact rationals
//! are written as `"num/den"`, decimals with 30 significant digits.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::curvature::SymmetricMetric;
use crate::einstein::{
    EinsteinSolution, IsometryReport, MonotonicityCertificate, OracleStatus, RejectedRoot, SignCertificate,
    SolveReport, SystemParams,
};
use crate::error::Result;
use crate::exactpoly::{format_rational, to_decimal, QuadSurd};

pub const SCHEMA: &str = "einsu/1";
pub const DECIMAL_DIGITS: u32 = 30;

pub fn decimal(q: &BigRational) -> String {
    to_decimal(q, DECIMAL_DIGITS)
}

/// Rows that can be written as CSV or Markdown tables.
pub trait TableRow {
    fn header() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

/// One Einstein metric. All values are strings so that every format carries
/// the same digits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub k1: u32,
    pub k: u32,
    pub p: u32,
    pub n: u32,
    pub case: String,
    pub classification: String,
    pub x12: String,
    pub x12_lo: String,
    pub x12_hi: String,
    pub x12_closed_form: String,
    pub x1: String,
    pub x2: String,
    pub y1: String,
    pub y2: String,
    pub x1_exact: String,
    pub x2_exact: String,
    pub y1_exact: String,
    pub y2_exact: String,
    pub lambda: String,
    pub lambda_exact: String,
    pub residual_max: String,
    pub residual_bound: String,
    pub residual_exactly_zero: bool,
    pub oracle: String,
    pub oracle_residual: String,
    pub certificates: String,
}

fn surd_or_rational(exact: Option<&QuadSurd>, q: &BigRational) -> String {
    match exact {
        Some(s) => s.to_string(),
        None => format_rational(q),
    }
}

impl SolutionRecord {
    pub fn from_solution(sol: &EinsteinSolution, certificates: &[&str]) -> Self {
        let m = &sol.metric;
        let em: Option<&SymmetricMetric<QuadSurd>> = sol.exact_metric.as_ref();
        let (oracle, oracle_residual) = match &sol.residuals.oracle {
            OracleStatus::Verified { residual } => ("verified".to_string(), format!("{residual:e}")),
            OracleStatus::Failed { residual } => ("failed".to_string(), format!("{residual:e}")),
            OracleStatus::Skipped { reason } => (format!("skipped: {reason}"), String::new()),
        };
        SolutionRecord {
            k1: sol.params.k1,
            k: sol.params.k,
            p: sol.params.p,
            n: sol.params.n(),
            case: format!("{:?}", sol.case),
            classification: sol.classification.to_string(),
            x12: decimal(&sol.x12.value),
            x12_lo: format_rational(&sol.x12.lo),
            x12_hi: format_rational(&sol.x12.hi),
            x12_closed_form: sol.x12_exact.as_ref().map(|s| s.to_string()).unwrap_or_default(),
            x1: decimal(&m.x1),
            x2: decimal(&m.x2),
            y1: decimal(&m.y1),
            y2: decimal(&m.y2),
            x1_exact: surd_or_rational(em.map(|e| &e.x1), &m.x1),
            x2_exact: surd_or_rational(em.map(|e| &e.x2), &m.x2),
            y1_exact: surd_or_rational(em.map(|e| &e.y1), &m.y1),
            y2_exact: surd_or_rational(em.map(|e| &e.y2), &m.y2),
            lambda: decimal(&sol.lambda),
            lambda_exact: surd_or_rational(sol.lambda_exact.as_ref(), &sol.lambda),
            residual_max: to_decimal(&sol.residuals.exact_max, 6),
            residual_bound: to_decimal(&sol.residuals.exact_bound, 1),
            residual_exactly_zero: sol.residuals.exactly_zero,
            oracle,
            oracle_residual,
            certificates: certificates.join(";"),
        }
    }
}

impl TableRow for SolutionRecord {
    fn header() -> Vec<&'static str> {
        vec![
            "k1",
            "k",
            "p",
            "n",
            "case",
            "classification",
            "x12",
            "x12_lo",
            "x12_hi",
            "x12_closed_form",
            "x1",
            "x2",
            "y1",
            "y2",
            "x1_exact",
            "x2_exact",
            "y1_exact",
            "y2_exact",
            "lambda",
            "lambda_exact",
            "residual_max",
            "residual_bound",
            "residual_exactly_zero",
            "oracle",
            "oracle_residual",
            "certificates",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.k1.to_string(),
            self.k.to_string(),
            self.p.to_string(),
            self.n.to_string(),
            self.case.clone(),
            self.classification.clone(),
            self.x12.clone(),
            self.x12_lo.clone(),
            self.x12_hi.clone(),
            self.x12_closed_form.clone(),
            self.x1.clone(),
            self.x2.clone(),
            self.y1.clone(),
            self.y2.clone(),
            self.x1_exact.clone(),
            self.x2_exact.clone(),
            self.y1_exact.clone(),
            self.y2_exact.clone(),
            self.lambda.clone(),
            self.lambda_exact.clone(),
            self.residual_max.clone(),
            self.residual_bound.clone(),
            self.residual_exactly_zero.to_string(),
            self.oracle.clone(),
            self.oracle_residual.clone(),
            self.certificates.clone(),
        ]
    }
}

/// Summary of one parameter triple in a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k1: u32,
    pub k: u32,
    pub p: u32,
    pub n: u32,
    pub case1_solutions: usize,
    pub case2_solutions: usize,
    pub case2_below_one: usize,
    pub case2_at_one: usize,
    pub case2_above_one: usize,
    pub theorem_met: bool,
    pub x12_roots: String,
    pub lambdas: String,
    pub classifications: String,
    pub residuals_ok: bool,
    pub oracle: String,
    pub lambda_decreasing: bool,
}

impl SweepRow {
    pub fn from_report(rep: &SolveReport, mono: &MonotonicityCertificate) -> Self {
        let c2: Vec<&EinsteinSolution> = rep.case2().collect();
        let join = |f: &dyn Fn(&EinsteinSolution) -> String| c2.iter().map(|s| f(s)).collect::<Vec<_>>().join(";");
        let oracle = if rep.solutions.iter().all(|s| matches!(s.residuals.oracle, OracleStatus::Skipped { .. })) {
            "skipped"
        } else if rep.solutions.iter().all(|s| s.residuals.oracle.ok()) {
            "verified"
        } else {
            "failed"
        };
        SweepRow {
            k1: rep.params.k1,
            k: rep.params.k,
            p: rep.params.p,
            n: rep.params.n(),
            case1_solutions: rep.case1.solutions.len(),
            case2_solutions: c2.len(),
            case2_below_one: rep.theorem.case2_below_one,
            case2_at_one: rep.theorem.case2_at_one,
            case2_above_one: rep.theorem.case2_above_one,
            theorem_met: rep.theorem.met,
            x12_roots: join(&|s| to_decimal(&s.x12.value, 15)),
            lambdas: join(&|s| to_decimal(&s.lambda, 15)),
            classifications: join(&|s| s.classification.to_string()),
            residuals_ok: rep.residuals_ok(),
            oracle: oracle.into(),
            lambda_decreasing: mono.holds_on_whole_range,
        }
    }

    pub fn params(&self) -> (u32, u32, u32) {
        (self.k1, self.k, self.p)
    }
}

impl TableRow for SweepRow {
    fn header() -> Vec<&'static str> {
        vec![
            "k1",
            "k",
            "p",
            "n",
            "case1_solutions",
            "case2_solutions",
            "case2_below_one",
            "case2_at_one",
            "case2_above_one",
            "theorem_met",
            "x12_roots",
            "lambdas",
            "classifications",
            "residuals_ok",
            "oracle",
            "lambda_decreasing",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.k1.to_string(),
            self.k.to_string(),
            self.p.to_string(),
            self.n.to_string(),
            self.case1_solutions.to_string(),
            self.case2_solutions.to_string(),
            self.case2_below_one.to_string(),
            self.case2_at_one.to_string(),
            self.case2_above_one.to_string(),
            self.theorem_met.to_string(),
            self.x12_roots.clone(),
            self.lambdas.clone(),
            self.classifications.clone(),
            self.residuals_ok.to_string(),
            self.oracle.clone(),
            self.lambda_decreasing.to_string(),
        ]
    }
}

pub fn to_csv<R: TableRow>(rows: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(R::header()).map_err(csv_err)?;
    for r in rows {
        w.write_record(r.cells()).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Io(std::io::Error::other(e.to_string()))
}

/// Reads rows written by [`to_csv`].
pub fn from_csv<R: TableRow + for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<R>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(csv_err)).collect()
}

pub fn to_markdown<R: TableRow>(rows: &[R], columns: Option<&[&str]>) -> String {
    let header = R::header();
    let keep: Vec<usize> = match columns {
        Some(cols) => header.iter().enumerate().filter(|(_, h)| cols.contains(h)).map(|(i, _)| i).collect(),
        None => (0..header.len()).collect(),
    };
    let mut out = String::new();
    let line = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
    out += &line(keep.iter().map(|&i| header[i].to_string()).collect());
    out += &line(keep.iter().map(|_| "---".to_string()).collect());
    for r in rows {
        let c = r.cells();
        out += &line(keep.iter().map(|&i| c[i].replace('|', "\\|")).collect());
    }
    out
}

/// Columns shown in Markdown solution tables.
pub const SOLUTION_MD_COLUMNS: &[&str] =
    &["k1", "k", "p", "case", "classification", "x12", "x1", "x2", "y1", "y2", "lambda", "oracle"];

#[derive(Debug, Clone, Serialize)]
pub struct TheoremSummary {
    pub expectation: String,
    pub met: bool,
    pub case2_below_one: usize,
    pub case2_at_one: usize,
    pub case2_above_one: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Case1Summary {
    pub q1: String,
    pub discriminant: String,
    pub roots: Vec<String>,
}

/// Full JSON document of the `solve` command.
#[derive(Debug, Clone, Serialize)]
pub struct SolveDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub params: SystemParams,
    pub precision_bits: u32,
    pub f3_coefficients: Vec<String>,
    pub f3_at_one: String,
    pub roots_in_range: usize,
    pub roots_beyond_range: usize,
    pub case1: Case1Summary,
    pub theorem: TheoremSummary,
    pub records: Vec<SolutionRecord>,
    pub rejected: Vec<RejectedRoot>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monotonicity: Option<MonotonicityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isometry: Option<IsometryReport>,
}

impl SolveDocument {
    pub fn new(
        rep: &SolveReport,
        monotonicity: Option<MonotonicityCertificate>,
        isometry: Option<IsometryReport>,
    ) -> Self {
        let mut certs = vec![];
        if monotonicity.is_some() {
            certs.push("monotonicity");
        }
        if isometry.is_some() {
            certs.push("isometry");
        }
        let records = rep
            .solutions
            .iter()
            .map(|s| {
                let c: Vec<&str> = if s.case == crate::einstein::SolutionCase::Case2 { certs.clone() } else { vec![] };
                SolutionRecord::from_solution(s, &c)
            })
            .collect();
        SolveDocument {
            schema: SCHEMA,
            command: "solve",
            params: rep.params,
            precision_bits: rep.precision_bits,
            f3_coefficients: rep.f3.coeffs().iter().map(format_rational).collect(),
            f3_at_one: format_rational(&rep.f3_at_one),
            roots_in_range: rep.roots_in_range,
            roots_beyond_range: rep.roots_beyond_range,
            case1: Case1Summary {
                q1: rep.case1.q1.to_string(),
                discriminant: rep.case1.discriminant.to_string(),
                roots: rep.case1.roots.iter().map(|r| r.to_string()).collect(),
            },
            theorem: TheoremSummary {
                expectation: rep.theorem.expectation.clone(),
                met: rep.theorem.met,
                case2_below_one: rep.theorem.case2_below_one,
                case2_at_one: rep.theorem.case2_at_one,
                case2_above_one: rep.theorem.case2_above_one,
            },
            records,
            rejected: rep.rejected.clone(),
            monotonicity,
            isometry,
        }
    }
}

/// JSON document of the `certify` command.
#[derive(Debug, Clone, Serialize)]
pub struct CertifyDocument {
    pub schema: &'static str,
    pub command: &'static str,
    pub params: SystemParams,
    pub monotonicity: MonotonicityCertificate,
    pub remark1: SignCertificate,
    pub isometry: IsometryReport,
    pub passed: bool,
}

/// JSON document of the `sweep` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepDocument {
    pub schema: String,
    pub command: String,
    pub precision_bits: u32,
    pub rows: Vec<SweepRow>,
}

/// JSON document of the `verify` command.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyDocument {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(flatten)]
    pub report: crate::verify::VerifyReport,
}

pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::{solve_with, SolveOptions};

    fn report() -> SolveReport {
        let p = SystemParams::new(3, 2, 3).unwrap();
        solve_with(&p, &SolveOptions { oracle: false, ..SolveOptions::default() }).unwrap()
    }

    #[test]
    fn csv_round_trip_matches_json_values() {
        let rep = report();
        let rows: Vec<SolutionRecord> = rep.solutions.iter().map(|s| SolutionRecord::from_solution(s, &[])).collect();
        let csv = to_csv(&rows).unwrap();
        let back: Vec<SolutionRecord> = from_csv(&csv).unwrap();
        assert_eq!(rows, back);
        let json = to_json(&rows).unwrap();
        let from_json: Vec<SolutionRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(rows, from_json);
    }

    #[test]
    fn decimals_lie_in_intervals() {
        let rep = report();
        for s in &rep.solutions {
            let r = SolutionRecord::from_solution(s, &[]);
            let d = crate::exactpoly::parse_rational(&r.x12).unwrap();
            let lo = crate::exactpoly::parse_rational(&r.x12_lo).unwrap();
            let hi = crate::exactpoly::parse_rational(&r.x12_hi).unwrap();
            let tol = crate::exactpoly::ratio(1, 1_000_000_000_000_000_000);
            assert!(&lo - &tol <= d && d <= &hi + &tol);
        }
    }

    #[test]
    fn document_schema() {
        let doc = SolveDocument::new(&report(), None, None);
        let v: serde_json::Value = serde_json::from_str(&to_json(&doc).unwrap()).unwrap();
        assert_eq!(v["schema"], "einsu/1");
        assert_eq!(v["f3_coefficients"][0], "1443420/1");
    }

    #[test]
    fn markdown_has_header_and_rows() {
        let rep = report();
        let rows: Vec<SolutionRecord> = rep.solutions.iter().map(|s| SolutionRecord::from_solution(s, &[])).collect();
        let md = to_markdown(&rows, Some(SOLUTION_MD_COLUMNS));
        assert_eq!(md.lines().count(), rows.len() + 2);
        assert!(md.starts_with("| k1 | k | p | case"));
    }
}
