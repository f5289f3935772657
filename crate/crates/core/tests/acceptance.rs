//! Acceptance criteria 1–9. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};

use einsu::curvature::{ricci_components_symmetric, ricci_oracle_with, GeneralMetric, SymmetricMetric};
use einsu::einstein::{
    check_f3_table, classify, f3_coeffs, g3_coeffs, g3_product, isometry_report, lambda_monotonicity_certificate,
    q1_poly, remark1_certificate, solve_with, system_f, Classification, OracleStatus, SolutionCase, SolveOptions,
    SolveReport, SystemParams,
};
use einsu::exactpoly::{int, ratio, QuadSurd};
use einsu::liealg::{build_decomposition, Partition};
use einsu::structconst::{check_tail_fixed_center, triple_closed, StructureConstants, TripleTable};
use einsu::verify::{symmetric_family_errors, symmetric_shape};

const SEED: u64 = 42;
const TRIALS: usize = 20;
const RICCI_REL_TOL: f64 = 1e-9;
const OFF_BLOCK_TOL: f64 = 1e-10;
const TRIPLE_TOL: f64 = 1e-10;
const ORACLE_TOL: f64 = 1e-8;
const BI_INVARIANT_TOL: f64 = 1e-12;
const RUNTIME_CAP: Duration = Duration::from_secs(60);
const MONOTONICITY_POINTS: usize = 100;

const PARTITIONS: [&[usize]; 3] = [&[2, 2, 2], &[3, 2, 2], &[2, 2, 2, 2]];
const ELIMINATION_TRIPLES: [(u32, u32, u32); 5] = [(3, 2, 3), (4, 2, 3), (5, 3, 3), (3, 2, 4), (4, 3, 4)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(k1: u32, k: u32, p: u32) -> SystemParams {
    SystemParams::new(k1, k, p).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn solved(k1: u32, k: u32, p: u32) -> SolveReport {
    solve_with(&params(k1, k, p), &SolveOptions::default()).unwrap()
}

fn oracle_residual(s: &OracleStatus) -> Option<f64> {
    match s {
        OracleStatus::Verified { residual } | OracleStatus::Failed { residual } => Some(*residual),
        OracleStatus::Skipped { .. } => None,
    }
}

fn c1_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut notes = vec![];
    for parts in PARTITIONS {
        let partition = Partition::new(parts.to_vec()).unwrap();
        let (k1, k, p) = symmetric_shape(&partition).ok_or("not of the symmetric shape")?;
        let dec = build_decomposition(&partition);
        let sc = StructureConstants::compute(&dec);
        let (rel, off) = symmetric_family_errors(&dec, &sc, k1, k, p, TRIALS, SEED).map_err(|e| e.to_string())?;
        ensure(rel <= RICCI_REL_TOL, format!("{partition}: relative error {rel:e}"))?;
        ensure(off <= OFF_BLOCK_TOL, format!("{partition}: off-block {off:e}"))?;
        notes.push(format!("{partition} rel {rel:.1e} off {off:.1e}"));
    }
    let t = start.elapsed();
    ensure(t <= RUNTIME_CAP, format!("runtime {t:?}"))?;
    Ok(format!("{}; {:.1}s", notes.join(", "), t.as_secs_f64()))
}

fn c2_structure_constants() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut tail_note = String::new();
    for parts in PARTITIONS {
        let partition = Partition::new(parts.to_vec()).unwrap();
        let dec = build_decomposition(&partition);
        let sc = StructureConstants::compute(&dec);
        let table = TripleTable::from_constants(&dec, &sc);
        let idx = dec.module_indices();
        for &c in &idx {
            for &a in &idx {
                for &b in &idx {
                    let brute = table.get(c, a, b).map_err(|e| e.to_string())?;
                    let closed =
                        einsu::exactpoly::to_f64(&triple_closed(&partition, c, a, b).map_err(|e| e.to_string())?);
                    worst = worst.max((brute - closed).abs());
                    count += 1;
                }
            }
        }
        for t in check_tail_fixed_center(&dec, &table).map_err(|e| e.to_string())? {
            let stmt = (t.brute - t.statement_value).abs();
            let alt = (t.brute - t.alternative_value).abs();
            ensure(stmt <= TRIPLE_TOL, format!("{partition} t={}: tail sum {} vs (p-1)k/N", t.t, t.brute))?;
            ensure(alt > TRIPLE_TOL, format!("{partition}: (p-2)k/N also matches"))?;
            tail_note = "tail sum over a fixed center = (p-1)k/N, not (p-2)k/N".into();
        }
    }
    ensure(worst <= TRIPLE_TOL, format!("max |closed - brute| = {worst:e}"))?;
    let t = start.elapsed();
    ensure(t <= RUNTIME_CAP, format!("runtime {t:?}"))?;
    Ok(format!("{count} triples, max error {worst:.1e}; {tail_note}; {:.1}s", t.as_secs_f64()))
}

fn c3_theorem_first_case() -> Outcome {
    let rep = solved(3, 2, 3);
    let c2: Vec<_> = rep.case2().collect();
    ensure(c2.len() >= 2, format!("{} Case 2 solutions", c2.len()))?;
    let (one, hi) = (int(1), int(18));
    ensure(c2.iter().any(|s| s.interval.lo >= BigRational::zero() && s.interval.hi <= one), "no root in (0,1)")?;
    ensure(c2.iter().any(|s| s.interval.lo >= one && s.interval.hi <= hi), "no root in (1,18)")?;
    let mut worst: f64 = 0.0;
    for s in &c2 {
        ensure(s.metric.is_positive(), "metric not positive")?;
        ensure(s.x2_below_one, "x2 < 1 not certified")?;
        ensure(s.classification == Classification::NonNaturallyReductive, format!("classified {}", s.classification))?;
        ensure(s.residuals.oracle.ok(), format!("oracle {:?}", s.residuals.oracle))?;
        let r = oracle_residual(&s.residuals.oracle).ok_or("oracle skipped")?;
        ensure(r <= ORACLE_TOL, format!("oracle residual {r:e}"))?;
        worst = worst.max(r);
    }
    let xs: Vec<String> = c2.iter().map(|s| format!("{:.15}", s.x12_f64())).collect();
    Ok(format!("x12 = {}; oracle residual <= {worst:.1e} on su(7)", xs.join(", ")))
}

fn c4_theorem_second_case() -> Outcome {
    let p = params(2, 2, 3);
    let f3 = f3_coeffs(&p).map_err(|e| e.to_string())?;
    let prod = g3_product(&p).map_err(|e| e.to_string())?;
    ensure(f3 == prod, "F3 != k^2 (x-1) G3")?;
    let g3 = g3_coeffs(&p).map_err(|e| e.to_string())?;
    let rep = solved(2, 2, 3);
    let c2: Vec<_> = rep.case2().collect();
    let at_one = c2.iter().find(|s| s.x12.value.is_one() && s.interval.exact.is_some()).ok_or("no root at 1")?;
    ensure(at_one.classification.is_naturally_reductive(), format!("x12 = 1 classified {}", at_one.classification))?;
    let gamma = c2.iter().find(|s| s.interval.hi <= int(1) && s.interval.exact.is_none()).ok_or("no root in (0,1)")?;
    ensure(
        gamma.classification == Classification::NonNaturallyReductive,
        format!("γ classified {}", gamma.classification),
    )?;
    let mut worst: f64 = 0.0;
    for s in [at_one, gamma] {
        let r = oracle_residual(&s.residuals.oracle).ok_or("oracle skipped")?;
        ensure(s.residuals.oracle.ok() && r <= ORACLE_TOL, format!("oracle residual {r:e}"))?;
        worst = worst.max(r);
    }
    Ok(format!(
        "F3 = 4(x-1)G3 coefficient-wise, G3(0) = {}; γ = {:.15}; oracle residual <= {worst:.1e} on su(6)",
        g3.coeffs()[0],
        gamma.x12_f64()
    ))
}

fn c5_remark_one() -> Outcome {
    let p = params(48, 2, 3);
    let cert = remark1_certificate(&p).map_err(|e| e.to_string())?;
    ensure(cert.applicable, "not applicable")?;
    ensure(cert.beta == Some(ratio(660, 73)), "β != 660/73")?;
    let abscissae = [int(0), int(1), int(2), ratio(660, 73), int(288)];
    ensure(cert.points.iter().map(|p| &p.abscissa).eq(abscissae.iter()), "wrong abscissae")?;
    ensure(cert.pattern_ok, format!("signs {:?}", cert.points.iter().map(|p| p.sign).collect::<Vec<_>>()))?;
    ensure(cert.sturm_count >= 4, format!("Sturm count {}", cert.sturm_count))?;
    let rep = solved(48, 2, 3);
    let c2: Vec<_> = rep.case2().collect();
    ensure(c2.len() >= 4, format!("{} Case 2 solutions", c2.len()))?;
    for s in &c2 {
        ensure(s.metric.is_positive(), "metric not positive")?;
        ensure(s.residuals.exact_max <= s.residuals.exact_bound, "exact residual above bound")?;
        ensure(matches!(s.residuals.oracle, OracleStatus::Skipped { .. }), "oracle not skipped at N = 52")?;
    }
    Ok(format!(
        "signs (+,-,+,-,+), Sturm count {}, {} positive metrics, oracle skipped (N = 52)",
        cert.sturm_count,
        c2.len()
    ))
}

fn c6_case_one() -> Outcome {
    let p = params(3, 2, 3);
    let q1 = q1_poly(&p);
    let want = [108, -168, 52].map(int);
    let scale = &q1.coeffs()[2] / int(52);
    ensure(q1.coeffs().len() == 3, "Q1 is not quadratic")?;
    ensure(q1.coeffs().iter().zip(&want).all(|(a, b)| *a == b * &scale), format!("Q1 = {q1}"))?;
    let rep = solved(3, 2, 3);
    let case1: Vec<_> = rep.solutions.iter().filter(|s| s.case == SolutionCase::Case1).collect();
    ensure(case1.len() == 2, format!("{} Case 1 solutions", case1.len()))?;
    for s in &case1 {
        let m: &SymmetricMetric<QuadSurd> = s.exact_metric.as_ref().ok_or("no exact metric")?;
        ensure(m.x12.sign() > 0, "root not positive")?;
        let f = system_f(&p, m).map_err(|e| e.to_string())?;
        ensure(f.iter().all(|v| v.is_zero()), "system_f != 0")?;
        ensure(classify(s) == Classification::NaturallyReductiveII, format!("classified {}", s.classification))?;
    }
    let bi = rep.solutions.iter().find(|s| s.case == SolutionCase::BiInvariant).ok_or("no bi-invariant solution")?;
    ensure(bi.lambda == ratio(1, 4), format!("bi-invariant λ = {}", bi.lambda))?;
    let roots: Vec<String> = case1.iter().map(|s| s.x12_exact.as_ref().unwrap().to_string()).collect();
    Ok(format!("Q1 ∝ 52x² - 168x + 108, roots {}; bi-invariant λ = 1/4", roots.join(", ")))
}

fn c7_elimination() -> Outcome {
    let mut notes = vec![];
    for (k1, k, p) in ELIMINATION_TRIPLES {
        let ratio = check_f3_table(&params(k1, k, p)).map_err(|e| format!("({k1},{k},{p}): {e}"))?;
        notes.push(format!("({k1},{k},{p}) ratio {ratio}"));
    }
    Ok(notes.join(", "))
}

fn c8_monotonicity() -> Outcome {
    for (k1, k, p) in ELIMINATION_TRIPLES {
        let c = lambda_monotonicity_certificate(&params(k1, k, p), MONOTONICITY_POINTS).map_err(|e| e.to_string())?;
        ensure(
            c.passed && c.negative_points == MONOTONICITY_POINTS,
            format!("({k1},{k},{p}): {} of {} points negative", c.negative_points, MONOTONICITY_POINTS),
        )?;
    }
    let p = params(3, 2, 3);
    let mono = lambda_monotonicity_certificate(&p, MONOTONICITY_POINTS).map_err(|e| e.to_string())?;
    let iso = isometry_report(&solved(3, 2, 3), &mono);
    ensure(iso.pairwise_distinct && iso.non_isometric, "λ brackets overlap")?;
    let ls: Vec<&str> = iso.brackets.iter().map(|b| &b.lambda[..12]).collect();
    Ok(format!(
        "dλ/dx12 < 0 at {MONOTONICITY_POINTS} points for 5 triples; λ = {} at (3,2,3): non-isometric",
        ls.join(", ")
    ))
}

fn c9_bi_invariant() -> Outcome {
    let quarter = ratio(1, 4);
    let mut worst: f64 = 0.0;
    for parts in PARTITIONS {
        let partition = Partition::new(parts.to_vec()).unwrap();
        let dec = build_decomposition(&partition);
        let sc = StructureConstants::compute(&dec);
        let ric = ricci_oracle_with(&dec, &sc, &GeneralMetric::bi_invariant(&dec)).map_err(|e| e.to_string())?;
        worst = worst.max(ric.max_einstein_deviation(0.25));
        let (k1, k, p) = symmetric_shape(&partition).ok_or("not of the symmetric shape")?;
        let exact =
            ricci_components_symmetric(k1, k, p, &SymmetricMetric::<BigRational>::ones()).map_err(|e| e.to_string())?;
        ensure(exact.as_array().iter().all(|v| **v == quarter), format!("{partition}: closed form != 1/4"))?;
    }
    for (k1, k, p) in ELIMINATION_TRIPLES {
        let exact =
            ricci_components_symmetric(k1, k, p, &SymmetricMetric::<BigRational>::ones()).map_err(|e| e.to_string())?;
        ensure(exact.as_array().iter().all(|v| **v == quarter), format!("({k1},{k},{p}): closed form != 1/4"))?;
    }
    ensure(worst <= BI_INVARIANT_TOL, format!("oracle deviation {worst:e}"))?;
    Ok(format!("oracle within {worst:.1e}; closed form exactly 1/4"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", c1_oracle_equivalence),
        ("structure constants", c2_structure_constants),
        ("two metrics at (3,2,3)", c3_theorem_first_case),
        ("factorization and metrics at (2,2,3)", c4_theorem_second_case),
        ("four roots at (48,2,3)", c5_remark_one),
        ("Case 1 at (3,2,3)", c6_case_one),
        ("elimination vs coefficient table", c7_elimination),
        ("monotone Einstein constant", c8_monotonicity),
        ("bi-invariant sanity", c9_bi_invariant),
    ];
    let mut failed = vec![];
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        match run() {
            Ok(detail) => println!("PASS {n} {name}: {detail}"),
            Err(why) => {
                println!("FAIL {n} {name}: {why}");
                failed.push(n);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 9/9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
