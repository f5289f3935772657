use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::polys::f3_coeffs;
use super::system::{case1_metric, case2_metric, one_minus_x2, q1_poly, system_f};
use super::SystemParams;
use crate::curvature::{ricci_oracle_with, GeneralMetric, SymmetricMetric};
use crate::error::{Error, Result};
use crate::exactpoly::{
    int, ratio, refine_root, sign, sturm_count, sturm_isolate, to_f64, IsolatingInterval, QuadSurd, RationalPolynomial,
    RefinedRoot, Ring,
};
use crate::liealg::{build_decomposition, Decomposition};
use crate::structconst::StructureConstants;

/// Largest `N` for which solutions are checked against the Koszul oracle.
pub const ORACLE_MAX_N: u32 = 8;
/// Bound on `max |Ric - λ g| / max g` in the oracle check.
pub const ORACLE_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolutionCase {
    BiInvariant,
    Case1,
    Case2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `x12 = x23`.
    NaturallyReductiveI,
    /// `y2 = x2 = x23`.
    NaturallyReductiveII,
    BiInvariant,
    NonNaturallyReductive,
}

impl Classification {
    pub fn is_naturally_reductive(&self) -> bool {
        !matches!(self, Classification::NonNaturallyReductive)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NaturallyReductiveI => "NaturallyReductive(i)",
            Classification::NaturallyReductiveII => "NaturallyReductive(ii)",
            Classification::BiInvariant => "NaturallyReductive(bi-invariant)",
            Classification::NonNaturallyReductive => "NonNaturallyReductive",
        })
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleStatus {
    Verified { residual: f64 },
    Failed { residual: f64 },
    Skipped { reason: String },
}

impl OracleStatus {
    pub fn ok(&self) -> bool {
        !matches!(self, OracleStatus::Failed { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residuals {
    /// `max |f_i|` at the reported metric.
    pub exact_max: BigRational,
    pub exact_bound: BigRational,
    /// The equations vanish identically at the exact root.
    pub exactly_zero: bool,
    pub oracle: OracleStatus,
}

impl Residuals {
    pub fn ok(&self) -> bool {
        self.exact_max <= self.exact_bound && self.oracle.ok()
    }
}

#[derive(Debug, Clone)]
pub struct EinsteinSolution {
    pub params: SystemParams,
    pub case: SolutionCase,
    /// Polynomial in `x12` that the root was isolated from.
    pub polynomial: RationalPolynomial,
    pub interval: IsolatingInterval,
    pub x12: RefinedRoot,
    /// Closed form of `x12` when it is rational or quadratic.
    pub x12_exact: Option<QuadSurd>,
    /// Metric at the refined `x12` (`x23 = 1`).
    pub metric: SymmetricMetric<BigRational>,
    pub exact_metric: Option<SymmetricMetric<QuadSurd>>,
    pub lambda: BigRational,
    pub lambda_exact: Option<QuadSurd>,
    pub residuals: Residuals,
    /// `x2 < 1` shown from the factored form of `1 - x2`.
    pub x2_below_one: bool,
    pub classification: Classification,
}

impl EinsteinSolution {
    pub fn x12_f64(&self) -> f64 {
        to_f64(&self.x12.value)
    }
}

/// Decides natural reductivity from exact data only.
pub fn classify(sol: &EinsteinSolution) -> Classification {
    if let Some(m) = &sol.exact_metric {
        let one = QuadSurd::one_elem();
        if m.as_array().iter().all(|v| **v == one) {
            return Classification::BiInvariant;
        }
        if m.x12 == m.x23 {
            return Classification::NaturallyReductiveI;
        }
        if m.x2 == m.x23 && m.y2 == m.x23 {
            return Classification::NaturallyReductiveII;
        }
        return Classification::NonNaturallyReductive;
    }
    // irrational root: x12 = 1 would have been found exactly
    let x12_is_one = sol.interval.exact.as_ref().is_some_and(|r| r.is_one());
    if x12_is_one {
        return Classification::NaturallyReductiveI;
    }
    if !sol.x2_below_one && sol.metric.x2.is_one() && sol.metric.y2.is_one() {
        return Classification::NaturallyReductiveII;
    }
    Classification::NonNaturallyReductive
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RejectedRoot {
    pub case: SolutionCase,
    pub interval: IsolatingInterval,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct Case1Report {
    pub q1: RationalPolynomial,
    pub discriminant: BigInt,
    pub roots: Vec<QuadSurd>,
    pub solutions: Vec<EinsteinSolution>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub expectation: String,
    pub case2_below_one: usize,
    pub case2_at_one: usize,
    pub case2_above_one: usize,
    pub met: bool,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub params: SystemParams,
    pub precision_bits: u32,
    pub f3: RationalPolynomial,
    pub f3_at_one: BigRational,
    pub case1: Case1Report,
    /// Bi-invariant, Case 1 and Case 2 solutions, in that order.
    pub solutions: Vec<EinsteinSolution>,
    pub rejected: Vec<RejectedRoot>,
    /// Distinct roots of `F3` in `(0, k1 k p]` and beyond it.
    pub roots_in_range: usize,
    pub roots_beyond_range: usize,
    pub theorem: TheoremCheck,
}

impl SolveReport {
    pub fn case2(&self) -> impl Iterator<Item = &EinsteinSolution> {
        self.solutions.iter().filter(|s| s.case == SolutionCase::Case2)
    }

    pub fn residuals_ok(&self) -> bool {
        self.solutions.iter().all(|s| s.residuals.ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub precision_bits: u32,
    /// Run the Koszul oracle when `N <= oracle_max_n`.
    pub oracle: bool,
    pub oracle_max_n: u32,
    /// Fail with a theorem-violation error when the guaranteed roots are missing.
    pub strict: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { precision_bits: 256, oracle: true, oracle_max_n: ORACLE_MAX_N, strict: true }
    }
}

/// `10^-(floor(bits log10 2) / 2)`.
fn residual_bound(bits: u32) -> BigRational {
    let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as usize / 2;
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits))
}

struct Oracle {
    dec: Decomposition,
    sc: StructureConstants,
}

impl Oracle {
    fn check(&self, m: &SymmetricMetric<f64>, lambda: f64) -> Result<OracleStatus> {
        let g = GeneralMetric::from_symmetric(&self.dec, m)?;
        let ric = ricci_oracle_with(&self.dec, &self.sc, &g)?;
        let residual = ric.einstein_residual(&self.dec, &g, lambda);
        Ok(if residual <= ORACLE_RESIDUAL_TOL {
            OracleStatus::Verified { residual }
        } else {
            OracleStatus::Failed { residual }
        })
    }
}

fn max_abs(vals: &[BigRational]) -> BigRational {
    vals.iter().map(|v| v.abs()).max().unwrap_or_else(BigRational::zero)
}

struct Candidate {
    case: SolutionCase,
    polynomial: RationalPolynomial,
    interval: IsolatingInterval,
    exact: Option<QuadSurd>,
}

fn build(
    params: &SystemParams,
    cand: Candidate,
    bits: u32,
    oracle: Option<&Oracle>,
) -> Result<std::result::Result<EinsteinSolution, RejectedRoot>> {
    let reject = |interval: IsolatingInterval, reason: String| RejectedRoot { case: cand.case, interval, reason };
    let x12 = match &cand.exact {
        Some(q) if q.is_rational() => RefinedRoot {
            value: q.a.clone(),
            lo: q.a.clone(),
            hi: q.a.clone(),
            precision_bits: bits,
            newton_steps: 0,
            bisection_steps: 0,
        },
        _ => refine_root(&cand.polynomial, &cand.interval, bits)?,
    };
    if !x12.value.is_positive() {
        return Ok(Err(reject(cand.interval, "nonpositive x12".into())));
    }
    let (metric, exact_metric) = match cand.case {
        SolutionCase::Case2 => {
            let m = case2_metric(params, &x12.value)?;
            let e = match &cand.exact {
                Some(q) => Some(case2_metric(params, q)?),
                None => None,
            };
            (m, e)
        }
        SolutionCase::BiInvariant => (SymmetricMetric::ones(), Some(SymmetricMetric::ones())),
        SolutionCase::Case1 => {
            let m = case1_metric(params, &x12.value);
            let e = cand.exact.as_ref().map(|q| case1_metric(params, q));
            (m, e)
        }
    };
    if !metric.is_positive() || exact_metric.as_ref().is_some_and(|m| !m.is_positive()) {
        return Ok(Err(reject(cand.interval, format!("nonpositive metric {:?}", metric.map(to_f64)))));
    }
    let x2_below_one = match cand.case {
        SolutionCase::Case2 => {
            let (a, b, d) = one_minus_x2(params, &x12.value)?;
            let kp = params.k as i64 * (params.p as i64 - 1);
            kp >= 2 && a.is_positive() && b.is_positive() && d.is_positive()
        }
        _ => false,
    };
    if cand.case == SolutionCase::Case2 && !x2_below_one {
        return Ok(Err(reject(cand.interval, "x2 < 1 not established".into())));
    }

    let f = system_f(params, &metric)?;
    let (exact_max, exactly_zero) = match &exact_metric {
        Some(em) => {
            let fe = system_f(params, em)?;
            let zero = fe.iter().all(|v| v.is_zero());
            (if zero { BigRational::zero() } else { max_abs(&f) }, zero)
        }
        None => (max_abs(&f), false),
    };
    let lambda = &metric.y1 / (int(4) * &metric.x12 * &metric.x12);
    let lambda_exact =
        exact_metric.as_ref().map(|m| m.y1.clone() / (QuadSurd::from_i64(4) * m.x12.clone() * m.x12.clone()));
    let oracle_status = match oracle {
        Some(o) => match (&exact_metric, &lambda_exact) {
            (Some(em), Some(le)) => o.check(&em.map(|v| v.to_f64()), le.to_f64())?,
            _ => o.check(&metric.map(to_f64), to_f64(&lambda))?,
        },
        None => OracleStatus::Skipped { reason: format!("N = {} exceeds the oracle cap", params.n()) },
    };
    let mut sol = EinsteinSolution {
        params: *params,
        case: cand.case,
        polynomial: cand.polynomial,
        interval: cand.interval,
        x12,
        x12_exact: cand.exact,
        metric,
        exact_metric,
        lambda,
        lambda_exact,
        residuals: Residuals { exact_max, exact_bound: residual_bound(bits), exactly_zero, oracle: oracle_status },
        x2_below_one,
        classification: Classification::NonNaturallyReductive,
    };
    sol.classification = classify(&sol);
    Ok(Ok(sol))
}

/// Largest square dividing `n` (by trial division up to `limit`), as `(s, r)`
/// with `n = s^2 r`.
fn split_square(n: &BigInt, limit: u32) -> (BigInt, BigInt) {
    let root = n.sqrt();
    if &root * &root == *n {
        return (root, BigInt::one());
    }
    let mut s = BigInt::one();
    let mut r = n.clone();
    let mut q = 2u32;
    while q <= limit {
        let qq = BigInt::from(q * q);
        while (&r % &qq).is_zero() {
            r /= &qq;
            s *= q;
        }
        q += 1;
    }
    (s, r)
}

/// Roots of `a x^2 + b x + c` as exact surds, ascending.
fn quadratic_roots(q: &RationalPolynomial) -> (BigInt, Vec<QuadSurd>) {
    let ic = q.integer_coeffs();
    let (c, b, a) = (&ic[0], &ic[1], &ic[2]);
    let disc = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return (disc, vec![]);
    }
    let two_a = BigInt::from(2) * a;
    let centre = BigRational::new(-b, two_a.clone());
    if disc.is_zero() {
        return (disc, vec![QuadSurd::rational(centre)]);
    }
    let (s, r) = split_square(&disc, 10_000);
    let half = BigRational::new(s, two_a);
    let mut roots: Vec<QuadSurd> = if r.is_one() {
        vec![QuadSurd::rational(&centre - &half), QuadSurd::rational(&centre + &half)]
    } else {
        vec![QuadSurd::new(centre.clone(), -half.clone(), r.clone()), QuadSurd::new(centre, half, r)]
    };
    roots.sort_by(|x, y| x.partial_cmp(y).expect("surds are ordered"));
    (disc, roots)
}

fn case1_candidates(params: &SystemParams) -> Result<(RationalPolynomial, BigInt, Vec<QuadSurd>, Vec<Candidate>)> {
    let q1 = q1_poly(params);
    let (disc, roots) = quadratic_roots(&q1);
    let ivs = sturm_isolate(&q1, &int(0), None)?;
    let positive: Vec<QuadSurd> = roots.iter().filter(|r| r.sign() > 0).cloned().collect();
    if positive.len() != ivs.len() {
        return Err(Error::NumericalConsistency(format!(
            "Q1 for {params}: {} positive surd roots but {} isolated",
            positive.len(),
            ivs.len()
        )));
    }
    let mut cands = vec![Candidate {
        case: SolutionCase::BiInvariant,
        polynomial: RationalPolynomial::from_integers(&[-1, 1]),
        interval: IsolatingInterval {
            lo: ratio(1, 2),
            hi: ratio(3, 2),
            sign_lo: -1,
            sign_hi: 1,
            exact: Some(int(1)),
            multiplicity: 1,
        },
        exact: Some(QuadSurd::one_elem()),
    }];
    for (iv, r) in ivs.into_iter().zip(&positive) {
        let exact = r.is_rational().then(|| r.a.clone());
        cands.push(Candidate {
            case: SolutionCase::Case1,
            polynomial: q1.clone(),
            interval: IsolatingInterval { exact: iv.exact.clone().or(exact), ..iv },
            exact: Some(r.clone()),
        });
    }
    Ok((q1, disc, roots, cands))
}

fn make_oracle(params: &SystemParams, opts: &SolveOptions) -> Option<Oracle> {
    if !opts.oracle || params.n() > opts.oracle_max_n {
        return None;
    }
    let dec = build_decomposition(&params.partition());
    let sc = StructureConstants::compute(&dec);
    Some(Oracle { dec, sc })
}

fn check_precision(bits: u32) -> Result<()> {
    if bits < 64 {
        return Err(Error::Parameter(format!("precision must be at least 64 bits, got {bits}")));
    }
    Ok(())
}

/// Case 1 (`x2 = 1`): the bi-invariant metric and the positive roots of `Q1`.
pub fn case1_solve(params: &SystemParams, opts: &SolveOptions) -> Result<Case1Report> {
    check_precision(opts.precision_bits)?;
    let oracle = make_oracle(params, opts);
    case1_with(params, opts, oracle.as_ref()).map(|(r, _)| r)
}

fn case1_with(
    params: &SystemParams,
    opts: &SolveOptions,
    oracle: Option<&Oracle>,
) -> Result<(Case1Report, Vec<RejectedRoot>)> {
    let (q1, discriminant, roots, cands) = case1_candidates(params)?;
    let built: Vec<_> =
        cands.into_iter().map(|c| build(params, c, opts.precision_bits, oracle)).collect::<Result<_>>()?;
    let (mut solutions, mut rejected) = (vec![], vec![]);
    for b in built {
        match b {
            Ok(s) => solutions.push(s),
            Err(r) => rejected.push(r),
        }
    }
    Ok((Case1Report { q1, discriminant, roots, solutions }, rejected))
}

/// Full pipeline with default options at the given precision.
pub fn solve(params: &SystemParams, precision_bits: u32) -> Result<SolveReport> {
    solve_with(params, &SolveOptions { precision_bits, ..SolveOptions::default() })
}

pub fn solve_with(params: &SystemParams, opts: &SolveOptions) -> Result<SolveReport> {
    check_precision(opts.precision_bits)?;
    let oracle = make_oracle(params, opts);
    let (case1, mut rejected) = case1_with(params, opts, oracle.as_ref())?;

    let f3 = f3_coeffs(params)?;
    let one = int(1);
    let bound = BigRational::from_integer(BigInt::from(params.search_bound()));
    let mut ivs = sturm_isolate(&f3, &int(0), Some(&one))?;
    ivs.extend(sturm_isolate(&f3, &one, Some(&bound))?);
    let roots_in_range = ivs.len();
    let cauchy = f3.cauchy_bound();
    let roots_beyond_range = if cauchy > bound { sturm_count(&f3, &bound, &cauchy)? } else { 0 };

    let cands: Vec<Candidate> = ivs
        .into_iter()
        .map(|iv| Candidate {
            case: SolutionCase::Case2,
            polynomial: f3.clone(),
            exact: iv.exact.clone().map(QuadSurd::rational),
            interval: iv,
        })
        .collect();
    let built: Vec<_> =
        cands.into_par_iter().map(|c| build(params, c, opts.precision_bits, oracle.as_ref())).collect::<Result<_>>()?;
    let mut solutions = case1.solutions.clone();
    for b in built {
        match b {
            Ok(s) => solutions.push(s),
            Err(r) => rejected.push(r),
        }
    }

    let f3_at_one = f3.eval(&one);
    let case2: Vec<&EinsteinSolution> = solutions.iter().filter(|s| s.case == SolutionCase::Case2).collect();
    let at_one = case2.iter().filter(|s| s.interval.exact.as_ref() == Some(&one)).count();
    let below = case2.iter().filter(|s| s.interval.exact.is_none() && s.interval.hi <= one).count();
    let above = case2.iter().filter(|s| s.interval.lo >= one && s.interval.exact.as_ref() != Some(&one)).count();
    let (expectation, met) = match params.k1.cmp(&params.k) {
        std::cmp::Ordering::Greater => (
            "k1 > k: Case 2 roots in (0,1) and in (1, k1 k p)".to_string(),
            below >= 1 && above >= 1 && sign(&f3_at_one) < 0,
        ),
        std::cmp::Ordering::Equal => (
            "k1 = k: Case 2 root x12 = 1 and a root in (0,1)".to_string(),
            at_one >= 1 && below >= 1 && f3_at_one.is_zero(),
        ),
        std::cmp::Ordering::Less => ("k1 < k: no existence claim".to_string(), true),
    };
    let theorem =
        TheoremCheck { expectation, case2_below_one: below, case2_at_one: at_one, case2_above_one: above, met };
    if opts.strict && !theorem.met {
        return Err(Error::TheoremViolation(format!(
            "{params}: {} (found {below} below 1, {at_one} at 1, {above} above 1)",
            theorem.expectation
        )));
    }
    Ok(SolveReport {
        params: *params,
        precision_bits: opts.precision_bits,
        f3,
        f3_at_one,
        case1,
        solutions,
        rejected,
        roots_in_range,
        roots_beyond_range,
        theorem,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prm(k1: u32, k: u32, p: u32) -> SystemParams {
        SystemParams::new(k1, k, p).unwrap()
    }

    #[test]
    fn quadratic_roots_are_exact_surds() {
        let (d, r) = quadratic_roots(&RationalPolynomial::from_integers(&[108, -168, 52]));
        assert_eq!(d, BigInt::from(360));
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].d, BigInt::from(10));
        assert_eq!(r[1].a, ratio(21, 13));
        assert_eq!(r[1].b, ratio(3, 13));
        let (_, r) = quadratic_roots(&RationalPolynomial::from_integers(&[2, -3, 1]));
        assert!(r.iter().all(|q| q.is_rational()));
        let (_, r) = quadratic_roots(&RationalPolynomial::from_integers(&[1, 0, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn case1_for_323() {
        let opts = SolveOptions { oracle: false, ..SolveOptions::default() };
        let rep = case1_solve(&prm(3, 2, 3), &opts).unwrap();
        assert_eq!(rep.solutions.len(), 3);
        assert_eq!(rep.solutions[0].classification, Classification::BiInvariant);
        assert_eq!(rep.solutions[0].lambda, ratio(1, 4));
        for s in &rep.solutions[1..] {
            assert!(s.residuals.exactly_zero);
            assert_eq!(s.classification, Classification::NaturallyReductiveII);
        }
    }

    #[test]
    fn solve_323_without_oracle() {
        let opts = SolveOptions { oracle: false, ..SolveOptions::default() };
        let rep = solve_with(&prm(3, 2, 3), &opts).unwrap();
        let c2: Vec<_> = rep.case2().collect();
        assert_eq!(c2.len(), 2);
        assert!(rep.theorem.met);
        assert!(c2.iter().all(|s| s.classification == Classification::NonNaturallyReductive));
        assert!(rep.residuals_ok());
        assert!((c2[0].x12_f64() - 0.746092801872769).abs() < 1e-12);
        assert!((c2[1].x12_f64() - 1.44457132938799).abs() < 1e-12);
    }

    #[test]
    fn low_precision_rejected() {
        assert!(solve(&prm(3, 2, 3), 32).is_err());
    }

    #[test]
    fn residual_bound_digits() {
        assert_eq!(residual_bound(256), BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 38)));
    }
}
