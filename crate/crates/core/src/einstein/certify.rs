use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::polys::f3_coeffs;
use super::solve::{SolutionCase, SolveReport};
use super::system::{beta, lambda_polys};
use super::SystemParams;
use crate::error::Result;
use crate::exactpoly::{
    int, log_grid, rational_function_derivative, ser_opt_rational, ser_rational, sturm_count, to_decimal,
};

/// Exact sign of `dλ/dx12` on a log-spaced grid plus a Sturm count of the
/// derivative numerator on `(0, k1 k p]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityCertificate {
    pub params: SystemParams,
    pub grid_size: usize,
    #[serde(serialize_with = "ser_rational")]
    pub range_hi: BigRational,
    pub negative_points: usize,
    /// First grid point where the derivative is not negative.
    #[serde(serialize_with = "ser_opt_rational")]
    pub witness: Option<BigRational>,
    pub numerator_degree: usize,
    /// Zeros of the derivative numerator in the range; none means the sign
    /// is constant on the whole range, not only on the grid.
    pub numerator_roots_in_range: usize,
    pub denominator_roots_in_range: usize,
    pub passed: bool,
    pub holds_on_whole_range: bool,
}

pub fn lambda_monotonicity_certificate(params: &SystemParams, grid_size: usize) -> Result<MonotonicityCertificate> {
    let (num, den) = lambda_polys(params);
    let (dn, _) = rational_function_derivative(&num, &den)?;
    let hi = int(params.search_bound() as i64);
    let grid = log_grid(&hi, grid_size, 4);
    let mut negative_points = 0;
    let mut witness = None;
    for x in &grid {
        if dn.sign_at(x) < 0 {
            negative_points += 1;
        } else if witness.is_none() {
            witness = Some(x.clone());
        }
    }
    let numerator_roots_in_range = sturm_count(&dn, &BigRational::zero(), &hi)?;
    let denominator_roots_in_range = sturm_count(&den, &BigRational::zero(), &hi)?;
    let passed = grid_size > 0 && witness.is_none();
    Ok(MonotonicityCertificate {
        params: *params,
        grid_size,
        range_hi: hi,
        negative_points,
        witness,
        numerator_degree: dn.degree().unwrap_or(0),
        numerator_roots_in_range,
        denominator_roots_in_range,
        passed,
        holds_on_whole_range: passed && numerator_roots_in_range == 0 && denominator_roots_in_range == 0,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignPoint {
    #[serde(serialize_with = "ser_rational")]
    pub abscissa: BigRational,
    pub sign: i8,
}

/// Exact signs of `F3` at `0, 1, 2, β, k1 k p` for large `k1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignCertificate {
    pub params: SystemParams,
    pub applicable: bool,
    #[serde(serialize_with = "ser_opt_rational")]
    pub beta: Option<BigRational>,
    pub beta_above_two: bool,
    pub points: Vec<SignPoint>,
    pub expected: Vec<i8>,
    pub pattern_ok: bool,
    /// Sign alternations along the points: a lower bound on the root count.
    pub implied_min_roots: usize,
    pub sturm_count: usize,
    pub passed: bool,
}

pub fn remark1_certificate(params: &SystemParams) -> Result<SignCertificate> {
    let applicable = params.k1 as u64 >= 8 * params.k as u64 * params.p as u64;
    let empty = SignCertificate {
        params: *params,
        applicable,
        beta: None,
        beta_above_two: false,
        points: vec![],
        expected: vec![1, -1, 1, -1, 1],
        pattern_ok: false,
        implied_min_roots: 0,
        sturm_count: 0,
        passed: false,
    };
    if !applicable {
        return Ok(empty);
    }
    let f3 = f3_coeffs(params)?;
    let b = beta(params);
    let hi = int(params.search_bound() as i64);
    let abscissae = [int(0), int(1), int(2), b.clone(), hi.clone()];
    let points: Vec<SignPoint> =
        abscissae.iter().map(|x| SignPoint { abscissa: x.clone(), sign: f3.sign_at(x) }).collect();
    let pattern_ok = points.iter().zip(&empty.expected).all(|(p, e)| p.sign == *e);
    let implied_min_roots = points.windows(2).filter(|w| w[0].sign * w[1].sign < 0).count();
    let sturm = sturm_count(&f3, &BigRational::zero(), &hi)?;
    let beta_above_two = b > int(2);
    Ok(SignCertificate {
        beta: Some(b),
        beta_above_two,
        points,
        pattern_ok,
        implied_min_roots,
        sturm_count: sturm,
        passed: pattern_ok && beta_above_two && sturm >= 4,
        ..empty
    })
}

/// Bracket of `λ` at one Case 2 root: `λ` is decreasing, so the value at
/// the root lies between its values at the ends of the refined bracket.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambdaBracket {
    pub x12: String,
    #[serde(serialize_with = "ser_rational")]
    pub lambda_lo: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub lambda_hi: BigRational,
    pub lambda: String,
}

/// Homothetic Einstein metrics with different constants (after the
/// `x23 = 1` normalization) are not isometric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsometryReport {
    pub params: SystemParams,
    pub monotone: bool,
    pub brackets: Vec<LambdaBracket>,
    pub pairwise_distinct: bool,
    pub non_isometric: bool,
}

pub fn isometry_report(report: &SolveReport, mono: &MonotonicityCertificate) -> IsometryReport {
    let (num, den) = lambda_polys(&report.params);
    let lam = |x: &BigRational| num.eval(x) / den.eval(x);
    let mut brackets = vec![];
    for s in report.solutions.iter().filter(|s| s.case == SolutionCase::Case2) {
        let (a, b) = (lam(&s.x12.hi), lam(&s.x12.lo));
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        brackets.push(LambdaBracket {
            x12: to_decimal(&s.x12.value, 30),
            lambda_lo: lo,
            lambda_hi: hi,
            lambda: to_decimal(&s.lambda, 30),
        });
    }
    let mut pairwise_distinct = true;
    for i in 0..brackets.len() {
        for j in i + 1..brackets.len() {
            let (x, y) = (&brackets[i], &brackets[j]);
            let overlap = !(x.lambda_hi < y.lambda_lo || y.lambda_hi < x.lambda_lo);
            if overlap {
                pairwise_distinct = false;
            }
        }
    }
    let monotone = mono.holds_on_whole_range;
    IsometryReport {
        params: report.params,
        monotone,
        non_isometric: monotone && pairwise_distinct && brackets.len() >= 2,
        brackets,
        pairwise_distinct,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ratio;

    fn prm(k1: u32, k: u32, p: u32) -> SystemParams {
        SystemParams::new(k1, k, p).unwrap()
    }

    #[test]
    fn monotone_for_323_and_223() {
        for (k1, k, p) in [(3, 2, 3), (2, 2, 3)] {
            let c = lambda_monotonicity_certificate(&prm(k1, k, p), 100).unwrap();
            assert!(c.passed && c.holds_on_whole_range, "{c:?}");
            assert_eq!(c.negative_points, 100);
        }
    }

    #[test]
    fn remark1_for_48_2_3() {
        let c = remark1_certificate(&prm(48, 2, 3)).unwrap();
        assert!(c.applicable && c.passed);
        assert_eq!(c.beta, Some(ratio(660, 73)));
        assert_eq!(c.implied_min_roots, 4);
        assert!(c.sturm_count >= 4);
    }

    #[test]
    fn remark1_gate() {
        let c = remark1_certificate(&prm(4, 2, 3)).unwrap();
        assert!(!c.applicable && !c.passed && c.points.is_empty());
    }
}
