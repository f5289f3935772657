use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::polys::f3_coeffs;
use super::solve::SolveReport;
use super::system::{q1_poly, ricci_difference_factors, system_f};
use super::SystemParams;
use crate::curvature::SymmetricMetric;
use crate::error::Result;
use crate::exactpoly::{from_f64, sturm_count, RationalPolynomial};

const CONVERGED: f64 = 1e-12;
// Newton converges slowly onto the bi-invariant point, where the Jacobian
// is singular, so matching is looser than the residual threshold suggests.
const SAME_POINT: f64 = 1e-4;
const MAX_STEPS: usize = 200;

/// A zero of the five equations found by damped Newton in `f64`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreFind {
    pub metric: SymmetricMetric<f64>,
    pub residual: f64,
    /// Index into the solve report's solution list.
    pub matched: Option<usize>,
    /// Whether an exact root of the governing polynomial sits next to it.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreReport {
    pub params: SystemParams,
    pub seed: u64,
    pub starts: usize,
    pub converged: usize,
    pub finds: Vec<ExploreFind>,
    pub unmatched: usize,
}

fn metric_of(v: &[f64; 5]) -> SymmetricMetric<f64> {
    let e = v.map(f64::exp);
    SymmetricMetric { y1: e[0], y2: e[1], x1: e[2], x2: e[3], x12: e[4], x23: 1.0 }
}

/// Ricci differences, which are the equations divided by their positive
/// prefactors; they are better scaled than the raw polynomials.
fn residual(params: &SystemParams, v: &[f64; 5]) -> [f64; 5] {
    let m = metric_of(v);
    let f = system_f(params, &m).expect("x23 = 1");
    let d = ricci_difference_factors(params, &m);
    std::array::from_fn(|i| f[i] / d[i])
}

fn norm(r: &[f64; 5]) -> f64 {
    r.iter().fold(0.0f64, |a, b| a.max(b.abs()))
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
fn solve5(mut a: [[f64; 5]; 5], mut b: [f64; 5]) -> Option<[f64; 5]> {
    for col in 0..5 {
        let piv = (col..5).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..5 {
            let f = a[row][col] / a[col][col];
            let pivot = a[col];
            for (x, y) in a[row][col..].iter_mut().zip(&pivot[col..]) {
                *x -= f * y;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 5];
    for row in (0..5).rev() {
        let s: f64 = (row + 1..5).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}

fn newton(params: &SystemParams, mut v: [f64; 5]) -> Option<([f64; 5], f64)> {
    let mut r = residual(params, &v);
    for _ in 0..MAX_STEPS {
        let nr = norm(&r);
        if !nr.is_finite() {
            return None;
        }
        if nr < CONVERGED {
            return Some((v, nr));
        }
        let mut jac = [[0.0; 5]; 5];
        for j in 0..5 {
            let h = 1e-7 * v[j].abs().max(1.0);
            let (mut vp, mut vm) = (v, v);
            vp[j] += h;
            vm[j] -= h;
            let (rp, rm) = (residual(params, &vp), residual(params, &vm));
            for i in 0..5 {
                jac[i][j] = (rp[i] - rm[i]) / (2.0 * h);
            }
        }
        let step = solve5(jac, r.map(|x| -x))?;
        let mut t = 1.0;
        loop {
            let cand: [f64; 5] = std::array::from_fn(|i| v[i] + t * step[i].clamp(-2.0, 2.0));
            let rc = residual(params, &cand);
            if norm(&rc) < nr || t < 1e-6 {
                v = cand;
                r = rc;
                break;
            }
            t *= 0.5;
        }
    }
    let nr = norm(&r);
    (nr < CONVERGED).then_some((v, nr))
}

fn rel_close(a: &SymmetricMetric<f64>, b: &SymmetricMetric<f64>) -> bool {
    a.as_array().iter().zip(b.as_array()).all(|(x, y)| (**x - *y).abs() <= SAME_POINT * x.abs().max(y.abs()))
}

fn root_nearby(poly: &RationalPolynomial, x: f64) -> bool {
    let (Ok(lo), Ok(hi)) = (from_f64(x * (1.0 - SAME_POINT)), from_f64(x * (1.0 + SAME_POINT))) else {
        return false;
    };
    sturm_count(poly, &lo, &hi).is_ok_and(|c| c > 0)
}

/// Damped Newton on the full five-equation system from random positive
/// starts. Every find is matched against the certified solutions or checked
/// for an exact root of the governing polynomial next to it.
pub fn explore(params: &SystemParams, report: &SolveReport, starts: usize, seed: u64) -> Result<ExploreReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (params.search_bound() as f64).ln();
    let inits: Vec<[f64; 5]> = (0..starts).map(|_| std::array::from_fn(|_| rng.random_range(-span..span))).collect();
    let f3 = f3_coeffs(params)?;
    let q1 = q1_poly(params);
    let mut finds: Vec<ExploreFind> = vec![];
    let mut converged = 0;
    for v0 in inits {
        let Some((v, res)) = newton(params, v0) else { continue };
        converged += 1;
        let m = metric_of(&v);
        if finds.iter().any(|f| rel_close(&f.metric, &m)) {
            continue;
        }
        let matched = report.solutions.iter().position(|s| rel_close(&s.metric.map(crate::exactpoly::to_f64), &m));
        let certified = match matched {
            Some(i) => report.solutions[i].residuals.ok(),
            None => {
                if (m.x2 - 1.0).abs() < SAME_POINT && (m.y2 - 1.0).abs() < SAME_POINT {
                    root_nearby(&q1, m.x12) || (m.x12 - 1.0).abs() < SAME_POINT
                } else {
                    root_nearby(&f3, m.x12)
                }
            }
        };
        finds.push(ExploreFind { metric: m, residual: res, matched, certified });
    }
    finds.sort_by(|a, b| a.metric.x12.total_cmp(&b.metric.x12));
    let unmatched = finds.iter().filter(|f| f.matched.is_none()).count();
    Ok(ExploreReport { params: *params, seed, starts, converged, finds, unmatched })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::einstein::{solve_with, SolveOptions};

    #[test]
    fn gaussian_elimination() {
        let mut a = [[0.0; 5]; 5];
        for i in 0..5 {
            a[i][i] = (i + 1) as f64;
            a[i][(i + 1) % 5] = 1.0;
        }
        let x = [1.0, -2.0, 3.0, 0.5, 4.0];
        let b: [f64; 5] = std::array::from_fn(|i| (0..5).map(|j| a[i][j] * x[j]).sum());
        let y = solve5(a, b).unwrap();
        assert!(x.iter().zip(y).all(|(p, q)| (p - q).abs() < 1e-12));
    }

    #[test]
    fn finds_are_known_or_certified() {
        let params = SystemParams::new(3, 2, 3).unwrap();
        let rep = solve_with(&params, &SolveOptions { oracle: false, ..SolveOptions::default() }).unwrap();
        let ex = explore(&params, &rep, 60, 42).unwrap();
        assert!(ex.converged > 0);
        assert!(ex.finds.iter().all(|f| f.certified), "{ex:?}");
    }
}
