//! Oracle suite for one partition: decomposition, bracket tables, triple
//! constants and Ricci curvature, each closed form against brute force.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curvature::{
    center_entry_from_oracle, ricci_center_offdiag, ricci_components_symmetric, ricci_diagonal_ps, ricci_oracle_with,
    symmetric_component_of, GeneralMetric, SymmetricMetric,
};
use crate::error::Result;
use crate::exactpoly::to_f64;
use crate::liealg::{build_decomposition, minus_killing, Decomposition, ModuleIndex, Partition};
use crate::structconst::{
    check_bracket_relations, check_center_action, check_tail_fixed_center, triple_closed, triple_sums_closed,
    StructureConstants, TripleTable,
};

/// Largest `N` accepted by [`verify_partition`] by default.
pub const VERIFY_MAX_N: usize = 10;
pub const GRAM_TOL: f64 = 1e-12;
pub const TRIPLE_TOL: f64 = 1e-10;
pub const RICCI_REL_TOL: f64 = 1e-9;
pub const OFF_BLOCK_TOL: f64 = 1e-10;
pub const BI_INVARIANT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Check {
    fn new(name: &str, max_error: f64, tolerance: f64) -> Self {
        Check { name: name.into(), max_error, tolerance, passed: max_error <= tolerance, notes: vec![] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub partition: String,
    pub n: usize,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn gram_deviation(dec: &Decomposition) -> Result<f64> {
    let basis = dec.flat_basis();
    let mut m: f64 = 0.0;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate().skip(i) {
            let want = if i == j { 1.0 } else { 0.0 };
            m = m.max((minus_killing(x, y)? - want).abs());
        }
    }
    Ok(m)
}

/// Symmetric-family shape `(k1, k, ..., k)` with `k1, k >= 2`, `p >= 3`.
pub fn symmetric_shape(partition: &Partition) -> Option<(u32, u32, u32)> {
    let p = partition.p();
    if p < 3 || !partition.equal_tail() || partition.k(1) < 2 || partition.k(2) < 2 {
        return None;
    }
    Some((partition.k(1) as u32, partition.k(2) as u32, p as u32))
}

fn random_metric(rng: &mut ChaCha8Rng, dec: &Decomposition) -> GeneralMetric {
    let coeffs: BTreeMap<ModuleIndex, f64> =
        dec.module_indices().into_iter().map(|m| (m, rng.random_range(0.25..4.0))).collect();
    GeneralMetric::new(coeffs).expect("positive")
}

/// Random metric of the symmetric family with `x23 = 1`.
pub fn random_symmetric_metric(rng: &mut ChaCha8Rng) -> SymmetricMetric<f64> {
    let mut r = || rng.random_range(0.25..4.0);
    SymmetricMetric { y1: r(), y2: r(), x1: r(), x2: r(), x12: r(), x23: 1.0 }
}

/// Runs every oracle check on `partition` with `trials` random metrics.
pub fn verify_partition(partition: &Partition, trials: usize, seed: u64) -> Result<VerifyReport> {
    let dec = build_decomposition(partition);
    let sc = StructureConstants::compute(&dec);
    let table = TripleTable::from_constants(&dec, &sc);
    let mut checks = vec![];

    let dims: usize = dec.modules().iter().map(|m| m.dim()).sum();
    let n = partition.n();
    checks.push(Check::new("dimension count", (dims as f64 - (n * n - 1) as f64).abs(), 0.0));
    checks.push(Check::new("-B orthonormal bases", gram_deviation(&dec)?, GRAM_TOL));

    let ca = check_center_action(&dec);
    let mut c = Check::new("center action coefficients", ca.max_deviation, GRAM_TOL);
    c.passed &= ca.passed();
    c.notes = ca.violations.iter().take(5).cloned().collect();
    checks.push(c);

    let br = check_bracket_relations(&dec, trials.max(1), seed);
    let mut c = Check::new("bracket support table", br.max_leak, crate::structconst::ZERO_TOL);
    c.passed &= br.passed();
    c.notes = br.violations.iter().take(5).cloned().collect();
    checks.push(c);

    // symmetry and closed forms of every triple
    let mut sym: f64 = 0.0;
    let mut closed: f64 = 0.0;
    let mut negative = 0usize;
    for (&(c, a, b), &v) in table.entries() {
        sym = sym.max((v - table.get(a, c, b)?).abs()).max((v - table.get(b, a, c)?).abs());
        closed = closed.max((v - to_f64(&triple_closed(partition, c, a, b)?)).abs());
        if v < 0.0 {
            negative += 1;
        }
    }
    checks.push(Check::new("triple symmetry", sym, TRIPLE_TOL));
    checks.push(Check::new("triple closed forms vs brute force", closed, TRIPLE_TOL));
    checks.push(Check::new("triples nonnegative", negative as f64, 0.0));

    if partition.equal_tail() && partition.p() >= 3 {
        let sums = triple_sums_closed(partition)?;
        let p = partition.p();
        let get = |c, a, b| table.get(c, a, b);
        let mut err: f64 = 0.0;
        for s in 2..=p {
            let m = ModuleIndex::OffDiag(1, s);
            err = err.max((get(m, ModuleIndex::Center(1), m)? - to_f64(&sums.first_row_c1)).abs());
            let tail: f64 = (2..p).map(|i| get(m, ModuleIndex::Center(i), m)).sum::<Result<f64>>()?;
            err = err.max((tail - to_f64(&sums.first_row_tail_centers)).abs());
        }
        for r in 2..=p {
            for s in r + 1..=p {
                let m = ModuleIndex::OffDiag(r, s);
                let all: f64 = (1..p).map(|i| get(m, ModuleIndex::Center(i), m)).sum::<Result<f64>>()?;
                err = err.max((all - to_f64(&sums.tail_all_centers)).abs());
            }
        }
        for t in 2..p {
            let row: f64 = (2..=p)
                .map(|s| get(ModuleIndex::OffDiag(1, s), ModuleIndex::Center(t), ModuleIndex::OffDiag(1, s)))
                .sum::<Result<f64>>()?;
            err = err.max((row - to_f64(&sums.first_row_fixed_center)).abs());
        }
        checks.push(Check::new("aggregate center sums", err, TRIPLE_TOL));

        let tail = check_tail_fixed_center(&dec, &table)?;
        let stmt = tail.iter().map(|t| (t.brute - t.statement_value).abs()).fold(0.0, f64::max);
        let mut c = Check::new("tail sum over a fixed center", stmt, TRIPLE_TOL);
        for t in &tail {
            c.notes.push(format!(
                "t={}: brute {:.12}, (p-1)k/N = {:.12}, (p-2)k/N = {:.12}",
                t.t, t.brute, t.statement_value, t.alternative_value
            ));
        }
        checks.push(c);
    }

    // bi-invariant metric
    let g1 = GeneralMetric::bi_invariant(&dec);
    let ric1 = ricci_oracle_with(&dec, &sc, &g1)?;
    checks.push(Check::new("bi-invariant Ricci = 1/4", ric1.max_einstein_deviation(0.25), BI_INVARIANT_TOL));

    // random diagonal metrics: oracle against the module formula
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = partition.p();
    let (mut diag_err, mut off_err, mut center_err, mut asym): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for _ in 0..trials {
        let g = random_metric(&mut rng, &dec);
        let ric = ricci_oracle_with(&dec, &sc, &g)?;
        asym = asym.max(ric.max_asymmetry());
        let ps = ricci_diagonal_ps(&dec, &table, &g)?;
        for blk in dec.modules() {
            for a in blk.range() {
                diag_err = diag_err.max(rel_err(ric.get(a, a), ps[&blk.index]));
            }
        }
        for a in 0..ric.dim() {
            for b in 0..ric.dim() {
                let (oa, ob) = (dec.owner(a), dec.owner(b));
                let both_center = dec.modules()[oa].index.is_center() && dec.modules()[ob].index.is_center();
                if oa != ob && !both_center {
                    off_err = off_err.max(ric.get(a, b).abs());
                }
            }
        }
        for i in 1..p {
            for j in i + 1..p {
                let want = ricci_center_offdiag(&dec, &g, i, j)?;
                let got = center_entry_from_oracle(&dec, &ric, &g, i, j)?;
                center_err = center_err.max((got - want).abs() / want.abs().max(1.0));
            }
        }
    }
    checks.push(Check::new("Ricci symmetric", asym, OFF_BLOCK_TOL));
    checks.push(Check::new("Ricci diagonal vs module formula", diag_err, RICCI_REL_TOL));
    checks.push(Check::new("Ricci between non-center modules", off_err, OFF_BLOCK_TOL));
    checks.push(Check::new("Ricci between centers", center_err, RICCI_REL_TOL));

    if let Some((k1, k, pp)) = symmetric_shape(partition) {
        let (err, off) = symmetric_family_errors(&dec, &sc, k1, k, pp, trials, seed)?;
        checks.push(Check::new("symmetric-family closed forms vs oracle", err, RICCI_REL_TOL));
        checks.push(Check::new("symmetric-family off-block entries", off, OFF_BLOCK_TOL));
        let ones = ricci_components_symmetric(k1, k, pp, &SymmetricMetric::<f64>::ones())?;
        let dev = ones.as_array().iter().map(|v| (**v - 0.25).abs()).fold(0.0, f64::max);
        checks.push(Check::new("symmetric-family bi-invariant components", dev, BI_INVARIANT_TOL));
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { partition: partition.to_string(), n, dim: dims, trials, seed, checks, passed })
}

/// Largest relative error between the closed-form components and the oracle
/// diagonal, and largest oracle entry between different modules, over
/// `trials` random metrics of the symmetric family.
pub fn symmetric_family_errors(
    dec: &Decomposition,
    sc: &StructureConstants,
    k1: u32,
    k: u32,
    p: u32,
    trials: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let (mut err, mut off): (f64, f64) = (0.0, 0.0);
    for _ in 0..trials {
        let m = random_symmetric_metric(&mut rng);
        let g = GeneralMetric::from_symmetric(dec, &m)?;
        let ric = ricci_oracle_with(dec, sc, &g)?;
        let closed = ricci_components_symmetric(k1, k, p, &m)?;
        for blk in dec.modules() {
            let want = symmetric_component_of(blk.index, &closed);
            for a in blk.range() {
                err = err.max(rel_err(ric.get(a, a), want));
            }
        }
        off = off.max(ric.max_off_block(dec)).max(ric.max_in_block_deviation(dec));
    }
    Ok((err, off))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partitions_pass() {
        for parts in [vec![2, 1, 2], vec![2, 2, 2]] {
            let rep = verify_partition(&Partition::new(parts).unwrap(), 3, 42).unwrap();
            assert!(rep.passed, "{rep:#?}");
        }
    }

    #[test]
    fn shape_detection() {
        assert_eq!(symmetric_shape(&Partition::new(vec![3, 2, 2]).unwrap()), Some((3, 2, 3)));
        assert_eq!(symmetric_shape(&Partition::new(vec![3, 2, 1]).unwrap()), None);
        assert_eq!(symmetric_shape(&Partition::new(vec![3, 2]).unwrap()), None);
    }
}
