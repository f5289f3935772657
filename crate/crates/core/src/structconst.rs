//! Triple structure constants `[k;ij] = sum (A^γ_{αβ})^2` with
//! `A^γ_{αβ} = -B([e_α, e_β], e_γ)`, computed from matrices and from closed forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::ser_rational;
use crate::liealg::{
    bracket, center_basis, minus_killing_unchecked, weyl_pair, Decomposition, ModuleIndex, Partition, SuElement,
};

pub const DEFAULT_SEED: u64 = 42;

/// Tolerance for projections that must vanish.
pub const ZERO_TOL: f64 = 1e-11;

type Sparse = Vec<(usize, usize, Complex64)>;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Modules that can carry a component of `[a, b]`.
pub fn bracket_support(dec: &Decomposition, a: ModuleIndex, b: ModuleIndex) -> Vec<ModuleIndex> {
    use ModuleIndex::*;
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let out = match (a, b) {
        (Center(_), OffDiag(r, s)) => vec![OffDiag(r, s)],
        (Simple(i), Simple(j)) if i == j => vec![Simple(i)],
        (Simple(i), OffDiag(r, s)) if i == r || i == s => vec![OffDiag(r, s)],
        (OffDiag(r, s), OffDiag(t, u)) => {
            if (r, s) == (t, u) {
                let mut v: Vec<ModuleIndex> = (1..dec.partition().p()).map(Center).collect();
                v.push(Simple(r));
                v.push(Simple(s));
                v
            } else {
                let mut idx = [r, s, t, u];
                idx.sort_unstable();
                match idx {
                    [x, y, z, w] if y == z && x != y && z != w => vec![ModuleIndex::off_diag(x, w)],
                    [x, y, z, w] if x == y && y != z && z != w => vec![ModuleIndex::off_diag(z, w)],
                    [x, y, z, w] if z == w && x != y && y != z => vec![ModuleIndex::off_diag(x, y)],
                    _ => vec![],
                }
            }
        }
        _ => vec![],
    };
    out.into_iter().filter(|m| dec.position(*m).is_some()).collect()
}

fn sparse_bracket(n: usize, x: &Sparse, y: &Sparse, out: &mut [Complex64]) {
    out.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
    for &(a, c, u) in x {
        for &(c2, b, v) in y {
            if c == c2 {
                out[a * n + b] += u * v;
            }
        }
    }
    for &(a, c, u) in y {
        for &(c2, b, v) in x {
            if c == c2 {
                out[a * n + b] -= u * v;
            }
        }
    }
}

/// `-B(M, e) = -2N Re tr(M e)` for sparse `e`.
fn coefficient(n: usize, m: &[Complex64], e: &Sparse) -> f64 {
    let mut acc = 0.0;
    for &(i, j, v) in e {
        acc += (m[j * n + i] * v).re;
    }
    -2.0 * n as f64 * acc
}

/// Dense table of `A^γ_{αβ}` over the flat basis of a decomposition.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    dim: usize,
    data: Vec<f64>,
}

impl StructureConstants {
    /// Only targets allowed by [`bracket_support`] are evaluated; the remaining
    /// coefficients are structurally zero.
    pub fn compute(dec: &Decomposition) -> Self {
        let n = dec.n();
        let d = dec.total_dim();
        let sparse: Vec<Sparse> = dec.flat_basis().iter().map(|e| e.sparse()).collect();
        let modules = dec.modules();
        let support: Vec<Vec<Vec<std::ops::Range<usize>>>> = modules
            .iter()
            .map(|ma| {
                modules
                    .iter()
                    .map(|mb| {
                        bracket_support(dec, ma.index, mb.index)
                            .into_iter()
                            .map(|m| dec.module(m).expect("present").range())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let rows: Vec<Vec<f64>> = (0..d)
            .into_par_iter()
            .map(|alpha| {
                let mut row = vec![0.0; d * d];
                let mut buf = vec![Complex64::new(0.0, 0.0); n * n];
                let ma = dec.owner(alpha);
                for beta in 0..d {
                    if beta == alpha {
                        continue;
                    }
                    let targets = &support[ma][dec.owner(beta)];
                    if targets.is_empty() {
                        continue;
                    }
                    sparse_bracket(n, &sparse[alpha], &sparse[beta], &mut buf);
                    for range in targets {
                        for gamma in range.clone() {
                            row[beta * d + gamma] = coefficient(n, &buf, &sparse[gamma]);
                        }
                    }
                }
                row
            })
            .collect();
        StructureConstants { dim: d, data: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `A^γ_{αβ}`.
    #[inline]
    pub fn get(&self, alpha: usize, beta: usize, gamma: usize) -> f64 {
        self.data[(alpha * self.dim + beta) * self.dim + gamma]
    }
}

/// Triple constants keyed by `(c; a, b)` with `a <= b`.
#[derive(Debug, Clone, Serialize)]
pub struct TripleTable {
    #[serde(skip)]
    modules: Vec<ModuleIndex>,
    #[serde(serialize_with = "serialize_entries")]
    entries: BTreeMap<(ModuleIndex, ModuleIndex, ModuleIndex), f64>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(ModuleIndex, ModuleIndex, ModuleIndex), f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(entries.iter().map(|((c, a, b), v)| (format!("[{c};{a} {b}]"), *v)))
}

impl TripleTable {
    pub fn from_constants(dec: &Decomposition, sc: &StructureConstants) -> Self {
        let mods = dec.modules();
        let m = mods.len();
        let d = dec.total_dim();
        let mut acc = vec![0.0; m * m * m];
        for alpha in 0..d {
            let ma = dec.owner(alpha);
            for beta in 0..d {
                let mb = dec.owner(beta);
                for gamma in 0..d {
                    let v = sc.get(alpha, beta, gamma);
                    if v != 0.0 {
                        acc[(dec.owner(gamma) * m + ma) * m + mb] += v * v;
                    }
                }
            }
        }
        let mut entries = BTreeMap::new();
        for c in 0..m {
            for a in 0..m {
                for b in a..m {
                    entries.insert((mods[c].index, mods[a].index, mods[b].index), acc[(c * m + a) * m + b]);
                }
            }
        }
        TripleTable { modules: dec.module_indices(), entries }
    }

    pub fn compute(dec: &Decomposition) -> Self {
        Self::from_constants(dec, &StructureConstants::compute(dec))
    }

    pub fn modules(&self) -> &[ModuleIndex] {
        &self.modules
    }

    /// `[c; a b]`.
    pub fn get(&self, c: ModuleIndex, a: ModuleIndex, b: ModuleIndex) -> Result<f64> {
        let key = if a <= b { (c, a, b) } else { (c, b, a) };
        self.entries.get(&key).copied().ok_or_else(|| Error::IncompleteTable(format!("no entry for [{c};{a} {b}]")))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(ModuleIndex, ModuleIndex, ModuleIndex), &f64)> {
        self.entries.iter()
    }
}

/// `[c; a b]` by explicit brackets and full projection onto `c`.
pub fn triple_brute(dec: &Decomposition, c: ModuleIndex, a: ModuleIndex, b: ModuleIndex) -> f64 {
    let (Ok(mc), Ok(ma), Ok(mb)) = (dec.module(c), dec.module(a), dec.module(b)) else {
        return 0.0;
    };
    let mut total = 0.0;
    for x in &ma.basis {
        for y in &mb.basis {
            let z = bracket(x, y).expect("same algebra");
            for e in &mc.basis {
                let v = minus_killing_unchecked(&z, e);
                total += v * v;
            }
        }
    }
    total
}

/// `[m_rs; c_i m_rs]` in closed form, `r < s`.
pub fn triple_center_closed(partition: &Partition, i: usize, r: usize, s: usize) -> Result<BigRational> {
    let p = partition.p();
    if !(1..p).contains(&i) || !(r >= 1 && r < s && s <= p) {
        return Err(Error::Index(format!("center {i}, block pair ({r},{s}) out of range for {partition}")));
    }
    let n = partition.n() as i64;
    let k = |j: usize| partition.k(j) as i64;
    let big_k = |j: usize| partition.partial_sum(j) as i64;
    let v = if s < i || r > i {
        BigRational::zero()
    } else if r < i && s == i {
        rat(k(r) * (n - big_k(i)), n * (n - big_k(i - 1)))
    } else if r < i {
        rat(k(i) * k(r) * k(s), n * (n - big_k(i - 1)) * (n - big_k(i)))
    } else {
        rat(k(s) * (n - big_k(i - 1)), n * (n - big_k(i)))
    };
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TripleKind {
    /// `[m_rs; m_rt m_ts]`, distinct blocks.
    Rst { r: usize, s: usize, t: usize },
    /// `[m_ij; m_i m_ij]`, `i != j`.
    SimpleOffDiag { i: usize, j: usize },
    /// `[m_i; m_i m_i]`.
    SimpleSimple { i: usize },
}

impl TripleKind {
    /// The module triple `(c, a, b)` this closed form describes.
    pub fn modules(&self) -> (ModuleIndex, ModuleIndex, ModuleIndex) {
        match *self {
            TripleKind::Rst { r, s, t } => {
                (ModuleIndex::off_diag(r, s), ModuleIndex::off_diag(r, t), ModuleIndex::off_diag(t, s))
            }
            TripleKind::SimpleOffDiag { i, j } => {
                (ModuleIndex::off_diag(i, j), ModuleIndex::Simple(i), ModuleIndex::off_diag(i, j))
            }
            TripleKind::SimpleSimple { i } => (ModuleIndex::Simple(i), ModuleIndex::Simple(i), ModuleIndex::Simple(i)),
        }
    }

    /// Every instance of the three kinds for a partition.
    pub fn all(partition: &Partition) -> Vec<TripleKind> {
        let p = partition.p();
        let mut out = Vec::new();
        for r in 1..=p {
            for s in 1..=p {
                for t in 1..=p {
                    if r < s && t != r && t != s {
                        out.push(TripleKind::Rst { r, s, t });
                    }
                }
            }
        }
        for i in 1..=p {
            for j in 1..=p {
                if i != j {
                    out.push(TripleKind::SimpleOffDiag { i, j });
                }
            }
            out.push(TripleKind::SimpleSimple { i });
        }
        out
    }
}

pub fn triple_generic_closed(partition: &Partition, kind: TripleKind) -> Result<BigRational> {
    let p = partition.p();
    let in_range = |j: usize| (1..=p).contains(&j);
    let n = partition.n() as i64;
    let k = |j: usize| partition.k(j) as i64;
    match kind {
        TripleKind::Rst { r, s, t } => {
            if !(in_range(r) && in_range(s) && in_range(t)) || r == s || s == t || r == t {
                return Err(Error::InvalidKind(format!("{kind:?} needs three distinct blocks")));
            }
            Ok(rat(k(r) * k(s) * k(t), n))
        }
        TripleKind::SimpleOffDiag { i, j } => {
            if !(in_range(i) && in_range(j)) || i == j {
                return Err(Error::InvalidKind(format!("{kind:?} needs two distinct blocks")));
            }
            Ok(rat(k(j) * (k(i) * k(i) - 1), n))
        }
        TripleKind::SimpleSimple { i } => {
            if !in_range(i) {
                return Err(Error::InvalidKind(format!("{kind:?} out of range")));
            }
            Ok(rat(k(i) * (k(i) * k(i) - 1), n))
        }
    }
}

/// Closed form of `[c; a b]` for any three modules, using the full symmetry
/// of the triple constants; triples outside the nonzero patterns are zero.
pub fn triple_closed(partition: &Partition, c: ModuleIndex, a: ModuleIndex, b: ModuleIndex) -> Result<BigRational> {
    use ModuleIndex::*;
    for m in [c, a, b] {
        m.validate(partition)?;
    }
    let mut t = [c, a, b];
    t.sort();
    let n = partition.n() as i64;
    let k = |i: usize| partition.k(i) as i64;
    Ok(match t {
        [Center(i), OffDiag(r, s), OffDiag(r2, s2)] if (r, s) == (r2, s2) => triple_center_closed(partition, i, r, s)?,
        [Simple(i), Simple(j), Simple(l)] if i == j && j == l => rat(k(i) * (k(i) * k(i) - 1), n),
        [Simple(i), OffDiag(r, s), OffDiag(r2, s2)] if (r, s) == (r2, s2) && (i == r || i == s) => {
            let j = if i == r { s } else { r };
            rat(k(j) * (k(i) * k(i) - 1), n)
        }
        [OffDiag(r1, s1), OffDiag(r2, s2), OffDiag(r3, s3)] => {
            let mut idx = vec![r1, s1, r2, s2, r3, s3];
            idx.sort();
            idx.dedup();
            let triangle = idx.len() == 3
                && [(r1, s1), (r2, s2), (r3, s3)].iter().all(|&(r, s)| r != s)
                && (r1, s1) != (r2, s2)
                && (r2, s2) != (r3, s3)
                && (r1, s1) != (r3, s3);
            if triangle {
                rat(k(idx[0]) * k(idx[1]) * k(idx[2]), n)
            } else {
                BigRational::zero()
            }
        }
        _ => BigRational::zero(),
    })
}

/// Aggregate center sums for `k_2 = ... = k_p = k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripleSums {
    /// `[m_1s; c_1 m_1s] = 1/(p-1)` for `s >= 2`.
    #[serde(serialize_with = "ser_rational")]
    pub first_row_c1: BigRational,
    /// `sum_{i>=2} [m_1s; c_i m_1s] = (p-2)k_1/((p-1)N)`.
    #[serde(serialize_with = "ser_rational")]
    pub first_row_tail_centers: BigRational,
    /// `sum_i [m_rs; c_i m_rs] = 2k/N` for `2 <= r < s`.
    #[serde(serialize_with = "ser_rational")]
    pub tail_all_centers: BigRational,
    /// `sum_{s>=2} [m_1s; c_t m_1s] = k_1/N` for `t >= 2`.
    #[serde(serialize_with = "ser_rational")]
    pub first_row_fixed_center: BigRational,
    /// `sum_{2<=r<s} [m_rs; c_t m_rs] = (p-1)k/N` for `t >= 2`.
    #[serde(serialize_with = "ser_rational")]
    pub tail_fixed_center: BigRational,
    /// The competing value `(p-2)k/N` for the previous sum.
    #[serde(serialize_with = "ser_rational")]
    pub tail_fixed_center_alt: BigRational,
}

pub fn triple_sums_closed(partition: &Partition) -> Result<TripleSums> {
    if !partition.equal_tail() {
        return Err(Error::UnsupportedShape(format!("{partition} has unequal tail blocks")));
    }
    let p = partition.p() as i64;
    let n = partition.n() as i64;
    let k1 = partition.k(1) as i64;
    let k = partition.k(2) as i64;
    Ok(TripleSums {
        first_row_c1: rat(1, p - 1),
        first_row_tail_centers: rat((p - 2) * k1, (p - 1) * n),
        tail_all_centers: rat(2 * k, n),
        first_row_fixed_center: rat(k1, n),
        tail_fixed_center: rat((p - 1) * k, n),
        tail_fixed_center_alt: rat((p - 2) * k, n),
    })
}

/// Brute-force value of `sum_{2<=r<s} [m_rs; c_t m_rs]` compared against both
/// candidate closed forms.
#[derive(Debug, Clone, Serialize)]
pub struct TailSumCheck {
    pub t: usize,
    pub brute: f64,
    pub statement_value: f64,
    pub alternative_value: f64,
    pub matches_statement: bool,
    pub matches_alternative: bool,
}

pub fn check_tail_fixed_center(dec: &Decomposition, table: &TripleTable) -> Result<Vec<TailSumCheck>> {
    let part = dec.partition();
    let sums = triple_sums_closed(part)?;
    let p = part.p();
    let stmt = sums.tail_fixed_center.to_f64().unwrap_or(f64::NAN);
    let alt = sums.tail_fixed_center_alt.to_f64().unwrap_or(f64::NAN);
    let mut out = Vec::new();
    for t in 2..p {
        let mut brute = 0.0;
        for r in 2..=p {
            for s in r + 1..=p {
                let m = ModuleIndex::OffDiag(r, s);
                brute += table.get(m, ModuleIndex::Center(t), m)?;
            }
        }
        out.push(TailSumCheck {
            t,
            brute,
            statement_value: stmt,
            alternative_value: alt,
            matches_statement: (brute - stmt).abs() <= 1e-10,
            matches_alternative: (brute - alt).abs() <= 1e-10,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CenterActionReport {
    pub checked: usize,
    pub max_deviation: f64,
    pub violations: Vec<String>,
}

impl CenterActionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Expected `c` with `[H_j, X] = c Y` and `[H_j, Y] = -c X` for the Weyl pair of `m_rs`.
pub fn center_action_coefficient(partition: &Partition, j: usize, r: usize, s: usize) -> f64 {
    let n = partition.n();
    let kj = partition.k(j) as f64;
    let rest = (n - partition.partial_sum(j)) as f64;
    if r == j {
        1.0 / kj + 1.0 / rest
    } else if r < j && s == j {
        -1.0 / kj
    } else if r < j && s > j {
        1.0 / rest
    } else {
        0.0
    }
}

pub fn check_center_action(dec: &Decomposition) -> CenterActionReport {
    let part = dec.partition();
    let n = part.n();
    let p = part.p();
    let (hs, _) = center_basis(part);
    let mut rep = CenterActionReport::default();
    for (jm1, h) in hs.iter().enumerate() {
        let j = jm1 + 1;
        for r in 1..=p {
            for s in r + 1..=p {
                let c = center_action_coefficient(part, j, r, s);
                for alpha in 0..part.k(r) {
                    for beta in 0..part.k(s) {
                        let (a, b) = (part.block_start(r) + alpha, part.block_start(s) + beta);
                        let (x, y) = weyl_pair(n, a, b);
                        let hx = bracket(h, &x).expect("same algebra");
                        let hy = bracket(h, &y).expect("same algebra");
                        let dx = hx.sub(&y.scaled(c)).expect("same algebra").max_abs();
                        let dy = hy.add(&x.scaled(c)).expect("same algebra").max_abs();
                        let dev = dx.max(dy);
                        rep.checked += 1;
                        rep.max_deviation = rep.max_deviation.max(dev);
                        if dev > 1e-12 {
                            rep.violations.push(format!("H_{j} on m{r}{s} ({alpha},{beta}): deviation {dev:e}"));
                        }
                    }
                }
            }
        }
    }
    rep
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BracketReport {
    pub pairs: usize,
    pub samples: usize,
    pub max_leak: f64,
    pub violations: Vec<String>,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn random_unit(rng: &mut ChaCha8Rng, basis: &[SuElement]) -> SuElement {
    let mut x = SuElement::zeros(basis[0].n());
    for e in basis {
        x.axpy(rng.random_range(-1.0..1.0), e);
    }
    let nrm = x.norm();
    if nrm > 0.0 {
        x.scaled(1.0 / nrm)
    } else {
        basis[0].clone()
    }
}

/// Draws `trials` random unit pairs from every module pair and measures the
/// bracket's components outside the allowed modules.
pub fn check_bracket_relations(dec: &Decomposition, trials: usize, seed: u64) -> BracketReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mods = dec.modules();
    let mut rep = BracketReport::default();
    for (ia, ma) in mods.iter().enumerate() {
        for mb in &mods[ia..] {
            rep.pairs += 1;
            let allowed = bracket_support(dec, ma.index, mb.index);
            for _ in 0..trials {
                let x = random_unit(&mut rng, &ma.basis);
                let y = random_unit(&mut rng, &mb.basis);
                let z = bracket(&x, &y).expect("same algebra");
                rep.samples += 1;
                for mc in mods {
                    if allowed.contains(&mc.index) {
                        continue;
                    }
                    let leak = mc.basis.iter().map(|e| minus_killing_unchecked(&z, e).powi(2)).sum::<f64>().sqrt();
                    rep.max_leak = rep.max_leak.max(leak);
                    if leak > ZERO_TOL {
                        rep.violations
                            .push(format!("[{}, {}] has component {leak:e} on {}", ma.index, mb.index, mc.index));
                    }
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_decomposition;
    use ModuleIndex::*;

    fn dec(v: &[usize]) -> Decomposition {
        build_decomposition(&Partition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn brute_examples_222() {
        let d = dec(&[2, 2, 2]);
        assert!((triple_brute(&d, Simple(1), Simple(1), Simple(1)) - 1.0).abs() < 1e-10);
        let v = triple_brute(&d, OffDiag(1, 2), OffDiag(1, 3), OffDiag(2, 3));
        assert!((v - 4.0 / 3.0).abs() < 1e-10);
        assert!(triple_brute(&d, OffDiag(1, 2), Center(1), Simple(1)).abs() < 1e-14);
    }

    #[test]
    fn generic_closed_forms_322() {
        let pt = Partition::new(vec![3, 2, 2]).unwrap();
        assert_eq!(triple_generic_closed(&pt, TripleKind::Rst { r: 1, s: 2, t: 3 }).unwrap(), rat(12, 7));
        assert_eq!(triple_generic_closed(&pt, TripleKind::SimpleOffDiag { i: 1, j: 2 }).unwrap(), rat(16, 7));
        let pt = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(triple_generic_closed(&pt, TripleKind::SimpleSimple { i: 1 }).unwrap(), rat(1, 1));
        assert!(triple_generic_closed(&pt, TripleKind::Rst { r: 1, s: 1, t: 2 }).is_err());
    }

    #[test]
    fn center_closed_examples() {
        let pt = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(triple_center_closed(&pt, 2, 1, 2).unwrap(), rat(1, 6));
        assert_eq!(triple_center_closed(&pt, 1, 2, 3).unwrap(), rat(0, 1));
        assert!(triple_center_closed(&pt, 3, 1, 2).is_err());
        let pt = Partition::new(vec![5, 3, 3]).unwrap();
        for s in 2..=3 {
            assert_eq!(triple_center_closed(&pt, 1, 1, s).unwrap(), rat(1, 2));
        }
    }

    #[test]
    fn sums_examples() {
        let s = triple_sums_closed(&Partition::new(vec![3, 2, 2]).unwrap()).unwrap();
        assert_eq!(s.first_row_tail_centers, rat(3, 14));
        let s = triple_sums_closed(&Partition::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(s.first_row_fixed_center, rat(1, 3));
        assert!(triple_sums_closed(&Partition::new(vec![2, 3, 2]).unwrap()).is_err());
    }

    #[test]
    fn table_matches_brute_on_all_triples() {
        let d = dec(&[2, 1, 2]);
        let t = TripleTable::compute(&d);
        for c in d.module_indices() {
            for a in d.module_indices() {
                for b in d.module_indices() {
                    let got = t.get(c, a, b).unwrap();
                    let want = triple_brute(&d, c, a, b);
                    assert!((got - want).abs() < 1e-10, "[{c};{a} {b}] {got} vs {want}");
                }
            }
        }
    }

    #[test]
    fn center_action_and_brackets_hold() {
        for v in [vec![2, 2, 2], vec![1, 2, 3], vec![2, 1, 1, 2]] {
            let d = dec(&v);
            let rep = check_center_action(&d);
            assert!(rep.passed(), "{:?}", rep.violations);
            let rep = check_bracket_relations(&d, 3, DEFAULT_SEED);
            assert!(rep.passed(), "{:?}", rep.violations);
        }
    }

    #[test]
    fn center_action_coefficients() {
        let pt = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(center_action_coefficient(&pt, 1, 1, 2), 0.75);
        assert_eq!(center_action_coefficient(&pt, 2, 1, 2), -0.5);
        assert_eq!(center_action_coefficient(&pt, 1, 2, 3), 0.0);
    }

    #[test]
    fn support_table() {
        let d = dec(&[2, 2, 2, 2]);
        assert!(bracket_support(&d, OffDiag(1, 2), OffDiag(3, 4)).is_empty());
        assert_eq!(bracket_support(&d, OffDiag(1, 2), OffDiag(2, 4)), vec![OffDiag(1, 4)]);
        assert_eq!(bracket_support(&d, OffDiag(1, 3), OffDiag(2, 3)), vec![OffDiag(1, 2)]);
        assert_eq!(bracket_support(&d, Simple(1), OffDiag(1, 2)), vec![OffDiag(1, 2)]);
        assert_eq!(
            bracket_support(&d, OffDiag(1, 2), OffDiag(1, 2)),
            vec![Center(1), Center(2), Center(3), Simple(1), Simple(2)]
        );
    }

    #[test]
    fn tail_sum_statement_value_holds() {
        let d = dec(&[2, 2, 2, 2]);
        let t = TripleTable::compute(&d);
        for c in check_tail_fixed_center(&d, &t).unwrap() {
            assert!(c.matches_statement && !c.matches_alternative, "{c:?}");
        }
    }
}
