//! Ricci curvature of left-invariant metrics diagonal with respect to a
//! decomposition: a Koszul-formula oracle on the full basis, the module-wise
//! formula in terms of triple constants, and closed forms for the symmetric
//! six-parameter family.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{Field, Ring};
use crate::liealg::{bracket, center_basis, minus_killing_unchecked, Decomposition, ModuleIndex};
use crate::structconst::{StructureConstants, TripleTable};

/// Default relative tolerance between closed forms and the oracle.
pub const ORACLE_TOL: f64 = 1e-9;
/// Default relative tolerance for entries that must vanish.
pub const STRUCTURAL_ZERO_TOL: f64 = 1e-11;

/// Positive coefficient per module; the metric is `sum_m g_m (-B)|_m`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralMetric {
    coeffs: BTreeMap<ModuleIndex, f64>,
}

impl GeneralMetric {
    pub fn new(coeffs: BTreeMap<ModuleIndex, f64>) -> Result<Self> {
        if let Some((m, v)) = coeffs.iter().find(|(_, v)| !(**v > 0.0 && v.is_finite())) {
            return Err(Error::Domain(format!("coefficient {v} on {m} is not positive")));
        }
        Ok(GeneralMetric { coeffs })
    }

    /// All coefficients equal to one: the metric `-B`.
    pub fn bi_invariant(dec: &Decomposition) -> Self {
        GeneralMetric { coeffs: dec.module_indices().into_iter().map(|m| (m, 1.0)).collect() }
    }

    /// Metric of the symmetric family on a partition `(k_1, k, ..., k)`:
    /// `c_1 -> y1`, other centers `-> y2`, `m_1 -> x1`, other simple blocks
    /// `-> x2`, `m_1s -> x12`, remaining off-diagonal blocks `-> x23`.
    pub fn from_symmetric(dec: &Decomposition, m: &SymmetricMetric<f64>) -> Result<Self> {
        let coeffs = dec
            .module_indices()
            .into_iter()
            .map(|idx| {
                let v = match idx {
                    ModuleIndex::Center(1) => m.y1,
                    ModuleIndex::Center(_) => m.y2,
                    ModuleIndex::Simple(1) => m.x1,
                    ModuleIndex::Simple(_) => m.x2,
                    ModuleIndex::OffDiag(1, _) => m.x12,
                    ModuleIndex::OffDiag(_, _) => m.x23,
                };
                (idx, v)
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn get(&self, m: ModuleIndex) -> Option<f64> {
        self.coeffs.get(&m).copied()
    }

    pub fn set(&mut self, m: ModuleIndex, v: f64) -> Result<()> {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("coefficient {v} on {m} is not positive")));
        }
        self.coeffs.insert(m, v);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ModuleIndex, &f64)> {
        self.coeffs.iter()
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.values().copied().fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|(m, v)| (*m, v * c)).collect())
    }

    fn require(&self, m: ModuleIndex) -> Result<f64> {
        self.get(m).ok_or_else(|| Error::Domain(format!("metric has no coefficient for {m}")))
    }
}

/// The six coefficients of the symmetric family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricMetric<T = f64> {
    pub y1: T,
    pub y2: T,
    pub x1: T,
    pub x2: T,
    pub x12: T,
    pub x23: T,
}

impl<T: Ring + PartialOrd> SymmetricMetric<T> {
    pub fn new(y1: T, y2: T, x1: T, x2: T, x12: T, x23: T) -> Result<Self> {
        let m = SymmetricMetric { y1, y2, x1, x2, x12, x23 };
        if !m.is_positive() {
            return Err(Error::Domain("symmetric metric coefficients must be positive".into()));
        }
        Ok(m)
    }

    pub fn ones() -> Self {
        SymmetricMetric {
            y1: T::one_elem(),
            y2: T::one_elem(),
            x1: T::one_elem(),
            x2: T::one_elem(),
            x12: T::one_elem(),
            x23: T::one_elem(),
        }
    }

    pub fn is_positive(&self) -> bool {
        let z = T::zero_elem();
        [&self.y1, &self.y2, &self.x1, &self.x2, &self.x12, &self.x23].iter().all(|v| **v > z)
    }
}

impl<T> SymmetricMetric<T> {
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> SymmetricMetric<U> {
        SymmetricMetric {
            y1: f(&self.y1),
            y2: f(&self.y2),
            x1: f(&self.x1),
            x2: f(&self.x2),
            x12: f(&self.x12),
            x23: f(&self.x23),
        }
    }

    pub fn as_array(&self) -> [&T; 6] {
        [&self.y1, &self.y2, &self.x1, &self.x2, &self.x12, &self.x23]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RicciComponents<T = f64> {
    pub rr1: T,
    pub rr2: T,
    pub r1: T,
    pub r2: T,
    pub r12: T,
    pub r23: T,
}

impl<T> RicciComponents<T> {
    pub fn as_array(&self) -> [&T; 6] {
        [&self.rr1, &self.rr2, &self.r1, &self.r2, &self.r12, &self.r23]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> RicciComponents<U> {
        RicciComponents {
            rr1: f(&self.rr1),
            rr2: f(&self.rr2),
            r1: f(&self.r1),
            r2: f(&self.r2),
            r12: f(&self.r12),
            r23: f(&self.r23),
        }
    }
}

/// Closed-form Ricci components of the symmetric family on
/// `(k_1, k, ..., k)` with `p` blocks.
pub fn ricci_components_symmetric<T: Field + PartialOrd>(
    k1: u32,
    k: u32,
    p: u32,
    m: &SymmetricMetric<T>,
) -> Result<RicciComponents<T>> {
    if k1 < 2 || k < 2 || p < 3 {
        return Err(Error::Parameter(format!("need k1 >= 2, k >= 2, p >= 3; got ({k1},{k},{p})")));
    }
    if !m.is_positive() {
        return Err(Error::Domain("symmetric metric coefficients must be positive".into()));
    }
    let c = |v: i64| T::from_i64(v);
    let (k1i, ki, pi) = (k1 as i64, k as i64, p as i64);
    let n = c(k1i + (pi - 1) * ki);
    let (kt, k1t) = (c(ki), c(k1i));
    let SymmetricMetric { y1, y2, x1, x2, x12, x23 } = m.clone();
    let x12sq = x12.clone() * x12.clone();
    let x23sq = x23.clone() * x23.clone();
    let four_n = c(4) * n.clone();

    let rr1 = y1.clone() / (c(4) * x12sq.clone());
    let rr2 = k1t.clone() / four_n.clone() * y2.clone() / x12sq.clone()
        + c(ki * (pi - 1)) / four_n.clone() * y2.clone() / x23sq.clone();
    let r1 =
        k1t.clone() / (four_n.clone() * x1.clone()) + c(ki * (pi - 1)) / four_n.clone() * x1.clone() / x12sq.clone();
    let r2 = kt.clone() / (four_n.clone() * x2.clone())
        + k1t.clone() / four_n.clone() * x2.clone() / x12sq.clone()
        + c(ki * (pi - 2)) / four_n.clone() * x2.clone() / x23sq.clone();
    let r12 = c(1) / (c(2) * x12.clone())
        - c(ki * (pi - 2)) / four_n.clone() * x23.clone() / x12sq.clone()
        - c(1) / four_n.clone()
            * (c(k1i * k1i - 1) / k1t.clone() * x1.clone() / x12sq.clone()
                + c(ki * ki - 1) / kt.clone() * x2.clone() / x12sq.clone())
        - c(1) / c(4 * ki * k1i * (pi - 1))
            * (y1.clone() / x12sq.clone() + c(pi - 2) * k1t.clone() / n.clone() * y2.clone() / x12sq.clone());
    let r23 = c(1) / (c(2) * x23.clone())
        + k1t.clone() / four_n.clone() * (x23.clone() / x12sq.clone() - c(2) / x23.clone())
        - c((pi - 3) * ki) / (four_n.clone() * x23.clone())
        - c(ki * ki - 1) / (c(2 * ki) * n.clone()) * x2.clone() / x23sq.clone()
        - y2.clone() / (c(2 * ki) * n.clone() * x23sq.clone());
    Ok(RicciComponents { rr1, rr2, r1, r2, r12, r23 })
}

/// Module-wise Ricci scalars from the triple constants:
/// `r_k = 1/(2x_k) + 1/(4d_k) sum x_k/(x_i x_j)[k;ji] - 1/(2d_k) sum x_j/(x_k x_i)[j;ki]`.
pub fn ricci_diagonal_ps(
    dec: &Decomposition,
    triples: &TripleTable,
    g: &GeneralMetric,
) -> Result<BTreeMap<ModuleIndex, f64>> {
    let mods = dec.module_indices();
    for m in &mods {
        if !triples.modules().contains(m) {
            return Err(Error::IncompleteTable(format!("table does not cover {m}")));
        }
    }
    let xs: Vec<f64> = mods.iter().map(|m| g.require(*m)).collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (kk, mk) in mods.iter().enumerate() {
        let dk = dec.dim(*mk) as f64;
        let xk = xs[kk];
        let mut plus = 0.0;
        let mut minus = 0.0;
        for (i, mi) in mods.iter().enumerate() {
            for (j, mj) in mods.iter().enumerate() {
                plus += xk / (xs[j] * xs[i]) * triples.get(*mk, *mj, *mi)?;
                minus += xs[j] / (xk * xs[i]) * triples.get(*mj, *mk, *mi)?;
            }
        }
        out.insert(*mk, 1.0 / (2.0 * xk) + plus / (4.0 * dk) - minus / (2.0 * dk));
    }
    Ok(out)
}

/// Ricci tensor in the g-orthonormal basis `e_a / sqrt(g_a)`.
#[derive(Debug, Clone)]
pub struct RicciMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl RicciMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.data[a * self.dim + b]
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut m: f64 = 0.0;
        for a in 0..self.dim {
            for b in 0..a {
                m = m.max((self.get(a, b) - self.get(b, a)).abs());
            }
        }
        m
    }

    /// Mean diagonal entry per module.
    pub fn module_diagonal(&self, dec: &Decomposition) -> BTreeMap<ModuleIndex, f64> {
        dec.modules()
            .iter()
            .map(|m| {
                let s: f64 = m.range().map(|a| self.get(a, a)).sum();
                (m.index, s / m.dim() as f64)
            })
            .collect()
    }

    /// Largest entry coupling two different modules.
    pub fn max_off_block(&self, dec: &Decomposition) -> f64 {
        let mut m: f64 = 0.0;
        for a in 0..self.dim {
            for b in 0..self.dim {
                if dec.owner(a) != dec.owner(b) {
                    m = m.max(self.get(a, b).abs());
                }
            }
        }
        m
    }

    /// Largest deviation of a module block from a multiple of the identity.
    pub fn max_in_block_deviation(&self, dec: &Decomposition) -> f64 {
        let diag = self.module_diagonal(dec);
        let mut m: f64 = 0.0;
        for blk in dec.modules() {
            let r = diag[&blk.index];
            for a in blk.range() {
                for b in blk.range() {
                    let want = if a == b { r } else { 0.0 };
                    m = m.max((self.get(a, b) - want).abs());
                }
            }
        }
        m
    }

    /// `max |Ric(e_a, e_b) - λ δ_ab|` in the g-orthonormal basis; this equals
    /// `max |Ric - λ g|` in the `-B`-orthonormal basis divided by the metric.
    pub fn max_einstein_deviation(&self, lambda: f64) -> f64 {
        let mut m: f64 = 0.0;
        for a in 0..self.dim {
            for b in 0..self.dim {
                let want = if a == b { lambda } else { 0.0 };
                m = m.max((self.get(a, b) - want).abs());
            }
        }
        m
    }

    /// `max |Ric_B - λ g_B| / max g` with entries taken in the
    /// `-B`-orthonormal basis, where `Ric_B(a,b) = Ric(a,b) sqrt(g_a g_b)`.
    pub fn einstein_residual(&self, dec: &Decomposition, g: &GeneralMetric, lambda: f64) -> f64 {
        let xs: Vec<f64> = (0..self.dim).map(|a| g.get(dec.modules()[dec.owner(a)].index).unwrap_or(1.0)).collect();
        let mut m: f64 = 0.0;
        for a in 0..self.dim {
            for b in 0..self.dim {
                let ric = self.get(a, b) * (xs[a] * xs[b]).sqrt();
                let want = if a == b { lambda * xs[a] } else { 0.0 };
                m = m.max((ric - want).abs());
            }
        }
        m / g.max_coeff()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Koszul-formula Ricci tensor computed from the matrix structure constants.
pub fn ricci_oracle(dec: &Decomposition, g: &GeneralMetric) -> Result<RicciMatrix> {
    ricci_oracle_with(dec, &StructureConstants::compute(dec), g)
}

/// As [`ricci_oracle`], reusing precomputed structure constants.
pub fn ricci_oracle_with(dec: &Decomposition, sc: &StructureConstants, g: &GeneralMetric) -> Result<RicciMatrix> {
    let d = dec.total_dim();
    if sc.dim() != d {
        return Err(Error::Dimension { expected: d, found: sc.dim() });
    }
    let mut xs = vec![0.0; d];
    for blk in dec.modules() {
        let v = g.require(blk.index)?;
        if v.is_nan() || v <= 0.0 {
            return Err(Error::Domain(format!("coefficient {v} on {} is not positive", blk.index)));
        }
        for a in blk.range() {
            xs[a] = v;
        }
    }
    let sq: Vec<f64> = xs.iter().map(|v| v.sqrt()).collect();
    let idx = |a: usize, b: usize, c: usize| (a * d + b) * d + c;
    // C_abc = <[e_a, e_b], e_c> in the g-orthonormal basis
    let mut cc = vec![0.0; d * d * d];
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let v = sc.get(a, b, c);
                if v != 0.0 {
                    cc[idx(a, b, c)] = v * xs[c] / (sq[a] * sq[b] * sq[c]);
                }
            }
        }
    }
    // Γ_ab^c with ∇_{e_a} e_b = Σ_c Γ_ab^c e_c
    let mut gam = vec![0.0; d * d * d];
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                gam[idx(a, b, c)] = 0.5 * (cc[idx(a, b, c)] - cc[idx(b, c, a)] + cc[idx(c, a, b)]);
            }
        }
    }
    // Ric(b,c) = Σ_{a,e} Γ_bc^e Γ_ae^a - Γ_ac^e Γ_be^a - C_abe Γ_ec^a
    let trace: Vec<f64> = (0..d).map(|e| (0..d).map(|a| gam[idx(a, e, a)]).sum()).collect();
    let flat = |f: &dyn Fn(usize, usize, usize) -> f64| -> Vec<Vec<f64>> {
        (0..d)
            .map(|i| {
                let mut v = Vec::with_capacity(d * d);
                for a in 0..d {
                    for e in 0..d {
                        v.push(f(i, a, e));
                    }
                }
                v
            })
            .collect()
    };
    let u = flat(&|c, a, e| gam[idx(a, c, e)]);
    let v = flat(&|b, a, e| gam[idx(b, e, a)]);
    let w = flat(&|b, a, e| cc[idx(a, b, e)]);
    let z = flat(&|c, a, e| gam[idx(e, c, a)]);
    let rows: Vec<Vec<f64>> = (0..d)
        .into_par_iter()
        .map(|b| {
            (0..d)
                .map(|c| {
                    let t1: f64 = (0..d).map(|e| gam[idx(b, c, e)] * trace[e]).sum();
                    t1 - dot(&u[c], &v[b]) - dot(&w[b], &z[c])
                })
                .collect()
        })
        .collect();
    Ok(RicciMatrix { dim: d, data: rows.concat() })
}

/// `r(H_i, H_j)` for the unnormalized center elements, `i < j`, as the sum over
/// Weyl pairs of all off-diagonal modules.
pub fn ricci_center_offdiag(dec: &Decomposition, g: &GeneralMetric, i: usize, j: usize) -> Result<f64> {
    let p = dec.partition().p();
    if !(1 <= i && i < j && j < p) {
        return Err(Error::Index(format!("need 1 <= i < j <= p-1, got ({i},{j})")));
    }
    let (hs, _) = center_basis(dec.partition());
    let yi = g.require(ModuleIndex::Center(i))?;
    let yj = g.require(ModuleIndex::Center(j))?;
    let mut total = 0.0;
    for blk in dec.modules() {
        let ModuleIndex::OffDiag(_, _) = blk.index else { continue };
        let x = g.require(blk.index)?;
        let half = blk.dim() / 2;
        let mut s = 0.0;
        for t in 0..half {
            let (xe, ye) = (&blk.basis[t], &blk.basis[t + half]);
            let hix = bracket(&hs[i - 1], xe)?;
            let hjx = bracket(&hs[j - 1], xe)?;
            let hiy = bracket(&hs[i - 1], ye)?;
            let hjy = bracket(&hs[j - 1], ye)?;
            s += minus_killing_unchecked(ye, &hix) * minus_killing_unchecked(ye, &hjx)
                + minus_killing_unchecked(xe, &hiy) * minus_killing_unchecked(xe, &hjy);
        }
        total += s / (x * x);
    }
    Ok(yi * yj / 4.0 * total)
}

/// Converts an oracle entry between normalized center vectors into the value
/// of the Ricci tensor on the unnormalized `H_i, H_j`.
pub fn center_entry_from_oracle(
    dec: &Decomposition,
    ric: &RicciMatrix,
    g: &GeneralMetric,
    i: usize,
    j: usize,
) -> Result<f64> {
    let bi = dec.module(ModuleIndex::Center(i))?.offset;
    let bj = dec.module(ModuleIndex::Center(j))?.offset;
    let a = dec.center_normalizers();
    let yi = g.require(ModuleIndex::Center(i))?;
    let yj = g.require(ModuleIndex::Center(j))?;
    Ok(ric.get(bi, bj) * (yi * yj).sqrt() / (a[i - 1] * a[j - 1]))
}

/// Per-module oracle diagonal arranged as the six symmetric components.
pub fn symmetric_components_from_diagonal(diag: &BTreeMap<ModuleIndex, f64>) -> Result<RicciComponents<f64>> {
    let get = |m: ModuleIndex| diag.get(&m).copied().ok_or_else(|| Error::IncompleteTable(format!("no value for {m}")));
    Ok(RicciComponents {
        rr1: get(ModuleIndex::Center(1))?,
        rr2: get(ModuleIndex::Center(2))?,
        r1: get(ModuleIndex::Simple(1))?,
        r2: get(ModuleIndex::Simple(2))?,
        r12: get(ModuleIndex::OffDiag(1, 2))?,
        r23: get(ModuleIndex::OffDiag(2, 3))?,
    })
}

/// Expected component for each module of a symmetric-family decomposition.
pub fn symmetric_component_of(m: ModuleIndex, r: &RicciComponents<f64>) -> f64 {
    match m {
        ModuleIndex::Center(1) => r.rr1,
        ModuleIndex::Center(_) => r.rr2,
        ModuleIndex::Simple(1) => r.r1,
        ModuleIndex::Simple(_) => r.r2,
        ModuleIndex::OffDiag(1, _) => r.r12,
        ModuleIndex::OffDiag(_, _) => r.r23,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, BigRational};
    use crate::liealg::{build_decomposition, Partition};

    fn dec(v: &[usize]) -> Decomposition {
        build_decomposition(&Partition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn bi_invariant_oracle_is_quarter_identity() {
        let d = dec(&[2, 1, 2]);
        let ric = ricci_oracle(&d, &GeneralMetric::bi_invariant(&d)).unwrap();
        assert!(ric.max_einstein_deviation(0.25) < 1e-12);
    }

    #[test]
    fn bi_invariant_closed_forms_are_quarter() {
        for (k1, k, p) in [(2, 2, 3), (3, 2, 4), (5, 3, 3)] {
            let r = ricci_components_symmetric(k1, k, p, &SymmetricMetric::<BigRational>::ones()).unwrap();
            for v in r.as_array() {
                assert_eq!(*v, BigRational::new(1.into(), 4.into()));
            }
        }
    }

    #[test]
    fn rr1_example() {
        let one = int(1);
        let m = SymmetricMetric::new(one.clone(), one.clone(), one.clone(), one.clone(), int(2), one).unwrap();
        let r = ricci_components_symmetric(2, 2, 3, &m).unwrap();
        assert_eq!(r.rr1, BigRational::new(1.into(), 16.into()));
        assert!(ricci_components_symmetric(1, 2, 3, &m).is_err());
    }

    #[test]
    fn closed_forms_match_oracle_on_322() {
        let d = dec(&[3, 2, 2]);
        let m = SymmetricMetric::new(1.3, 0.7, 2.1, 0.9, 1.7, 1.1).unwrap();
        let g = GeneralMetric::from_symmetric(&d, &m).unwrap();
        let ric = ricci_oracle(&d, &g).unwrap();
        let diag = ric.module_diagonal(&d);
        let cf = ricci_components_symmetric(3, 2, 3, &m).unwrap();
        for (mi, v) in &diag {
            let want = symmetric_component_of(*mi, &cf);
            assert!((v - want).abs() < 1e-10, "{mi}: {v} vs {want}");
        }
        assert!(ric.max_off_block(&d) < 1e-11);
        let table = TripleTable::compute(&d);
        let ps = ricci_diagonal_ps(&d, &table, &g).unwrap();
        for (mi, v) in &ps {
            assert!((v - diag[mi]).abs() < 1e-10);
        }
    }

    #[test]
    fn center_offdiag_agrees_with_oracle() {
        let d = dec(&[2, 2, 2]);
        let mut g = GeneralMetric::bi_invariant(&d);
        g.set(ModuleIndex::OffDiag(1, 2), 1.5).unwrap();
        g.set(ModuleIndex::Center(1), 0.8).unwrap();
        let ric = ricci_oracle(&d, &g).unwrap();
        let closed = ricci_center_offdiag(&d, &g, 1, 2).unwrap();
        let oracle = center_entry_from_oracle(&d, &ric, &g, 1, 2).unwrap();
        assert!(closed.abs() > 1e-6);
        assert!((closed - oracle).abs() < 1e-10, "{closed} vs {oracle}");
        assert!(ricci_center_offdiag(&d, &g, 2, 2).is_err());
    }

    #[test]
    fn nonpositive_metric_rejected() {
        let mut c = BTreeMap::new();
        c.insert(ModuleIndex::Center(1), 0.0);
        assert!(GeneralMetric::new(c).is_err());
    }
}
