//! su(N), its Killing form and the module decomposition over a flag manifold
//! `SU(N)/S(U(k_1) x ... x U(k_p))`.

use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute tolerance for matrix-level invariants on unit-normalized operands.
pub const MATRIX_TOL: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::DegeneratePartition(format!("need at least two blocks, got {}", parts.len())));
        }
        if parts.contains(&0) {
            return Err(Error::DegeneratePartition("block sizes must be positive".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn p(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `k_i`, 1-based.
    pub fn k(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// `K_j = k_1 + ... + k_j`, with `K_0 = 0`.
    pub fn partial_sum(&self, j: usize) -> usize {
        self.parts[..j].iter().sum()
    }

    /// Row offset of block `i` (1-based).
    pub fn block_start(&self, i: usize) -> usize {
        self.partial_sum(i - 1)
    }

    /// True when `k_2 = ... = k_p`.
    pub fn equal_tail(&self) -> bool {
        self.parts[1..].windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A summand of the decomposition. Indices are 1-based. The derived order is
/// the basis order: centers, then simple blocks, then off-diagonal blocks
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleIndex {
    Center(usize),
    Simple(usize),
    OffDiag(usize, usize),
}

impl ModuleIndex {
    /// Off-diagonal module with the indices put in order.
    pub fn off_diag(r: usize, s: usize) -> ModuleIndex {
        ModuleIndex::OffDiag(r.min(s), r.max(s))
    }

    pub fn is_center(&self) -> bool {
        matches!(self, ModuleIndex::Center(_))
    }

    pub fn validate(&self, partition: &Partition) -> Result<()> {
        let p = partition.p();
        let ok = match *self {
            ModuleIndex::Center(j) => (1..p).contains(&j),
            ModuleIndex::Simple(i) => (1..=p).contains(&i),
            ModuleIndex::OffDiag(r, s) => r >= 1 && r < s && s <= p,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Index(format!("{self} is not a module for partition {partition}")))
        }
    }
}

impl fmt::Display for ModuleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModuleIndex::Center(j) => write!(f, "c{j}"),
            ModuleIndex::Simple(i) => write!(f, "m{i}"),
            ModuleIndex::OffDiag(r, s) if r < 10 && s < 10 => write!(f, "m{r}{s}"),
            ModuleIndex::OffDiag(r, s) => write!(f, "m{r}_{s}"),
        }
    }
}

impl Serialize for ModuleIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Element of su(N) stored densely, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SuElement {
    n: usize,
    data: Vec<Complex64>,
}

impl SuElement {
    pub fn zeros(n: usize) -> Self {
        SuElement { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    /// Checked constructor: entries must be anti-Hermitian and traceless.
    pub fn from_entries(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension { expected: n * n, found: data.len() });
        }
        let x = SuElement { n, data };
        let scale = x.max_abs().max(1.0);
        let mut tr = Complex64::new(0.0, 0.0);
        for a in 0..n {
            tr += x.get(a, a);
            for b in 0..n {
                if (x.get(a, b) + x.get(b, a).conj()).norm() > MATRIX_TOL * scale {
                    return Err(Error::NumericalConsistency(format!("entry ({a},{b}) breaks anti-Hermitian symmetry")));
                }
            }
        }
        if tr.norm() > MATRIX_TOL * scale {
            return Err(Error::NumericalConsistency(format!("trace {tr} is not zero")));
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.data[a * self.n + b]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    fn set(&mut self, a: usize, b: usize, v: Complex64) {
        self.data[a * self.n + b] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|a| self.get(a, a)).sum()
    }

    pub fn add(&self, other: &SuElement) -> Result<SuElement> {
        self.same_size(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(SuElement { n: self.n, data })
    }

    pub fn sub(&self, other: &SuElement) -> Result<SuElement> {
        self.same_size(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(SuElement { n: self.n, data })
    }

    pub fn scaled(&self, c: f64) -> SuElement {
        SuElement { n: self.n, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub(crate) fn axpy(&mut self, c: f64, x: &SuElement) {
        for (a, b) in self.data.iter_mut().zip(&x.data) {
            *a += b * c;
        }
    }

    /// `sqrt(-B(X, X))`.
    pub fn norm(&self) -> f64 {
        minus_killing_unchecked(self, self).max(0.0).sqrt()
    }

    fn same_size(&self, other: &SuElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.n, found: other.n })
        }
    }

    /// Nonzero entries as `(row, col, value)`.
    pub(crate) fn sparse(&self) -> Vec<(usize, usize, Complex64)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, z)| z.re != 0.0 || z.im != 0.0)
            .map(|(idx, z)| (idx / n, idx % n, *z))
            .collect()
    }
}

fn matmul(n: usize, x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for a in 0..n {
        for c in 0..n {
            let xac = x[a * n + c];
            if xac.re == 0.0 && xac.im == 0.0 {
                continue;
            }
            for b in 0..n {
                out[a * n + b] += xac * y[c * n + b];
            }
        }
    }
    out
}

/// Commutator `XY - YX`.
pub fn bracket(x: &SuElement, y: &SuElement) -> Result<SuElement> {
    x.same_size(y)?;
    let n = x.n;
    let xy = matmul(n, &x.data, &y.data);
    let yx = matmul(n, &y.data, &x.data);
    let data = xy.iter().zip(&yx).map(|(a, b)| a - b).collect();
    Ok(SuElement { n, data })
}

/// `tr(XY)` without forming the product.
fn trace_product(n: usize, x: &[Complex64], y: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            acc += x[a * n + b] * y[b * n + a];
        }
    }
    acc
}

/// `-B(X, Y) = -2N tr(XY)`.
pub fn minus_killing(x: &SuElement, y: &SuElement) -> Result<f64> {
    x.same_size(y)?;
    let n = x.n;
    let v = trace_product(n, &x.data, &y.data) * (-2.0 * n as f64);
    let scale = x.max_abs().max(1.0) * y.max_abs().max(1.0) * (n * n) as f64;
    if v.im.abs() > MATRIX_TOL * scale {
        return Err(Error::NumericalConsistency(format!("Killing form has imaginary part {}", v.im)));
    }
    Ok(v.re)
}

pub(crate) fn minus_killing_unchecked(x: &SuElement, y: &SuElement) -> f64 {
    -2.0 * x.n as f64 * trace_product(x.n, &x.data, &y.data).re
}

/// Unnormalized center elements `H_1, ..., H_{p-1}` and their normalizers
/// `a_j`, so that `a_j H_j` has unit `-B` norm.
pub fn center_basis(partition: &Partition) -> (Vec<SuElement>, Vec<f64>) {
    let n = partition.n();
    let p = partition.p();
    let mut hs = Vec::with_capacity(p - 1);
    let mut norms = Vec::with_capacity(p - 1);
    for j in 1..p {
        let kj = partition.k(j);
        let prev = partition.partial_sum(j - 1);
        let cur = partition.partial_sum(j);
        let rest = n - cur;
        let mut h = SuElement::zeros(n);
        for a in prev..cur {
            h.set(a, a, I / kj as f64);
        }
        for a in cur..n {
            h.set(a, a, -I / rest as f64);
        }
        hs.push(h);
        let a2 = (kj * rest) as f64 / (2.0 * n as f64 * (n - prev) as f64);
        norms.push(a2.sqrt());
    }
    (hs, norms)
}

/// Weyl pair `X = E_ab - E_ba`, `Y = i(E_ab + E_ba)`, unnormalized.
pub fn weyl_pair(n: usize, a: usize, b: usize) -> (SuElement, SuElement) {
    let mut x = SuElement::zeros(n);
    x.set(a, b, Complex64::new(1.0, 0.0));
    x.set(b, a, Complex64::new(-1.0, 0.0));
    let mut y = SuElement::zeros(n);
    y.set(a, b, I);
    y.set(b, a, I);
    (x, y)
}

fn simple_basis(partition: &Partition, i: usize) -> Vec<SuElement> {
    let n = partition.n();
    let k = partition.k(i);
    let start = partition.block_start(i);
    let weyl = 1.0 / (2.0 * (n as f64).sqrt());
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let (x, y) = weyl_pair(n, start + a, start + b);
            xs.push(x.scaled(weyl));
            ys.push(y.scaled(weyl));
        }
    }
    let mut out = xs;
    out.extend(ys);
    for l in 1..k {
        let mut d = SuElement::zeros(n);
        for a in 0..l {
            d.set(start + a, start + a, I);
        }
        d.set(start + l, start + l, I * -(l as f64));
        let norm = (2.0 * n as f64 * (l * (l + 1)) as f64).sqrt();
        out.push(d.scaled(1.0 / norm));
    }
    out
}

fn off_diag_basis(partition: &Partition, r: usize, s: usize) -> Vec<SuElement> {
    let n = partition.n();
    let weyl = 1.0 / (2.0 * (n as f64).sqrt());
    let (r0, s0) = (partition.block_start(r), partition.block_start(s));
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for alpha in 0..partition.k(r) {
        for beta in 0..partition.k(s) {
            let (x, y) = weyl_pair(n, r0 + alpha, s0 + beta);
            xs.push(x.scaled(weyl));
            ys.push(y.scaled(weyl));
        }
    }
    xs.extend(ys);
    xs
}

#[derive(Debug, Clone)]
pub struct ModuleBlock {
    pub index: ModuleIndex,
    /// Position of the first basis vector in the flat basis.
    pub offset: usize,
    pub basis: Vec<SuElement>,
}

impl ModuleBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.basis.len()
    }
}

/// The decomposition `su(N) = c_1 + ... + c_{p-1} + sum m_i + sum m_rs` with
/// `-B`-orthonormal bases.
#[derive(Debug, Clone)]
pub struct Decomposition {
    partition: Partition,
    modules: Vec<ModuleBlock>,
    center_normalizers: Vec<f64>,
    /// Module position of each flat basis vector.
    owner: Vec<usize>,
}

pub fn build_decomposition(partition: &Partition) -> Decomposition {
    let p = partition.p();
    let (hs, norms) = center_basis(partition);
    let mut raw: Vec<(ModuleIndex, Vec<SuElement>)> = Vec::new();
    for (j, (h, a)) in hs.iter().zip(&norms).enumerate() {
        raw.push((ModuleIndex::Center(j + 1), vec![h.scaled(*a)]));
    }
    for i in 1..=p {
        if partition.k(i) > 1 {
            raw.push((ModuleIndex::Simple(i), simple_basis(partition, i)));
        }
    }
    for r in 1..=p {
        for s in r + 1..=p {
            raw.push((ModuleIndex::OffDiag(r, s), off_diag_basis(partition, r, s)));
        }
    }
    let mut modules = Vec::with_capacity(raw.len());
    let mut owner = Vec::new();
    let mut offset = 0;
    for (pos, (index, basis)) in raw.into_iter().enumerate() {
        owner.extend(std::iter::repeat_n(pos, basis.len()));
        let len = basis.len();
        modules.push(ModuleBlock { index, offset, basis });
        offset += len;
    }
    Decomposition { partition: partition.clone(), modules, center_normalizers: norms, owner }
}

impl Decomposition {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn modules(&self) -> &[ModuleBlock] {
        &self.modules
    }

    pub fn module_indices(&self) -> Vec<ModuleIndex> {
        self.modules.iter().map(|m| m.index).collect()
    }

    pub fn position(&self, m: ModuleIndex) -> Option<usize> {
        self.modules.binary_search_by(|b| b.index.cmp(&m)).ok()
    }

    pub fn module(&self, m: ModuleIndex) -> Result<&ModuleBlock> {
        self.position(m)
            .map(|pos| &self.modules[pos])
            .ok_or_else(|| Error::Index(format!("{m} is not present in {}", self.partition)))
    }

    pub fn dim(&self, m: ModuleIndex) -> usize {
        self.position(m).map_or(0, |pos| self.modules[pos].dim())
    }

    pub fn total_dim(&self) -> usize {
        self.owner.len()
    }

    /// Normalizers `a_j` of the center elements.
    pub fn center_normalizers(&self) -> &[f64] {
        &self.center_normalizers
    }

    /// Module position owning flat basis vector `idx`.
    pub fn owner(&self, idx: usize) -> usize {
        self.owner[idx]
    }

    pub fn basis_vector(&self, idx: usize) -> &SuElement {
        let m = &self.modules[self.owner[idx]];
        &m.basis[idx - m.offset]
    }

    /// All basis vectors in flat order.
    pub fn flat_basis(&self) -> Vec<&SuElement> {
        self.modules.iter().flat_map(|m| m.basis.iter()).collect()
    }
}

/// `-B`-orthogonal projection of `x` onto module `m`.
pub fn project(x: &SuElement, dec: &Decomposition, m: ModuleIndex) -> Result<SuElement> {
    if x.n != dec.n() {
        return Err(Error::Dimension { expected: dec.n(), found: x.n });
    }
    let mut out = SuElement::zeros(x.n);
    if let Some(pos) = dec.position(m) {
        for e in &dec.modules[pos].basis {
            out.axpy(minus_killing_unchecked(x, e), e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bracket_of_rotations_in_su3() {
        let (x12, _) = weyl_pair(3, 0, 1);
        let (x23, _) = weyl_pair(3, 1, 2);
        let (x13, _) = weyl_pair(3, 0, 2);
        let b = bracket(&x12, &x23).unwrap();
        assert_eq!(b, x13);
        assert!(bracket(&x12, &x12).unwrap().max_abs() == 0.0);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let x = SuElement::zeros(2);
        let y = SuElement::zeros(3);
        assert!(matches!(bracket(&x, &y), Err(Error::Dimension { .. })));
    }

    #[test]
    fn weyl_elements_have_norm_4n() {
        for n in 2..7 {
            let (x, y) = weyl_pair(n, 0, n - 1);
            assert!((minus_killing(&x, &x).unwrap() - 4.0 * n as f64).abs() < 1e-12);
            assert!((minus_killing(&y, &y).unwrap() - 4.0 * n as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn center_of_222() {
        let pt = part(&[2, 2, 2]);
        let (hs, a) = center_basis(&pt);
        assert!((minus_killing(&hs[0], &hs[0]).unwrap() - 9.0).abs() < 1e-12);
        assert!((a[0] - 1.0 / 3.0).abs() < 1e-15);
        let diag: Vec<f64> = (0..6).map(|i| hs[1].get(i, i).im).collect();
        assert_eq!(diag, vec![0.0, 0.0, 0.5, 0.5, -0.5, -0.5]);
        for h in &hs {
            assert_eq!(h.trace().norm(), 0.0);
        }
        assert!(minus_killing(&hs[0], &hs[1]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn dimensions() {
        let d = build_decomposition(&part(&[2, 2, 2]));
        let dims: Vec<usize> = d.modules().iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![1, 1, 3, 3, 3, 8, 8, 8]);
        assert_eq!(d.total_dim(), 35);

        let d = build_decomposition(&part(&[3, 2, 2]));
        assert_eq!(d.dim(ModuleIndex::OffDiag(1, 2)), 12);
        assert_eq!(d.dim(ModuleIndex::OffDiag(1, 3)), 12);
        assert_eq!(d.dim(ModuleIndex::OffDiag(2, 3)), 8);
        assert_eq!(d.total_dim(), 48);

        let d = build_decomposition(&part(&[1, 2]));
        assert!(d.position(ModuleIndex::Simple(1)).is_none());
        assert_eq!(d.total_dim(), 8);
    }

    #[test]
    fn gram_matrix_is_identity() {
        for v in [vec![2, 2, 2], vec![3, 2, 2], vec![1, 2, 3], vec![2, 2, 2, 2]] {
            let d = build_decomposition(&part(&v));
            let basis = d.flat_basis();
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let g = minus_killing(a, b).unwrap();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((g - want).abs() < 1e-12, "{v:?} ({i},{j}) = {g}");
                }
            }
        }
    }

    #[test]
    fn projections_of_basis_elements() {
        let d = build_decomposition(&part(&[2, 2, 2]));
        let h = d.module(ModuleIndex::Center(1)).unwrap().basis[0].clone();
        for m in d.module_indices() {
            let pr = project(&h, &d, m).unwrap();
            if m == ModuleIndex::Center(1) {
                assert!(pr.sub(&h).unwrap().max_abs() < 1e-12);
            } else {
                assert!(pr.max_abs() < 1e-12);
            }
        }
        let x = d.module(ModuleIndex::OffDiag(1, 2)).unwrap().basis[3].clone();
        let pr = project(&x, &d, ModuleIndex::OffDiag(1, 2)).unwrap();
        assert!(pr.sub(&x).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn module_index_bounds() {
        let pt = part(&[2, 2, 2]);
        assert!(ModuleIndex::Center(3).validate(&pt).is_err());
        assert!(ModuleIndex::OffDiag(2, 2).validate(&pt).is_err());
        assert!(ModuleIndex::OffDiag(1, 3).validate(&pt).is_ok());
        assert!(Partition::new(vec![4]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn checked_constructor_rejects_hermitian() {
        let mut data = vec![Complex64::new(0.0, 0.0); 4];
        data[1] = Complex64::new(1.0, 0.0);
        data[2] = Complex64::new(1.0, 0.0);
        assert!(SuElement::from_entries(2, data).is_err());
    }
}
