//! Chain Hilbert spaces, sparse complex operators and numerical kernels.
//!
//! Site 0 is the most significant digit of a basis index, so the basis order
//! is lexicographic in the site labels.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Entries with modulus below this are dropped from sparse operators.
pub const PRUNE_TOL: f64 = 1e-14;
/// Largest chain Hilbert space dimension accepted (2^26).
pub const MAX_CHAIN_DIM: u128 = 1 << 26;
/// Largest block handed to a dense decomposition.
pub const MAX_DENSE_DIM: usize = 4096;
/// Norm used by [`commutator_norm`] and every operator residual.
pub const OPERATOR_NORM: &str = "frobenius";

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Dimension `local_dim^n_sites`, rejected above [`MAX_CHAIN_DIM`].
pub fn chain_dim(local_dim: usize, n_sites: usize) -> Result<usize> {
    if local_dim == 0 {
        return Err(Error::invalid("local dimension must be positive"));
    }
    let mut dim: u128 = 1;
    for _ in 0..n_sites {
        dim = dim.saturating_mul(local_dim as u128);
        if dim > MAX_CHAIN_DIM {
            let requested = (local_dim as u128)
                .checked_pow(n_sites as u32)
                .unwrap_or(u128::MAX);
            return Err(Error::Capacity {
                what: "chain Hilbert space",
                requested,
                limit: MAX_CHAIN_DIM,
            });
        }
    }
    Ok(dim as usize)
}

/// A computational basis state of an `n_sites` chain of `local_dim` qudits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainBasisState {
    local_dim: usize,
    digits: Vec<usize>,
}

impl ChainBasisState {
    pub fn new(local_dim: usize, digits: Vec<usize>) -> Result<Self> {
        if local_dim == 0 {
            return Err(Error::invalid("local dimension must be positive"));
        }
        if let Some(&bad) = digits.iter().find(|&&x| x >= local_dim) {
            return Err(Error::OutOfRange {
                what: "local state",
                index: bad,
                bound: local_dim,
            });
        }
        Ok(ChainBasisState { local_dim, digits })
    }

    pub fn unrank(local_dim: usize, n_sites: usize, index: usize) -> Result<Self> {
        let dim = chain_dim(local_dim, n_sites)?;
        if index >= dim {
            return Err(Error::OutOfRange {
                what: "basis",
                index,
                bound: dim,
            });
        }
        let mut digits = vec![0; n_sites];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = rest % local_dim;
            rest /= local_dim;
        }
        Ok(ChainBasisState { local_dim, digits })
    }

    pub fn rank(&self) -> usize {
        self.digits
            .iter()
            .fold(0, |acc, &x| acc * self.local_dim + x)
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn n_sites(&self) -> usize {
        self.digits.len()
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    /// Concatenates one label per site.
    pub fn render(&self, labels: &[String]) -> String {
        self.digits.iter().map(|&x| labels[x].as_str()).collect()
    }
}

/// All basis states in rank order.
pub fn enumerate_basis(
    local_dim: usize,
    n_sites: usize,
) -> Result<impl Iterator<Item = ChainBasisState>> {
    let dim = chain_dim(local_dim, n_sites)?;
    Ok((0..dim).map(move |i| {
        ChainBasisState::unrank(local_dim, n_sites, i).expect("index below dimension")
    }))
}

/// Row-compressed complex matrix. No stored entry has modulus below
/// [`PRUNE_TOL`] after any public operation.
#[derive(Clone, PartialEq)]
pub struct SparseOperator {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<BTreeMap<usize, C64>>,
}

impl fmt::Debug for SparseOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseOperator({}x{}, nnz={})",
            self.n_rows,
            self.n_cols,
            self.nnz()
        )
    }
}

impl SparseOperator {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseOperator {
            n_rows,
            n_cols,
            rows: vec![BTreeMap::new(); n_rows],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![re(1.0); dim])
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let mut op = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            op.accumulate(i, i, v);
        }
        op.prune(PRUNE_TOL);
        op
    }

    pub fn from_dense(m: &DMatrix<C64>) -> Self {
        let mut op = Self::zeros(m.nrows(), m.ncols());
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                op.accumulate(r, c, m[(r, c)]);
            }
        }
        op.prune(PRUNE_TOL);
        op
    }

    /// Sums repeated coordinates.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, C64)>,
    ) -> Result<Self> {
        let mut op = Self::zeros(n_rows, n_cols);
        for (r, c, v) in triplets {
            op.check_index(r, c)?;
            op.accumulate(r, c, v);
        }
        op.prune(PRUNE_TOL);
        Ok(op)
    }

    fn check_index(&self, r: usize, c: usize) -> Result<()> {
        if r >= self.n_rows {
            return Err(Error::OutOfRange {
                what: "row",
                index: r,
                bound: self.n_rows,
            });
        }
        if c >= self.n_cols {
            return Err(Error::OutOfRange {
                what: "column",
                index: c,
                bound: self.n_cols,
            });
        }
        Ok(())
    }

    fn accumulate(&mut self, r: usize, c: usize, v: C64) {
        *self.rows[r].entry(c).or_insert(C64::new(0.0, 0.0)) += v;
    }

    pub fn prune(&mut self, tol: f64) {
        for row in &mut self.rows {
            row.retain(|_, v| v.norm() >= tol);
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.rows
            .get(r)
            .and_then(|row| row.get(&c))
            .copied()
            .unwrap_or_default()
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, C64> {
        &self.rows[r]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, &v)| (r, c, v)))
    }

    pub fn apply(&self, v: &DVector<C64>) -> Result<DVector<C64>> {
        if v.len() != self.n_cols {
            return Err(Error::mismatch(format!(
                "operator has {} columns, vector has length {}",
                self.n_cols,
                v.len()
            )));
        }
        Ok(DVector::from_iterator(
            self.n_rows,
            self.rows
                .iter()
                .map(|row| row.iter().map(|(&c, &x)| x * v[c]).sum::<C64>()),
        ))
    }

    pub fn compose(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::mismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, C64> = BTreeMap::new();
                for (&k, &a) in row {
                    for (&c, &b) in &rhs.rows[k] {
                        *acc.entry(c).or_default() += a * b;
                    }
                }
                acc.retain(|_, v| v.norm() >= PRUNE_TOL);
                acc
            })
            .collect();
        Ok(SparseOperator {
            n_rows: self.n_rows,
            n_cols: rhs.n_cols,
            rows,
        })
    }

    fn combine(&self, rhs: &SparseOperator, sign: f64) -> Result<SparseOperator> {
        if (self.n_rows, self.n_cols) != (rhs.n_rows, rhs.n_cols) {
            return Err(Error::mismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.n_rows, self.n_cols, rhs.n_rows, rhs.n_cols
            )));
        }
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.accumulate(r, c, v * sign);
        }
        out.prune(PRUNE_TOL);
        Ok(out)
    }

    pub fn try_add(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        self.combine(rhs, 1.0)
    }

    pub fn try_sub(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        self.combine(rhs, -1.0)
    }

    pub fn scaled(&self, factor: C64) -> SparseOperator {
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.values_mut() {
                *v *= factor;
            }
        }
        out.prune(PRUNE_TOL);
        out
    }

    pub fn adjoint(&self) -> SparseOperator {
        let mut out = Self::zeros(self.n_cols, self.n_rows);
        for (r, c, v) in self.entries() {
            out.rows[c].insert(r, v.conj());
        }
        out
    }

    pub fn kron(&self, rhs: &SparseOperator) -> SparseOperator {
        let mut out = Self::zeros(self.n_rows * rhs.n_rows, self.n_cols * rhs.n_cols);
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in rhs.entries() {
                out.rows[r1 * rhs.n_rows + r2].insert(c1 * rhs.n_cols + c2, a * b);
            }
        }
        out.prune(PRUNE_TOL);
        out
    }

    /// `factors[0] ⊗ factors[1] ⊗ …`, with factor 0 on the most significant digit.
    pub fn tensor_product(factors: &[&SparseOperator]) -> SparseOperator {
        factors
            .iter()
            .fold(SparseOperator::identity(1), |acc, f| acc.kron(f))
    }

    pub fn frobenius_norm(&self) -> f64 {
        // Folding from +0 keeps the norm of an empty operator at +0.
        self.entries()
            .map(|(_, _, v)| v.norm_sqr())
            .fold(0.0, |a, b| a + b)
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().map(|(_, _, v)| v.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        (0..self.n_rows.min(self.n_cols))
            .map(|i| self.get(i, i))
            .sum()
    }

    pub fn is_real(&self) -> bool {
        self.entries().all(|(_, _, v)| v.im.abs() < PRUNE_TOL)
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let mut m = DMatrix::zeros(self.n_rows, self.n_cols);
        for (r, c, v) in self.entries() {
            m[(r, c)] = v;
        }
        m
    }

    /// Dense submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> DMatrix<C64> {
        let col_pos: BTreeMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut m = DMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (c, &v) in &self.rows[r] {
                if let Some(&j) = col_pos.get(c) {
                    m[(i, j)] = v;
                }
            }
        }
        m
    }

    /// Connected components of the symmetrised sparsity graph, each sorted,
    /// ordered by smallest index. The operator is block diagonal on them.
    pub fn connected_blocks(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_square() {
            return Err(Error::mismatch(
                "block decomposition needs a square operator",
            ));
        }
        let mut parent: Vec<usize> = (0..self.n_rows).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (r, c, _) in self.entries() {
            let (a, b) = (find(&mut parent, r), find(&mut parent, c));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.n_rows {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        Ok(groups.into_values().collect())
    }
}

impl Mul for &SparseOperator {
    type Output = SparseOperator;

    /// Panics on a shape mismatch; use [`SparseOperator::compose`] to recover.
    fn mul(self, rhs: &SparseOperator) -> SparseOperator {
        self.compose(rhs).expect("operator shapes agree")
    }
}

impl Add for &SparseOperator {
    type Output = SparseOperator;

    fn add(self, rhs: &SparseOperator) -> SparseOperator {
        self.try_add(rhs).expect("operator shapes agree")
    }
}

impl Sub for &SparseOperator {
    type Output = SparseOperator;

    fn sub(self, rhs: &SparseOperator) -> SparseOperator {
        self.try_sub(rhs).expect("operator shapes agree")
    }
}

/// `I^{⊗site} ⊗ local ⊗ I^{⊗(n_sites-site-1)}`.
pub fn embed_local(local: &DMatrix<C64>, site: usize, n_sites: usize) -> Result<SparseOperator> {
    if !local.is_square() {
        return Err(Error::mismatch("local operator must be square"));
    }
    if site >= n_sites {
        return Err(Error::OutOfRange {
            what: "site",
            index: site,
            bound: n_sites,
        });
    }
    let d = local.nrows();
    chain_dim(d, n_sites)?;
    let id = SparseOperator::identity(d);
    let m = SparseOperator::from_dense(local);
    let factors: Vec<&SparseOperator> = (0..n_sites)
        .map(|k| if k == site { &m } else { &id })
        .collect();
    Ok(SparseOperator::tensor_product(&factors))
}

/// A tensor product of one local matrix per site. Products of these are
/// taken site by site, which keeps string operators cheap.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductOperator {
    factors: Vec<DMatrix<C64>>,
}

impl ProductOperator {
    pub fn identity(local_dim: usize, n_sites: usize) -> Self {
        ProductOperator {
            factors: vec![DMatrix::identity(local_dim, local_dim); n_sites],
        }
    }

    pub fn from_factors(factors: Vec<DMatrix<C64>>) -> Result<Self> {
        let d = factors.first().map_or(0, DMatrix::nrows);
        if factors.iter().any(|f| f.nrows() != d || f.ncols() != d) {
            return Err(Error::mismatch("site factors must share one square shape"));
        }
        Ok(ProductOperator { factors })
    }

    pub fn n_sites(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, site: usize) -> &DMatrix<C64> {
        &self.factors[site]
    }

    pub fn set_factor(&mut self, site: usize, m: DMatrix<C64>) -> Result<()> {
        if site >= self.factors.len() {
            return Err(Error::OutOfRange {
                what: "site",
                index: site,
                bound: self.factors.len(),
            });
        }
        if m.shape() != self.factors[site].shape() {
            return Err(Error::mismatch("site factor shape changed"));
        }
        self.factors[site] = m;
        Ok(())
    }

    pub fn compose(&self, rhs: &ProductOperator) -> Result<ProductOperator> {
        if self.factors.len() != rhs.factors.len() {
            return Err(Error::mismatch(
                "product operators on different chain lengths",
            ));
        }
        Ok(ProductOperator {
            factors: self
                .factors
                .iter()
                .zip(&rhs.factors)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn adjoint(&self) -> ProductOperator {
        ProductOperator {
            factors: self.factors.iter().map(DMatrix::adjoint).collect(),
        }
    }

    pub fn to_sparse(&self) -> Result<SparseOperator> {
        let d = self.factors.first().map_or(1, DMatrix::nrows);
        chain_dim(d, self.factors.len())?;
        let sparse: Vec<SparseOperator> = self
            .factors
            .iter()
            .map(SparseOperator::from_dense)
            .collect();
        let refs: Vec<&SparseOperator> = sparse.iter().collect();
        Ok(SparseOperator::tensor_product(&refs))
    }
}

pub fn commutator(a: &SparseOperator, b: &SparseOperator) -> Result<SparseOperator> {
    a.compose(b)?.try_sub(&b.compose(a)?)
}

pub fn anticommutator(a: &SparseOperator, b: &SparseOperator) -> Result<SparseOperator> {
    a.compose(b)?.try_add(&b.compose(a)?)
}

/// Frobenius norm of `AB − BA`.
pub fn commutator_norm(a: &SparseOperator, b: &SparseOperator) -> Result<f64> {
    Ok(commutator(a, b)?.frobenius_norm())
}

/// Orthonormal basis of `{v : ‖op v‖ ≤ threshold}` where the threshold is
/// `rel_tol` times the largest singular value of the whole operator.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<DVector<C64>>,
    pub largest_singular_value: f64,
    pub threshold: f64,
    /// Kernel dimension contributed by each block, in block order.
    pub block_dims: Vec<usize>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

struct BlockSpectrum {
    singular_values: Vec<f64>,
    // Right singular vectors, one per singular value, in block coordinates.
    right_vectors: Vec<DVector<C64>>,
}

fn block_spectrum(m: &DMatrix<C64>) -> Result<BlockSpectrum> {
    let n = m.ncols();
    if n > MAX_DENSE_DIM {
        return Err(Error::Capacity {
            what: "dense block",
            requested: n as u128,
            limit: MAX_DENSE_DIM as u128,
        });
    }
    if n == 0 {
        return Ok(BlockSpectrum {
            singular_values: vec![],
            right_vectors: vec![],
        });
    }
    // Zero rows pad short matrices so V^H is complete.
    let rows = m.nrows().max(n);
    let mut padded = DMatrix::<C64>::zeros(rows, n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);

    if padded.iter().all(|v| v.im.abs() < PRUNE_TOL) {
        let real = padded.map(|v| v.re);
        let svd = real.svd(false, true);
        let v_t = svd.v_t.expect("requested V^T");
        Ok(BlockSpectrum {
            singular_values: svd.singular_values.iter().copied().collect(),
            right_vectors: (0..n).map(|k| v_t.row(k).transpose().map(re)).collect(),
        })
    } else {
        let svd = padded.svd(false, true);
        let v_t = svd.v_t.expect("requested V^H");
        Ok(BlockSpectrum {
            singular_values: svd.singular_values.iter().copied().collect(),
            right_vectors: (0..n)
                .map(|k| v_t.row(k).transpose().map(|x| x.conj()))
                .collect(),
        })
    }
}

/// Kernel of a square operator computed with one dense SVD.
pub fn kernel_basis(op: &SparseOperator, rel_tol: f64) -> Result<KernelBasis> {
    let all: Vec<usize> = (0..op.n_cols()).collect();
    kernel_from_blocks(op, &[all], rel_tol)
}

/// Same kernel as [`kernel_basis`], computed block by block on the
/// connected components of the (square) operator.
pub fn kernel_basis_blocked(op: &SparseOperator, rel_tol: f64) -> Result<KernelBasis> {
    let blocks = op.connected_blocks()?;
    kernel_from_blocks(op, &blocks, rel_tol)
}

/// Kernel on caller-supplied blocks, which must partition the index set and
/// carry no operator entries between them.
pub fn kernel_basis_on_blocks(
    op: &SparseOperator,
    blocks: &[Vec<usize>],
    rel_tol: f64,
) -> Result<KernelBasis> {
    if !op.is_square() {
        return Err(Error::mismatch("kernel extraction needs a square operator"));
    }
    let mut owner = vec![usize::MAX; op.n_rows()];
    for (b, idx) in blocks.iter().enumerate() {
        for &i in idx {
            if i >= owner.len() || owner[i] != usize::MAX {
                return Err(Error::invalid("blocks must partition the basis"));
            }
            owner[i] = b;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::invalid("blocks must partition the basis"));
    }
    if op.entries().any(|(r, c, _)| owner[r] != owner[c]) {
        return Err(Error::invalid("operator couples distinct blocks"));
    }
    kernel_from_blocks(op, blocks, rel_tol)
}

fn kernel_from_blocks(
    op: &SparseOperator,
    blocks: &[Vec<usize>],
    rel_tol: f64,
) -> Result<KernelBasis> {
    if !op.is_square() {
        return Err(Error::mismatch("kernel extraction needs a square operator"));
    }
    let spectra: Vec<BlockSpectrum> = blocks
        .par_iter()
        .map(|idx| block_spectrum(&op.submatrix(idx, idx)))
        .collect::<Result<_>>()?;
    let largest = spectra
        .iter()
        .flat_map(|s| s.singular_values.iter().copied())
        .fold(0.0, f64::max);
    let threshold = rel_tol * largest;
    let dim = op.n_cols();
    let mut vectors = Vec::new();
    let mut block_dims = Vec::with_capacity(blocks.len());
    for (idx, spec) in blocks.iter().zip(&spectra) {
        let before = vectors.len();
        for (sv, v) in spec.singular_values.iter().zip(&spec.right_vectors) {
            if *sv <= threshold {
                let mut full = DVector::zeros(dim);
                for (local, &global) in idx.iter().enumerate() {
                    full[global] = v[local];
                }
                vectors.push(full);
            }
        }
        block_dims.push(vectors.len() - before);
    }
    Ok(KernelBasis {
        ambient_dim: dim,
        vectors,
        largest_singular_value: largest,
        threshold,
        block_dims,
    })
}

/// Smallest eigenvalue of a Hermitian operator, computed per connected block.
pub fn min_eigenvalue_hermitian(op: &SparseOperator) -> Result<f64> {
    let blocks = op.connected_blocks()?;
    let mins: Vec<f64> = blocks
        .par_iter()
        .map(|idx| {
            if idx.len() > MAX_DENSE_DIM {
                return Err(Error::Capacity {
                    what: "dense block",
                    requested: idx.len() as u128,
                    limit: MAX_DENSE_DIM as u128,
                });
            }
            let m = op.submatrix(idx, idx);
            let min = if m.iter().all(|v| v.im.abs() < PRUNE_TOL) {
                m.map(|v| v.re)
                    .symmetric_eigenvalues()
                    .iter()
                    .copied()
                    .fold(f64::INFINITY, f64::min)
            } else {
                m.symmetric_eigenvalues()
                    .iter()
                    .copied()
                    .fold(f64::INFINITY, f64::min)
            };
            Ok(min)
        })
        .collect::<Result<_>>()?;
    Ok(mins.into_iter().fold(f64::INFINITY, f64::min))
}

/// Modified Gram-Schmidt with one reorthogonalisation pass. Vectors whose
/// residual norm falls below `tol` are dropped.
pub fn orthonormalize(vectors: &[DVector<C64>], tol: f64) -> Vec<DVector<C64>> {
    let mut basis: Vec<DVector<C64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let overlap = b.dotc(&w);
                w -= b * overlap;
            }
        }
        let norm = w.norm();
        if norm > tol {
            basis.push(w / re(norm));
        }
    }
    basis
}

/// Frobenius norm of a dense difference.
pub fn dense_residual(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    (a - b).norm()
}
