use nalgebra::DMatrix;

use super::local::LocalChargeSet;
use super::models::ChainModel;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tensor::{
    anticommutator, chain_dim, commutator_norm, kernel_basis_blocked, min_eigenvalue_hermitian,
    ProductOperator, SparseOperator, C64,
};

/// Default relative singular-value threshold for numerical kernels.
pub const KERNEL_REL_TOL: f64 = 1e-8;

/// `θ_j = S^{⊗j} ⊗ q ⊗ I^{⊗(N−j−1)}` with `S = 1 − 2F`.
pub fn theta_product(local: &LocalChargeSet, j: usize, n_sites: usize) -> Result<ProductOperator> {
    site_string(local, &local.q, j, n_sites)
}

fn site_string(
    local: &LocalChargeSet,
    at_site: &DMatrix<C64>,
    j: usize,
    n_sites: usize,
) -> Result<ProductOperator> {
    if j >= n_sites {
        return Err(Error::OutOfRange {
            what: "site",
            index: j,
            bound: n_sites,
        });
    }
    let mut p = ProductOperator::identity(local.dim(), n_sites);
    for k in 0..j {
        p.set_factor(k, local.string.clone())?;
    }
    p.set_factor(j, at_site.clone())?;
    Ok(p)
}

/// String-dressed local charge `θ_j` as a sparse operator (0-based `j`).
pub fn string_theta(model: &dyn ChainModel, j: usize, n_sites: usize) -> Result<SparseOperator> {
    chain_dim(model.local_dim(), n_sites)?;
    theta_product(model.local(), j, n_sites)?.to_sparse()
}

/// Sums product-operator window terms into one sparse operator.
pub(crate) fn window_sum(
    local_dim: usize,
    n_sites: usize,
    starts: impl Iterator<Item = usize>,
    term: impl Fn(usize) -> Result<ProductOperator>,
) -> Result<SparseOperator> {
    let dim = chain_dim(local_dim, n_sites)?;
    let mut total = SparseOperator::zeros(dim, dim);
    for j in starts {
        total = total.try_add(&term(j)?.to_sparse()?)?;
    }
    Ok(total)
}

/// `P = ∏_j (θ_j + θ_j†)`, ordered with `j = 0` leftmost.
pub fn particle_hole(local: &LocalChargeSet, n_sites: usize) -> Result<SparseOperator> {
    chain_dim(local.dim(), n_sites)?;
    let exchange = local.exchange();
    let mut p = ProductOperator::identity(local.dim(), n_sites);
    for j in 0..n_sites {
        p = p.compose(&site_string(local, &exchange, j, n_sites)?)?;
    }
    p.to_sparse()
}

/// `W = ∏_k (1 − 2F_k)`, the total fermion parity.
pub fn fermion_parity(local: &LocalChargeSet, n_sites: usize) -> Result<SparseOperator> {
    chain_dim(local.dim(), n_sites)?;
    ProductOperator::from_factors(vec![local.string.clone(); n_sites])?.to_sparse()
}

#[derive(Clone, Debug)]
pub struct GlobalChargeSet {
    pub n_sites: usize,
    pub q: SparseOperator,
    pub q_dag: SparseOperator,
    pub h: SparseOperator,
    pub p: SparseOperator,
    pub w: SparseOperator,
}

impl GlobalChargeSet {
    pub fn dim(&self) -> usize {
        self.q.n_rows()
    }
}

pub fn global_supercharge(model: &dyn ChainModel, n_sites: usize) -> Result<GlobalChargeSet> {
    let q = model.supercharge(n_sites)?;
    let q_dag = q.adjoint();
    let h = anticommutator(&q, &q_dag)?;
    Ok(GlobalChargeSet {
        n_sites,
        p: particle_hole(model.local(), n_sites)?,
        w: fermion_parity(model.local(), n_sites)?,
        q,
        q_dag,
        h,
    })
}

/// Residuals of the supersymmetry algebra and chain symmetries.
pub fn verify_susy(model: &dyn ChainModel, n_sites: usize, tol: f64) -> Result<VerificationReport> {
    let g = global_supercharge(model, n_sites)?;
    let mut report = VerificationReport::new(format!("susy {} N={n_sites}", model.name()));
    let dim = g.dim();
    let id = SparseOperator::identity(dim);
    report.check("Q^2", (&g.q * &g.q).frobenius_norm(), tol);
    report.check("Qdag^2", (&g.q_dag * &g.q_dag).frobenius_norm(), tol);
    report.check(
        "H - (Q Qdag + Qdag Q)",
        (&g.h - &(&(&g.q * &g.q_dag) + &(&g.q_dag * &g.q))).frobenius_norm(),
        tol,
    );
    report.check("H - Hdag", (&g.h - &g.h.adjoint()).frobenius_norm(), tol);
    report.check("[H,Q]", commutator_norm(&g.h, &g.q)?, tol);
    report.check("[H,Qdag]", commutator_norm(&g.h, &g.q_dag)?, tol);
    let min_eig = min_eigenvalue_hermitian(&g.h)?;
    report.check("min eig H (negative part)", (-min_eig).max(0.0), tol);
    report.note(format!("min eig H = {min_eig:.3e}"));
    report.check("[H,P]", commutator_norm(&g.h, &g.p)?, tol);
    report.check("W^2 - I", (&(&g.w * &g.w) - &id).frobenius_norm(), tol);
    report.check("{W,Q}", anticommutator(&g.w, &g.q)?.frobenius_norm(), tol);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct WittenIndex {
    pub kernel_dim: usize,
    /// `tr(W)` over `ker H`, rounded.
    pub index: i64,
    /// Unrounded kernel trace, for judging the rounding.
    pub kernel_trace: f64,
    /// `tr(W)` over the whole chain space.
    pub full_trace: i64,
}

pub fn witten_index(model: &dyn ChainModel, n_sites: usize) -> Result<WittenIndex> {
    let g = global_supercharge(model, n_sites)?;
    let kernel = kernel_basis_blocked(&g.h, KERNEL_REL_TOL)?;
    let kernel_trace: f64 = kernel
        .vectors
        .iter()
        .map(|v| Ok(v.dotc(&g.w.apply(v)?).re))
        .sum::<Result<f64>>()?;
    Ok(WittenIndex {
        kernel_dim: kernel.dim(),
        index: kernel_trace.round() as i64,
        kernel_trace,
        full_trace: g.w.trace().re.round() as i64,
    })
}
