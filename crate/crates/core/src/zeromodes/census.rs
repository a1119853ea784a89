use std::collections::BTreeSet;

use nalgebra::DVector;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::product_zero_modes;
use super::reference;
use crate::counting;
use crate::error::Result;
use crate::susy::{computational_classes, ChainModel, SiteClass, KERNEL_REL_TOL};
use crate::tensor::{
    anticommutator, chain_dim, kernel_basis_on_blocks, orthonormalize, ChainBasisState,
    SparseOperator, C64,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectorCount {
    /// Number of boson-class sites, conserved by `H`.
    pub boson_number: usize,
    pub dim: usize,
    pub kernel_dim: usize,
    pub product: u64,
    /// `kernel_dim − product`; negative only on a numerical failure.
    pub entangled: i64,
}

/// Zero-mode census of one chain length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub model: String,
    pub n_sites: usize,
    pub sectors: Vec<SectorCount>,
    pub kernel_total: usize,
    pub product_total: u64,
    pub entangled_total: i64,
}

impl CountReport {
    pub fn f_p(&self) -> u64 {
        self.product_total
    }

    pub fn f_e(&self) -> i64 {
        self.entangled_total
    }

    pub fn f_g(&self) -> usize {
        self.kernel_total
    }

    /// Disagreements with the closed recursions for the qubit chain.
    pub fn recursion_mismatches(&self) -> Vec<String> {
        let n = self.n_sites;
        let mut out = Vec::new();
        let p = counting::qubit_product(n).to_u64();
        let e = counting::qubit_entangled(n).to_i64();
        let g = counting::qubit_ground_total(n).to_usize();
        if p != Some(self.product_total) {
            out.push(format!(
                "N={n}: f_P {} vs recursion {p:?}",
                self.product_total
            ));
        }
        if e != Some(self.entangled_total) {
            out.push(format!(
                "N={n}: f_E {} vs recursion {e:?}",
                self.entangled_total
            ));
        }
        if g != Some(self.kernel_total) {
            out.push(format!(
                "N={n}: f_G {} vs recursion {g:?}",
                self.kernel_total
            ));
        }
        out
    }

    /// Disagreements with the tabulated reference counts (empty when the
    /// chain length is not tabulated).
    pub fn reference_mismatches(&self) -> Vec<String> {
        let n = self.n_sites;
        let mut out = Vec::new();
        if let Some(&(_, e, p, g)) = reference::TOTALS.iter().find(|r| r.0 == n) {
            if (e, p, g) != (self.entangled_total, self.product_total, self.kernel_total) {
                out.push(format!(
                    "N={n}: (f_E,f_P,f_G) = ({},{},{}) vs reference ({e},{p},{g})",
                    self.entangled_total, self.product_total, self.kernel_total
                ));
            }
        }
        if let Some((_, cells)) = reference::ENTANGLED_BY_SECTOR.iter().find(|r| r.0 == n) {
            for s in &self.sectors {
                let want = cells
                    .iter()
                    .find(|c| c.0 == s.boson_number)
                    .map_or(0, |c| c.1);
                if want != s.entangled {
                    out.push(format!(
                        "N={n}, #b={}: entangled {} vs reference {want}",
                        s.boson_number, s.entangled
                    ));
                }
            }
        }
        out
    }
}

struct Sectors {
    classes: Vec<SiteClass>,
    /// Basis indices grouped by boson-class count.
    members: Vec<Vec<usize>>,
}

fn boson_sectors(model: &dyn ChainModel, n_sites: usize) -> Result<Sectors> {
    let classes = computational_classes(model)?;
    let d = classes.len();
    let dim = chain_dim(d, n_sites)?;
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n_sites + 1];
    for i in 0..dim {
        let s = ChainBasisState::unrank(d, n_sites, i)?;
        members[boson_number(&classes, &s)].push(i);
    }
    Ok(Sectors { classes, members })
}

fn boson_number(classes: &[SiteClass], state: &ChainBasisState) -> usize {
    state
        .digits()
        .iter()
        .filter(|&&k| classes[k] == SiteClass::Boson)
        .count()
}

fn hamiltonian(model: &dyn ChainModel, n_sites: usize) -> Result<SparseOperator> {
    let q = model.supercharge(n_sites)?;
    anticommutator(&q, &q.adjoint())
}

/// Sector-by-sector kernel of `H` for models whose local basis is
/// computational and whose `H` conserves the boson-class count.
pub fn kernel_census(model: &dyn ChainModel, n_sites: usize) -> Result<CountReport> {
    let sectors = boson_sectors(model, n_sites)?;
    let h = hamiltonian(model, n_sites)?;
    let kernel = kernel_basis_on_blocks(&h, &sectors.members, KERNEL_REL_TOL)?;

    let mut product = vec![0u64; n_sites + 1];
    for s in product_zero_modes(model, n_sites)? {
        product[boson_number(&sectors.classes, &s)] += 1;
    }
    let counts: Vec<SectorCount> = sectors
        .members
        .iter()
        .enumerate()
        .map(|(b, idx)| SectorCount {
            boson_number: b,
            dim: idx.len(),
            kernel_dim: kernel.block_dims[b],
            product: product[b],
            entangled: kernel.block_dims[b] as i64 - product[b] as i64,
        })
        .collect();
    let product_total: u64 = product.iter().sum();
    Ok(CountReport {
        model: model.name().to_string(),
        n_sites,
        kernel_total: kernel.dim(),
        entangled_total: kernel.dim() as i64 - product_total as i64,
        product_total,
        sectors: counts,
    })
}

/// Orthonormal basis of the zero modes orthogonal to every product zero
/// mode. Product zero modes of a computational model are basis vectors,
/// so projecting them out zeroes their coordinates.
pub fn entangled_zero_modes(model: &dyn ChainModel, n_sites: usize) -> Result<Vec<DVector<C64>>> {
    let sectors = boson_sectors(model, n_sites)?;
    let h = hamiltonian(model, n_sites)?;
    let kernel = kernel_basis_on_blocks(&h, &sectors.members, KERNEL_REL_TOL)?;
    let product: BTreeSet<usize> = product_zero_modes(model, n_sites)?
        .iter()
        .map(ChainBasisState::rank)
        .collect();
    let projected: Vec<DVector<C64>> = kernel
        .vectors
        .into_iter()
        .map(|mut v| {
            for &k in &product {
                v[k] = C64::default();
            }
            v
        })
        .collect();
    Ok(orthonormalize(&projected, KERNEL_REL_TOL))
}

/// `N,f_E,f_P,f_G` rows.
pub fn totals_csv(reports: &[CountReport]) -> String {
    let mut out = String::from("N,f_E,f_P,f_G\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n_sites,
            r.f_e(),
            r.f_p(),
            r.f_g()
        ));
    }
    out
}

/// `N,sector,kernel_dim,f_P,f_E` rows, one per boson-number sector.
pub fn sectors_csv(reports: &[CountReport]) -> String {
    let mut out = String::from("N,sector,kernel_dim,f_P,f_E\n");
    for r in reports {
        for s in &r.sectors {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n_sites, s.boson_number, s.kernel_dim, s.product, s.entangled
            ));
        }
    }
    out
}
