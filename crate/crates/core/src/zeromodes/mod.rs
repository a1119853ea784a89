//! Product zero modes, exact counting, generating functions and the
//! sector-resolved census of all zero modes.

mod census;
mod patterns;
pub mod reference;
mod series;
mod sis;

use nalgebra::DVector;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

pub use census::{
    entangled_zero_modes, kernel_census, sectors_csv, totals_csv, CountReport, SectorCount,
};
pub use patterns::ForbiddenPatternSet;
pub use series::{series_coefficients, SeriesId, SeriesSpec};
pub use sis::{sis_kernel_membership, sis_zero_census, MembershipReport, SisCensus, SisGroup};

use crate::error::{Error, Result};
use crate::susy::{ChainModel, LocalChargeSet, SiteClass};
use crate::tensor::{chain_dim, re, ChainBasisState, SparseOperator, C64};

/// Largest number of states [`product_zero_modes`] will materialise.
pub const MAX_ENUMERATION: u64 = 1 << 22;

pub fn count_product(model: &dyn ChainModel, n_sites: usize) -> Result<BigUint> {
    model.count_product(n_sites)
}

/// All product zero modes as words over the model's local states, sorted
/// lexicographically by local-state index.
pub fn product_zero_modes(model: &dyn ChainModel, n_sites: usize) -> Result<Vec<ChainBasisState>> {
    if n_sites == 0 {
        return Err(Error::invalid("chain needs at least one site"));
    }
    let rule = model.product_rule()?;
    let classes = model.local().classes();
    let total = rule.count_words(n_sites, &classes);
    if total > BigUint::from(MAX_ENUMERATION) {
        return Err(Error::Capacity {
            what: "product zero-mode enumeration",
            requested: total.to_u128().unwrap_or(u128::MAX),
            limit: MAX_ENUMERATION as u128,
        });
    }
    let d = classes.len();
    let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
    let mut digits: Vec<usize> = Vec::with_capacity(n_sites);
    let mut word: Vec<SiteClass> = Vec::with_capacity(n_sites);
    // Depth-first in increasing local index yields lexicographic order.
    fn walk(
        rule: &ForbiddenPatternSet,
        classes: &[SiteClass],
        n_sites: usize,
        digits: &mut Vec<usize>,
        word: &mut Vec<SiteClass>,
        out: &mut Vec<ChainBasisState>,
    ) {
        if digits.len() == n_sites {
            out.push(ChainBasisState::new(classes.len(), digits.clone()).expect("digits in range"));
            return;
        }
        for (k, &c) in classes.iter().enumerate() {
            if rule.admits_append(word, c) {
                digits.push(k);
                word.push(c);
                walk(rule, classes, n_sites, digits, word, out);
                digits.pop();
                word.pop();
            }
        }
    }
    debug_assert_eq!(d, model.local_dim());
    walk(&rule, &classes, n_sites, &mut digits, &mut word, &mut out);
    Ok(out)
}

/// The tensor product of the local state vectors named by `state`.
pub fn product_vector(local: &LocalChargeSet, state: &ChainBasisState) -> Result<DVector<C64>> {
    if state.local_dim() != local.dim() {
        return Err(Error::mismatch(
            "state alphabet differs from local dimension",
        ));
    }
    chain_dim(local.dim(), state.n_sites())?;
    let mut v = DVector::from_element(1, re(1.0));
    for &k in state.digits() {
        v = v.kronecker(&local.states[k].vector);
    }
    Ok(v)
}

/// Largest `‖Q v‖` and `‖Q† v‖` over the enumerated product zero modes.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnihilationCheck {
    pub n_sites: usize,
    pub count: usize,
    pub max_q: f64,
    pub max_q_dag: f64,
}

pub fn check_annihilation(model: &dyn ChainModel, n_sites: usize) -> Result<AnnihilationCheck> {
    let states = product_zero_modes(model, n_sites)?;
    let q = model.supercharge(n_sites)?;
    let (max_q, max_q_dag) = if model.local().is_computational() {
        column_and_row_norms(&q, &states)
    } else {
        let q_dag = q.adjoint();
        states
            .par_iter()
            .map(|s| {
                let v = product_vector(model.local(), s)?;
                Ok((q.apply(&v)?.norm(), q_dag.apply(&v)?.norm()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold((0.0, 0.0), |(a, b), (x, y)| {
                (f64::max(a, x), f64::max(b, y))
            })
    };
    Ok(AnnihilationCheck {
        n_sites,
        count: states.len(),
        max_q,
        max_q_dag,
    })
}

// For basis vectors, ‖Q e_w‖ is the column norm and ‖Q† e_w‖ the row norm.
fn column_and_row_norms(q: &SparseOperator, states: &[ChainBasisState]) -> (f64, f64) {
    let mut col = vec![0.0; q.n_cols()];
    let mut row = vec![0.0; q.n_rows()];
    for (r, c, v) in q.entries() {
        col[c] += v.norm_sqr();
        row[r] += v.norm_sqr();
    }
    states.iter().fold((0.0, 0.0), |(a, b), s| {
        let w = s.rank();
        (a.max(col[w].sqrt()), b.max(row[w].sqrt()))
    })
}
