use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{product_vector, product_zero_modes};
use crate::counting;
use crate::error::Result;
use crate::susy::{ChainModel, SisChain, SiteClass};
use crate::tensor::{enumerate_basis, ChainBasisState};

/// Product zero modes sharing one set of zero-mode sites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SisGroup {
    pub zero_sites: Vec<usize>,
    pub enumerated: u64,
    /// `(#local zero modes)^{#z} · ∏ f_P(segment)` over the b/f segments.
    pub predicted: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SisCensus {
    pub n: usize,
    pub r: usize,
    pub n_sites: usize,
    pub groups: Vec<SisGroup>,
    pub total: u64,
}

impl SisCensus {
    pub fn all_groups_match(&self) -> bool {
        self.groups
            .iter()
            .all(|g| BigUint::from(g.enumerated) == g.predicted)
    }
}

fn segment_prediction(zero_choices: usize, n_sites: usize, zero_sites: &[usize]) -> BigUint {
    let mut result = BigUint::from(zero_choices).pow(zero_sites.len() as u32);
    let mut start = 0;
    for &z in zero_sites.iter().chain(std::iter::once(&n_sites)) {
        result *= counting::qubit_product(z - start);
        start = z + 1;
    }
    result
}

/// Groups the SIS product zero modes by zero-site pattern. Every pattern of
/// zero sites appears, including those with an empty group.
pub fn sis_zero_census(n: usize, r: usize, n_sites: usize) -> Result<SisCensus> {
    let model = SisChain::new(n, r)?;
    let classes = model.local().classes();
    let zero_choices = model.local().count(SiteClass::Zero);
    let mut groups: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for mask in 0u64..(1 << n_sites) {
        if zero_choices > 0 || mask == 0 {
            let sites: Vec<usize> = (0..n_sites).filter(|j| mask >> j & 1 == 1).collect();
            groups.insert(sites, 0);
        }
    }
    let states = product_zero_modes(&model, n_sites)?;
    for s in &states {
        let sites: Vec<usize> = s
            .digits()
            .iter()
            .enumerate()
            .filter(|(_, &k)| classes[k] == SiteClass::Zero)
            .map(|(j, _)| j)
            .collect();
        *groups.entry(sites).or_default() += 1;
    }
    Ok(SisCensus {
        n,
        r,
        n_sites,
        total: states.len() as u64,
        groups: groups
            .into_iter()
            .map(|(zero_sites, enumerated)| SisGroup {
                predicted: segment_prediction(zero_choices, n_sites, &zero_sites),
                zero_sites,
                enumerated,
            })
            .collect(),
    })
}

/// Brute-force membership: which local-state product words are annihilated
/// by `Q` and `Q†`, compared with the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub candidates: usize,
    pub annihilated: BTreeSet<ChainBasisState>,
    pub enumerated: BTreeSet<ChainBasisState>,
}

impl MembershipReport {
    pub fn agrees(&self) -> bool {
        self.annihilated == self.enumerated
    }
}

pub fn sis_kernel_membership(
    n: usize,
    r: usize,
    n_sites: usize,
    tol: f64,
) -> Result<MembershipReport> {
    let model = SisChain::new(n, r)?;
    // Chains shorter than one window carry Q = 0.
    let charges = if n_sites >= 3 {
        let q = model.supercharge(n_sites)?;
        Some((q.adjoint(), q))
    } else {
        None
    };
    let words: Vec<ChainBasisState> = enumerate_basis(model.local_dim(), n_sites)?.collect();
    let flags: Vec<bool> = words
        .par_iter()
        .map(|w| match &charges {
            None => Ok(true),
            Some((q_dag, q)) => {
                let v = product_vector(model.local(), w)?;
                Ok(q.apply(&v)?.norm() <= tol && q_dag.apply(&v)?.norm() <= tol)
            }
        })
        .collect::<Result<_>>()?;
    let annihilated = words
        .iter()
        .zip(&flags)
        .filter(|(_, &ok)| ok)
        .map(|(w, _)| w.clone())
        .collect();
    Ok(MembershipReport {
        candidates: words.len(),
        annihilated,
        enumerated: product_zero_modes(&model, n_sites)?.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_site_has_three_states() {
        let c = sis_zero_census(3, 1, 1).unwrap();
        assert_eq!(c.total, 3);
        assert!(c.all_groups_match());
    }

    #[test]
    fn one_zero_at_site_two() {
        // 0-based site 2 splits four sites into segments of length 2 and 1.
        let c = sis_zero_census(3, 1, 4).unwrap();
        let g = c.groups.iter().find(|g| g.zero_sites == [2]).unwrap();
        assert_eq!(g.enumerated, 8);
        let wider = sis_zero_census(4, 1, 4).unwrap();
        let gw = wider.groups.iter().find(|g| g.zero_sites == [2]).unwrap();
        assert_eq!(gw.enumerated, 16);
    }

    #[test]
    fn membership_small() {
        let m = sis_kernel_membership(3, 1, 3, 1e-10).unwrap();
        assert_eq!(m.candidates, 27);
        assert!(m.agrees());
    }
}
