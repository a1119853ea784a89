use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::global::{theta_product, window_sum};
use super::local::{doubled_q, qubit_q, sis_q, LocalChargeSet, SiteClass};
use crate::counting;
use crate::error::{Error, Result};
use crate::tensor::{ProductOperator, SparseOperator};
use crate::zeromodes::ForbiddenPatternSet;

/// Optional integer parameters of a chain model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelParams {
    /// Index multiplicity of doubled sites.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Local dimension of an SIS site.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Boson-block size of an SIS site.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

/// A supersymmetric open chain: local charges plus the recipe assembling
/// them into a global supercharge.
pub trait ChainModel: Send + Sync + fmt::Debug {
    /// Registry name.
    fn name(&self) -> &'static str;
    fn params(&self) -> ModelParams;
    fn local(&self) -> &LocalChargeSet;

    fn local_dim(&self) -> usize {
        self.local().dim()
    }

    fn validate_sites(&self, n_sites: usize) -> Result<()> {
        if n_sites < 3 {
            return Err(Error::invalid(format!(
                "{} needs at least 3 sites, got {n_sites}",
                self.name()
            )));
        }
        Ok(())
    }

    /// `Σ_j θ_j θ_{j+1} θ_{j+2}` unless the model says otherwise.
    fn supercharge(&self, n_sites: usize) -> Result<SparseOperator> {
        self.validate_sites(n_sites)?;
        let local = self.local();
        window_sum(local.dim(), n_sites, 0..n_sites - 2, |j| {
            theta_product(local, j, n_sites)?
                .compose(&theta_product(local, j + 1, n_sites)?)?
                .compose(&theta_product(local, j + 2, n_sites)?)
        })
    }

    /// Class-level rule selecting the product zero modes.
    fn product_rule(&self) -> Result<ForbiddenPatternSet>;

    /// Closed-form product zero-mode count.
    fn count_product(&self, n_sites: usize) -> Result<BigUint>;
}

#[derive(Debug, Clone)]
pub struct QubitFibChain {
    local: LocalChargeSet,
}

impl QubitFibChain {
    pub fn new() -> Self {
        QubitFibChain {
            local: LocalChargeSet::from_q(qubit_q()).expect("qubit charge is valid"),
        }
    }
}

impl Default for QubitFibChain {
    fn default() -> Self {
        Self::new()
    }
}

impl ChainModel for QubitFibChain {
    fn name(&self) -> &'static str {
        "qubit-fib"
    }

    fn params(&self) -> ModelParams {
        ModelParams::default()
    }

    fn local(&self) -> &LocalChargeSet {
        &self.local
    }

    fn product_rule(&self) -> Result<ForbiddenPatternSet> {
        Ok(ForbiddenPatternSet::uniform_triples())
    }

    fn count_product(&self, n_sites: usize) -> Result<BigUint> {
        Ok(counting::qubit_product(n_sites))
    }
}

/// Sites of dimension `2m` carrying `m` boson/fermion pairs.
#[derive(Debug, Clone)]
pub struct DoubledJkChain {
    m: usize,
    local: LocalChargeSet,
}

impl DoubledJkChain {
    pub fn new(m: usize) -> Result<Self> {
        Ok(DoubledJkChain {
            m,
            local: LocalChargeSet::from_q(doubled_q(m)?)?,
        })
    }
}

impl ChainModel for DoubledJkChain {
    fn name(&self) -> &'static str {
        "jk-chain"
    }

    fn params(&self) -> ModelParams {
        ModelParams {
            m: Some(self.m),
            ..ModelParams::default()
        }
    }

    fn local(&self) -> &LocalChargeSet {
        &self.local
    }

    fn product_rule(&self) -> Result<ForbiddenPatternSet> {
        Ok(ForbiddenPatternSet::uniform_triples())
    }

    fn count_product(&self, n_sites: usize) -> Result<BigUint> {
        Ok(counting::index_dressed_product(self.m, n_sites))
    }
}

/// Doubled sites with the projector-dressed supercharge
/// `Σ_j F_j θ_{j+1} F_{j+2} + B_j θ†_{j+1} B_{j+2}`.
#[derive(Debug, Clone)]
pub struct IsingChain {
    m: usize,
    local: LocalChargeSet,
}

impl IsingChain {
    pub fn new(m: usize) -> Result<Self> {
        Ok(IsingChain {
            m,
            local: LocalChargeSet::from_q(doubled_q(m)?)?,
        })
    }
}

impl ChainModel for IsingChain {
    fn name(&self) -> &'static str {
        "ising-chain"
    }

    fn params(&self) -> ModelParams {
        ModelParams {
            m: Some(self.m),
            ..ModelParams::default()
        }
    }

    fn local(&self) -> &LocalChargeSet {
        &self.local
    }

    fn supercharge(&self, n_sites: usize) -> Result<SparseOperator> {
        self.validate_sites(n_sites)?;
        let local = &self.local;
        let d = local.dim();
        let projector_at = |m: &nalgebra::DMatrix<_>, site: usize| -> Result<ProductOperator> {
            let mut p = ProductOperator::identity(d, n_sites);
            p.set_factor(site, m.clone())?;
            Ok(p)
        };
        let fermion = window_sum(d, n_sites, 0..n_sites - 2, |j| {
            projector_at(&local.fermion_projector, j)?
                .compose(&theta_product(local, j + 1, n_sites)?)?
                .compose(&projector_at(&local.fermion_projector, j + 2)?)
        })?;
        let boson = window_sum(d, n_sites, 0..n_sites - 2, |j| {
            projector_at(&local.boson_projector, j)?
                .compose(&theta_product(local, j + 1, n_sites)?.adjoint())?
                .compose(&projector_at(&local.boson_projector, j + 2)?)
        })?;
        fermion.try_add(&boson)
    }

    fn product_rule(&self) -> Result<ForbiddenPatternSet> {
        Ok(ForbiddenPatternSet::pair_aligned())
    }

    fn count_product(&self, n_sites: usize) -> Result<BigUint> {
        Ok(counting::ising_product(self.m, n_sites))
    }
}

/// Qubit sites with windows `θ_{2j} θ†_{2j+1} θ_{2j+2}` on odd-length chains.
#[derive(Debug, Clone)]
pub struct NicolaiChain {
    local: LocalChargeSet,
}

impl NicolaiChain {
    pub fn new() -> Self {
        NicolaiChain {
            local: LocalChargeSet::from_q(qubit_q()).expect("qubit charge is valid"),
        }
    }
}

impl Default for NicolaiChain {
    fn default() -> Self {
        Self::new()
    }
}

impl ChainModel for NicolaiChain {
    fn name(&self) -> &'static str {
        "nicolai"
    }

    fn params(&self) -> ModelParams {
        ModelParams::default()
    }

    fn local(&self) -> &LocalChargeSet {
        &self.local
    }

    fn validate_sites(&self, n_sites: usize) -> Result<()> {
        if n_sites < 3 || n_sites.is_multiple_of(2) {
            return Err(Error::invalid(format!(
                "nicolai needs an odd number of sites ≥ 3, got {n_sites}"
            )));
        }
        Ok(())
    }

    fn supercharge(&self, n_sites: usize) -> Result<SparseOperator> {
        self.validate_sites(n_sites)?;
        let local = &self.local;
        window_sum(local.dim(), n_sites, (0..n_sites - 2).step_by(2), |j| {
            theta_product(local, j, n_sites)?
                .compose(&theta_product(local, j + 1, n_sites)?.adjoint())?
                .compose(&theta_product(local, j + 2, n_sites)?)
        })
    }

    fn product_rule(&self) -> Result<ForbiddenPatternSet> {
        Err(Error::Unsupported(
            "nicolai windows are not translation invariant; no product rule".into(),
        ))
    }

    fn count_product(&self, _n_sites: usize) -> Result<BigUint> {
        Err(Error::Unsupported(
            "nicolai has no product zero-mode count".into(),
        ))
    }
}

/// `n`-level sites with the rank-one SIS charge of boson-block size `r`.
#[derive(Debug, Clone)]
pub struct SisChain {
    n: usize,
    r: usize,
    local: LocalChargeSet,
}

impl SisChain {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        Ok(SisChain {
            n,
            r,
            local: LocalChargeSet::from_q(sis_q(n, r)?)?,
        })
    }
}

impl ChainModel for SisChain {
    fn name(&self) -> &'static str {
        "sis"
    }

    fn params(&self) -> ModelParams {
        ModelParams {
            n: Some(self.n),
            r: Some(self.r),
            ..ModelParams::default()
        }
    }

    fn local(&self) -> &LocalChargeSet {
        &self.local
    }

    fn product_rule(&self) -> Result<ForbiddenPatternSet> {
        Ok(ForbiddenPatternSet::uniform_triples())
    }

    fn count_product(&self, n_sites: usize) -> Result<BigUint> {
        let rule = self.product_rule()?;
        Ok(rule.count_words(n_sites, &self.local.classes()))
    }
}

/// Serializable model selector: registry name, chain length and parameters.
/// JSON form is `{kind, N, m?, n?, r?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SusyModel {
    pub kind: String,
    #[serde(rename = "N")]
    pub n_sites: usize,
    #[serde(flatten)]
    pub params: ModelParams,
}

impl SusyModel {
    pub fn new(kind: impl Into<String>, n_sites: usize, params: ModelParams) -> Self {
        SusyModel {
            kind: kind.into(),
            n_sites,
            params,
        }
    }

    pub fn of(model: &dyn ChainModel, n_sites: usize) -> Self {
        Self::new(model.name(), n_sites, model.params())
    }

    pub fn local_dim(&self) -> Result<usize> {
        Ok(self.instantiate()?.local_dim())
    }

    /// Builds the strategy from the builtin registry.
    pub fn instantiate(&self) -> Result<Box<dyn ChainModel>> {
        super::ModelRegistry::builtin().create(&self.kind, &self.params)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Site classes in basis order, for models whose local basis is computational.
pub(crate) fn computational_classes(model: &dyn ChainModel) -> Result<Vec<SiteClass>> {
    if !model.local().is_computational() {
        return Err(Error::Unsupported(format!(
            "{} local states are not computational basis vectors",
            model.name()
        )));
    }
    Ok(model.local().classes())
}
