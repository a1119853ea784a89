//! Supersymmetric chain models behind the [`ChainModel`] trait, their
//! global charges, and a name-keyed registry of model strategies.

mod global;
mod local;
mod models;

use std::collections::BTreeMap;

pub use global::{
    fermion_parity, global_supercharge, particle_hole, string_theta, theta_product, verify_susy,
    witten_index, GlobalChargeSet, WittenIndex, KERNEL_REL_TOL,
};
pub use local::{doubled_q, qubit_q, sis_q, LocalChargeSet, LocalState, SiteClass};
pub(crate) use models::computational_classes;
pub use models::{
    ChainModel, DoubledJkChain, IsingChain, ModelParams, NicolaiChain, QubitFibChain, SisChain,
    SusyModel,
};

use crate::error::{Error, Result};

pub type ModelFactory = fn(&ModelParams) -> Result<Box<dyn ChainModel>>;

struct Entry {
    summary: &'static str,
    factory: ModelFactory,
}

/// Chain-model strategies keyed by name.
pub struct ModelRegistry {
    entries: BTreeMap<String, Entry>,
}

const DEFAULT_M: usize = 2;

fn reject_params(name: &str, p: &ModelParams, allowed: &[&str]) -> Result<()> {
    let given = [("m", p.m), ("n", p.n), ("r", p.r)];
    for (key, value) in given {
        if value.is_some() && !allowed.contains(&key) {
            return Err(Error::invalid(format!("{name} takes no parameter '{key}'")));
        }
    }
    Ok(())
}

fn build_qubit(p: &ModelParams) -> Result<Box<dyn ChainModel>> {
    reject_params("qubit-fib", p, &[])?;
    Ok(Box::new(QubitFibChain::new()))
}

fn build_jk(p: &ModelParams) -> Result<Box<dyn ChainModel>> {
    reject_params("jk-chain", p, &["m"])?;
    Ok(Box::new(DoubledJkChain::new(p.m.unwrap_or(DEFAULT_M))?))
}

fn build_ising(p: &ModelParams) -> Result<Box<dyn ChainModel>> {
    reject_params("ising-chain", p, &["m"])?;
    Ok(Box::new(IsingChain::new(p.m.unwrap_or(DEFAULT_M))?))
}

fn build_nicolai(p: &ModelParams) -> Result<Box<dyn ChainModel>> {
    reject_params("nicolai", p, &[])?;
    Ok(Box::new(NicolaiChain::new()))
}

fn build_sis(p: &ModelParams) -> Result<Box<dyn ChainModel>> {
    reject_params("sis", p, &["n", "r"])?;
    match (p.n, p.r) {
        (Some(n), Some(r)) => Ok(Box::new(SisChain::new(n, r)?)),
        _ => Err(Error::invalid("sis needs both n and r")),
    }
}

impl ModelRegistry {
    pub fn empty() -> Self {
        ModelRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register("qubit-fib", "qubit chain, Σ θθθ windows", build_qubit);
        r.register(
            "jk-chain",
            "doubled sites of m boson/fermion pairs (m=2 default)",
            build_jk,
        );
        r.register(
            "ising-chain",
            "doubled sites, projector-dressed windows",
            build_ising,
        );
        r.register(
            "nicolai",
            "qubit chain, θθ†θ windows at even sites, odd N",
            build_nicolai,
        );
        r.register("sis", "SIS(n, r) qudit chain", build_sis);
        r
    }

    /// Replaces any strategy already registered under `name`.
    pub fn register(&mut self, name: &str, summary: &'static str, factory: ModelFactory) {
        self.entries
            .insert(name.to_string(), Entry { summary, factory });
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn summary(&self, name: &str) -> Option<&'static str> {
        self.entries.get(name).map(|e| e.summary)
    }

    pub fn create(&self, name: &str, params: &ModelParams) -> Result<Box<dyn ChainModel>> {
        let entry = self.entries.get(name).ok_or_else(|| Error::Unknown {
            kind: "chain model",
            name: name.to_string(),
        })?;
        (entry.factory)(params)
    }
}

impl Default for ModelRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let r = ModelRegistry::builtin();
        let names: Vec<_> = r.names().collect();
        assert_eq!(
            names,
            vec!["ising-chain", "jk-chain", "nicolai", "qubit-fib", "sis"]
        );
    }

    #[test]
    fn unknown_and_bad_params() {
        let r = ModelRegistry::builtin();
        assert!(matches!(
            r.create("nope", &ModelParams::default()),
            Err(Error::Unknown { .. })
        ));
        let m = ModelParams {
            m: Some(3),
            ..ModelParams::default()
        };
        assert!(r.create("qubit-fib", &m).is_err());
        assert!(r.create("sis", &ModelParams::default()).is_err());
    }

    #[test]
    fn descriptor_json_roundtrip() {
        let model = SusyModel::new(
            "sis",
            4,
            ModelParams {
                n: Some(3),
                r: Some(1),
                ..ModelParams::default()
            },
        );
        let json = model.to_json().unwrap();
        assert_eq!(json, r#"{"kind":"sis","N":4,"n":3,"r":1}"#);
        assert_eq!(SusyModel::from_json(&json).unwrap(), model);
        assert_eq!(model.local_dim().unwrap(), 3);
        let q = SusyModel::from_json(r#"{"kind":"qubit-fib","N":5}"#).unwrap();
        assert_eq!(q.instantiate().unwrap().name(), "qubit-fib");
    }

    #[test]
    fn local_dims() {
        let r = ModelRegistry::builtin();
        let dim = |name: &str, p: ModelParams| r.create(name, &p).unwrap().local_dim();
        assert_eq!(dim("qubit-fib", ModelParams::default()), 2);
        assert_eq!(dim("jk-chain", ModelParams::default()), 4);
        assert_eq!(
            dim(
                "ising-chain",
                ModelParams {
                    m: Some(3),
                    ..Default::default()
                }
            ),
            6
        );
        assert_eq!(dim("nicolai", ModelParams::default()), 2);
    }
}
