//! Multiplicity-free anyon models: fusion rules, single-outcome fusion
//! bases, and pentagon/hexagon checks for supplied F and R data.
//!
//! A fusion basis for `N` copies of the generating species `g` is the label
//! sequence `c_1 … c_{N−2}` with `c_0 = g`, `c_k ∈ c_{k−1} × g`, and the
//! outcome in `c_{N−2} × g`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::counting;
use crate::error::{Error, Result};
use crate::tensor::{re, C64};

pub type Species = usize;

/// Largest fusion basis [`fusion_basis`] will materialise.
pub const MAX_FUSION_BASIS: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnyonKind {
    /// Level 2: {1, σ, ψ}.
    Ising,
    /// Level 3 integer labels: {1, τ}.
    Fibonacci,
    /// Level 4 integer labels: {1, τ, μ}.
    JonesKauffman,
}

impl AnyonKind {
    pub fn level(self) -> u8 {
        match self {
            AnyonKind::Ising => 2,
            AnyonKind::Fibonacci => 3,
            AnyonKind::JonesKauffman => 4,
        }
    }

    pub fn from_level(k: u8) -> Result<Self> {
        match k {
            2 => Ok(AnyonKind::Ising),
            3 => Ok(AnyonKind::Fibonacci),
            4 => Ok(AnyonKind::JonesKauffman),
            _ => Err(Error::Unsupported(format!("anyon level k={k}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AnyonKind::Ising => "ising",
            AnyonKind::Fibonacci => "fibonacci",
            AnyonKind::JonesKauffman => "jones-kauffman",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "ising" | "ising-anyon" => Ok(AnyonKind::Ising),
            "fibonacci" | "fib" | "fibonacci-anyon" => Ok(AnyonKind::Fibonacci),
            "jones-kauffman" | "jk" | "jk-anyon" => Ok(AnyonKind::JonesKauffman),
            _ => Err(Error::Unknown {
                kind: "anyon model",
                name: name.to_string(),
            }),
        }
    }
}

/// Species with a fusion table `a × b → channels`. Channel lists are sorted;
/// a repeated channel would mean multiplicity above one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnyonModel {
    name: String,
    kind: Option<AnyonKind>,
    species: Vec<String>,
    vacuum: Species,
    generator: Species,
    fusion: Vec<Vec<Vec<Species>>>,
}

/// `(a, b, channels)` entries of a fusion table, `a ≤ b`, vacuum rows implied.
type FusionRules = &'static [(usize, usize, &'static [usize])];

impl AnyonModel {
    pub fn builtin(kind: AnyonKind) -> Self {
        let (species, rules): (&[&str], FusionRules) = match kind {
            AnyonKind::Fibonacci => (&["1", "τ"], &[(1, 1, &[0, 1])]),
            AnyonKind::JonesKauffman => (
                &["1", "τ", "μ"],
                &[(1, 1, &[0, 1, 2]), (1, 2, &[1]), (2, 2, &[0])],
            ),
            AnyonKind::Ising => (
                &["1", "σ", "ψ"],
                &[(1, 1, &[0, 2]), (1, 2, &[1]), (2, 2, &[0])],
            ),
        };
        let n = species.len();
        let mut fusion = vec![vec![Vec::new(); n]; n];
        for (a, row) in fusion.iter_mut().enumerate() {
            row[0] = vec![a];
        }
        for (a, cell) in fusion[0].iter_mut().enumerate() {
            *cell = vec![a];
        }
        for &(a, b, ch) in rules {
            fusion[a][b] = ch.to_vec();
            fusion[b][a] = ch.to_vec();
        }
        AnyonModel {
            name: kind.name().to_string(),
            kind: Some(kind),
            species: species.iter().map(|s| s.to_string()).collect(),
            vacuum: 0,
            generator: 1,
            fusion,
        }
    }

    pub fn builtin_level(k: u8) -> Result<Self> {
        Ok(Self::builtin(AnyonKind::from_level(k)?))
    }

    /// A model from an explicit table; pairs not listed fuse to nothing.
    /// The table is taken as given (no symmetrisation), so axiom checks
    /// see exactly what the caller wrote.
    pub fn custom(
        name: impl Into<String>,
        species: Vec<String>,
        vacuum: Species,
        generator: Species,
        table: &[(Species, Species, Vec<Species>)],
    ) -> Result<Self> {
        let n = species.len();
        if vacuum >= n || generator >= n {
            return Err(Error::invalid("vacuum and generator must be species"));
        }
        let mut fusion = vec![vec![Vec::new(); n]; n];
        for (a, b, ch) in table {
            if *a >= n || *b >= n || ch.iter().any(|&c| c >= n) {
                return Err(Error::invalid("fusion table names an unknown species"));
            }
            let mut ch = ch.clone();
            ch.sort_unstable();
            fusion[*a][*b] = ch;
        }
        Ok(AnyonModel {
            name: name.into(),
            kind: None,
            species,
            vacuum,
            generator,
            fusion,
        })
    }

    /// Copy of this model with one table entry replaced; drops the builtin
    /// identity so counts fall back to the transfer matrix.
    pub fn with_channels(&self, a: Species, b: Species, channels: Vec<Species>) -> Result<Self> {
        let n = self.species.len();
        if a >= n || b >= n || channels.iter().any(|&c| c >= n) {
            return Err(Error::invalid("fusion table names an unknown species"));
        }
        let mut m = self.clone();
        let mut channels = channels;
        channels.sort_unstable();
        m.fusion[a][b] = channels;
        m.kind = None;
        m.name = format!("{}-modified", self.name);
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Option<AnyonKind> {
        self.kind
    }

    pub fn n_species(&self) -> usize {
        self.species.len()
    }

    pub fn species(&self) -> &[String] {
        &self.species
    }

    pub fn vacuum(&self) -> Species {
        self.vacuum
    }

    pub fn generator(&self) -> Species {
        self.generator
    }

    pub fn label(&self, s: Species) -> &str {
        &self.species[s]
    }

    pub fn species_index(&self, label: &str) -> Result<Species> {
        self.species
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| Error::Unknown {
                kind: "species",
                name: label.to_string(),
            })
    }

    pub fn channels(&self, a: Species, b: Species) -> &[Species] {
        &self.fusion[a][b]
    }

    pub fn multiplicity(&self, a: Species, b: Species, c: Species) -> usize {
        self.fusion[a][b].iter().filter(|&&x| x == c).count()
    }

    pub fn fuses(&self, a: Species, b: Species, c: Species) -> bool {
        self.fusion[a][b].contains(&c)
    }

    /// Ordered label pairs `(x, y)` with `y ∈ x × generator`.
    pub fn allowed_pairs(&self) -> Vec<(Species, Species)> {
        let n = self.n_species();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.fuses(x, self.generator, y))
            .collect()
    }

    pub fn descriptor_json(&self) -> serde_json::Value {
        let n = self.n_species();
        let fusion: Vec<_> = (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .map(|(a, b)| {
                json!({
                    "a": self.label(a),
                    "b": self.label(b),
                    "channels": self.channels(a, b).iter().map(|&c| self.label(c)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let allowed: Vec<_> = self
            .allowed_pairs()
            .into_iter()
            .map(|(x, y)| format!("{}{}", self.label(x), self.label(y)))
            .collect();
        json!({
            "name": self.name,
            "level": self.kind.map(AnyonKind::level),
            "species": self.species,
            "vacuum": self.label(self.vacuum),
            "generator": self.label(self.generator),
            "fusion": fusion,
            "allowed_pairs": allowed,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionAxiomReport {
    pub violations: Vec<String>,
}

impl FusionAxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_fusion_axioms(model: &AnyonModel) -> FusionAxiomReport {
    let n = model.n_species();
    let l = |s: Species| model.label(s).to_string();
    let mut v = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if model.multiplicity(a, b, c) > 1 {
                    v.push(format!(
                        "multiplicity of {} in {}×{} exceeds 1",
                        l(c),
                        l(a),
                        l(b)
                    ));
                }
                if model.multiplicity(a, b, c) != model.multiplicity(b, a, c) {
                    v.push(format!("{}×{} ≠ {}×{} at {}", l(a), l(b), l(b), l(a), l(c)));
                }
            }
        }
        for (x, y) in [(model.vacuum, a), (a, model.vacuum)] {
            if model.channels(x, y) != [a] {
                v.push(format!("vacuum is not neutral on {}", l(a)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let left: usize = (0..n)
                        .map(|e| model.multiplicity(a, b, e) * model.multiplicity(e, c, d))
                        .sum();
                    let right: usize = (0..n)
                        .map(|e| model.multiplicity(a, e, d) * model.multiplicity(b, c, e))
                        .sum();
                    if left != right {
                        v.push(format!(
                            "({}×{})×{} → {}: {left} ≠ {right}",
                            l(a),
                            l(b),
                            l(c),
                            l(d)
                        ));
                    }
                }
            }
        }
    }
    v.dedup();
    FusionAxiomReport { violations: v }
}

/// Internal labels of one fusion tree with a fixed outcome.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionSequence {
    model: String,
    labels: Vec<Species>,
    outcome: Species,
}

impl FusionSequence {
    pub fn new(model: &AnyonModel, labels: Vec<Species>, outcome: Species) -> Result<Self> {
        let seq = FusionSequence {
            model: model.name().to_string(),
            labels,
            outcome,
        };
        seq.validate(model)?;
        Ok(seq)
    }

    /// Parses a string of species labels, e.g. `"1ττ"`.
    pub fn parse(model: &AnyonModel, word: &str, outcome: Species) -> Result<Self> {
        let labels = word
            .chars()
            .map(|ch| model.species_index(&ch.to_string()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(model, labels, outcome)
    }

    pub fn validate(&self, model: &AnyonModel) -> Result<()> {
        if self.model != model.name() {
            return Err(Error::invalid(format!(
                "sequence belongs to '{}', not '{}'",
                self.model,
                model.name()
            )));
        }
        let n = model.n_species();
        if self.outcome >= n || self.labels.iter().any(|&x| x >= n) {
            return Err(Error::invalid("label is not a species"));
        }
        let g = model.generator();
        let mut prev = g;
        for (k, &x) in self.labels.iter().enumerate() {
            if !model.fuses(prev, g, x) {
                return Err(Error::Forbidden(format!(
                    "{}{} at label {}",
                    model.label(prev),
                    model.label(x),
                    k + 1
                )));
            }
            prev = x;
        }
        if !model.fuses(prev, g, self.outcome) {
            return Err(Error::Forbidden(format!(
                "outcome {} unreachable from {}",
                model.label(self.outcome),
                model.label(prev)
            )));
        }
        Ok(())
    }

    pub fn model(&self) -> &str {
        &self.model
    }

    pub fn labels(&self) -> &[Species] {
        &self.labels
    }

    pub fn outcome(&self) -> Species {
        self.outcome
    }

    pub fn n_anyons(&self) -> usize {
        self.labels.len() + 2
    }

    pub fn render(&self, model: &AnyonModel) -> String {
        self.labels.iter().map(|&x| model.label(x)).collect()
    }
}

fn check_fusion_args(model: &AnyonModel, n_anyons: usize, outcome: Species) -> Result<()> {
    if n_anyons < 2 {
        return Err(Error::invalid("fusion trees need at least two anyons"));
    }
    if outcome >= model.n_species() {
        return Err(Error::OutOfRange {
            what: "species",
            index: outcome,
            bound: model.n_species(),
        });
    }
    Ok(())
}

/// Basis of the `n_anyons` fusion space with the given outcome, in
/// lexicographic species order. Unreachable outcomes give an empty list.
pub fn fusion_basis(
    model: &AnyonModel,
    n_anyons: usize,
    outcome: Species,
) -> Result<Vec<FusionSequence>> {
    check_fusion_args(model, n_anyons, outcome)?;
    let count = fusion_dim_transfer(model, n_anyons, outcome)?;
    if count > BigUint::from(MAX_FUSION_BASIS) {
        return Err(Error::Capacity {
            what: "fusion basis",
            requested: count.to_u128().unwrap_or(u128::MAX),
            limit: MAX_FUSION_BASIS as u128,
        });
    }
    let g = model.generator();
    let len = n_anyons - 2;
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(len);
    fn walk(
        model: &AnyonModel,
        g: Species,
        len: usize,
        outcome: Species,
        labels: &mut Vec<Species>,
        out: &mut Vec<FusionSequence>,
    ) {
        let prev = labels.last().copied().unwrap_or(g);
        if labels.len() == len {
            if model.fuses(prev, g, outcome) {
                out.push(FusionSequence {
                    model: model.name().to_string(),
                    labels: labels.clone(),
                    outcome,
                });
            }
            return;
        }
        for x in 0..model.n_species() {
            if model.fuses(prev, g, x) {
                labels.push(x);
                walk(model, g, len, outcome, labels, out);
                labels.pop();
            }
        }
    }
    walk(model, g, len, outcome, &mut labels, &mut out);
    Ok(out)
}

/// Fusion-space dimension. Builtin models use their closed recursions;
/// other tables use [`fusion_dim_transfer`].
pub fn fusion_dim(model: &AnyonModel, n_anyons: usize, outcome: Species) -> Result<BigUint> {
    check_fusion_args(model, n_anyons, outcome)?;
    let n = n_anyons;
    let two = BigUint::from(2u32);
    Ok(match model.kind() {
        Some(AnyonKind::Fibonacci) => match outcome {
            1 => counting::fibonacci(n),
            _ => counting::fibonacci(n - 1),
        },
        Some(AnyonKind::JonesKauffman) => match outcome {
            1 => counting::jk_fusion(n),
            _ => counting::jk_fusion(n - 1),
        },
        Some(AnyonKind::Ising) => match (outcome, n % 2) {
            (1, 1) => two.pow(((n - 1) / 2) as u32),
            (0 | 2, 0) => two.pow(((n - 2) / 2) as u32),
            _ => BigUint::zero(),
        },
        None => fusion_dim_transfer(model, n, outcome)?,
    })
}

/// Dimension by propagating label multiplicities through the fusion table.
pub fn fusion_dim_transfer(
    model: &AnyonModel,
    n_anyons: usize,
    outcome: Species,
) -> Result<BigUint> {
    check_fusion_args(model, n_anyons, outcome)?;
    let g = model.generator();
    let n = model.n_species();
    let mut weights = vec![BigUint::zero(); n];
    weights[g] = BigUint::from(1u32);
    // After k steps, weights[x] counts trees whose first k+1 anyons fuse to x.
    for _ in 1..n_anyons {
        let mut next = vec![BigUint::zero(); n];
        for (x, w) in weights.iter().enumerate() {
            for (y, slot) in next.iter_mut().enumerate() {
                let m = model.multiplicity(x, g, y);
                if m > 0 {
                    *slot += w * BigUint::from(m);
                }
            }
        }
        weights = next;
    }
    Ok(weights.swap_remove(outcome))
}

/// F-matrix entries `(F^{abc}_d)_{ef}`, with `e` the `(ab)` channel and `f`
/// the `(bc)` channel, and R scalars `R^{ab}_c`. Tuples touching the vacuum
/// are trivial and need no entries.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FRData {
    f: BTreeMap<[Species; 4], BTreeMap<(Species, Species), C64>>,
    r: BTreeMap<[Species; 3], C64>,
}

impl FRData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_f(&mut self, abcd: [Species; 4], e: Species, f: Species, value: C64) {
        self.f.entry(abcd).or_default().insert((e, f), value);
    }

    pub fn set_r(&mut self, a: Species, b: Species, c: Species, value: C64) {
        self.r.insert([a, b, c], value);
    }

    /// Fibonacci data: `F^{τττ}_τ = [[a, b], [b, −a]]` on channels (1, τ),
    /// `F^{τττ}_1 = 1`, `R^{ττ}_1 = r_vacuum`, `R^{ττ}_τ = r_tau`.
    pub fn fibonacci(a: C64, b: C64, r_vacuum: C64, r_tau: C64) -> Self {
        let mut fr = Self::new();
        let t = 1;
        fr.set_f([t, t, t, t], 0, 0, a);
        fr.set_f([t, t, t, t], 0, t, b);
        fr.set_f([t, t, t, t], t, 0, b);
        fr.set_f([t, t, t, t], t, t, -a);
        fr.set_f([t, t, t, 0], t, t, re(1.0));
        fr.set_r(t, t, 0, r_vacuum);
        fr.set_r(t, t, t, r_tau);
        fr
    }

    /// `None` when the labels are not admissible.
    pub fn f_entry(
        &self,
        model: &AnyonModel,
        [a, b, c, d]: [Species; 4],
        e: Species,
        f: Species,
    ) -> Result<Option<C64>> {
        let admissible = model.fuses(a, b, e)
            && model.fuses(e, c, d)
            && model.fuses(b, c, f)
            && model.fuses(a, f, d);
        if !admissible {
            return Ok(None);
        }
        let v = model.vacuum();
        if a == v || b == v || c == v {
            return Ok(Some(re(1.0)));
        }
        let label = |s: Species| model.label(s).to_string();
        self.f
            .get(&[a, b, c, d])
            .and_then(|m| m.get(&(e, f)))
            .copied()
            .map(Some)
            .ok_or_else(|| {
                Error::MissingData(format!(
                    "F^{{{}{}{}}}_{} entry ({},{})",
                    label(a),
                    label(b),
                    label(c),
                    label(d),
                    label(e),
                    label(f)
                ))
            })
    }

    pub fn r_entry(
        &self,
        model: &AnyonModel,
        a: Species,
        b: Species,
        c: Species,
    ) -> Result<Option<C64>> {
        if !model.fuses(a, b, c) {
            return Ok(None);
        }
        if a == model.vacuum() || b == model.vacuum() {
            return Ok(Some(re(1.0)));
        }
        self.r.get(&[a, b, c]).copied().map(Some).ok_or_else(|| {
            Error::MissingData(format!(
                "R^{{{}{}}}_{}",
                model.label(a),
                model.label(b),
                model.label(c)
            ))
        })
    }

    /// Largest `‖F F† − I‖` over all admissible F blocks.
    pub fn f_unitarity_residual(&self, model: &AnyonModel) -> Result<f64> {
        let n = model.n_species();
        let mut worst: f64 = 0.0;
        for abcd in tuples::<4>(n) {
            let [a, b, c, d] = abcd;
            let es: Vec<Species> = (0..n)
                .filter(|&e| model.fuses(a, b, e) && model.fuses(e, c, d))
                .collect();
            let fs: Vec<Species> = (0..n)
                .filter(|&f| model.fuses(b, c, f) && model.fuses(a, f, d))
                .collect();
            if es.is_empty() && fs.is_empty() {
                continue;
            }
            if es.len() != fs.len() {
                return Ok(f64::INFINITY);
            }
            let mut m = DMatrix::<C64>::zeros(es.len(), fs.len());
            for (i, &e) in es.iter().enumerate() {
                for (j, &f) in fs.iter().enumerate() {
                    m[(i, j)] = self.f_entry(model, abcd, e, f)?.unwrap_or_default();
                }
            }
            let id = DMatrix::<C64>::identity(es.len(), es.len());
            worst = worst.max((&m * m.adjoint() - id).norm());
        }
        Ok(worst)
    }
}

fn tuples<const K: usize>(n: usize) -> impl Iterator<Item = [Species; K]> {
    (0..n.pow(K as u32)).map(move |mut i| {
        let mut t = [0; K];
        for slot in t.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        t
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub max_residual: f64,
    /// Label tuples where at least one side had a term.
    pub tuples_checked: usize,
}

fn product(xs: &[Option<C64>]) -> Option<C64> {
    xs.iter().try_fold(re(1.0), |acc, x| x.map(|x| acc * x))
}

fn residual(lhs: Option<C64>, rhs: Option<C64>) -> Option<f64> {
    match (lhs, rhs) {
        (None, None) => None,
        (l, r) => Some((l.unwrap_or_default() - r.unwrap_or_default()).norm()),
    }
}

/// Pentagon residual at labels `(a, b, c, d, e, f, g, k, l)`:
/// `[F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = Σ_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}`.
pub fn pentagon_term(
    model: &AnyonModel,
    fr: &FRData,
    [a, b, c, d, e, f, g, k, l]: [Species; 9],
) -> Result<Option<f64>> {
    let lhs = product(&[
        fr.f_entry(model, [f, c, d, e], g, l)?,
        fr.f_entry(model, [a, b, l, e], f, k)?,
    ]);
    let mut rhs: Option<C64> = None;
    for h in 0..model.n_species() {
        let term = product(&[
            fr.f_entry(model, [a, b, c, g], f, h)?,
            fr.f_entry(model, [a, h, d, e], g, k)?,
            fr.f_entry(model, [b, c, d, k], h, l)?,
        ]);
        if let Some(t) = term {
            rhs = Some(rhs.unwrap_or_default() + t);
        }
    }
    Ok(residual(lhs, rhs))
}

pub fn pentagon_check(model: &AnyonModel, fr: &FRData) -> Result<IdentityCheck> {
    let n = model.n_species();
    let results: Vec<Option<f64>> = tuples::<9>(n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&t| pentagon_term(model, fr, t))
        .collect::<Result<_>>()?;
    Ok(summarise(results))
}

fn summarise(results: Vec<Option<f64>>) -> IdentityCheck {
    let present: Vec<f64> = results.into_iter().flatten().collect();
    IdentityCheck {
        max_residual: present.iter().copied().fold(0.0, f64::max),
        tuples_checked: present.len(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Over,
    /// Every R replaced by its inverse.
    Under,
}

/// Hexagon residual at labels `(a, b, c, d, e, g)`:
/// `R^{ac}_e [F^{acb}_d]_{eg} R^{bc}_g = Σ_f [F^{cab}_d]_{ef} R^{cf}_d [F^{abc}_d]_{fg}`.
pub fn hexagon_term(
    model: &AnyonModel,
    fr: &FRData,
    orientation: Orientation,
    [a, b, c, d, e, g]: [Species; 6],
) -> Result<Option<f64>> {
    let r = |x, y, z| -> Result<Option<C64>> {
        Ok(fr.r_entry(model, x, y, z)?.map(|v| match orientation {
            Orientation::Over => v,
            Orientation::Under => v.inv(),
        }))
    };
    let lhs = product(&[
        r(a, c, e)?,
        fr.f_entry(model, [a, c, b, d], e, g)?,
        r(b, c, g)?,
    ]);
    let mut rhs: Option<C64> = None;
    for f in 0..model.n_species() {
        let term = product(&[
            fr.f_entry(model, [c, a, b, d], e, f)?,
            r(c, f, d)?,
            fr.f_entry(model, [a, b, c, d], f, g)?,
        ]);
        if let Some(t) = term {
            rhs = Some(rhs.unwrap_or_default() + t);
        }
    }
    Ok(residual(lhs, rhs))
}

pub fn hexagon_check(
    model: &AnyonModel,
    fr: &FRData,
    orientation: Orientation,
) -> Result<IdentityCheck> {
    let n = model.n_species();
    let results: Vec<Option<f64>> = tuples::<6>(n)
        .map(|t| hexagon_term(model, fr, orientation, t))
        .collect::<Result<_>>()?;
    Ok(summarise(results))
}

/// Fusion basis as a JSON array of label strings.
pub fn fusion_basis_json(model: &AnyonModel, basis: &[FusionSequence]) -> serde_json::Value {
    serde_json::Value::Array(basis.iter().map(|s| json!(s.render(model))).collect())
}
