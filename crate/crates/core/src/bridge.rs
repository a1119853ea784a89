//! Correspondences between anyon fusion bases and product zero modes, and
//! braid generators lifted onto the qubit chain.
//!
//! An `N`-site chain corresponds to the `(N+1)`-anyon fusion space. Anyon
//! `i` sits on sites `(i−1, i)`, so the internal label between anyons `i`
//! and `i+1` is read off the site pair `(i−1, i)`: each label prescribes
//! how the local state changes from one site to the next. The first site
//! is a free seed.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::anyon::{fusion_basis, fusion_dim, AnyonKind, AnyonModel, FusionSequence, Species};
use crate::braidrep::{braid_generators, BraidParameters, BraidRepresentation};
use crate::error::{Error, Result};
use crate::report::{ResidualCheck, VerificationReport};
use crate::susy::{
    fermion_parity, particle_hole, ChainModel, DoubledJkChain, IsingChain, QubitFibChain, SiteClass,
};
use crate::tensor::{
    anticommutator, chain_dim, commutator_norm, ChainBasisState, SparseOperator, C64,
};
use crate::zeromodes::{entangled_zero_modes, product_zero_modes};

/// How one anyon label moves the local state between adjacent sites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// Same class, same index.
    Repeat,
    /// Same class, any other index.
    SwitchIndex,
    /// Other class, any index.
    FlipClass,
}

impl Step {
    fn relates(self, prev: (SiteClass, usize), next: (SiteClass, usize)) -> bool {
        match self {
            Step::Repeat => prev == next,
            Step::SwitchIndex => prev.0 == next.0 && prev.1 != next.1,
            Step::FlipClass => prev.0 != next.0,
        }
    }
}

pub trait Correspondence: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;
    fn anyons(&self) -> &AnyonModel;
    fn chain(&self) -> &dyn ChainModel;

    /// Local states allowed on the first site.
    fn seeds(&self) -> Vec<usize>;

    /// Local states that may follow `prev` across an anyon labelled `label`,
    /// in increasing index order.
    fn successors(&self, label: Species, prev: usize) -> Vec<usize>;

    /// The label relating two adjacent local states, if any.
    fn label_between(&self, prev: usize, next: usize) -> Option<Species>;

    /// Fusion outcome used for `n_sites`: the generator when reachable,
    /// otherwise the vacuum.
    fn outcome(&self, n_sites: usize) -> Result<Species> {
        let a = self.anyons();
        let g = a.generator();
        if fusion_dim(a, n_sites + 1, g)? > 0u32.into() {
            Ok(g)
        } else {
            Ok(a.vacuum())
        }
    }
}

/// A correspondence given by one [`Step`] per anyon label, over the boson
/// and fermion local states of a chain model.
#[derive(Debug)]
pub struct ClassTransitionMap {
    name: String,
    anyons: AnyonModel,
    chain: Box<dyn ChainModel>,
    steps: BTreeMap<Species, Step>,
    states: Vec<(SiteClass, usize)>,
}

impl ClassTransitionMap {
    pub fn new(
        name: impl Into<String>,
        anyons: AnyonModel,
        chain: Box<dyn ChainModel>,
        steps: &[(Species, Step)],
    ) -> Result<Self> {
        if steps.iter().any(|&(s, _)| s >= anyons.n_species()) {
            return Err(Error::invalid("step names an unknown species"));
        }
        let states = chain
            .local()
            .states
            .iter()
            .map(|s| (s.class, s.index))
            .collect();
        Ok(ClassTransitionMap {
            name: name.into(),
            anyons,
            chain,
            steps: steps.iter().copied().collect(),
            states,
        })
    }

    /// Fibonacci anyons on the qubit chain: `1` repeats, `τ` flips.
    pub fn fibonacci() -> Self {
        Self::new(
            "fibonacci",
            AnyonModel::builtin(AnyonKind::Fibonacci),
            Box::new(QubitFibChain::new()),
            &[(0, Step::Repeat), (1, Step::FlipClass)],
        )
        .expect("builtin steps are valid")
    }

    /// Jones-Kauffman anyons on the doubled chain: `1` repeats, `μ` switches
    /// the index, `τ` flips with either index.
    pub fn jones_kauffman(m: usize) -> Result<Self> {
        Self::new(
            "jones-kauffman",
            AnyonModel::builtin(AnyonKind::JonesKauffman),
            Box::new(DoubledJkChain::new(m)?),
            &[
                (0, Step::Repeat),
                (1, Step::FlipClass),
                (2, Step::SwitchIndex),
            ],
        )
    }

    /// Ising anyons on the Ising chain: `ψ` takes the role of `μ` and `σ`
    /// that of `τ`.
    pub fn ising(m: usize) -> Result<Self> {
        Self::new(
            "ising",
            AnyonModel::builtin(AnyonKind::Ising),
            Box::new(IsingChain::new(m)?),
            &[
                (0, Step::Repeat),
                (1, Step::FlipClass),
                (2, Step::SwitchIndex),
            ],
        )
    }
}

impl Correspondence for ClassTransitionMap {
    fn name(&self) -> &str {
        &self.name
    }

    fn anyons(&self) -> &AnyonModel {
        &self.anyons
    }

    fn chain(&self) -> &dyn ChainModel {
        self.chain.as_ref()
    }

    fn seeds(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&k| self.states[k].0 != SiteClass::Zero)
            .collect()
    }

    fn successors(&self, label: Species, prev: usize) -> Vec<usize> {
        let Some(step) = self.steps.get(&label) else {
            return Vec::new();
        };
        let p = self.states[prev];
        (0..self.states.len())
            .filter(|&k| self.states[k].0 != SiteClass::Zero && step.relates(p, self.states[k]))
            .collect()
    }

    fn label_between(&self, prev: usize, next: usize) -> Option<Species> {
        let (p, n) = (*self.states.get(prev)?, *self.states.get(next)?);
        if p.0 == SiteClass::Zero || n.0 == SiteClass::Zero {
            return None;
        }
        self.steps
            .iter()
            .find(|(_, step)| step.relates(p, n))
            .map(|(&label, _)| label)
    }
}

type CorrespondenceFactory = fn() -> Result<Box<dyn Correspondence>>;

/// Name-keyed correspondences, also reachable through their chain model.
pub struct CorrespondenceRegistry {
    entries: BTreeMap<&'static str, (&'static str, CorrespondenceFactory)>,
}

impl CorrespondenceRegistry {
    pub fn builtin() -> Self {
        let mut entries: BTreeMap<&'static str, (&'static str, CorrespondenceFactory)> =
            BTreeMap::new();
        entries.insert(
            "fibonacci",
            ("qubit-fib", || {
                Ok(Box::new(ClassTransitionMap::fibonacci()))
            }),
        );
        entries.insert(
            "jones-kauffman",
            ("jk-chain", || {
                Ok(Box::new(ClassTransitionMap::jones_kauffman(2)?))
            }),
        );
        entries.insert(
            "ising",
            ("ising-chain", || {
                Ok(Box::new(ClassTransitionMap::ising(2)?))
            }),
        );
        CorrespondenceRegistry { entries }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().copied()
    }

    /// Looks up by correspondence name, chain-model name, or anyon alias.
    pub fn create(&self, name: &str) -> Result<Box<dyn Correspondence>> {
        let key = self
            .entries
            .iter()
            .find(|(k, (chain, _))| **k == name || *chain == name)
            .map(|(k, _)| *k)
            .or_else(|| {
                let kind = AnyonKind::from_name(name).ok()?;
                self.entries.keys().copied().find(|k| *k == kind.name())
            })
            .ok_or_else(|| Error::Unknown {
                kind: "correspondence",
                name: name.to_string(),
            })?;
        (self.entries[key].1)()
    }
}

fn check_seed(corr: &dyn Correspondence, seed: usize) -> Result<()> {
    if corr.seeds().contains(&seed) {
        Ok(())
    } else {
        Err(Error::invalid(format!("local state {seed} is not a seed")))
    }
}

/// All chain states the sequence maps to from `seed`, in lexicographic order.
pub fn fusion_to_chain(
    corr: &dyn Correspondence,
    seq: &FusionSequence,
    seed: usize,
) -> Result<Vec<ChainBasisState>> {
    seq.validate(corr.anyons())?;
    check_seed(corr, seed)?;
    let d = corr.chain().local_dim();
    let mut words: Vec<Vec<usize>> = vec![vec![seed]];
    for &label in seq.labels() {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = *w.last().expect("words start with the seed");
                corr.successors(label, last).into_iter().map(move |k| {
                    let mut next = w.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|w| ChainBasisState::new(d, w))
        .collect()
}

/// The fusion sequence a product zero mode comes from.
pub fn chain_to_fusion(
    corr: &dyn Correspondence,
    state: &ChainBasisState,
) -> Result<FusionSequence> {
    let chain = corr.chain();
    if state.local_dim() != chain.local_dim() {
        return Err(Error::mismatch(
            "state alphabet differs from the chain model",
        ));
    }
    let classes = chain.local().classes();
    let word: Vec<SiteClass> = state.digits().iter().map(|&k| classes[k]).collect();
    if let Some(v) = chain.product_rule()?.violation(&word) {
        return Err(Error::Forbidden(v));
    }
    let digits = state.digits();
    let labels = digits
        .windows(2)
        .enumerate()
        .map(|(j, w)| {
            corr.label_between(w[0], w[1])
                .ok_or_else(|| Error::Forbidden(format!("no label joins sites {j} and {}", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    FusionSequence::new(corr.anyons(), labels, corr.outcome(state.n_sites())?)
}

/// One `(sequence, seed, chain state)` row of the forward map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceRow {
    pub sequence: FusionSequence,
    pub seed: usize,
    pub state: ChainBasisState,
}

/// Forward image of every sequence and seed, ordered by sequence then seed.
pub fn forward_image(corr: &dyn Correspondence, n_sites: usize) -> Result<Vec<CorrespondenceRow>> {
    if n_sites == 0 {
        return Err(Error::invalid("chain needs at least one site"));
    }
    let basis = fusion_basis(corr.anyons(), n_sites + 1, corr.outcome(n_sites)?)?;
    let mut rows = Vec::new();
    for seq in basis {
        for seed in corr.seeds() {
            for state in fusion_to_chain(corr, &seq, seed)? {
                rows.push(CorrespondenceRow {
                    sequence: seq.clone(),
                    seed,
                    state,
                });
            }
        }
    }
    Ok(rows)
}

/// `fusion_sequence,seed,chain_state` rows.
pub fn correspondence_csv(corr: &dyn Correspondence, n_sites: usize) -> Result<String> {
    let labels = corr.chain().local().labels();
    let mut out = String::from("fusion_sequence,seed,chain_state\n");
    for row in forward_image(corr, n_sites)? {
        out.push_str(&format!(
            "{},{},{}\n",
            row.sequence.render(corr.anyons()),
            labels[row.seed],
            row.state.render(&labels)
        ));
    }
    Ok(out)
}

pub fn verify_correspondence(
    corr: &dyn Correspondence,
    n_sites: usize,
) -> Result<VerificationReport> {
    let rows = forward_image(corr, n_sites)?;
    let zero_modes = product_zero_modes(corr.chain(), n_sites)?;
    let mut report = VerificationReport::new(format!("correspondence {} N={n_sites}", corr.name()));

    let image: BTreeSet<usize> = rows.iter().map(|r| r.state.rank()).collect();
    let modes: BTreeSet<usize> = zero_modes.iter().map(ChainBasisState::rank).collect();
    report.push(ResidualCheck::exact(
        "image = product zero modes",
        image == modes,
    ));
    report.push(ResidualCheck::exact(
        "image is injective",
        image.len() == rows.len(),
    ));
    let count = corr.chain().count_product(n_sites)?;
    report.push(ResidualCheck::exact(
        "image size = product count",
        count == (rows.len() as u64).into(),
    ));
    report.note(format!("image size {} (product count {count})", rows.len()));

    let round_trip = rows
        .iter()
        .map(|r| Ok(chain_to_fusion(corr, &r.state)? == r.sequence))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    report.push(ResidualCheck::exact(
        "chain_to_fusion after fusion_to_chain",
        round_trip,
    ));

    let reverse = zero_modes
        .iter()
        .map(|v| {
            let seq = chain_to_fusion(corr, v)?;
            Ok(fusion_to_chain(corr, &seq, v.digits()[0])?.contains(v))
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    report.push(ResidualCheck::exact(
        "fusion_to_chain after chain_to_fusion",
        reverse,
    ));
    Ok(report)
}

/// Largest chain the lifted generators are built for.
pub const MAX_LIFTED_SITES: usize = 14;

/// Generators `σ_1..σ_N` of the `(N+1)`-strand braid group lifted onto the
/// `N`-site qubit chain. Each acts as the fusion-space generator on the
/// span of the `b`-seeded zero modes and of their images under the
/// particle-hole operator `P`, and annihilates everything else.
#[derive(Clone, Debug)]
pub struct LiftedBraidSet {
    pub n_sites: usize,
    pub fusion: BraidRepresentation,
    pub sigma: Vec<SparseOperator>,
    /// Basis rank of the `b`-seeded image of each fusion basis element.
    pub boson_ranks: Vec<usize>,
    /// Basis rank and sign of `P` applied to that image.
    pub fermion_images: Vec<(usize, f64)>,
}

impl LiftedBraidSet {
    pub fn new(n_sites: usize, params: &BraidParameters) -> Result<Self> {
        if !(3..=MAX_LIFTED_SITES).contains(&n_sites) {
            return Err(if n_sites > MAX_LIFTED_SITES {
                Error::Capacity {
                    what: "lifted braid chain sites",
                    requested: n_sites as u128,
                    limit: MAX_LIFTED_SITES as u128,
                }
            } else {
                Error::invalid("lifted generators need at least 3 sites")
            });
        }
        let corr = ClassTransitionMap::fibonacci();
        let chain = QubitFibChain::new();
        let fusion = braid_generators(n_sites + 1, params)?;
        let boson = 0;
        let boson_ranks = fusion
            .basis
            .iter()
            .map(|seq| Ok(fusion_to_chain(&corr, seq, boson)?[0].rank()))
            .collect::<Result<Vec<_>>>()?;

        // P is a signed permutation of the computational basis.
        let p = particle_hole(chain.local(), n_sites)?;
        let mut column: HashMap<usize, (usize, C64)> = HashMap::new();
        for (r, c, v) in p.entries() {
            column.insert(c, (r, v));
        }
        let fermion_images = boson_ranks
            .iter()
            .map(|&w| {
                let &(r, v) = column
                    .get(&w)
                    .ok_or_else(|| Error::invalid("particle-hole operator has an empty column"))?;
                if (v.norm() - 1.0).abs() > 1e-12 || v.im.abs() > 1e-12 {
                    return Err(Error::invalid(
                        "particle-hole operator is not a signed permutation",
                    ));
                }
                Ok((r, v.re.signum()))
            })
            .collect::<Result<Vec<_>>>()?;

        let dim = chain_dim(chain.local_dim(), n_sites)?;
        let sigma = fusion
            .sigma
            .iter()
            .map(|m| {
                let mut triplets = Vec::new();
                for t in 0..m.nrows() {
                    for s in 0..m.ncols() {
                        let v = m[(t, s)];
                        if v == C64::default() {
                            continue;
                        }
                        triplets.push((boson_ranks[t], boson_ranks[s], v));
                        let (ft, st) = fermion_images[t];
                        let (fs, ss) = fermion_images[s];
                        triplets.push((ft, fs, v * (st * ss)));
                    }
                }
                SparseOperator::from_triplets(dim, dim, triplets)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LiftedBraidSet {
            n_sites,
            fusion,
            sigma,
            boson_ranks,
            fermion_images,
        })
    }

    /// Generator `i`, 1-based over `1..=N`.
    pub fn generator(&self, i: usize) -> Result<&SparseOperator> {
        self.sigma.get(i.wrapping_sub(1)).ok_or(Error::OutOfRange {
            what: "lifted braid generator",
            index: i,
            bound: self.sigma.len() + 1,
        })
    }
}

pub fn lifted_braid_generator(
    i: usize,
    n_sites: usize,
    params: &BraidParameters,
) -> Result<SparseOperator> {
    LiftedBraidSet::new(n_sites, params)?.generator(i).cloned()
}

pub fn verify_lifted(
    n_sites: usize,
    params: &BraidParameters,
    tol: f64,
) -> Result<VerificationReport> {
    let set = LiftedBraidSet::new(n_sites, params)?;
    let chain = QubitFibChain::new();
    let corr = ClassTransitionMap::fibonacci();
    let s = &set.sigma;
    let n = s.len();
    let mut report = VerificationReport::new(format!("lifted braid N={n_sites}"));

    let adjacent: Vec<f64> = (0..n - 1)
        .into_par_iter()
        .map(|i| {
            (&(&(&s[i] * &s[i + 1]) * &s[i]) - &(&(&s[i + 1] * &s[i]) * &s[i + 1])).frobenius_norm()
        })
        .collect();
    report.check("braid relation", max(adjacent), tol);
    let far: Vec<f64> = (0..n)
        .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| commutator_norm(&s[i], &s[j]))
        .collect::<Result<_>>()?;
    report.check("far commutativity", max(far), tol);

    let q = chain.supercharge(n_sites)?;
    let h = anticommutator(&q, &q.adjoint())?;
    let with_q = s
        .iter()
        .map(|x| commutator_norm(x, &q))
        .collect::<Result<Vec<_>>>()?;
    report.check("[sigma,Q]", max(with_q), tol);
    let with_h = s
        .iter()
        .map(|x| commutator_norm(x, &h))
        .collect::<Result<Vec<_>>>()?;
    report.check("[sigma,H]", max(with_h), tol);

    // The complement of the product zero modes is spanned by the remaining
    // basis vectors, so its annihilation is a statement about columns and rows.
    let zero_modes = product_zero_modes(&chain, n_sites)?;
    let product: BTreeSet<usize> = zero_modes.iter().map(ChainBasisState::rank).collect();
    let dim = q.n_rows();
    let mut col = vec![0.0; dim];
    let mut row = vec![0.0; dim];
    let mut leak: f64 = 0.0;
    for x in s {
        col.iter_mut().for_each(|v| *v = 0.0);
        row.iter_mut().for_each(|v| *v = 0.0);
        for (r, c, v) in x.entries() {
            col[c] += v.norm_sqr();
            row[r] += v.norm_sqr();
        }
        for k in (0..dim).filter(|k| !product.contains(k)) {
            leak = leak.max(col[k].sqrt()).max(row[k].sqrt());
        }
    }
    report.check("sigma on complement of product zero modes", leak, tol);

    let entangled = entangled_zero_modes(&chain, n_sites)?;
    let mut on_entangled: f64 = 0.0;
    for v in &entangled {
        for x in s {
            on_entangled = on_entangled.max(x.apply(v)?.norm());
        }
    }
    report.check("sigma on entangled zero modes", on_entangled, tol);
    report.note(format!("{} entangled zero modes", entangled.len()));

    // Read each zero mode back through the inverse map, independently of
    // how the generators were assembled.
    let index: HashMap<&[Species], usize> = set
        .fusion
        .basis
        .iter()
        .enumerate()
        .map(|(k, seq)| (seq.labels(), k))
        .collect();
    let signs: HashMap<usize, f64> = set.fermion_images.iter().copied().collect();
    let coords = zero_modes
        .iter()
        .map(|v| {
            let seq = chain_to_fusion(&corr, v)?;
            let seed = v.digits()[0];
            let sign = if seed == 0 { 1.0 } else { signs[&v.rank()] };
            Ok((v.rank(), seed, index[seq.labels()], sign))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut block: f64 = 0.0;
    for (x, m) in s.iter().zip(&set.fusion.sigma) {
        for &(rw, seed_w, kw, sw) in &coords {
            for &(rv, seed_v, kv, sv) in &coords {
                let want = if seed_w == seed_v {
                    m[(kw, kv)] * (sw * sv)
                } else {
                    C64::default()
                };
                block = block.max((x.get(rw, rv) - want).norm());
            }
        }
    }
    report.check("restriction = two seed blocks", block, tol);

    let p = particle_hole(chain.local(), n_sites)?;
    let with_p = s
        .iter()
        .map(|x| commutator_norm(x, &p))
        .collect::<Result<Vec<_>>>()?;
    report.check("[sigma,P]", max(with_p), tol);
    let w = fermion_parity(chain.local(), n_sites)?;
    let with_w = s
        .iter()
        .map(|x| commutator_norm(x, &w))
        .collect::<Result<Vec<_>>>()?;
    report.note(format!("max ||[sigma,W]|| = {:.3e}", max(with_w)));
    Ok(report)
}

fn max(xs: Vec<f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(corr: &dyn Correspondence, states: &[ChainBasisState]) -> Vec<String> {
        let labels = corr.chain().local().labels();
        states.iter().map(|s| s.render(&labels)).collect()
    }

    #[test]
    fn fibonacci_rows() {
        let corr = ClassTransitionMap::fibonacci();
        let a = corr.anyons().clone();
        let seq = FusionSequence::parse(&a, "1ττ", 1).unwrap();
        assert_eq!(
            render(&corr, &fusion_to_chain(&corr, &seq, 0).unwrap()),
            vec!["bbfb"]
        );
        assert_eq!(
            render(&corr, &fusion_to_chain(&corr, &seq, 1).unwrap()),
            vec!["ffbf"]
        );
        let seq = FusionSequence::parse(&a, "τ1τ", 1).unwrap();
        assert_eq!(
            render(&corr, &fusion_to_chain(&corr, &seq, 0).unwrap()),
            vec!["bffb"]
        );
    }

    #[test]
    fn inverse_map() {
        let corr = ClassTransitionMap::fibonacci();
        let a = corr.anyons().clone();
        let read = |digits: Vec<usize>| {
            chain_to_fusion(&corr, &ChainBasisState::new(2, digits).unwrap()).map(|s| s.render(&a))
        };
        assert_eq!(read(vec![0, 1, 0, 1]).unwrap(), "τττ");
        assert_eq!(read(vec![1, 1, 0, 0]).unwrap(), "1τ1");
        assert!(matches!(read(vec![0, 0, 0, 1]), Err(Error::Forbidden(_))));
    }

    #[test]
    fn jk_tau_is_set_valued() {
        let corr = ClassTransitionMap::jones_kauffman(2).unwrap();
        let seq = FusionSequence::parse(corr.anyons(), "", 1).unwrap();
        // One label between two sites needs a three-anyon tree.
        let seq3 = FusionSequence::new(corr.anyons(), vec![1], 1).unwrap();
        assert_eq!(seq.n_anyons(), 2);
        assert_eq!(
            render(&corr, &fusion_to_chain(&corr, &seq3, 0).unwrap()),
            vec!["b1f1", "b1f2"]
        );
    }

    #[test]
    fn bad_seed_rejected() {
        let corr = ClassTransitionMap::fibonacci();
        let seq = FusionSequence::parse(corr.anyons(), "ττ", 1).unwrap();
        assert!(fusion_to_chain(&corr, &seq, 2).is_err());
    }

    #[test]
    fn registry_aliases() {
        let reg = CorrespondenceRegistry::builtin();
        assert_eq!(reg.create("qubit-fib").unwrap().name(), "fibonacci");
        assert_eq!(reg.create("jk-anyon").unwrap().name(), "jones-kauffman");
        assert_eq!(reg.create("ising-chain").unwrap().name(), "ising");
        assert!(reg.create("nicolai").is_err());
    }

    #[test]
    fn four_site_csv() {
        let csv = correspondence_csv(&ClassTransitionMap::fibonacci(), 4).unwrap();
        assert_eq!(csv.lines().count(), 11);
        assert!(csv.contains("\n1ττ,b,bbfb\n"));
    }

    #[test]
    fn lifted_index_range() {
        let p = BraidParameters::fibonacci(1).unwrap();
        let set = LiftedBraidSet::new(4, &p).unwrap();
        assert_eq!(set.sigma.len(), 4);
        assert!(set.generator(0).is_err());
        assert!(set.generator(5).is_err());
        assert!(LiftedBraidSet::new(2, &p).is_err());
        assert!(LiftedBraidSet::new(MAX_LIFTED_SITES + 1, &p)
            .unwrap_err()
            .is_capacity());
    }

    #[test]
    fn lifted_sigma_one_on_bbfb() {
        let p = BraidParameters::fibonacci(1).unwrap();
        let s1 = lifted_braid_generator(1, 4, &p).unwrap();
        // bbfb = 0b0010, first label 1: the vacuum channel.
        assert!((s1.get(2, 2) - p.mu).norm() < 1e-12);
        // fff component annihilated.
        assert!(s1.row(7).is_empty());
    }
}
