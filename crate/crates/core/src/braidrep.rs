//! Temperley-Lieb and Jones braid representations on the Fibonacci fusion
//! basis, and the explicit two-dimensional three-strand construction.
//!
//! Generator `i` (1-based, `1..N−1`) acts on the label between anyons `i`
//! and `i+1`. On the extended word `(1, τ, c_1, …, c_{N−2}, τ)` that is
//! position `i`, and its action depends only on the two neighbouring
//! labels: `(1,1)` gives a scalar, a mixed pair gives a scalar, and `(τ,τ)`
//! mixes the middle label between `1` and `τ`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde_json::json;

use crate::anyon::{fusion_basis, AnyonKind, AnyonModel, FRData, FusionSequence, Species};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tensor::{re, C64};

const VACUUM: Species = 0;
const TAU: Species = 1;

/// Scalars of the representation. At the Fibonacci point `μ = −λ⁻³`,
/// `δ = −λ² − λ⁻² = φ`, `a = 1/δ` and `b = √(1 − a²)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BraidParameters {
    pub lambda: C64,
    pub mu: C64,
    pub delta: C64,
    pub a: C64,
    pub b: C64,
    /// Fibonacci branch these came from, if any.
    pub branch: Option<u8>,
}

pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

impl BraidParameters {
    /// The four unit-circle roots of `−λ² − λ⁻² = φ`: branch 1 is
    /// `e^{3πi/5}`, 2 its conjugate, 3 is `e^{2πi/5}`, 4 its conjugate.
    pub fn fibonacci(branch: u8) -> Result<Self> {
        // On the unit circle the condition reads −2cos 2θ = φ.
        let theta = (-GOLDEN_RATIO / 2.0).acos() / 2.0;
        let angle = match branch {
            1 => PI - theta,
            2 => theta - PI,
            3 => theta,
            4 => -theta,
            _ => {
                return Err(Error::OutOfRange {
                    what: "branch (1..=4)",
                    index: branch as usize,
                    bound: 5,
                })
            }
        };
        let mut p = Self::jones(C64::from_polar(1.0, angle), re(1.0 / GOLDEN_RATIO));
        p.branch = Some(branch);
        Ok(p)
    }

    /// The Jones family: `μ = −λ⁻³`, `δ = −λ² − λ⁻²`, `b = √(1 − a²)`.
    pub fn jones(lambda: C64, a: C64) -> Self {
        let inv = lambda.inv();
        BraidParameters {
            lambda,
            mu: -inv * inv * inv,
            delta: -lambda * lambda - inv * inv,
            a,
            b: (re(1.0) - a * a).sqrt(),
            branch: None,
        }
    }

    pub fn custom(lambda: C64, mu: C64, delta: C64, a: C64, b: C64) -> Self {
        BraidParameters {
            lambda,
            mu,
            delta,
            a,
            b,
            branch: None,
        }
    }

    /// `|δ²b⁴ − 1|`, zero exactly where the listed TL elements close.
    pub fn tl_defect(&self) -> f64 {
        (self.delta * self.delta * self.b.powi(4) - 1.0).norm()
    }

    /// Named residuals of the parameter relations.
    pub fn relation_residuals(&self) -> Vec<(&'static str, f64)> {
        let inv = self.lambda.inv();
        vec![
            ("mu + lambda^-3", (self.mu + inv * inv * inv).norm()),
            (
                "delta + lambda^2 + lambda^-2",
                (self.delta + self.lambda * self.lambda + inv * inv).norm(),
            ),
            ("a delta - 1", (self.a * self.delta - 1.0).norm()),
            (
                "a^2 + b^2 - 1",
                (self.a * self.a + self.b * self.b - 1.0).norm(),
            ),
            ("delta^2 b^4 - 1", self.tl_defect()),
        ]
    }

    /// Fibonacci F and R data with `R^{ττ}_1 = μ` and `R^{ττ}_τ = λ`.
    pub fn fr_data(&self) -> FRData {
        FRData::fibonacci(self.a, self.b, self.mu, self.lambda)
    }
}

/// The explicit three-strand matrices on the two-state space, ordered so
/// that `σ₁ = R = diag(λ, μ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct B3Explicit {
    pub sigma1: DMatrix<C64>,
    pub sigma2: DMatrix<C64>,
    pub f: DMatrix<C64>,
    /// `aλ(λ−a) − b²μ`, `a(λ−μ) − λμ`, `−aμ(μ+a) − b²λ`, as magnitudes.
    pub constraint_residuals: [f64; 3],
    /// `‖σ₁σ₂σ₁ − σ₂σ₁σ₂‖`.
    pub braid_residual: f64,
    /// `|a²(λ−μ)² + λμ|`, the condition the braid relation reduces to.
    pub braid_condition: f64,
    /// `U₁ = diag(0, δ)` and `U₂ = F U₁ F⁻¹`.
    pub tl_pair: (DMatrix<C64>, DMatrix<C64>),
    /// `‖U₁U₂U₁ − δ²a²U₁‖`, which holds for any `a`, `b` with `a² + b² = 1`.
    pub tl_pair_residual: f64,
}

pub fn b3_explicit(p: &BraidParameters) -> Result<B3Explicit> {
    let (l, m, a, b, d) = (p.lambda, p.mu, p.a, p.b, p.delta);
    let r = DMatrix::from_row_slice(2, 2, &[l, re(0.0), re(0.0), m]);
    let f = DMatrix::from_row_slice(2, 2, &[a, b, b, -a]);
    let f_inv = f
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::invalid("F matrix is singular"))?;
    let sigma2 = &f * &r * &f_inv;
    let braid_residual = (&r * &sigma2 * &r - &sigma2 * &r * &sigma2).norm();
    let constraint_residuals = [
        (a * l * (l - a) - b * b * m).norm(),
        (a * (l - m) - l * m).norm(),
        (-a * m * (m + a) - b * b * l).norm(),
    ];
    let u1 = DMatrix::from_row_slice(2, 2, &[re(0.0), re(0.0), re(0.0), d]);
    let u2 = &f * &u1 * &f_inv;
    let tl_pair_residual = (&u1 * &u2 * &u1 - &u1 * (d * d * a * a)).norm();
    Ok(B3Explicit {
        braid_condition: (a * a * (l - m) * (l - m) + l * m).norm(),
        sigma1: r,
        sigma2,
        f,
        constraint_residuals,
        braid_residual,
        tl_pair: (u1, u2),
        tl_pair_residual,
    })
}

/// Per-generator action, given the neighbours of the label it acts on.
/// `block[new][old]` is used for the `(τ,τ)` case.
struct LocalAction {
    vacuum_pair: C64,
    mixed_pair: C64,
    block: [[C64; 2]; 2],
}

fn assemble(n_strands: usize, basis: &[FusionSequence], action: &LocalAction) -> Vec<DMatrix<C64>> {
    let dim = basis.len();
    let index: std::collections::HashMap<&[Species], usize> = basis
        .iter()
        .enumerate()
        .map(|(k, s)| (s.labels(), k))
        .collect();
    (1..n_strands)
        .map(|i| {
            let mut m = DMatrix::<C64>::zeros(dim, dim);
            for (col, seq) in basis.iter().enumerate() {
                let labels = seq.labels();
                // Extended word: (1, τ, c_1, …, c_{N−2}, τ).
                let ext = |k: usize| match k {
                    0 => VACUUM,
                    1 => TAU,
                    k if k == n_strands => seq.outcome(),
                    k => labels[k - 2],
                };
                match (ext(i - 1), ext(i + 1)) {
                    (TAU, TAU) => {
                        let old = ext(i);
                        for new in [VACUUM, TAU] {
                            let v = action.block[new][old];
                            if v == re(0.0) {
                                continue;
                            }
                            let mut word = labels.to_vec();
                            word[i - 2] = new;
                            if let Some(&row) = index.get(word.as_slice()) {
                                m[(row, col)] += v;
                            }
                        }
                    }
                    (VACUUM, VACUUM) => m[(col, col)] += action.vacuum_pair,
                    _ => m[(col, col)] += action.mixed_pair,
                }
            }
            m
        })
        .collect()
}

fn fibonacci_basis(n_strands: usize) -> Result<Vec<FusionSequence>> {
    if n_strands < 2 {
        return Err(Error::invalid(
            "braid representations need at least two strands",
        ));
    }
    fusion_basis(&AnyonModel::builtin(AnyonKind::Fibonacci), n_strands, TAU)
}

/// `U_1..U_{N−1}` on the Fibonacci fusion basis with outcome τ.
pub fn tl_generators(n_strands: usize, p: &BraidParameters) -> Result<Vec<DMatrix<C64>>> {
    let basis = fibonacci_basis(n_strands)?;
    Ok(tl_on_basis(n_strands, &basis, p))
}

fn tl_on_basis(
    n_strands: usize,
    basis: &[FusionSequence],
    p: &BraidParameters,
) -> Vec<DMatrix<C64>> {
    let action = LocalAction {
        vacuum_pair: p.delta,
        mixed_pair: re(0.0),
        block: [[p.a, p.b], [p.b, p.delta * p.b * p.b]],
    };
    assemble(n_strands, basis, &action)
}

/// Braid generators from their listed matrix elements: `μ` between two
/// vacua, `λ` next to one, and the `(τ,τ)` block
/// `[[a²μ+b²λ, ab(μ−λ)], [ab(μ−λ), b²μ+a²λ]]`.
pub fn listed_braid_generators(n_strands: usize, p: &BraidParameters) -> Result<Vec<DMatrix<C64>>> {
    let basis = fibonacci_basis(n_strands)?;
    let (a, b, l, m) = (p.a, p.b, p.lambda, p.mu);
    let off = a * b * (m - l);
    let action = LocalAction {
        vacuum_pair: m,
        mixed_pair: l,
        block: [[a * a * m + b * b * l, off], [off, b * b * m + a * a * l]],
    };
    Ok(assemble(n_strands, &basis, &action))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidRepresentation {
    pub n_strands: usize,
    pub basis: Vec<FusionSequence>,
    /// `σ_1..σ_{N−1}`.
    pub sigma: Vec<DMatrix<C64>>,
    /// `U_1..U_{N−1}`.
    pub tl: Vec<DMatrix<C64>>,
    pub params: BraidParameters,
}

impl BraidRepresentation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Generator `i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<&DMatrix<C64>> {
        self.sigma.get(i.wrapping_sub(1)).ok_or(Error::OutOfRange {
            what: "braid generator",
            index: i,
            bound: self.sigma.len() + 1,
        })
    }

    /// The same representation on a reordered basis: new position `k`
    /// holds old basis element `perm[k]`.
    pub fn relabelled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&k| k >= n || std::mem::replace(&mut seen[k], true))
        {
            return Err(Error::invalid("not a permutation of the basis"));
        }
        let conj = |m: &DMatrix<C64>| DMatrix::from_fn(n, n, |r, c| m[(perm[r], perm[c])]);
        Ok(BraidRepresentation {
            n_strands: self.n_strands,
            basis: perm.iter().map(|&k| self.basis[k].clone()).collect(),
            sigma: self.sigma.iter().map(conj).collect(),
            tl: self.tl.iter().map(conj).collect(),
            params: self.params,
        })
    }
}

/// The Jones representation `σ_i = λI + λ⁻¹U_i`.
pub fn braid_generators(n_strands: usize, p: &BraidParameters) -> Result<BraidRepresentation> {
    let basis = fibonacci_basis(n_strands)?;
    let tl = tl_on_basis(n_strands, &basis, p);
    let id = DMatrix::<C64>::identity(basis.len(), basis.len());
    let inv = p.lambda.inv();
    let sigma = tl.iter().map(|u| &id * p.lambda + u * inv).collect();
    Ok(BraidRepresentation {
        n_strands,
        basis,
        sigma,
        tl,
        params: *p,
    })
}

fn max_over(pairs: impl Iterator<Item = f64>) -> f64 {
    pairs.fold(0.0, f64::max)
}

pub fn verify_braid_rep(rep: &BraidRepresentation, tol: f64) -> VerificationReport {
    let s = &rep.sigma;
    let u = &rep.tl;
    let n = s.len();
    let delta = rep.params.delta;
    let dim = rep.dim();
    let id = DMatrix::<C64>::identity(dim, dim);
    let adjacent = || (0..n.saturating_sub(1)).map(|i| (i, i + 1));
    let far = || (0..n).flat_map(move |i| (i + 2..n).map(move |j| (i, j)));

    let mut report = VerificationReport::new(format!(
        "braid N={} dim={dim}{}",
        rep.n_strands,
        rep.params
            .branch
            .map(|b| format!(" branch {b}"))
            .unwrap_or_default()
    ));
    report.check(
        "braid relation",
        max_over(adjacent().map(|(i, j)| (&s[i] * &s[j] * &s[i] - &s[j] * &s[i] * &s[j]).norm())),
        tol,
    );
    report.check(
        "far commutativity",
        max_over(far().map(|(i, j)| (&s[i] * &s[j] - &s[j] * &s[i]).norm())),
        tol,
    );
    report.check(
        "U^2 - delta U",
        max_over(u.iter().map(|x| (x * x - x * delta).norm())),
        tol,
    );
    report.check(
        "U U' U - U",
        max_over(adjacent().flat_map(|(i, j)| {
            [
                (&u[i] * &u[j] * &u[i] - &u[i]).norm(),
                (&u[j] * &u[i] * &u[j] - &u[j]).norm(),
            ]
        })),
        tol,
    );
    report.check(
        "far TL commutativity",
        max_over(far().map(|(i, j)| (&u[i] * &u[j] - &u[j] * &u[i]).norm())),
        tol,
    );
    report.check(
        "unitarity",
        max_over(s.iter().map(|x| (x.adjoint() * x - &id).norm())),
        tol,
    );
    let inverse = max_over(s.iter().map(|x| match x.clone().try_inverse() {
        Some(inv) => (x * inv - &id).norm(),
        None => f64::INFINITY,
    }));
    report.check("sigma sigma^-1 - I", inverse, tol);
    report
}

/// Generators as dense row-major matrices of `[re, im]` pairs.
pub fn generators_json(rep: &BraidRepresentation) -> serde_json::Value {
    let fib = AnyonModel::builtin(AnyonKind::Fibonacci);
    let dense = |m: &DMatrix<C64>| {
        (0..m.nrows())
            .map(|r| {
                (0..m.ncols())
                    .map(|c| json!([m[(r, c)].re, m[(r, c)].im]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    json!({
        "n_strands": rep.n_strands,
        "dim": rep.dim(),
        "branch": rep.params.branch,
        "lambda": [rep.params.lambda.re, rep.params.lambda.im],
        "basis": rep.basis.iter().map(|s| s.render(&fib)).collect::<Vec<_>>(),
        "generators": rep.sigma.iter().map(dense).collect::<Vec<_>>(),
    })
}
