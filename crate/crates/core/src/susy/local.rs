use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{orthonormalize, re, C64};

const LOCAL_TOL: f64 = 1e-12;

/// Role of a local state with respect to the local supercharge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SiteClass {
    /// Spans the range of `q q†`.
    Boson,
    /// Spans the range of `q† q`.
    Fermion,
    /// Annihilated by both `q` and `q†`.
    Zero,
}

impl SiteClass {
    pub fn symbol(self) -> char {
        match self {
            SiteClass::Boson => 'b',
            SiteClass::Fermion => 'f',
            SiteClass::Zero => 'z',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalState {
    pub label: String,
    pub class: SiteClass,
    /// Index inside its class multiplet.
    pub index: usize,
    pub vector: DVector<C64>,
}

/// Local supercharge data on one site, with the derived projectors and the
/// local state basis ordered bosons, fermions, zero modes.
#[derive(Clone, Debug)]
pub struct LocalChargeSet {
    pub q: DMatrix<C64>,
    pub q_dag: DMatrix<C64>,
    pub boson_projector: DMatrix<C64>,
    pub fermion_projector: DMatrix<C64>,
    pub string: DMatrix<C64>,
    pub states: Vec<LocalState>,
}

fn label(prefix: char, i: usize, count: usize) -> String {
    if count == 1 {
        prefix.to_string()
    } else {
        format!("{prefix}{}", i + 1)
    }
}

fn projected_basis(projector: &DMatrix<C64>) -> Vec<DVector<C64>> {
    let d = projector.nrows();
    let candidates: Vec<DVector<C64>> = (0..d).map(|k| projector.column(k).into_owned()).collect();
    orthonormalize(&candidates, 1e-9)
}

impl LocalChargeSet {
    /// Requires `q² = 0` and `q q† q = q`, so `q q†` and `q† q` are orthogonal
    /// projectors.
    pub fn from_q(q: DMatrix<C64>) -> Result<Self> {
        if !q.is_square() || q.nrows() < 2 {
            return Err(Error::invalid(
                "local supercharge must be square of size ≥ 2",
            ));
        }
        let d = q.nrows();
        let q_dag = q.adjoint();
        if (&q * &q).norm() > LOCAL_TOL {
            return Err(Error::invalid("local supercharge is not nilpotent"));
        }
        if (&q * &q_dag * &q - &q).norm() > LOCAL_TOL {
            return Err(Error::invalid(
                "local supercharge is not a partial isometry",
            ));
        }
        let boson_projector = &q * &q_dag;
        let fermion_projector = &q_dag * &q;
        let identity = DMatrix::<C64>::identity(d, d);
        let string = &identity - &fermion_projector * re(2.0);
        let zero_projector = &identity - &boson_projector - &fermion_projector;

        let bosons = projected_basis(&boson_projector);
        let fermions: Vec<DVector<C64>> = bosons.iter().map(|b| &q_dag * b).collect();
        let zeros = projected_basis(&zero_projector);

        let mut states = Vec::with_capacity(d);
        for (class, vecs, prefix) in [
            (SiteClass::Boson, &bosons, 'b'),
            (SiteClass::Fermion, &fermions, 'f'),
            (SiteClass::Zero, &zeros, 'z'),
        ] {
            for (i, v) in vecs.iter().enumerate() {
                states.push(LocalState {
                    label: label(prefix, i, vecs.len()),
                    class,
                    index: i,
                    vector: v.clone(),
                });
            }
        }
        if states.len() != d {
            return Err(Error::invalid("local states do not span the site"));
        }
        Ok(LocalChargeSet {
            q,
            q_dag,
            boson_projector,
            fermion_projector,
            string,
            states,
        })
    }

    pub fn dim(&self) -> usize {
        self.q.nrows()
    }

    pub fn labels(&self) -> Vec<String> {
        self.states.iter().map(|s| s.label.clone()).collect()
    }

    pub fn classes(&self) -> Vec<SiteClass> {
        self.states.iter().map(|s| s.class).collect()
    }

    pub fn count(&self, class: SiteClass) -> usize {
        self.states.iter().filter(|s| s.class == class).count()
    }

    pub fn zero_modes(&self) -> Vec<&LocalState> {
        self.states
            .iter()
            .filter(|s| s.class == SiteClass::Zero)
            .collect()
    }

    /// True when local state `k` is the computational basis vector `e_k`.
    pub fn is_computational(&self) -> bool {
        self.states.iter().enumerate().all(|(k, s)| {
            s.vector
                .iter()
                .enumerate()
                .all(|(j, x)| (x - re(if j == k { 1.0 } else { 0.0 })).norm() < LOCAL_TOL)
        })
    }

    /// Local matrix exchanging bosons and fermions, `q + q†`.
    pub fn exchange(&self) -> DMatrix<C64> {
        &self.q + &self.q_dag
    }
}

pub fn qubit_q() -> DMatrix<C64> {
    DMatrix::from_row_slice(2, 2, &[re(0.0), re(1.0), re(0.0), re(0.0)])
}

/// `q = Σ_i |b_i⟩⟨f_i|` in the order (b₁..b_m, f₁..f_m).
pub fn doubled_q(m: usize) -> Result<DMatrix<C64>> {
    if m == 0 {
        return Err(Error::invalid("multiplicity m must be positive"));
    }
    let mut q = DMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        q[(i, m + i)] = re(1.0);
    }
    Ok(q)
}

/// Rank-one `q ∝ Σ_{k<r, j≥r} e_{kj}` on an `n`-level site, scaled so that
/// `q q† q = q`.
pub fn sis_q(n: usize, r: usize) -> Result<DMatrix<C64>> {
    if n < 2 || r == 0 || r >= n {
        return Err(Error::invalid(format!(
            "SIS needs 1 ≤ r < n, got n={n}, r={r}"
        )));
    }
    let scale = 1.0 / ((r * (n - r)) as f64).sqrt();
    let mut q = DMatrix::zeros(n, n);
    for k in 0..r {
        for j in r..n {
            q[(k, j)] = re(scale);
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_local_basis_is_computational() {
        let l = LocalChargeSet::from_q(qubit_q()).unwrap();
        assert!(l.is_computational());
        assert_eq!(l.labels(), vec!["b", "f"]);
        assert!((l.q_dag.clone() - l.q.adjoint()).norm() < 1e-15);
    }

    #[test]
    fn doubled_local_order() {
        let l = LocalChargeSet::from_q(doubled_q(2).unwrap()).unwrap();
        assert!(l.is_computational());
        assert_eq!(l.labels(), vec!["b1", "b2", "f1", "f2"]);
    }

    #[test]
    fn sis_3_1_structure() {
        let q = sis_q(3, 1).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((q[(0, 1)].re - h).abs() < 1e-15 && (q[(0, 2)].re - h).abs() < 1e-15);
        let l = LocalChargeSet::from_q(q).unwrap();
        let z = &l.zero_modes()[0].vector;
        assert!(z[0].norm() < 1e-12);
        assert!((z[1] + z[2]).norm() < 1e-12);
        assert!((z[1].norm() - h).abs() < 1e-12);
    }

    #[test]
    fn sis_always_has_n_minus_two_zero_modes() {
        for n in 2..=7 {
            for r in 1..n {
                let l = LocalChargeSet::from_q(sis_q(n, r).unwrap()).unwrap();
                assert_eq!(l.count(SiteClass::Zero), n - 2);
                assert_eq!(l.count(SiteClass::Boson), 1);
                assert_eq!(l.count(SiteClass::Fermion), 1);
            }
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(sis_q(3, 0).is_err());
        assert!(sis_q(3, 3).is_err());
        assert!(doubled_q(0).is_err());
        let not_nilpotent = DMatrix::from_row_slice(2, 2, &[re(0.0), re(1.0), re(1.0), re(0.0)]);
        assert!(LocalChargeSet::from_q(not_nilpotent).is_err());
    }

    #[test]
    fn projector_sum_is_identity_without_zero_modes() {
        let l = LocalChargeSet::from_q(doubled_q(3).unwrap()).unwrap();
        let sum = &l.boson_projector + &l.fermion_projector;
        assert!((sum - DMatrix::<C64>::identity(6, 6)).norm() < 1e-14);
    }
}
