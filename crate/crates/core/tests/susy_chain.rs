mod common;

use susyanyon::susy::*;
use susyanyon::tensor::{anticommutator, kernel_basis_blocked, ChainBasisState};
use susyanyon::zeromodes::kernel_census;

fn models() -> Vec<Box<dyn ChainModel>> {
    vec![
        Box::new(QubitFibChain::new()),
        Box::new(DoubledJkChain::new(2).unwrap()),
        Box::new(IsingChain::new(2).unwrap()),
        Box::new(NicolaiChain::new()),
        Box::new(SisChain::new(3, 1).unwrap()),
        Box::new(SisChain::new(4, 2).unwrap()),
    ]
}

#[test]
fn algebra_holds_for_every_model() {
    for m in models() {
        let sizes: &[usize] = match m.local_dim() {
            2 => &[3, 5, 7],
            _ => &[3, 5],
        };
        for &n in sizes {
            let report = verify_susy(m.as_ref(), n, 1e-9).unwrap();
            assert!(report.passed(), "{}", report.to_pretty());
        }
    }
}

#[test]
fn nicolai_rejects_even_chains() {
    assert!(NicolaiChain::new().supercharge(4).is_err());
}

#[test]
fn kernel_dims_match_elimination_rank() {
    // ker H has dimension dim − rank H; the oracle eliminates the dense H.
    for n in 3..=7 {
        let m = QubitFibChain::new();
        let q = m.supercharge(n).unwrap();
        let h = anticommutator(&q, &q.adjoint()).unwrap();
        let rank = common::rank(&h.to_dense(), 1e-10);
        let census = kernel_census(&m, n).unwrap();
        assert_eq!(census.kernel_total, h.n_rows() - rank, "N={n}");
        assert_eq!(
            kernel_basis_blocked(&h, KERNEL_REL_TOL).unwrap().dim(),
            h.n_rows() - rank
        );
    }
}

#[test]
fn sector_kernels_match_elimination_rank() {
    let m = QubitFibChain::new();
    let n = 7;
    let q = m.supercharge(n).unwrap();
    let h = anticommutator(&q, &q.adjoint()).unwrap();
    let census = kernel_census(&m, n).unwrap();
    for sector in &census.sectors {
        let idx: Vec<usize> = (0..1 << n)
            .filter(|&i| {
                let s = ChainBasisState::unrank(2, n, i).unwrap();
                s.digits().iter().filter(|&&d| d == 0).count() == sector.boson_number
            })
            .collect();
        let block = h.submatrix(&idx, &idx);
        assert_eq!(sector.kernel_dim, idx.len() - common::rank(&block, 1e-10));
    }
}

#[test]
fn witten_index_equals_full_trace() {
    for m in [
        Box::new(QubitFibChain::new()) as Box<dyn ChainModel>,
        Box::new(DoubledJkChain::new(2).unwrap()),
        Box::new(SisChain::new(3, 1).unwrap()),
    ] {
        for n in [3, 4] {
            let w = witten_index(m.as_ref(), n).unwrap();
            assert_eq!(w.index, w.full_trace, "{} N={n}", m.name());
            assert!((w.kernel_trace - w.index as f64).abs() < 1e-8);
        }
    }
}

#[test]
fn registry_builds_what_descriptors_name() {
    let reg = ModelRegistry::builtin();
    let names: Vec<&str> = reg.names().collect();
    assert_eq!(
        names,
        vec!["ising-chain", "jk-chain", "nicolai", "qubit-fib", "sis"]
    );
    for name in names {
        let params = if name == "sis" {
            ModelParams {
                n: Some(5),
                r: Some(2),
                ..Default::default()
            }
        } else {
            ModelParams::default()
        };
        let model = reg.create(name, &params).unwrap();
        let desc = SusyModel::of(model.as_ref(), 5);
        let back = SusyModel::from_json(&desc.to_json().unwrap()).unwrap();
        assert_eq!(back, desc);
        assert_eq!(back.instantiate().unwrap().local_dim(), model.local_dim());
    }
}

#[test]
fn sis_five_two_local_structure() {
    let local = SisChain::new(5, 2).unwrap();
    let l = local.local();
    assert_eq!(l.count(SiteClass::Zero), 3);
    assert_eq!(l.count(SiteClass::Boson), 1);
    assert_eq!(l.count(SiteClass::Fermion), 1);
    // q b = 0, q f = b, and zero modes are killed by both.
    for s in &l.states {
        let qv = &l.q * &s.vector;
        let qdv = &l.q_dag * &s.vector;
        match s.class {
            SiteClass::Zero => assert!(qv.norm() < 1e-12 && qdv.norm() < 1e-12),
            SiteClass::Boson => assert!(qv.norm() < 1e-12 && (qdv.norm() - 1.0).abs() < 1e-12),
            SiteClass::Fermion => assert!(qdv.norm() < 1e-12 && (qv.norm() - 1.0).abs() < 1e-12),
        }
    }
}
