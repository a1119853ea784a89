mod common;

use num_traits::ToPrimitive;
use proptest::prelude::*;
use susyanyon::anyon::*;
use susyanyon::counting;
use susyanyon::Error;

fn models() -> Vec<AnyonModel> {
    [
        AnyonKind::Ising,
        AnyonKind::Fibonacci,
        AnyonKind::JonesKauffman,
    ]
    .into_iter()
    .map(AnyonModel::builtin)
    .collect()
}

#[test]
fn basis_size_matches_closed_forms() {
    for m in models() {
        for n in 2..=20 {
            for outcome in 0..m.n_species() {
                let closed = fusion_dim(&m, n, outcome).unwrap();
                let transfer = fusion_dim_transfer(&m, n, outcome).unwrap();
                assert_eq!(closed, transfer, "{} N={n} outcome {outcome}", m.name());
                let listed = fusion_basis(&m, n, outcome).unwrap();
                assert_eq!(listed.len(), closed.to_usize().unwrap());
                assert!(listed.windows(2).all(|w| w[0].labels() < w[1].labels()));
            }
        }
    }
}

#[test]
fn jk_tau_split_is_previous_total() {
    let jk = AnyonModel::builtin(AnyonKind::JonesKauffman);
    for n in 3..=20 {
        // Sequences ending in τ before the outcome are those of one fewer anyon with τ inserted.
        let ending_tau = fusion_basis(&jk, n, 1)
            .unwrap()
            .iter()
            .filter(|s| s.labels().last() == Some(&1))
            .count();
        assert_eq!(ending_tau, counting::jk_fusion(n - 1).to_usize().unwrap());
    }
}

#[test]
fn fibonacci_growth_ratio() {
    let f = AnyonModel::builtin(AnyonKind::Fibonacci);
    let d = |n| fusion_dim(&f, n, 1).unwrap().to_f64().unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((d(31) / d(30) - phi).abs() < 1e-6);
    for n in 2..=40 {
        assert_eq!(fusion_dim(&f, n, 1).unwrap(), common::fib(n).into());
    }
}

#[test]
fn listed_examples() {
    let jk = AnyonModel::builtin(AnyonKind::JonesKauffman);
    assert_eq!(fusion_basis(&jk, 3, 1).unwrap().len(), 3);
    let js: Vec<u32> = (3..=8)
        .map(|n| fusion_dim(&jk, n, 1).unwrap().to_u32().unwrap())
        .collect();
    assert_eq!(js, vec![3, 5, 11, 21, 43, 85]);
    let f = AnyonModel::builtin(AnyonKind::Fibonacci);
    assert_eq!(fusion_dim(&f, 5, 1).unwrap(), 5u32.into());
}

#[test]
fn ising_sequences_alternate() {
    let m = AnyonModel::builtin(AnyonKind::Ising);
    for seq in fusion_basis(&m, 7, 1).unwrap() {
        for (k, &x) in seq.labels().iter().enumerate() {
            // Odd positions carry 1 or ψ, even positions σ.
            assert_eq!(x == 1, k % 2 == 1, "{}", seq.render(&m));
        }
    }
}

#[test]
fn axioms_hold_for_builtins_and_catch_asymmetry() {
    for m in models() {
        assert!(verify_fusion_axioms(&m).passed(), "{}", m.name());
    }
    let jk = AnyonModel::builtin(AnyonKind::JonesKauffman);
    let lopsided = jk.with_channels(1, 2, vec![1, 2]).unwrap();
    assert!(!verify_fusion_axioms(&lopsided).passed());
    let duplicate = jk.with_channels(2, 2, vec![0, 0]).unwrap();
    let report = verify_fusion_axioms(&duplicate);
    assert!(report.violations.iter().any(|v| v.contains("multiplicity")));
}

#[test]
fn custom_model_uses_transfer_counts() {
    // A table equal to Fibonacci but built by hand.
    let m = AnyonModel::custom(
        "hand-fib",
        vec!["1".into(), "t".into()],
        0,
        1,
        &[
            (0, 0, vec![0]),
            (0, 1, vec![1]),
            (1, 0, vec![1]),
            (1, 1, vec![0, 1]),
        ],
    )
    .unwrap();
    assert!(verify_fusion_axioms(&m).passed());
    for n in 2..=15 {
        assert_eq!(fusion_dim(&m, n, 1).unwrap(), counting::fibonacci(n));
    }
    assert!(AnyonModel::custom("bad", vec!["1".into()], 0, 3, &[]).is_err());
}

proptest! {
    #[test]
    fn mutated_label_rejected_or_still_valid(
        kind in 0usize..3,
        n in 3usize..12,
        pick in any::<prop::sample::Index>(),
        pos in any::<prop::sample::Index>(),
        new_label in 0usize..3,
    ) {
        let m = models().swap_remove(kind);
        let outcome = m.generator();
        let basis = fusion_basis(&m, n, outcome).unwrap();
        prop_assume!(!basis.is_empty());
        let seq = pick.get(&basis);
        prop_assume!(!seq.labels().is_empty());
        let mut labels = seq.labels().to_vec();
        let k = pos.index(labels.len());
        let new_label = new_label % m.n_species();
        prop_assume!(labels[k] != new_label);
        labels[k] = new_label;
        let in_basis = basis.iter().any(|s| s.labels() == labels.as_slice());
        match FusionSequence::new(&m, labels, outcome) {
            Ok(_) => prop_assert!(in_basis),
            Err(Error::Forbidden(_)) => prop_assert!(!in_basis),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn rendered_sequences_parse_back(n in 2usize..12) {
        let f = AnyonModel::builtin(AnyonKind::Fibonacci);
        for seq in fusion_basis(&f, n, 1).unwrap() {
            let again = FusionSequence::parse(&f, &seq.render(&f), 1).unwrap();
            prop_assert_eq!(again, seq);
        }
    }
}
