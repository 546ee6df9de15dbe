use cicy_core::web::{connect, connect_to_c1111, random_cicy, verify_chain, Violation};
use cicy_core::{BigInt, ConfigurationMatrix, StepKind, TransitionChain};

fn cfg(rows: &[(u32, &[i64])]) -> ConfigurationMatrix {
    ConfigurationMatrix::from_rows(rows).unwrap()
}

#[test]
fn random_configurations_reach_c1111() {
    for seed in 1000..1080 {
        let c = random_cicy(seed, 7, 9, 7);
        let chain = connect_to_c1111(&c).unwrap_or_else(|e| panic!("{}\n{}", e, c));
        let report = verify_chain(&chain).unwrap_or_else(|e| panic!("{}\n{}", e, c));
        assert!(report.ends_at_c1111);
        for step in &report.steps {
            let r = &step.report;
            assert_eq!(
                &r.euler_resolved - &r.euler_smoothed,
                BigInt::from(2) * &r.odp_count
            );
        }
    }
}

#[test]
fn reversed_chains_reach_the_start() {
    for seed in 0..20 {
        let c = random_cicy(seed, 6, 8, 5);
        let up = connect_to_c1111(&c).unwrap().reversed().unwrap();
        assert!(up.start().is_equivalent(&ConfigurationMatrix::c1111()));
        assert!(up.end().is_equivalent(&c));
        verify_chain(&up).unwrap();
    }
}

#[test]
fn any_two_configurations_connect() {
    for seed in 0..10 {
        let a = random_cicy(2 * seed, 6, 8, 5);
        let b = random_cicy(2 * seed + 1, 6, 8, 5);
        let chain = connect(&a, &b).unwrap();
        verify_chain(&chain).unwrap();
        assert_eq!(chain.start(), &a);
        assert!(chain.end().is_equivalent(&b));
    }
}

#[test]
fn hand_built_chain_through_the_quintic() {
    let mut chain = TransitionChain::new(cfg(&[(4, &[5])]));
    chain
        .push_split(0, 1, vec![vec![4].into(), vec![1].into()])
        .unwrap();
    let step = &chain.steps()[0];
    let report = step.report.as_ref().unwrap();
    assert_eq!(report.odp_count, BigInt::from(16));
    assert_eq!(chain.end(), &cfg(&[(4, &[4, 1]), (1, &[1, 1])]));
    chain.push_contract(1).unwrap();
    assert_eq!(chain.end(), &cfg(&[(4, &[5])]));
    let verified = verify_chain(&chain).unwrap();
    assert_eq!(verified.steps.len(), 2);
    assert!(!verified.ends_at_c1111);
}

#[test]
fn illegal_split_is_reported_with_its_step() {
    let chain = connect_to_c1111(&cfg(&[(3, &[4]), (1, &[2])])).unwrap();
    let mut steps = chain.steps().to_vec();
    if let StepKind::Split { parts, .. } = &mut steps[0].kind {
        parts[0].0[0] += 1;
    } else {
        panic!("first step of this walk is a split");
    }
    let bad = TransitionChain::from_parts(chain.start().clone(), steps, chain.end().clone());
    let failure = verify_chain(&bad).unwrap_err();
    assert_eq!(failure.step, Some(0));
    assert!(matches!(failure.violation, Violation::Illegal(_)));
}

#[test]
fn block_diagonal_start_is_rejected() {
    let bad = cfg(&[(2, &[3, 0]), (3, &[0, 4])]);
    let chain = TransitionChain::new(bad);
    let failure = verify_chain(&chain).unwrap_err();
    assert_eq!(failure.step, None);
    assert!(matches!(failure.violation, Violation::InvalidStart(_)));
}
