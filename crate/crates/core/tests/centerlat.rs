mod common;

use std::collections::BTreeSet;

use common::*;
use discq_core::centerlat::{
    center_info, central_test, expand_sector_vector, for_each_in_box, in_sector, pfaffian_criterion, sector_info,
    SearchBound, SectorStatus,
};
use discq_core::skewring::RingPresentation;
use discq_core::Error;
use proptest::prelude::*;

fn key(r: &RingPresentation, d: &[u32]) -> Vec<i64> {
    let ell = r.ell().unwrap() as i64;
    (0..r.n())
        .map(|i| (0..r.n()).map(|j| r.phi()[i][j] * d[j] as i64).sum::<i64>().rem_euclid(ell))
        .collect()
}

#[test]
fn central_test_examples() {
    let r = sign_degenerate();
    assert!(central_test(&r, &[0, 0, 0]));
    assert!(central_test(&r, &[2, 0, 0]));
    assert!(central_test(&r, &[0, 1, 1]));
    assert!(!central_test(&r, &[1, 0, 0]));
    let r = quarter_affine();
    for i in 0..4 {
        let mut e = vec![0; 4];
        e[i] = 4;
        assert!(central_test(&r, &e));
    }
}

#[test]
fn center_examples() {
    let c = center_info(&sixth_polynomial()).unwrap();
    assert_eq!(c.generators, vec![vec![0, 2, 0], vec![0, 0, 3], vec![6, 0, 0]]);
    assert!(c.is_polynomial);
    assert_eq!(c.axis_exponents, Some(vec![6, 2, 3]));
    assert_eq!(c.rank, 36);
    assert_eq!(c.quasi_basis.len(), 36);
    assert_eq!(c.quasi_basis[0], vec![0, 0, 0]);

    // (a, b, c) = (2, 3, 5), ℓ = 30
    let r = root(30, 3, &[&[6, 10], &[15]]);
    let c = center_info(&r).unwrap();
    assert_eq!(c.axis_exponents, Some(vec![15, 10, 6]));
    assert_eq!(c.rank, 900);

    let c = center_info(&quarter_affine()).unwrap();
    assert!(!c.is_polynomial);
    let expected: BTreeSet<Vec<u32>> = [
        [4, 0, 0, 0],
        [0, 4, 0, 0],
        [0, 0, 4, 0],
        [0, 0, 0, 4],
        [2, 2, 2, 0],
        [2, 2, 0, 2],
        [0, 0, 2, 2],
    ]
    .iter()
    .map(|v| v.to_vec())
    .collect();
    assert_eq!(c.generators.iter().cloned().collect::<BTreeSet<_>>(), expected);
    let mut in_box = 0u64;
    for_each_in_box(4, 4, |d| in_box += central_test(&quarter_affine(), d) as u64);
    assert_eq!(c.rank * in_box, 256);

    assert!(matches!(center_info(&formal_finite()), Err(Error::Precondition(_))));
}

#[test]
fn sector_examples() {
    let b = SearchBound::default();
    let r = formal(3, &[&[1, 1], &[1]]);
    assert_eq!(sector_info(&r, 1, &b).unwrap().status, SectorStatus::Finite(vec![vec![1, 1]]));

    let r = formal_finite();
    assert_eq!(sector_info(&r, 0, &b).unwrap().status, SectorStatus::Empty);
    assert_eq!(sector_info(&r, 1, &b).unwrap().status, SectorStatus::Finite(vec![vec![2, 3]]));
    assert_eq!(sector_info(&r, 2, &b).unwrap().status, SectorStatus::Empty);

    let r = uniform(4, 5);
    for s in 0..4 {
        assert!(sector_info(&r, s, &b).unwrap().is_empty());
    }

    // root-part congruences alone rule these out
    let r = formal_with_cube_root();
    assert!(sector_info(&r, 3, &b).unwrap().is_empty());
    assert!(sector_info(&r, 4, &b).unwrap().is_empty());
    assert!(!sector_info(&r, 0, &b).unwrap().is_finite());
}

#[test]
fn formal_bound_is_surfaced() {
    // T_1 is unbounded with a degree-one base, out of reach of a zero degree cap
    let r = formal_with_cube_root();
    let tight = SearchBound {
        max_degree: 0,
        ..SearchBound::default()
    };
    match sector_info(&r, 0, &tight) {
        Err(Error::Undetermined(_)) => {}
        other => panic!("expected undetermined, got {:?}", other),
    }
}

#[test]
fn pfaffian_examples() {
    for ell in 2..=7 {
        assert!(pfaffian_criterion(&uniform(2, ell)).unwrap());
        assert!(pfaffian_criterion(&uniform(4, ell)).unwrap());
        assert!(!pfaffian_criterion(&uniform(3, ell)).unwrap());
        let c = center_info(&uniform(4, ell)).unwrap();
        assert_eq!(c.axis_exponents, Some(vec![ell; 4]));
    }
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn center_soundness_and_completeness(r in arb_root(2..=4, vec![2, 3, 4, 5, 6])) {
        let n = r.n();
        let ell = r.ell().unwrap();
        let c = center_info(&r).unwrap();
        for g in &c.generators {
            prop_assert!(central_test(&r, g));
        }
        // T ∩ [0, 2ℓ]^n against the monoid generated inside the box
        let top = 2 * ell;
        let mut closure: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut frontier = vec![vec![0u32; n]];
        closure.insert(vec![0; n]);
        while let Some(v) = frontier.pop() {
            for g in &c.generators {
                let w: Vec<u32> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                if w.iter().all(|&x| x <= top) && closure.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        let mut direct = BTreeSet::new();
        for_each_in_box(n, top + 1, |d| {
            if central_test(&r, d) {
                direct.insert(d.to_vec());
            }
        });
        prop_assert_eq!(closure, direct);

        let mut in_box = 0u64;
        for_each_in_box(n, ell, |d| in_box += central_test(&r, d) as u64);
        prop_assert_eq!(c.rank * in_box, (ell as u64).pow(n as u32));
    }

    #[test]
    fn quasi_basis_is_a_transversal(r in arb_root(2..=4, vec![2, 3, 4, 5, 6])) {
        let c = center_info(&r).unwrap();
        prop_assert_eq!(c.quasi_basis.len() as u64, c.rank);
        prop_assert_eq!(&c.quasi_basis[0], &vec![0u32; r.n()]);
        let keys: BTreeSet<Vec<i64>> = c.quasi_basis.iter().map(|q| key(&r, q)).collect();
        prop_assert_eq!(keys.len() as u64, c.rank);
        let ell = r.ell().unwrap();
        let mut ok = true;
        for_each_in_box(r.n(), ell, |d| ok &= keys.contains(&key(&r, d)));
        prop_assert!(ok);
        if c.is_polynomial {
            let axes = c.axis_exponents.clone().unwrap();
            prop_assert_eq!(axes.iter().map(|&a| a as u64).product::<u64>(), c.rank);
        }
    }

    #[test]
    fn sectors_are_sound(r in arb_root(2..=4, vec![2, 3, 4, 5, 6])) {
        let n = r.n();
        let ell = r.ell().unwrap();
        for s in 0..n {
            let info = sector_info(&r, s, &SearchBound::default()).unwrap();
            let mut brute = Vec::new();
            for_each_in_box(n - 1, ell, |d| {
                if in_sector(&r, s, &expand_sector_vector(s, d)) {
                    brute.push(d.to_vec());
                }
            });
            match &info.status {
                SectorStatus::Empty => prop_assert!(brute.is_empty()),
                SectorStatus::InfinitePeriodic { residues, period } => {
                    prop_assert_eq!(*period, ell);
                    prop_assert_eq!(residues, &brute);
                    for d in residues {
                        let full = expand_sector_vector(s, d);
                        // the i = s congruence holds automatically
                        prop_assert!(r.param_is_one(r.row_product(s, &full, Some(s))));
                    }
                    prop_assert!(info.has_deg2_element);
                }
                other => prop_assert!(false, "root mode returned {:?}", other),
            }
        }
    }
}
