mod common;

use common::*;
use discq_core::autgroup::graded_perm_group;
use discq_core::centerlat::{center_info, central_test, expand_sector_vector, for_each_in_box, in_sector, sector_info, SearchBound};
use discq_core::discriminant::{
    disc_free_closed_form, disc_pair, disc_v, disc_v_enumerate, disc_v_with, dominating_test, tensor_disc, trace_mono,
    DiscOptions, DiscRoute, DominatingCertificate,
};
use discq_core::exactmath::CycloNumber;
use discq_core::skewring::{mono_gcd, Monomial, RingPresentation, SkewAlgebra, SkewPoly};
use proptest::prelude::*;

fn m(exps: &[u32]) -> SkewPoly<CycloNumber> {
    SkewPoly::monomial(exps.to_vec(), CycloNumber::one())
}

fn value(r: &RingPresentation, v: u64) -> Option<Vec<u32>> {
    disc_v(r, &center_info(r).unwrap(), v).unwrap().value
}

#[test]
fn traces_of_example_1_3_2() {
    let r = sixth_polynomial();
    let c = center_info(&r).unwrap();
    let t = trace_mono(&r, &c, &Monomial::unit(vec![0, 0, 0]));
    assert_eq!(t.coeff, CycloNumber::from_int(36));
    for q in &c.quasi_basis[1..] {
        assert!(trace_mono(&r, &c, &Monomial::unit(q.clone())).coeff.is_zero());
    }
    let c4 = center_info(&sign_quarter()).unwrap();
    assert_eq!(trace_mono(&sign_quarter(), &c4, &Monomial::unit(vec![0, 0, 0])).coeff, CycloNumber::from_int(16));
}

#[test]
fn worked_discriminants() {
    let r = sixth_polynomial();
    let c = center_info(&r).unwrap();
    let d = disc_v(&r, &c, 36).unwrap();
    assert_eq!(d.value, Some(vec![180, 36, 72]));
    assert_eq!(disc_free_closed_form(&c).unwrap().value, d.value);

    assert_eq!(value(&sign_quarter(), 16), Some(vec![0, 16, 16]));
    assert_eq!(value(&sixth_dominating(), 36), Some(vec![72, 36, 72]));
}

#[test]
fn ladder_of_example_1_3_3() {
    let r = sign_degenerate();
    let c = center_info(&r).unwrap();
    assert_eq!(c.rank, 4);
    let ladder: Vec<Option<Vec<u32>>> = (1..=5).map(|v| disc_v(&r, &c, v).unwrap().value).collect();
    assert_eq!(
        ladder,
        vec![Some(vec![0, 0, 0]), Some(vec![0, 0, 0]), Some(vec![2, 0, 0]), Some(vec![4, 0, 0]), None]
    );
    let opts = DiscOptions {
        ideal_generators: true,
        ..DiscOptions::default()
    };
    let gens = disc_v_with(&r, &c, 4, &opts).unwrap().ideal_generators.unwrap();
    let expected: Vec<Vec<u32>> = (0..=4).map(|i| vec![4, i, 4 - i]).collect();
    let mut sorted = gens.clone();
    sorted.sort();
    let mut want = expected.clone();
    want.sort();
    assert_eq!(sorted, want);
}

#[test]
fn ideal_generators_of_example_1_3_4() {
    let r = sign_quarter();
    let c = center_info(&r).unwrap();
    let opts = DiscOptions {
        ideal_generators: true,
        ..DiscOptions::default()
    };
    let gens = disc_v_with(&r, &c, 16, &opts).unwrap().ideal_generators.unwrap();
    let ms: Vec<Monomial<CycloNumber>> = gens.iter().map(|g| Monomial::unit(g.clone())).collect();
    assert_eq!(mono_gcd(&ms).unwrap().exps, vec![0, 16, 16]);
}

#[test]
fn pair_examples() {
    let r = root(2, 2, &[&[1]]);
    let c = center_info(&r).unwrap();
    let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
    let z: Vec<_> = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|e| m(e)).collect();
    let d = disc_pair(&alg, &c, &z, &z).unwrap();
    assert_eq!(d, SkewPoly::monomial(vec![4, 4], CycloNumber::from_int(-256)));

    let dependent = vec![m(&[1, 0]), m(&[1, 0]).scale(&CycloNumber::from_int(3))];
    assert!(disc_pair(&alg, &c, &dependent, &dependent).unwrap().is_zero());
    assert!(disc_pair(&alg, &c, &z[..2], &z[..3]).is_err());

    // pairing z_i with the box monomial z'_i making z_i z'_i central: d = ±w^w ∏ z_i z'_i
    let r = sign_degenerate();
    let c = center_info(&r).unwrap();
    let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
    let ell = 2;
    let z: Vec<Vec<u32>> = c.quasi_basis.clone();
    let zp: Vec<Vec<u32>> = z
        .iter()
        .map(|q| {
            let mut found = None;
            for_each_in_box(3, ell, |d| {
                let s: Vec<u32> = q.iter().zip(d).map(|(a, b)| a + b).collect();
                if found.is_none() && central_test(&r, &s) {
                    found = Some(d.to_vec());
                }
            });
            found.unwrap()
        })
        .collect();
    let d = disc_pair(&alg, &c, &z.iter().map(|e| m(e)).collect::<Vec<_>>(), &zp.iter().map(|e| m(e)).collect::<Vec<_>>()).unwrap();
    let mut prod = vec![0u32; 3];
    for (a, b) in z.iter().zip(&zp) {
        for k in 0..3 {
            prod[k] += a[k] + b[k];
        }
    }
    assert_eq!(d.terms().len(), 1);
    let (e, coeff) = d.terms().iter().next().unwrap();
    assert_eq!(e, &prod);
    let w4 = CycloNumber::from_int(256);
    assert!(*coeff == w4 || *coeff == -w4.clone(), "{}", coeff);
}

#[test]
fn closed_form_examples() {
    let c = center_info(&root(2, 2, &[&[1]])).unwrap();
    let d = disc_free_closed_form(&c).unwrap();
    assert_eq!(d.value, Some(vec![4, 4]));
    assert_eq!(d.scalar, Some(CycloNumber::from_int(256)));
    assert_eq!(d.route, DiscRoute::ClosedForm);
    assert!(disc_free_closed_form(&center_info(&quarter_affine()).unwrap()).is_err());
}

#[test]
fn dominating_examples() {
    let r = sixth_polynomial();
    let c = center_info(&r).unwrap();
    let d = disc_v(&r, &c, c.rank).unwrap();
    assert!(dominating_test(&r, &c, &d).unwrap().dominating);

    let r = sign_degenerate();
    let c = center_info(&r).unwrap();
    let d = disc_v(&r, &c, c.rank).unwrap();
    let rep = dominating_test(&r, &c, &d).unwrap();
    assert!(!rep.dominating);
    assert!(matches!(rep.certificate, DominatingCertificate::Witness { s: 1 | 2 }));

    for ell in [2, 3, 5] {
        let r = uniform(3, ell);
        let c = center_info(&r).unwrap();
        let d = disc_v(&r, &c, c.rank).unwrap();
        assert_eq!(d.value, Some(vec![0, 0, 0]));
        assert!(!dominating_test(&r, &c, &d).unwrap().dominating);
    }
}

#[test]
fn tensor_examples() {
    let a = root(2, 2, &[&[1]]);
    let ca = center_info(&a).unwrap();
    let da = disc_v(&a, &ca, ca.rank).unwrap();
    let trivial = discq_core::discriminant::DiscriminantResult {
        v: 1,
        value: Some(vec![]),
        route: DiscRoute::ClosedForm,
        scalar: None,
        ideal_generators: None,
    };
    assert_eq!(tensor_disc(&da, 4, &trivial, 1).unwrap().value, da.value);

    let t = tensor_disc(&da, 4, &da, 4).unwrap();
    assert_eq!(t.value, Some(vec![16; 4]));
    let ab = a.tensor(&a).unwrap();
    assert_eq!(value(&ab, 16), t.value);
}

#[test]
fn raw_enumeration_agrees_on_tiny_rings() {
    let rings = [
        root(2, 2, &[&[1]]),
        root(3, 2, &[&[1]]),
        root(2, 2, &[&[0]]),
        sign_degenerate(),
        root(2, 3, &[&[1, 0], &[1]]),
    ];
    for r in &rings {
        let c = center_info(r).unwrap();
        for v in 1..=(c.rank as usize + 1) {
            let fast = disc_v(r, &c, v as u64).unwrap();
            let raw = disc_v_enumerate(r, &c, v, 5_000_000).unwrap();
            assert_eq!(fast.value, raw.value, "{:?} v = {}", r.phi(), v);
        }
    }
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(200))]

    /// x_s | d_w ⇔ T_s = ∅, with T_s decided by brute force over residues.
    #[test]
    fn divisibility_matches_empty_sectors(r in arb_root(2..=3, vec![2, 3, 4])) {
        let n = r.n();
        let ell = r.ell().unwrap();
        let d = value(&r, center_info(&r).unwrap().rank).unwrap();
        for s in 0..n {
            let mut empty = true;
            for_each_in_box(n - 1, ell, |e| empty &= !in_sector(&r, s, &expand_sector_vector(s, e)));
            prop_assert_eq!(d[s] >= 1, empty, "s = {}", s);
            prop_assert_eq!(sector_info(&r, s, &SearchBound::default()).unwrap().is_empty(), empty);
        }
    }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn routes_agree(r in arb_root(2..=3, vec![2, 3, 4])) {
        let c = center_info(&r).unwrap();
        if c.is_polynomial {
            let trace = disc_v(&r, &c, c.rank).unwrap();
            let closed = disc_free_closed_form(&c).unwrap();
            prop_assert_eq!(trace.value, closed.value);
        }
    }

    #[test]
    fn ladder_is_monotone_and_vanishes(r in arb_root(2..=3, vec![2, 3])) {
        let c = center_info(&r).unwrap();
        let mut prev = vec![0u32; r.n()];
        for v in 1..=c.rank {
            let d = disc_v(&r, &c, v).unwrap().value.unwrap();
            prop_assert!(prev.iter().zip(&d).all(|(a, b)| a <= b));
            prev = d;
        }
        prop_assert!(disc_v(&r, &c, c.rank + 1).unwrap().is_zero());
        prop_assert!(disc_v(&r, &c, c.rank + 7).unwrap().is_zero());
    }

    /// disc_pair on random monomial subsets is zero or homogeneous of the summed degree.
    #[test]
    fn pair_homogeneity(
        r in arb_root(2..=3, vec![2, 3, 4]),
        zs in proptest::collection::vec((proptest::collection::vec(0u32..4, 3), proptest::collection::vec(0u32..4, 3)), 1..=3),
    ) {
        let n = r.n();
        let c = center_info(&r).unwrap();
        let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
        let z: Vec<Vec<u32>> = zs.iter().map(|(a, _)| a[..n].to_vec()).collect();
        let zp: Vec<Vec<u32>> = zs.iter().map(|(_, b)| b[..n].to_vec()).collect();
        let deg: u32 = z.iter().chain(&zp).flatten().sum();
        let d = disc_pair(&alg, &c, &z.iter().map(|e| m(e)).collect::<Vec<_>>(), &zp.iter().map(|e| m(e)).collect::<Vec<_>>()).unwrap();
        for e in d.terms().keys() {
            prop_assert_eq!(e.iter().sum::<u32>(), deg);
        }
    }

    /// Graded permutation automorphisms fix the discriminant's exponent vector.
    #[test]
    fn permutations_preserve_discriminant(r in arb_root(2..=3, vec![2, 3, 4])) {
        let d = value(&r, center_info(&r).unwrap().rank).unwrap();
        for sigma in graded_perm_group(&r).unwrap().generators {
            let mut moved = vec![0u32; r.n()];
            for (i, &j) in sigma.iter().enumerate() {
                moved[j] = d[i];
            }
            prop_assert_eq!(&moved, &d);
        }
    }
}
