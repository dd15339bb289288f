mod common;

use common::*;
use discq_core::centerlat::in_sector;
use discq_core::exactmath::{cyclo, CycloNumber, LaurentQ};
use discq_core::skewring::{
    derivation_verify, endo_compose, endo_verify, mono_gcd, Derivation, Endomorphism, Monomial, RingPresentation,
    SkewAlgebra, SkewPoly,
};
use proptest::prelude::*;

fn mono(exps: &[u32]) -> Monomial<CycloNumber> {
    Monomial::unit(exps.to_vec())
}

#[test]
fn mono_mul_examples() {
    let qplane = root(5, 2, &[&[1]]);
    let alg = SkewAlgebra::<CycloNumber>::new(&qplane).unwrap();
    let m = Monomial::new(vec![2, 1], cyclo(5, 3));
    assert_eq!(alg.mono_mul(&m, &mono(&[0, 0])).unwrap(), m);
    assert_eq!(alg.mono_mul(&mono(&[0, 0]), &m).unwrap(), m);
    assert_eq!(
        alg.mono_mul(&mono(&[0, 1]), &mono(&[1, 0])).unwrap(),
        Monomial::new(vec![1, 1], cyclo(5, 1))
    );

    let minus = root(2, 2, &[&[1]]);
    let alg = SkewAlgebra::<CycloNumber>::new(&minus).unwrap();
    assert_eq!(
        alg.mono_mul(&mono(&[1, 1]), &mono(&[1, 1])).unwrap(),
        Monomial::new(vec![2, 2], CycloNumber::from_int(-1))
    );
    assert!(alg.mono_mul(&mono(&[1]), &mono(&[1, 1])).is_err());

    let formal_plane = formal(2, &[&[1]]);
    let alg = SkewAlgebra::<LaurentQ>::new(&formal_plane).unwrap();
    let prod = alg.mono_mul(&Monomial::unit(vec![0, 1]), &Monomial::unit(vec![1, 0])).unwrap();
    assert_eq!(prod, Monomial::new(vec![1, 1], LaurentQ::monomial(1, CycloNumber::one())));
}

#[test]
fn endo_verify_examples() {
    let qplane = root(5, 2, &[&[1]]);
    let alg = SkewAlgebra::<CycloNumber>::new(&qplane).unwrap();
    assert!(endo_verify(&alg, &Endomorphism::identity(2)));
    let swap = Endomorphism {
        images: vec![SkewPoly::var(2, 1), SkewPoly::var(2, 0)],
    };
    assert!(!endo_verify(&alg, &swap));
    let minus = SkewAlgebra::<CycloNumber>::new(&root(2, 2, &[&[1]])).unwrap();
    assert!(endo_verify(&minus, &swap));
}

#[test]
fn derivation_examples() {
    let alg = SkewAlgebra::<CycloNumber>::new(&root(5, 2, &[&[1]])).unwrap();
    let zero = Derivation {
        images: vec![SkewPoly::zero(2), SkewPoly::zero(2)],
    };
    assert!(derivation_verify(&alg, &zero));
    let euler = Derivation {
        images: vec![SkewPoly::var(2, 0), SkewPoly::zero(2)],
    };
    assert!(derivation_verify(&alg, &euler));
    // ∂(x1) = 1 is not compatible with x2 x1 = q x1 x2 for q ≠ 1
    let shift = Derivation {
        images: vec![SkewPoly::one(2), SkewPoly::zero(2)],
    };
    assert!(!derivation_verify(&alg, &shift));
}

#[test]
fn mono_gcd_examples() {
    let ms: Vec<Monomial<CycloNumber>> = (0..=4).map(|i| mono(&[4, i, 4 - i])).collect();
    assert_eq!(mono_gcd(&ms).unwrap(), mono(&[4, 0, 0]));
    let single = Monomial::new(vec![1, 2, 3], cyclo(3, 1));
    assert_eq!(mono_gcd(&[single]).unwrap(), mono(&[1, 2, 3]));
    assert!(mono_gcd::<CycloNumber>(&[]).is_err());
}

#[test]
fn presentation_validation() {
    assert!(RingPresentation::root_of_unity(3, vec![vec![0, 1], vec![1, 0]]).is_err());
    assert!(RingPresentation::root_of_unity(3, vec![vec![0, 1], vec![2, 0]]).is_ok());
    assert!(RingPresentation::root_of_unity(3, vec![vec![1, 1], vec![2, 0]]).is_err());
    assert!(RingPresentation::formal(vec![vec![0, 1], vec![1, 0]], None).is_err());
    // entries are reduced mod ℓ
    let r = RingPresentation::root_of_unity(4, vec![vec![0, 5], vec![-5, 0]]).unwrap();
    assert_eq!(r.phi(), &[vec![0, 1], vec![3, 0]]);
}

fn arb_mono(n: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..=4, n)
}

fn arb_case() -> impl Strategy<Value = (RingPresentation, Vec<u32>, Vec<u32>, Vec<u32>)> {
    arb_root(2..=4, vec![2, 3, 4, 5, 6]).prop_flat_map(|r| {
        let n = r.n();
        (Just(r), arb_mono(n), arb_mono(n), arb_mono(n))
    })
}

/// Elementary map x_s ↦ x_s + c·x^d with x_s absent from d (valid only when d ∈ T_s).
fn shear(n: usize, s: usize, d: &[u32], c: CycloNumber) -> Endomorphism<CycloNumber> {
    let mut g = Endomorphism::identity(n);
    g.images[s] = g.images[s].add(&SkewPoly::monomial(d.to_vec(), c));
    g
}

proptest! {
    #[test]
    fn associativity((r, a, b, c) in arb_case()) {
        let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
        let (a, b, c) = (mono(&a), mono(&b), mono(&c));
        let left = alg.mono_mul(&alg.mono_mul(&a, &b).unwrap(), &c).unwrap();
        let right = alg.mono_mul(&a, &alg.mono_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// x^a x^b = (∏_{i<j} p_ij^{a_j b_i − a_i b_j}) x^b x^a.
    #[test]
    fn commutation_ratio((r, a, b, _) in arb_case()) {
        let ell = r.ell().unwrap();
        let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
        let ab = alg.mono_mul(&mono(&a), &mono(&b)).unwrap();
        let ba = alg.mono_mul(&mono(&b), &mono(&a)).unwrap();
        let mut e = 0i64;
        for j in 0..r.n() {
            for i in 0..j {
                e += r.phi()[i][j] * (a[j] as i64 * b[i] as i64 - a[i] as i64 * b[j] as i64);
            }
        }
        prop_assert_eq!(ab.coeff, ba.coeff * cyclo(ell, e));
    }

    /// Composition is associative on valid maps, the identity is neutral, and g(F)∘g(−F) = id.
    #[test]
    fn compose_laws(r in arb_root(2..=3, vec![2, 3, 4]), picks in proptest::collection::vec((0usize..3, arb_mono(3)), 3)) {
        let n = r.n();
        let alg = SkewAlgebra::<CycloNumber>::new(&r).unwrap();
        let mut shears = Vec::new();
        let maps: Vec<Endomorphism<CycloNumber>> = picks
            .iter()
            .enumerate()
            .map(|(k, (s, d))| {
                let s = s % n;
                let mut d = d[..n].to_vec();
                d[s] = 0;
                if in_sector(&r, s, &d) {
                    shears.push((s, d.clone()));
                    shear(n, s, &d, CycloNumber::from_int(2))
                } else {
                    // fall back to a diagonal scaling, always an automorphism
                    Endomorphism {
                        images: (0..n)
                            .map(|i| SkewPoly::var(n, i).scale(&CycloNumber::from_int((i + k + 2) as i64)))
                            .collect(),
                    }
                }
            })
            .collect();
        for g in &maps {
            prop_assert!(endo_verify(&alg, g));
        }
        let id = Endomorphism::identity(n);
        let (f, g, h) = (&maps[0], &maps[1], &maps[2]);
        prop_assert_eq!(endo_compose(&alg, &endo_compose(&alg, f, g), h), endo_compose(&alg, f, &endo_compose(&alg, g, h)));
        prop_assert_eq!(&endo_compose(&alg, &id, f), f);
        prop_assert_eq!(&endo_compose(&alg, f, &id), f);
        for (s, d) in shears {
            let g = shear(n, s, &d, CycloNumber::from_int(2));
            let inverse = shear(n, s, &d, CycloNumber::from_int(-2));
            prop_assert!(endo_verify(&alg, &inverse));
            prop_assert!(endo_compose(&alg, &g, &inverse).is_identity());
            prop_assert!(endo_compose(&alg, &inverse, &g).is_identity());
        }
    }
}
