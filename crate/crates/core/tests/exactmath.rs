use discq_core::exactmath::{cyclo, det_center, det_exact, CycloNumber, IntegerDomain, PolyDomain, CenterPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn vars() -> Vec<String> {
    vec!["x1".into(), "x2".into()]
}

fn int(k: i64) -> CycloNumber {
    CycloNumber::from_int(k)
}

fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
    (proptest::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]), proptest::collection::vec(-4i64..=4, 12)).prop_map(
        |(order, cs)| {
            cs.iter()
                .take(order as usize)
                .enumerate()
                .fold(CycloNumber::zero(), |acc, (k, &c)| acc + int(c) * cyclo(order, k as i64))
        },
    )
}

fn arb_poly() -> impl Strategy<Value = CenterPoly> {
    proptest::collection::vec((0u32..=2, 0u32..=2, -3i64..=3), 0..=3)
        .prop_map(|ts| CenterPoly::from_terms(vars(), ts.into_iter().map(|(a, b, c)| (vec![a, b], int(c)))))
}

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<CenterPoly>>> {
    (1usize..=4).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(arb_poly(), n), n))
}

/// Laplace expansion along the first row.
fn cofactor(m: &[Vec<CenterPoly>]) -> CenterPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = CenterPoly::zero(vars());
    for j in 0..n {
        let minor: Vec<Vec<CenterPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul(&cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[test]
fn small_roots() {
    assert_eq!(cyclo(2, 1), int(-1));
    assert_eq!(cyclo(4, 2), int(-1));
    assert_eq!(cyclo(3, 1) + cyclo(3, 2), int(-1));
    assert_eq!(cyclo(7, 7), int(1));
    assert_eq!(cyclo(5, -1), cyclo(5, 4));
}

#[test]
fn canonical_forms_agree() {
    assert_eq!(cyclo(12, 4), cyclo(3, 1));
    assert_eq!(cyclo(6, 3), int(-1));
    assert_eq!(cyclo(8, 2), cyclo(4, 1));
    let sum: CycloNumber = (0..5).fold(CycloNumber::zero(), |a, k| a + cyclo(5, k));
    assert!(sum.is_zero());
    let s = cyclo(12, 3) * cyclo(12, 3);
    assert_eq!(s.coeffs(), int(-1).coeffs());
    assert_eq!(s.order(), int(-1).order());
}

#[test]
fn determinant_examples() {
    let one = CenterPoly::one(vars());
    assert_eq!(det_center(&[vec![one.clone()]]).unwrap(), one);
    let x = CenterPoly::var(vars(), 0);
    let y = CenterPoly::var(vars(), 1);
    let z = CenterPoly::zero(vars());
    assert_eq!(det_center(&[vec![x.clone(), z.clone()], vec![z.clone(), y.clone()]]).unwrap(), x.mul(&y));
    let diag = [
        CenterPoly::constant(vars(), int(2)),
        CenterPoly::monomial(vars(), vec![2, 0], int(2)),
        CenterPoly::monomial(vars(), vec![0, 2], int(2)),
        CenterPoly::monomial(vars(), vec![2, 2], int(-2)),
    ];
    let m: Vec<Vec<CenterPoly>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { diag[i].clone() } else { z.clone() }).collect())
        .collect();
    assert_eq!(det_center(&m).unwrap(), CenterPoly::monomial(vars(), vec![4, 4], int(-16)));
}

#[test]
fn integer_bareiss() {
    let m: Vec<Vec<BigInt>> = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    assert_eq!(det_exact(&IntegerDomain, &m).unwrap(), BigInt::from(4));
}

#[test]
fn non_square_rejected() {
    let m = vec![vec![CenterPoly::one(vars()); 2]];
    assert!(det_exact(&PolyDomain { vars: vars() }, &m).is_err());
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor(m in arb_matrix()) {
        prop_assert_eq!(det_center(&m).unwrap(), cofactor(&m));
    }

    #[test]
    fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * CycloNumber::one(), a.clone());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!((a.clone() * b.clone()) * inv, b);
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    /// The same value built from ζ_n and from ζ_{2n}^2 is stored identically.
    #[test]
    fn representation_is_canonical(order in 1u32..=9, cs in proptest::collection::vec(-3i64..=3, 9)) {
        let direct = cs.iter().take(order as usize).enumerate()
            .fold(CycloNumber::zero(), |acc, (k, &c)| acc + int(c) * cyclo(order, k as i64));
        let lifted = cs.iter().take(order as usize).enumerate()
            .fold(CycloNumber::zero(), |acc, (k, &c)| acc + int(c) * cyclo(2 * order, 2 * k as i64));
        prop_assert_eq!(direct.order(), lifted.order());
        prop_assert_eq!(direct.coeffs(), lifted.coeffs());
    }
}
