//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use discq_core::skewring::{complete_antisymmetric, RingPresentation, RootPart};
use proptest::prelude::*;

/// Full antisymmetric matrix from ragged upper-triangle rows: rows[i][k] is φ_{i,i+1+k}.
pub fn phi(n: usize, rows: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut upper = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            upper[i][i + 1 + k] = v;
        }
    }
    complete_antisymmetric(&upper, n)
}

pub fn root(ell: u32, n: usize, rows: &[&[i64]]) -> RingPresentation {
    RingPresentation::root_of_unity(ell, phi(n, rows)).unwrap()
}

pub fn formal(n: usize, rows: &[&[i64]]) -> RingPresentation {
    RingPresentation::formal(phi(n, rows), None).unwrap()
}

pub fn formal_with_root(n: usize, rows: &[&[i64]], ell: u32, root_rows: &[&[i64]]) -> RingPresentation {
    RingPresentation::formal(
        phi(n, rows),
        Some(RootPart {
            ell,
            phi: phi(n, root_rows),
        }),
    )
    .unwrap()
}

/// p12 = −1, p13 = ξ, p23 = 1 with ℓ = 6.
pub fn sixth_polynomial() -> RingPresentation {
    root(6, 3, &[&[3, 2], &[0]])
}

/// p12 = p13 = −1, p23 = 1.
pub fn sign_degenerate() -> RingPresentation {
    root(2, 3, &[&[1, 1], &[0]])
}

/// p12 = p13 = −1, p23 = i.
pub fn sign_quarter() -> RingPresentation {
    root(4, 3, &[&[2, 2], &[1]])
}

/// p12 = −1, p13 = ξ, p23 = −1.
pub fn sixth_dominating() -> RingPresentation {
    root(6, 3, &[&[3, 2], &[3]])
}

/// ℓ = 4, p12 = p13 = p14 = i, p23 = −i, p24 = i, p34 = 1.
pub fn quarter_affine() -> RingPresentation {
    root(4, 4, &[&[1, 1, 1], &[3, 1], &[0]])
}

/// p12 = q^3, p13 = q, p23 = q^2.
pub fn formal_finite() -> RingPresentation {
    formal(3, &[&[3, 1], &[2]])
}

/// Formal q on x1..x3 and a cube root of unity between x4 and x5.
pub fn formal_with_cube_root() -> RingPresentation {
    formal_with_root(5, &[&[0, 1, 0, 0], &[1, 0, 0], &[0, 0], &[0]], 3, &[&[0, 0, 0, 0], &[0, 0, 0], &[0, 0], &[1]])
}

/// k_q[x_1..x_n] with every p_ij = q, q of order ℓ.
pub fn uniform(n: usize, ell: u32) -> RingPresentation {
    RingPresentation::uniform_root(n, ell, 1).unwrap()
}

/// Random root-of-unity presentation: n in `ns`, ℓ in `ells`, entries in [0, ℓ).
pub fn arb_root(ns: std::ops::RangeInclusive<usize>, ells: Vec<u32>) -> impl Strategy<Value = RingPresentation> {
    (ns, proptest::sample::select(ells)).prop_flat_map(|(n, ell)| {
        proptest::collection::vec(0..ell as i64, n * (n - 1) / 2).prop_map(move |flat| {
            let mut upper = vec![vec![0i64; n]; n];
            let mut it = flat.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    upper[i][j] = it.next().unwrap();
                }
            }
            RingPresentation::root_of_unity(ell, complete_antisymmetric(&upper, n)).unwrap()
        })
    })
}
