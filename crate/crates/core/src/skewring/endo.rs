//! Algebra maps and derivations given by generator images.

use alloc::vec::Vec;
use core::fmt;

use super::{RingScalar, SkewAlgebra, SkewPoly};

/// x_i ↦ images[i].
#[derive(Clone, PartialEq)]
pub struct Endomorphism<C> {
    pub images: Vec<SkewPoly<C>>,
}

impl<C: RingScalar> Endomorphism<C> {
    pub fn identity(n: usize) -> Self {
        Endomorphism {
            images: (0..n).map(|i| SkewPoly::var(n, i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.images.len();
        self.images.iter().enumerate().all(|(i, p)| *p == SkewPoly::var(n, i))
    }
}

/// ∂(x_i) = images[i], extended by the Leibniz rule.
#[derive(Clone, PartialEq)]
pub struct Derivation<C> {
    pub images: Vec<SkewPoly<C>>,
}

impl<C: RingScalar> fmt::Debug for Endomorphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

impl<C: RingScalar> fmt::Debug for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}

pub fn endo_verify<C: RingScalar>(alg: &SkewAlgebra<C>, g: &Endomorphism<C>) -> bool {
    let n = alg.n();
    if g.images.len() != n || g.images.iter().any(|p| p.nvars() != n) {
        return false;
    }
    for j in 0..n {
        for i in 0..j {
            let p = alg.scalar(alg.presentation().param(i, j));
            let lhs = alg.mul(&g.images[j], &g.images[i]);
            let rhs = alg.mul(&g.images[i], &g.images[j]).scale(&p);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// g(f): substitutes the images of g into f.
pub fn endo_apply<C: RingScalar>(alg: &SkewAlgebra<C>, g: &Endomorphism<C>, f: &SkewPoly<C>) -> SkewPoly<C> {
    let n = alg.n();
    let mut powers: Vec<Vec<SkewPoly<C>>> = (0..n).map(|_| alloc::vec![SkewPoly::one(n)]).collect();
    let mut out = SkewPoly::zero(n);
    for (e, c) in f.terms() {
        let mut acc = SkewPoly::monomial(alloc::vec![0; n], c.clone());
        for (i, &k) in e.iter().enumerate() {
            while powers[i].len() <= k as usize {
                let next = alg.mul(powers[i].last().unwrap(), &g.images[i]);
                powers[i].push(next);
            }
            if k > 0 {
                acc = alg.mul(&acc, &powers[i][k as usize]);
            }
        }
        out = out.add(&acc);
    }
    out
}

/// g ∘ h: x_i ↦ g(h(x_i)).
pub fn endo_compose<C: RingScalar>(alg: &SkewAlgebra<C>, g: &Endomorphism<C>, h: &Endomorphism<C>) -> Endomorphism<C> {
    Endomorphism {
        images: h.images.iter().map(|p| endo_apply(alg, g, p)).collect(),
    }
}

pub fn derivation_verify<C: RingScalar>(alg: &SkewAlgebra<C>, d: &Derivation<C>) -> bool {
    let n = alg.n();
    if d.images.len() != n || d.images.iter().any(|p| p.nvars() != n) {
        return false;
    }
    let x: Vec<SkewPoly<C>> = (0..n).map(|i| SkewPoly::var(n, i)).collect();
    for j in 0..n {
        for i in 0..j {
            let p = alg.scalar(alg.presentation().param(i, j));
            let lhs = alg.mul(&d.images[j], &x[i]).add(&alg.mul(&x[j], &d.images[i]));
            let rhs = alg.mul(&d.images[i], &x[j]).add(&alg.mul(&x[i], &d.images[j])).scale(&p);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// ∂(f) by the Leibniz rule on each normal-ordered monomial.
pub fn derivation_apply<C: RingScalar>(alg: &SkewAlgebra<C>, d: &Derivation<C>, f: &SkewPoly<C>) -> SkewPoly<C> {
    let n = alg.n();
    let mut out = SkewPoly::zero(n);
    for (e, c) in f.terms() {
        // x^e = x_1^{e_1} ⋯ x_n^{e_n}; differentiate one letter at a time
        for i in 0..n {
            for t in 0..e[i] {
                let mut left = e[..i].to_vec();
                left.push(t);
                left.resize(n, 0);
                let mut right = alloc::vec![0; n];
                right[i] = e[i] - t - 1;
                right[i + 1..].copy_from_slice(&e[i + 1..]);
                let l = SkewPoly::monomial(left, c.clone());
                let r = SkewPoly::monomial(right, C::one());
                out = out.add(&alg.mul(&alg.mul(&l, &d.images[i]), &r));
            }
        }
    }
    out
}

pub const DEFAULT_NILPOTENCY_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// Every generator is killed by ∂^k for some k ≤ `steps`.
    Certified { steps: usize },
    NotCertified,
}

/// Iterates ∂ on each generator until it vanishes, up to `cap` applications.
pub fn derivation_certify_nilpotent<C: RingScalar>(alg: &SkewAlgebra<C>, d: &Derivation<C>, cap: usize) -> Nilpotency {
    let n = alg.n();
    let mut worst = 0;
    for i in 0..n {
        let mut f = SkewPoly::var(n, i);
        let mut k = 0;
        while !f.is_zero() {
            if k == cap {
                return Nilpotency::NotCertified;
            }
            f = derivation_apply(alg, d, &f);
            k += 1;
        }
        worst = worst.max(k);
    }
    Nilpotency::Certified { steps: worst }
}
