//! Automorphisms of skew polynomial rings: the affine/non-affine decision,
//! elementary automorphisms and derivations, graded automorphisms, and the
//! factorization of unipotent automorphisms into elementary ones.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::centerlat::{expand_sector_vector, in_sector, sector_info, sector_min_element, SearchBound, SectorInfo, SectorStatus};
use crate::error::{Error, Result};
use crate::exactmath::CycloNumber;
use crate::skewring::{
    derivation_certify_nilpotent, derivation_verify, endo_compose, endo_verify, Derivation, Endomorphism, Nilpotency,
    RingPresentation, RingScalar, SkewAlgebra, SkewPoly,
};

/// x_s ↦ x_s + x^exps, a non-affine elementary automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub s: usize,
    /// Full exponent vector of f_d (entry s is zero).
    pub exps: Vec<u32>,
    pub verified: bool,
}

/// The elementary automorphisms moving x_s: x_s ↦ a x_s + Σ b_d f_d over d ∈ T_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryFamily {
    pub s: usize,
    pub sector: SectorStatus,
    /// Number of free coefficients b_d; `None` when T_s is infinite.
    pub parameters: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    /// Images σ(0..n), 0-based.
    pub generators: Vec<Vec<usize>>,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutSummary {
    pub h1_holds: bool,
    pub affine: bool,
    pub witnesses: Vec<Witness>,
    pub families: Vec<ElementaryFamily>,
    pub graded_perm_group: PermGroup,
    pub torus_rank: usize,
    /// All p_ij ≠ 1, so the graded automorphisms are exactly S ⋉ (k^×)^n.
    pub graded_structure_known: bool,
    /// (H1) holds and at most one sector is infinite: every automorphism is tame.
    pub tame_certified: bool,
    /// Aut(A[t]) is triangular; only claimed in the root-of-unity affine case.
    pub triangular: bool,
}

pub fn sectors(r: &RingPresentation, bound: &SearchBound) -> Result<Vec<SectorInfo>> {
    (0..r.n()).map(|s| sector_info(r, s, bound)).collect()
}

pub fn classify(r: &RingPresentation) -> Result<AutSummary> {
    classify_with(r, &SearchBound::default())
}

pub fn classify_with(r: &RingPresentation, bound: &SearchBound) -> Result<AutSummary> {
    let n = r.n();
    let h1 = r.h1_holds();
    let secs = sectors(r, bound)?;
    let root = r.is_root_mode();

    let mut witnesses = Vec::new();
    for sec in &secs {
        if !sec.has_deg2_element {
            continue;
        }
        let d = sector_min_element(r, sec.s, 2, bound).ok_or_else(|| {
            Error::Undetermined(format!("no degree ≥ 2 element of T_{} within the search bound", sec.s + 1))
        })?;
        let exps = expand_sector_vector(sec.s, &d);
        let verified = if root {
            witness_verified::<CycloNumber>(r, sec.s, &exps)?
        } else {
            witness_verified::<crate::exactmath::LaurentQ>(r, sec.s, &exps)?
        };
        if !verified {
            return Err(Error::Invariant(format!("elementary witness for x{} failed verification", sec.s + 1)));
        }
        witnesses.push(Witness { s: sec.s, exps, verified });
    }

    let affine = if root {
        // PI case: affine iff every sector is empty
        let all_empty = secs.iter().all(|s| s.is_empty());
        if all_empty != witnesses.is_empty() {
            return Err(Error::Invariant("non-empty root-mode sector without a degree ≥ 2 element".into()));
        }
        all_empty
    } else if !witnesses.is_empty() {
        false
    } else if h1 {
        true
    } else {
        return Err(Error::Precondition(
            "formal-mode classification needs (H1) when no non-affine witness exists".into(),
        ));
    };

    let families = secs
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| ElementaryFamily {
            s: s.s,
            sector: s.status.clone(),
            parameters: match &s.status {
                SectorStatus::Finite(v) => Some(v.len()),
                _ => None,
            },
        })
        .collect();

    let infinite = secs.iter().filter(|s| !s.is_finite()).count();
    let all_nontrivial = (0..n).all(|j| (0..j).all(|i| !r.param_is_one(r.param(i, j))));
    Ok(AutSummary {
        h1_holds: h1,
        affine,
        witnesses,
        families,
        graded_perm_group: graded_perm_group(r)?,
        torus_rank: n,
        graded_structure_known: all_nontrivial,
        tame_certified: h1 && infinite <= 1,
        triangular: root && affine,
    })
}

fn witness_verified<C: RingScalar>(r: &RingPresentation, s: usize, exps: &[u32]) -> Result<bool> {
    let alg = SkewAlgebra::<C>::new(r)?;
    let g = elementary(&alg, s, &SkewPoly::monomial(exps.to_vec(), C::one()))?;
    let deg = g.images[s].degree().unwrap_or(0);
    Ok(endo_verify(&alg, &g) && deg >= 2)
}

/// Builds a witness map from its summary entry.
pub fn witness_map<C: RingScalar>(alg: &SkewAlgebra<C>, w: &Witness) -> Result<Endomorphism<C>> {
    elementary(alg, w.s, &SkewPoly::monomial(w.exps.clone(), C::one()))
}

/// x_s ↦ x_s + F, other generators fixed. Every monomial of F must lie in X^{T_s}.
pub fn elementary<C: RingScalar>(alg: &SkewAlgebra<C>, s: usize, f: &SkewPoly<C>) -> Result<Endomorphism<C>> {
    let r = alg.presentation();
    let n = r.n();
    if s >= n {
        return Err(Error::Precondition(format!("index {} out of range", s + 1)));
    }
    if f.nvars() != n {
        return Err(Error::Dimension(format!("F has {} variables, ring has {}", f.nvars(), n)));
    }
    if let Some(bad) = f.terms().keys().find(|e| !in_sector(r, s, e)) {
        return Err(Error::Rejected(format!("monomial {:?} is not in X^(T_{})", bad, s + 1)));
    }
    let mut g = Endomorphism::identity(n);
    g.images[s] = g.images[s].add(f);
    if !endo_verify(alg, &g) {
        return Err(Error::Invariant(format!("elementary map on x{} fails the relations", s + 1)));
    }
    Ok(g)
}

/// ∂(x_s) = f_d, ∂(x_i) = 0 otherwise.
pub fn lnd_witness<C: RingScalar>(alg: &SkewAlgebra<C>, s: usize, d: &[u32]) -> Result<Derivation<C>> {
    let r = alg.presentation();
    let n = r.n();
    if s >= n || d.len() + 1 != n {
        return Err(Error::Dimension(format!("sector vector of length {} for n = {}", d.len(), n)));
    }
    let exps = expand_sector_vector(s, d);
    if !in_sector(r, s, &exps) {
        return Err(Error::Rejected(format!("{:?} is not in T_{}", d, s + 1)));
    }
    let mut images = vec![SkewPoly::zero(n); n];
    images[s] = SkewPoly::monomial(exps, C::one());
    let der = Derivation { images };
    if !derivation_verify(alg, &der) {
        return Err(Error::Invariant(format!("derivation on x{} fails the relations", s + 1)));
    }
    match derivation_certify_nilpotent(alg, &der, 2) {
        Nilpotency::Certified { .. } => Ok(der),
        Nilpotency::NotCertified => Err(Error::Invariant("elementary derivation not nilpotent in 2 steps".into())),
    }
}

/// Permutations σ with p_ij = p_σ(i)σ(j), by exhaustive search.
pub fn graded_perm_group(r: &RingPresentation) -> Result<PermGroup> {
    let n = r.n();
    if n > 9 {
        return Err(Error::TooLarge(format!("permutation search over S_{}", n)));
    }
    let mut members = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if preserves(r, &perm) {
            members.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    // greedy generating set: add any member outside the group generated so far
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut span: BTreeSet<Vec<usize>> = BTreeSet::new();
    span.insert((0..n).collect());
    for m in &members {
        if !span.contains(m) {
            generators.push(m.clone());
            span = closure(&generators, n);
        }
    }
    if span.len() != members.len() {
        return Err(Error::Invariant("graded permutations do not form a group".into()));
    }
    Ok(PermGroup {
        generators,
        order: members.len() as u64,
    })
}

fn preserves(r: &RingPresentation, perm: &[usize]) -> bool {
    let n = perm.len();
    (0..n).all(|i| (0..n).all(|j| i == j || r.param_eq(r.param(i, j), r.param(perm[i], perm[j]))))
}

pub fn closure(generators: &[Vec<usize>], n: usize) -> BTreeSet<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let id: Vec<usize> = (0..n).collect();
    let mut frontier = vec![id.clone()];
    seen.insert(id);
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<usize> = (0..n).map(|i| g[p[i]]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// x_i ↦ c_i x_σ(i).
pub fn graded_automorphism<C: RingScalar>(
    alg: &SkewAlgebra<C>,
    perm: &[usize],
    scalars: &[CycloNumber],
) -> Result<Endomorphism<C>> {
    let n = alg.n();
    if perm.len() != n || scalars.len() != n {
        return Err(Error::Dimension("permutation and scalars must have length n".into()));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || core::mem::replace(&mut seen[p], true) {
            return Err(Error::Precondition(format!("{:?} is not a permutation", perm)));
        }
    }
    if scalars.iter().any(|c| c.is_zero()) {
        return Err(Error::Precondition("graded scalars must be units".into()));
    }
    let g = Endomorphism {
        images: (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[perm[i]] = 1;
                SkewPoly::monomial(e, C::from_cyclo(scalars[i].clone()))
            })
            .collect(),
    };
    if !endo_verify(alg, &g) {
        return Err(Error::Rejected(format!("{:?} does not preserve the parameters", perm)));
    }
    Ok(g)
}

/// Inverse data of x_i ↦ c_i x_σ(i): x_j ↦ c_{σ⁻¹(j)}⁻¹ x_{σ⁻¹(j)}.
pub fn graded_inverse(perm: &[usize], scalars: &[CycloNumber]) -> (Vec<usize>, Vec<CycloNumber>) {
    let n = perm.len();
    let mut inv = vec![0; n];
    let mut cs = vec![CycloNumber::zero(); n];
    for i in 0..n {
        inv[perm[i]] = i;
        cs[perm[i]] = scalars[i].inv().expect("unit scalar");
    }
    (inv, cs)
}

#[derive(Clone, PartialEq)]
pub struct ElementaryFactor<C> {
    pub s: usize,
    pub f: SkewPoly<C>,
    /// (lowest degree of the x_s-free part, s)
    pub bidegree: (u32, usize),
}

impl<C: RingScalar> core::fmt::Debug for ElementaryFactor<C> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "g({}, x{}) deg {:?}", self.f, self.s + 1, self.bidegree)
    }
}

/// Bidegree of a unipotent map, `None` when every g_s vanishes.
pub fn bidegree<C: RingScalar>(g: &Endomorphism<C>) -> Option<(u32, usize)> {
    g.images
        .iter()
        .enumerate()
        .filter_map(|(s, img)| img.free_of(s).low_degree().map(|t| (t, s)))
        .min()
}

fn is_unipotent<C: RingScalar>(g: &Endomorphism<C>) -> bool {
    let n = g.images.len();
    g.images.iter().enumerate().all(|(i, img)| {
        img.component(0).is_zero() && img.component(1) == SkewPoly::var(n, i)
    })
}

/// Composition g(F_1, s_1) ∘ ⋯ ∘ g(F_k, s_k).
pub fn compose_factors<C: RingScalar>(alg: &SkewAlgebra<C>, factors: &[ElementaryFactor<C>]) -> Result<Endomorphism<C>> {
    let mut g = Endomorphism::identity(alg.n());
    for f in factors {
        g = endo_compose(alg, &g, &elementary(alg, f.s, &f.f)?);
    }
    Ok(g)
}

/// Writes a unipotent automorphism as g(F_1, s_1) ∘ ⋯ ∘ g(F_k, s_k) with strictly
/// increasing bidegrees and homogeneous F_i.
pub fn decompose_unipotent<C: RingScalar>(
    alg: &SkewAlgebra<C>,
    g: &Endomorphism<C>,
    bound: &SearchBound,
) -> Result<Vec<ElementaryFactor<C>>> {
    let r = alg.presentation();
    let n = r.n();
    if g.images.len() != n || !endo_verify(alg, g) {
        return Err(Error::Rejected("map does not respect the defining relations".into()));
    }
    if !is_unipotent(g) {
        return Err(Error::Rejected("map is not unipotent".into()));
    }
    let secs = sectors(r, bound)?;
    let infinite: Vec<usize> = secs.iter().filter(|s| !s.is_finite()).map(|s| s.s + 1).collect();
    if infinite.len() > 1 {
        return Err(Error::Precondition(format!("sectors {:?} are all infinite", infinite)));
    }

    let max_deg = g.images.iter().filter_map(|p| p.degree()).max().unwrap_or(1);
    let cap = (max_deg as usize + 1) * n;
    let mut rest = g.clone();
    let mut factors = Vec::new();
    while let Some((a, s)) = bidegree(&rest) {
        if factors.len() == cap {
            return Err(Error::TooLarge(format!("decomposition did not finish in {} rounds", cap)));
        }
        let h = rest.images[s].free_of(s).component(a);
        let step = elementary(alg, s, &h.neg()).map_err(|e| match e {
            Error::Rejected(m) => Error::Rejected(format!("not an automorphism: {}", m)),
            other => other,
        })?;
        rest = endo_compose(alg, &step, &rest);
        if let Some(next) = bidegree(&rest) {
            if next <= (a, s) {
                return Err(Error::Invariant(format!("bidegree did not increase past {:?}", (a, s))));
            }
        }
        factors.push(ElementaryFactor {
            s,
            f: h,
            bidegree: (a, s),
        });
    }
    if !rest.is_identity() {
        return Err(Error::Rejected("unipotent map with no x_s-free terms is not an automorphism".into()));
    }
    if compose_factors(alg, &factors)? != *g {
        return Err(Error::Invariant("factors do not recompose to the input".into()));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_enumeration() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(closure(&[vec![1, 2, 0], vec![1, 0, 2]], 3).len(), 6);
    }

    #[test]
    fn minus_one_plane_swaps() {
        let r = RingPresentation::uniform_root(2, 2, 1).unwrap();
        let s = classify(&r).unwrap();
        assert!(s.affine);
        assert_eq!(s.graded_perm_group.order, 2);
        let r = RingPresentation::uniform_root(2, 3, 1).unwrap();
        assert_eq!(classify(&r).unwrap().graded_perm_group.order, 1);
    }
}
