//! The central monoid T, the sector sets T_s, rank and quasi-basis.
//!
//! Indices are 0-based throughout the library; sector vectors omit the
//! coordinate s itself (length n − 1).

mod lp;

pub use lp::{lp_max, LpOutcome};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det_exact, IntegerDomain};
use crate::skewring::{Mode, RingPresentation};

/// Calls `f` on every vector in [0, bound)^n in lexicographic order.
pub fn for_each_in_box(n: usize, bound: u32, mut f: impl FnMut(&[u32])) {
    if bound == 0 {
        return;
    }
    let mut d = vec![0u32; n];
    loop {
        f(&d);
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            d[k] += 1;
            if d[k] < bound {
                break;
            }
            d[k] = 0;
        }
    }
}

/// Calls `f` on every vector in N^m with coordinate sum `total`, in lexicographic order.
/// Stops early when `f` returns false.
pub fn for_each_of_degree(m: usize, total: u32, mut f: impl FnMut(&[u32]) -> bool) {
    fn rec(d: &mut Vec<u32>, k: usize, left: u32, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if k + 1 == d.len() {
            d[k] = left;
            return f(d);
        }
        for v in 0..=left {
            d[k] = v;
            if !rec(d, k + 1, left - v, f) {
                return false;
            }
        }
        true
    }
    if m == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut d = vec![0u32; m];
    rec(&mut d, 0, total, &mut f);
}

/// ∏_j p_ij^{d_j} = 1 for all i.
pub fn central_test(r: &RingPresentation, exps: &[u32]) -> bool {
    exps.len() == r.n() && (0..r.n()).all(|i| r.param_is_one(r.row_product(i, exps, None)))
}

/// Class of x^d modulo the central lattice: the vector (Σ_j φ_ij d_j mod ℓ)_i.
pub fn coset_key(r: &RingPresentation, ell: u32, exps: &[u32]) -> Vec<u32> {
    (0..r.n())
        .map(|i| r.row_product(i, exps, None).root.rem_euclid(ell as i64) as u32)
        .collect()
}

/// Key of the inverse class.
pub fn coset_neg(key: &[u32], ell: u32) -> Vec<u32> {
    key.iter().map(|&k| (ell - k) % ell).collect()
}

fn require_root(r: &RingPresentation, what: &str) -> Result<u32> {
    r.ell().ok_or_else(|| Error::Precondition(format!("{} requires a root-of-unity presentation", what)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterInfo {
    /// Minimal generators of T, sorted by degree then lexicographically.
    pub generators: Vec<Vec<u32>>,
    pub is_polynomial: bool,
    pub axis_exponents: Option<Vec<u32>>,
    pub rank: u64,
    /// Lex-smallest box representative of each class of Z^n modulo the central lattice.
    pub quasi_basis: Vec<Vec<u32>>,
}

pub fn center_info(r: &RingPresentation) -> Result<CenterInfo> {
    let ell = require_root(r, "center computation")?;
    let n = r.n();
    let mut central = Vec::new();
    for_each_in_box(n, ell + 1, |d| {
        if d.iter().any(|&x| x > 0) && central_test(r, d) {
            central.push(d.to_vec());
        }
    });
    central.sort_by_key(|d| (d.iter().sum::<u32>(), d.clone()));
    // In T = L ∩ N^n, irreducible elements are exactly the componentwise-minimal ones.
    let mut generators: Vec<Vec<u32>> = Vec::new();
    for d in central {
        if !generators.iter().any(|g| g.iter().zip(&d).all(|(a, b)| a <= b)) {
            generators.push(d);
        }
    }
    let axis: Option<Vec<u32>> = if generators.len() == n {
        let mut alpha = vec![0u32; n];
        let ok = generators.iter().all(|g| {
            let nz: Vec<usize> = (0..n).filter(|&i| g[i] > 0).collect();
            if nz.len() == 1 {
                alpha[nz[0]] = g[nz[0]];
                true
            } else {
                false
            }
        });
        (ok && alpha.iter().all(|&a| a > 0)).then_some(alpha)
    } else {
        None
    };
    let mut in_box = 0u64;
    let mut reps: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    let mut quasi_basis = Vec::new();
    for_each_in_box(n, ell, |d| {
        let key = coset_key(r, ell, d);
        if key.iter().all(|&k| k == 0) {
            in_box += 1;
        }
        if !reps.contains_key(&key) {
            reps.insert(key, d.to_vec());
            quasi_basis.push(d.to_vec());
        }
    });
    let total = (ell as u64).pow(n as u32);
    let rank = total / in_box;
    if rank * in_box != total || rank != quasi_basis.len() as u64 {
        return Err(Error::Invariant(format!(
            "rank {} inconsistent with {} central box monomials and {} classes",
            rank,
            in_box,
            quasi_basis.len()
        )));
    }
    Ok(CenterInfo {
        generators,
        is_polynomial: axis.is_some(),
        axis_exponents: axis,
        rank,
        quasi_basis,
    })
}

/// det(φ) is a unit mod ℓ.
pub fn pfaffian_criterion(r: &RingPresentation) -> Result<bool> {
    let ell = require_root(r, "the Pfaffian criterion")?;
    let m: Vec<Vec<BigInt>> = r.phi().iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let d = det_exact(&IntegerDomain, &m)?;
    let e = BigInt::from(ell);
    let red = ((d % &e) + &e) % &e;
    Ok(red.gcd(&e).is_one())
}

/// Limits for formal-mode searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Largest total degree examined when looking for solutions of an unbounded system.
    pub max_degree: u32,
    /// Largest number of lattice points enumerated inside a bounded solution polytope.
    pub max_points: u64,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound {
            max_degree: 64,
            max_points: 2_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectorStatus {
    Empty,
    Finite(Vec<Vec<u32>>),
    /// Root mode: T_s = residues + period·N^{n−1}.
    InfinitePeriodic { residues: Vec<Vec<u32>>, period: u32 },
    /// Formal mode: `base` + k·`ray` ∈ T_s for all k ≥ 0; `base` is a lowest-degree solution.
    Infinite { base: Vec<u32>, ray: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorInfo {
    pub s: usize,
    pub status: SectorStatus,
    pub has_deg2_element: bool,
}

impl SectorInfo {
    pub fn is_empty(&self) -> bool {
        self.status == SectorStatus::Empty
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.status, SectorStatus::Empty | SectorStatus::Finite(_))
    }
}

/// Inserts a zero at position s: the exponent vector of f_d.
pub fn expand_sector_vector(s: usize, d: &[u32]) -> Vec<u32> {
    let mut e = d.to_vec();
    e.insert(s, 0);
    e
}

/// Membership of a full exponent vector (with e_s = 0) in T_s.
pub fn in_sector(r: &RingPresentation, s: usize, exps: &[u32]) -> bool {
    exps.len() == r.n()
        && exps[s] == 0
        && (0..r.n())
            .filter(|&i| i != s)
            .all(|i| r.param_eq(r.row_product(i, exps, Some(s)), r.param(i, s)))
}

pub fn sector_info(r: &RingPresentation, s: usize, bound: &SearchBound) -> Result<SectorInfo> {
    let n = r.n();
    if s >= n {
        return Err(Error::Precondition(format!("sector index {} out of range", s + 1)));
    }
    match r.mode() {
        Mode::RootOfUnity { ell } => {
            let mut residues = Vec::new();
            for_each_in_box(n - 1, *ell, |d| {
                if in_sector(r, s, &expand_sector_vector(s, d)) {
                    residues.push(d.to_vec());
                }
            });
            if residues.is_empty() {
                Ok(SectorInfo {
                    s,
                    status: SectorStatus::Empty,
                    has_deg2_element: false,
                })
            } else {
                Ok(SectorInfo {
                    s,
                    status: SectorStatus::InfinitePeriodic {
                        residues,
                        period: *ell,
                    },
                    has_deg2_element: true,
                })
            }
        }
        Mode::Formal { .. } => formal_sector(r, s, bound),
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn formal_sector(r: &RingPresentation, s: usize, bound: &SearchBound) -> Result<SectorInfo> {
    let n = r.n();
    let vars: Vec<usize> = (0..n).filter(|&j| j != s).collect();
    let m = vars.len();
    let rows: Vec<usize> = (0..n).filter(|&i| i != s).collect();
    let a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|&i| vars.iter().map(|&j| rat(r.param(i, j).formal)).collect())
        .collect();
    let b: Vec<BigRational> = rows.iter().map(|&i| rat(r.param(i, s).formal)).collect();
    let member = |d: &[u32]| in_sector(r, s, &expand_sector_vector(s, d));
    let empty = SectorInfo {
        s,
        status: SectorStatus::Empty,
        has_deg2_element: false,
    };
    if lp_max(&a, &b, &vec![BigRational::zero(); m]) == LpOutcome::Infeasible {
        return Ok(empty);
    }
    if root_classes_infeasible(r, s, &a, &b, bound) {
        return Ok(empty);
    }

    // Recession cone: a nonzero r ≥ 0 with A r = 0, normalized by Σ r = 1.
    let mut a_cone = a.clone();
    a_cone.push(vec![BigRational::one(); m]);
    let mut b_cone = vec![BigRational::zero(); a.len()];
    b_cone.push(BigRational::one());
    let cone = lp_max(&a_cone, &b_cone, &vec![BigRational::zero(); m]);

    match cone {
        LpOutcome::Infeasible => {
            // bounded solution polytope: enumerate its lattice points
            let mut ub = Vec::with_capacity(m);
            for k in 0..m {
                let mut c = vec![BigRational::zero(); m];
                c[k] = BigRational::one();
                match lp_max(&a, &b, &c) {
                    LpOutcome::Infeasible => return Ok(empty),
                    LpOutcome::Unbounded => {
                        return Err(Error::Invariant("bounded polytope reported unbounded".into()));
                    }
                    LpOutcome::Optimal { value, .. } => ub.push(value.floor().to_integer().to_u32().ok_or_else(|| {
                        Error::Undetermined(format!("sector {} bound {} out of range", s + 1, value))
                    })?),
                }
            }
            let points: u64 = ub.iter().map(|&u| u as u64 + 1).try_fold(1u64, |acc, x| acc.checked_mul(x)).unwrap_or(u64::MAX);
            if points > bound.max_points {
                return Err(Error::Undetermined(format!(
                    "sector {}: {} candidate points exceed the enumeration bound {}",
                    s + 1,
                    points,
                    bound.max_points
                )));
            }
            let mut sols = Vec::new();
            let mut d = vec![0u32; m];
            loop {
                if member(&d) {
                    sols.push(d.clone());
                }
                let mut k = m;
                let done = loop {
                    if k == 0 {
                        break true;
                    }
                    k -= 1;
                    if d[k] < ub[k] {
                        d[k] += 1;
                        break false;
                    }
                    d[k] = 0;
                };
                if done {
                    break;
                }
            }
            let has2 = sols.iter().any(|d| d.iter().sum::<u32>() >= 2);
            let status = if sols.is_empty() {
                SectorStatus::Empty
            } else {
                SectorStatus::Finite(sols)
            };
            Ok(SectorInfo {
                s,
                status,
                has_deg2_element: has2,
            })
        }
        LpOutcome::Optimal { x, .. } => {
            // integral ray, scaled so the root-of-unity congruences are preserved
            let den = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let w = BigInt::from(r.root_order());
            let ray: Option<Vec<u32>> = x.iter().map(|v| (v.numer() * (&den / v.denom()) * &w).to_u32()).collect();
            let ray = ray.ok_or_else(|| Error::Undetermined(format!("sector {}: recession ray too large", s + 1)))?;
            for deg in 0..=bound.max_degree {
                let mut found = None;
                for_each_of_degree(m, deg, |d| {
                    if member(d) {
                        found = Some(d.to_vec());
                        false
                    } else {
                        true
                    }
                });
                if let Some(base) = found {
                    return Ok(SectorInfo {
                        s,
                        status: SectorStatus::Infinite { base, ray },
                        has_deg2_element: true,
                    });
                }
            }
            Err(Error::Undetermined(format!(
                "sector {}: no solution up to degree {} and the solution set is unbounded",
                s + 1,
                bound.max_degree
            )))
        }
        LpOutcome::Unbounded => Err(Error::Invariant("feasibility LP reported unbounded".into())),
    }
}

/// With a root-of-unity factor of order w: true when no residue class ρ mod w
/// solves the congruences with A(ρ + w·y) = b feasible for some real y ≥ 0.
/// Skipped (false) when there are too many classes to enumerate.
fn root_classes_infeasible(
    r: &RingPresentation,
    s: usize,
    a: &[Vec<BigRational>],
    b: &[BigRational],
    bound: &SearchBound,
) -> bool {
    let w = r.root_order();
    let m = r.n() - 1;
    if w <= 1 || (w as u64).checked_pow(m as u32).is_none_or(|c| c > bound.max_points) {
        return false;
    }
    let wq = rat(w as i64);
    let mut feasible = false;
    for_each_in_box(m, w, |rho| {
        if feasible {
            return;
        }
        let full = expand_sector_vector(s, rho);
        let congruent = (0..r.n())
            .filter(|&i| i != s)
            .all(|i| (r.row_product(i, &full, Some(s)).root - r.param(i, s).root).rem_euclid(w as i64) == 0);
        if !congruent {
            return;
        }
        let shifted: Vec<BigRational> = a
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let ar = row
                    .iter()
                    .zip(rho)
                    .fold(BigRational::zero(), |acc, (x, &k)| acc + x * rat(k as i64));
                (bi - ar) / &wq
            })
            .collect();
        if lp_max(a, &shifted, &vec![BigRational::zero(); m]) != LpOutcome::Infeasible {
            feasible = true;
        }
    });
    !feasible
}

/// A lowest-degree element of T_s with total degree ≥ `min_degree`, lex-smallest among those.
/// Sector vectors exclude coordinate s.
pub fn sector_min_element(
    r: &RingPresentation,
    s: usize,
    min_degree: u32,
    bound: &SearchBound,
) -> Option<Vec<u32>> {
    let m = r.n() - 1;
    let cap = match r.ell() {
        // some residue plus one period always qualifies
        Some(ell) => (m as u32) * (ell - 1) + ell + min_degree,
        None => bound.max_degree,
    };
    for deg in min_degree..=cap.max(min_degree) {
        let mut found = None;
        for_each_of_degree(m, deg, |d| {
            if in_sector(r, s, &expand_sector_vector(s, d)) {
                found = Some(d.to_vec());
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}
