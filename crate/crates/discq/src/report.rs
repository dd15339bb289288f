//! Serializable reports. Indices are 1-based here, matching the printed output.

use discq_core::autgroup::{AutSummary, ElementaryFactor};
use discq_core::centerlat::{CenterInfo, SectorInfo, SectorStatus};
use discq_core::exactmath::{CenterPoly, Coefficient};
use discq_core::qweyl::{ConjectureReport, WeylAutReport, WeylDisc, WeylTensorDisc};
use discq_core::skewring::{RingScalar, SkewPoly};
use serde::{Deserialize, Serialize};

use crate::render::{monomial_text, skew_poly_text};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<PolyTerm>,
    pub text: String,
}

impl PolyJson {
    pub fn from_center(p: &CenterPoly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            // highest term first, like the printed form
            terms: p
                .terms()
                .iter()
                .rev()
                .map(|(e, c)| PolyTerm {
                    exps: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
            text: p.to_string(),
        }
    }

    pub fn from_skew<C: Coefficient>(p: &SkewPoly<C>) -> Self {
        PolyJson {
            vars: (1..=p.nvars()).map(|i| format!("x{}", i)).collect(),
            terms: p
                .terms()
                .iter()
                .rev()
                .map(|(e, c)| PolyTerm {
                    exps: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
            text: skew_poly_text(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterReport {
    pub n: usize,
    pub ell: u32,
    pub generators: Vec<Vec<u32>>,
    pub is_polynomial: bool,
    pub axis_exponents: Option<Vec<u32>>,
    pub rank: u64,
    pub quasi_basis: Vec<Vec<u32>>,
    /// det(φ) is a unit modulo ℓ.
    pub phi_det_unit: bool,
}

impl CenterReport {
    pub fn new(n: usize, ell: u32, c: &CenterInfo, phi_det_unit: bool) -> Self {
        CenterReport {
            n,
            ell,
            generators: c.generators.clone(),
            is_polynomial: c.is_polynomial,
            axis_exponents: c.axis_exponents.clone(),
            rank: c.rank,
            quasi_basis: c.quasi_basis.clone(),
            phi_det_unit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SectorJson {
    Empty,
    Finite { elements: Vec<Vec<u32>> },
    InfinitePeriodic { residues: Vec<Vec<u32>>, period: u32 },
    Infinite { base: Vec<u32>, ray: Vec<u32> },
}

impl From<&SectorStatus> for SectorJson {
    fn from(s: &SectorStatus) -> Self {
        match s {
            SectorStatus::Empty => SectorJson::Empty,
            SectorStatus::Finite(v) => SectorJson::Finite { elements: v.clone() },
            SectorStatus::InfinitePeriodic { residues, period } => SectorJson::InfinitePeriodic {
                residues: residues.clone(),
                period: *period,
            },
            SectorStatus::Infinite { base, ray } => SectorJson::Infinite {
                base: base.clone(),
                ray: ray.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorEntry {
    pub s: usize,
    pub status: SectorJson,
    pub has_deg2_element: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorsReport {
    pub n: usize,
    pub sectors: Vec<SectorEntry>,
}

impl SectorsReport {
    pub fn new(n: usize, secs: &[SectorInfo]) -> Self {
        SectorsReport {
            n,
            sectors: secs
                .iter()
                .map(|s| SectorEntry {
                    s: s.s + 1,
                    status: (&s.status).into(),
                    has_deg2_element: s.has_deg2_element,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub value: Vec<u32>,
    pub scalar: String,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscReport {
    pub v: u64,
    pub rank: u64,
    /// `None` is the zero discriminant.
    pub value: Option<Vec<u32>>,
    pub text: String,
    pub route: String,
    pub scalar: Option<String>,
    pub closed_form: Option<ClosedFormCheck>,
    pub dominating: Option<bool>,
    pub ideal_generators: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub s: usize,
    pub exps: Vec<u32>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub s: usize,
    pub sector: SectorJson,
    pub parameters: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermGroupJson {
    pub order: u64,
    /// Images of 1..n.
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub h1_holds: bool,
    pub affine: bool,
    pub witnesses: Vec<WitnessJson>,
    pub families: Vec<FamilyJson>,
    pub graded_perm_group: PermGroupJson,
    pub torus_rank: usize,
    pub graded_structure_known: bool,
    pub tame_certified: bool,
    pub triangular: bool,
}

impl From<&AutSummary> for AutReport {
    fn from(a: &AutSummary) -> Self {
        let n = a.torus_rank;
        AutReport {
            h1_holds: a.h1_holds,
            affine: a.affine,
            witnesses: a
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    s: w.s + 1,
                    exps: w.exps.clone(),
                    text: format!("x{0} -> x{0} + {1}", w.s + 1, monomial_text(&w.exps, &var_names(n))),
                })
                .collect(),
            families: a
                .families
                .iter()
                .map(|f| FamilyJson {
                    s: f.s + 1,
                    sector: (&f.sector).into(),
                    parameters: f.parameters,
                })
                .collect(),
            graded_perm_group: PermGroupJson {
                order: a.graded_perm_group.order,
                generators: a
                    .graded_perm_group
                    .generators
                    .iter()
                    .map(|g| g.iter().map(|&i| i + 1).collect())
                    .collect(),
            },
            torus_rank: a.torus_rank,
            graded_structure_known: a.graded_structure_known,
            tame_certified: a.tame_certified,
            triangular: a.triangular,
        }
    }
}

pub fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{}", i)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub s: usize,
    pub f: PolyJson,
    pub bidegree: (u32, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub factors: Vec<FactorJson>,
}

impl DecomposeReport {
    pub fn new<C: RingScalar>(factors: &[ElementaryFactor<C>]) -> Self {
        DecomposeReport {
            factors: factors
                .iter()
                .map(|f| FactorJson {
                    s: f.s + 1,
                    f: PolyJson::from_skew(&f.f),
                    bidegree: (f.bidegree.0, f.bidegree.1 + 1),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylDiscReport {
    pub n: u32,
    pub exp: i64,
    pub disc: PolyJson,
    pub leading_scalar: String,
}

impl WeylDiscReport {
    pub fn new(exp: i64, d: &WeylDisc) -> Self {
        WeylDiscReport {
            n: d.n,
            exp,
            disc: PolyJson::from_center(&d.disc),
            leading_scalar: d.leading_scalar.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylTensorReport {
    pub disc: PolyJson,
    pub rank: u64,
    pub dominating: bool,
}

impl From<&WeylTensorDisc> for WeylTensorReport {
    fn from(d: &WeylTensorDisc) -> Self {
        WeylTensorReport {
            disc: PolyJson::from_center(&d.disc),
            rank: d.rank,
            dominating: d.dominating,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureJson {
    pub n: u32,
    pub exp: i64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub computed: PolyJson,
    pub predicted: PolyJson,
    pub difference: PolyJson,
}

impl ConjectureJson {
    pub fn new(exp: i64, r: &ConjectureReport) -> Self {
        ConjectureJson {
            n: r.n,
            exp,
            matches: r.matches,
            computed: PolyJson::from_center(&r.computed),
            predicted: PolyJson::from_center(&r.predicted),
            difference: PolyJson::from_center(&r.difference),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub target: usize,
    pub cross: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylAutJson {
    pub torus_rank: usize,
    pub group_order: u64,
    pub generators: Vec<Vec<MoveJson>>,
    pub label: String,
    pub all_affine: bool,
    pub lnd_zero: bool,
}

impl From<&WeylAutReport> for WeylAutJson {
    fn from(r: &WeylAutReport) -> Self {
        WeylAutJson {
            torus_rank: r.torus_rank,
            group_order: r.group_order,
            generators: r
                .generators
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|m| MoveJson {
                            target: m.target + 1,
                            cross: m.cross,
                        })
                        .collect()
                })
                .collect(),
            label: r.label.clone(),
            all_affine: r.all_affine,
            lnd_zero: r.lnd_zero,
        }
    }
}
