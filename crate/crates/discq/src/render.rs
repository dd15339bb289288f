//! Human-readable output.

use std::fmt::Write;

use discq_core::exactmath::Coefficient;
use discq_core::skewring::SkewPoly;
use num_integer::Integer;

use crate::report::*;

fn plain_monomial(exps: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{}^{}", v, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// x^e, with a common power pulled out when two or more variables share it:
/// (x1^2 x2 x3^2)^36.
pub fn monomial_text(exps: &[u32], names: &[String]) -> String {
    let g = exps.iter().fold(0u32, |a, &b| a.gcd(&b));
    let support = exps.iter().filter(|&&e| e > 0).count();
    if g > 1 && support > 1 {
        let base: Vec<u32> = exps.iter().map(|e| e / g).collect();
        format!("({})^{}", plain_monomial(&base, names), g)
    } else {
        plain_monomial(exps, names)
    }
}

pub fn skew_poly_text<C: Coefficient>(p: &SkewPoly<C>) -> String {
    p.to_string()
}

fn vec_text(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn set_text(vs: &[Vec<u32>]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| vec_text(v)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn center(r: &CenterReport) -> String {
    let names = var_names(r.n);
    let gens: Vec<String> = r.generators.iter().map(|g| monomial_text(g, &names)).collect();
    let mut s = String::new();
    writeln!(s, "center generators: {}", gens.join(", ")).unwrap();
    match &r.axis_exponents {
        Some(a) => writeln!(s, "polynomial center: true (axis exponents {})", vec_text(a)).unwrap(),
        None => writeln!(s, "polynomial center: false").unwrap(),
    }
    writeln!(s, "rank: {}", r.rank).unwrap();
    writeln!(s, "phi determinant unit mod {}: {}", r.ell, r.phi_det_unit).unwrap();
    let qb: Vec<String> = r.quasi_basis.iter().map(|g| monomial_text(g, &names)).collect();
    writeln!(s, "quasi-basis ({}): {}", qb.len(), qb.join(", ")).unwrap();
    s
}

pub fn sector_status(st: &SectorJson) -> String {
    match st {
        SectorJson::Empty => "empty".into(),
        SectorJson::Finite { elements } => format!("finite {}", set_text(elements)),
        SectorJson::InfinitePeriodic { residues, period } => {
            format!("infinite, residues {} modulo {}", set_text(residues), period)
        }
        SectorJson::Infinite { base, ray } => format!("infinite, {} + N*{}", vec_text(base), vec_text(ray)),
    }
}

pub fn sectors(r: &SectorsReport) -> String {
    let mut s = String::new();
    for e in &r.sectors {
        writeln!(s, "T{}: {}", e.s, sector_status(&e.status)).unwrap();
    }
    s
}

pub fn disc(r: &DiscReport) -> String {
    let mut s = String::new();
    writeln!(s, "d_{} = {}", r.v, r.text).unwrap();
    writeln!(s, "rank: {}", r.rank).unwrap();
    writeln!(s, "route: {}", r.route).unwrap();
    if let Some(c) = &r.scalar {
        writeln!(s, "dropped scalar: {}", c).unwrap();
    }
    if let Some(cf) = &r.closed_form {
        writeln!(s, "closed form agrees: {} (scalar {})", cf.agrees, cf.scalar).unwrap();
    }
    if let Some(d) = r.dominating {
        writeln!(s, "dominating: {}", d).unwrap();
    }
    if let Some(g) = &r.ideal_generators {
        let n = r.value.as_ref().map(|v| v.len()).or_else(|| g.first().map(|e| e.len())).unwrap_or(0);
        let names = var_names(n);
        writeln!(s, "ideal generators ({}):", g.len()).unwrap();
        for e in g {
            writeln!(s, "  {}", plain_monomial(e, &names)).unwrap();
        }
    }
    s
}

pub fn aut(r: &AutReport) -> String {
    let mut s = String::new();
    writeln!(s, "affine: {}", r.affine).unwrap();
    writeln!(s, "H1: {}", r.h1_holds).unwrap();
    for w in &r.witnesses {
        writeln!(s, "witness: {}", w.text).unwrap();
    }
    for f in &r.families {
        let p = match f.parameters {
            Some(k) => format!("{} parameter(s)", k),
            None => "infinitely many parameters".into(),
        };
        writeln!(s, "elementary family on x{}: T{} {}, {}", f.s, f.s, sector_status(&f.sector), p).unwrap();
    }
    let gens: Vec<String> = r
        .graded_perm_group
        .generators
        .iter()
        .map(|g| {
            let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    writeln!(
        s,
        "graded permutation group: order {}, generators {}",
        r.graded_perm_group.order,
        if gens.is_empty() { "none".into() } else { gens.join(", ") }
    )
    .unwrap();
    writeln!(s, "torus rank: {}", r.torus_rank).unwrap();
    writeln!(s, "graded structure S x| (k^x)^n: {}", r.graded_structure_known).unwrap();
    writeln!(s, "tame certified: {}", r.tame_certified).unwrap();
    writeln!(s, "triangular: {}", r.triangular).unwrap();
    s
}

pub fn decompose(r: &DecomposeReport) -> String {
    let mut s = String::new();
    if r.factors.is_empty() {
        writeln!(s, "identity").unwrap();
    }
    for (i, f) in r.factors.iter().enumerate() {
        writeln!(
            s,
            "factor {}: x{} -> x{} + {}  (bidegree ({}, {}))",
            i + 1,
            f.s,
            f.s,
            f.f.text,
            f.bidegree.0,
            f.bidegree.1
        )
        .unwrap();
    }
    s
}

pub fn weyl_disc(r: &WeylDiscReport) -> String {
    format!(
        "disc: {}\nleading scalar: {}\n",
        r.disc.text, r.leading_scalar
    )
}

pub fn weyl_tensor(r: &WeylTensorReport) -> String {
    format!("disc: {}\nrank: {}\ndominating: {}\n", r.disc.text, r.rank, r.dominating)
}

pub fn conjecture(r: &ConjectureJson) -> String {
    let mut s = format!(
        "match: {}\ncomputed: {}\npredicted: {}\n",
        r.matches, r.computed.text, r.predicted.text
    );
    if !r.matches {
        writeln!(s, "difference: {}", r.difference.text).unwrap();
    }
    s
}

pub fn weyl_aut(r: &WeylAutJson) -> String {
    let gens: Vec<String> = r
        .generators
        .iter()
        .map(|g| {
            let parts: Vec<String> = g
                .iter()
                .map(|m| format!("{}{}", m.target, if m.cross { "'" } else { "" }))
                .collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    format!(
        "Aut = {}\ngroup order: {}\ngenerators: {}\ntorus rank: {}\nall affine: {}\n",
        r.label,
        r.group_order,
        if gens.is_empty() { "none".into() } else { gens.join(", ") },
        r.torus_rank,
        r.all_affine
    )
}
