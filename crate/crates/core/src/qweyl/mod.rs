//! Quantum Weyl algebras k⟨x, y⟩/(yx − qxy − 1) at roots of unity and their
//! tensor products.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactmath::{det_exact, CenterPoly, CycloNumber, PolyDomain};

/// Σ c_ij x^i y^j, normal order x before y.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylElement {
    pub terms: BTreeMap<(u32, u32), CycloNumber>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn monomial(i: u32, j: u32, c: CycloNumber) -> Self {
        let mut w = WeylElement::zero();
        w.accumulate(i, j, c);
        w
    }

    pub fn x() -> Self {
        WeylElement::monomial(1, 0, CycloNumber::one())
    }

    pub fn y() -> Self {
        WeylElement::monomial(0, 1, CycloNumber::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, i: u32, j: u32, c: CycloNumber) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&(i, j)) {
            Some(v) => v + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert((i, j), v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.accumulate(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.accumulate(i, j, -c);
        }
        out
    }
}

/// A_q with cached rewrites of y^b x^c.
pub struct WeylAlgebra {
    q: CycloNumber,
    cache: RefCell<BTreeMap<(u32, u32), WeylElement>>,
}

impl WeylAlgebra {
    pub fn new(q: CycloNumber) -> Result<Self> {
        if q.is_one() {
            return Err(Error::Precondition("the Weyl parameter must differ from 1".into()));
        }
        Ok(WeylAlgebra {
            q,
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn q(&self) -> &CycloNumber {
        &self.q
    }

    /// Normal form of y^b x^c.
    fn swap(&self, b: u32, c: u32) -> WeylElement {
        if b == 0 || c == 0 {
            return WeylElement::monomial(c, b, CycloNumber::one());
        }
        if let Some(w) = self.cache.borrow().get(&(b, c)) {
            return w.clone();
        }
        // y · (x^i y^j) = q^i x^i y^{j+1} + [i]_q x^{i−1} y^j
        let prev = self.swap(b - 1, c);
        let mut out = WeylElement::zero();
        for (&(i, j), coeff) in &prev.terms {
            out.accumulate(i, j + 1, coeff * &self.q.pow(i as i64));
            if i > 0 {
                out.accumulate(i - 1, j, coeff * &q_integer(&self.q, i));
            }
        }
        self.cache.borrow_mut().insert((b, c), out.clone());
        out
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(i, j), ca) in &a.terms {
            for (&(k, l), cb) in &b.terms {
                let c = ca * cb;
                for (&(u, v), cs) in &self.swap(j, k).terms {
                    out.accumulate(i + u, v + l, &c * cs);
                }
            }
        }
        out
    }
}

/// [i]_q = 1 + q + ⋯ + q^{i−1}.
pub fn q_integer(q: &CycloNumber, i: u32) -> CycloNumber {
    let mut acc = CycloNumber::zero();
    let mut p = CycloNumber::one();
    for _ in 0..i {
        acc = acc + p.clone();
        p = &p * q;
    }
    acc
}

pub fn weyl_mul(q: &CycloNumber, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    Ok(WeylAlgebra::new(q.clone())?.mul(a, b))
}

fn primitive_root(n: u32, e: i64) -> Result<CycloNumber> {
    if n < 2 {
        return Err(Error::Precondition(format!("root order {} must be at least 2", n)));
    }
    if BigInt::from(e).gcd(&BigInt::from(n)) != BigInt::from(1) {
        return Err(Error::Precondition(format!("exponent {} is not coprime to {}", e, n)));
    }
    Ok(CycloNumber::cyclo(n, e))
}

fn xy_vars() -> Vec<String> {
    vec![String::from("X"), String::from("Y")]
}

/// Writes x^a y^b over the basis x^i y^j (i, j < n): basis index and center monomial.
fn reduce(n: u32, a: u32, b: u32) -> (usize, Vec<u32>) {
    (((a % n) * n + (b % n)) as usize, vec![a / n, b / n])
}

/// Trace map of A_q over k[X, Y], X = x^n, Y = y^n, in the basis x^i y^j.
pub struct WeylTrace {
    n: u32,
    alg: WeylAlgebra,
    basis: Vec<WeylElement>,
    cache: RefCell<BTreeMap<(u32, u32), CenterPoly>>,
}

impl WeylTrace {
    pub fn new(n: u32, e: i64) -> Result<Self> {
        let q = primitive_root(n, e)?;
        let basis = (0..n)
            .flat_map(|i| (0..n).map(move |j| WeylElement::monomial(i, j, CycloNumber::one())))
            .collect();
        Ok(WeylTrace {
            n,
            alg: WeylAlgebra::new(q)?,
            basis,
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn algebra(&self) -> &WeylAlgebra {
        &self.alg
    }

    pub fn basis(&self) -> &[WeylElement] {
        &self.basis
    }

    /// tr(x^a y^b) = Σ_k coefficient of b_k in x^a y^b · b_k.
    fn trace_mono(&self, a: u32, b: u32) -> CenterPoly {
        if let Some(t) = self.cache.borrow().get(&(a, b)) {
            return t.clone();
        }
        let m = WeylElement::monomial(a, b, CycloNumber::one());
        let mut t = CenterPoly::zero(xy_vars());
        for (k, bk) in self.basis.iter().enumerate() {
            for (&(u, v), c) in &self.alg.mul(&m, bk).terms {
                let (idx, center) = reduce(self.n, u, v);
                if idx == k {
                    t.accumulate(center, c.clone());
                }
            }
        }
        self.cache.borrow_mut().insert((a, b), t.clone());
        t
    }

    pub fn trace(&self, f: &WeylElement) -> CenterPoly {
        let mut t = CenterPoly::zero(xy_vars());
        for (&(a, b), c) in &f.terms {
            t = t.add(&self.trace_mono(a, b).scale(c));
        }
        t
    }

    pub fn trace_matrix(&self) -> Vec<Vec<CenterPoly>> {
        self.basis
            .iter()
            .map(|bi| self.basis.iter().map(|bj| self.trace(&self.alg.mul(bi, bj))).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylDisc {
    pub n: u32,
    /// Normalized so the coefficient of (XY)^{n(n−1)} is 1.
    pub disc: CenterPoly,
    /// Coefficient of (XY)^{n(n−1)} before normalization.
    pub leading_scalar: CycloNumber,
}

/// Largest order computed without opting in.
pub const WEYL_DEFAULT_MAX_ORDER: u32 = 4;

pub fn weyl_disc(n: u32, e: i64) -> Result<WeylDisc> {
    weyl_disc_with(n, e, WEYL_DEFAULT_MAX_ORDER)
}

pub fn weyl_disc_with(n: u32, e: i64, max_order: u32) -> Result<WeylDisc> {
    if n > max_order {
        return Err(Error::TooLarge(format!("Weyl order {} exceeds the ceiling {}", n, max_order)));
    }
    let tr = WeylTrace::new(n, e)?;
    let d = det_exact(&PolyDomain { vars: xy_vars() }, &tr.trace_matrix())?;
    let top = n * (n - 1);
    let lead = d.coeff(&[top, top]);
    if lead.is_zero() {
        return Err(Error::Invariant(format!("no (XY)^{} term in the Weyl discriminant", top)));
    }
    // every other term is strictly below the top one in both coordinates
    for ex in d.terms().keys() {
        if ex != &[top, top] && (ex[0] >= top || ex[1] >= top) {
            return Err(Error::Invariant(format!("term X^{} Y^{} escapes the leading-term bound", ex[0], ex[1])));
        }
    }
    let disc = d.scale(&lead.inv().expect("nonzero"));
    Ok(WeylDisc {
        n,
        disc,
        leading_scalar: lead,
    })
}

/// ((1 − q)^n XY − 1)^{n(n−1)}.
pub fn conjecture_prediction(n: u32, e: i64) -> Result<CenterPoly> {
    let q = primitive_root(n, e)?;
    let c = (CycloNumber::one() - q).pow(n as i64);
    let base = CenterPoly::monomial(xy_vars(), vec![1, 1], c).sub(&CenterPoly::one(xy_vars()));
    Ok(base.pow(n * (n - 1)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub n: u32,
    pub matches: bool,
    pub computed: CenterPoly,
    /// Normalized like `computed`.
    pub predicted: CenterPoly,
    pub difference: CenterPoly,
}

pub fn conjecture_check(n: u32, e: i64) -> Result<ConjectureReport> {
    conjecture_check_with(n, e, WEYL_DEFAULT_MAX_ORDER)
}

pub fn conjecture_check_with(n: u32, e: i64, max_order: u32) -> Result<ConjectureReport> {
    let computed = weyl_disc_with(n, e, max_order)?.disc;
    let raw = conjecture_prediction(n, e)?;
    let top = n * (n - 1);
    let predicted = raw.scale(&raw.coeff(&[top, top]).inv().expect("nonzero"));
    let difference = computed.sub(&predicted);
    Ok(ConjectureReport {
        n,
        matches: difference.is_zero(),
        computed,
        predicted,
        difference,
    })
}

/// One tensor factor's parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylParam {
    /// q = ζ_order^exp.
    Root { order: u32, exp: i64 },
    /// A formal parameter q_id, or its inverse.
    Formal { id: u32, inverse: bool },
}

impl WeylParam {
    fn root_fraction(&self) -> Option<BigRational> {
        match self {
            WeylParam::Root { order, exp } => {
                let r = BigRational::new(BigInt::from(*exp), BigInt::from(*order));
                Some(&r - r.floor())
            }
            WeylParam::Formal { .. } => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.root_fraction().is_some_and(|f| f == BigRational::from_integer(0.into()))
    }

    pub fn is_minus_one(&self) -> bool {
        self.root_fraction().is_some_and(|f| f == BigRational::new(1.into(), 2.into()))
    }

    pub fn equals(&self, other: &WeylParam) -> bool {
        match (self, other) {
            (WeylParam::Formal { id: a, inverse: x }, WeylParam::Formal { id: b, inverse: y }) => a == b && x == y,
            _ => match (self.root_fraction(), other.root_fraction()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }

    /// self · other = 1
    pub fn inverse_of(&self, other: &WeylParam) -> bool {
        match (self, other) {
            (WeylParam::Formal { id: a, inverse: x }, WeylParam::Formal { id: b, inverse: y }) => a == b && x != y,
            _ => match (self.root_fraction(), other.root_fraction()) {
                (Some(a), Some(b)) => {
                    let s = a + b;
                    s.is_integer()
                }
                _ => false,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylTensorPresentation {
    pub qs: Vec<WeylParam>,
}

impl WeylTensorPresentation {
    pub fn new(qs: Vec<WeylParam>) -> Result<Self> {
        if qs.is_empty() {
            return Err(Error::Dimension("at least one Weyl factor is required".into()));
        }
        if let Some(i) = qs.iter().position(|q| q.is_one()) {
            return Err(Error::Precondition(format!("q{} = 1", i + 1)));
        }
        if let Some(i) = qs.iter().position(|q| matches!(q, WeylParam::Root { order: 0, .. })) {
            return Err(Error::Precondition(format!("q{} has root order 0", i + 1)));
        }
        Ok(WeylTensorPresentation { qs })
    }

    pub fn m(&self) -> usize {
        self.qs.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylTensorDisc {
    /// Variables X1, Y1, X2, Y2, …
    pub disc: CenterPoly,
    pub rank: u64,
    pub dominating: bool,
}

/// d_A^{rank B} · d_B^{rank A}, folded over the factors.
pub fn weyl_tensor_disc(p: &WeylTensorPresentation) -> Result<WeylTensorDisc> {
    let m = p.m();
    let vars: Vec<String> = (1..=m).flat_map(|i| [format!("X{}", i), format!("Y{}", i)]).collect();
    let mut acc = CenterPoly::one(vars.clone());
    let mut rank: u64 = 1;
    for (i, q) in p.qs.iter().enumerate() {
        let (order, exp) = match q {
            WeylParam::Root { order, exp } => (*order, *exp),
            WeylParam::Formal { .. } => {
                return Err(Error::Precondition(format!("factor {} has a formal parameter", i + 1)));
            }
        };
        let d = weyl_disc(order, exp)?.disc.embed(vars.clone(), &[2 * i, 2 * i + 1]);
        let r = (order as u64) * (order as u64);
        acc = acc.pow(r as u32).mul(&d.pow(rank as u32));
        rank *= r;
    }
    // the top term involves every variable
    let top: Vec<u32> = (0..2 * m).map(|k| acc.degree_in(k)).collect();
    let dominating = top.iter().all(|&t| t > 0) && !acc.coeff(&top).is_zero();
    Ok(WeylTensorDisc {
        disc: acc,
        rank,
        dominating,
    })
}

/// Factor i goes to factor `target`; `cross` exchanges the roles of x and y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorMove {
    pub target: usize,
    pub cross: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylAutReport {
    pub torus_rank: usize,
    pub group_order: u64,
    pub generators: Vec<Vec<FactorMove>>,
    pub label: String,
    pub all_affine: bool,
    pub lnd_zero: bool,
}

fn move_allowed(p: &WeylTensorPresentation, i: usize, mv: FactorMove) -> bool {
    let (a, b) = (&p.qs[i], &p.qs[mv.target]);
    if mv.cross {
        a.inverse_of(b)
    } else {
        a.equals(b)
    }
}

fn compose_moves(a: &[FactorMove], b: &[FactorMove]) -> Vec<FactorMove> {
    // a ∘ b
    b.iter()
        .map(|mb| {
            let ma = a[mb.target];
            FactorMove {
                target: ma.target,
                cross: ma.cross != mb.cross,
            }
        })
        .collect()
}

pub fn weyl_aut_classify(p: &WeylTensorPresentation) -> Result<WeylAutReport> {
    let m = p.m();
    if m > 6 {
        return Err(Error::TooLarge(format!("signed permutation search over {} factors", m)));
    }
    let mut members: Vec<Vec<FactorMove>> = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        for mask in 0u32..(1 << m) {
            let cand: Vec<FactorMove> = (0..m)
                .map(|i| FactorMove {
                    target: perm[i],
                    cross: mask >> i & 1 == 1,
                })
                .collect();
            if (0..m).all(|i| move_allowed(p, i, cand[i])) {
                members.push(cand);
            }
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    let identity: Vec<FactorMove> = (0..m).map(|i| FactorMove { target: i, cross: false }).collect();
    let mut generators = Vec::new();
    let mut span: BTreeSet<Vec<FactorMove>> = BTreeSet::new();
    span.insert(identity.clone());
    for mv in &members {
        if !span.contains(mv) {
            generators.push(mv.clone());
            span = move_closure(&generators, &identity);
        }
    }
    if span.len() != members.len() {
        return Err(Error::Invariant("allowed factor moves do not form a group".into()));
    }
    let order = members.len() as u64;
    let generic = (0..m).all(|i| {
        !p.qs[i].is_minus_one() && (0..m).all(|j| j == i || !(p.qs[i].equals(&p.qs[j]) || p.qs[i].inverse_of(&p.qs[j])))
    });
    let uniform = !p.qs[0].is_minus_one() && p.qs.iter().all(|q| q.equals(&p.qs[0]));
    let label = if generic {
        format!("(k^x)^{}", m)
    } else if uniform {
        format!("S_{} x| (k^x)^{}", m, m)
    } else {
        format!("S x| (k^x)^{}, |S| = {}", m, order)
    };
    Ok(WeylAutReport {
        torus_rank: m,
        group_order: order,
        generators,
        label,
        all_affine: true,
        lnd_zero: true,
    })
}

fn move_closure(generators: &[Vec<FactorMove>], identity: &[FactorMove]) -> BTreeSet<Vec<FactorMove>> {
    let mut seen = BTreeSet::new();
    seen.insert(identity.to_vec());
    let mut frontier = vec![identity.to_vec()];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = compose_moves(g, &x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn next_perm(p: &mut [usize]) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::cyclo;

    #[test]
    fn defining_relation() {
        let q = cyclo(3, 1);
        let alg = WeylAlgebra::new(q.clone()).unwrap();
        let yx = alg.mul(&WeylElement::y(), &WeylElement::x());
        let mut expect = WeylElement::monomial(1, 1, q.clone());
        expect.accumulate(0, 0, CycloNumber::one());
        assert_eq!(yx, expect);
        let yyx = alg.mul(&WeylElement::monomial(0, 2, CycloNumber::one()), &WeylElement::x());
        let mut expect = WeylElement::monomial(1, 2, &q * &q);
        expect.accumulate(0, 1, q + CycloNumber::one());
        assert_eq!(yyx, expect);
    }

    #[test]
    fn order_two_discriminant() {
        let d = weyl_disc(2, 1).unwrap();
        let expect = CenterPoly::from_terms(
            xy_vars(),
            [
                (vec![2, 2], CycloNumber::from_int(16)),
                (vec![1, 1], CycloNumber::from_int(-8)),
                (vec![0, 0], CycloNumber::from_int(1)),
            ],
        )
        .monic();
        assert_eq!(d.disc, expect);
    }
}
