//! Normal-ordered arithmetic in skew polynomial rings k_{p_ij}[x_1, …, x_n].

mod endo;
mod presentation;

pub use endo::{
    derivation_apply, derivation_certify_nilpotent, derivation_verify, endo_apply, endo_compose, endo_verify,
    Derivation, Endomorphism, Nilpotency, DEFAULT_NILPOTENCY_CAP,
};
pub use presentation::{complete_antisymmetric, Mode, ParamExp, RingPresentation, RootPart};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactmath::{write_monomial, Coefficient, CycloNumber, LaurentQ};

/// Coefficient types that can realize the parameters of a presentation.
pub trait RingScalar: Coefficient {
    /// True for the formal-parameter coefficient ring.
    const FORMAL: bool;
    /// q^formal · root.
    fn twist(formal: i64, root: &CycloNumber) -> Self;
}

impl RingScalar for CycloNumber {
    const FORMAL: bool = false;
    fn twist(formal: i64, root: &CycloNumber) -> Self {
        debug_assert_eq!(formal, 0);
        root.clone()
    }
}

impl RingScalar for LaurentQ {
    const FORMAL: bool = true;
    fn twist(formal: i64, root: &CycloNumber) -> Self {
        LaurentQ::monomial(formal, root.clone())
    }
}

/// c · x_1^{d_1} ⋯ x_n^{d_n}.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<C> {
    pub exps: Vec<u32>,
    pub coeff: C,
}

impl<C: Coefficient> Monomial<C> {
    pub fn new(exps: Vec<u32>, coeff: C) -> Self {
        Monomial { exps, coeff }
    }

    pub fn unit(exps: Vec<u32>) -> Self {
        Monomial { exps, coeff: C::one() }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// A skew polynomial in normal order; no zero coefficients are stored.
#[derive(Clone, PartialEq)]
pub struct SkewPoly<C> {
    n: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> SkewPoly<C> {
    pub fn zero(n: usize) -> Self {
        SkewPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        SkewPoly::monomial(vec![0; n], C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = SkewPoly::zero(exps.len());
        p.accumulate(exps, c);
        p
    }

    pub fn from_monomial(m: Monomial<C>) -> Self {
        SkewPoly::monomial(m.exps, m.coeff)
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        SkewPoly::monomial(e, C::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = SkewPoly::zero(n);
        for (e, c) in terms {
            p.accumulate(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn accumulate(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.n, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(v) => {
                let s = v + c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SkewPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        SkewPoly::from_terms(self.n, self.terms.iter().map(|(e, x)| (e.clone(), c.clone() * x.clone())))
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Terms of total degree exactly `d`.
    pub fn component(&self, d: u32) -> Self {
        SkewPoly::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Terms not involving x_s.
    pub fn free_of(&self, s: usize) -> Self {
        SkewPoly::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(e, _)| e[s] == 0)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial<C>> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(e.clone(), c.clone()))
    }
}

impl<C: Coefficient> fmt::Debug for SkewPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub(crate) fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
}

/// Highest lex term first; coefficients that are not rational are parenthesized.
impl<C: Coefficient> fmt::Display for SkewPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = var_names("x", self.n);
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let constant = e.iter().all(|&x| x == 0);
            match c.to_rational() {
                Some(r) => {
                    let sign = if r.is_negative() { "-" } else { "+" };
                    if k == 0 {
                        if r.is_negative() {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, " {} ", sign)?;
                    }
                    let a = r.abs();
                    if constant || !a.is_one() {
                        write!(f, "{}", a)?;
                        if !constant {
                            write!(f, " ")?;
                        }
                    }
                }
                None => {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({})", c)?;
                    if !constant {
                        write!(f, " ")?;
                    }
                }
            }
            write_monomial(f, &vars, e)?;
        }
        Ok(())
    }
}

/// Arithmetic context for a presentation: caches the powers of the root of unity.
#[derive(Clone, Debug)]
pub struct SkewAlgebra<C> {
    pres: RingPresentation,
    root_powers: Vec<CycloNumber>,
    _coeff: core::marker::PhantomData<C>,
}

impl<C: RingScalar> SkewAlgebra<C> {
    pub fn new(pres: &RingPresentation) -> Result<Self> {
        if C::FORMAL == pres.is_root_mode() {
            return Err(Error::Precondition(format!(
                "coefficient ring does not match the presentation mode ({:?})",
                pres.mode()
            )));
        }
        let m = pres.root_order();
        let root_powers = (0..m).map(|k| CycloNumber::cyclo(m, k as i64)).collect();
        Ok(SkewAlgebra {
            pres: pres.clone(),
            root_powers,
            _coeff: core::marker::PhantomData,
        })
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.pres
    }

    pub fn n(&self) -> usize {
        self.pres.n()
    }

    /// The scalar q^formal ζ^root.
    pub fn scalar(&self, p: ParamExp) -> C {
        let m = self.root_powers.len() as i64;
        C::twist(p.formal, &self.root_powers[p.root.rem_euclid(m) as usize])
    }

    /// Exponents of the scalar produced by reordering x^a · x^b into normal form.
    pub fn reorder_exp(&self, a: &[u32], b: &[u32]) -> ParamExp {
        let n = self.n();
        let mut acc = ParamExp::default();
        for j in 0..n {
            if a[j] == 0 {
                continue;
            }
            for i in 0..j {
                if b[i] == 0 {
                    continue;
                }
                let k = (a[j] as i64) * (b[i] as i64);
                let p = self.pres.param(i, j);
                acc.formal += p.formal * k;
                acc.root += p.root * k;
            }
        }
        acc
    }

    fn check_len(&self, e: &[u32]) -> Result<()> {
        if e.len() != self.n() {
            return Err(Error::Dimension(format!(
                "exponent vector of length {} in a ring with {} generators",
                e.len(),
                self.n()
            )));
        }
        Ok(())
    }

    pub fn mono_mul(&self, a: &Monomial<C>, b: &Monomial<C>) -> Result<Monomial<C>> {
        self.check_len(&a.exps)?;
        self.check_len(&b.exps)?;
        let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        let c = a.coeff.clone() * b.coeff.clone() * self.scalar(self.reorder_exp(&a.exps, &b.exps));
        Ok(Monomial::new(exps, c))
    }

    pub fn mul(&self, f: &SkewPoly<C>, g: &SkewPoly<C>) -> SkewPoly<C> {
        let mut out = SkewPoly::zero(self.n());
        for (e1, c1) in &f.terms {
            for (e2, c2) in &g.terms {
                let e = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                let c = c1.clone() * c2.clone() * self.scalar(self.reorder_exp(e1, e2));
                out.accumulate(e, c);
            }
        }
        out
    }

    pub fn pow(&self, f: &SkewPoly<C>, k: u32) -> SkewPoly<C> {
        let mut acc = SkewPoly::one(self.n());
        for _ in 0..k {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// f·g − g·f.
    pub fn commutator(&self, f: &SkewPoly<C>, g: &SkewPoly<C>) -> SkewPoly<C> {
        self.mul(f, g).sub(&self.mul(g, f))
    }
}

impl SkewAlgebra<CycloNumber> {
    /// Exact quotient f / g for central g, by lex leading-term division.
    pub fn div_exact(&self, f: &SkewPoly<CycloNumber>, g: &SkewPoly<CycloNumber>) -> Option<SkewPoly<CycloNumber>> {
        let (ge, gc) = g.leading()?;
        let (ge, gc) = (ge.clone(), gc.clone());
        let mut rem = f.clone();
        let mut quot = SkewPoly::zero(self.n());
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(&ge).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&ge).map(|(a, b)| a - b).collect();
            let lam = self.scalar(self.reorder_exp(&e, &ge));
            let c = rc / &(&gc * &lam);
            let t = SkewPoly::monomial(e, c);
            rem = rem.sub(&self.mul(&t, g));
            quot = quot.add(&t);
        }
        Some(quot)
    }
}

/// The commutative domain C(A) ⊂ A used for trace-matrix determinants.
/// Products are taken in A, which is what makes the arithmetic faithful.
pub struct CenterDomain<'a> {
    pub alg: &'a SkewAlgebra<CycloNumber>,
}

impl crate::exactmath::ExactDomain for CenterDomain<'_> {
    type Elem = SkewPoly<CycloNumber>;
    fn zero(&self) -> Self::Elem {
        SkewPoly::zero(self.alg.n())
    }
    fn one(&self) -> Self::Elem {
        SkewPoly::one(self.alg.n())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.alg.mul(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.alg.div_exact(a, b)
    }
}

/// Componentwise minimum of the exponent vectors, coefficient 1.
pub fn mono_gcd<C: Coefficient>(ms: &[Monomial<C>]) -> Result<Monomial<C>> {
    let first = ms.first().ok_or_else(|| Error::Precondition("gcd of an empty set".into()))?;
    if ms.iter().any(|m| m.coeff.is_zero()) {
        return Err(Error::Precondition("gcd of a zero monomial".into()));
    }
    let mut e = first.exps.clone();
    for m in &ms[1..] {
        if m.exps.len() != e.len() {
            return Err(Error::Dimension("monomials of different lengths".into()));
        }
        for (a, b) in e.iter_mut().zip(&m.exps) {
            *a = (*a).min(*b);
        }
    }
    Ok(Monomial::unit(e))
}
