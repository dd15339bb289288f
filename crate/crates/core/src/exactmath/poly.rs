//! Commutative multivariate polynomials with cyclotomic coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use super::CycloNumber;

/// Terms are keyed by exponent vector; BTreeMap order is lexicographic, so the
/// last entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct CenterPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, CycloNumber>,
}

impl CenterPoly {
    pub fn zero(vars: Vec<String>) -> CenterPoly {
        CenterPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: CycloNumber) -> CenterPoly {
        let n = vars.len();
        CenterPoly::monomial(vars, vec![0; n], c)
    }

    pub fn one(vars: Vec<String>) -> CenterPoly {
        CenterPoly::constant(vars, CycloNumber::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, c: CycloNumber) -> CenterPoly {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CenterPoly { vars, terms }
    }

    /// The i-th variable as a polynomial.
    pub fn var(vars: Vec<String>, i: usize) -> CenterPoly {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        CenterPoly::monomial(vars, e, CycloNumber::one())
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, CycloNumber)>) -> CenterPoly {
        let mut p = CenterPoly::zero(vars);
        for (e, c) in terms {
            p.accumulate(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CycloNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> CycloNumber {
        self.terms.get(exps).cloned().unwrap_or_else(CycloNumber::zero)
    }

    pub fn accumulate(&mut self, exps: Vec<u32>, c: CycloNumber) {
        debug_assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_vars(&self, other: &CenterPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable sets");
    }

    pub fn add(&self, other: &CenterPoly) -> CenterPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CenterPoly {
        CenterPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &CenterPoly) -> CenterPoly {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &CenterPoly) -> CenterPoly {
        self.check_vars(other);
        let mut out = CenterPoly::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.accumulate(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &CycloNumber) -> CenterPoly {
        if c.is_zero() {
            return CenterPoly::zero(self.vars.clone());
        }
        CenterPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> CenterPoly {
        let mut acc = CenterPoly::one(self.vars.clone());
        let mut sq = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Lex-leading exponent and coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, &CycloNumber)> {
        self.terms.iter().next_back()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> CenterPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient self / d, or `None` if d does not divide self.
    pub fn div_exact(&self, d: &CenterPoly) -> Option<CenterPoly> {
        self.check_vars(d);
        let (de, dc) = d.leading()?;
        let dc_inv = dc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = CenterPoly::zero(self.vars.clone());
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(de).map(|(a, b)| a - b).collect();
            let c = rc * &dc_inv;
            let t = CenterPoly::monomial(self.vars.clone(), e, c);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Maximum exponent of variable i over all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Re-indexes variables: variable i of self becomes variable `map[i]` of the result.
    pub fn embed(&self, vars: Vec<String>, map: &[usize]) -> CenterPoly {
        let n = vars.len();
        let mut out = CenterPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut f = vec![0; n];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            out.accumulate(f, c.clone());
        }
        out
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], exps: &[u32]) -> fmt::Result {
    let mut first = true;
    for (v, &e) in vars.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", v)?;
        } else {
            write!(f, "{}^{}", v, e)?;
        }
    }
    Ok(())
}

/// Writes `c·m` in a sum, handling signs and unit coefficients.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &CycloNumber,
    vars: &[String],
    exps: &[u32],
    first: bool,
) -> fmt::Result {
    let constant = exps.iter().all(|&e| e == 0);
    match c.as_rational() {
        Some(r) => {
            let neg = r.is_negative();
            let abs = r.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if constant || abs != num_rational::BigRational::from_integer(1.into()) {
                write!(f, "{}", abs)?;
                if !constant {
                    write!(f, " ")?;
                }
            }
        }
        None => {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            if !constant {
                write!(f, " ")?;
            }
        }
    }
    write_monomial(f, vars, exps)
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, c, &self.vars, e, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
