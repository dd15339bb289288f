//! Laurent polynomials in a formal parameter q, cyclotomic coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::CycloNumber;

/// Σ c_e q^e with q transcendental over Q(ζ).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i64, CycloNumber>,
}

impl LaurentQ {
    pub fn zero() -> LaurentQ {
        LaurentQ::default()
    }

    pub fn one() -> LaurentQ {
        LaurentQ::monomial(0, CycloNumber::one())
    }

    /// c·q^e.
    pub fn monomial(e: i64, c: CycloNumber) -> LaurentQ {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, CycloNumber> {
        &self.terms
    }

    fn accumulate(&mut self, e: i64, c: CycloNumber) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(CycloNumber::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(mut self, rhs: LaurentQ) -> LaurentQ {
        for (e, c) in rhs.terms {
            self.accumulate(e, c);
        }
        self
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: LaurentQ) -> LaurentQ {
        self + (-rhs)
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.accumulate(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let is_rat = c.as_rational().is_some();
            match (e, c.is_one()) {
                (0, _) if is_rat => write!(f, "{}", c)?,
                (0, _) => write!(f, "({})", c)?,
                (_, true) => {}
                _ if is_rat => write!(f, "{}*", c)?,
                _ => write!(f, "({})*", c)?,
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", e)?,
            }
        }
        Ok(())
    }
}
