//! Fraction-free (Bareiss) determinants over exact commutative domains.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CenterPoly, CycloNumber};
use crate::error::{Error, Result};

/// A commutative integral domain in which exact division can be decided.
///
/// Elements are passed around by value; the domain object carries whatever
/// context the arithmetic needs (variable names, ring presentation).
pub trait ExactDomain {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// a / b when b divides a.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

/// Bareiss elimination with row pivoting.
pub fn det_exact<D: ExactDomain>(dom: &D, m: &[Vec<D::Elem>]) -> Result<D::Elem> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(String::from("determinant of a non-square matrix")));
    }
    if n == 0 {
        return Ok(dom.one());
    }
    let mut a: Vec<Vec<D::Elem>> = m.to_vec();
    let mut negate = false;
    let mut prev = dom.one();
    for k in 0..n - 1 {
        if dom.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !dom.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(dom.zero()),
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let lead_zero = dom.is_zero(&a[i][k]);
            for j in k + 1..n {
                let left = if dom.is_zero(&a[i][j]) { None } else { Some(dom.mul(&a[i][j], &pivot)) };
                let right = if lead_zero || dom.is_zero(&a[k][j]) { None } else { Some(dom.mul(&a[i][k], &a[k][j])) };
                let t = match (left, right) {
                    (None, None) => {
                        a[i][j] = dom.zero();
                        continue;
                    }
                    (Some(l), None) => l,
                    (None, Some(r)) => dom.neg(&r),
                    (Some(l), Some(r)) => dom.sub(&l, &r),
                };
                a[i][j] = dom.div_exact(&t, &prev).ok_or_else(|| {
                    Error::Invariant(format!("Bareiss step ({},{},{}) not exactly divisible", k, i, j))
                })?;
            }
        }
        prev = pivot;
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { dom.neg(&d) } else { d })
}

/// Polynomials in a fixed set of commuting variables.
pub struct PolyDomain {
    pub vars: Vec<String>,
}

impl ExactDomain for PolyDomain {
    type Elem = CenterPoly;
    fn zero(&self) -> CenterPoly {
        CenterPoly::zero(self.vars.clone())
    }
    fn one(&self) -> CenterPoly {
        CenterPoly::one(self.vars.clone())
    }
    fn is_zero(&self, a: &CenterPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
        a.add(b)
    }
    fn sub(&self, a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
        a.sub(b)
    }
    fn mul(&self, a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
        a.mul(b)
    }
    fn neg(&self, a: &CenterPoly) -> CenterPoly {
        a.neg()
    }
    fn div_exact(&self, a: &CenterPoly, b: &CenterPoly) -> Option<CenterPoly> {
        a.div_exact(b)
    }
}

/// Determinant of a square matrix of commutative polynomials.
pub fn det_center(m: &[Vec<CenterPoly>]) -> Result<CenterPoly> {
    let vars = match m.first().and_then(|r| r.first()) {
        Some(p) => p.vars().to_vec(),
        None => return Err(Error::Dimension(String::from("empty matrix has no variable set"))),
    };
    if m.iter().flatten().any(|p| p.vars() != vars.as_slice()) {
        return Err(Error::Dimension(String::from("matrix entries over different variable sets")));
    }
    det_exact(&PolyDomain { vars }, m)
}

pub struct IntegerDomain;

impl ExactDomain for IntegerDomain {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
}

pub struct CycloDomain;

impl ExactDomain for CycloDomain {
    type Elem = CycloNumber;
    fn zero(&self) -> CycloNumber {
        CycloNumber::zero()
    }
    fn one(&self) -> CycloNumber {
        CycloNumber::one()
    }
    fn is_zero(&self, a: &CycloNumber) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
        a + b
    }
    fn sub(&self, a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
        a - b
    }
    fn mul(&self, a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
        a * b
    }
    fn neg(&self, a: &CycloNumber) -> CycloNumber {
        -a
    }
    fn div_exact(&self, a: &CycloNumber, b: &CycloNumber) -> Option<CycloNumber> {
        b.inv().map(|i| a * &i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn integer_dets() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(det_exact(&IntegerDomain, &m(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(
            det_exact(&IntegerDomain, &m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(det_exact(&IntegerDomain, &m(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
        let antisym = m(&[&[0, 1, 1, 1], &[-1, 0, 1, 1], &[-1, -1, 0, 1], &[-1, -1, -1, 0]]);
        assert_eq!(det_exact(&IntegerDomain, &antisym).unwrap(), BigInt::from(1));
        assert!(det_exact(&IntegerDomain, &[vec![BigInt::one()], vec![]]).is_err());
    }
}
