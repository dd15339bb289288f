//! Exact scalars and commutative polynomial linear algebra.

mod cyclo;
mod det;
mod laurent;
mod poly;

pub use cyclo::{euler_phi, CycloNumber};
pub use det::{det_center, det_exact, CycloDomain, ExactDomain, IntegerDomain, PolyDomain};
pub use laurent::LaurentQ;
pub use poly::CenterPoly;
pub(crate) use poly::write_monomial;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

/// ζ_order^exponent.
pub fn cyclo(order: u32, exponent: i64) -> CycloNumber {
    CycloNumber::cyclo(order, exponent)
}

/// Scalars a skew polynomial can carry.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_cyclo(c: CycloNumber) -> Self;
    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    fn from_rational(r: BigRational) -> Self {
        Self::from_cyclo(CycloNumber::from_rational(r))
    }

    fn from_int(k: i64) -> Self {
        Self::from_cyclo(CycloNumber::from_int(k))
    }
}

impl Coefficient for CycloNumber {
    fn zero() -> Self {
        CycloNumber::zero()
    }
    fn one() -> Self {
        CycloNumber::one()
    }
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn from_cyclo(c: CycloNumber) -> Self {
        c
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.as_rational().cloned()
    }
}

impl Coefficient for LaurentQ {
    fn zero() -> Self {
        LaurentQ::zero()
    }
    fn one() -> Self {
        LaurentQ::one()
    }
    fn is_zero(&self) -> bool {
        LaurentQ::is_zero(self)
    }
    fn from_cyclo(c: CycloNumber) -> Self {
        LaurentQ::monomial(0, c)
    }
    fn to_rational(&self) -> Option<BigRational> {
        match self.terms().len() {
            0 => Some(BigRational::from_integer(0.into())),
            1 => self.terms().get(&0).and_then(|c| c.as_rational().cloned()),
            _ => None,
        }
    }
}
