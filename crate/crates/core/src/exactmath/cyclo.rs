//! Elements of the cyclotomic fields Q(ζ_ℓ).
//!
//! A value is stored as its coefficient vector in the power basis
//! 1, ζ, …, ζ^{φ(ℓ)−1}, reduced modulo the ℓ-th cyclotomic polynomial.
//! Every value is kept in the smallest cyclotomic field containing it
//! (orders ≡ 2 mod 4 never occur, and rationals have order 1), so equal
//! values have identical representations however they were built.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

struct Field {
    order: u32,
    /// Monic Φ_ℓ, coefficient of x^k at index k.
    modulus: Vec<BigInt>,
    /// ζ^k reduced, for k in 0..order.
    powers: Vec<Vec<BigRational>>,
    /// One entry per maximal subfield Q(ζ_{order/p}) of order > 2.
    descents: Vec<Descent>,
}

struct Descent {
    sub: Arc<Field>,
    /// Left inverse of the embedding: subfield coordinates of a member.
    project: Vec<Vec<BigRational>>,
    /// Left kernel of the embedding: a value is a member iff every row kills it.
    kernel: Vec<Vec<BigRational>>,
}

fn dot(row: &[BigRational], v: &[BigRational]) -> BigRational {
    row.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})", self.order)
    }
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by the monic polynomial x^d − 1.
fn poly_div_xd_minus_one(a: &[BigInt], d: usize) -> Vec<BigInt> {
    let deg = a.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); deg - d + 1];
    for k in (d..=deg).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - d] = c.clone();
        rem[k] = BigInt::zero();
        rem[k - d] += c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

fn mobius(mut n: u32) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Φ_n as the Möbius product of the x^d − 1.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    let mut p = vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let mut f = vec![BigInt::zero(); d as usize + 1];
            f[0] = -BigInt::one();
            f[d as usize] = BigInt::one();
            p = poly_mul_int(&p, &f);
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            p = poly_div_xd_minus_one(&p, d as usize);
        }
    }
    p
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

impl Field {
    fn new(order: u32) -> Field {
        let modulus = cyclotomic_poly(order);
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigRational::zero(); deg];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by ζ: shift up, then fold the overflow back with Φ
            let top = cur[deg - 1].clone();
            for k in (1..deg).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for (k, c) in cur.iter_mut().enumerate() {
                    *c -= &top * BigRational::from_integer(modulus[k].clone());
                }
            }
        }
        let mut field = Field {
            order,
            modulus,
            powers,
            descents: Vec::new(),
        };
        for p in prime_factors(order) {
            if order / p > 2 {
                let d = field.descent(Arc::new(Field::new(order / p)), p);
                field.descents.push(d);
            }
        }
        field
    }

    /// Row-reduces [M | I] where the columns of M embed the power basis of `sub`.
    fn descent(&self, sub: Arc<Field>, p: u32) -> Descent {
        let deg = self.degree();
        let ds = sub.degree();
        let mut rows: Vec<Vec<BigRational>> = (0..deg)
            .map(|i| {
                let mut r: Vec<BigRational> = (0..ds)
                    .map(|k| self.powers[(k * p as usize) % self.order as usize][i].clone())
                    .collect();
                r.extend((0..deg).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                r
            })
            .collect();
        for col in 0..ds {
            let piv = (col..deg).find(|&i| !rows[i][col].is_zero()).expect("embedding has full rank");
            rows.swap(col, piv);
            let inv = rows[col][col].recip();
            for x in rows[col].iter_mut() {
                *x *= &inv;
            }
            for i in 0..deg {
                if i != col && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    let pivot_row = rows[col].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        let mut e: Vec<Vec<BigRational>> = rows.into_iter().map(|r| r[ds..].to_vec()).collect();
        let kernel = e.split_off(ds);
        Descent { sub, project: e, kernel }
    }

    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        for k in (deg..p.len()).rev() {
            let c = core::mem::replace(&mut p[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for t in 0..deg {
                if !self.modulus[t].is_zero() {
                    p[k - deg + t] -= &c * BigRational::from_integer(self.modulus[t].clone());
                }
            }
        }
        p.truncate(deg);
        p.resize(deg, BigRational::zero());
        p
    }
}

/// An element of Q(ζ_order).
#[derive(Clone)]
pub struct CycloNumber {
    field: Option<Arc<Field>>,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    /// ζ_order^exponent, exponent taken mod order.
    pub fn cyclo(order: u32, exponent: i64) -> CycloNumber {
        assert!(order >= 1, "cyclotomic order must be positive");
        if order <= 2 {
            let e = exponent.rem_euclid(order as i64);
            return CycloNumber::from_int(if e == 0 { 1 } else { -1 });
        }
        let field = Arc::new(Field::new(order));
        let e = exponent.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[e].clone();
        CycloNumber::normalized(Some(field), coeffs)
    }

    pub fn from_rational(r: BigRational) -> CycloNumber {
        CycloNumber {
            field: None,
            coeffs: vec![r],
        }
    }

    pub fn from_int(k: i64) -> CycloNumber {
        CycloNumber::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn zero() -> CycloNumber {
        CycloNumber::from_int(0)
    }

    pub fn one() -> CycloNumber {
        CycloNumber::from_int(1)
    }

    fn normalized(field: Option<Arc<Field>>, coeffs: Vec<BigRational>) -> CycloNumber {
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            return CycloNumber::from_rational(c0);
        }
        let mut field = field.expect("irrational value needs a field");
        let mut coeffs = coeffs;
        'descend: loop {
            for d in &field.descents {
                if d.kernel.iter().all(|row| dot(row, &coeffs).is_zero()) {
                    coeffs = d.project.iter().map(|row| dot(row, &coeffs)).collect();
                    field = d.sub.clone();
                    continue 'descend;
                }
            }
            break;
        }
        CycloNumber {
            field: Some(field),
            coeffs,
        }
    }

    /// The cyclotomic order the value is stored in (1 for rationals).
    pub fn order(&self) -> u32 {
        self.field.as_ref().map_or(1, |f| f.order)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.field.is_none() && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.field.is_none() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-expresses the value in Q(ζ_target); `target` must be a multiple of the order.
    fn coeffs_in(&self, target: &Field) -> Vec<BigRational> {
        let deg = target.degree();
        let mut out = vec![BigRational::zero(); deg];
        let m = self.order();
        let step = (target.order / m) as usize;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &target.powers[(k * step) % target.order as usize];
            for (o, b) in out.iter_mut().zip(p) {
                if !b.is_zero() {
                    *o += c * b;
                }
            }
        }
        out
    }

    /// Both operands as coefficient vectors in a common field.
    fn align(a: &CycloNumber, b: &CycloNumber) -> (Option<Arc<Field>>, Vec<BigRational>, Vec<BigRational>) {
        match (&a.field, &b.field) {
            (None, None) => (None, a.coeffs.clone(), b.coeffs.clone()),
            (Some(f), Some(g)) if f.order == g.order => (Some(f.clone()), a.coeffs.clone(), b.coeffs.clone()),
            (Some(f), None) => {
                let bc = b.coeffs_in(f);
                (Some(f.clone()), a.coeffs.clone(), bc)
            }
            (None, Some(g)) => {
                let ac = a.coeffs_in(g);
                (Some(g.clone()), ac, b.coeffs.clone())
            }
            (Some(f), Some(g)) => {
                let l = f.order.lcm(&g.order);
                let field = Arc::new(Field::new(l));
                let ac = a.coeffs_in(&field);
                let bc = b.coeffs_in(&field);
                (Some(field), ac, bc)
            }
        }
    }

    fn mul_ref(&self, other: &CycloNumber) -> CycloNumber {
        if self.field.is_none() {
            let c = &self.coeffs[0];
            let coeffs = other.coeffs.iter().map(|x| c * x).collect();
            return CycloNumber::normalized(other.field.clone(), coeffs);
        }
        if other.field.is_none() {
            return other.mul_ref(self);
        }
        let (field, a, b) = CycloNumber::align(self, other);
        let field = field.expect("non-rational operands");
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let coeffs = field.reduce(prod);
        CycloNumber::normalized(Some(field), coeffs)
    }

    fn add_ref(&self, other: &CycloNumber) -> CycloNumber {
        let (field, mut a, b) = CycloNumber::align(self, other);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        CycloNumber::normalized(field, a)
    }

    fn neg_ref(&self) -> CycloNumber {
        // negation never changes the minimal field
        CycloNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<CycloNumber> {
        if self.is_zero() {
            return None;
        }
        let field = match &self.field {
            None => return Some(CycloNumber::from_rational(self.coeffs[0].recip())),
            Some(f) => f.clone(),
        };
        let modulus: Vec<BigRational> = field
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let s = poly_inverse_mod(&self.coeffs, &modulus);
        let coeffs = field.reduce(s);
        Some(CycloNumber::normalized(Some(field), coeffs))
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, e: i64) -> CycloNumber {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = CycloNumber::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> CycloNumber {
        let coeffs = self.coeffs.iter().map(|c| c * r).collect();
        CycloNumber::normalized(self.field.clone(), coeffs)
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        let c = &r[k] / &lead;
        if c.is_zero() {
            continue;
        }
        for t in 0..=db {
            let sub = &c * &b[t];
            r[k - db + t] -= sub;
        }
        q[k - db] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (k, x) in a.iter().enumerate() {
        out[k] += x;
    }
    for (k, y) in b.iter().enumerate() {
        out[k] -= y;
    }
    trim(&mut out);
    out
}

/// s with s·a ≡ 1 mod m, for m irreducible and a ≢ 0.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant: the gcd
    let c = r0[0].clone();
    s0.into_iter().map(|x| x / &c).collect()
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &CycloNumber) -> bool {
        // representations are canonical
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn write_rational_term(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool, unit: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if unit && abs.is_one() {
        return Ok(());
    }
    write!(f, "{}", abs)?;
    if unit {
        write!(f, "*")?;
    }
    Ok(())
}

/// Prints as a polynomial in `z<order>`, highest power first.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.order();
        if order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_rational_term(f, c, first, k > 0)?;
            match k {
                0 => {}
                1 => write!(f, "z{}", order)?,
                _ => write!(f, "z{}^{}", order, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycloNumber> for &'a CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &'a CycloNumber) -> CycloNumber {
                let f: fn(&CycloNumber, &CycloNumber) -> CycloNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero")));

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.neg_ref()
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let p = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), p(&[1, 0, -1, 0, 1]));
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, euler_phi(n));
        }
    }

    #[test]
    fn small_identities() {
        assert_eq!(CycloNumber::cyclo(2, 1), CycloNumber::from_int(-1));
        assert_eq!(CycloNumber::cyclo(4, 2), CycloNumber::from_int(-1));
        assert_eq!(CycloNumber::cyclo(3, 1) + CycloNumber::cyclo(3, 2), CycloNumber::from_int(-1));
        assert_eq!(CycloNumber::cyclo(6, 2), CycloNumber::cyclo(3, 1));
        assert_eq!(CycloNumber::cyclo(5, 7), CycloNumber::cyclo(5, 2));
        assert_eq!(CycloNumber::cyclo(7, -1), CycloNumber::cyclo(7, 6));
    }

    #[test]
    fn mixed_orders_lift() {
        // i · ξ lives in Q(ζ_12)
        let p = CycloNumber::cyclo(4, 1) * CycloNumber::cyclo(3, 1);
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycloNumber::cyclo(12, 7));
    }

    #[test]
    fn inverse() {
        let a = CycloNumber::cyclo(5, 1) + CycloNumber::from_int(3);
        let b = a.inv().unwrap();
        assert!((a * b).is_one());
        assert_eq!(CycloNumber::cyclo(8, 3).pow(-1), CycloNumber::cyclo(8, 5));
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", CycloNumber::cyclo(4, 1)), "z4");
        let x = CycloNumber::from_int(1) - CycloNumber::cyclo(3, 1).scale(&BigRational::from_integer(2.into()));
        assert_eq!(format!("{}", x), "-2*z3 + 1");
    }
}
