//! Exact two-phase simplex over the rationals, Bland's rule.
//!
//! Only used on tiny systems (one row per generator), so the dense tableau is fine.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: BigRational, x: Vec<BigRational> },
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        self.rows[i].last().unwrap()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes cost·x over the current basis. Returns false when unbounded.
    fn run(&mut self, cost: &[BigRational]) -> bool {
        let ncols = cost.len();
        loop {
            let entering = (0..ncols).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((i, _)) => self.pivot(i, j),
            }
        }
    }

    fn objective(&self, cost: &[BigRational]) -> BigRational {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &b)| &cost[b] * self.rhs(i))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

/// Maximizes c·x subject to A x = b, x ≥ 0.
pub fn lp_max(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let nv = c.len();
    // phase 1: artificial variable per row, rows normalized to b ≥ 0
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = a[i].iter().map(|v| if flip { -v } else { v.clone() }).collect();
        for k in 0..m {
            row.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (nv..nv + m).collect(),
    };
    let mut cost1 = vec![BigRational::zero(); nv + m];
    for v in cost1.iter_mut().skip(nv) {
        *v = -BigRational::one();
    }
    t.run(&cost1);
    if t.objective(&cost1).is_negative() {
        return LpOutcome::Infeasible;
    }
    // drive artificials out of the basis; drop redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= nv {
            match (0..nv).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in t.rows.iter_mut() {
        let rhs = row.pop().unwrap();
        row.truncate(nv);
        row.push(rhs);
    }
    if !t.run(c) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); nv];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rhs(i).clone();
    }
    LpOutcome::Optimal {
        value: t.objective(c),
        x,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn bounded_and_unbounded() {
        // x + y = 4, maximize x → 4
        let a = vec![vec![q(1), q(1)]];
        match lp_max(&a, &[q(4)], &[q(1), q(0)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(4)),
            o => panic!("{:?}", o),
        }
        // x − y = 1, maximize x → unbounded
        let a = vec![vec![q(1), q(-1)]];
        assert_eq!(lp_max(&a, &[q(1)], &[q(1), q(0)]), LpOutcome::Unbounded);
        // x + y = −1 infeasible
        let a = vec![vec![q(1), q(1)]];
        assert_eq!(lp_max(&a, &[q(-1)], &[q(0), q(0)]), LpOutcome::Infeasible);
        // redundant rows
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        match lp_max(&a, &[q(3), q(6)], &[q(0), q(1)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, BigRational::new(3.into(), 2.into())),
            o => panic!("{:?}", o),
        }
    }
}
