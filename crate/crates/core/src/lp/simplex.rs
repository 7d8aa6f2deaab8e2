//! Dense two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Solves `min c.x  s.t.  A x = b, x >= 0`. Duals `y` satisfy
//! `A^T y <= c` at optimality, with equality on the basic columns.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSolution {
    pub status: Status,
    pub objective: Rational,
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub basis: Vec<usize>,
    /// Rows found to be linear combinations of the others.
    pub redundant_rows: Vec<usize>,
    pub pivots: usize,
}

struct Tableau {
    m: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        let inv = Rational::one() / p;
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = self.rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = col;
        self.pivots += 1;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut d = cost[j].clone();
        for i in 0..self.m {
            let a = &self.rows[i][j];
            if !a.is_zero() {
                d -= &cost[self.basis[i]] * a;
            }
        }
        d
    }

    /// Runs Bland's rule over columns `< allowed`. Returns false if unbounded.
    fn optimise(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j).is_negative());
            let Some(col) = entering else { return true };
            let mut best: Option<(Rational, usize, usize)> = None;
            for i in 0..self.m {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((r, _, b)) => ratio < *r || (ratio == *r && self.basis[i] < *b),
                };
                if better {
                    best = Some((ratio, i, self.basis[i]));
                }
            }
            match best {
                Some((_, r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

/// Minimizes `c.x` subject to `A x = b`, `x >= 0`.
pub fn solve_standard(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> StandardSolution {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut flipped = vec![false; m];
    for i in 0..m {
        let neg = b[i].is_negative();
        flipped[i] = neg;
        let mut row: Vec<Rational> = a[i].iter().map(|v| if neg { -v } else { v.clone() }).collect();
        row.resize(n, Rational::zero());
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        rows.push(row);
        rhs.push(if neg { -&b[i] } else { b[i].clone() });
    }
    // artificial column k is n + k
    let mut tab = Tableau {
        m,
        rows,
        rhs,
        basis: (n..n + m).collect(),
        pivots: 0,
    };

    // Phase 1: minimize the sum of artificials.
    let mut phase1 = vec![Rational::zero(); n + m];
    for v in phase1.iter_mut().skip(n) {
        *v = Rational::one();
    }
    tab.optimise(&phase1, n + m);
    let infeasibility: Rational = (0..m)
        .filter(|&i| tab.basis[i] >= n)
        .map(|i| tab.rhs[i].clone())
        .sum();
    if infeasibility.is_positive() {
        return StandardSolution {
            status: Status::Infeasible,
            objective: Rational::zero(),
            x: vec![Rational::zero(); n],
            y: vec![Rational::zero(); m],
            basis: tab.basis,
            redundant_rows: Vec::new(),
            pivots: tab.pivots,
        };
    }
    // Drive zero-level artificials out; rows where that is impossible are
    // redundant and keep their artificial basic at zero forever.
    let mut redundant_rows = Vec::new();
    for i in 0..m {
        if tab.basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
            Some(j) => tab.pivot(i, j),
            None => redundant_rows.push(i),
        }
    }

    // Phase 2 on the original columns only.
    let mut cost: Vec<Rational> = c.to_vec();
    cost.resize(n + m, Rational::zero());
    let bounded = tab.optimise(&cost, n);
    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if tab.basis[i] < n {
            x[tab.basis[i]] = tab.rhs[i].clone();
        }
    }
    let objective = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    // y = c_B B^{-1}; B^{-1} sits in the artificial block.
    let mut y = vec![Rational::zero(); m];
    for (k, yk) in y.iter_mut().enumerate() {
        let mut acc = Rational::zero();
        for i in 0..m {
            let v = &tab.rows[i][n + k];
            if !v.is_zero() {
                acc += &cost[tab.basis[i]] * v;
            }
        }
        *yk = if flipped[k] { -acc } else { acc };
    }
    StandardSolution {
        status: if bounded { Status::Optimal } else { Status::Unbounded },
        objective,
        x,
        y,
        basis: tab.basis,
        redundant_rows,
        pivots: tab.pivots,
    }
}
