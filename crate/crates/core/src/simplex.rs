//! Dense two-phase tableau simplex over an exact field, Bland's rule.
//!
//! Solves `min c.x` subject to `A x = b`, `x >= 0`, with `b >= 0`. Problem
//! sizes here are a handful of rows, so no attempt is made at sparsity.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome<S> {
    Optimal(LpSolution<S>),
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LpSolution<S> {
    pub x: Vec<S>,
    pub objective: S,
    /// Dual values `y` with `y^T A <= c` and `y.b = objective`.
    pub duals: Vec<S>,
}

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.rhs[row] = self.rhs[row].clone() / p;
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for j in 0..self.rows[i].len() {
                let delta = f.clone() * self.rows[row][j].clone();
                self.rows[i][j] = self.rows[i][j].clone() - delta;
            }
            self.rhs[i] = self.rhs[i].clone() - f * self.rhs[row].clone();
        }
        self.basis[row] = col;
    }

    fn reduced_costs(&self, cost: &[S]) -> Vec<S> {
        (0..cost.len())
            .map(|j| {
                self.basis
                    .iter()
                    .zip(&self.rows)
                    .fold(cost[j].clone(), |acc, (&b, row)| acc - cost[b].clone() * row[j].clone())
            })
            .collect()
    }

    /// Runs Bland's rule over columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[S], allowed: usize) -> bool {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, enter),
                None => return false,
            }
        }
    }
}

pub(crate) fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], c: &[S]) -> LpOutcome<S> {
    let m = a.len();
    let nvars = c.len();
    debug_assert!(b.iter().all(|v| !v.is_negative()));
    let width = nvars + m;
    let rows: Vec<Vec<S>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|k| if k == i { S::one() } else { S::zero() }));
            r
        })
        .collect();
    let mut t = Tableau {
        rows,
        rhs: b.to_vec(),
        basis: (nvars..width).collect(),
    };

    let phase1: Vec<S> = (0..width)
        .map(|j| if j < nvars { S::zero() } else { S::one() })
        .collect();
    t.optimize(&phase1, width);
    let infeasibility = t
        .basis
        .iter()
        .zip(&t.rhs)
        .filter(|(&bv, _)| bv >= nvars)
        .fold(S::zero(), |acc, (_, v)| acc + v.clone());
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // drive zero-level artificials out where a structural column allows it
    for row in 0..m {
        if t.basis[row] >= nvars {
            if let Some(col) = (0..nvars).find(|&j| !t.rows[row][j].is_zero()) {
                t.pivot(row, col);
            }
        }
    }

    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| S::zero()));
    if !t.optimize(&cost, nvars) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![S::zero(); nvars];
    for (row, &bv) in t.basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = t.rhs[row].clone();
        }
    }
    let objective = x
        .iter()
        .zip(c)
        .fold(S::zero(), |acc, (xi, ci)| acc + xi.clone() * ci.clone());
    let reduced = t.reduced_costs(&cost);
    let duals = (0..m).map(|i| -reduced[nvars + i].clone()).collect();
    LpOutcome::Optimal(LpSolution { x, objective, duals })
}
