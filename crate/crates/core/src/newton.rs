//! Newton polyhedra and the diagonal value `c`.
//!
//! For a finite support `L` in `Z_{>=0}^n` the Newton polyhedron is
//! `P = conv(L) + R_{>=0}^n`, and `c = min { t : (t, ..., t) in P }`. The point
//! `(t, ..., t)` lies in `P` exactly when some convex combination of `L` is
//! componentwise at most `t`, so `c` is the optimum of
//!
//! ```text
//! minimize t  subject to  sum_u l_u = 1,  sum_u l_u u_i <= t,  l >= 0
//! ```
//!
//! solved here by an exact simplex. Every answer carries a primal certificate
//! (the convex weights) and a dual certificate (coordinate weights `m` with
//! `min_u m.u = c`) that can be re-checked without trusting the solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{Qualified, Qualifier};
use crate::poly::{Poly, WeightVector};
use crate::scalar::Scalar;
use crate::simplex::{solve, LpOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSupport {
    n: usize,
    points: Vec<Vec<u32>>,
}

impl MonomialSupport {
    /// Duplicate points are merged; order of first appearance is kept.
    pub fn new(points: Vec<Vec<u32>>) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty("monomial support"))?;
        let n = first.len();
        if n == 0 {
            return Err(Error::Empty("exponent vectors"));
        }
        let mut unique: Vec<Vec<u32>> = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: p.len() });
            }
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        Ok(MonomialSupport { n, points: unique })
    }

    pub fn from_poly<S: Scalar>(f: &Poly<S>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Self::new(f.support())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn contains_origin(&self) -> bool {
        self.points.iter().any(|p| p.iter().all(|&e| e == 0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalResult<S> {
    pub c: S,
    /// Convex weights, one per support point, with `sum l_u u <= (c, ..., c)`.
    pub weights: Vec<S>,
    /// Nonnegative coordinate weights summing to at most one, with
    /// `m.u >= c` for every support point `u`.
    pub dual: Vec<S>,
}

impl<S: Scalar> DiagonalResult<S> {
    /// Re-checks both certificates exactly against `support`.
    pub fn verify(&self, support: &MonomialSupport) -> bool {
        let n = support.dim();
        let pts = support.points();
        if self.weights.len() != pts.len() || self.dual.len() != n {
            return false;
        }
        let weight_sum = self.weights.iter().fold(S::zero(), |a, l| a + l.clone());
        if self.weights.iter().any(S::is_negative) || !weight_sum.is_one() {
            return false;
        }
        let combo: Vec<S> = (0..n)
            .map(|i| {
                pts.iter().zip(&self.weights).fold(S::zero(), |acc, (u, l)| {
                    acc + l.clone() * S::from_int(i64::from(u[i]))
                })
            })
            .collect();
        if combo.iter().any(|v| *v > self.c) || !combo.iter().any(|v| *v == self.c) {
            return false;
        }
        let dual_sum = self.dual.iter().fold(S::zero(), |a, m| a + m.clone());
        if self.dual.iter().any(S::is_negative) || dual_sum > S::one() {
            return false;
        }
        pts.iter().all(|u| {
            let value = u
                .iter()
                .zip(&self.dual)
                .fold(S::zero(), |acc, (&e, m)| acc + m.clone() * S::from_int(i64::from(e)));
            value >= self.c
        })
    }
}

/// Exact `c = min { t : (t, ..., t) in P }` with certificates.
pub fn diagonal_entry<S: Scalar>(support: &MonomialSupport) -> DiagonalResult<S> {
    let n = support.dim();
    let pts = support.points();
    let m = pts.len();
    // columns: l_1..l_m, t, s_1..s_n
    let ncols = m + 1 + n;
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![S::zero(); ncols];
        for (j, u) in pts.iter().enumerate() {
            row[j] = S::from_int(i64::from(u[i]));
        }
        row[m] = -S::one();
        row[m + 1 + i] = S::one();
        a.push(row);
    }
    let mut total = vec![S::zero(); ncols];
    for v in total.iter_mut().take(m) {
        *v = S::one();
    }
    a.push(total);
    let mut b = vec![S::zero(); n];
    b.push(S::one());
    let mut cost = vec![S::zero(); ncols];
    cost[m] = S::one();

    let LpOutcome::Optimal(sol) = solve(&a, &b, &cost) else {
        unreachable!("the diagonal LP is feasible and bounded below by 0")
    };
    DiagonalResult {
        c: sol.objective,
        weights: sol.x[..m].to_vec(),
        dual: sol.duals[..n].iter().map(|y| -y.clone()).collect(),
    }
}

/// `1/c`, the minimal exponent at the origin of an isolated singularity that
/// is nondegenerate with respect to its Newton polyhedron. Neither hypothesis
/// is checked.
pub fn newton_exponent<S: Scalar>(support: &MonomialSupport) -> Result<(Qualified<S>, DiagonalResult<S>)> {
    if support.contains_origin() {
        return Err(Error::NotInMaximalIdeal("the support contains the origin"));
    }
    let diag = diagonal_entry::<S>(support);
    let value = S::one() / diag.c.clone();
    Ok((
        Qualified {
            value,
            qualifier: Qualifier::Conditional,
        },
        diag,
    ))
}

/// `(w_1 + ... + w_n) / wt(f)`, an upper bound for the minimal exponent of
/// `f` at the origin when the origin is a singular point of `f = 0`.
pub fn weighted_order_bound<S: Scalar>(f: &Poly<S>, w: &WeightVector<S>) -> Result<Qualified<S>> {
    let order = f.weighted_order(w)?;
    match f.order() {
        Some(0) => return Err(Error::NotInMaximalIdeal("the polynomial is a unit at the origin")),
        Some(1) => return Err(Error::SmoothPoint),
        _ => {}
    }
    Ok(Qualified {
        value: w.total() / order,
        qualifier: Qualifier::UpperBound,
    })
}
