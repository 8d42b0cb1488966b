//! Reference implementations used only by tests. They share no code with the
//! library: plain `BigRational` arithmetic, brute force where possible.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// All `i + (w - d_1 - ... - d_i)/d_i` and their minimum, by direct scan.
pub fn alpha_min(w: &BigRational, degrees: &[BigRational]) -> (Vec<BigRational>, BigRational) {
    let mut partial = BigRational::zero();
    let mut alphas = Vec::new();
    for (i, d) in degrees.iter().enumerate() {
        partial += d;
        alphas.push(int(i as i64 + 1) + (w - &partial) / d);
    }
    let min = alphas.iter().min().unwrap().clone();
    (alphas, min)
}

/// Minimum of `(n + sum_j max(e - d_j, 0)) / e` over integers
/// `d_1 <= e <= d_r`, the ratio of the divisor created at order `e`.
pub fn ledger_minimum(n: u64, degrees: &[u32]) -> BigRational {
    let lo = *degrees.iter().min().unwrap();
    let hi = *degrees.iter().max().unwrap();
    (lo..=hi)
        .map(|e| {
            let extra: u64 = degrees.iter().map(|&d| u64::from(e.saturating_sub(d))).sum();
            q((n + extra) as i64, i64::from(e))
        })
        .min()
        .unwrap()
}

/// Solves the square system `m x = rhs`; `None` when singular.
fn solve_square(mut m: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let size = m.len();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for j in col..size {
            m[col][j] = &m[col][j] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..size {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..size {
                    let sub = &f * &m[col][j];
                    m[r][j] -= sub;
                }
                let sub = &f * &rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    Some(rhs)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `min { t : (t,...,t) in conv(points) + R_{>=0}^n }` by enumerating every
/// basis of the standard-form system
///
/// ```text
/// sum_u l_u u_i - t + s_i = 0   (i = 1..n)
/// sum_u l_u               = 1
/// ```
///
/// and keeping the best basic solution with `l, s >= 0`.
pub fn diagonal_by_vertices(points: &[Vec<u32>]) -> BigRational {
    let n = points[0].len();
    let m = points.len();
    let ncols = m + 1 + n;
    let column = |c: usize| -> Vec<BigRational> {
        let mut col = vec![BigRational::zero(); n + 1];
        if c < m {
            for i in 0..n {
                col[i] = int(i64::from(points[c][i]));
            }
            col[n] = BigRational::one();
        } else if c == m {
            for v in col.iter_mut().take(n) {
                *v = int(-1);
            }
        } else {
            col[c - m - 1] = BigRational::one();
        }
        col
    };
    let mut rhs = vec![BigRational::zero(); n];
    rhs.push(BigRational::one());

    let mut best: Option<BigRational> = None;
    for basis in combinations(ncols, n + 1) {
        let cols: Vec<Vec<BigRational>> = basis.iter().map(|&c| column(c)).collect();
        let matrix: Vec<Vec<BigRational>> = (0..=n).map(|row| cols.iter().map(|c| c[row].clone()).collect()).collect();
        let Some(x) = solve_square(matrix, rhs.clone()) else {
            continue;
        };
        let mut t = BigRational::zero();
        let mut feasible = true;
        for (&c, v) in basis.iter().zip(&x) {
            if c == m {
                t = v.clone();
            } else if v.is_negative() {
                feasible = false;
            }
        }
        if feasible && best.as_ref().map_or(true, |b| t < *b) {
            best = Some(t);
        }
    }
    best.expect("the system always has a feasible basis")
}
