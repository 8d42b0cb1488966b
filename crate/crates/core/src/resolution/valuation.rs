//! Brute-force checks of the valuative inequalities behind the lower bound.
//!
//! A divisor `G` over the blow-up of the origin is recorded by its orders
//! `b_0 = ord_G(x_i)` (the exceptional equation) and `b_j = ord_G(g_j)`. Its
//! log discrepancy is at least `n b_0 + sum b_j` and the ideal has order
//! `min_j (b_0 d_j + b_j)`, so the bound follows from
//!
//! * `sum d_j > n`: `n b_0 + sum b_j >= alpha_p * min_j (b_0 d_j + b_j)`;
//! * `sum d_j <= n`, with `b_r = 0` for divisors of the resolution:
//!   `(n b_0 + sum b_j) / min_j (b_0 d_j + b_j) >= alpha_r`.
//!
//! The first inequality is proved through the chain of ratios `beta`, which
//! [`beta_chain`] evaluates for given normalized orders `u_j = b_j / b_0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{alpha_table, DegreeProfile};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `sum d_j > n`: the inequality against `alpha_p`.
    Lct,
    /// `sum d_j <= n`: the ratio against `alpha_r`, with `b_r = 0`.
    Divisorial,
}

pub fn valuation_branch(profile: &DegreeProfile) -> Branch {
    if profile.degree_sum() > profile.n() as u64 {
        Branch::Lct
    } else {
        Branch::Divisorial
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleCheck<S> {
    /// `(b_0, b_1, ..., b_r)`.
    pub b: Vec<u64>,
    pub lhs: S,
    pub rhs: S,
    pub holds: bool,
}

fn ensure_branch(profile: &DegreeProfile, branch: Branch) -> Result<()> {
    let actual = valuation_branch(profile);
    if actual != branch {
        return Err(Error::BranchMismatch(format!(
            "{profile} has degree sum {} against n = {}, which selects {actual:?}, not {branch:?}",
            profile.degree_sum(),
            profile.n()
        )));
    }
    Ok(())
}

/// The inequality constant: `alpha_p` on the lct branch, `alpha_r` otherwise.
fn branch_alpha<S: Scalar>(profile: &DegreeProfile, branch: Branch) -> S {
    let table = alpha_table::<S>(profile);
    match branch {
        Branch::Lct => table.minimum,
        Branch::Divisorial => table.alpha(profile.r()).clone(),
    }
}

fn evaluate<S: Scalar>(profile: &DegreeProfile, branch: Branch, alpha: &S, b: &[u64]) -> TupleCheck<S> {
    let int = |v: u64| S::from_int(v as i64);
    let b0 = b[0];
    let total = int(profile.n() as u64 * b0 + b[1..].iter().sum::<u64>());
    let order = profile
        .degrees()
        .iter()
        .zip(&b[1..])
        .map(|(&d, &bj)| b0 * u64::from(d) + bj)
        .min()
        .expect("r >= 1");
    let (lhs, rhs) = match branch {
        Branch::Lct => (total, alpha.clone() * int(order)),
        Branch::Divisorial => (total / int(order), alpha.clone()),
    };
    let holds = lhs >= rhs;
    TupleCheck {
        b: b.to_vec(),
        lhs,
        rhs,
        holds,
    }
}

/// Evaluates one tuple `(b_0, ..., b_r)`, `b_0 >= 1`.
pub fn check_tuple<S: Scalar>(profile: &DegreeProfile, branch: Branch, b: &[u64]) -> Result<TupleCheck<S>> {
    ensure_branch(profile, branch)?;
    if b.len() != profile.r() + 1 {
        return Err(Error::LengthMismatch {
            expected: profile.r() + 1,
            got: b.len(),
        });
    }
    if b[0] == 0 {
        return Err(Error::BadCenter("b_0 must be positive".into()));
    }
    if branch == Branch::Divisorial && b[profile.r()] != 0 {
        return Err(Error::BranchMismatch("b_r must vanish on the divisorial branch".into()));
    }
    let alpha = branch_alpha::<S>(profile, branch);
    Ok(evaluate(profile, branch, &alpha, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationReport<S> {
    pub branch: Branch,
    pub bound: u64,
    /// The constant on the right-hand side.
    pub alpha: S,
    pub tuples_checked: u64,
    /// Lexicographically first violating tuple, if any.
    pub violation: Option<TupleCheck<S>>,
}

impl<S> ValuationReport<S> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks every tuple `1 <= b_0 <= bound`, `0 <= b_j <= bound` (with
/// `b_r = 0` on the divisorial branch). `branch` must match the profile.
pub fn verify_valuation_inequality<S: Scalar>(
    profile: &DegreeProfile,
    bound: u64,
    branch: Branch,
) -> Result<ValuationReport<S>> {
    ensure_branch(profile, branch)?;
    let r = profile.r();
    let free = match branch {
        Branch::Lct => r,
        Branch::Divisorial => r - 1,
    };
    let alpha = branch_alpha::<S>(profile, branch);
    let per_b0: Vec<(u64, Option<TupleCheck<S>>)> = (1..=bound)
        .into_par_iter()
        .map(|b0| {
            let mut b = vec![0u64; r + 1];
            b[0] = b0;
            let mut checked = 0u64;
            loop {
                checked += 1;
                let check = evaluate(profile, branch, &alpha, &b);
                if !check.holds {
                    return (checked, Some(check));
                }
                // odometer over b_1..b_free, last coordinate fastest
                let mut pos = free;
                loop {
                    if pos == 0 {
                        return (checked, None);
                    }
                    if b[pos] < bound {
                        b[pos] += 1;
                        break;
                    }
                    b[pos] = 0;
                    pos -= 1;
                }
            }
        })
        .collect();
    let tuples_checked = per_b0.iter().map(|(c, _)| c).sum();
    let violation = per_b0.into_iter().find_map(|(_, v)| v);
    Ok(ValuationReport {
        branch,
        bound,
        alpha,
        tuples_checked,
        violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaLink<S> {
    /// 1-based `k_q` and `k_{q+1}`.
    pub from: usize,
    pub to: usize,
    pub beta: S,
    pub alpha: S,
    pub next_beta: S,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaChainReport<S> {
    /// `k_1 < ... < k_s = r`, 1-based.
    pub chain: Vec<usize>,
    /// `beta_{k_q}` for each chain index.
    pub betas: Vec<S>,
    /// `(n + sum u_j) / min_j (d_j + u_j)` and whether it dominates `beta_{k_1}`.
    pub ratio: S,
    pub ratio_holds: bool,
    pub links: Vec<BetaLink<S>>,
    /// `min(alpha_r, r)`, the floor for `beta_{k_s}`.
    pub terminal_floor: S,
    pub terminal_holds: bool,
    /// `min(alpha_p, r)`, the floor that follows for `beta_{k_1}`.
    pub head_floor: S,
    pub head_holds: bool,
}

impl<S> BetaChainReport<S> {
    pub fn passed(&self) -> bool {
        self.ratio_holds && self.terminal_holds && self.head_holds && self.links.iter().all(|l| l.holds)
    }
}

/// Builds the index chain for `u` and checks each link
/// `beta_{k_q} >= min(alpha_{k_q}, beta_{k_{q+1}})`.
pub fn beta_chain<S: Scalar>(profile: &DegreeProfile, u: &[S]) -> Result<BetaChainReport<S>> {
    let r = profile.r();
    if u.len() != r {
        return Err(Error::LengthMismatch { expected: r, got: u.len() });
    }
    if u.iter().any(S::is_negative) {
        return Err(Error::NonPositiveWeight);
    }
    let n = S::from_usize(profile.n());
    let d: Vec<S> = profile.degrees_as();
    let level: Vec<S> = d.iter().zip(u).map(|(d, u)| d.clone() + u.clone()).collect();
    let table = alpha_table::<S>(profile);

    // k_1 = last index attaining min_j (d_j + u_j); then the same over j > k_l
    let mut chain = Vec::new();
    let mut start = 0;
    while start < r {
        let min = level[start..].iter().min().expect("nonempty").clone();
        let k = (start..r).rev().find(|&j| level[j] == min).expect("minimum attained");
        chain.push(k + 1);
        start = k + 1;
    }

    let beta = |k: usize| -> S {
        // k is 1-based
        let dk = d[k - 1].clone();
        let uk = u[k - 1].clone();
        let gap = d[..k].iter().fold(S::zero(), |acc, dj| acc + dk.clone() - dj.clone());
        let tail = u[k..].iter().fold(S::zero(), |acc, uj| acc + uj.clone());
        (n.clone() + S::from_usize(k) * uk.clone() + gap + tail) / (dk + uk)
    };
    let betas: Vec<S> = chain.iter().map(|&k| beta(k)).collect();

    let links = chain
        .windows(2)
        .zip(betas.windows(2))
        .map(|(ks, bs)| {
            let alpha = table.alpha(ks[0]).clone();
            let floor = alpha.clone().min_of(bs[1].clone());
            BetaLink {
                from: ks[0],
                to: ks[1],
                beta: bs[0].clone(),
                alpha,
                next_beta: bs[1].clone(),
                holds: bs[0] >= floor,
            }
        })
        .collect();

    let rr = S::from_usize(r);
    let sum_u = u.iter().fold(S::zero(), |acc, x| acc + x.clone());
    let ratio = (n + sum_u) / level.iter().min().expect("r >= 1").clone();
    let first = betas[0].clone();
    let last = betas.last().expect("chain ends at r").clone();
    let terminal_floor = table.alpha(r).clone().min_of(rr.clone());
    let head_floor = table.minimum.clone().min_of(rr);
    Ok(BetaChainReport {
        ratio_holds: ratio >= first,
        terminal_holds: last >= terminal_floor,
        head_holds: first >= head_floor,
        chain,
        betas,
        ratio,
        links,
        terminal_floor,
        head_floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Rational64};

    fn profile(n: usize, d: &[u32]) -> DegreeProfile {
        DegreeProfile::new(n, d.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn lct_branch_scan() {
        let p = profile(3, &[2, 3]);
        let rep = verify_valuation_inequality::<Rational>(&p, 6, Branch::Lct).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.alpha, r(4, 3));
        assert_eq!(rep.tuples_checked, 6 * 7 * 7);
    }

    #[test]
    fn single_tuple() {
        let p = profile(3, &[2, 3]);
        let c = check_tuple::<Rational>(&p, Branch::Lct, &[1, 0, 0]).unwrap();
        assert_eq!(c.lhs, r(3, 1));
        assert_eq!(c.rhs, r(8, 3));
        assert!(c.holds);
    }

    #[test]
    fn divisorial_branch_scan() {
        let p = profile(6, &[2, 3]);
        let rep = verify_valuation_inequality::<Rational>(&p, 6, Branch::Divisorial).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.alpha, r(7, 3));
        assert_eq!(rep.tuples_checked, 6 * 7);
    }

    #[test]
    fn branch_mismatch() {
        let p = profile(6, &[2, 3]);
        assert!(matches!(
            verify_valuation_inequality::<Rational>(&p, 3, Branch::Lct),
            Err(Error::BranchMismatch(_))
        ));
        assert!(check_tuple::<Rational>(&p, Branch::Divisorial, &[1, 0, 1]).is_err());
    }

    #[test]
    fn divisorial_branch_needs_b_r_zero() {
        // b = (1, 9, 9): (6 + 18) / min(11, 12) = 24/11 < 7/3
        let p = profile(6, &[2, 3]);
        let alpha = r(7, 3);
        let c = evaluate(&p, Branch::Divisorial, &alpha, &[1, 9, 9]);
        assert!(!c.holds);
    }

    #[test]
    fn beta_example() {
        let p = profile(3, &[2, 3]);
        let rep = beta_chain(&p, &[r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(rep.chain, vec![1, 2]);
        assert_eq!(rep.betas, vec![r(3, 2), r(4, 3)]);
        assert_eq!(rep.links[0].alpha, r(3, 2));
        assert!(rep.passed());
    }

    #[test]
    fn beta_collapses_on_ties() {
        let p = profile(7, &[3, 3, 3]);
        let u = Rational64::new(1, 2);
        let rep = beta_chain(&p, &[u, u, u]).unwrap();
        assert_eq!(rep.chain, vec![3]);
        let expected = (Rational64::from_int(7) + Rational64::from_int(3) * u) / (Rational64::from_int(3) + u);
        assert_eq!(rep.betas, vec![expected]);
        assert!(rep.passed());
    }

    #[test]
    fn beta_grid() {
        let p = profile(4, &[2, 3, 4]);
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    let u = [a, b, c].map(Rational64::from_int);
                    let rep = beta_chain(&p, &u).unwrap();
                    assert!(rep.passed(), "{u:?}: {rep:?}");
                }
            }
        }
    }

    #[test]
    fn beta_input_checks() {
        let p = profile(3, &[2, 3]);
        assert!(beta_chain(&p, &[r(0, 1)]).is_err());
        assert!(beta_chain(&p, &[r(-1, 1), r(0, 1)]).is_err());
    }
}
