//! Closed-form minimal exponents of cones over complete intersections.
//!
//! For a weight sum `w` and sorted degrees `d_1 <= ... <= d_r` put
//!
//! ```text
//! alpha_i = i + (w - d_1 - ... - d_i) / d_i
//! ```
//!
//! The minimum over `i` is attained at the pivot `p`, the first index whose
//! partial degree sum exceeds `w` (or `r` if there is none). With `w = n` this
//! minimum is the minimal exponent of the cone; with `w = w_1 + ... + w_n` it
//! bounds the local minimal exponent of a weighted complete intersection from
//! above.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::WeightVector;
use crate::scalar::Scalar;

/// Ambient dimension `n` and the sorted degrees `2 <= d_1 <= ... <= d_r`,
/// `1 <= r <= n`, of a homogeneous complete intersection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    n: usize,
    degrees: Vec<u32>,
}

impl DegreeProfile {
    /// Degrees may be given in any order; they are stored sorted.
    pub fn new(n: usize, mut degrees: Vec<u32>) -> Result<Self> {
        degrees.sort_unstable();
        let r = degrees.len();
        if r == 0 || r > n {
            return Err(Error::Codimension { n, r });
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(Error::DegreeBelowTwo(d));
        }
        Ok(DegreeProfile { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn degrees_as<S: Scalar>(&self) -> Vec<S> {
        self.degrees.iter().map(|&d| S::from_int(i64::from(d))).collect()
    }

    /// Every profile with `n <= max_n`, `r <= max_r` and `2 <= d_i <= max_d`.
    pub fn enumerate(max_n: usize, max_r: usize, max_d: u32) -> Vec<DegreeProfile> {
        fn rec(start: u32, max_d: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if left == 0 {
                return;
            }
            for d in start..=max_d {
                cur.push(d);
                rec(d, max_d, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut lists = Vec::new();
        rec(2, max_d, max_r, &mut Vec::new(), &mut lists);
        let mut out = Vec::new();
        for n in 1..=max_n {
            for degrees in &lists {
                if degrees.len() <= n {
                    out.push(DegreeProfile {
                        n,
                        degrees: degrees.clone(),
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "n={}, degrees=[{}]", self.n, degrees.join(","))
    }
}

/// An exponent that may be infinite: the minimal exponent of a smooth
/// subscheme is `+inf`, ordered above every rational. Arithmetic on the
/// infinite value is deliberately not provided.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent<S> {
    Finite(S),
    Infinite,
}

impl<S: Scalar> Exponent<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            Exponent::Finite(v) => Some(v),
            Exponent::Infinite => None,
        }
    }

    /// Adds an integer shift; infinity absorbs it.
    pub fn shifted(self, shift: usize) -> Self {
        match self {
            Exponent::Finite(v) => Exponent::Finite(v + S::from_usize(shift)),
            Exponent::Infinite => Exponent::Infinite,
        }
    }
}

impl<S: Scalar> fmt::Display for Exponent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(v) => write!(f, "{v}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

/// The values `alpha_1, ..., alpha_r` for one weight sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable<S> {
    pub alphas: Vec<S>,
    /// 1-based pivot `p`.
    pub pivot: usize,
    pub minimum: S,
}

impl<S: Scalar> AlphaTable<S> {
    pub fn alpha(&self, i: usize) -> &S {
        &self.alphas[i - 1]
    }
}

/// Computes the alpha table for weight sum `w` and sorted positive degrees.
pub fn alpha_sequence<S: Scalar>(w: &S, degrees: &[S]) -> Result<AlphaTable<S>> {
    if degrees.is_empty() {
        return Err(Error::Empty("degree list"));
    }
    if degrees.iter().any(|d| !d.is_positive()) || degrees.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::UnsortedDegrees);
    }
    let r = degrees.len();
    let mut alphas = Vec::with_capacity(r);
    let mut partial = S::zero();
    let mut pivot = None;
    for (i, d) in degrees.iter().enumerate() {
        partial = partial + d.clone();
        if pivot.is_none() && partial > *w {
            pivot = Some(i + 1);
        }
        let alpha = S::from_usize(i + 1) + (w.clone() - partial.clone()) / d.clone();
        alphas.push(alpha);
    }
    let pivot = pivot.unwrap_or(r);
    let minimum = alphas[pivot - 1].clone();
    debug_assert!(alphas.iter().all(|a| *a >= minimum));
    Ok(AlphaTable {
        alphas,
        pivot,
        minimum,
    })
}

/// Minimal exponent of the cone with the given degrees.
pub fn minimal_exponent_cone<S: Scalar>(profile: &DegreeProfile) -> S {
    alpha_table(profile).minimum
}

pub fn alpha_table<S: Scalar>(profile: &DegreeProfile) -> AlphaTable<S> {
    alpha_sequence(&S::from_usize(profile.n), &profile.degrees_as())
        .expect("profile degrees are sorted and positive")
}

/// `lct = min(alpha, r)`.
pub fn lct_cone<S: Scalar>(profile: &DegreeProfile) -> S {
    minimal_exponent_cone::<S>(profile).min_of(S::from_usize(profile.r()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub rational_singularities: bool,
    pub log_canonical: bool,
    pub exceeds_lct: bool,
}

/// Rationality, log canonicity of `(A^n, rZ)`, and `alpha > lct`.
///
/// The flags are read off the exponent (`alpha > r`, `alpha >= r`) and checked
/// against the degree criteria `sum d_i < n` and `sum d_i <= n`.
pub fn predicates<S: Scalar>(profile: &DegreeProfile) -> Predicates {
    let alpha: S = minimal_exponent_cone(profile);
    let r = S::from_usize(profile.r());
    let from_alpha = Predicates {
        rational_singularities: alpha > r,
        log_canonical: alpha >= r,
        exceeds_lct: alpha > r,
    };
    let sum = profile.degree_sum();
    let n = profile.n as u64;
    assert_eq!(from_alpha.rational_singularities, sum < n, "rationality criterion on {profile}");
    assert_eq!(from_alpha.log_canonical, sum <= n, "log canonical criterion on {profile}");
    from_alpha
}

/// Weights `w_1, ..., w_n` and the sorted weighted orders of the equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedProfile<S> {
    weights: WeightVector<S>,
    orders: Vec<S>,
}

impl<S: Scalar> WeightedProfile<S> {
    /// Orders may be given in any order; they are stored sorted.
    pub fn new(weights: WeightVector<S>, mut orders: Vec<S>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Empty("weighted orders"));
        }
        if orders.iter().any(|d| !d.is_positive()) {
            return Err(Error::UnsortedDegrees);
        }
        orders.sort();
        Ok(WeightedProfile { weights, orders })
    }

    pub fn weights(&self) -> &WeightVector<S> {
        &self.weights
    }

    pub fn orders(&self) -> &[S] {
        &self.orders
    }
}

/// A value that is only known to be an upper bound, or that is only valid
/// under hypotheses the caller attests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qualified<S> {
    pub value: S,
    pub qualifier: Qualifier,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Qualifier {
    UpperBound,
    /// Exact, provided the attested hypotheses hold.
    Conditional,
}

/// Upper bound `min_i alpha_i` with `w = w_1 + ... + w_n` for the local
/// minimal exponent at the origin. Never reported as the exponent itself.
pub fn weighted_upper_bound<S: Scalar>(profile: &WeightedProfile<S>) -> Qualified<S> {
    let table = alpha_sequence(&profile.weights.total(), &profile.orders)
        .expect("orders are sorted and positive");
    Qualified {
        value: table.minimum,
        qualifier: Qualifier::UpperBound,
    }
}

/// Result of removing degree-one equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Exponents of `profile` must be shifted up by `shift`.
    Reduced { profile: DegreeProfile, shift: usize },
    /// All equations are linear: the subscheme is smooth.
    Smooth { shift: usize },
}

impl Normalized {
    pub fn minimal_exponent<S: Scalar>(&self) -> Exponent<S> {
        match self {
            Normalized::Reduced { profile, shift } => {
                Exponent::Finite(minimal_exponent_cone::<S>(profile)).shifted(*shift)
            }
            Normalized::Smooth { .. } => Exponent::Infinite,
        }
    }
}

/// Removes the `q` degree-one equations, leaving a profile in dimension
/// `n - q`; the exponent of the original cone is the reduced one plus `q`.
pub fn normalize_degree_one(n: usize, degrees: &[u32]) -> Result<Normalized> {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        return Err(Error::Codimension { n, r: 0 });
    }
    if sorted[0] == 0 {
        return Err(Error::UnsortedDegrees);
    }
    let q = sorted.iter().take_while(|&&d| d == 1).count();
    let rest: Vec<u32> = sorted[q..].to_vec();
    if rest.is_empty() {
        if q > n {
            return Err(Error::Codimension { n, r: q });
        }
        return Ok(Normalized::Smooth { shift: q });
    }
    match q.cmp(&n) {
        Ordering::Less => Ok(Normalized::Reduced {
            profile: DegreeProfile::new(n - q, rest)?,
            shift: q,
        }),
        _ => Err(Error::Codimension { n, r: sorted.len() }),
    }
}
