//! Sparse multivariate polynomials with exact coefficients.
//!
//! Besides parsing and printing this module knows how to build the two
//! auxiliary hypersurfaces attached to a complete intersection `f_1, ..., f_r`:
//! the cone hypersurface `g = f_1 y_1 + ... + f_r y_r` and its dehomogenization
//! `h = g / y_p`. A heuristic finite-field probe screens the smooth/transversal
//! hypothesis the closed-form formula depends on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};
use crate::scalar::{residue_mod, Scalar};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Positive weights `deg(x_i) = w_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector<S>(Vec<S>);

impl<S: Scalar> WeightVector<S> {
    pub fn new(weights: Vec<S>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn standard(nvars: usize) -> Self {
        WeightVector(vec![S::one(); nvars])
    }

    pub fn from_ints(weights: &[i64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| S::from_int(w)).collect())
    }

    pub fn weights(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> S {
        self.0.iter().fold(S::zero(), |acc, w| acc + w.clone())
    }

    /// Weighted degree `sum u_i w_i` of an exponent vector.
    pub fn degree_of(&self, exps: &[u32]) -> S {
        exps.iter()
            .zip(&self.0)
            .fold(S::zero(), |acc, (&e, w)| acc + S::from_int(i64::from(e)) * w.clone())
    }

    /// Extend by the weights of extra variables appended at the end.
    pub fn extended(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut weights = self.0.clone();
        weights.extend(extra);
        Self::new(weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<S> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, S>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_vars(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        if !is_identifier(v) || vars[..i].contains(v) {
            return Err(Error::BadVariableName(v.clone()));
        }
    }
    Ok(())
}

impl<S: Scalar> Poly<S> {
    pub fn zero(vars: Vec<String>) -> Result<Self> {
        check_vars(&vars)?;
        Ok(Poly {
            vars,
            terms: BTreeMap::new(),
        })
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// like monomials and dropping zeros.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, S)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(Error::LengthMismatch {
                    expected: p.vars.len(),
                    got: exps.len(),
                });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn variable(vars: Vec<String>, index: usize) -> Result<Self> {
        let n = vars.len();
        if index >= n {
            return Err(Error::IndexOutOfRange { index: index + 1, len: n });
        }
        let mut e = vec![0; n];
        e[index] = 1;
        Self::from_terms(vars, [(e, S::one())])
    }

    pub fn parse(text: &str, vars: &[&str]) -> Result<Self> {
        parse_poly(text, vars)
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Option<&S> {
        self.terms.get(&Monomial(exps.to_vec()))
    }

    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().map(|m| m.0.clone()).collect()
    }

    /// Smallest total degree of a term.
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(format!(
                "[{}] vs [{}]",
                self.vars.join(","),
                other.vars.join(",")
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.vars.clone())?;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Re-embeds into a larger variable list; every current variable must
    /// appear in `vars`.
    pub fn embed(&self, vars: &[String]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::VariableMismatch(format!("`{v}` missing from target")))
            })
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] = k;
            }
            (e, c.clone())
        });
        Self::from_terms(vars.to_vec(), terms)
    }

    pub fn derivative(&self, index: usize) -> Self {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index] -= 1;
            out.add_term(Monomial(exps), c.clone() * S::from_int(i64::from(e)));
        }
        out
    }

    fn check_weights(&self, w: &WeightVector<S>) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if w.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// `wt(f)`: the smallest weighted degree of a monomial of `f`.
    pub fn weighted_order(&self, w: &WeightVector<S>) -> Result<S> {
        self.check_weights(w)?;
        Ok(self
            .terms
            .keys()
            .map(|m| w.degree_of(&m.0))
            .min()
            .expect("nonzero polynomial has a term"))
    }

    /// The common weighted degree when `f` is weighted homogeneous.
    pub fn homogeneous_degree(&self, w: &WeightVector<S>) -> Result<Option<S>> {
        self.check_weights(w)?;
        let mut degrees = self.terms.keys().map(|m| w.degree_of(&m.0));
        let first = degrees.next().expect("nonzero polynomial has a term");
        Ok(degrees.all(|d| d == first).then_some(first))
    }

    pub fn is_homogeneous(&self, w: &WeightVector<S>) -> Result<bool> {
        Ok(self.homogeneous_degree(w)?.is_some())
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: Self) -> Poly<S> {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: Self) -> Poly<S> {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.syntax("expected an integer"));
        }
        Ok(digits)
    }

    fn coefficient<S: Scalar>(&mut self) -> Result<S> {
        let start = self.pos;
        let num = self.integer()?;
        let num: S = num
            .parse()
            .map_err(|_| self.syntax("coefficient out of range"))?;
        if self.peek() == Some('/') {
            self.bump();
            let den_pos = {
                self.skip_ws();
                self.pos
            };
            let den: S = self
                .integer()?
                .parse()
                .map_err(|_| self.syntax("coefficient out of range"))?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator { pos: den_pos.max(start) });
            }
            return Ok(num / den);
        }
        Ok(num)
    }

    fn factor(&mut self, vars: &[&str], exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || !is_identifier(name) {
            self.pos = start;
            return Err(self.syntax("expected a variable"));
        }
        let index = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                pos: start,
            })?;
        let mut power = 1u32;
        if self.peek() == Some('^') {
            self.bump();
            let digits = self.integer()?;
            power = digits
                .parse()
                .map_err(|_| self.syntax("exponent out of range"))?;
            if power == 0 {
                return Err(self.syntax("exponent must be positive"));
            }
        }
        exps[index] = exps[index]
            .checked_add(power)
            .ok_or_else(|| self.syntax("exponent out of range"))?;
        Ok(())
    }

    fn term<S: Scalar>(&mut self, vars: &[&str]) -> Result<(Vec<u32>, S)> {
        let mut exps = vec![0; vars.len()];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coefficient()?;
                if self.peek() != Some('*') {
                    return Ok((exps, c));
                }
                self.bump();
                c
            }
            _ => S::one(),
        };
        self.factor(vars, &mut exps)?;
        while self.peek() == Some('*') {
            self.bump();
            self.factor(vars, &mut exps)?;
        }
        Ok((exps, coeff))
    }
}

/// Parses `text` over the declared variables.
///
/// Terms are separated by `+`/`-`; a term is an optional coefficient `a` or
/// `a/b` joined by `*` to factors `var` or `var^k`. Whitespace is ignored.
pub fn parse_poly<S: Scalar>(text: &str, vars: &[&str]) -> Result<Poly<S>> {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let mut poly = Poly::zero(names)?;
    let mut p = Parser { src: text, pos: 0 };
    let mut first = true;
    loop {
        let negative = match p.peek() {
            None if first => return Err(p.syntax("empty polynomial")),
            None => break,
            Some('+') => {
                p.bump();
                false
            }
            Some('-') => {
                p.bump();
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(p.syntax(format!("unexpected `{c}`"))),
        };
        first = false;
        let (exps, c) = p.term::<S>(vars)?;
        poly.add_term(Monomial(exps), if negative { -c } else { c });
    }
    Ok(poly)
}

fn shared_vars<S: Scalar>(fs: &[Poly<S>]) -> Result<&[String]> {
    let first = fs.first().ok_or(Error::Empty("no equations"))?;
    for f in &fs[1..] {
        first.same_vars(f)?;
    }
    Ok(first.vars())
}

fn fresh_vars(base: &[String], prefix: &str, indices: impl Iterator<Item = usize>) -> Result<Vec<String>> {
    let mut vars = base.to_vec();
    for j in indices {
        let name = format!("{prefix}{j}");
        if vars.contains(&name) {
            return Err(Error::BadVariableName(name));
        }
        vars.push(name);
    }
    Ok(vars)
}

/// `g = f_1 y_1 + ... + f_r y_r` in the variables `x, y_1, ..., y_r`.
pub fn cone_hypersurface<S: Scalar>(fs: &[Poly<S>]) -> Result<Poly<S>> {
    let base = shared_vars(fs)?;
    let n = base.len();
    let vars = fresh_vars(base, "y", 1..=fs.len())?;
    let terms = fs.iter().enumerate().flat_map(|(j, f)| {
        f.terms().map(move |(m, c)| {
            let mut e = m.0.clone();
            e.resize(n + fs.len(), 0);
            e[n + j] = 1;
            (e, c.clone())
        })
    });
    Poly::from_terms(vars, terms)
}

/// `h = f_p + sum_{j != p} f_j z_j`, the chart `y_p != 0` of the cone
/// hypersurface with `z_j = y_j / y_p`. `p` is 1-based.
pub fn dehomogenized_hypersurface<S: Scalar>(fs: &[Poly<S>], p: usize) -> Result<Poly<S>> {
    let base = shared_vars(fs)?;
    let r = fs.len();
    if p == 0 || p > r {
        return Err(Error::IndexOutOfRange { index: p, len: r });
    }
    let n = base.len();
    let others: Vec<usize> = (1..=r).filter(|&j| j != p).collect();
    let vars = fresh_vars(base, "z", others.iter().copied())?;
    let mut terms = Vec::new();
    for (j, f) in fs.iter().enumerate() {
        let slot = others.iter().position(|&o| o == j + 1);
        for (m, c) in f.terms() {
            let mut e = m.0.clone();
            e.resize(n + others.len(), 0);
            if let Some(s) = slot {
                e[n + s] = 1;
            }
            terms.push((e, c.clone()));
        }
    }
    Poly::from_terms(vars, terms)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProbeReport {
    /// No failure among the scanned points. Evidence, not proof.
    Pass { field_size: u64, points_checked: u64 },
    /// At `witness` the hypersurfaces listed (1-based) vanish but their
    /// gradients mod `q` are linearly dependent.
    Fail {
        field_size: u64,
        witness: Vec<u64>,
        vanishing: Vec<usize>,
    },
    Inconclusive {
        field_size: u64,
        points_checked: u64,
        reason: String,
    },
}

impl ProbeReport {
    pub fn is_fail(&self) -> bool {
        matches!(self, ProbeReport::Fail { .. })
    }
}

pub const PROBE_MAX_VARS: usize = 5;
pub const PROBE_MAX_FIELD: u64 = 13;

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Coefficients reduced mod q; terms with coefficient divisible by q vanish.
struct ModPoly {
    terms: Vec<(Vec<u32>, u64)>,
}

impl ModPoly {
    fn reduce<S: Scalar>(f: &Poly<S>, q: u64) -> Option<Self> {
        let mut terms = Vec::new();
        for (m, c) in f.terms() {
            let r = residue_mod(c, q)?;
            if r != 0 {
                terms.push((m.0.clone(), r));
            }
        }
        Some(ModPoly { terms })
    }

    fn eval(&self, point: &[u64], q: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (e, c)| {
            let mono = e.iter().zip(point).fold(*c, |m, (&k, &x)| {
                (0..k).fold(m, |m, _| m * x % q)
            });
            (acc + mono) % q
        })
    }
}

fn rank_mod(mut rows: Vec<Vec<u64>>, q: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = crate::scalar::mod_inverse(rows[rank][col], q).expect("q is prime");
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let factor = rows[i][col] * inv % q;
                for j in 0..ncols {
                    let sub = factor * rows[rank][j] % q;
                    rows[i][j] = (rows[i][j] + q - sub) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Scans `F_q^n \ {0}` for points where the hypersurfaces through the point
/// fail to be smooth and transversal, i.e. where the gradients of the
/// vanishing equations are linearly dependent mod `q`.
///
/// At most `limit` points are examined; a larger space yields `Inconclusive`.
pub fn probe_transversality<S: Scalar>(fs: &[Poly<S>], q: u64, limit: u64) -> Result<ProbeReport> {
    let n = shared_vars(fs)?.len();
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n > PROBE_MAX_VARS || q > PROBE_MAX_FIELD {
        return Err(Error::ProbeLimits(format!(
            "need n <= {PROBE_MAX_VARS} and q <= {PROBE_MAX_FIELD}, got n = {n}, q = {q}"
        )));
    }
    let reduce = |f: &Poly<S>| ModPoly::reduce(f, q);
    let (Some(eqs), Some(grads)) = (
        fs.iter().map(reduce).collect::<Option<Vec<_>>>(),
        fs.iter()
            .map(|f| (0..n).map(|i| reduce(&f.derivative(i))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>(),
    ) else {
        return Ok(ProbeReport::Inconclusive {
            field_size: q,
            points_checked: 0,
            reason: format!("a coefficient denominator is divisible by {q}"),
        });
    };

    let total = q.pow(n as u32) - 1;
    let mut checked = 0;
    let mut point = vec![0u64; n];
    for _ in 0..total {
        if checked == limit {
            return Ok(ProbeReport::Inconclusive {
                field_size: q,
                points_checked: checked,
                reason: format!("point budget {limit} exhausted before covering {total} points"),
            });
        }
        // odometer increment; never revisits the origin
        for x in point.iter_mut() {
            *x += 1;
            if *x == q {
                *x = 0;
            } else {
                break;
            }
        }
        checked += 1;
        let vanishing: Vec<usize> = (0..fs.len()).filter(|&i| eqs[i].eval(&point, q) == 0).collect();
        if vanishing.is_empty() {
            continue;
        }
        let rows: Vec<Vec<u64>> = vanishing
            .iter()
            .map(|&i| grads[i].iter().map(|g| g.eval(&point, q)).collect())
            .collect();
        if rank_mod(rows, q) < vanishing.len() {
            return Ok(ProbeReport::Fail {
                field_size: q,
                witness: point,
                vanishing: vanishing.into_iter().map(|i| i + 1).collect(),
            });
        }
    }
    Ok(ProbeReport::Pass {
        field_size: q,
        points_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Rational64};

    type P = Poly<Rational>;

    fn p(text: &str, vars: &[&str]) -> P {
        Poly::parse(text, vars).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parse_reads_terms() {
        let f = p("x1^2 - x2^3", &["x1", "x2"]);
        assert_eq!(f.len(), 2);
        assert_eq!(f.coefficient(&[2, 0]), Some(&r(1, 1)));
        assert_eq!(f.coefficient(&[0, 3]), Some(&r(-1, 1)));
    }

    #[test]
    fn parse_combines_like_terms() {
        let f = p("x1*x1 + x1^2", &["x1"]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&[2]), Some(&r(2, 1)));
    }

    #[test]
    fn parse_rational_coefficient() {
        let f = p("3/2*x1^2*x2", &["x1", "x2"]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&[2, 1]), Some(&r(3, 2)));
    }

    #[test]
    fn parse_constants_and_cancellation() {
        assert!(p("x1 - x1", &["x1"]).is_zero());
        assert!(p("0", &["x1"]).is_zero());
        let f = p(" - 5 +  x1 ^ 2 ", &["x1"]);
        assert_eq!(f.coefficient(&[0]), Some(&r(-5, 1)));
    }

    #[test]
    fn parse_errors() {
        let vars = ["x1", "x2"];
        assert!(matches!(P::parse("x1 + y", &vars), Err(Error::UnknownVariable { pos: 5, .. })));
        assert!(matches!(P::parse("1/0*x1", &vars), Err(Error::ZeroDenominator { .. })));
        assert!(matches!(P::parse("x1 +", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("x1^0", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("x1 x2", &vars), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(P::parse("", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("x1*3", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(P::parse("x1", &["x1", "x1"]), Err(Error::BadVariableName(_))));
    }

    #[test]
    fn printing_is_ascending_grlex() {
        let f = p("x2^3*y2 + x1^2*y1", &["x1", "x2", "y1", "y2"]);
        assert_eq!(f.to_string(), "x1^2*y1 + x2^3*y2");
        let g = p("-1/2*x1 + 3 - x2^2", &["x1", "x2"]);
        assert_eq!(g.to_string(), "3 - 1/2*x1 - x2^2");
    }

    #[test]
    fn weighted_orders() {
        let f = p("x1^2 + x2^3", &["x1", "x2"]);
        let std = WeightVector::standard(2);
        assert_eq!(f.weighted_order(&std).unwrap(), r(2, 1));
        let w = WeightVector::from_ints(&[3, 2]).unwrap();
        assert_eq!(f.weighted_order(&w).unwrap(), r(6, 1));
        let g = p("x1^2*x2", &["x1", "x2"]);
        let half = WeightVector::new(vec![r(1, 2), r(1, 1)]).unwrap();
        assert_eq!(g.weighted_order(&half).unwrap(), r(2, 1));
        let zero = P::zero(vec!["x1".into(), "x2".into()]).unwrap();
        assert_eq!(zero.weighted_order(&std), Err(Error::ZeroPolynomial));
        assert!(WeightVector::<Rational>::from_ints(&[1, 0]).is_err());
    }

    #[test]
    fn homogeneity() {
        let std = WeightVector::standard(2);
        let f = p("x1^2 + x1*x2", &["x1", "x2"]);
        assert_eq!(f.homogeneous_degree(&std).unwrap(), Some(r(2, 1)));
        let g = p("x1^2 + x2^3", &["x1", "x2"]);
        assert_eq!(g.homogeneous_degree(&std).unwrap(), None);
        let w = WeightVector::from_ints(&[3, 2]).unwrap();
        assert_eq!(g.homogeneous_degree(&w).unwrap(), Some(r(6, 1)));
    }

    #[test]
    fn cone_hypersurfaces() {
        let x = ["x1", "x2"];
        let g = cone_hypersurface(&[p("x1", &["x1"])]).unwrap();
        assert_eq!(g.to_string(), "x1*y1");
        let g = cone_hypersurface(&[p("x1^2", &x), p("x2^3", &x)]).unwrap();
        assert_eq!(g.vars(), ["x1", "x2", "y1", "y2"]);
        assert_eq!(g.to_string(), "x1^2*y1 + x2^3*y2");
        let g = cone_hypersurface(&[p("x1+x2", &x), p("x1*x2", &x)]).unwrap();
        let xy = ["x1", "x2", "y1", "y2"];
        let expected = &(&p("x1+x2", &xy) * &p("y1", &xy)) + &p("x1*x2*y2", &xy);
        assert_eq!(g, expected);
        // three terms, not four: (x1 + x2)*y1 contributes two
        assert_eq!(g.len(), 3);
        assert_eq!(g.to_string(), "x2*y1 + x1*y1 + x1*x2*y2");
        assert!(cone_hypersurface(&[p("x1", &["x1"]), p("x1", &x)]).is_err());
        assert!(cone_hypersurface::<Rational>(&[]).is_err());
    }

    #[test]
    fn dehomogenizations() {
        let x = ["x1", "x2"];
        let h = dehomogenized_hypersurface(&[p("x1^2", &x)], 1).unwrap();
        assert_eq!(h.to_string(), "x1^2");
        let fs = [p("x1^2", &x), p("x2^3", &x)];
        let h = dehomogenized_hypersurface(&fs, 2).unwrap();
        assert_eq!(h.vars(), ["x1", "x2", "z1"]);
        assert_eq!(h.to_string(), "x2^3 + x1^2*z1");
        let h = dehomogenized_hypersurface(&fs, 1).unwrap();
        assert_eq!(h.vars(), ["x1", "x2", "z2"]);
        assert_eq!(h.to_string(), "x1^2 + x2^3*z2");
        assert_eq!(
            dehomogenized_hypersurface(&fs, 3),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        );
    }

    #[test]
    fn derivative_works() {
        let f = p("x1^3*x2 + 2*x2", &["x1", "x2"]);
        assert_eq!(f.derivative(0).to_string(), "3*x1^2*x2");
        assert_eq!(f.derivative(1).to_string(), "2 + x1^3");
    }

    #[test]
    fn probe_examples() {
        let f = p("x1", &["x1"]);
        assert!(matches!(probe_transversality(&[f], 3, 1000).unwrap(), ProbeReport::Pass { .. }));

        let f = p("x1^2", &["x1", "x2"]);
        match probe_transversality(&[f], 3, 1000).unwrap() {
            ProbeReport::Fail { witness, vanishing, .. } => {
                assert_eq!(witness[0], 0);
                assert!(witness.iter().any(|&c| c != 0));
                assert_eq!(vanishing, vec![1]);
            }
            other => panic!("expected FAIL, got {other:?}"),
        }

        let vars = ["x1", "x2", "x3"];
        let f = p("x1^2+x2^2+x3^2", &vars);
        assert_eq!(
            probe_transversality(&[f], 5, 1000).unwrap(),
            ProbeReport::Pass { field_size: 5, points_checked: 124 }
        );
    }

    #[test]
    fn probe_detects_tangency() {
        // x1 and x1 - x2^2 are tangent along x1 = x2 = 0
        let vars = ["x1", "x2", "x3"];
        let fs = [p("x1", &vars), p("x1*x3 - x2^2", &vars)];
        assert!(probe_transversality(&fs, 5, 1000).unwrap().is_fail());
    }

    #[test]
    fn probe_guards() {
        let f = p("x1", &["x1"]);
        assert_eq!(probe_transversality(&[f.clone()], 4, 10), Err(Error::NotPrime(4)));
        assert!(matches!(probe_transversality(&[f.clone()], 17, 10), Err(Error::ProbeLimits(_))));
        assert!(matches!(
            probe_transversality(&[f], 13, 5).unwrap(),
            ProbeReport::Inconclusive { points_checked: 5, .. }
        ));
        let g = p("1/3*x1", &["x1"]);
        assert!(matches!(probe_transversality(&[g], 3, 10).unwrap(), ProbeReport::Inconclusive { .. }));
    }

    #[test]
    fn word_sized_scalar() {
        let f: Poly<Rational64> = Poly::parse("3/4*x1^2 + x2", &["x1", "x2"]).unwrap();
        let w = WeightVector::from_ints(&[1, 3]).unwrap();
        assert_eq!(f.weighted_order(&w).unwrap(), Rational64::from_int(2));
    }
}
