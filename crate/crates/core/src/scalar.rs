//! Exact scalar types.
//!
//! Every computation in this crate is carried out over an exact ordered field.
//! [`Scalar`] captures what the algorithms need from such a field on top of the
//! `num-traits` arithmetic traits; it is implemented for `Ratio<T>` whenever the
//! integer type `T` is signed and embeds into `BigInt`. The crate root exposes
//! the two instantiations used in practice: [`Rational`](crate::Rational)
//! (arbitrary precision) and [`Rational64`](crate::Rational64) (machine words,
//! for fast desk-scale scans).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Serialize};

pub trait Scalar:
    Clone + Ord + Debug + Display + FromStr + Num + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// Exact conversion to an arbitrary-precision rational.
    fn to_big(&self) -> BigRational;

    fn is_integral(&self) -> bool;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn from_usize(v: usize) -> Self {
        Self::from_int(i64::try_from(v).expect("integer exceeds i64"))
    }

    fn min_of(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + FromStr + Send + Sync + 'static,
    T: From<i64> + Into<BigInt>,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Exact fraction in lowest terms, as serialized in reports.
///
/// `num` and `den` are JSON integers whenever they fit in an `i64`, and decimal
/// strings otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: IntRepr,
    pub den: IntRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(v: &BigInt) -> Self {
        match i64::try_from(v) {
            Ok(s) => IntRepr::Small(s),
            Err(_) => IntRepr::Big(v.to_string()),
        }
    }

    pub fn to_big(&self) -> Option<BigInt> {
        match self {
            IntRepr::Small(v) => Some(BigInt::from(*v)),
            IntRepr::Big(s) => s.parse().ok(),
        }
    }
}

impl Fraction {
    pub fn of<S: Scalar>(value: &S) -> Self {
        let big = value.to_big();
        Fraction {
            num: IntRepr::from_big(big.numer()),
            den: IntRepr::from_big(big.denom()),
        }
    }

    /// Back to an exact rational; `None` for a zero denominator or garbage.
    pub fn to_rational(&self) -> Option<BigRational> {
        let num = self.num.to_big()?;
        let den = self.den.to_big()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    }
}

/// Decimal expansion of `value` truncated toward zero after `digits` places.
/// For display only; never compared.
pub fn decimal_approx<S: Scalar>(value: &S, digits: usize) -> String {
    let big = value.to_big();
    let negative = big.is_negative();
    let num = big.numer().abs();
    let den = big.denom().clone();
    let (int_part, mut rem) = num.div_rem(&den);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        let ten = BigInt::from(10);
        for _ in 0..digits {
            rem *= &ten;
            let (q, r) = rem.div_rem(&den);
            out.push_str(&q.to_string());
            rem = r;
        }
    }
    out
}

/// Reduce `value` into `Z/qZ`; `None` when the denominator is divisible by `q`.
pub fn residue_mod<S: Scalar>(value: &S, q: u64) -> Option<u64> {
    let big = value.to_big();
    let modulus = BigInt::from(q);
    let num = big.numer().mod_floor(&modulus);
    let den = big.denom().mod_floor(&modulus);
    let num = u64::try_from(&num).ok()?;
    let den = u64::try_from(&den).ok()?;
    let inv = mod_inverse(den, q)?;
    Some(num * inv % q)
}

pub(crate) fn mod_inverse(a: u64, q: u64) -> Option<u64> {
    let egcd = (a as i128).extended_gcd(&(q as i128));
    if egcd.gcd != 1 {
        return None;
    }
    Some(egcd.x.rem_euclid(q as i128) as u64)
}
