//! Typed requests. Deserializing a manifest entry into [`Request`] is the
//! payload validation step: unknown fields, missing fields and wrong types are
//! rejected before anything is computed.

use std::fmt;

use minexp_core::Rational;
use serde::{Deserialize, Serialize};

/// A rational given either as a JSON integer or as text like `"3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    pub fn parse(&self) -> Result<Rational, String> {
        match self {
            RationalInput::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalInput::Text(s) => {
                let t = s.trim();
                if t.split('/').nth(1).is_some_and(|d| d.trim_start_matches(['+', '-']).chars().all(|c| c == '0')) {
                    return Err(format!("`{s}` has a zero denominator"));
                }
                t.parse::<Rational>().map_err(|_| format!("`{s}` is not a rational number"))
            }
        }
    }
}

impl fmt::Display for RationalInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalInput::Int(v) => write!(f, "{v}"),
            RationalInput::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase", deny_unknown_fields)]
pub enum Request {
    /// Closed-form exponent, alpha table, lct and predicates.
    Formula { n: usize, degrees: Vec<u32> },
    /// Weighted upper bound from explicit orders or from polynomials.
    Weighted {
        weights: Vec<RationalInput>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        orders: Option<Vec<RationalInput>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        polys: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vars: Option<Vec<String>>,
    },
    /// Newton polyhedron diagonal value from a support or a polynomial.
    Newton {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        support: Option<Vec<Vec<u32>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        poly: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vars: Option<Vec<String>>,
    },
    /// Simulated resolution and divisor ledger.
    Resolve { n: usize, degrees: Vec<u32> },
    /// Valuation inequality grid and beta-chain grid.
    Verify {
        n: usize,
        degrees: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
    },
    /// Finite-field transversality probe.
    Probe {
        polys: Vec<String>,
        vars: Vec<String>,
        field: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        limit: Option<u64>,
    },
    /// Runs every request of a manifest file.
    Batch { manifest: String },
}

impl Request {
    pub fn command(&self) -> &'static str {
        match self {
            Request::Formula { .. } => "formula",
            Request::Weighted { .. } => "weighted",
            Request::Newton { .. } => "newton",
            Request::Resolve { .. } => "resolve",
            Request::Verify { .. } => "verify",
            Request::Probe { .. } => "probe",
            Request::Batch { .. } => "batch",
        }
    }
}

/// Parses a manifest: a JSON array of requests.
pub fn parse_manifest(text: &str) -> Result<Vec<Request>, String> {
    let requests: Vec<Request> = serde_json::from_str(text).map_err(|e| format!("malformed manifest: {e}"))?;
    if requests.iter().any(|r| matches!(r, Request::Batch { .. })) {
        return Err("malformed manifest: batch requests cannot be nested".into());
    }
    Ok(requests)
}
