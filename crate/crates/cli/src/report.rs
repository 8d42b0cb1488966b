//! Reports: one per request, serialized as JSON or rendered as text from the
//! same fields, so both modes carry identical rationals.

use std::fmt::Write as _;

use minexp_core::scalar::IntRepr;
use minexp_core::{decimal_approx, Exponent, Fraction, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::request::Request;

pub const SCHEMA_VERSION: u32 = 1;

/// Digits after the point in decimal approximations.
pub const APPROX_DIGITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Computed; nothing was cross-checked.
    Ok,
    /// Every check passed.
    Pass,
    /// A check failed.
    Fail,
    /// The request was rejected.
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Pass => 0,
            Status::Error => 1,
            Status::Fail => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// A named exact value. `exact` is `a/b`, an integer, or `inf`; `approx` is
/// the truncated decimal prefixed with `≈` and is never used in comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub name: String,
    pub exact: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num: Option<IntRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<IntRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
}

impl Quantity {
    pub fn rational(name: impl Into<String>, value: &Rational) -> Self {
        let f = Fraction::of(value);
        Quantity {
            name: name.into(),
            exact: value.to_string(),
            num: Some(f.num),
            den: Some(f.den),
            approx: Some(format!("≈{}", decimal_approx(value, APPROX_DIGITS))),
        }
    }

    pub fn exponent(name: impl Into<String>, value: &Exponent<Rational>) -> Self {
        match value {
            Exponent::Finite(v) => Self::rational(name, v),
            Exponent::Infinite => Quantity {
                name: name.into(),
                exact: "inf".into(),
                num: None,
                den: None,
                approx: None,
            },
        }
    }

    /// The exact value, `None` for infinity or an unreadable fraction.
    pub fn value(&self) -> Option<Rational> {
        Fraction {
            num: self.num.clone()?,
            den: self.den.clone()?,
        }
        .to_rational()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub request: Request,
    pub status: Status,
    pub results: Vec<Quantity>,
    /// Command-specific structured data (tables, traces, certificates).
    pub details: Value,
    /// Which statement each number instantiates.
    pub provenance: Vec<String>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Sub-reports of a batch, in manifest order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<Report>,
    /// Extra text-mode lines (tables, traces); not serialized.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(request: &Request) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: request.command().to_string(),
            request: request.clone(),
            status: Status::Ok,
            results: Vec::new(),
            details: Value::Object(Default::default()),
            provenance: Vec::new(),
            warnings: Vec::new(),
            error: None,
            reports: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn failed(request: &Request, message: impl Into<String>) -> Self {
        let mut r = Report::new(request);
        r.status = Status::Error;
        r.error = Some(message.into());
        r
    }

    pub fn push(&mut self, name: impl Into<String>, value: &Rational) {
        self.results.push(Quantity::rational(name, value));
    }

    pub fn result(&self, name: &str) -> Option<&Quantity> {
        self.results.iter().find(|q| q.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let echo = serde_json::to_value(&self.request).expect("requests serialize");
        let args: Vec<String> = echo
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(k, _)| k.as_str() != "command")
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "== {} {}", self.command, args.join(" "));
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        let width = self.results.iter().map(|q| q.name.len()).max().unwrap_or(0);
        for q in &self.results {
            match &q.approx {
                Some(a) => {
                    let _ = writeln!(out, "{:width$} = {}  ({a})", q.name, q.exact);
                }
                None => {
                    let _ = writeln!(out, "{:width$} = {}", q.name, q.exact);
                }
            }
        }
        for line in &self.text {
            let _ = writeln!(out, "{line}");
        }
        for p in &self.provenance {
            let _ = writeln!(out, "note: {p}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "WARNING: {w}");
        }
        for sub in &self.reports {
            out.push('\n');
            out.push_str(&sub.render_text());
        }
        let _ = writeln!(out, "status: {}", self.status.label());
        out
    }
}
