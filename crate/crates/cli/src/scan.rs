//! Grid sizes for `verify`, overridable through `MINEXP_SCAN_BOUNDS`.
//!
//! The variable holds comma-separated `key=value` pairs, for example
//! `bound=6,u_max=3,u_step=1/3`. Keys left out keep their defaults.

use minexp_core::{Rational, Scalar};

pub const ENV_VAR: &str = "MINEXP_SCAN_BOUNDS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    /// Largest integer coordinate of the valuation grid.
    pub bound: u64,
    /// The beta-chain grid is `{0, u_step, 2 u_step, ...} ∩ [0, u_max]` per coordinate.
    pub u_max: Rational,
    pub u_step: Rational,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds {
            bound: 8,
            u_max: Rational::from_int(4),
            u_step: Rational::from_ratio(1, 2),
        }
    }
}

impl ScanBounds {
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut out = ScanBounds::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("{ENV_VAR}: expected key=value, got `{item}`"))?;
            let bad = || format!("{ENV_VAR}: bad value `{value}` for `{key}`");
            match key.trim() {
                "bound" => out.bound = value.trim().parse().map_err(|_| bad())?,
                "u_max" => out.u_max = value.trim().parse().map_err(|_| bad())?,
                "u_step" => out.u_step = value.trim().parse().map_err(|_| bad())?,
                other => return Err(format!("{ENV_VAR}: unknown key `{other}`")),
            }
        }
        if out.bound == 0 || out.u_step <= Rational::from_int(0) || out.u_max < Rational::from_int(0) {
            return Err(format!("{ENV_VAR}: need bound >= 1, u_step > 0 and u_max >= 0"));
        }
        Ok(out)
    }

    /// Defaults, overridden by the environment variable when it is set.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(ENV_VAR) {
            Ok(v) => Self::parse(&v),
            Err(std::env::VarError::NotPresent) => Ok(Self::default()),
            Err(e) => Err(format!("{ENV_VAR}: {e}")),
        }
    }

    pub fn u_grid(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut u = Rational::from_int(0);
        while u <= self.u_max {
            out.push(u.clone());
            u += &self.u_step;
        }
        out
    }
}
