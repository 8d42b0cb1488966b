//! Monomial ideals on coordinate charts and their transforms under blow-ups
//! of coordinate centers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoordKind {
    /// Local equation of the exceptional divisor `E_label`, with `a` its
    /// coefficient in the factored divisor and `k` its discrepancy.
    Exceptional { label: usize, a: u64, k: u64 },
    /// Local equation of the strict transform of `H_index`.
    StrictTransform { index: usize },
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coord {
    pub name: String,
    pub kind: CoordKind,
}

impl Coord {
    pub fn is_exceptional(&self) -> bool {
        matches!(self.kind, CoordKind::Exceptional { .. })
    }
}

/// A chart: ordered coordinates plus monomial generators of the pulled-back
/// ideal, written as exponent vectors over the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartState {
    stage: usize,
    coords: Vec<Coord>,
    ideal: Vec<Vec<u32>>,
}

const LETTERS: [&str; 4] = ["z", "u", "v", "w"];

/// Coordinate name prefix after `stage` blow-ups (`z, u, v, w, s4_, s5_, ...`).
pub fn stage_prefix(stage: usize) -> String {
    LETTERS
        .get(stage)
        .map_or_else(|| format!("s{stage}_"), |l| (*l).to_string())
}

impl ChartState {
    /// Coordinates are named `z0, z1, ...`; `kinds` gives their roles.
    pub fn new(kinds: Vec<CoordKind>, ideal: Vec<Vec<u32>>) -> Result<Self> {
        let coords = kinds
            .into_iter()
            .enumerate()
            .map(|(i, kind)| Coord {
                name: format!("{}{i}", stage_prefix(0)),
                kind,
            })
            .collect();
        Self::with_coords(0, coords, ideal)
    }

    pub fn with_coords(stage: usize, coords: Vec<Coord>, ideal: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(g) = ideal.iter().find(|g| g.len() != coords.len()) {
            return Err(Error::LengthMismatch {
                expected: coords.len(),
                got: g.len(),
            });
        }
        Ok(ChartState { stage, coords, ideal })
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn ideal(&self) -> &[Vec<u32>] {
        &self.ideal
    }

    pub fn coord_index(&self, name: &str) -> Option<usize> {
        self.coords.iter().position(|c| c.name == name)
    }

    /// Drops generators divisible by another generator (and duplicates).
    pub fn minimalized(&self) -> ChartState {
        let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for (i, g) in self.ideal.iter().enumerate() {
            let redundant = self.ideal.iter().enumerate().any(|(j, h)| {
                j != i && divides(h, g) && (h != g || j < i)
            });
            if !redundant {
                kept.push(g.clone());
            }
        }
        ChartState {
            stage: self.stage,
            coords: self.coords.clone(),
            ideal: kept,
        }
    }

    /// Greatest common monomial divisor of the generators.
    pub fn common_factor(&self) -> Vec<u32> {
        let mut gcd = match self.ideal.first() {
            Some(g) => g.clone(),
            None => return vec![0; self.coords.len()],
        };
        for g in &self.ideal[1..] {
            for (c, &e) in gcd.iter_mut().zip(g) {
                *c = (*c).min(e);
            }
        }
        gcd
    }

    /// Generators divided by the common factor.
    pub fn residual(&self) -> Vec<Vec<u32>> {
        let gcd = self.common_factor();
        self.ideal
            .iter()
            .map(|g| g.iter().zip(&gcd).map(|(e, c)| e - c).collect())
            .collect()
    }

    /// True when the ideal is principal, generated by a monomial in the
    /// exceptional coordinates only, i.e. the ideal of a divisor supported on
    /// the exceptional locus.
    pub fn is_divisorial(&self) -> bool {
        let minimal = self.minimalized();
        match minimal.ideal.as_slice() {
            [g] => self.supported_on_exceptional(g),
            _ => false,
        }
    }

    pub fn supported_on_exceptional(&self, exps: &[u32]) -> bool {
        exps.iter()
            .zip(&self.coords)
            .all(|(&e, c)| e == 0 || c.is_exceptional())
    }

    pub fn render_monomial(&self, exps: &[u32]) -> String {
        let factors: Vec<String> = exps
            .iter()
            .zip(&self.coords)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, c)| if e == 1 { c.name.clone() } else { format!("{}^{e}", c.name) })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn render_ideal(&self) -> String {
        let gens: Vec<String> = self.ideal.iter().map(|g| self.render_monomial(g)).collect();
        format!("({})", gens.join(", "))
    }

    fn next_label(&self) -> usize {
        self.coords
            .iter()
            .filter_map(|c| match c.kind {
                CoordKind::Exceptional { label, .. } => Some(label),
                _ => None,
            })
            .max()
            .unwrap_or(0)
            + 1
    }
}

impl fmt::Display for ChartState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ideal())
    }
}

/// Charts of one blow-up, one per pivot coordinate of the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub center: Vec<usize>,
    /// `(pivot, chart)` in center order.
    pub charts: Vec<(usize, ChartState)>,
    /// Order of the ideal along the new exceptional divisor.
    pub a: u64,
    /// Discrepancy of the new exceptional divisor.
    pub k: u64,
    pub label: usize,
}

/// Blows up the coordinate subspace `{z_c = 0 : c in center}`.
///
/// In the chart of pivot `j`, `z_j = u_j` and `z_l = u_j u_l` for the other
/// center coordinates, so a generator's `j`-exponent becomes the sum of its
/// exponents over the center. The pivot becomes the new exceptional divisor
/// with `k = (|center| - 1) + sum of k over exceptional center coordinates`
/// and `a` the least transformed pivot exponent (0 for the zero ideal); other
/// coordinates keep their roles.
pub fn blowup_chart(state: &ChartState, center: &[usize]) -> Result<Blowup> {
    let ncoords = state.coords.len();
    if center.len() < 2 {
        return Err(Error::BadCenter("a center needs at least two coordinates".into()));
    }
    if let Some(&c) = center.iter().find(|&&c| c >= ncoords) {
        return Err(Error::BadCenter(format!("coordinate {c} out of range")));
    }
    if (1..center.len()).any(|i| center[..i].contains(&center[i])) {
        return Err(Error::BadCenter("repeated coordinate".into()));
    }

    let weight: Vec<u32> = state
        .ideal
        .iter()
        .map(|g| center.iter().map(|&c| g[c]).sum())
        .collect();
    let a = weight.iter().copied().min().map_or(0, u64::from);
    let k = (center.len() as u64 - 1)
        + center
            .iter()
            .map(|&c| match state.coords[c].kind {
                CoordKind::Exceptional { k, .. } => k,
                _ => 0,
            })
            .sum::<u64>();
    let label = state.next_label();
    let stage = state.stage + 1;
    let prefix = stage_prefix(stage);

    let charts = center
        .iter()
        .map(|&pivot| {
            let coords = state
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| Coord {
                    name: format!("{prefix}{i}"),
                    kind: if i == pivot {
                        CoordKind::Exceptional { label, a, k }
                    } else {
                        c.kind.clone()
                    },
                })
                .collect();
            let ideal = state
                .ideal
                .iter()
                .zip(&weight)
                .map(|(g, &w)| {
                    let mut e = g.clone();
                    e[pivot] = w;
                    e
                })
                .collect();
            (pivot, ChartState { stage, coords, ideal })
        })
        .collect();
    Ok(Blowup {
        center: center.to_vec(),
        charts,
        a,
        k,
        label,
    })
}
