//! The JSON graph format: `{"n": …, "edges": [{"u", "v", "gain"}]}` with
//! gains either `{"re", "im"}` or `{"turns": "p/q"}`.

use std::collections::HashSet;

use gainsym::{ComplexUnit, Error, GainGraph64, Turns};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub u: usize,
    pub v: usize,
    pub gain: GainDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GainDocument {
    Turns { turns: String },
    Cartesian { re: f64, im: f64 },
}

impl GainDocument {
    pub fn from_unit(z: &ComplexUnit<f64>) -> Self {
        match z.turns() {
            Some(t) => GainDocument::Turns { turns: t.to_string() },
            None => GainDocument::Cartesian { re: z.re(), im: z.im() },
        }
    }

    fn to_unit(&self, index: usize) -> Result<ComplexUnit<f64>, CliError> {
        match self {
            GainDocument::Turns { turns } => turns
                .parse::<Turns>()
                .map(ComplexUnit::from_turns)
                .map_err(|message| CliError::InvalidEdge { index, message }),
            GainDocument::Cartesian { re, im } => ComplexUnit::new(*re, *im).map_err(|e| match e {
                Error::NonUnitGain { modulus, .. } => Error::NonUnitGain { edge: index, modulus }.into(),
                other => other.into(),
            }),
        }
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Validates vertex order and range, duplicates and gains, reporting
    /// the offending edge index.
    pub fn to_graph(&self) -> Result<GainGraph64, CliError> {
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (index, e) in self.edges.iter().enumerate() {
            let bad = |message: String| Err(CliError::InvalidEdge { index, message });
            if e.u >= e.v {
                return bad(format!("requires u < v, found u = {}, v = {}", e.u, e.v));
            }
            if e.v >= self.n {
                return bad(format!("vertex {} out of range for n = {}", e.v, self.n));
            }
            if !seen.insert((e.u, e.v)) {
                return bad(format!("duplicate edge ({}, {})", e.u, e.v));
            }
            edges.push((e.u, e.v, e.gain.to_unit(index)?));
        }
        Ok(GainGraph64::new(self.n, edges)?)
    }

    pub fn from_graph(g: &GainGraph64) -> Self {
        Self {
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    u: e.u,
                    v: e.v,
                    gain: GainDocument::from_unit(&e.gain),
                })
                .collect(),
        }
    }

    /// Reduced turns, edges sorted.
    pub fn normalized(&self) -> Result<Self, CliError> {
        Ok(Self::from_graph(&self.to_graph()?))
    }
}
