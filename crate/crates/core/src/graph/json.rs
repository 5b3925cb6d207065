//! Graph-spec JSON:
//!
//! ```text
//! {"n": 5, "delta": 2, "perms": [[1,2,3,4,0],[4,0,1,2,3]], "pairing": [2,1], "partition": [0,1,...]}
//! ```
//!
//! Vertex indices are 0-based; `pairing` lists 1-based labels. `partition`
//! is optional.

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::schreier::SchreierSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpecJson {
    pub n: usize,
    pub delta: usize,
    pub perms: Vec<Vec<usize>>,
    pub pairing: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u8>>,
}

impl GraphSpecJson {
    pub fn from_spec(spec: &SchreierSpec) -> Self {
        Self {
            n: spec.n_vertices(),
            delta: spec.delta(),
            perms: spec.perms().iter().map(|p| p.image().to_vec()).collect(),
            pairing: spec.pairing().iter().map(|&b| b + 1).collect(),
            partition: spec.partition().map(<[u8]>::to_vec),
        }
    }

    /// Validates field by field; messages name the offending field.
    pub fn to_spec(&self) -> Result<SchreierSpec> {
        let bad = |field: String, msg: String| Error::Parse(format!("field `{field}`: {msg}"));
        if self.perms.len() != self.delta {
            return Err(bad("perms".into(), format!("{} permutations listed, delta is {}", self.perms.len(), self.delta)));
        }
        if self.pairing.len() != self.delta {
            return Err(bad("pairing".into(), format!("{} entries, delta is {}", self.pairing.len(), self.delta)));
        }
        let mut perms = Vec::with_capacity(self.delta);
        for (i, img) in self.perms.iter().enumerate() {
            if img.len() != self.n {
                return Err(bad(format!("perms[{i}]"), format!("length {}, n is {}", img.len(), self.n)));
            }
            perms.push(Permutation::new(img.clone()).map_err(|e| bad(format!("perms[{i}]"), e.to_string()))?);
        }
        let mut pairing = Vec::with_capacity(self.delta);
        for (i, &b) in self.pairing.iter().enumerate() {
            if b == 0 || b > self.delta {
                return Err(bad(format!("pairing[{i}]"), format!("label {b} outside 1..={}", self.delta)));
            }
            pairing.push(b - 1);
        }
        let spec = SchreierSpec::new(self.n, perms, pairing).map_err(|e| bad("pairing".into(), e.to_string()))?;
        match &self.partition {
            None => Ok(spec),
            Some(p) => spec.with_partition(p.clone()).map_err(|e| bad("partition".into(), e.to_string())),
        }
    }
}

/// Parses and validates a graph spec. Syntax errors carry line and column.
pub fn parse_graph_spec(text: &str) -> Result<SchreierSpec> {
    let raw: GraphSpecJson = serde_json::from_str(text)
        .map_err(|e| {
            let text = e.to_string();
            let msg = text.rsplit_once(" at line ").map_or(text.as_str(), |(m, _)| m);
            Error::Parse(format!("line {} column {}: {msg}", e.line(), e.column()))
        })?;
    raw.to_spec()
}

pub fn graph_spec_to_json(spec: &SchreierSpec) -> String {
    serde_json::to_string_pretty(&GraphSpecJson::from_spec(spec)).expect("plain data serializes")
}
