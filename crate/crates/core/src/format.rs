//! Text formats shared by the command line and the campaigns: target specs
//! and model files. Edge lists and sequences have their own parsers on
//! [`Graph`] and [`ReconSequence`](crate::ReconSequence).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;

/// Resolves a named graph: `k2`, `k3`, `kN` for cliques, or any
/// [`FamilySpec`] string such as `wheel:5` or `c2:6`.
pub fn named_graph(spec: &str) -> Result<Graph> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix(['k', 'K']) {
        if let Ok(n) = rest.parse::<usize>() {
            return crate::families::gen_clique(n);
        }
    }
    s.parse::<FamilySpec>()?.build()
}

/// A model file. Either a JSON object
///
/// ```text
/// {"host": "wheel:5", "target": "k3", "labels": [1, 0, 0, 0, 2, 2]}
/// ```
///
/// where `host` and `target` are optional and name a graph as in
/// [`named_graph`] or give an edge-list file path, or just the labels, as a
/// JSON array or whitespace-separated integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub labels: Vec<usize>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<ModelFile> {
        let t = text.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| Error::parse(e.line(), e.to_string()));
        }
        if t.starts_with('[') {
            let labels = serde_json::from_str(t).map_err(|e| Error::parse(e.line(), e.to_string()))?;
            return Ok(ModelFile { host: None, target: None, labels });
        }
        let mut labels = Vec::new();
        for (i, line) in text.lines().enumerate() {
            for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                labels.push(tok.parse().map_err(|_| Error::parse(i + 1, format!("expected a label, got {tok:?}")))?);
            }
        }
        if labels.is_empty() {
            return Err(Error::parse(1, "model file has no labels"));
        }
        Ok(ModelFile { host: None, target: None, labels })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model files serialize")
    }
}
