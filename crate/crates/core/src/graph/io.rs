//! JSON and DOT serialization.
//!
//! JSON layout: `{"n": 5, "edges": [[0,1], ...], "labels": {"0,1": 2}}`, with
//! 0-based vertices, `u < v` in every pair and `labels` omitted when empty.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, u32>>,
}

fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidGraph(format!("bad label key {key:?}"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        let labels = if g.labels.is_empty() {
            None
        } else {
            Some(
                g.labels
                    .iter()
                    .map(|(&(u, v), &l)| (format!("{u},{v}"), l))
                    .collect(),
            )
        };
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels,
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        let mut b = GraphBuilder::new(self.n);
        for [u, v] in self.edges {
            b.add_edge(u, v)?;
        }
        for (key, l) in self.labels.unwrap_or_default() {
            let (u, v) = parse_pair(&key)?;
            b.set_label(u, v, l)?;
        }
        Ok(b.build())
    }
}

impl Graph {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphJson::from_graph(self)).expect("plain data serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        serde_json::from_str::<GraphJson>(s)?.into_graph()
    }

    /// Graphviz rendering; edge labels become `label` attributes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            match self.label(u, v) {
                Some(l) => {
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{l}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Reads a graph from a JSON file.
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    Graph::from_json_str(&std::fs::read_to_string(path)?)
}

/// Writes JSON, or DOT when the extension is `.dot`.
pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let body = match path.extension().and_then(|e| e.to_str()) {
        Some("dot") => g.to_dot(),
        _ => g.to_json_string(),
    };
    std::fs::write(path, body)?;
    Ok(())
}
