//! File formats.
//!
//! * graph: `{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}` or a text edge
//!   list with one `u v` pair per line (a lone `v` adds an isolated
//!   vertex, `#` starts a comment);
//! * complex: `{"vertices":[...],"facets":[[...],...]}`;
//! * hybrid spec: `{"base":{graph},"parts":[[...]],"whisker_sizes":[...]}`
//!   or with explicit `"whiskers":[[...]]`;
//! * shelling certificate: `{"order":[...],"facets":[[...]],"witnesses":[{"i":2,"j":1,"x":4,"k":1}]}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::hybrid::HybridSpec;
use crate::shelling::ShellingCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    #[serde(default)]
    pub vertices: Option<Vec<Vertex>>,
    pub edges: Vec<[Vertex; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for &[u, v] in &self.edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        let edges: Vec<(Vertex, Vertex)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let vertices = match self.vertices {
            Some(vs) => vs,
            None => edges
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        };
        Graph::new(&vertices, &edges)
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: Some(g.labels().to_vec()),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Vec<Vertex>>,
}

impl ComplexJson {
    pub fn into_complex(self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(
            &self.vertices,
            self.facets
                .into_iter()
                .map(|f| f.into_iter().collect::<VertexSet>()),
        )
    }
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            vertices: c.universe().to_vec(),
            facets: c
                .facets()
                .iter()
                .map(|f| f.iter().copied().collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub base: GraphJson,
    pub parts: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub whisker_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub whiskers: Option<Vec<Vec<Vertex>>>,
}

impl SpecJson {
    pub fn into_spec(self) -> Result<HybridSpec> {
        let base = self.base.into_graph()?;
        let parts = self
            .parts
            .into_iter()
            .map(|p| p.into_iter().collect())
            .collect();
        match (self.whisker_sizes, self.whiskers) {
            (Some(sizes), None) => HybridSpec::with_whisker_sizes(base, parts, &sizes),
            (None, Some(whiskers)) => HybridSpec::new(base, parts, whiskers),
            _ => Err(Error::Parse(
                "hybrid spec needs exactly one of \"whisker_sizes\" or \"whiskers\"".into(),
            )),
        }
    }
}

impl From<&HybridSpec> for SpecJson {
    fn from(spec: &HybridSpec) -> Self {
        SpecJson {
            base: GraphJson::from(spec.base()),
            parts: spec
                .parts()
                .iter()
                .map(|p| p.iter().copied().collect())
                .collect(),
            whisker_sizes: None,
            whiskers: Some(spec.whiskers().to_vec()),
        }
    }
}

/// Text edge list: `u v` per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertices = BTreeSet::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| tok.parse::<Vertex>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        match nums.as_slice() {
            [v] => {
                vertices.insert(*v);
            }
            [u, v] => {
                vertices.insert(*u);
                vertices.insert(*v);
                edges.push((*u, *v));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `u v`, got {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    let vertices: Vec<Vertex> = vertices.into_iter().collect();
    Graph::new(&vertices, &edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let touched: BTreeSet<Vertex> = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
    for v in g.labels().iter().filter(|v| !touched.contains(v)) {
        out.push_str(&format!("{v}\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Any of the accepted input documents.
#[derive(Debug, Clone)]
pub enum Document {
    Graph(Graph),
    Complex(SimplicialComplex),
    Spec(HybridSpec),
    Certificate(ShellingCertificate),
}

impl Document {
    /// Detects the format: JSON objects by their keys, anything else as an
    /// edge list.
    pub fn parse(text: &str) -> Result<Self> {
        if !text.trim_start().starts_with('{') {
            return parse_edge_list(text).map(Document::Graph);
        }
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let has = |key: &str| value.get(key).is_some();
        let bad = |e: serde_json::Error| Error::Parse(e.to_string());
        if has("base") {
            let raw: SpecJson = serde_json::from_value(value).map_err(bad)?;
            raw.into_spec().map(Document::Spec)
        } else if has("witnesses") {
            let cert: ShellingCertificate = serde_json::from_value(value).map_err(bad)?;
            Ok(Document::Certificate(cert))
        } else if has("facets") {
            let raw: ComplexJson = serde_json::from_value(value).map_err(bad)?;
            raw.into_complex().map(Document::Complex)
        } else if has("edges") {
            let raw: GraphJson = serde_json::from_value(value).map_err(bad)?;
            raw.into_graph().map(Document::Graph)
        } else {
            Err(Error::Parse(
                "unrecognised JSON document (expected graph, complex, spec or certificate)".into(),
            ))
        }
    }
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_graph()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serialises")
}

pub fn spec_from_json(text: &str) -> Result<HybridSpec> {
    let raw: SpecJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_spec()
}

pub fn spec_to_json(spec: &HybridSpec) -> String {
    serde_json::to_string(&SpecJson::from(spec)).expect("spec serialises")
}
