//! Extended presentation graphs: vertex labels are generator orders, edge labels are
//! braid lengths.

mod coxeter;
mod criteria;
mod parse;

pub use coxeter::{classify_coxeter_subset, cosine_matrix, CoxeterClass, CoxeterKind};
pub use criteria::{
    compute_criteria_profile, has_all_two_square, is_fc_type, is_hyperbolic_type, is_irreducible,
    is_triangle_free, is_two_dimensional, spherical_subsets, CriteriaProfile, Decision, EdgeRef,
    HyperbolicVerdict, Obstruction, DEFAULT_MOUSSONG_LIMIT,
};
pub use parse::parse_graph;

use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(n) => Some(n),
            Label::Infinite => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(n) => write!(f, "{n}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Finite(n) => s.serialize_u32(*n),
            Label::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: String,
    pub label: Label,
}

/// Edge between vertex indices `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPresentationGraph {
    pub name: Option<String>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    /// `adj[i][j]` is the edge label, or 0 for a non-edge.
    adj: Vec<Vec<u32>>,
}

impl ExtendedPresentationGraph {
    /// Validate and build. Edge endpoints refer to positions in `vertices`.
    pub fn new(
        name: Option<String>,
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize, u32)>,
    ) -> Result<Self> {
        let n = vertices.len();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.id.clone()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {}", v.id)));
            }
            if let Label::Finite(p) = v.label {
                if p < 2 {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {} has label {p} < 2",
                        v.id
                    )));
                }
            }
        }
        let mut adj = vec![vec![0u32; n]; n];
        let mut out = Vec::with_capacity(edges.len());
        for (a, b, m) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph("edge endpoint out of range".into()));
            }
            let (ia, ib) = (&vertices[a].id, &vertices[b].id);
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {ia}")));
            }
            if m < 2 {
                return Err(Error::InvalidGraph(format!(
                    "edge {ia} {ib} has label {m} < 2"
                )));
            }
            if adj[a][b] != 0 {
                return Err(Error::InvalidGraph(format!("duplicate edge {ia} {ib}")));
            }
            if m % 2 == 1 && vertices[a].label != vertices[b].label {
                return Err(Error::InvalidGraph(format!(
                    "odd edge label {m} on {ia} {ib} joins unequal vertex labels {} and {}",
                    vertices[a].label, vertices[b].label
                )));
            }
            adj[a][b] = m;
            adj[b][a] = m;
            out.push(Edge {
                a: a.min(b),
                b: a.max(b),
                label: m,
            });
        }
        out.sort();
        Ok(ExtendedPresentationGraph {
            name,
            vertices,
            edges: out,
            adj,
        })
    }

    /// The single-edge graph with labels (p, q, r).
    pub fn edge_graph(p: u32, q: u32, r: u32) -> Result<Self> {
        Self::new(
            None,
            vec![
                Vertex {
                    id: "s".into(),
                    label: Label::Finite(p),
                },
                Vertex {
                    id: "t".into(),
                    label: Label::Finite(r),
                },
            ],
            vec![(0, 1, q)],
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn label(&self, v: usize) -> Label {
        self.vertices[v].label
    }

    /// Edge label between two distinct vertices, `None` for a non-edge.
    pub fn edge_label(&self, a: usize, b: usize) -> Option<u32> {
        match self.adj[a][b] {
            0 => None,
            m => Some(m),
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b] != 0
    }

    pub fn all_labels_finite(&self) -> bool {
        self.vertices.iter().all(|v| v.label != Label::Infinite)
    }

    /// Require every vertex label to be finite.
    pub fn require_finite(&self) -> Result<()> {
        match self.vertices.iter().find(|v| v.label == Label::Infinite) {
            Some(v) => Err(Error::InvalidGraph(format!(
                "vertex {} has infinite label; a finite order is required",
                v.id
            ))),
            None => Ok(()),
        }
    }

    /// The same graph with every vertex label replaced by `label`.
    pub fn with_uniform_label(&self, label: Label) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                label,
            })
            .collect();
        let edges = self.edges.iter().map(|e| (e.a, e.b, e.label)).collect();
        Self::new(self.name.clone(), vertices, edges)
    }

    pub fn subgraph(&self, vertices: &[usize]) -> Result<SubgraphRef<'_>> {
        SubgraphRef::new(self, vertices)
    }

    /// 1/p_i + 2/m_ij + 1/p_j for an edge, with 1/inf = 0.
    pub fn edge_h(&self, e: &Edge) -> Ratio<i64> {
        let inv = |l: Label| match l {
            Label::Finite(n) => Ratio::new(1, n as i64),
            Label::Infinite => Ratio::from_integer(0),
        };
        inv(self.label(e.a)) + Ratio::new(2, e.label as i64) + inv(self.label(e.b))
    }

    /// Serializable form matching the JSON input format.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = self
            .vertices
            .iter()
            .map(|v| serde_json::json!({"id": v.id, "label": v.label}))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "a": self.vertices[e.a].id,
                    "b": self.vertices[e.b].id,
                    "label": e.label
                })
            })
            .collect();
        serde_json::json!({"name": self.name, "vertices": vertices, "edges": edges})
    }
}

/// An induced subgraph, given by a vertex subset of a parent graph.
#[derive(Debug, Clone)]
pub struct SubgraphRef<'g> {
    pub parent: &'g ExtendedPresentationGraph,
    vertices: Vec<usize>,
}

impl<'g> SubgraphRef<'g> {
    pub fn new(parent: &'g ExtendedPresentationGraph, vertices: &[usize]) -> Result<Self> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.iter().any(|&i| i >= parent.vertex_count()) {
            return Err(Error::InvalidInput("subgraph vertex out of range".into()));
        }
        Ok(SubgraphRef {
            parent,
            vertices: v,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.parent
            .edges()
            .iter()
            .filter(|e| self.vertices.contains(&e.a) && self.vertices.contains(&e.b))
            .copied()
            .collect()
    }
}
