//! Two-part CIST-partitions and the spanning-tree pairs they induce.
//!
//! A partition `(V1, V2)` qualifies when both sides induce connected
//! subgraphs and every component of the cross bipartite graph contains a
//! cycle. Such a partition yields two completely independent spanning trees:
//! each side's spanning tree plus one cross edge per vertex of the other side.

mod extract;
mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};

pub use extract::{orient_out_degree_one, partition_to_trees};
pub use verify::{check_spanning_tree, verify_cists_definitional, verify_cists_leafrule};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CistPartition {
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl CistPartition {
    pub fn new(v1: VertexSet, v2: VertexSet) -> Self {
        CistPartition { v1, v2 }
    }

    /// `(side, V(G) \ side)`.
    pub fn from_side(g: &Graph, side: VertexSet) -> Self {
        let v2 = side.complement(g.n());
        CistPartition { v1: side, v2 }
    }

    /// Disjoint, covering, both sides nonempty.
    pub fn check_shape(&self, g: &Graph) -> Result<()> {
        self.v1.check_within(g.n())?;
        self.v2.check_within(g.n())?;
        if self.v1.is_empty() || self.v2.is_empty() {
            return Err(Error::InvalidPartition("a side is empty".into()));
        }
        if !self.v1.is_disjoint(&self.v2) {
            return Err(Error::InvalidPartition(format!(
                "sides share {}",
                self.v1.intersection(&self.v2)
            )));
        }
        if self.v1.len() + self.v2.len() != g.n() {
            return Err(Error::InvalidPartition(format!(
                "sides cover {} of {} vertices",
                self.v1.len() + self.v2.len(),
                g.n()
            )));
        }
        Ok(())
    }

    pub fn side_of(&self, v: Vertex) -> Side {
        if self.v1.contains(v) {
            Side::First
        } else {
            Side::Second
        }
    }

    pub fn relabel(&self, labels: &[usize]) -> Self {
        CistPartition {
            v1: self.v1.relabel(labels),
            v2: self.v2.relabel(labels),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    First,
    Second,
}

/// Two candidate spanning trees as sorted edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TreePair {
    pub t1: Vec<Edge>,
    pub t2: Vec<Edge>,
}

impl TreePair {
    pub fn new(mut t1: Vec<Edge>, mut t2: Vec<Edge>) -> Self {
        t1.sort_unstable();
        t2.sort_unstable();
        TreePair { t1, t2 }
    }

    pub fn relabel(&self, labels: &[usize]) -> Self {
        TreePair::new(
            self.t1.iter().map(|e| e.relabel(labels)).collect(),
            self.t2.iter().map(|e| e.relabel(labels)).collect(),
        )
    }
}

/// Why a check failed. Every variant can be re-checked against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `G[side]` splits; `component` is the part holding the side's smallest vertex.
    SideDisconnected { side: u8, component: VertexSet },
    /// A component of `B(V1, V2)` without a cycle.
    TreeComponent {
        vertices: VertexSet,
        edges: Vec<Edge>,
    },
    /// The `u`–`v` paths of both trees use `edge`.
    SharedPathEdge { u: Vertex, v: Vertex, edge: Edge },
    /// The `u`–`v` paths of both trees pass through `vertex`.
    SharedPathVertex {
        u: Vertex,
        v: Vertex,
        vertex: Vertex,
    },
    /// `edge` lies in both trees.
    SharedEdge { edge: Edge },
    /// `vertex` has degree at least two in both trees.
    InternalInBoth { vertex: Vertex },
}

impl Witness {
    pub fn relabel(&self, labels: &[usize]) -> Self {
        match self {
            Witness::SideDisconnected { side, component } => Witness::SideDisconnected {
                side: *side,
                component: component.relabel(labels),
            },
            Witness::TreeComponent { vertices, edges } => Witness::TreeComponent {
                vertices: vertices.relabel(labels),
                edges: edges.iter().map(|e| e.relabel(labels)).collect(),
            },
            Witness::SharedPathEdge { u, v, edge } => Witness::SharedPathEdge {
                u: labels[*u],
                v: labels[*v],
                edge: edge.relabel(labels),
            },
            Witness::SharedPathVertex { u, v, vertex } => Witness::SharedPathVertex {
                u: labels[*u],
                v: labels[*v],
                vertex: labels[*vertex],
            },
            Witness::SharedEdge { edge } => Witness::SharedEdge {
                edge: edge.relabel(labels),
            },
            Witness::InternalInBoth { vertex } => Witness::InternalInBoth {
                vertex: labels[*vertex],
            },
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SideDisconnected { side, component } => {
                write!(f, "G[V{side}] is disconnected; component {component}")
            }
            Witness::TreeComponent { vertices, .. } => {
                write!(f, "B(V1,V2) has tree component on {vertices}")
            }
            Witness::SharedPathEdge { u, v, edge } => {
                write!(f, "paths {u}..{v} share edge {edge}")
            }
            Witness::SharedPathVertex { u, v, vertex } => {
                write!(f, "paths {u}..{v} share internal vertex {vertex}")
            }
            Witness::SharedEdge { edge } => write!(f, "edge {edge} is in both trees"),
            Witness::InternalInBoth { vertex } => {
                write!(f, "vertex {vertex} is internal in both trees")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            ok: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            ok: false,
            witness: Some(witness),
        }
    }

    pub fn relabel(&self, labels: &[usize]) -> Self {
        Verdict {
            ok: self.ok,
            witness: self.witness.as_ref().map(|w| w.relabel(labels)),
        }
    }
}

/// Checks both conditions of a 2-CIST-partition.
pub fn is_cist_partition(g: &Graph, p: &CistPartition) -> Result<Verdict> {
    p.check_shape(g)?;
    for (side, set) in [(1, &p.v1), (2, &p.v2)] {
        let comps = g.components(set);
        if comps.len() > 1 {
            return Ok(Verdict::fail(Witness::SideDisconnected {
                side,
                component: comps[0].clone(),
            }));
        }
    }
    let cross = g.bipartite_between(&p.v1, &p.v2)?;
    if let Some(tree) = cross.components().into_iter().find(|c| c.is_tree()) {
        return Ok(Verdict::fail(Witness::TreeComponent {
            vertices: tree.vertices,
            edges: tree.edges.iter().map(|&(u, v)| Edge::new(u, v)).collect(),
        }));
    }
    Ok(Verdict::pass())
}
