//! Immutable undirected simple graphs and the queries the construction needs.

mod condition;
mod connectivity;
mod parse;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub use condition::{mu2, sigma2, ConditionReport, MIN_ORDER};
pub use connectivity::{min_vertex_cut_size, vertex_connectivity};
pub use parse::{parse_edge_list, parse_label_pairs, write_edge_list, LabelPairs};

pub type Vertex = usize;

/// A value in the naturals extended with +∞.
///
/// Used for hop distances and degree sums. `Finite` orders below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    Finite(usize),
    Infinite,
}

impl Ext {
    pub fn finite(self) -> Option<usize> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Ext::Infinite)
    }

    /// `self >= bound`, with +∞ above every finite bound.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Ext::Finite(v) => v >= bound,
            Ext::Infinite => true,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Finite(v) => write!(f, "{v}"),
            Ext::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ext::Finite(v) => serializer.serialize_u64(*v as u64),
            Ext::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// A sorted, deduplicated set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted_unchecked(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, v: Vertex) -> Self {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn without(&self, v: Vertex) -> Self {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Vertices of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> Self {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Smallest `k` members, in order.
    pub fn take(&self, k: usize) -> Self {
        VertexSet(self.0.iter().take(k).copied().collect())
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex(v)),
            _ => Ok(()),
        }
    }

    /// Maps every member through `labels`; the result is re-sorted.
    pub fn relabel(&self, labels: &[usize]) -> Self {
        self.iter().map(|v| labels[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn other(self, w: Vertex) -> Vertex {
        if w == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn relabel(self, labels: &[usize]) -> Self {
        Edge::new(labels[self.0], labels[self.1])
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<[Vertex; 2]> for Edge {
    fn from(pair: [Vertex; 2]) -> Self {
        Edge::new(pair[0], pair[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Undirected simple graph on `0..n` with sorted adjacency lists.
///
/// Each vertex also carries the label it had in the input file; labels are
/// strictly increasing in the vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `0..n`. Self-loops, parallel edges and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex(u));
            }
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("duplicate edge {u}-{}", w[0])));
            }
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            labels: (0..n).collect(),
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<usize>) -> Self {
        debug_assert_eq!(labels.len(), self.n());
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    /// Vertex id carrying input label `label`.
    pub fn vertex_of(&self, label: usize) -> Option<Vertex> {
        self.labels.binary_search(&label).ok()
    }

    /// True when every vertex's label equals its id.
    pub fn has_identity_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        VertexSet::from_sorted_unchecked(self.adj[v].clone())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// All edges in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge(u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    /// `|N(u) ∩ N(v)|` by sorted merge.
    pub fn common_neighbor_count(&self, u: Vertex, v: Vertex) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> VertexSet {
        VertexSet(
            self.adj[u]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect(),
        )
    }

    /// `N(v) ∩ within`.
    pub fn neighbors_in(&self, v: Vertex, within: &VertexSet) -> VertexSet {
        VertexSet(
            self.adj[v]
                .iter()
                .copied()
                .filter(|&w| within.contains(w))
                .collect(),
        )
    }

    pub fn has_neighbor_in(&self, v: Vertex, within: &VertexSet) -> bool {
        self.adj[v].iter().any(|&w| within.contains(w))
    }

    /// Hop distance from `source` to every vertex (`None` when unreachable).
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Ext> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(match self.bfs_distances(u)[v] {
            Some(d) => Ext::Finite(d),
            None => Ext::Infinite,
        })
    }

    /// `d(u,v) = 2` without a full BFS.
    pub fn at_distance_two(&self, u: Vertex, v: Vertex) -> bool {
        u != v && !self.has_edge(u, v) && self.common_neighbor_count(u, v) > 0
    }

    /// The empty graph and the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected components of `G[within]`, each sorted, listed by smallest member.
    pub fn components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in within.iter() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] && within.contains(w) {
                        seen[w] = true;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    /// `G[within]` is connected (vacuously so when `within` is empty).
    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        self.components(within).len() <= 1
    }

    /// `G - removed` is disconnected.
    pub fn is_separating(&self, removed: &VertexSet) -> bool {
        let rest = removed.complement(self.n());
        self.components(&rest).len() >= 2
    }

    pub fn bipartite_between(&self, a: &VertexSet, b: &VertexSet) -> Result<BipartiteView> {
        a.check_within(self.n())?;
        b.check_within(self.n())?;
        if !a.is_disjoint(b) {
            return Err(Error::InvalidPartition(format!(
                "sides overlap in {}",
                a.intersection(b)
            )));
        }
        let edges = a
            .iter()
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .copied()
                    .filter(|&w| b.contains(w))
                    .map(move |w| (u, w))
            })
            .collect();
        Ok(BipartiteView {
            left: a.clone(),
            right: b.clone(),
            edges,
        })
    }
}

/// The cross edges between two disjoint vertex sets, materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteView {
    pub left: VertexSet,
    pub right: VertexSet,
    /// `(u, v)` with `u` in `left`, `v` in `right`, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

/// One connected component of a [`BipartiteView`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteComponent {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl BipartiteComponent {
    /// Acyclic, i.e. `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }
}

impl BipartiteView {
    /// Adjacency of the view over `left ∪ right`, keyed by position in that union.
    fn local_adjacency(&self) -> (VertexSet, Vec<Vec<usize>>) {
        let all = self.left.union(&self.right);
        let index = |v: Vertex| all.as_slice().binary_search(&v).unwrap_or_default();
        let mut adj = vec![Vec::new(); all.len()];
        for &(u, v) in &self.edges {
            adj[index(u)].push(index(v));
            adj[index(v)].push(index(u));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        (all, adj)
    }

    /// Components over all vertices of both sides; an isolated vertex is a
    /// single-vertex component with no edges.
    pub fn components(&self) -> Vec<BipartiteComponent> {
        let (all, adj) = self.local_adjacency();
        let mut comp = vec![usize::MAX; all.len()];
        let mut count = 0;
        for start in 0..all.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut out: Vec<BipartiteComponent> = (0..count)
            .map(|_| BipartiteComponent {
                vertices: VertexSet::new(),
                edges: Vec::new(),
            })
            .collect();
        for (i, v) in all.iter().enumerate() {
            out[comp[i]].vertices.0.push(v);
        }
        for &(u, v) in &self.edges {
            let i = all.as_slice().binary_search(&u).unwrap_or_default();
            out[comp[i]].edges.push((u, v));
        }
        out
    }
}
