use std::collections::{BTreeMap, VecDeque};

use super::{is_cist_partition, CistPartition, TreePair};
use crate::error::{Error, Result};
use crate::graph::{BipartiteComponent, Edge, Graph, Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// Chooses one out-neighbour for every vertex of `comp` so that no edge is
/// chosen from both of its ends. Returns `None` when `comp` is a tree.
///
/// A DFS from the smallest vertex finds the first cycle, which is oriented
/// cyclically; every other vertex points at its BFS parent towards the cycle.
pub fn orient_out_degree_one(comp: &BipartiteComponent) -> Option<BTreeMap<Vertex, Vertex>> {
    let verts = comp.vertices.as_slice();
    let idx = |v: Vertex| verts.binary_search(&v).unwrap_or_default();
    let k = verts.len();
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in &comp.edges {
        adj[idx(u)].push(idx(v));
        adj[idx(v)].push(idx(u));
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let cycle = find_cycle(&adj)?;
    let mut out = vec![NONE; k];
    for (i, &c) in cycle.iter().enumerate() {
        out[c] = cycle[(i + 1) % cycle.len()];
    }

    let mut seeds = cycle.clone();
    seeds.sort_unstable();
    let mut queue: VecDeque<usize> = seeds.into_iter().collect();
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if out[w] == NONE {
                out[w] = u;
                queue.push_back(w);
            }
        }
    }
    debug_assert!(out.iter().all(|&o| o != NONE));
    Some(
        out.iter()
            .enumerate()
            .map(|(i, &o)| (verts[i], verts[o]))
            .collect(),
    )
}

/// First cycle met by an iterative DFS from local vertex 0, listed in
/// traversal order.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    if adj.is_empty() {
        return None;
    }
    let mut parent = vec![NONE; adj.len()];
    let mut visited = vec![false; adj.len()];
    visited[0] = true;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (u, next) = (top.0, top.1);
        if next == adj[u].len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let w = adj[u][next];
        if !visited[w] {
            visited[w] = true;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && parent[w] != u {
            // w is an ancestor of u: walk the tree path back up to it.
            let mut path = vec![u];
            let mut cur = u;
            while cur != w {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
    }
    None
}

/// BFS tree of `G[side]` rooted at its smallest vertex.
fn bfs_tree(g: &Graph, side: &VertexSet) -> Vec<Edge> {
    let Some(root) = side.first() else {
        return Vec::new();
    };
    let mut reached = VertexSet::singleton(root);
    let mut queue = VecDeque::from([root]);
    let mut edges = Vec::with_capacity(side.len().saturating_sub(1));
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if side.contains(w) && reached.insert(w) {
                edges.push(Edge::new(u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

/// Builds two completely independent spanning trees from a valid partition.
///
/// `t1` is a BFS tree of `G[V1]` with every vertex of `V2` hung on it as a
/// leaf through its chosen cross edge; `t2` symmetrically.
pub fn partition_to_trees(g: &Graph, p: &CistPartition) -> Result<TreePair> {
    if !is_cist_partition(g, p)?.ok {
        return Err(Error::NotACistPartition);
    }
    let mut t1 = bfs_tree(g, &p.v1);
    let mut t2 = bfs_tree(g, &p.v2);
    let cross = g.bipartite_between(&p.v1, &p.v2)?;
    for comp in cross.components() {
        let out = orient_out_degree_one(&comp).ok_or(Error::NotACistPartition)?;
        for (w, target) in out {
            if p.v2.contains(w) {
                t1.push(Edge::new(w, target));
            } else {
                t2.push(Edge::new(w, target));
            }
        }
    }
    Ok(TreePair::new(t1, t2))
}
