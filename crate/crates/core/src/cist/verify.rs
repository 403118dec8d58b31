use std::collections::VecDeque;

use super::{TreePair, Verdict, Witness};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Fails unless `edges` form a spanning tree of `g`.
pub fn check_spanning_tree(g: &Graph, edges: &[Edge], tree: u8) -> Result<()> {
    let fail = |reason: String| Err(Error::NotASpanningTree { tree, reason });
    let n = g.n();
    if n == 0 {
        return fail("graph has no vertices".into());
    }
    if edges.len() + 1 != n {
        return fail(format!("{} edges, expected {}", edges.len(), n - 1));
    }
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut v: usize) -> usize {
        while root[v] != v {
            root[v] = root[root[v]];
            v = root[v];
        }
        v
    }
    for &e in edges {
        if e.v() >= n {
            return fail(format!("edge {e} leaves the vertex range"));
        }
        if !g.has_edge(e.u(), e.v()) {
            return fail(format!("edge {e} is not in the graph"));
        }
        let (a, b) = (find(&mut root, e.u()), find(&mut root, e.v()));
        if a == b {
            return fail(format!("edge {e} closes a cycle"));
        }
        root[a] = b;
    }
    // n - 1 edges and no cycle: connected.
    Ok(())
}

/// A spanning tree rooted at vertex 0, for path queries.
struct RootedTree {
    parent: Vec<Vertex>,
    depth: Vec<usize>,
}

impl RootedTree {
    fn new(n: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        parent[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        RootedTree { parent, depth }
    }

    /// Vertices of the `u`–`v` path, `u` first and `v` last.
    fn path(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (mut a, mut b) = (u, v);
        let mut front = vec![a];
        let mut back = vec![b];
        while self.depth[a] > self.depth[b] {
            a = self.parent[a];
            front.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b];
            back.push(b);
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
            front.push(a);
            back.push(b);
        }
        back.pop();
        front.extend(back.into_iter().rev());
        front
    }
}

fn path_edges(path: &[Vertex]) -> Vec<Edge> {
    path.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

/// Checks the definition directly: for every pair, the two tree paths share
/// no edge and no internal vertex. Cubic in `n`.
pub fn verify_cists_definitional(g: &Graph, tp: &TreePair) -> Result<Verdict> {
    check_spanning_tree(g, &tp.t1, 1)?;
    check_spanning_tree(g, &tp.t2, 2)?;
    let n = g.n();
    let (r1, r2) = (RootedTree::new(n, &tp.t1), RootedTree::new(n, &tp.t2));
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for v in u + 1..n {
            let (p1, p2) = (r1.path(u, v), r2.path(u, v));
            let e2 = path_edges(&p2);
            if let Some(&edge) = path_edges(&p1).iter().find(|e| e2.contains(e)) {
                return Ok(Verdict::fail(Witness::SharedPathEdge { u, v, edge }));
            }
            let stamp = u * n + v;
            for &w in &p1[1..p1.len() - 1] {
                mark[w] = stamp;
            }
            if let Some(&vertex) = p2[1..p2.len() - 1].iter().find(|&&w| mark[w] == stamp) {
                return Ok(Verdict::fail(Witness::SharedPathVertex { u, v, vertex }));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Edge-disjoint trees in which no vertex is internal (degree >= 2) in both.
pub fn verify_cists_leafrule(g: &Graph, tp: &TreePair) -> Result<Verdict> {
    check_spanning_tree(g, &tp.t1, 1)?;
    check_spanning_tree(g, &tp.t2, 2)?;
    if let Some(&edge) = tp.t1.iter().find(|e| tp.t2.binary_search(e).is_ok()) {
        return Ok(Verdict::fail(Witness::SharedEdge { edge }));
    }
    let degrees = |edges: &[Edge]| {
        let mut deg = vec![0usize; g.n()];
        for e in edges {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        deg
    };
    let (d1, d2) = (degrees(&tp.t1), degrees(&tp.t2));
    if let Some(vertex) = (0..g.n()).find(|&v| d1[v] >= 2 && d2[v] >= 2) {
        return Ok(Verdict::fail(Witness::InternalInBoth { vertex }));
    }
    Ok(Verdict::pass())
}
