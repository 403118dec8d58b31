//! Exact vertex connectivity by unit-capacity max-flow on the split graph.

use std::collections::VecDeque;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Residual network where every vertex `v` becomes `v_in = 2v` and
/// `v_out = 2v + 1` joined by a unit arc.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: Vertex, t: Vertex) -> Self {
        let n = g.n();
        let big = n as u32;
        let mut net = SplitNetwork {
            head: Vec::with_capacity(4 * (n + 2 * g.edge_count())),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for e in g.edges() {
            net.arc(2 * e.u() + 1, 2 * e.v(), big);
            net.arc(2 * e.v() + 1, 2 * e.u(), big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, c: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(c);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// One BFS augmenting path of unit flow; false when none exists.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::from([source]);
        let mut reached = vec![false; self.out.len()];
        reached[source] = true;
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &a in &self.out[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && !reached[w] {
                    reached[w] = true;
                    via[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !reached[sink] {
            return false;
        }
        let mut w = sink;
        while w != source {
            let a = via[w];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            w = self.head[a ^ 1];
        }
        true
    }
}

/// Size of a minimum `s`–`t` vertex separator for nonadjacent `s != t`,
/// computed only up to `limit` (the result is `min(true size, limit)`).
pub fn min_vertex_cut_size(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> Result<usize> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t || g.has_edge(s, t) {
        return Err(Error::InvalidInput(format!(
            "{s} and {t} must be distinct and nonadjacent"
        )));
    }
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment(2 * s + 1, 2 * t) {
        flow += 1;
    }
    Ok(flow)
}

/// κ(G): `n - 1` for complete graphs, 0 when disconnected.
///
/// Some vertex among the first κ+1 lies outside a minimum separator, so only
/// sources `0..=best` need to be tried.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "vertex connectivity needs n >= 2, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    let mut source = 0;
    while source <= best && source < n {
        for target in source + 1..n {
            if g.has_edge(source, target) {
                continue;
            }
            best = best.min(min_vertex_cut_size(g, source, target, best)?);
        }
        source += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn complete_graph_convention() {
        assert_eq!(vertex_connectivity(&complete(7)).unwrap(), 6);
        assert_eq!(vertex_connectivity(&complete(2)).unwrap(), 1);
    }

    #[test]
    fn cycle_is_two_connected() {
        assert_eq!(vertex_connectivity(&cycle(5)).unwrap(), 2);
    }

    #[test]
    fn disconnected_and_tiny() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
        let one = Graph::from_edges(1, []).unwrap();
        assert!(matches!(
            vertex_connectivity(&one),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn cut_vertex_between_cliques() {
        // K3 and K3 glued through apex 6.
        let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
        edges.extend((0..6).map(|v| (v, 6)));
        let g = Graph::from_edges(7, edges).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 1);
        assert_eq!(min_vertex_cut_size(&g, 0, 3, 10).unwrap(), 1);
        assert!(min_vertex_cut_size(&g, 0, 1, 10).is_err());
    }
}
