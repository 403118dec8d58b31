use serde::Serialize;

use super::trace::{Check, Recorder};
use crate::error::{ensure, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A pair at distance two with its common-neighbour count and degree sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairStat {
    pub x: Vertex,
    pub y: Vertex,
    pub common: usize,
    pub degree_sum: usize,
}

/// All pairs at distance two, oriented so `d(x) <= d(y)` (ties: smaller id first).
pub fn distance_two_pairs(g: &Graph) -> Vec<PairStat> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let common = g.common_neighbor_count(a, b);
            if common == 0 {
                continue;
            }
            let (x, y) = if g.degree(b) < g.degree(a) {
                (b, a)
            } else {
                (a, b)
            };
            out.push(PairStat {
                x,
                y,
                common,
                degree_sum: g.degree(a) + g.degree(b),
            });
        }
    }
    out
}

/// Picks the distance-2 pair with fewest common neighbours, then largest
/// degree sum, then lexicographically least `(x, y)` with `d(x) <= d(y)`.
pub fn choose_xy(g: &Graph) -> Result<(Vertex, Vertex)> {
    distance_two_pairs(g)
        .into_iter()
        .min_by_key(|p| (p.common, std::cmp::Reverse(p.degree_sum), p.x, p.y))
        .map(|p| (p.x, p.y))
        .ok_or_else(|| Error::NotApplicable("no pair of vertices at distance two".into()))
}

/// Verifies, for every distance-2 pair, that `|N(x) ∩ N(y)| >= 2` and that
/// equality forces `N(x) ∪ N(y) = V \ {x, y}`.
pub(crate) fn check_common_neighbor_bound(g: &Graph, rec: &mut Recorder) -> Result<()> {
    let n = g.n();
    for p in distance_two_pairs(g) {
        ensure!(
            p.common >= 2,
            "pair ({}, {}) at distance two has {} common neighbours",
            p.x,
            p.y,
            p.common
        );
        if p.common == 2 {
            ensure!(
                p.degree_sum - p.common == n - 2,
                "pair ({}, {}) has two common neighbours but does not dominate the rest",
                p.x,
                p.y
            );
        }
    }
    rec.passed(Check::CommonNeighborsAtLeastTwo);
    Ok(())
}

/// The neighbourhood split around a distance-2 pair `(x, y)`:
/// common neighbours `M`, private neighbours `X` of `x` and `Y` of `y`, and
/// the remaining far vertices `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanContext {
    pub x: Vertex,
    pub y: Vertex,
    #[serde(rename = "M")]
    pub common: VertexSet,
    #[serde(rename = "X")]
    pub x_private: VertexSet,
    #[serde(rename = "Y")]
    pub y_private: VertexSet,
    #[serde(rename = "D")]
    pub far: VertexSet,
    pub m: usize,
    pub t: usize,
    pub s: usize,
    pub d: usize,
}

impl FanContext {
    pub fn new(g: &Graph, x: Vertex, y: Vertex) -> Result<Self> {
        g.check_vertex(x)?;
        g.check_vertex(y)?;
        if !g.at_distance_two(x, y) {
            return Err(Error::InvalidInput(format!(
                "{x} and {y} are not at distance two"
            )));
        }
        let common = g.common_neighbors(x, y);
        let x_private = g.neighbor_set(x).difference(&common);
        let y_private = g.neighbor_set(y).difference(&common);
        let far = (0..g.n())
            .filter(|&v| v != x && v != y && !g.has_edge(x, v) && !g.has_edge(y, v))
            .collect::<VertexSet>();
        Ok(FanContext {
            x,
            y,
            m: common.len(),
            t: x_private.len(),
            s: y_private.len(),
            d: far.len(),
            common,
            x_private,
            y_private,
            far,
        })
    }

    /// `{x, y}`.
    pub fn ends(&self) -> VertexSet {
        VertexSet::from_iter([self.x, self.y])
    }

    pub(crate) fn check_bounds(&self, rec: &mut Recorder) -> Result<()> {
        ensure!(
            self.t <= self.s,
            "|X| = {} exceeds |Y| = {}",
            self.t,
            self.s
        );
        ensure!(
            self.d + 2 <= self.m,
            "|D| = {} exceeds |M| - 2 = {}",
            self.d,
            self.m as isize - 2
        );
        rec.passed(Check::FarSetBounded);
        Ok(())
    }

    pub fn relabel(&self, labels: &[usize]) -> Self {
        FanContext {
            x: labels[self.x],
            y: labels[self.y],
            common: self.common.relabel(labels),
            x_private: self.x_private.relabel(labels),
            y_private: self.y_private.relabel(labels),
            far: self.far.relabel(labels),
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k7_minus_01() -> Graph {
        let edges = (0..7).flat_map(|u| (u + 1..7).map(move |v| (u, v)));
        Graph::from_edges(7, edges.filter(|&e| e != (0, 1))).unwrap()
    }

    #[test]
    fn unique_pair_in_k7_minus_edge() {
        let g = k7_minus_01();
        assert_eq!(choose_xy(&g).unwrap(), (0, 1));
        let ctx = FanContext::new(&g, 0, 1).unwrap();
        assert_eq!(ctx.m, 5);
        assert!(ctx.x_private.is_empty() && ctx.y_private.is_empty() && ctx.far.is_empty());
    }

    #[test]
    fn c5_tie_breaks_lexicographically() {
        assert_eq!(choose_xy(&cycle(5)).unwrap(), (0, 2));
    }

    #[test]
    fn complete_graph_has_no_pair() {
        let k5 =
            Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(matches!(choose_xy(&k5), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn orientation_puts_smaller_degree_first() {
        // 0 - 1 - 2 with 2 also adjacent to 3.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let pairs = distance_two_pairs(&g);
        assert!(pairs.iter().any(|p| (p.x, p.y) == (0, 2)));
        assert!(pairs.iter().any(|p| (p.x, p.y) == (3, 1)));
    }

    #[test]
    fn context_partitions_the_vertices() {
        let g = cycle(6);
        let ctx = FanContext::new(&g, 0, 2).unwrap();
        assert_eq!(ctx.common.as_slice(), &[1]);
        assert_eq!(ctx.x_private.as_slice(), &[5]);
        assert_eq!(ctx.y_private.as_slice(), &[3]);
        assert_eq!(ctx.far.as_slice(), &[4]);
        assert!(FanContext::new(&g, 0, 3).is_err());
        let mut rec = Recorder::default();
        assert!(ctx.check_bounds(&mut rec).is_err());
    }
}
