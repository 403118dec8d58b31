//! Degree-sum parameters σ₂ and μ₂ and the summary report built on them.

use serde::Serialize;

use super::{vertex_connectivity, Ext, Graph};

/// Smallest order for which the construction applies.
pub const MIN_ORDER: usize = 7;

fn min_degree_sum(g: &Graph, keep: impl Fn(usize, usize) -> bool) -> Ext {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| keep(u, v))
        .map(|(u, v)| g.degree(u) + g.degree(v))
        .min()
        .map_or(Ext::Infinite, Ext::Finite)
}

/// μ₂: least `d(u) + d(v)` over pairs at distance exactly two.
pub fn mu2(g: &Graph) -> Ext {
    min_degree_sum(g, |u, v| g.at_distance_two(u, v))
}

/// σ₂: least `d(u) + d(v)` over nonadjacent pairs.
pub fn sigma2(g: &Graph) -> Ext {
    min_degree_sum(g, |u, v| !g.has_edge(u, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub n: usize,
    pub m_edges: usize,
    pub min_degree: usize,
    pub sigma2: Ext,
    pub mu2: Ext,
    pub is_connected: bool,
    pub kappa: usize,
    pub fan_ok: bool,
}

impl ConditionReport {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mu2 = mu2(g);
        let is_connected = g.is_connected();
        ConditionReport {
            n,
            m_edges: g.edge_count(),
            min_degree: g.min_degree().unwrap_or(0),
            sigma2: sigma2(g),
            mu2,
            is_connected,
            kappa: vertex_connectivity(g).unwrap_or(0),
            fan_ok: is_connected && n >= MIN_ORDER && mu2.at_least(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    #[test]
    fn mu2_examples() {
        assert_eq!(mu2(&complete(7)), Ext::Infinite);
        assert_eq!(mu2(&k33()), Ext::Finite(6));
        assert_eq!(mu2(&c5()), Ext::Finite(4));
    }

    #[test]
    fn sigma2_examples() {
        assert_eq!(sigma2(&complete(7)), Ext::Infinite);
        assert_eq!(sigma2(&k33()), Ext::Finite(6));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(sigma2(&p3), Ext::Finite(2));
    }

    #[test]
    fn mu2_ignores_far_pairs() {
        // Path 0-1-2-3: the only distance-2 pairs are (0,2) and (1,3).
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(mu2(&p4), Ext::Finite(3));
        assert_eq!(sigma2(&p4), Ext::Finite(2));
    }

    #[test]
    fn report_conjuncts() {
        let r = ConditionReport::compute(&complete(7));
        assert!(r.fan_ok);
        assert_eq!(r.kappa, 6);
        assert_eq!(r.min_degree, 6);
        let r = ConditionReport::compute(&k33());
        assert!(!r.fan_ok);
        assert!(r.is_connected && r.mu2 == Ext::Finite(6));
        let disconnected = Graph::from_edges(8, [(0, 1)]).unwrap();
        let r = ConditionReport::compute(&disconnected);
        assert!(!r.is_connected && !r.fan_ok && r.kappa == 0);
    }
}
