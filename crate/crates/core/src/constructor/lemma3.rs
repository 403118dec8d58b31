//! Graphs of connectivity exactly two.
//!
//! Removing a 2-cut `{u, v}` leaves two components `G1` (the smaller) and
//! `G2`. Under the degree condition every vertex of a component touching the
//! cut sees both cut vertices and its whole component, which makes the
//! swaps below valid.

use super::trace::{Check, Recorder};
use super::{check_cross_cycle, finish, Branch, ConstructionTrace};
use crate::cist::CistPartition;
use crate::error::{ensure, Result};
use crate::graph::{mu2, Graph, Vertex, VertexSet, MIN_ORDER};

/// Partition for a graph with 2-cut `cut`.
///
/// With `|G1| >= 2`: `V1 = {u, y1} ∪ G1 \ {x1}`. With `|G1| = 1`:
/// `V1 = {u, x1, y1}`. Here `x1 < x2` and `y1 < y2 < y3` are the smallest
/// cut-adjacent vertices of `G1` and `G2`.
pub fn lemma3_construct(
    g: &Graph,
    cut: (Vertex, Vertex),
) -> Result<(CistPartition, ConstructionTrace)> {
    let n = g.n();
    let (u, v) = (cut.0.min(cut.1), cut.0.max(cut.1));
    ensure!(
        u != v && v < n,
        "cut ({}, {}) is not a pair of vertices",
        cut.0,
        cut.1
    );
    ensure!(
        n >= MIN_ORDER && mu2(g).at_least(n),
        "2-cut construction needs n >= {MIN_ORDER} and mu2 >= n"
    );
    let mut rec = Recorder::default();
    let cut_set = VertexSet::from_iter([u, v]);
    let comps = g.components(&cut_set.complement(n));
    ensure!(
        comps.len() == 2,
        "removing {cut_set} leaves {} components, expected 2",
        comps.len()
    );
    rec.passed(Check::TwoCutLeavesTwoComponents);
    let (small, large) = if comps[1].len() < comps[0].len() {
        (&comps[1], &comps[0])
    } else {
        (&comps[0], &comps[1])
    };

    let attached = |side: &VertexSet| -> VertexSet {
        side.iter()
            .filter(|&w| g.has_edge(w, u) || g.has_edge(w, v))
            .collect()
    };
    let (att_small, att_large) = (attached(small), attached(large));
    for (side, att) in [(small, &att_small), (large, &att_large)] {
        for a in att.iter() {
            ensure!(
                g.has_edge(a, u)
                    && g.has_edge(a, v)
                    && side.without(a).is_subset(&g.neighbor_set(a)),
                "vertex {a} touches the cut but is not universal to its side"
            );
        }
    }
    rec.passed(Check::CutSideAttachmentsUniversal);
    ensure!(
        att_large.len() >= 2,
        "large side {large} has fewer than two cut-adjacent vertices"
    );

    rec.vertex("u", u);
    rec.vertex("v", v);
    rec.set("G1", small);
    rec.set("G2", large);
    let (y1, y2) = (att_large.as_slice()[0], att_large.as_slice()[1]);
    rec.vertex("y1", y1);
    rec.vertex("y2", y2);

    if small.len() >= 2 {
        ensure!(
            att_small.len() >= 2,
            "small side {small} has fewer than two cut-adjacent vertices"
        );
        let (x1, x2) = (att_small.as_slice()[0], att_small.as_slice()[1]);
        rec.vertex("x1", x1);
        rec.vertex("x2", x2);
        let side = small.without(x1).with(u).with(y1);
        let p = CistPartition::from_side(g, side);
        check_cross_cycle(g, &p, &[u, x1, x2, v, y1, y2], &mut rec)?;
        return finish(g, p, Branch::Kappa2BigSide, None, rec);
    }

    let x1 = small.as_slice()[0];
    ensure!(
        large.len() >= 4,
        "singleton side opposite a side of {} vertices",
        large.len()
    );
    rec.vertex("x1", x1);
    let p = CistPartition::from_side(g, VertexSet::from_iter([u, x1, y1]));
    if g.has_edge(u, v) {
        check_cross_cycle(g, &p, &[u, y2, y1, v], &mut rec)?;
        finish(g, p, Branch::Kappa2SingletonUvEdge, None, rec)
    } else {
        let y3 = att_large.iter().find(|&w| w != y1 && w != y2);
        ensure!(y3.is_some(), "no third cut-adjacent vertex in {large}");
        let y3 = y3.unwrap_or_default();
        rec.vertex("y3", y3);
        check_cross_cycle(g, &p, &[u, y2, y1, y3], &mut rec)?;
        finish(g, p, Branch::Kappa2SingletonNoUvEdge, None, rec)
    }
}
