//! `(x, y)` with exactly two common neighbours.

use super::trace::{Check, Recorder};
use super::{check_cross_cycle, finish, Branch, ConstructionTrace, FanContext};
use crate::cist::CistPartition;
use crate::error::{ensure, Result};
use crate::graph::{Graph, VertexSet};

/// Partition when `M = {u1, u2}`.
///
/// `u1` is the common neighbour of degree at least 4 (the smaller id if both
/// qualify). Unless `d(u2) = 3` and `u1 u2` is an edge, `V1 = {x, y, u1}`;
/// in that last case `V1 = {y, u1}`.
pub fn case1_construct(g: &Graph, ctx: &FanContext) -> Result<(CistPartition, ConstructionTrace)> {
    let mut rec = Recorder::default();
    ensure!(ctx.m == 2, "case 1 needs |M| = 2, got {}", ctx.m);
    ensure!(
        ctx.far.is_empty(),
        "|M| = 2 but D = {} is nonempty",
        ctx.far
    );
    ensure!(!ctx.x_private.is_empty(), "|M| = 2 but X is empty");
    rec.passed(Check::CommonPairShape);

    let (x, y) = (ctx.x, ctx.y);
    let pair = ctx.common.as_slice();
    let u1 = pair.iter().copied().find(|&u| g.degree(u) >= 4);
    ensure!(
        u1.is_some(),
        "neither common neighbour of {x}, {y} has degree 4"
    );
    let u1 = u1.unwrap_or_default();
    let u2 = if pair[0] == u1 { pair[1] } else { pair[0] };
    ensure!(
        g.degree(u2) >= 3,
        "common neighbour {u2} has degree {}",
        g.degree(u2)
    );
    rec.passed(Check::CommonPairHasDegreeFour);
    rec.vertex("u1", u1);
    rec.vertex("u2", u2);

    if g.degree(u2) == 3 && g.has_edge(u1, u2) {
        return saturated(g, ctx, u1, u2, rec);
    }

    let hub = VertexSet::from_iter([x, y, u1]);
    ensure!(!g.is_separating(&hub), "{hub} separates the graph");
    rec.passed(Check::HubTripleNotSeparating);
    let p = CistPartition::from_side(g, hub);

    let on_x = g.neighbors_in(u1, &ctx.x_private);
    let on_y = g.neighbors_in(u1, &ctx.y_private);
    let cycle = match (on_x.as_slice(), on_y.as_slice()) {
        ([x1, x2, ..], _) => vec![x, *x1, u1, *x2],
        (_, [y1, y2, ..]) => vec![y, *y1, u1, *y2],
        ([x1], [y1]) => vec![x, *x1, u1, *y1, y, u2],
        ([x1], []) => vec![x, *x1, u1, u2],
        // The source states this case with the hypotheses of the one above;
        // taken here as its mirror image.
        ([], [y1]) => vec![y, *y1, u1, u2],
        _ => Vec::new(),
    };
    check_cross_cycle(g, &p, &cycle, &mut rec)?;
    let branch = if g.degree(u2) >= 4 {
        Branch::Case1Sub11
    } else {
        Branch::Case1Sub12
    };
    finish(g, p, branch, Some(ctx.clone()), rec)
}

/// `d(u2) = 3` with `u1 u2` an edge: every private neighbour sees all but
/// the far end and `u2`, and `u1` is universal.
fn saturated(
    g: &Graph,
    ctx: &FanContext,
    u1: usize,
    u2: usize,
    mut rec: Recorder,
) -> Result<(CistPartition, ConstructionTrace)> {
    let (x, y) = (ctx.x, ctx.y);
    let n = g.n();
    let all = VertexSet::range(n);
    ensure!(
        g.neighbor_set(u2) == VertexSet::from_iter([x, y, u1]),
        "N({u2}) is not {{x, y, u1}}"
    );
    for xi in ctx.x_private.iter() {
        ensure!(
            g.neighbor_set(xi) == all.without(xi).without(y).without(u2),
            "private neighbour {xi} of x is not saturated"
        );
    }
    for yj in ctx.y_private.iter() {
        ensure!(
            g.neighbor_set(yj) == all.without(yj).without(x).without(u2),
            "private neighbour {yj} of y is not saturated"
        );
    }
    ensure!(g.degree(u1) == n - 1, "{u1} is not universal");
    rec.passed(Check::SaturatedNeighborhoods);

    ensure!(!ctx.y_private.is_empty(), "Y is empty");
    let y1 = ctx.y_private.as_slice()[0];
    rec.vertex("y1", y1);
    let p = CistPartition::from_side(g, VertexSet::from_iter([y, u1]));
    check_cross_cycle(g, &p, &[y, y1, u1, u2], &mut rec)?;
    finish(g, p, Branch::Case1Sub13, Some(ctx.clone()), rec)
}
