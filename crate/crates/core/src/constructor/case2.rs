//! `(x, y)` with at least three common neighbours.
//!
//! Vertices of `M` are named `u1 < u2 < ...` and those of `D` `v1 < v2 < ...`.

use super::cover::{bipartite_matching, check_far_reach, select_cover_recorded};
use super::trace::{Check, Recorder};
use super::{check_cross_cycle, finish, Branch, ConstructionTrace, FanContext, WitnessValue};
use crate::cist::CistPartition;
use crate::error::{ensure, Result};
use crate::graph::{vertex_connectivity, Graph, Vertex, VertexSet};

type Built = (CistPartition, ConstructionTrace);

pub fn case2_construct(g: &Graph, ctx: &FanContext) -> Result<Built> {
    let mut rec = Recorder::default();
    ensure!(ctx.m >= 3, "case 2 needs |M| >= 3, got {}", ctx.m);
    let kappa = vertex_connectivity(g)?;
    ensure!(
        kappa >= ctx.m,
        "connectivity {kappa} is below |M| = {}",
        ctx.m
    );
    rec.passed(Check::ConnectivityAtLeastCommon);

    let (x, y) = (ctx.x, ctx.y);
    let m = ctx.m;
    let us = ctx.common.as_slice();

    if ctx.far.is_empty() {
        let side = ctx.ends().union(&ctx.common.take(m - 2));
        if g.is_separating(&side) {
            return claim34_recorded(g, &side, ctx, rec);
        }
        let p = CistPartition::from_side(g, side);
        check_cross_cycle(g, &p, &[x, us[m - 2], y, us[m - 1]], &mut rec)?;
        return finish(g, p, Branch::Case2DEmpty, Some(ctx.clone()), rec);
    }

    check_far_reach(g, ctx, &mut rec)?;
    if ctx.y_private.is_empty() {
        return empty_private(g, ctx, rec);
    }

    let cover = select_cover_recorded(g, ctx, &mut rec)?;
    let s = &cover.s_set;
    rec.set("S", s);
    let outside_s = ctx.common.difference(s);

    if !s.is_disjoint(&ctx.common) {
        let side = ctx.ends().union(s);
        if g.is_separating(&side) {
            ensure!(
                side.len() == m,
                "separating {side} has size {} != |M|",
                side.len()
            );
            return claim34_recorded(g, &side, ctx, rec);
        }
        ensure!(
            outside_s.len() >= 2,
            "fewer than two common neighbours outside S"
        );
        let o = outside_s.as_slice();
        let p = CistPartition::from_side(g, side);
        check_cross_cycle(g, &p, &[x, o[0], y, o[1]], &mut rec)?;
        return finish(g, p, Branch::Case2Sub221, Some(ctx.clone()), rec);
    }

    // S ⊆ Y from here on.
    let u1 = us[0];
    rec.vertex("u1", u1);
    let side = VertexSet::from_iter([x, y, u1]).union(s);
    let near = ctx.x_private.union(&ctx.y_private).union(&ctx.common);
    for a in s.iter() {
        let k = g.neighbors_in(a, &near).len();
        ensure!(
            k > s.len(),
            "cover vertex {a} has {k} neighbours in X ∪ Y ∪ M, need more than {}",
            s.len()
        );
    }
    rec.passed(Check::CoverVerticesWellConnected);
    let cycle = [x, us[1], y, us[2]];

    if s.len() + 3 <= m {
        if g.is_separating(&side) {
            ensure!(
                side.len() == m,
                "separating {side} has size {} != |M|",
                side.len()
            );
            return claim34_recorded(g, &side, ctx, rec);
        }
    } else {
        ensure!(
            s.len() == m - 2 && ctx.d == m - 2,
            "|S| = {} and |D| = {} are not both |M| - 2",
            s.len(),
            ctx.d
        );
        let matching = bipartite_matching(g, s, &ctx.far);
        let perfect = matching.len() == s.len()
            && s.iter().all(|a| g.neighbors_in(a, &ctx.far).len() == 1)
            && ctx.far.iter().all(|v| g.neighbors_in(v, s).len() == 1);
        ensure!(perfect, "B(S, D) is not a perfect matching");
        if let Some(v) = ctx.far.iter().find(|&v| g.has_neighbor_in(v, &ctx.common)) {
            ensure!(false, "far vertex {v} has a neighbour in M");
        }
        rec.passed(Check::CoverIsMatching);
        for yi in s.iter() {
            let cut = side.without(yi);
            if g.is_separating(&cut) {
                rec.vertex("yi", yi);
                let (p, mut trace) = claim34_recorded(g, &cut, ctx, rec)?;
                let variant = WitnessValue::Note(trace.branch.label().into());
                trace.witnesses.insert("variant".into(), variant);
                trace.branch = Branch::Case2Sub222Claim34;
                return Ok((p, trace));
            }
        }
    }
    let p = CistPartition::from_side(g, side);
    check_cross_cycle(g, &p, &cycle, &mut rec)?;
    finish(g, p, Branch::Case2Sub222Direct, Some(ctx.clone()), rec)
}

/// `Y = ∅` with `D` nonempty.
fn empty_private(g: &Graph, ctx: &FanContext, mut rec: Recorder) -> Result<Built> {
    let (x, y) = (ctx.x, ctx.y);
    let us = ctx.common.as_slice();
    let vs = ctx.far.as_slice();
    ensure!(
        ctx.x_private.is_empty(),
        "Y is empty but X = {} is not",
        ctx.x_private
    );
    ensure!(ctx.m >= 4, "Y is empty but |M| = {} < 4", ctx.m);
    for &v in vs {
        ensure!(
            !g.has_neighbor_in(v, &ctx.far),
            "far vertex {v} has a neighbour in D"
        );
        ensure!(
            ctx.common.is_subset(&g.neighbor_set(v)),
            "far vertex {v} misses part of M"
        );
    }
    rec.passed(Check::EmptyPrivateShape);
    let v1 = vs[0];
    rec.vertex("v1", v1);

    if vs.len() >= 2 {
        let v2 = vs[1];
        rec.vertex("v2", v2);
        let side = VertexSet::from_iter([x, us[0], us[1], v1]);
        let p = CistPartition::from_side(g, side);
        check_cross_cycle(g, &p, &[x, us[2], v1, us[3]], &mut rec)?;
        check_cross_cycle(g, &p, &[y, us[0], v2, us[1]], &mut rec)?;
        return finish(g, p, Branch::Case2Sub21DGe2, Some(ctx.clone()), rec);
    }

    let edge = us
        .iter()
        .flat_map(|&a| us.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| a < b && g.has_edge(a, b));
    ensure!(edge.is_some(), "M = {} is independent", ctx.common);
    let (ui, uj) = edge.unwrap_or_default();
    let uk = us
        .iter()
        .copied()
        .find(|&u| u != ui && u != uj)
        .unwrap_or_default();
    rec.vertex("ui", ui);
    rec.vertex("uj", uj);
    let p = CistPartition::from_side(g, VertexSet::from_iter([x, ui, v1]));
    check_cross_cycle(g, &p, &[x, uj, v1, uk], &mut rec)?;
    finish(g, p, Branch::Case2Sub21DEq1, Some(ctx.clone()), rec)
}

/// Partition from an `|M|`-cut `cut` that contains `x` and `y`.
pub fn claim34_construct(g: &Graph, cut: &VertexSet, ctx: &FanContext) -> Result<Built> {
    claim34_recorded(g, cut, ctx, Recorder::default())
}

fn claim34_recorded(
    g: &Graph,
    cut: &VertexSet,
    ctx: &FanContext,
    mut rec: Recorder,
) -> Result<Built> {
    let n = g.n();
    let (x, y, m) = (ctx.x, ctx.y, ctx.m);
    ensure!(
        cut.contains(x) && cut.contains(y),
        "cut {cut} does not contain both {x} and {y}"
    );
    ensure!(
        cut.len() == m,
        "cut {cut} has size {} != |M| = {m}",
        cut.len()
    );
    ensure!(g.is_separating(cut), "{cut} does not separate the graph");
    let kappa = vertex_connectivity(g)?;
    ensure!(kappa == m, "connectivity {kappa} differs from |M| = {m}");
    let rest = cut.complement(n);
    ensure!(
        rest.is_subset(&ctx.common),
        "vertices outside {cut} are not all in M"
    );
    ensure!(2 * m >= n && m >= 4, "|M| = {m} is below max(n/2, 4)");
    rec.passed(Check::SeparatorShape);
    rec.set("U", cut);

    let (u1, u2) = (rest.as_slice()[0], rest.as_slice()[1]);
    rec.vertex("u1", u1);
    rec.vertex("u2", u2);
    let meet = cut.intersection(&ctx.common);

    if meet.is_empty() {
        ensure!(rest == ctx.common, "cut misses M but V \\ U != M");
        let inner = cut.without(x).without(y);
        let (a1, a2) = (inner.as_slice()[0], inner.as_slice()[1]);
        let others = ctx.common.without(u1).without(u2);
        let (u3, u4) = (others.as_slice()[0], others.as_slice()[1]);
        for (k, v) in [("a1", a1), ("a2", a2), ("u3", u3), ("u4", u4)] {
            rec.vertex(k, v);
        }
        let p = CistPartition::from_side(g, VertexSet::from_iter([x, y, u1, u2]));
        check_cross_cycle(g, &p, &[x, u3, y, u4], &mut rec)?;
        check_cross_cycle(g, &p, &[u1, a1, u2, a2], &mut rec)?;
        return finish(
            g,
            p,
            Branch::Case2Claim34MDisjointCut,
            Some(ctx.clone()),
            rec,
        );
    }

    let u3 = meet.as_slice()[0];
    let u4 = ctx.common.without(u1).without(u2).without(u3).first();
    ensure!(u4.is_some(), "M has fewer than four vertices");
    let u4 = u4.unwrap_or_default();
    rec.vertex("u3", u3);
    rec.vertex("u4", u4);
    let p = CistPartition::from_side(g, VertexSet::from_iter([x, u1, u3]));
    let cycle: Vec<Vertex> = if cut.contains(u4) {
        vec![x, u2, u3, y, u1, u4]
    } else {
        vec![x, u2, u3, u4]
    };
    check_cross_cycle(g, &p, &cycle, &mut rec)?;
    finish(g, p, Branch::Case2Claim34MMeetsCut, Some(ctx.clone()), rec)
}
