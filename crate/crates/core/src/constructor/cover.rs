//! Exact minimum cover of the far set `D` by vertices of `M ∪ Y`.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::Serialize;

use super::trace::{Check, Recorder};
use super::FanContext;
use crate::error::{ensure, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The chosen cover `S` with one distinct `D`-neighbour per member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSet {
    pub s_set: VertexSet,
    pub representatives: BTreeMap<Vertex, Vertex>,
}

/// Ranking of covers: smaller first, then more vertices of `M`, then lexicographic.
fn cover_key(s: &[Vertex], common: &VertexSet) -> (usize, Reverse<usize>, Vec<Vertex>) {
    let in_common = s.iter().filter(|&&v| common.contains(v)).count();
    (s.len(), Reverse(in_common), s.to_vec())
}

struct Search<'a> {
    /// For each far vertex (by index), the candidates adjacent to it.
    covering: Vec<Vec<Vertex>>,
    /// For each candidate, the far-vertex indices it covers.
    covers: BTreeMap<Vertex, Vec<usize>>,
    common: &'a VertexSet,
    count: Vec<usize>,
    chosen: Vec<Vertex>,
    best: Option<Vec<Vertex>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let Some(open) = self.count.iter().position(|&c| c == 0) else {
            let mut s = self.chosen.clone();
            s.sort_unstable();
            let better = match &self.best {
                None => true,
                Some(b) => cover_key(&s, self.common) < cover_key(b, self.common),
            };
            if better {
                self.best = Some(s);
            }
            return;
        };
        if let Some(b) = &self.best {
            if self.chosen.len() + 1 > b.len() {
                return;
            }
        }
        for cand in self.covering[open].clone() {
            if self.chosen.contains(&cand) {
                continue;
            }
            self.chosen.push(cand);
            for &i in &self.covers[&cand] {
                self.count[i] += 1;
            }
            self.run();
            for &i in &self.covers[&cand] {
                self.count[i] -= 1;
            }
            self.chosen.pop();
        }
    }
}

/// Kuhn's augmenting-path matching from `left` into `right`.
pub(crate) fn bipartite_matching(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> BTreeMap<Vertex, Vertex> {
    fn try_match(
        g: &Graph,
        u: Vertex,
        right: &VertexSet,
        seen: &mut Vec<Vertex>,
        owner: &mut BTreeMap<Vertex, Vertex>,
    ) -> bool {
        for &w in g.neighbors(u) {
            if !right.contains(w) || seen.contains(&w) {
                continue;
            }
            seen.push(w);
            let free = match owner.get(&w) {
                None => true,
                Some(&prev) => try_match(g, prev, right, seen, owner),
            };
            if free {
                owner.insert(w, u);
                return true;
            }
        }
        false
    }
    let mut owner = BTreeMap::new();
    for u in left.iter() {
        try_match(g, u, right, &mut Vec::new(), &mut owner);
    }
    owner.into_iter().map(|(w, u)| (u, w)).collect()
}

/// Chooses `S ⊆ M ∪ Y` dominating `D`: minimum size, then as many vertices
/// of `M` as possible, then lexicographically least.
pub fn select_cover_s(g: &Graph, ctx: &FanContext) -> Result<CoverSet> {
    let mut rec = Recorder::default();
    select_cover_recorded(g, ctx, &mut rec)
}

pub(crate) fn select_cover_recorded(
    g: &Graph,
    ctx: &FanContext,
    rec: &mut Recorder,
) -> Result<CoverSet> {
    ensure!(ctx.m >= 3, "cover selection needs |M| >= 3, got {}", ctx.m);
    ensure!(
        !ctx.y_private.is_empty(),
        "cover selection needs Y nonempty"
    );
    ensure!(!ctx.far.is_empty(), "cover selection needs D nonempty");
    let pool = ctx.common.union(&ctx.y_private);
    check_far_reach(g, ctx, rec)?;

    let covering: Vec<Vec<Vertex>> = ctx
        .far
        .iter()
        .map(|v| g.neighbors_in(v, &pool).iter().collect())
        .collect();
    let mut covers: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, cands) in covering.iter().enumerate() {
        for &c in cands {
            covers.entry(c).or_default().push(i);
        }
    }
    let mut search = Search {
        covering,
        covers,
        common: &ctx.common,
        count: vec![0; ctx.d],
        chosen: Vec::new(),
        best: None,
    };
    search.run();
    let s_set: VertexSet = search.best.unwrap_or_default().into_iter().collect();
    ensure!(!s_set.is_empty(), "no cover of D found");

    // Each member keeps a private D-neighbour, and S has distinct representatives.
    for a in s_set.iter() {
        let na = g.neighbors_in(a, &ctx.far);
        for b in s_set.iter().filter(|&b| b != a) {
            let nb = g.neighbors_in(b, &ctx.far);
            ensure!(
                !na.is_subset(&nb),
                "cover vertex {a} has D-neighbourhood inside that of {b}"
            );
        }
    }
    let representatives = bipartite_matching(g, &s_set, &ctx.far);
    ensure!(
        representatives.len() == s_set.len(),
        "cover {} has no system of distinct representatives in D",
        s_set
    );
    ensure!(
        s_set.len() <= ctx.d && ctx.d + 2 <= ctx.m,
        "|S| = {} <= |D| = {} <= |M| - 2 fails",
        s_set.len(),
        ctx.d
    );
    rec.passed(Check::CoverHallCondition);
    Ok(CoverSet {
        s_set,
        representatives,
    })
}

/// Every far vertex has a neighbour in `M ∪ Y`.
pub(crate) fn check_far_reach(g: &Graph, ctx: &FanContext, rec: &mut Recorder) -> Result<()> {
    let pool = ctx.common.union(&ctx.y_private);
    if let Some(v) = ctx.far.iter().find(|&v| !g.has_neighbor_in(v, &pool)) {
        ensure!(false, "far vertex {v} has no neighbour in M ∪ Y");
    }
    rec.passed(Check::FarVerticesReachCommonOrY);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Context with `x = 0`, `y = 1`, given `M`, `Y`, `D` and extra edges.
    /// Built by hand so the graph need not satisfy the degree condition.
    fn ctx_for(
        n: usize,
        common: &[Vertex],
        y_priv: &[Vertex],
        far: &[Vertex],
        extra: &[(Vertex, Vertex)],
    ) -> (Graph, FanContext) {
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for &u in common {
            edges.push((0, u));
            edges.push((1, u));
        }
        for &u in y_priv {
            edges.push((1, u));
        }
        edges.extend_from_slice(extra);
        let g = Graph::from_edges(n, edges).unwrap();
        let ctx = FanContext::new(&g, 0, 1).unwrap();
        assert_eq!(ctx.far.as_slice(), far);
        (g, ctx)
    }

    #[test]
    fn unique_cover() {
        // M = {2, 3, 5}, Y = {4}, D = {6}; only 4 sees 6.
        let (g, ctx) = ctx_for(7, &[2, 3, 5], &[4], &[6], &[(4, 6)]);
        let cover = select_cover_s(&g, &ctx).unwrap();
        assert_eq!(cover.s_set.as_slice(), &[4]);
        assert_eq!(cover.representatives[&4], 6);
    }

    #[test]
    fn smaller_cover_wins() {
        // M = {2, 3, 7, 8}, Y = {4}, D = {5, 6}; 2 sees 5, 4 sees 5 and 6.
        let (g, ctx) = ctx_for(9, &[2, 3, 7, 8], &[4], &[5, 6], &[(2, 5), (4, 5), (4, 6)]);
        assert_eq!(select_cover_s(&g, &ctx).unwrap().s_set.as_slice(), &[4]);
    }

    #[test]
    fn ties_prefer_common_neighbours() {
        // M = {2, 3, 6}, Y = {4}, D = {5}; both 2 and 4 see 5.
        let (g, ctx) = ctx_for(7, &[2, 3, 6], &[4], &[5], &[(2, 5), (4, 5)]);
        assert_eq!(select_cover_s(&g, &ctx).unwrap().s_set.as_slice(), &[2]);
    }

    #[test]
    fn unreachable_far_vertex_is_an_invariant_violation() {
        // 5 hangs off X only.
        let (g, ctx) = {
            let edges = vec![
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (0, 6),
                (1, 6),
                (1, 4),
                (0, 7),
                (7, 5),
            ];
            let g = Graph::from_edges(8, edges).unwrap();
            let c = FanContext::new(&g, 0, 1).unwrap();
            (g, c)
        };
        assert_eq!(ctx.far.as_slice(), &[5]);
        assert!(matches!(
            select_cover_s(&g, &ctx),
            Err(crate::Error::InternalInvariantViolation(_))
        ));
    }

    #[test]
    fn matching_is_maximum() {
        // Path 0-1-2-3: left {0, 2}, right {1, 3}.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = bipartite_matching(
            &g,
            &VertexSet::from_iter([0, 2]),
            &VertexSet::from_iter([1, 3]),
        );
        assert_eq!(m.len(), 2);
    }
}
