//! Builds a 2-CIST-partition for any connected graph with `n >= 7` and
//! μ₂(G) >= n by following the case analysis of the existence proof.
//!
//! Dispatch: complete graphs are split in half; graphs with a 2-cut use the
//! cut directly; otherwise a distance-2 pair `(x, y)` with fewest common
//! neighbours (then largest degree sum) is chosen and the neighbourhood
//! split `M, X, Y, D` around it decides the branch. Every structural fact a
//! branch relies on is checked while it runs, and the final partition is
//! re-validated before it is returned.

mod case1;
mod case2;
mod context;
mod cover;
mod lemma3;
mod trace;

use crate::cist::{is_cist_partition, CistPartition};
use crate::error::{ensure, Conjunct, Error, Result};
use crate::graph::{mu2, vertex_connectivity, Graph, Vertex, VertexSet, MIN_ORDER};

pub use case1::case1_construct;
pub use case2::{case2_construct, claim34_construct};
pub use context::{choose_xy, distance_two_pairs, FanContext, PairStat};
pub use cover::{select_cover_s, CoverSet};
pub use lemma3::lemma3_construct;
pub use trace::{coverage_report, Branch, Check, ConstructionTrace, WitnessValue};

use trace::Recorder;

/// Fails with the first unmet conjunct of: connected, `n >= 7`, μ₂ >= n.
pub fn check_preconditions(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::PreconditionFailed(Conjunct::Connected));
    }
    if g.n() < MIN_ORDER {
        return Err(Error::PreconditionFailed(Conjunct::MinOrder));
    }
    if !mu2(g).at_least(g.n()) {
        return Err(Error::PreconditionFailed(Conjunct::Mu2AtLeastN));
    }
    Ok(())
}

/// Lexicographically least pair `{u, v}` whose removal disconnects `g`.
pub fn least_two_cut(g: &Graph) -> Option<(Vertex, Vertex)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| g.is_separating(&VertexSet::from_iter([u, v])))
}

pub fn construct(g: &Graph) -> Result<(CistPartition, ConstructionTrace)> {
    check_preconditions(g)?;
    if g.is_complete() {
        let side = VertexSet::range(g.n() / 2);
        return finish(
            g,
            CistPartition::from_side(g, side),
            Branch::Complete,
            None,
            Recorder::default(),
        );
    }
    let kappa = vertex_connectivity(g)?;
    ensure!(
        kappa >= 2,
        "graph meeting the degree condition has connectivity {kappa}"
    );
    if kappa == 2 {
        let cut = least_two_cut(g);
        ensure!(cut.is_some(), "connectivity is 2 but no 2-cut was found");
        return lemma3_construct(g, cut.unwrap_or_default());
    }

    let mut rec = Recorder::default();
    context::check_common_neighbor_bound(g, &mut rec)?;
    let (x, y) = choose_xy(g)?;
    let ctx = FanContext::new(g, x, y)?;
    ctx.check_bounds(&mut rec)?;
    let (partition, mut trace) = if ctx.m == 2 {
        case1_construct(g, &ctx)?
    } else {
        case2_construct(g, &ctx)?
    };
    trace.checks.extend(rec.checks);
    Ok((partition, trace))
}

/// Re-validates `partition` and packages the trace.
fn finish(
    g: &Graph,
    partition: CistPartition,
    branch: Branch,
    context: Option<FanContext>,
    rec: Recorder,
) -> Result<(CistPartition, ConstructionTrace)> {
    let verdict = is_cist_partition(g, &partition)
        .map_err(|e| Error::InternalInvariantViolation(format!("{branch}: {e}")))?;
    if let Some(w) = verdict.witness {
        ensure!(false, "{branch} produced an invalid partition: {w}");
    }
    Ok((
        partition,
        ConstructionTrace {
            branch,
            context,
            witnesses: rec.witnesses,
            checks: rec.checks,
        },
    ))
}

/// Confirms `cycle` is a closed walk on distinct vertices alternating
/// between the two sides of `p`.
fn check_cross_cycle(
    g: &Graph,
    p: &CistPartition,
    cycle: &[Vertex],
    rec: &mut Recorder,
) -> Result<()> {
    let distinct: VertexSet = cycle.iter().copied().collect();
    ensure!(
        cycle.len() >= 4 && distinct.len() == cycle.len(),
        "cross cycle {cycle:?} is degenerate"
    );
    for (i, &a) in cycle.iter().enumerate() {
        let b = cycle[(i + 1) % cycle.len()];
        ensure!(
            g.has_edge(a, b) && p.side_of(a) != p.side_of(b),
            "cross cycle {cycle:?}: {a}-{b} is not a cross edge"
        );
    }
    let name = if rec.witnesses.contains_key("cycle") {
        "cycle2"
    } else {
        "cycle"
    };
    rec.cycle(name, cycle);
    rec.passed(Check::CrossCycle);
    Ok(())
}
