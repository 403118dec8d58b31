use cist_core::cist::{is_cist_partition, partition_to_trees, verify_cists_definitional};
use cist_core::constructor::{
    case1_construct, choose_xy, claim34_construct, construct, lemma3_construct, select_cover_s,
    Branch, FanContext,
};
use cist_core::graph::{Graph, VertexSet};
use cist_core::oracle::{
    case_fixture, complete, complete_bipartite, lemma3_big_side, sharpness_graph,
};
use cist_core::Error;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn assert_valid(g: &Graph, side: &VertexSet, other: &VertexSet) {
    let p = cist_core::cist::CistPartition::new(side.clone(), other.clone());
    assert!(is_cist_partition(g, &p).unwrap().ok);
    assert!(
        verify_cists_definitional(g, &partition_to_trees(g, &p).unwrap())
            .unwrap()
            .ok
    );
}

#[test]
fn every_available_fixture_is_valid() {
    let mut available = 0;
    for b in Branch::ALL {
        let Some(g) = case_fixture(b.label()).unwrap() else {
            continue;
        };
        let (p, trace) = construct(&g).unwrap();
        assert_eq!(trace.branch, b);
        assert_valid(&g, &p.v1, &p.v2);
        available += 1;
    }
    assert_eq!(available, 13);
}

#[test]
fn k7_minus_edge_uses_the_empty_far_set() {
    let k7 = complete(7);
    let g = Graph::from_edges(
        7,
        k7.edges()
            .filter(|e| (e.u(), e.v()) != (0, 1))
            .map(|e| (e.u(), e.v())),
    )
    .unwrap();
    assert_eq!(choose_xy(&g).unwrap(), (0, 1));
    let (p, trace) = construct(&g).unwrap();
    assert_eq!(trace.branch, Branch::Case2DEmpty);
    assert_eq!(trace.context.as_ref().unwrap().m, 5);
    assert_eq!(p.v1, set(&[0, 1, 2, 3, 4]));
    assert_eq!(p.v2, set(&[5, 6]));
}

#[test]
fn big_side_fixture() {
    let g = lemma3_big_side();
    let (p, trace) = lemma3_construct(&g, (0, 1)).unwrap();
    assert_eq!(trace.branch, Branch::Kappa2BigSide);
    // u = 0, x1 = a = 2, b = 3, y1 = c = 4
    assert_eq!(p.v1, set(&[0, 3, 4]));
    assert_valid(&g, &p.v1, &p.v2);
}

#[test]
fn preconditions() {
    let k33 = complete_bipartite(3, 3).unwrap();
    assert!(matches!(construct(&k33), Err(Error::PreconditionFailed(_))));
    let sharp = sharpness_graph(3, 3).unwrap();
    let err = construct(&sharp).unwrap_err();
    assert!(matches!(err, Error::PreconditionFailed(_)));
    assert!(err.to_string().contains("mu2"), "{err}");
}

#[test]
fn two_common_neighbours_with_far_vertex_is_rejected() {
    // 4-cycle 0 1 2 3 with a pendant 4 on 1: x = 0, y = 2, M = {1, 3}, D = {4}.
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
    let ctx = FanContext::new(&g, 0, 2).unwrap();
    assert_eq!((ctx.m, ctx.d), (2, 1));
    assert!(matches!(
        case1_construct(&g, &ctx),
        Err(Error::InternalInvariantViolation(_))
    ));
}

#[test]
fn claim34_direct() {
    let g = complete_bipartite(4, 4).unwrap();
    let ctx = FanContext::new(&g, 0, 1).unwrap();
    let (p, trace) = claim34_construct(&g, &set(&[0, 1, 2, 3]), &ctx).unwrap();
    assert_eq!(trace.branch, Branch::Case2Claim34MDisjointCut);
    assert_valid(&g, &p.v1, &p.v2);

    let missing_y = claim34_construct(&g, &set(&[0, 2, 3, 4]), &ctx);
    assert!(matches!(
        missing_y,
        Err(Error::InternalInvariantViolation(_))
    ));
}

#[test]
fn cover_prefers_small_then_common() {
    // x = 0, y = 1, M = {2, 3, 4}, Y = {5}, D = {6}; 6 sees 2 and 5.
    let edges = [
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 6),
        (5, 6),
    ];
    let g = Graph::from_edges(7, edges).unwrap();
    let ctx = FanContext::new(&g, 0, 1).unwrap();
    assert_eq!(select_cover_s(&g, &ctx).unwrap().s_set, set(&[2]));

    // M = {2, 3, 4, 7}, D = {6, 8}, both seen by 5 and each by one vertex of M:
    // {5} beats every pair.
    let g = Graph::from_edges(
        9,
        [
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 7),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 7),
            (1, 5),
        ]
        .into_iter()
        .chain([(2, 6), (5, 6), (3, 8), (5, 8)]),
    )
    .unwrap();
    let ctx = FanContext::new(&g, 0, 1).unwrap();
    assert_eq!(ctx.far, set(&[6, 8]));
    assert_eq!(select_cover_s(&g, &ctx).unwrap().s_set, set(&[5]));
}
