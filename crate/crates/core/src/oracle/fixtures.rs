use super::generators::{complete, lemma3_big_side, lemma3_singleton};
use crate::constructor::Branch;
use crate::error::Result;
use crate::graph::{Graph, Vertex};

// Found by sampling; each drives the constructor into the branch it names.
const TWO_COMMON_HIGH: (usize, &[(Vertex, Vertex)]) = (
    7,
    &[
        (0, 2),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 6),
        (3, 4),
        (3, 5),
        (3, 6),
        (4, 6),
        (5, 6),
    ],
);
const TWO_COMMON_LOW_APART: (usize, &[(Vertex, Vertex)]) = (
    7,
    &[
        (0, 1),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 6),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 6),
        (4, 5),
        (4, 6),
    ],
);
const TWO_COMMON_LOW_JOINED: (usize, &[(Vertex, Vertex)]) = (
    8,
    &[
        (0, 1),
        (0, 2),
        (0, 5),
        (0, 7),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (2, 3),
        (2, 6),
        (2, 7),
        (3, 4),
        (3, 6),
        (3, 7),
        (4, 5),
        (4, 6),
        (6, 7),
    ],
);
const MEETS_CUT: (usize, &[(Vertex, Vertex)]) = (
    7,
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 4),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 5),
        (3, 6),
        (4, 5),
        (5, 6),
    ],
);
const EMPTY_Y_FAR_PAIR: (usize, &[(Vertex, Vertex)]) = (
    8,
    &[
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (0, 6),
        (0, 7),
        (1, 2),
        (1, 3),
        (1, 5),
        (1, 6),
        (1, 7),
        (2, 4),
        (2, 7),
        (3, 4),
        (3, 7),
        (4, 5),
        (4, 6),
        (4, 7),
        (5, 7),
        (6, 7),
    ],
);
const EMPTY_Y_FAR_SINGLE: (usize, &[(Vertex, Vertex)]) = (
    7,
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 6),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 4),
        (3, 5),
        (3, 6),
        (4, 6),
        (5, 6),
    ],
);
const COVER_MEETS_M: (usize, &[(Vertex, Vertex)]) = (
    8,
    &[
        (0, 1),
        (0, 4),
        (0, 5),
        (0, 6),
        (1, 2),
        (1, 3),
        (1, 7),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 4),
        (3, 5),
        (3, 6),
        (4, 7),
        (5, 6),
        (5, 7),
        (6, 7),
    ],
);
const COVER_IN_Y: (usize, &[(Vertex, Vertex)]) = (
    10,
    &[
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (1, 8),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (3, 4),
        (3, 5),
        (3, 6),
        (3, 7),
        (3, 8),
        (4, 6),
        (4, 7),
        (4, 8),
        (5, 6),
        (5, 7),
        (5, 8),
        (6, 9),
        (7, 8),
        (7, 9),
        (8, 9),
    ],
);

fn from_pairs((n, edges): (usize, &[(Vertex, Vertex)])) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixture edges are simple")
}

fn k7_minus_edge() -> Graph {
    let k7 = complete(7);
    let edges = k7
        .edges()
        .filter(|e| (e.u(), e.v()) != (0, 1))
        .map(|e| (e.u(), e.v()));
    Graph::from_edges(7, edges).expect("fixture edges are simple")
}

/// A graph that drives the constructor into branch `label`, or `None` when
/// no such graph is known.
///
/// Two labels have none. A cut built from the construction's candidate
/// side always contains a common neighbour, so the disjoint-cut variant is
/// only reached by calling `claim34_construct` directly. When the cover lies
/// in `Y` and matches `D` perfectly, `D` has no common neighbour yet would
/// have to lie inside `M` for the cut variant to apply, so that path cannot
/// occur for graphs meeting the hypothesis.
pub fn case_fixture(label: &str) -> Result<Option<Graph>> {
    let branch: Branch = label.parse()?;
    Ok(match branch {
        Branch::Complete => Some(complete(7)),
        Branch::Kappa2BigSide => Some(lemma3_big_side()),
        Branch::Kappa2SingletonUvEdge => Some(lemma3_singleton(true)),
        Branch::Kappa2SingletonNoUvEdge => Some(lemma3_singleton(false)),
        Branch::Case1Sub11 => Some(from_pairs(TWO_COMMON_HIGH)),
        Branch::Case1Sub12 => Some(from_pairs(TWO_COMMON_LOW_APART)),
        Branch::Case1Sub13 => Some(from_pairs(TWO_COMMON_LOW_JOINED)),
        Branch::Case2Claim34MMeetsCut => Some(from_pairs(MEETS_CUT)),
        Branch::Case2DEmpty => Some(k7_minus_edge()),
        Branch::Case2Sub21DGe2 => Some(from_pairs(EMPTY_Y_FAR_PAIR)),
        Branch::Case2Sub21DEq1 => Some(from_pairs(EMPTY_Y_FAR_SINGLE)),
        Branch::Case2Sub221 => Some(from_pairs(COVER_MEETS_M)),
        Branch::Case2Sub222Direct => Some(from_pairs(COVER_IN_Y)),
        Branch::Case2Claim34MDisjointCut | Branch::Case2Sub222Claim34 => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::construct;
    use crate::graph::mu2;

    #[test]
    fn every_fixture_reaches_its_branch() {
        for b in Branch::ALL {
            let Some(g) = case_fixture(b.label()).unwrap() else {
                continue;
            };
            assert!(g.is_connected() && mu2(&g).at_least(g.n()), "{b}");
            assert_eq!(construct(&g).unwrap().1.branch, b);
        }
    }

    #[test]
    fn unknown_and_unavailable_labels() {
        assert!(case_fixture("Case9").is_err());
        assert_eq!(case_fixture("Case2_Sub222_Claim34").unwrap(), None);
        assert_eq!(case_fixture("Complete").unwrap().unwrap().n(), 7);
    }
}
