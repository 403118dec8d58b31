use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::FanContext;
use crate::error::Error;
use crate::graph::{Vertex, VertexSet};

/// Which branch of the case analysis produced a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Complete,
    Kappa2BigSide,
    Kappa2SingletonUvEdge,
    Kappa2SingletonNoUvEdge,
    Case1Sub11,
    Case1Sub12,
    Case1Sub13,
    Case2Claim34MDisjointCut,
    Case2Claim34MMeetsCut,
    Case2DEmpty,
    Case2Sub21DGe2,
    Case2Sub21DEq1,
    Case2Sub221,
    Case2Sub222Direct,
    Case2Sub222Claim34,
}

impl Branch {
    pub const ALL: [Branch; 15] = [
        Branch::Complete,
        Branch::Kappa2BigSide,
        Branch::Kappa2SingletonUvEdge,
        Branch::Kappa2SingletonNoUvEdge,
        Branch::Case1Sub11,
        Branch::Case1Sub12,
        Branch::Case1Sub13,
        Branch::Case2Claim34MDisjointCut,
        Branch::Case2Claim34MMeetsCut,
        Branch::Case2DEmpty,
        Branch::Case2Sub21DGe2,
        Branch::Case2Sub21DEq1,
        Branch::Case2Sub221,
        Branch::Case2Sub222Direct,
        Branch::Case2Sub222Claim34,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Branch::Complete => "Complete",
            Branch::Kappa2BigSide => "Kappa2_BigSide",
            Branch::Kappa2SingletonUvEdge => "Kappa2_Singleton_uvEdge",
            Branch::Kappa2SingletonNoUvEdge => "Kappa2_Singleton_NoUvEdge",
            Branch::Case1Sub11 => "Case1_Sub11",
            Branch::Case1Sub12 => "Case1_Sub12",
            Branch::Case1Sub13 => "Case1_Sub13",
            Branch::Case2Claim34MDisjointCut => "Case2_Claim34_MDisjointCut",
            Branch::Case2Claim34MMeetsCut => "Case2_Claim34_MMeetsCut",
            Branch::Case2DEmpty => "Case2_DEmpty",
            Branch::Case2Sub21DGe2 => "Case2_Sub21_DGe2",
            Branch::Case2Sub21DEq1 => "Case2_Sub21_DEq1",
            Branch::Case2Sub221 => "Case2_Sub221",
            Branch::Case2Sub222Direct => "Case2_Sub222_Direct",
            Branch::Case2Sub222Claim34 => "Case2_Sub222_Claim34",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Branch::ALL
            .into_iter()
            .find(|b| b.label() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown branch label {s:?}")))
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Structural facts verified while constructing; each one that ran is
/// listed in the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Every distance-2 pair has at least two common neighbours, and exactly
    /// two only when their neighbourhoods cover everything else.
    CommonNeighborsAtLeastTwo,
    /// Removing a 2-cut leaves exactly two components.
    TwoCutLeavesTwoComponents,
    /// Vertices of a 2-cut side that touch the cut see the cut and their whole side.
    CutSideAttachmentsUniversal,
    /// `|D| <= |M| - 2` and `|X| <= |Y|`.
    FarSetBounded,
    /// With `|M| = 2`, `D` is empty and `X` is not.
    CommonPairShape,
    /// One of the two common neighbours has degree at least 4.
    CommonPairHasDegreeFour,
    /// `{x, y, u1}` is not a separator.
    HubTripleNotSeparating,
    /// With `d(u2) = 3` and `u1 u2` an edge: `N(u2) = {x, y, u1}`, private
    /// neighbours see everything except the far end and `u2`, `u1` is universal.
    SaturatedNeighborhoods,
    /// Every vertex of `D` has a neighbour in `M ∪ Y`.
    FarVerticesReachCommonOrY,
    /// κ(G) >= |M| once `|M| >= 3`.
    ConnectivityAtLeastCommon,
    /// `Y = ∅` forces `X = ∅`, `|M| >= 4`, `D` independent and fully joined to `M`.
    EmptyPrivateShape,
    /// A cover of `D` has a system of distinct representatives, and no cover
    /// vertex's `D`-neighbourhood contains another's.
    CoverHallCondition,
    /// Each cover vertex has more than `|S|` neighbours in `X ∪ Y ∪ M`.
    CoverVerticesWellConnected,
    /// With `|S| = |M| - 2`, `B(S, D)` is a perfect matching and `D` misses `M`.
    CoverIsMatching,
    /// An `|M|`-cut through `x, y` leaves only common neighbours outside it.
    SeparatorShape,
    /// The stated cross cycle exists in `B(V1, V2)`.
    CrossCycle,
}

/// A named vertex, vertex set or vertex sequence recorded by a branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Vertex(Vertex),
    Set(VertexSet),
    Cycle(Vec<Vertex>),
    Note(String),
}

impl WitnessValue {
    fn relabel(&self, labels: &[usize]) -> Self {
        match self {
            WitnessValue::Vertex(v) => WitnessValue::Vertex(labels[*v]),
            WitnessValue::Set(s) => WitnessValue::Set(s.relabel(labels)),
            WitnessValue::Cycle(c) => WitnessValue::Cycle(c.iter().map(|&v| labels[v]).collect()),
            WitnessValue::Note(s) => WitnessValue::Note(s.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub branch: Branch,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<FanContext>,
    pub witnesses: BTreeMap<String, WitnessValue>,
    pub checks: BTreeSet<Check>,
}

impl ConstructionTrace {
    pub fn relabel(&self, labels: &[usize]) -> Self {
        ConstructionTrace {
            branch: self.branch,
            context: self.context.as_ref().map(|c| c.relabel(labels)),
            witnesses: self
                .witnesses
                .iter()
                .map(|(k, v)| (k.clone(), v.relabel(labels)))
                .collect(),
            checks: self.checks.clone(),
        }
    }

    pub fn witness_vertex(&self, name: &str) -> Option<Vertex> {
        match self.witnesses.get(name) {
            Some(WitnessValue::Vertex(v)) => Some(*v),
            _ => None,
        }
    }
}

/// Collects witnesses and passed checks while a branch runs.
#[derive(Debug, Default, Clone)]
pub(crate) struct Recorder {
    pub witnesses: BTreeMap<String, WitnessValue>,
    pub checks: BTreeSet<Check>,
}

impl Recorder {
    pub fn vertex(&mut self, name: &str, v: Vertex) {
        self.witnesses
            .insert(name.to_owned(), WitnessValue::Vertex(v));
    }

    pub fn set(&mut self, name: &str, s: &VertexSet) {
        self.witnesses
            .insert(name.to_owned(), WitnessValue::Set(s.clone()));
    }

    pub fn cycle(&mut self, name: &str, c: &[Vertex]) {
        self.witnesses
            .insert(name.to_owned(), WitnessValue::Cycle(c.to_vec()));
    }

    pub fn passed(&mut self, check: Check) {
        self.checks.insert(check);
    }
}

/// Reached and unreached branch labels, one per line.
pub fn coverage_report(reached: &BTreeSet<Branch>) -> String {
    let mut out = format!(
        "branch coverage: {}/{} labels reached\n",
        reached.len(),
        Branch::ALL.len()
    );
    for b in Branch::ALL {
        let mark = if reached.contains(&b) {
            "reached  "
        } else {
            "UNREACHED"
        };
        out.push_str(&format!("  {mark} {b}\n"));
    }
    out
}
