//! Exhaustive 2-CIST-partition search and graph generators.

mod fixtures;
mod generators;

use rayon::prelude::*;
use serde::Serialize;

use crate::cist::{is_cist_partition, CistPartition};
use crate::error::{ensure, Error, Result};
use crate::graph::{Graph, VertexSet};

pub use fixtures::case_fixture;
pub use generators::{
    complete, complete_bipartite, fan_random, lemma3_big_side, lemma3_singleton, sharpness_graph,
    Family, FanSample, GenSpec, Strategy, FAN_ATTEMPTS,
};

/// Largest order the exhaustive search accepts.
pub const ORACLE_CAP: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub found: bool,
    pub partition: Option<CistPartition>,
    pub partitions_checked: u64,
}

/// Adjacency as bitmasks; valid while `n <= 32`.
struct Masks {
    adj: Vec<u32>,
    all: u32,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        Masks {
            adj,
            all: if g.n() == 32 {
                u32::MAX
            } else {
                (1u32 << g.n()) - 1
            },
        }
    }

    fn connected(&self, side: u32) -> bool {
        if side == 0 {
            return false;
        }
        let mut seen = side & side.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & side & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == side
    }

    /// Sides connected, and every component of the cross graph has a cycle.
    fn valid(&self, v2: u32) -> bool {
        let v1 = self.all & !v2;
        if !self.connected(v1) || !self.connected(v2) {
            return false;
        }
        let mut left = self.all;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let other = if v1 >> v & 1 == 1 { v2 } else { v1 };
                let fresh = self.adj[v] & other & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            let mut edges = 0;
            let mut rest = comp & v1;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                edges += (self.adj[v] & v2).count_ones();
            }
            if edges < comp.count_ones() {
                return false;
            }
        }
        true
    }
}

/// Tries every bipartition with vertex 0 in `V1`, in increasing order of the
/// bitmask of `V2`, and returns the first 2-CIST-partition.
///
/// The scan runs on the current rayon pool; the answer is the same as a
/// sequential scan.
pub fn oracle_2cist_partition(g: &Graph) -> Result<OracleResult> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(Error::TooLarge { n, cap: ORACLE_CAP });
    }
    if n < 2 {
        return Ok(OracleResult {
            found: false,
            partition: None,
            partitions_checked: 0,
        });
    }
    let masks = Masks::new(g);
    let total: u64 = (1u64 << (n - 1)) - 1;
    let hit = (1..=total)
        .into_par_iter()
        .find_first(|&k| masks.valid((k as u32) << 1));
    let Some(k) = hit else {
        return Ok(OracleResult {
            found: false,
            partition: None,
            partitions_checked: total,
        });
    };
    let v2: VertexSet = (1..n).filter(|&v| k >> (v - 1) & 1 == 1).collect();
    let partition = CistPartition::new(v2.complement(n), v2);
    let verdict = is_cist_partition(g, &partition)?;
    ensure!(
        verdict.ok,
        "oracle accepted {} / {} but the validator does not",
        partition.v1,
        partition.v2
    );
    Ok(OracleResult {
        found: true,
        partition: Some(partition),
        partitions_checked: k,
    })
}
