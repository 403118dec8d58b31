use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cist::{
    is_cist_partition, partition_to_trees, verify_cists_definitional, verify_cists_leafrule,
};
use crate::cist::{CistPartition, TreePair};
use crate::constructor::{construct, ConstructionTrace};
use crate::error::Result;
use crate::graph::{write_edge_list, ConditionReport, Graph};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub partition_ok: bool,
    pub definitional_ok: bool,
    pub leafrule_ok: bool,
}

impl Verdicts {
    pub fn all_ok(&self) -> bool {
        self.partition_ok && self.definitional_ok && self.leafrule_ok
    }
}

/// Everything needed to re-check a construction, in the input's labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema_version: &'static str,
    pub input_digest: String,
    pub report: ConditionReport,
    pub trace: ConstructionTrace,
    pub partition: CistPartition,
    pub trees: TreePair,
    pub verdicts: Verdicts,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("certificate serializes");
        text.push('\n');
        text
    }
}

/// SHA-256 of the canonical edge list, as lowercase hex.
pub fn input_digest(g: &Graph) -> String {
    format!("{:x}", Sha256::digest(write_edge_list(g).as_bytes()))
}

/// Builds the partition and trees for `g` and checks them with all three
/// validators.
pub fn certify(g: &Graph) -> Result<Certificate> {
    construct_certified(g).map(|(_, _, cert)| cert)
}

/// Like [`certify`], also returning the partition and trees in vertex ids.
pub fn construct_certified(g: &Graph) -> Result<(CistPartition, TreePair, Certificate)> {
    let report = ConditionReport::compute(g);
    let (partition, trace) = construct(g)?;
    let trees = partition_to_trees(g, &partition)?;
    let verdicts = Verdicts {
        partition_ok: is_cist_partition(g, &partition)?.ok,
        definitional_ok: verify_cists_definitional(g, &trees)?.ok,
        leafrule_ok: verify_cists_leafrule(g, &trees)?.ok,
    };
    let labels = g.labels();
    let cert = Certificate {
        schema_version: SCHEMA_VERSION,
        input_digest: input_digest(g),
        report,
        trace: trace.relabel(labels),
        partition: partition.relabel(labels),
        trees: trees.relabel(labels),
        verdicts,
    };
    Ok((partition, trees, cert))
}
