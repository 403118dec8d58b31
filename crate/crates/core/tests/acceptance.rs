//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`.

mod common;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use cist_core::cist::{
    partition_to_trees, verify_cists_definitional, verify_cists_leafrule, TreePair,
};
use cist_core::constructor::{claim34_construct, construct, coverage_report, Branch, FanContext};
use cist_core::graph::{mu2, Edge, Ext, VertexSet};
use cist_core::oracle::{
    case_fixture, complete_bipartite, oracle_2cist_partition, sharpness_graph,
};

use common::{corpus, meets_hypothesis, random_connected, random_spanning_tree, Entry, Stratum};

type Outcome = Result<String, String>;

struct Run {
    dir: tempfile::TempDir,
    corpus: Vec<Entry>,
    paths: Vec<PathBuf>,
    certificates: Vec<Option<Value>>,
}

fn construct_via_cli(path: &Path) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cist_core::cli::run(
        ["cist", "construct", path.to_str().unwrap()],
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn soundness(run: &mut Run) -> Outcome {
    let count = |s: Stratum| run.corpus.iter().filter(|e| e.stratum == s).count();
    let strata = [
        (Stratum::Complete, 20),
        (Stratum::Kappa2, 30),
        (Stratum::Kappa3, 100),
        (Stratum::Dirac, 20),
    ];
    for (s, need) in strata {
        if count(s) < need {
            return Err(format!(
                "{s:?} stratum has {} graphs, need {need}",
                count(s)
            ));
        }
    }
    let mut failures = Vec::new();
    for (entry, path) in run.corpus.iter().zip(&run.paths) {
        if !meets_hypothesis(&entry.graph) {
            failures.push(format!("{} does not meet the hypothesis", entry.name));
            run.certificates.push(None);
            continue;
        }
        let (code, text) = construct_via_cli(path);
        let cert: Option<Value> = (code == 0)
            .then(|| serde_json::from_str(&text).ok())
            .flatten();
        match &cert {
            Some(c)
                if ["partition_ok", "definitional_ok", "leafrule_ok"]
                    .iter()
                    .all(|k| c["verdicts"][k] == Value::Bool(true)) => {}
            _ => failures.push(format!("{}: exit {code}", entry.name)),
        }
        run.certificates.push(cert);
    }
    let kappa2_ok = run
        .corpus
        .iter()
        .zip(&run.certificates)
        .filter(|(e, _)| e.stratum == Stratum::Kappa2)
        .all(|(_, c)| c.as_ref().is_some_and(|c| c["report"]["kappa"] == 2));
    if !kappa2_ok {
        failures.push("a kappa-2 stratum graph reports another connectivity".into());
    }
    if failures.is_empty() {
        Ok(format!(
            "{} graphs ({} complete, {} kappa=2, {} kappa>=3, {} dirac), all verdicts true",
            run.corpus.len(),
            count(Stratum::Complete),
            count(Stratum::Kappa2),
            count(Stratum::Kappa3),
            count(Stratum::Dirac)
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn oracle_agreement(run: &Run) -> Outcome {
    let mut checked = 0;
    for entry in run.corpus.iter().filter(|e| e.graph.n() <= 9) {
        let r = oracle_2cist_partition(&entry.graph).map_err(|e| format!("{}: {e}", entry.name))?;
        if !r.found {
            return Err(format!("{}: oracle found no partition", entry.name));
        }
        checked += 1;
    }
    if checked == 0 {
        return Err("no corpus graph with n <= 9".into());
    }
    Ok(format!(
        "{checked} graphs with n in [7,9], oracle found a partition for each"
    ))
}

fn negative_thresholds() -> Outcome {
    let k33 = complete_bipartite(3, 3).unwrap();
    let r = oracle_2cist_partition(&k33).unwrap();
    if mu2(&k33) != Ext::Finite(6) || r.found || r.partitions_checked != 31 {
        return Err(format!(
            "K3,3: found={} after {}",
            r.found, r.partitions_checked
        ));
    }
    for (s, t) in [(2, 3), (3, 3), (3, 4), (2, 4)] {
        let g = sharpness_graph(s, t).unwrap();
        let r = oracle_2cist_partition(&g).unwrap();
        if mu2(&g) != Ext::Finite(g.n() - 1) || r.found {
            return Err(format!(
                "sharpness({s},{t}): mu2={:?} found={}",
                mu2(&g),
                r.found
            ));
        }
    }
    Ok("K3,3 none of 31; sharpness (2,3) (3,3) (3,4) (2,4) have mu2 = n-1 and no partition".into())
}

fn verifier_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut total, mut disjoint, mut positive) = (0, 0, 0);
    while total < 1000 {
        let n = rng.gen_range(5..=9);
        let engineer = total % 5 == 0;
        let p = if engineer {
            rng.gen_range(0.6..1.0)
        } else {
            rng.gen_range(0.3..0.9)
        };
        let g = random_connected(&mut rng, n, p);
        let edges: Vec<Edge> = g.edges().collect();
        let t1 = random_spanning_tree(&mut rng, n, &edges).expect("connected");
        let t2 = if engineer {
            let rest: Vec<Edge> = edges.iter().copied().filter(|e| !t1.contains(e)).collect();
            match random_spanning_tree(&mut rng, n, &rest) {
                Some(t) => t,
                None => continue,
            }
        } else {
            random_spanning_tree(&mut rng, n, &edges).expect("connected")
        };
        if engineer {
            disjoint += 1;
        }
        let pair = TreePair::new(t1, t2);
        let a = verify_cists_definitional(&g, &pair).map_err(|e| e.to_string())?;
        let b = verify_cists_leafrule(&g, &pair).map_err(|e| e.to_string())?;
        if a.ok != b.ok {
            return Err(format!("disagreement on pair {total}: {g:?} {pair:?}"));
        }
        positive += usize::from(a.ok);
        total += 1;
    }
    Ok(format!(
        "{total} pairs ({disjoint} edge-disjoint, {positive} CIST), zero disagreements"
    ))
}

fn extractor_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    let mut graphs = 0;
    while found < 500 {
        graphs += 1;
        let n = rng.gen_range(5..=9);
        let p = rng.gen_range(0.45..0.95);
        let g = random_connected(&mut rng, n, p);
        let r = oracle_2cist_partition(&g).map_err(|e| e.to_string())?;
        let Some(part) = r.partition else { continue };
        found += 1;
        let trees = partition_to_trees(&g, &part).map_err(|e| format!("extract: {e}"))?;
        if !verify_cists_definitional(&g, &trees)
            .map_err(|e| e.to_string())?
            .ok
        {
            return Err(format!("extracted trees are not CISTs on {g:?}"));
        }
        let degree = |t: &[Edge], v| t.iter().filter(|e| e.u() == v || e.v() == v).count();
        let leaves_ok = part.v2.iter().all(|v| degree(&trees.t1, v) == 1)
            && part.v1.iter().all(|v| degree(&trees.t2, v) == 1);
        if !leaves_ok {
            return Err(format!(
                "a vertex is not a leaf on the other side's tree in {g:?}"
            ));
        }
    }
    Ok(format!(
        "{found} oracle partitions from {graphs} random graphs, all trees verified"
    ))
}

fn has(cert: &Value, check: &str) -> bool {
    cert["trace"]["checks"]
        .as_array()
        .is_some_and(|a| a.iter().any(|c| c == check))
}

fn assertion_suite(run: &Run) -> Outcome {
    let mut constructions = 0;
    for (entry, cert) in run.corpus.iter().zip(&run.certificates) {
        let Some(cert) = cert else {
            return Err(format!("{}: no certificate", entry.name));
        };
        let kappa = cert["report"]["kappa"].as_u64().unwrap_or(0);
        let branch = cert["trace"]["branch"].as_str().unwrap_or_default();
        if kappa < 3 || branch == "Complete" {
            continue;
        }
        constructions += 1;
        let ctx = &cert["trace"]["context"];
        let size = |k: &str| ctx[k].as_u64().unwrap_or(u64::MAX);
        let mut missing: Vec<&str> = ["common_neighbors_at_least_two", "far_set_bounded"]
            .into_iter()
            .filter(|c| !has(cert, c))
            .collect();
        if size("d") + 2 > size("m") || size("t") > size("s") {
            missing.push("bounds in context");
        }
        if branch.starts_with("Case1") {
            missing.extend(
                ["common_pair_shape", "common_pair_has_degree_four"]
                    .into_iter()
                    .filter(|c| !has(cert, c)),
            );
        } else {
            if !has(cert, "connectivity_at_least_common") || kappa < size("m") {
                missing.push("connectivity_at_least_common");
            }
            if size("d") > 0 && !has(cert, "far_vertices_reach_common_or_y") {
                missing.push("far_vertices_reach_common_or_y");
            }
            if size("d") > 0 && size("s") > 0 && !has(cert, "cover_hall_condition") {
                missing.push("cover_hall_condition");
            }
        }
        let last = if branch.contains("Claim34") {
            "separator_shape"
        } else {
            "cross_cycle"
        };
        if !has(cert, last) {
            missing.push(last);
        }
        if !missing.is_empty() {
            return Err(format!("{} ({branch}): {}", entry.name, missing.join(", ")));
        }
    }
    Ok(format!(
        "{constructions} kappa>=3 constructions, every applicable assertion recorded"
    ))
}

fn branch_coverage(run: &Run) -> Outcome {
    let mut reached: BTreeSet<Branch> = run
        .certificates
        .iter()
        .flatten()
        .filter_map(|c| c["trace"]["branch"].as_str()?.parse().ok())
        .collect();
    for b in Branch::ALL {
        if let Some(g) = case_fixture(b.label()).map_err(|e| e.to_string())? {
            reached.insert(construct(&g).map_err(|e| format!("{b}: {e}"))?.1.branch);
        }
    }
    let k44 = complete_bipartite(4, 4).unwrap();
    let ctx = FanContext::new(&k44, 0, 1).map_err(|e| e.to_string())?;
    let cut: VertexSet = [0, 1, 2, 3].into_iter().collect();
    reached.insert(
        claim34_construct(&k44, &cut, &ctx)
            .map_err(|e| e.to_string())?
            .1
            .branch,
    );

    print!("{}", coverage_report(&reached));
    let required = [
        Branch::Complete,
        Branch::Kappa2BigSide,
        Branch::Case1Sub11,
        Branch::Case1Sub13,
        Branch::Case2DEmpty,
        Branch::Case2Sub221,
    ];
    let absent: Vec<_> = required.iter().filter(|b| !reached.contains(b)).collect();
    if reached.len() < 8 || !absent.is_empty() {
        return Err(format!(
            "{} labels reached, missing {absent:?}",
            reached.len()
        ));
    }
    let unreached: Vec<_> = Branch::ALL
        .iter()
        .filter(|b| !reached.contains(b))
        .map(|b| b.label())
        .collect();
    Ok(format!(
        "{}/{} labels reached; unreached: {}",
        reached.len(),
        Branch::ALL.len(),
        if unreached.is_empty() {
            "none".into()
        } else {
            unreached.join(", ")
        }
    ))
}

fn determinism(run: &Run) -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cist");
    let mut compared = 0;
    for (i, path) in run
        .paths
        .iter()
        .step_by(run.paths.len() / 50)
        .take(50)
        .enumerate()
    {
        let mut outputs = Vec::new();
        for round in 0..2 {
            let out = run.dir.path().join(format!("cert_{i}_{round}.json"));
            let status = Command::new(bin)
                .args([
                    "construct",
                    path.to_str().unwrap(),
                    "--out",
                    out.to_str().unwrap(),
                ])
                .output()
                .map_err(|e| e.to_string())?;
            if !status.status.success() {
                return Err(format!(
                    "{}: exit {:?}",
                    path.display(),
                    status.status.code()
                ));
            }
            outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{}: certificates differ", path.display()));
        }
        compared += 1;
    }
    Ok(format!(
        "{compared} corpus files constructed twice by separate processes, byte-identical"
    ))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let corpus = corpus();
    let paths = corpus
        .iter()
        .map(|e| {
            let p = dir.path().join(format!("{}.txt", e.name));
            std::fs::write(&p, &e.text).expect("write corpus file");
            p
        })
        .collect();
    let mut run = Run {
        dir,
        corpus,
        paths,
        certificates: Vec::new(),
    };

    let mut failed = 0;
    let mut report = |id: usize, name: &str, start: Instant, outcome: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id} PASS {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL {name}: {why} ({secs:.1}s)");
            }
        }
    };
    let t = Instant::now();
    let outcome = soundness(&mut run);
    report(1, "construction soundness", t, outcome);
    let t = Instant::now();
    report(2, "oracle agreement", t, oracle_agreement(&run));
    let t = Instant::now();
    report(3, "negative thresholds", t, negative_thresholds());
    let t = Instant::now();
    report(4, "verifier equivalence", t, verifier_equivalence());
    let t = Instant::now();
    report(5, "extractor soundness", t, extractor_soundness());
    let t = Instant::now();
    report(6, "runtime assertions", t, assertion_suite(&run));
    let t = Instant::now();
    report(7, "branch coverage", t, branch_coverage(&run));
    let t = Instant::now();
    report(8, "determinism", t, determinism(&run));

    if failed > 0 {
        println!("acceptance: {failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 8 criteria passed");
}
