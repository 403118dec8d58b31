//! Samples random graphs meeting the degree condition, runs the constructor
//! on each and prints the smallest graph seen for every branch, plus any
//! failure.
//!
//! Usage: find_fixtures [samples] [max_n]

use std::collections::BTreeMap;

use cist_core::constructor::{construct, Branch};
use cist_core::graph::write_edge_list;
use cist_core::oracle::fan_random;
use rayon::prelude::*;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let samples: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let max_n: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(12);
    let results: Vec<_> = (0..samples)
        .into_par_iter()
        .map(|seed| {
            let n = 7 + (seed as usize % (max_n - 6));
            let g = fan_random(n, seed).expect("sample").graph;
            let outcome = construct(&g).map(|(_, t)| t.branch);
            (seed, g, outcome)
        })
        .collect();
    let mut best: BTreeMap<Branch, (usize, usize, u64, String)> = BTreeMap::new();
    let mut failures = 0;
    for (seed, g, outcome) in results {
        match outcome {
            Ok(b) => {
                let key = (g.n(), g.edge_count());
                let e = best
                    .entry(b)
                    .or_insert((usize::MAX, usize::MAX, seed, String::new()));
                if key < (e.0, e.1) {
                    *e = (key.0, key.1, seed, write_edge_list(&g));
                }
            }
            Err(err) => {
                failures += 1;
                if failures <= 5 {
                    println!(
                        "FAIL seed {seed} n {}: {err}\n{}",
                        g.n(),
                        write_edge_list(&g)
                    );
                }
            }
        }
    }
    println!("failures: {failures}");
    for b in Branch::ALL {
        match best.get(&b) {
            Some((n, m, seed, text)) => {
                println!("== {b}: n={n} m={m} seed={seed}");
                println!("{}", text.trim_end().replace('\n', " | "));
            }
            None => println!("== {b}: none"),
        }
    }
}
