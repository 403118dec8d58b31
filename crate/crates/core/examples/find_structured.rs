//! Samples graphs shaped around a distance-2 pair `(x, y)` with chosen
//! sizes of `M`, `X`, `Y`, `D` and random edges elsewhere, keeping those
//! meeting the degree condition, and reports the smallest graph per branch.
//!
//! Usage: find_structured [samples]

use std::collections::BTreeMap;

use cist_core::constructor::{construct, Branch};
use cist_core::graph::{mu2, write_edge_list, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn sample(seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(3..=6);
    let t = rng.gen_range(0..=3);
    let s = rng.gen_range(t.max(1)..=6);
    let d = rng.gen_range(1..=m - 2);
    let n = 2 + m + t + s + d;
    let (x, y) = (0, 1);
    let ms: Vec<usize> = (2..2 + m).collect();
    let xs: Vec<usize> = (2 + m..2 + m + t).collect();
    let ys: Vec<usize> = (2 + m + t..2 + m + t + s).collect();
    let ds: Vec<usize> = (2 + m + t + s..n).collect();
    let mut edges = Vec::new();
    for &u in &ms {
        edges.push((x, u));
        edges.push((y, u));
    }
    edges.extend(xs.iter().map(|&u| (x, u)));
    edges.extend(ys.iter().map(|&u| (y, u)));
    let groups = [&ms, &xs, &ys, &ds];
    let mut p = [[0.0f64; 4]; 4];
    for (i, row) in p.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = if i == 3 && j == 0 || i == 0 && j == 3 {
                if rng.gen_bool(0.5) {
                    0.0
                } else {
                    rng.gen_range(0.0..0.5)
                }
            } else {
                rng.gen_range(0.3..1.0)
            };
        }
    }
    for i in 0..4 {
        for j in i..4 {
            for (ai, &a) in groups[i].iter().enumerate() {
                for (bi, &b) in groups[j].iter().enumerate() {
                    if (i == j && bi <= ai) || !rng.gen_bool(p[i][j]) {
                        continue;
                    }
                    edges.push((a, b));
                }
            }
        }
    }
    let g = Graph::from_edges(n, edges).ok()?;
    (g.is_connected() && mu2(&g).at_least(n)).then_some(g)
}

fn main() {
    let samples: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200_000);
    let results: Vec<_> = (0..samples)
        .into_par_iter()
        .filter_map(|seed| {
            let g = sample(seed)?;
            let outcome = construct(&g).map(|(_, t)| t.branch);
            Some((seed, g, outcome))
        })
        .collect();
    println!("kept {}", results.len());
    let mut best: BTreeMap<Branch, (usize, usize, u64, String)> = BTreeMap::new();
    let mut counts: BTreeMap<Branch, usize> = BTreeMap::new();
    let mut failures = 0;
    for (seed, g, outcome) in results {
        match outcome {
            Ok(b) => {
                *counts.entry(b).or_default() += 1;
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
                println!("== {b} x{}: n={n} m={m} seed={seed}", counts[&b]);
                println!("{}", text.trim_end().replace('\n', " | "));
            }
            None => println!("== {b}: none"),
        }
    }
}
