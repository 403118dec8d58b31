//! Shared corpus and random helpers for the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cist_core::graph::{
    mu2, parse_edge_list, vertex_connectivity, write_edge_list, Edge, Graph, Vertex,
};
use cist_core::oracle::{complete, fan_random, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stratum {
    Complete,
    Kappa2,
    Kappa3,
    Dirac,
}

pub struct Entry {
    pub name: String,
    pub stratum: Stratum,
    /// Edge list text as it would be read from disk.
    pub text: String,
    pub graph: Graph,
}

impl Entry {
    fn new(name: String, stratum: Stratum, text: String) -> Self {
        let graph = parse_edge_list(&text).expect("corpus text parses");
        Entry {
            name,
            stratum,
            text,
            graph,
        }
    }
}

/// Edge list of `g` with vertex `v` written as `labels[v]`.
pub fn relabeled_text(g: &Graph, labels: &[usize]) -> String {
    let mut text = String::from("# relabeled\n");
    for e in g.edges() {
        text.push_str(&format!("{} {}\n", labels[e.u()], labels[e.v()]));
    }
    text
}

fn shuffled_labels(n: usize, offset: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut labels: Vec<usize> = (offset..offset + n).collect();
    labels.shuffle(rng);
    labels
}

/// Two cliques joined through two hubs that see every vertex; κ = 2 and
/// μ₂ = n.
pub fn two_blobs(n: usize, a: usize, hubs_adjacent: bool) -> Graph {
    let mut edges = Vec::new();
    if hubs_adjacent {
        edges.push((0, 1));
    }
    for h in 0..2 {
        edges.extend((2..n).map(|v| (h, v)));
    }
    let (first, second) = (
        (2..2 + a).collect::<Vec<_>>(),
        (2 + a..n).collect::<Vec<_>>(),
    );
    for side in [first, second] {
        for (i, &u) in side.iter().enumerate() {
            edges.extend(side[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

/// The stratified corpus: 20 complete, 40 with κ = 2, 110 with κ >= 3 and 30
/// Dirac-style samples, orders 7..=16.
pub fn corpus() -> Vec<Entry> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for n in 7..=16 {
        out.push(Entry::new(
            format!("complete_{n}"),
            Stratum::Complete,
            write_edge_list(&complete(n)),
        ));
        let labels = shuffled_labels(n, 100, &mut rng);
        let text = relabeled_text(&complete(n), &labels);
        out.push(Entry::new(
            format!("complete_{n}_relabeled"),
            Stratum::Complete,
            text,
        ));
    }

    let mut kappa2 = 0;
    'blobs: for n in 7..=16 {
        for a in 1..=(n - 2) / 2 {
            for adjacent in [true, false] {
                if kappa2 == 40 {
                    break 'blobs;
                }
                let g = two_blobs(n, a, adjacent);
                let labels = shuffled_labels(n, 0, &mut rng);
                let name = format!(
                    "blobs_{n}_{a}_{}",
                    if adjacent { "joined" } else { "apart" }
                );
                out.push(Entry::new(
                    name,
                    Stratum::Kappa2,
                    relabeled_text(&g, &labels),
                ));
                kappa2 += 1;
            }
        }
    }

    let (mut kappa3, mut dirac) = (0, 0);
    let mut seed = 0u64;
    while kappa3 < 110 || dirac < 30 {
        let n = 7 + (seed % 10) as usize;
        let sample = fan_random(n, seed).expect("fan_random succeeds");
        let g = &sample.graph;
        let stratum = if sample.strategy == Strategy::Dirac && dirac < 30 {
            dirac += 1;
            Some(Stratum::Dirac)
        } else if kappa3 < 110 && !g.is_complete() && vertex_connectivity(g).unwrap() >= 3 {
            kappa3 += 1;
            Some(Stratum::Kappa3)
        } else {
            None
        };
        if let Some(stratum) = stratum {
            out.push(Entry::new(
                format!("fan_{n}_seed{seed}"),
                stratum,
                write_edge_list(g),
            ));
        }
        seed += 1;
    }
    out
}

pub fn meets_hypothesis(g: &Graph) -> bool {
    g.n() >= 7 && g.is_connected() && mu2(g).at_least(g.n())
}

/// Connected `G(n, p)`, retrying until connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).expect("simple");
        if g.is_connected() {
            return g;
        }
    }
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    parent[v] = r;
    r
}

/// A uniformly shuffled Kruskal tree over the given edges, if they span.
pub fn random_spanning_tree(rng: &mut ChaCha8Rng, n: usize, edges: &[Edge]) -> Option<Vec<Edge>> {
    let mut pool = edges.to_vec();
    pool.shuffle(rng);
    let mut parent: Vec<Vertex> = (0..n).collect();
    let mut tree = Vec::with_capacity(n - 1);
    for e in pool {
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a != b {
            parent[a] = b;
            tree.push(e);
        }
    }
    (tree.len() + 1 == n).then_some(tree)
}
