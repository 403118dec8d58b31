use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{mu2, Graph, Vertex, MIN_ORDER};

/// Attempts `fan_random` makes before giving up.
pub const FAN_ATTEMPTS: usize = 1000;

fn clique(vs: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
}

pub fn complete(n: usize) -> Graph {
    let vs: Vec<Vertex> = (0..n).collect();
    Graph::from_edges(n, clique(&vs).collect::<Vec<_>>()).expect("clique edges are simple")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Disjoint `K_s` and `K_t` plus an apex joined to every vertex. Here
/// μ₂ = n - 1, one short of the construction's hypothesis.
pub fn sharpness_graph(s: usize, t: usize) -> Result<Graph> {
    if s < 2 || t < 2 {
        return Err(Error::InvalidInput(format!(
            "sharpness graph needs s, t >= 2, got ({s}, {t})"
        )));
    }
    let n = s + t + 1;
    let first: Vec<Vertex> = (0..s).collect();
    let second: Vec<Vertex> = (s..s + t).collect();
    let mut edges: Vec<_> = clique(&first).chain(clique(&second)).collect();
    edges.extend((0..s + t).map(|v| (v, n - 1)));
    Graph::from_edges(n, edges)
}

/// Connectivity-2 graph: cut `{0, 1}` (adjacent), side `{2, 3}` (an edge),
/// side `K4` on `4..8`, cut joined to everything.
pub fn lemma3_big_side() -> Graph {
    let mut edges = vec![(0, 1), (2, 3)];
    edges.extend(clique(&[4, 5, 6, 7]));
    edges.extend((2..8).flat_map(|w| [(0, w), (1, w)]));
    Graph::from_edges(8, edges).expect("fixture edges are simple")
}

/// Connectivity-2 graph: cut `{0, 1}`, side `{2}`, side `K6` on `3..9`, cut
/// joined to everything; `uv_edge` decides whether `0 1` is an edge.
pub fn lemma3_singleton(uv_edge: bool) -> Graph {
    let mut edges: Vec<_> = clique(&[3, 4, 5, 6, 7, 8]).collect();
    if uv_edge {
        edges.push((0, 1));
    }
    edges.extend((2..9).flat_map(|w| [(0, w), (1, w)]));
    Graph::from_edges(9, edges).expect("fixture edges are simple")
}

/// How a `fan_random` sample was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Minimum degree at least `n / 2`.
    Dirac,
    /// Dense `G(n, p)`.
    Dense,
    /// Two near-cliques sharing a hub set joined to everything.
    Blobs { hub: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct FanSample {
    #[serde(skip)]
    pub graph: Graph,
    pub strategy: Strategy,
    pub attempts: usize,
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn dirac(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Vertex, Vertex)> {
    let p = rng.gen_range(0.2..0.6);
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in gnp(rng, n, p) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let need = n.div_ceil(2);
    for u in 0..n {
        let mut missing: Vec<Vertex> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
        missing.shuffle(rng);
        let have = n - 1 - missing.len();
        for &v in missing.iter().take(need.saturating_sub(have)) {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .collect()
}

fn blobs(rng: &mut ChaCha8Rng, n: usize, hub: usize) -> Vec<(Vertex, Vertex)> {
    let rest = n - hub;
    let split = rng.gen_range(1..=rest / 2);
    let a: Vec<Vertex> = (hub..hub + split).collect();
    let b: Vec<Vertex> = (hub + split..n).collect();
    let drop = rng.gen_range(0.0..0.25);
    let mut edges: Vec<_> = clique(&a)
        .chain(clique(&b))
        .filter(|_| !rng.gen_bool(drop))
        .collect();
    let hubs: Vec<Vertex> = (0..hub).collect();
    edges.extend(clique(&hubs).filter(|_| rng.gen_bool(0.5)));
    edges.extend((0..hub).flat_map(|h| (hub..n).map(move |v| (h, v))));
    edges
}

/// A random connected graph with μ₂ >= n. Vertex labels are shuffled.
pub fn fan_random(n: usize, seed: u64) -> Result<FanSample> {
    if n < MIN_ORDER {
        return Err(Error::InvalidInput(format!(
            "fan_random needs n >= {MIN_ORDER}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=FAN_ATTEMPTS {
        let strategy = match rng.gen_range(0..3) {
            0 => Strategy::Dirac,
            1 => Strategy::Dense,
            _ => Strategy::Blobs {
                hub: rng.gen_range(2..=(n / 2).max(2)),
            },
        };
        let edges = match strategy {
            Strategy::Dirac => dirac(&mut rng, n),
            Strategy::Dense => {
                let p = rng.gen_range(0.55..0.95);
                gnp(&mut rng, n, p)
            }
            Strategy::Blobs { hub } => blobs(&mut rng, n, hub),
        };
        let mut perm: Vec<Vertex> = (0..n).collect();
        perm.shuffle(&mut rng);
        let g = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))?;
        if g.is_connected() && mu2(&g).at_least(n) {
            return Ok(FanSample {
                graph: g,
                strategy,
                attempts: attempt,
            });
        }
    }
    Err(Error::GenerationFailed {
        seed,
        attempts: FAN_ATTEMPTS,
    })
}

/// A generator family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Sharpness { s: usize, t: usize },
    Lemma3Fixture { singleton: bool, uv_edge: bool },
    FanRandom { n: usize },
    CaseFixture { label: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        match &self.family {
            Family::Complete { n } => Ok(complete(*n)),
            Family::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            Family::Sharpness { s, t } => sharpness_graph(*s, *t),
            Family::Lemma3Fixture {
                singleton: false, ..
            } => Ok(lemma3_big_side()),
            Family::Lemma3Fixture {
                singleton: true,
                uv_edge,
            } => Ok(lemma3_singleton(*uv_edge)),
            Family::FanRandom { n } => fan_random(*n, self.seed).map(|s| s.graph),
            Family::CaseFixture { label } => super::case_fixture(label)?
                .ok_or_else(|| Error::NotApplicable(format!("no fixture is known for {label}"))),
        }
    }
}
