//! Seeded graph generators.
//!
//! Random families draw from SplitMix64 (Steele, Lea and Flood 2014; state
//! increment `0x9E3779B97F4A7C15`, output mixers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`). A value below `n` is `(x * n) >> 64` for the next
//! 64-bit output `x`, and a percentage test `p` succeeds when a value below
//! 100 is less than `p`. Other implementations following these two rules
//! reproduce the same graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::planar::test_planarity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// `P_n`, vertices `0..n` in path order.
    Path {
        n: u32,
    },
    /// `C_n`, `n >= 3`.
    Cycle {
        n: u32,
    },
    /// `K_{1,m}` with center `0`.
    Star {
        m: u32,
    },
    /// Two disjoint copies of `K_{1,m}`, centers `0` and `m + 1`.
    DoubleStar {
        m: u32,
    },
    Complete {
        n: u32,
    },
    /// `K_{a,b}`; the first part is `0..a`.
    CompleteBipartite {
        a: u32,
        b: u32,
    },
    /// `rows x cols` grid, row-major ids.
    Grid {
        rows: u32,
        cols: u32,
    },
    /// Every pair independently with probability `p_percent / 100`.
    RandomGnp {
        n: u32,
        p_percent: u32,
        seed: u64,
    },
    /// Random spanning tree (vertex `i` attaches to a uniform earlier
    /// vertex), then `attempts` uniform candidate edges, each kept only if
    /// the graph stays planar.
    RandomPlanar {
        n: u32,
        attempts: u32,
        seed: u64,
    },
    /// Parts `0..a` and `a..a+b`, cross pairs with probability `p_percent`.
    RandomBipartite {
        a: u32,
        b: u32,
        p_percent: u32,
        seed: u64,
    },
    /// Clique `0..clique`, independent set after it; every cross pair with
    /// probability `p_percent`, plus one clique neighbor for each independent
    /// vertex left without any.
    RandomSplit {
        clique: u32,
        independent: u32,
        p_percent: u32,
        seed: u64,
    },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    use GeneratorSpec::*;
    match *spec {
        Path { n } => {
            at_least("n", n, 1)?;
            build(0..n, (1..n).map(|i| (i - 1, i)))
        }
        Cycle { n } => {
            at_least("n", n, 3)?;
            build(0..n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Star { m } => {
            at_least("m", m, 1)?;
            build(0..=m, (1..=m).map(|i| (0, i)))
        }
        DoubleStar { m } => {
            at_least("m", m, 1)?;
            let second = m + 1;
            build(0..2 * second, (1..=m).flat_map(|i| [(0, i), (second, second + i)]))
        }
        Complete { n } => {
            at_least("n", n, 1)?;
            build(0..n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        CompleteBipartite { a, b } => {
            at_least("a", a, 1)?;
            at_least("b", b, 1)?;
            build(0..a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Grid { rows, cols } => {
            at_least("rows", rows, 1)?;
            at_least("cols", cols, 1)?;
            let id = move |r: u32, c: u32| r * cols + c;
            let right = (0..rows).flat_map(move |r| (1..cols).map(move |c| (id(r, c - 1), id(r, c))));
            let down = (1..rows).flat_map(move |r| (0..cols).map(move |c| (id(r - 1, c), id(r, c))));
            build(0..rows * cols, right.chain(down))
        }
        RandomGnp { n, p_percent, seed } => {
            at_least("n", n, 1)?;
            percent(p_percent)?;
            let mut rng = Rng::new(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.chance(p_percent) {
                        edges.push((u, v));
                    }
                }
            }
            build(0..n, edges)
        }
        RandomPlanar { n, attempts, seed } => {
            at_least("n", n, 1)?;
            Ok(random_planar(n, attempts, seed))
        }
        RandomBipartite { a, b, p_percent, seed } => {
            at_least("a", a, 1)?;
            at_least("b", b, 1)?;
            percent(p_percent)?;
            let mut rng = Rng::new(seed);
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    if rng.chance(p_percent) {
                        edges.push((u, v));
                    }
                }
            }
            build(0..a + b, edges)
        }
        RandomSplit { clique, independent, p_percent, seed } => {
            at_least("clique", clique, 1)?;
            percent(p_percent)?;
            let mut rng = Rng::new(seed);
            let mut edges: Vec<(Vertex, Vertex)> =
                (0..clique).flat_map(|u| (u + 1..clique).map(move |v| (u, v))).collect();
            for i in clique..clique + independent {
                let before = edges.len();
                for k in 0..clique {
                    if rng.chance(p_percent) {
                        edges.push((k, i));
                    }
                }
                if edges.len() == before {
                    edges.push((rng.below(clique as u64) as Vertex, i));
                }
            }
            build(0..clique + independent, edges)
        }
    }
}

fn random_planar(n: u32, attempts: u32, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let mut builder = GraphBuilder::new();
    builder.add_vertex(0);
    for i in 1..n {
        let parent = rng.below(i as u64) as Vertex;
        builder.add_edge(parent, i).expect("distinct endpoints");
    }
    let mut g = builder.build();
    let mut tried: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for _ in 0..attempts {
        let u = rng.below(n as u64) as Vertex;
        let v = rng.below(n as u64) as Vertex;
        let key = (u.min(v), u.max(v));
        if u == v || g.has_edge(u, v) || !tried.insert(key) {
            continue;
        }
        g.add_edge(u, v);
        if !test_planarity(&g).is_planar() {
            g.remove_edge(u, v);
        }
    }
    g
}

fn build(
    vertices: impl IntoIterator<Item = Vertex>,
    edges: impl IntoIterator<Item = (Vertex, Vertex)>,
) -> Result<Graph> {
    Graph::from_edges(vertices, edges)
}

fn at_least(name: &str, value: u32, min: u32) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

fn percent(p: u32) -> Result<()> {
    if p > 100 {
        return Err(Error::InvalidParameter(format!("probability must be a percentage in 0..=100, got {p}")));
    }
    Ok(())
}

/// The documented generator: SplitMix64 with multiply-shift range reduction.
#[derive(Debug, Clone)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish value in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    pub fn chance(&mut self, p_percent: u32) -> bool {
        self.below(100) < p_percent as u64
    }
}
