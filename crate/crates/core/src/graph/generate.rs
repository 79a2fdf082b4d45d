use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Result};

/// Deterministic graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cycle `C_n`, `n >= 3`.
    Cycle(usize),
    /// Complete graph `K_n`, `n >= 3`.
    Complete(usize),
    /// Complete bipartite `K_{p,q}`; vertices `0..p` form the first part.
    CompleteBipartite(usize, usize),
    /// The Petersen graph (outer 5-cycle, spokes, inner pentagram).
    Petersen,
    /// Random recursive spanning tree plus `extra_edges` distinct non-tree
    /// edges, all drawn from ChaCha8 seeded with `seed`.
    ///
    /// Vertex `v >= 1` attaches to a parent drawn uniformly from `0..v`;
    /// extra edges are rejection-sampled as uniform vertex pairs, discarding
    /// loops and edges already present.
    RandomConnected {
        n: usize,
        extra_edges: usize,
        seed: u64,
    },
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Complete(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "complete graph needs n >= 3, got {n}"
                    )));
                }
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edges(n, &edges)
            }
            Family::CompleteBipartite(p, q) => {
                if p == 0 || q == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "complete bipartite needs p, q >= 1, got ({p}, {q})"
                    )));
                }
                let edges: Vec<_> = (0..p)
                    .flat_map(|i| (0..q).map(move |j| (i, p + j)))
                    .collect();
                Graph::from_edges(p + q, &edges)
            }
            Family::Petersen => {
                let mut edges = Vec::with_capacity(15);
                edges.extend((0..5).map(|i| (i, (i + 1) % 5)));
                edges.extend((0..5).map(|i| (i, i + 5)));
                edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
                Graph::from_edges(10, &edges)
            }
            Family::RandomConnected {
                n,
                extra_edges,
                seed,
            } => random_connected(n, extra_edges, seed),
        }
    }

    /// Short human-readable label, e.g. `C5`, `K2,3`, `rand(6,3,7)`.
    pub fn label(&self) -> String {
        match *self {
            Family::Cycle(n) => format!("C{n}"),
            Family::Complete(n) => format!("K{n}"),
            Family::CompleteBipartite(p, q) => format!("K{p},{q}"),
            Family::Petersen => "Petersen".into(),
            Family::RandomConnected {
                n,
                extra_edges,
                seed,
            } => format!("rand({n},{extra_edges},{seed})"),
        }
    }
}

fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "random_connected needs n >= 2, got {n}"
        )));
    }
    let capacity = n * (n - 1) / 2 - (n - 1);
    if extra_edges > capacity {
        return Err(Error::InvalidParameter(format!(
            "at most {capacity} extra edges fit on {n} vertices, asked for {extra_edges}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n - 1 + extra_edges);
    let mut present = BTreeSet::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
        present.insert((parent, v));
    }
    while edges.len() < n - 1 + extra_edges {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edges(n, &edges)
}
