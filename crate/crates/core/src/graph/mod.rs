//! Simple connected graphs viewed through their symmetric arc sets.
//!
//! Arcs are stored in the canonical order `e_1..e_m, e_1^-1..e_m^-1`: the
//! forward arc of edge `j` has index `j` and its inverse has index `j + m`.
//! Every arc-indexed matrix in the crate uses this order.

mod generate;
mod parse;
mod structure;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

pub use generate::Family;
pub use parse::parse_edge_list;
pub use structure::{
    adjacency_matrix, arc_adjacency_matrix, degree_matrix, flip_matrix, srw_transition_matrix,
};

use crate::{Error, Result};

/// A directed arc `origin -> terminus` (0-based vertex indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

/// Simple, connected, undirected graph with its canonical arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<Arc>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Edge `j` becomes arc `j` with
    /// origin `edges[j].0`; its inverse is arc `j + m`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut seen = BTreeSet::new();
        let mut degrees = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u + 1));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u + 1, v + 1));
            }
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let m = edges.len();
        let mut arcs = Vec::with_capacity(2 * m);
        arcs.extend(edges.iter().map(|&(u, v)| Arc {
            origin: u,
            terminus: v,
        }));
        arcs.extend(edges.iter().map(|&(u, v)| Arc {
            origin: v,
            terminus: u,
        }));
        let g = Self {
            n,
            edges: edges.to_vec(),
            arcs,
            degrees,
        };
        let components = g.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in input order, 0-based.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// All `2m` arcs in canonical order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    #[inline]
    pub fn arc(&self, e: usize) -> Arc {
        self.arcs[e]
    }

    /// Index of the reversed arc.
    #[inline]
    pub fn inverse(&self, e: usize) -> usize {
        let m = self.m();
        if e < m {
            e + m
        } else {
            e - m
        }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Neighbours of `v` in arc order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs
            .iter()
            .filter(move |a| a.origin == v)
            .map(|a| a.terminus)
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees[0];
        self.degrees.iter().all(|&x| x == d).then_some(d)
    }

    /// `m = n - 1` for a connected graph.
    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n
    }

    /// Two-colouring by breadth-first search from vertex 0, returned as the
    /// two colour classes in increasing vertex order. `None` when an odd
    /// cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency_lists();
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = alloc::collections::VecDeque::new();
        colour[0] = 0;
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
        let left = (0..self.n).filter(|&v| colour[v] == 0).collect();
        let right = (0..self.n).filter(|&v| colour[v] == 1).collect();
        Some((left, right))
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arcs {
            adj[a.origin].push(a.terminus);
        }
        adj
    }

    fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Renders the graph in the edge-list text format (1-based labels).
    pub fn to_edge_list(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let _ = writeln!(s, "{} {}", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_arc_order() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.arcs().len(), 6);
        for e in 0..6 {
            let f = g.inverse(e);
            assert_ne!(e, f);
            assert_eq!(g.inverse(f), e);
            assert_eq!(g.arc(f).origin, g.arc(e).terminus);
            assert_eq!(g.arc(f).terminus, g.arc(e).origin);
        }
        assert_eq!(g.arc(4), Arc { origin: 2, terminus: 1 });
    }

    #[test]
    fn degrees_match_arc_origins() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        for v in 0..4 {
            let out = g.arcs().iter().filter(|a| a.origin == v).count();
            assert_eq!(out, g.degree(v));
        }
        assert_eq!(g.degrees(), &[3, 1, 1, 1]);
        assert!(g.is_tree());
        assert_eq!(g.regular_degree(), None);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(2, 1))
        );
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Err(Error::Disconnected { components: 2 })
        );
        assert_eq!(Graph::from_edges(1, &[]), Err(Error::NoEdges));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
    }

    #[test]
    fn bipartition_of_even_and_odd_cycles() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bipartition(), Some((vec![0, 2], vec![1, 3])));
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.bipartition(), None);
    }
}
