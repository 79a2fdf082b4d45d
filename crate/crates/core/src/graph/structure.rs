//! Vertex-indexed (`n x n`) and arc-indexed (`2m x 2m`) structural matrices.

use super::Graph;
use crate::{DenseMatrix, C64};

const ONE: C64 = C64::new(1.0, 0.0);

/// `A(G)`: 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(g.n(), g.n());
    for arc in g.arcs() {
        a[(arc.origin, arc.terminus)] = ONE;
    }
    a
}

/// `D_G`: diagonal degree matrix.
pub fn degree_matrix(g: &Graph) -> DenseMatrix {
    let diag: alloc::vec::Vec<C64> = g.degrees().iter().map(|&d| C64::new(d as f64, 0.0)).collect();
    DenseMatrix::diagonal(&diag)
}

/// `T(G)`: simple random walk, `T_uv = 1/deg(u)` on arcs.
pub fn srw_transition_matrix(g: &Graph) -> DenseMatrix {
    let mut t = DenseMatrix::zeros(g.n(), g.n());
    for arc in g.arcs() {
        t[(arc.origin, arc.terminus)] = C64::new(1.0 / g.degree(arc.origin) as f64, 0.0);
    }
    t
}

/// `B`: `B_ef = 1` iff `t(e) = o(f)`.
pub fn arc_adjacency_matrix(g: &Graph) -> DenseMatrix {
    let arcs = g.arcs();
    DenseMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        if arcs[e].terminus == arcs[f].origin {
            ONE
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// `J0`: permutation matrix of the arc reversal.
pub fn flip_matrix(g: &Graph) -> DenseMatrix {
    let size = 2 * g.m();
    let mut j = DenseMatrix::zeros(size, size);
    for e in 0..size {
        j[(e, g.inverse(e))] = ONE;
    }
    j
}
