//! Arc-level operators of finite graphs and their spectra.
//!
//! Every undirected edge `uv` of a simple connected graph contributes two
//! arcs `(u, v)` and `(v, u)`. The crate builds the matrices that live on
//! this arc set (the arc adjacency `B`, the flip `J0`, the Grover matrix `U`,
//! the correlated-random-walk transition matrix `P = |U|^2`, weighted zeta
//! matrices) and evaluates both sides of the determinant identities that
//! relate them to vertex-indexed matrices. Closed-form spectra are provided
//! for the regular, semiregular bipartite and cycle cases, together with a
//! dense eigenvalue solver used as an independent oracle.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graph type, edge-list parsing, generators, structural matrices |
//! | [`matrix`] | dense complex matrix |
//! | [`numerics`] | determinants, eigenvalues, characteristic polynomials, spectrum matching |
//! | [`zeta`] | weighted zeta matrix and the Ihara special case |
//! | [`grover`] | Grover matrix and its spectral mapping |
//! | [`crw`] | Grover-induced correlated random walk |
//! | [`crw2`] | coin-parameterised walk on cycles, uniform walk on regular graphs |
//! | [`verify`] | sample points, verification reports and the standard suites |

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod crw;
pub mod crw2;
mod error;
pub mod graph;
pub mod grover;
pub mod matrix;
pub mod numerics;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::DenseMatrix;
pub use numerics::{Polynomial, Provenance, Spectrum};

/// Double-precision complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Default relative tolerance for determinant identities.
pub const TOL_IDENTITY: f64 = 1e-9;
/// Default absolute tolerance for spectrum comparisons.
pub const TOL_SPECTRUM: f64 = 1e-8;
/// Distance below which a denominator is treated as a pole.
pub const POLE_GUARD: f64 = 1e-12;
