//! Dense complex linear algebra used by every identity check.
//!
//! Everything here is double precision. Determinants use LU with partial
//! pivoting; eigenvalues come from a Householder Hessenberg reduction
//! followed by single-shift complex QR iterations, with a per-eigenvalue
//! residual check against the original matrix.

mod det;
mod eigen;
mod poly;
mod spectrum;
mod symmetric;

pub use det::{determinant, Lu};
pub use eigen::{
    cluster_means, eigenvalues, eigenvalues_with, schur, EigenOptions, Schur, DEFAULT_CLUSTER_RADIUS,
    DEFAULT_MAX_DIM,
};
pub use poly::{char_poly, Polynomial};
pub use spectrum::{multiset_match, MatchReport, Provenance, Spectrum};
pub use symmetric::symmetric_eigenvalues;

use crate::C64;

/// `|a - b| / max(|a|, |b|, 1e-30)`.
pub fn relative_deviation(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm()).max(1e-30);
    (a - b).norm() / scale
}

/// Principal square root of `z`, taken as exactly zero when `|z|` is at most
/// `1e-12 * scale`.
///
/// Closed-form spectra take square roots of differences such as
/// `4 lambda^2 - 16` that vanish exactly at double roots. Rounding in
/// `lambda` leaves a residue near `1e-15`, and its square root near `3e-8`
/// would dominate the result; `scale` is the magnitude of the cancelling terms.
pub fn snapped_sqrt(z: C64, scale: f64) -> C64 {
    if z.norm() <= 1e-12 * scale.max(1.0) {
        C64::new(0.0, 0.0)
    } else {
        z.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapping() {
        assert_eq!(snapped_sqrt(C64::new(-3e-15, 0.0), 16.0), C64::new(0.0, 0.0));
        assert_eq!(snapped_sqrt(C64::new(-4.0, 0.0), 16.0), C64::new(0.0, 2.0));
        assert_eq!(relative_deviation(C64::new(0.0, 0.0), C64::new(0.0, 0.0)), 0.0);
    }
}
