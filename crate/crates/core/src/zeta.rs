//! Generalised weighted zeta functions of a graph.
//!
//! Given per-arc weights `tau` and `mu`, the arc matrix is
//! `M_ef = tau(f) [t(e) = o(f)] - mu(f) [f = e^-1]` and the zeta reciprocal is
//! `det(I_2m - u M)`. The same value is obtained from an `n x n` determinant
//! once every edge factor `1 - u^2 mu(e) mu(e^-1)` is pulled out. With
//! `tau = mu = 1` this is the Ihara zeta function, whose reciprocal also has
//! the Bass form `(1 - u^2)^(m - n) det(I - uA + u^2 (D - I))`.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{adjacency_matrix, degree_matrix, Graph};
use crate::numerics::determinant;
use crate::{DenseMatrix, Error, Result, C64, POLE_GUARD};

const ONE: C64 = C64::new(1.0, 0.0);

/// Per-arc weights `tau(e)`, `mu(e)` over the canonical arc order.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcWeighting {
    tau: Vec<C64>,
    mu: Vec<C64>,
}

impl ArcWeighting {
    pub fn new(tau: Vec<C64>, mu: Vec<C64>) -> Result<Self> {
        if tau.len() != mu.len() || !tau.len().is_multiple_of(2) {
            return Err(Error::Dimension(format!(
                "weighting has {} tau and {} mu values",
                tau.len(),
                mu.len()
            )));
        }
        Ok(Self { tau, mu })
    }

    pub fn constant(g: &Graph, tau: C64, mu: C64) -> Self {
        let arcs = 2 * g.m();
        Self {
            tau: alloc::vec![tau; arcs],
            mu: alloc::vec![mu; arcs],
        }
    }

    /// `tau = mu = 1`: the Ihara zeta function.
    pub fn ihara(g: &Graph) -> Self {
        Self::constant(g, ONE, ONE)
    }

    /// Real and imaginary parts of every `tau(e)` and `mu(e)` drawn uniformly
    /// from `[-1, 1]` with ChaCha8 seeded by `seed` (all `tau` first, then
    /// all `mu`, each as `re, im`).
    pub fn random(g: &Graph, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |count: usize| -> Vec<C64> {
            (0..count)
                .map(|_| C64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
                .collect()
        };
        let tau = draw(2 * g.m());
        let mu = draw(2 * g.m());
        Self { tau, mu }
    }

    /// Weights under which the transpose of the arc matrix is the
    /// Grover-induced walk: `tau(e) = 4/d_o(e)^2`, `mu(e) = 4/d_o(e) - 1`.
    pub fn crw_induced(g: &Graph) -> Self {
        let (tau, mu) = g
            .arcs()
            .iter()
            .map(|a| {
                let d = g.degree(a.origin) as f64;
                (C64::new(4.0 / (d * d), 0.0), C64::new(4.0 / d - 1.0, 0.0))
            })
            .unzip();
        Self { tau, mu }
    }

    pub fn tau(&self, e: usize) -> C64 {
        self.tau[e]
    }

    pub fn mu(&self, e: usize) -> C64 {
        self.mu[e]
    }

    pub fn arc_count(&self) -> usize {
        self.tau.len()
    }

    /// `mu(e_j) mu(e_j^-1)` for edge `j`.
    pub fn mu_product(&self, j: usize) -> C64 {
        let m = self.tau.len() / 2;
        self.mu[j] * self.mu[j + m]
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.tau.len() != 2 * g.m() {
            return Err(Error::Dimension(format!(
                "weighting covers {} arcs, graph has {}",
                self.tau.len(),
                2 * g.m()
            )));
        }
        Ok(())
    }
}

/// `M(theta)_ef = tau(f) [t(e) = o(f)] - mu(f) [f = e^-1]`.
pub fn theta_matrix(g: &Graph, w: &ArcWeighting) -> Result<DenseMatrix> {
    w.check(g)?;
    let arcs = g.arcs();
    Ok(DenseMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        let mut x = C64::new(0.0, 0.0);
        if arcs[e].terminus == arcs[f].origin {
            x += w.tau(f);
        }
        if f == g.inverse(e) {
            x -= w.mu(f);
        }
        x
    }))
}

/// `det(I_2m - u M(theta))`.
pub fn zeta_recip_direct(g: &Graph, w: &ArcWeighting, u: C64) -> Result<C64> {
    determinant(&theta_matrix(g, w)?.identity_minus_scaled(u))
}

/// Edge factors `1 - u^2 mu(e_j) mu(e_j^-1)`, rejecting any within
/// [`POLE_GUARD`] of zero.
fn edge_factors(g: &Graph, w: &ArcWeighting, u: C64) -> Result<Vec<C64>> {
    (0..g.m())
        .map(|j| {
            let f = ONE - u * u * w.mu_product(j);
            if f.norm() <= POLE_GUARD {
                let (a, b) = g.edges()[j];
                Err(Error::NearPole(format!(
                    "u = {u} on edge {} ({}-{})",
                    j + 1,
                    a + 1,
                    b + 1
                )))
            } else {
                Ok(f)
            }
        })
        .collect()
}

/// The vertex matrices `A_G(theta)` and `D_G(theta)` at `u`.
pub fn weighted_vertex_matrices(
    g: &Graph,
    w: &ArcWeighting,
    u: C64,
) -> Result<(DenseMatrix, DenseMatrix)> {
    w.check(g)?;
    let factors = edge_factors(g, w, u)?;
    Ok(vertex_matrices(g, w, &factors))
}

fn vertex_matrices(g: &Graph, w: &ArcWeighting, factors: &[C64]) -> (DenseMatrix, DenseMatrix) {
    let m = g.m();
    let mut a = DenseMatrix::zeros(g.n(), g.n());
    let mut d = DenseMatrix::zeros(g.n(), g.n());
    for (e, arc) in g.arcs().iter().enumerate() {
        let factor = factors[e % m];
        a[(arc.origin, arc.terminus)] = w.tau(e) / factor;
        d[(arc.origin, arc.origin)] += w.tau(e) * w.mu(g.inverse(e)) / factor;
    }
    (a, d)
}

/// `prod_j (1 - u^2 mu(e_j) mu(e_j^-1)) * det(I_n - u A_G(theta) + u^2 D_G(theta))`.
pub fn zeta_recip_reduced(g: &Graph, w: &ArcWeighting, u: C64) -> Result<C64> {
    w.check(g)?;
    let factors = edge_factors(g, w, u)?;
    let (a, d) = vertex_matrices(g, w, &factors);
    let inner = &(&DenseMatrix::identity(g.n()) - &a.scale(u)) + &d.scale(u * u);
    let prefactor: C64 = factors.iter().product();
    Ok(prefactor * determinant(&inner)?)
}

/// `det(I_2m - u (B - J0))`, the Ihara zeta reciprocal on the arc side.
pub fn ihara_recip_edge(g: &Graph, u: C64) -> C64 {
    let nb = non_backtracking_matrix(g);
    determinant(&nb.identity_minus_scaled(u)).expect("square by construction")
}

/// `(1 - u^2)^(m - n) det(I_n - u A + u^2 (D - I_n))`.
///
/// For trees the exponent is `-1`, so `u = +-1` is a pole.
pub fn ihara_recip_bass(g: &Graph, u: C64) -> Result<C64> {
    let n = g.n();
    let exponent = g.m() as i32 - n as i32;
    let base = ONE - u * u;
    if exponent < 0 && base.norm() <= POLE_GUARD {
        return Err(Error::NearPole(format!("u = {u}: (1 - u^2)^{exponent}")));
    }
    let id = DenseMatrix::identity(n);
    let a = adjacency_matrix(g);
    let d_minus_i = &degree_matrix(g) - &id;
    let inner = &(&id - &a.scale(u)) + &d_minus_i.scale(u * u);
    Ok(base.powi(exponent) * determinant(&inner)?)
}

/// `B - J0`: the arc transition matrix that forbids immediate reversal.
pub fn non_backtracking_matrix(g: &Graph) -> DenseMatrix {
    let arcs = g.arcs();
    DenseMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        if arcs[e].terminus == arcs[f].origin && f != g.inverse(e) {
            ONE
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{arc_adjacency_matrix, flip_matrix, parse_edge_list, Family};
    use crate::numerics::relative_deviation;
    use proptest::prelude::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn unit_weights_give_non_backtracking_matrix() {
        for f in [Family::Cycle(4), Family::Complete(4), Family::Petersen] {
            let g = f.generate().unwrap();
            let m = theta_matrix(&g, &ArcWeighting::ihara(&g)).unwrap();
            assert_eq!(m, &arc_adjacency_matrix(&g) - &flip_matrix(&g));
            assert_eq!(m, non_backtracking_matrix(&g));
        }
    }

    #[test]
    fn zero_tau_gives_negative_flip() {
        let g = Family::Complete(4).generate().unwrap();
        let w = ArcWeighting::constant(&g, c(0.0), c(1.0));
        assert_eq!(theta_matrix(&g, &w).unwrap(), flip_matrix(&g).scale(c(-1.0)));
    }

    #[test]
    fn triangle_at_one_half() {
        // Two disjoint non-backtracking 3-cycles on the arcs: (1 - u^3)^2.
        let g = Family::Cycle(3).generate().unwrap();
        let w = ArcWeighting::ihara(&g);
        let u = c(0.5);
        let expected = c(0.765625);
        for value in [
            zeta_recip_direct(&g, &w, u).unwrap(),
            zeta_recip_reduced(&g, &w, u).unwrap(),
            ihara_recip_edge(&g, u),
            ihara_recip_bass(&g, u).unwrap(),
        ] {
            assert!((value - expected).norm() < 1e-14, "{value}");
        }
    }

    #[test]
    fn zero_u_gives_one() {
        let g = Family::RandomConnected {
            n: 7,
            extra_edges: 3,
            seed: 5,
        }
        .generate()
        .unwrap();
        let w = ArcWeighting::random(&g, 9);
        assert_eq!(zeta_recip_direct(&g, &w, c(0.0)).unwrap(), c(1.0));
        assert_eq!(zeta_recip_reduced(&g, &w, c(0.0)).unwrap(), c(1.0));
        assert_eq!(ihara_recip_edge(&g, c(0.0)), c(1.0));
        assert_eq!(ihara_recip_bass(&g, c(0.0)).unwrap(), c(1.0));
    }

    #[test]
    fn single_edge() {
        let g = parse_edge_list("2 1\n1 2").unwrap();
        let w = ArcWeighting::ihara(&g);
        assert_eq!(theta_matrix(&g, &w).unwrap(), DenseMatrix::zeros(2, 2));
        assert_eq!(zeta_recip_direct(&g, &w, c(0.5)).unwrap(), c(1.0));
    }

    #[test]
    fn bass_form_on_k4_and_petersen() {
        for (f, u) in [(Family::Complete(4), 0.3), (Family::Petersen, 0.2)] {
            let g = f.generate().unwrap();
            let edge = ihara_recip_edge(&g, c(u));
            let bass = ihara_recip_bass(&g, c(u)).unwrap();
            assert!(relative_deviation(edge, bass) < 1e-12, "{edge} vs {bass}");
            let direct = zeta_recip_direct(&g, &ArcWeighting::ihara(&g), c(u)).unwrap();
            assert!(relative_deviation(edge, direct) < 1e-12);
        }
    }

    #[test]
    fn tree_pole_in_bass_form() {
        let path = parse_edge_list("3 2\n1 2\n2 3").unwrap();
        assert!(matches!(ihara_recip_bass(&path, c(1.0)), Err(Error::NearPole(_))));
        assert!(matches!(ihara_recip_bass(&path, c(-1.0)), Err(Error::NearPole(_))));
        // For a tree the arc side has no non-backtracking cycles at all.
        assert!((ihara_recip_edge(&path, c(0.7)) - c(1.0)).norm() < 1e-15);
        assert!((ihara_recip_bass(&path, c(0.7)).unwrap() - c(1.0)).norm() < 1e-14);
    }

    #[test]
    fn reduced_form_names_offending_edge() {
        let g = Family::Cycle(4).generate().unwrap();
        let mut mu = alloc::vec![c(0.5); 8];
        mu[2] = c(4.0);
        mu[6] = c(1.0);
        let w = ArcWeighting::new(alloc::vec![c(1.0); 8], mu).unwrap();
        // Edge 3 has mu(e) mu(e^-1) = 4, so u = 1/2 sits on its pole.
        match zeta_recip_reduced(&g, &w, c(0.5)) {
            Err(Error::NearPole(msg)) => assert!(msg.contains("edge 3"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn weighting_size_mismatch() {
        let g = Family::Cycle(4).generate().unwrap();
        let h = Family::Cycle(5).generate().unwrap();
        let w = ArcWeighting::ihara(&h);
        assert!(matches!(theta_matrix(&g, &w), Err(Error::Dimension(_))));
        assert!(ArcWeighting::new(alloc::vec![c(1.0); 2], alloc::vec![c(1.0); 4]).is_err());
    }

    #[test]
    fn crw_weighting_transposes_to_walk_matrix() {
        let g = Family::RandomConnected {
            n: 6,
            extra_edges: 3,
            seed: 7,
        }
        .generate()
        .unwrap();
        let m = theta_matrix(&g, &ArcWeighting::crw_induced(&g)).unwrap();
        let p = crate::crw::crw_matrix(&g);
        assert!(m.transpose().max_abs_diff(&p).unwrap() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn direct_equals_reduced(seed in 0u64..10_000, r in 0.0f64..0.6, phase in 0.0f64..6.3) {
            let g = Family::RandomConnected { n: 6, extra_edges: (seed % 6) as usize, seed }.generate().unwrap();
            let w = ArcWeighting::random(&g, seed.wrapping_mul(31));
            let u = C64::from_polar(r, phase);
            let direct = zeta_recip_direct(&g, &w, u).unwrap();
            let reduced = zeta_recip_reduced(&g, &w, u).unwrap();
            prop_assert!(relative_deviation(direct, reduced) < 1e-9, "{} vs {}", direct, reduced);
        }
    }
}
