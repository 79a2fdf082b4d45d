//! The Grover matrix and its spectral mapping from the simple random walk.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::graph::{srw_transition_matrix, Graph};
use crate::numerics::{determinant, snapped_sqrt, symmetric_eigenvalues};
use crate::{DenseMatrix, Error, Provenance, Result, Spectrum, C64, POLE_GUARD};

/// `U_ef = 2/d_t(f) - [f = e^-1]` when `t(f) = o(e)`, zero otherwise.
pub fn grover_matrix(g: &Graph) -> DenseMatrix {
    let arcs = g.arcs();
    DenseMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        if arcs[f].terminus != arcs[e].origin {
            return C64::new(0.0, 0.0);
        }
        let w = 2.0 / g.degree(arcs[f].terminus) as f64;
        if f == g.inverse(e) {
            C64::new(w - 1.0, 0.0)
        } else {
            C64::new(w, 0.0)
        }
    })
}

/// Both sides of the Grover characteristic polynomial identity at `lambda`:
/// `det(lambda I - U)` and `(lambda^2 - 1)^(m-n) det((lambda^2 + 1) I - 2 lambda T)`.
pub fn grover_charpoly_both_sides(g: &Graph, lambda: C64) -> Result<(C64, C64)> {
    let left = determinant(&grover_matrix(g).shifted_neg(lambda))?;
    let exponent = g.m() as i32 - g.n() as i32;
    let base = lambda * lambda - 1.0;
    if exponent != 0 && base.norm() < POLE_GUARD {
        return Err(Error::NearPole(format!(
            "lambda = {lambda}: (lambda^2 - 1)^{exponent}"
        )));
    }
    let t = srw_transition_matrix(g);
    let inner = t.scale(2.0 * lambda).shifted_neg(lambda * lambda + 1.0);
    let right = base.powi(exponent) * determinant(&inner)?;
    Ok((left, right))
}

/// Eigenvalues of the simple random walk `T(G)`, descending.
///
/// `T = D^-1 A` is similar to the symmetric `D^-1/2 A D^-1/2`, which is
/// diagonalised instead so the values come out exactly real.
pub fn srw_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    let scale: Vec<f64> = g.degrees().iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    let mut s = DenseMatrix::zeros(g.n(), g.n());
    for arc in g.arcs() {
        s[(arc.origin, arc.terminus)] = C64::new(scale[arc.origin] * scale[arc.terminus], 0.0);
    }
    symmetric_eigenvalues(&s)
}

/// Closed-form spectrum of `U`: `lambda_T +- i sqrt(1 - lambda_T^2)` for every
/// eigenvalue of `T(G)`, plus `m - n` copies each of `+1` and `-1`.
/// Trees (`m < n`) are rejected.
pub fn grover_spectrum_closed(g: &Graph) -> Result<Spectrum> {
    if g.m() < g.n() {
        return Err(Error::TreeLike { m: g.m(), n: g.n() });
    }
    let mut values = Vec::with_capacity(2 * g.m());
    for lt in srw_eigenvalues(g)? {
        if lt.abs() > 1.0 + 1e-9 {
            return Err(Error::Internal(format!(
                "random-walk eigenvalue {lt} outside [-1, 1]"
            )));
        }
        let im = C64::i() * snapped_sqrt(C64::new(1.0 - lt * lt, 0.0), 1.0);
        values.push(lt + im);
        values.push(lt - im);
    }
    for _ in 0..g.m() - g.n() {
        values.push(C64::new(1.0, 0.0));
        values.push(C64::new(-1.0, 0.0));
    }
    Ok(Spectrum::new(values, Provenance::ClosedForm, "grover spectral mapping"))
}

/// `|U^T U - I|_max`.
pub fn unitarity_defect(u: &DenseMatrix) -> f64 {
    let utu = &u.conj_transpose() * u;
    utu.max_abs_diff(&DenseMatrix::identity(u.rows()))
        .expect("square")
}

/// Whether every nonzero entry of `U` has modulus `1/2` (within `1e-12`).
pub fn has_half_modulus_entries(u: &DenseMatrix) -> bool {
    u.as_slice()
        .iter()
        .filter(|z| z.norm() > 1e-12)
        .all(|z| (z.norm() - 0.5).abs() <= 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, Family};
    use crate::numerics::{eigenvalues, multiset_match, relative_deviation};

    fn k4() -> Graph {
        Family::Complete(4).generate().unwrap()
    }

    #[test]
    fn single_edge_is_a_swap() {
        let g = parse_edge_list("2 1\n1 2").unwrap();
        let u = grover_matrix(&g);
        assert_eq!(u, DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap());
    }

    #[test]
    fn cycle_gives_non_backtracking_permutation() {
        let g = Family::Cycle(6).generate().unwrap();
        let u = grover_matrix(&g);
        assert_eq!(u, crate::zeta::non_backtracking_matrix(&g).transpose());
        for e in 0..12 {
            assert_eq!(u[(e, g.inverse(e))], C64::new(0.0, 0.0));
        }
    }

    #[test]
    fn k4_columns_and_unitarity() {
        let u = grover_matrix(&k4());
        for j in 0..u.cols() {
            let mut col: Vec<f64> = (0..u.rows())
                .map(|i| u[(i, j)].re)
                .filter(|x| *x != 0.0)
                .collect();
            col.sort_by(f64::total_cmp);
            assert_eq!(col.len(), 3);
            assert!((col[0] + 1.0 / 3.0).abs() < 1e-15);
            assert!((col[1] - 2.0 / 3.0).abs() < 1e-15 && (col[2] - 2.0 / 3.0).abs() < 1e-15);
        }
        assert!(unitarity_defect(&u) <= 1e-12);
        for s in u.col_sums() {
            assert!((s - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn charpoly_identity() {
        let g = k4();
        let (l, r) = grover_charpoly_both_sides(&g, C64::new(0.5, 0.1)).unwrap();
        assert!(relative_deviation(l, r) < 1e-12);
        let (l, r) = grover_charpoly_both_sides(&g, C64::new(0.0, 0.0)).unwrap();
        assert!(relative_deviation(l, r) < 1e-12);
        assert!((l.norm() - 1.0).abs() < 1e-12);
        let c5 = Family::Cycle(5).generate().unwrap();
        let (l, r) = grover_charpoly_both_sides(&c5, C64::new(2.0, 0.0)).unwrap();
        assert!(relative_deviation(l, r) < 1e-12);
        assert!(matches!(
            grover_charpoly_both_sides(&g, C64::new(1.0, 0.0)),
            Err(Error::NearPole(_))
        ));
    }

    #[test]
    fn closed_form_matches_oracle_on_k4() {
        let g = k4();
        let closed = grover_spectrum_closed(&g).unwrap();
        assert_eq!(closed.len(), 12);
        let r8 = 8f64.sqrt() / 3.0;
        assert_eq!(closed.count_near(C64::new(-1.0 / 3.0, r8), 1e-12), 3);
        assert_eq!(closed.count_near(C64::new(1.0, 0.0), 1e-12), 4);
        assert_eq!(closed.count_near(C64::new(-1.0, 0.0), 1e-12), 2);
        let oracle = eigenvalues(&grover_matrix(&g), 1e-8).unwrap();
        assert!(multiset_match(&closed, &oracle, 1e-8).unwrap().pass);
    }

    #[test]
    fn closed_form_on_cycles_is_roots_of_unity() {
        let g = Family::Cycle(7).generate().unwrap();
        let closed = grover_spectrum_closed(&g).unwrap();
        for z in &closed.values {
            assert!((z.norm() - 1.0).abs() < 1e-14);
            assert!((z.powu(7) - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn trees_rejected() {
        let g = parse_edge_list("2 1\n1 2").unwrap();
        assert_eq!(
            grover_spectrum_closed(&g),
            Err(Error::TreeLike { m: 1, n: 2 })
        );
    }

    #[test]
    fn hadamard_only_for_degree_four() {
        let four = Family::CompleteBipartite(4, 4).generate().unwrap();
        assert!(has_half_modulus_entries(&grover_matrix(&four)));
        let k5 = Family::Complete(5).generate().unwrap();
        assert!(has_half_modulus_entries(&grover_matrix(&k5)));
        for f in [Family::Complete(4), Family::Petersen, Family::Cycle(5), Family::CompleteBipartite(3, 3)] {
            assert!(!has_half_modulus_entries(&grover_matrix(&f.generate().unwrap())));
        }
    }
}
