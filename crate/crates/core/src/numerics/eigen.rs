use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

// Float supplies f64 math under no_std; with std linked the inherent methods win.
#[allow(unused_imports)]
use num_traits::Float;


use super::{Provenance, Spectrum};
use crate::{DenseMatrix, Error, Result, C64};

/// Largest matrix dimension accepted by [`eigenvalues`].
pub const DEFAULT_MAX_DIM: usize = 512;

/// Default for [`EigenOptions::cluster_radius`].
pub const DEFAULT_CLUSTER_RADIUS: f64 = 1e-6;

const EPS: f64 = f64::EPSILON;
const ZERO: C64 = C64::new(0.0, 0.0);

/// Knobs for the QR eigenvalue iteration.
#[derive(Debug, Clone, Copy)]
pub struct EigenOptions {
    /// Residual bound: every eigenvalue must have a unit vector `v` with
    /// `|M v - lambda v| <= tol * |M|_F`.
    pub tol: f64,
    pub max_dim: usize,
    /// The iteration cap is this number times the dimension.
    pub iterations_per_eigenvalue: usize,
    /// Eigenvalues chained within `cluster_radius * max(1, |M|_F)` of each
    /// other are replaced by their mean. Rounding splits a defective
    /// eigenvalue of a k-block into a ring of radius about `eps^(1/k)`,
    /// while the ring's mean stays accurate to `eps`. Zero disables this.
    pub cluster_radius: f64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        Self {
            tol: crate::TOL_SPECTRUM,
            max_dim: DEFAULT_MAX_DIM,
            iterations_per_eigenvalue: 30,
            cluster_radius: DEFAULT_CLUSTER_RADIUS,
        }
    }
}

/// Complex Schur decomposition `M = Z T Z^H` with `T` upper triangular.
#[derive(Debug, Clone)]
pub struct Schur {
    pub t: DenseMatrix,
    pub z: DenseMatrix,
}

/// All eigenvalues of a square matrix with multiplicity, tagged as oracle
/// output. `tol` is the residual bound described on [`EigenOptions::tol`].
pub fn eigenvalues(m: &DenseMatrix, tol: f64) -> Result<Spectrum> {
    eigenvalues_with(
        m,
        &EigenOptions {
            tol,
            ..EigenOptions::default()
        },
    )
}

pub fn eigenvalues_with(m: &DenseMatrix, opts: &EigenOptions) -> Result<Spectrum> {
    let s = schur_with(m, opts)?;
    let n = m.rows();
    let values: Vec<C64> = (0..n).map(|k| s.t[(k, k)]).collect();
    let mnorm = m.frobenius_norm();
    let bound = opts.tol * mnorm;
    let tnorm = s.t.frobenius_norm();
    for (k, &lambda) in values.iter().enumerate() {
        let v = schur_eigenvector(&s, k, tnorm);
        let mv = m.mul_vec(&v);
        let residual = mv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if residual > bound {
            return Err(Error::Residual { residual, bound });
        }
    }
    let values = cluster_means(&values, opts.cluster_radius * mnorm.max(1.0));
    Ok(Spectrum::new(values, Provenance::NumericOracle, "eigensolver"))
}

/// Single-linkage clusters within `radius`, each member replaced by the
/// cluster mean. Order is preserved.
pub fn cluster_means(values: &[C64], radius: f64) -> Vec<C64> {
    let n = values.len();
    if radius <= 0.0 || n < 2 {
        return values.to_vec();
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let mut sum = vec![ZERO; n];
    let mut count = vec![0usize; n];
    for (i, &z) in values.iter().enumerate() {
        let r = find(&mut parent, i);
        sum[r] += z;
        count[r] += 1;
    }
    (0..n)
        .map(|i| {
            let r = find(&mut parent, i);
            sum[r] / count[r] as f64
        })
        .collect()
}

/// Schur decomposition with default options.
pub fn schur(m: &DenseMatrix) -> Result<Schur> {
    schur_with(m, &EigenOptions::default())
}

fn schur_with(m: &DenseMatrix, opts: &EigenOptions) -> Result<Schur> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "eigenvalues of {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > opts.max_dim {
        return Err(Error::Dimension(format!(
            "dimension {n} exceeds eigensolver cap {}",
            opts.max_dim
        )));
    }
    let mut h = m.as_slice().to_vec();
    let mut z = DenseMatrix::identity(n).as_slice().to_vec();
    hessenberg(n, &mut h, &mut z);
    qr_iterate(n, &mut h, &mut z, opts.iterations_per_eigenvalue * n.max(1))?;
    Ok(Schur {
        t: DenseMatrix::from_fn(n, n, |i, j| h[i * n + j]),
        z: DenseMatrix::from_fn(n, n, |i, j| z[i * n + j]),
    })
}

/// Householder reduction to upper Hessenberg form, accumulating into `z`.
fn hessenberg(n: usize, h: &mut [C64], z: &mut [C64]) {
    let mut v = vec![ZERO; n];
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| h[i * n + k].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1) * n + k];
        let phase = if x0.norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        for i in k + 1..n {
            v[i] = h[i * n + k];
        }
        v[k + 1] -= alpha;
        let vnorm2: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        for j in k..n {
            let s: C64 = (k + 1..n).map(|i| v[i].conj() * h[i * n + j]).sum::<C64>() * beta;
            for i in k + 1..n {
                h[i * n + j] -= v[i] * s;
            }
        }
        for i in 0..n {
            let s: C64 = (k + 1..n).map(|j| h[i * n + j] * v[j]).sum::<C64>() * beta;
            for j in k + 1..n {
                h[i * n + j] -= s * v[j].conj();
            }
        }
        for i in 0..n {
            let s: C64 = (k + 1..n).map(|j| z[i * n + j] * v[j]).sum::<C64>() * beta;
            for j in k + 1..n {
                z[i * n + j] -= s * v[j].conj();
            }
        }
        h[(k + 1) * n + k] = alpha;
        for i in k + 2..n {
            h[i * n + k] = ZERO;
        }
    }
}

/// Rotation `[[c, s], [-conj(s), c]]` mapping `(x, y)` to `(r, 0)`.
fn givens(x: C64, y: C64) -> (f64, C64, C64) {
    if y == ZERO {
        return (1.0, ZERO, x);
    }
    let ny = y.norm();
    if x == ZERO {
        return (0.0, y.conj() / ny, C64::new(ny, 0.0));
    }
    let nx = x.norm();
    let norm = nx.hypot(ny);
    let phase = x / nx;
    (nx / norm, phase * y.conj() / norm, phase * norm)
}

fn l1(z: C64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// Single-shift implicit QR on an upper Hessenberg matrix, driving it to
/// triangular form. Wilkinson shifts, with an exceptional shift every tenth
/// iteration spent on the same eigenvalue.
fn qr_iterate(n: usize, h: &mut [C64], z: &mut [C64], cap: usize) -> Result<()> {
    if n < 2 {
        return Ok(());
    }
    let hnorm = h.iter().map(|x| l1(*x)).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut total = 0usize;
    let mut local = 0usize;
    while hi > 0 {
        let mut lo = hi;
        while lo > 0 {
            let mut scale = l1(h[(lo - 1) * n + lo - 1]) + l1(h[lo * n + lo]);
            if scale == 0.0 {
                scale = hnorm;
            }
            if l1(h[lo * n + lo - 1]) <= EPS * scale {
                h[lo * n + lo - 1] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            local = 0;
            continue;
        }
        total += 1;
        local += 1;
        if total > cap {
            return Err(Error::NoConvergence { iterations: cap });
        }

        let d = h[hi * n + hi];
        let mu = if local.is_multiple_of(10) {
            d + C64::new(0.75 * h[hi * n + hi - 1].norm(), 0.0)
        } else {
            let a = h[(hi - 1) * n + hi - 1];
            let bc = h[(hi - 1) * n + hi] * h[hi * n + hi - 1];
            let half = (a - d) * 0.5;
            let disc = (half * half + bc).sqrt();
            let den = if (half + disc).norm() >= (half - disc).norm() {
                half + disc
            } else {
                half - disc
            };
            if den == ZERO {
                d
            } else {
                d - bc / den
            }
        };

        for k in lo..hi {
            let (x, y) = if k == lo {
                (h[lo * n + lo] - mu, h[(lo + 1) * n + lo])
            } else {
                (h[k * n + k - 1], h[(k + 1) * n + k - 1])
            };
            let (c, s, r) = givens(x, y);
            if k > lo {
                h[k * n + k - 1] = r;
                h[(k + 1) * n + k - 1] = ZERO;
            }
            for j in k..n {
                let t1 = h[k * n + j];
                let t2 = h[(k + 1) * n + j];
                h[k * n + j] = t1 * c + s * t2;
                h[(k + 1) * n + j] = -s.conj() * t1 + t2 * c;
            }
            let last = (k + 2).min(hi);
            for i in 0..=last {
                let t1 = h[i * n + k];
                let t2 = h[i * n + k + 1];
                h[i * n + k] = t1 * c + t2 * s.conj();
                h[i * n + k + 1] = -t1 * s + t2 * c;
            }
            for i in 0..n {
                let t1 = z[i * n + k];
                let t2 = z[i * n + k + 1];
                z[i * n + k] = t1 * c + t2 * s.conj();
                z[i * n + k + 1] = -t1 * s + t2 * c;
            }
        }
    }
    Ok(())
}

/// Unit eigenvector of `M` for the `k`-th diagonal entry of `T`, obtained by
/// back substitution in `T` and mapped through `Z`. Near-zero divisors are
/// floored at `eps * |T|`.
fn schur_eigenvector(s: &Schur, k: usize, tnorm: f64) -> Vec<C64> {
    let n = s.t.rows();
    let lambda = s.t[(k, k)];
    let smin = (EPS * tnorm).max(f64::MIN_POSITIVE * 1e20);
    let mut y = vec![ZERO; n];
    y[k] = C64::new(1.0, 0.0);
    for j in (0..k).rev() {
        let acc: C64 = (j + 1..=k).map(|l| s.t[(j, l)] * y[l]).sum();
        let mut den = s.t[(j, j)] - lambda;
        if den.norm() < smin {
            den = C64::new(smin, 0.0);
        }
        y[j] = -acc / den;
        let big = y[j].norm();
        if big > 1e100 {
            for yl in &mut y[j..=k] {
                *yl /= big;
            }
        }
    }
    let mut v = s.z.mul_vec(&y);
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for x in &mut v {
        *x /= norm;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency_matrix, Family};
    use crate::numerics::multiset_match;

    fn spectrum_of(vals: &[(f64, f64)]) -> Spectrum {
        Spectrum::new(
            vals.iter().map(|&(a, b)| C64::new(a, b)).collect(),
            Provenance::ClosedForm,
            "expected",
        )
    }

    #[test]
    fn swap_matrix() {
        let m = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let s = eigenvalues(&m, 1e-10).unwrap();
        let r = multiset_match(&s, &spectrum_of(&[(1.0, 0.0), (-1.0, 0.0)]), 1e-12).unwrap();
        assert!(r.pass, "{:?}", s.values);
    }

    #[test]
    fn complete_and_cycle_adjacency() {
        let k4 = adjacency_matrix(&Family::Complete(4).generate().unwrap());
        let s = eigenvalues(&k4, 1e-10).unwrap();
        let expected = spectrum_of(&[(3.0, 0.0), (-1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0)]);
        assert!(multiset_match(&s, &expected, 1e-10).unwrap().pass);

        let c4 = adjacency_matrix(&Family::Cycle(4).generate().unwrap());
        let s = eigenvalues(&c4, 1e-10).unwrap();
        let expected = spectrum_of(&[(2.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-2.0, 0.0)]);
        assert!(multiset_match(&s, &expected, 1e-10).unwrap().pass);
    }

    #[test]
    fn schur_reconstructs_matrix() {
        let m = DenseMatrix::from_fn(7, 7, |i, j| {
            C64::new(((i * 7 + j * 3) % 5) as f64 - 2.0, ((i + 2 * j) % 3) as f64 - 1.0)
        });
        let s = schur(&m).unwrap();
        let back = &(&s.z * &s.t) * &s.z.conj_transpose();
        assert!(back.max_abs_diff(&m).unwrap() < 1e-12);
        for i in 0..7 {
            for j in 0..i {
                assert_eq!(s.t[(i, j)], ZERO);
            }
        }
        let zz = &s.z.conj_transpose() * &s.z;
        assert!(zz.max_abs_diff(&DenseMatrix::identity(7)).unwrap() < 1e-13);
    }

    #[test]
    fn rotation_matrix_has_unit_circle_spectrum() {
        let (c, s) = (0.6, 0.8);
        let m = DenseMatrix::from_real_rows(&[&[c, -s], &[s, c]]).unwrap();
        let got = eigenvalues(&m, 1e-10).unwrap();
        let want = spectrum_of(&[(c, s), (c, -s)]);
        assert!(multiset_match(&got, &want, 1e-14).unwrap().pass);
    }

    #[test]
    fn jordan_block_converges() {
        let m = DenseMatrix::from_real_rows(&[&[2.0, 1.0, 0.0], &[0.0, 2.0, 1.0], &[0.0, 0.0, 2.0]])
            .unwrap();
        let s = eigenvalues(&m, 1e-8).unwrap();
        assert!(s.values.iter().all(|v| (v - C64::new(2.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn cluster_means_chain_and_keep_order() {
        let v = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 1e-7),
            C64::new(0.0, -1e-7),
            C64::new(2e-7, -1e-7),
        ];
        let out = cluster_means(&v, 2.5e-7);
        assert_eq!(out[0], v[0]);
        let mean = (v[1] + v[2] + v[3]) / 3.0;
        assert!(out[1..].iter().all(|&z| (z - mean).norm() < 1e-18));
        assert_eq!(cluster_means(&v, 0.0), v.to_vec());
    }

    #[test]
    fn rotated_jordan_blocks_are_recovered() {
        // Q J Q^T with two 2-blocks; rounding splits each pair by ~1e-8.
        let j = DenseMatrix::from_real_rows(&[
            &[0.5, 1.0, 0.0, 0.0],
            &[0.0, 0.5, 0.0, 0.0],
            &[0.0, 0.0, -0.3, 0.7],
            &[0.0, 0.0, 0.0, -0.3],
        ])
        .unwrap();
        let w = [0.3, -0.7, 0.2, 0.6];
        let w2: f64 = w.iter().map(|x| x * x).sum();
        let q = DenseMatrix::from_fn(4, 4, |a, b| {
            C64::new(if a == b { 1.0 } else { 0.0 } - 2.0 * w[a] * w[b] / w2, 0.0)
        });
        let m = &(&q * &j) * &q.conj_transpose();
        let want = spectrum_of(&[(0.5, 0.0), (0.5, 0.0), (-0.3, 0.0), (-0.3, 0.0)]);
        let raw = eigenvalues_with(&m, &EigenOptions { cluster_radius: 0.0, ..EigenOptions::default() })
            .unwrap();
        let raw_err = multiset_match(&raw, &want, 1.0).unwrap().max_distance;
        let refined = eigenvalues(&m, 1e-8).unwrap();
        let err = multiset_match(&refined, &want, 1.0).unwrap().max_distance;
        assert!(err < 1e-14 && err <= raw_err, "{err} vs {raw_err}");
    }

    #[test]
    fn rejects_non_square_and_oversized() {
        assert!(eigenvalues(&DenseMatrix::zeros(2, 3), 1e-8).is_err());
        let opts = EigenOptions {
            max_dim: 3,
            ..EigenOptions::default()
        };
        assert!(matches!(
            eigenvalues_with(&DenseMatrix::identity(4), &opts),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn iteration_cap_is_reported() {
        let m = DenseMatrix::from_fn(6, 6, |i, j| C64::new((i as f64 - j as f64).sin(), 0.0));
        let opts = EigenOptions {
            iterations_per_eigenvalue: 0,
            ..EigenOptions::default()
        };
        assert!(matches!(
            eigenvalues_with(&m, &opts),
            Err(Error::NoConvergence { .. })
        ));
    }
}
