use alloc::format;
use alloc::vec::Vec;

// Float supplies f64 math under no_std; with std linked the inherent methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{DenseMatrix, Error, Result};

/// Eigenvalues of a real symmetric matrix, sorted in descending order.
///
/// Cyclic Jacobi rotations until the off-diagonal mass falls below
/// `1e-15 * |A|_F`. Rejects inputs with imaginary parts or asymmetry above
/// `1e-12 * |A|_max`.
pub fn symmetric_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "symmetric eigenvalues of {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let slack = 1e-12 * m.max_abs().max(1.0);
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)].im.abs() > slack || (m[(i, j)].re - m[(j, i)].re).abs() > slack {
                return Err(Error::InvalidParameter(format!(
                    "matrix is not real symmetric at ({i}, {j})"
                )));
            }
        }
    }
    let mut a: Vec<f64> = m.as_slice().iter().map(|z| z.re).collect();
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-15 * norm.max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    Ok(vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency_matrix, Family};

    #[test]
    fn complete_bipartite_two_three() {
        let a = adjacency_matrix(&Family::CompleteBipartite(2, 3).generate().unwrap());
        let v = symmetric_eigenvalues(&a).unwrap();
        let want = [6f64.sqrt(), 0.0, 0.0, 0.0, -6f64.sqrt()];
        for (x, y) in v.iter().zip(want) {
            assert!((x - y).abs() < 1e-13, "{v:?}");
        }
    }

    #[test]
    fn petersen() {
        let a = adjacency_matrix(&Family::Petersen.generate().unwrap());
        let v = symmetric_eigenvalues(&a).unwrap();
        let want = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        for (x, y) in v.iter().zip(want) {
            assert!((x - y).abs() < 1e-13, "{v:?}");
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(symmetric_eigenvalues(&m).is_err());
    }
}
