use alloc::vec::Vec;

use crate::{DenseMatrix, Error, Result, C64};

/// In-place LU factorisation with partial pivoting, `P A = L U`.
///
/// The pivot in column `k` is the first row of maximal modulus at or below
/// the diagonal, so the factorisation is deterministic.
#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    lu: Vec<C64>,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    pub fn new(m: &DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(alloc::format!(
                "determinant of {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut lu = m.as_slice().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let mut piv = k;
            let mut best = lu[k * n + k].norm();
            for i in k + 1..n {
                let v = lu[i * n + k].norm();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if piv != k {
                for j in 0..n {
                    lu.swap(k * n + j, piv * n + j);
                }
                perm.swap(k, piv);
                swaps += 1;
            }
            let pivot = lu[k * n + k];
            if pivot == C64::new(0.0, 0.0) {
                continue;
            }
            for i in k + 1..n {
                let factor = lu[i * n + k] / pivot;
                if factor == C64::new(0.0, 0.0) {
                    continue;
                }
                lu[i * n + k] = factor;
                for j in k + 1..n {
                    let ukj = lu[k * n + j];
                    lu[i * n + j] -= factor * ukj;
                }
            }
        }
        Ok(Self { n, lu, perm, swaps })
    }

    pub fn determinant(&self) -> C64 {
        let mut det = if self.swaps.is_multiple_of(2) {
            C64::new(1.0, 0.0)
        } else {
            C64::new(-1.0, 0.0)
        };
        for k in 0..self.n {
            det *= self.lu[k * self.n + k];
        }
        det
    }

    /// Solves `A x = b`. Zero pivots are replaced by `floor`, which turns the
    /// solve into one step of inverse iteration on a singular matrix.
    pub fn solve_regularised(&self, b: &[C64], floor: f64) -> Vec<C64> {
        let n = self.n;
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for k in 0..i {
                let l = self.lu[i * n + k];
                let xk = x[k];
                x[i] -= l * xk;
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let u = self.lu[i * n + k];
                let xk = x[k];
                x[i] -= u * xk;
            }
            let mut d = self.lu[i * n + i];
            if d.norm() < floor {
                d = C64::new(floor, 0.0);
            }
            x[i] /= d;
        }
        x
    }
}

/// Determinant via LU with partial pivoting.
pub fn determinant(m: &DenseMatrix) -> Result<C64> {
    Ok(Lu::new(m)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{flip_matrix, Family};

    #[test]
    fn identity_has_unit_determinant() {
        assert_eq!(determinant(&DenseMatrix::identity(5)).unwrap(), C64::new(1.0, 0.0));
    }

    #[test]
    fn permutation_parity_is_exact() {
        let c3 = Family::Cycle(3).generate().unwrap();
        assert_eq!(determinant(&flip_matrix(&c3)).unwrap(), C64::new(-1.0, 0.0));
    }

    #[test]
    fn two_by_two() {
        let m = DenseMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let d = determinant(&m).unwrap();
        assert!((d - C64::new(-2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn singular_and_non_square() {
        let m = DenseMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        assert_eq!(determinant(&m).unwrap().norm(), 0.0);
        assert!(determinant(&DenseMatrix::zeros(2, 3)).is_err());
        assert_eq!(determinant(&DenseMatrix::zeros(0, 0)).unwrap(), C64::new(1.0, 0.0));
    }

    #[test]
    fn solve_recovers_vector() {
        let m = DenseMatrix::from_fn(3, 3, |i, j| C64::new((i * 3 + j) as f64 + 1.0, (i as f64) - (j as f64)));
        let m = &m + &DenseMatrix::identity(3).scale(C64::new(5.0, 0.0));
        let x = [C64::new(1.0, 0.5), C64::new(-2.0, 0.0), C64::new(0.0, 3.0)];
        let b = m.mul_vec(&x);
        let y = Lu::new(&m).unwrap().solve_regularised(&b, 0.0);
        for (a, b) in x.iter().zip(&y) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
