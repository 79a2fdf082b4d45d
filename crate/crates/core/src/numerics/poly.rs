use alloc::vec::Vec;
use core::f64::consts::PI;

// Float supplies f64 math under no_std; with std linked the inherent methods win.
#[allow(unused_imports)]
use num_traits::Float;


use super::determinant;
use crate::{DenseMatrix, Error, Result, C64};

/// Polynomial with complex coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<C64>,
}

impl Polynomial {
    /// Builds a polynomial and drops exactly-zero leading coefficients.
    pub fn new(coeffs: Vec<C64>) -> Self {
        Self { coeffs }.trimmed(0.0)
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coeffs
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coefficient_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Removes leading coefficients whose modulus is at most
    /// `tol * max |c_k|`, always keeping the constant term.
    pub fn trimmed(mut self, tol: f64) -> Self {
        let scale = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.norm() <= tol * scale)
        {
            self.coeffs.pop();
        }
        self
    }
}

/// Coefficients of `det(lambda I - M)`.
///
/// The monic part is known, so `q(z) = det(zI - M) - z^n` has degree `n - 1`
/// and is recovered by a discrete Fourier transform of its values at the `n`
/// points `rho * w^j` with `w = exp(2 pi i / n)`. The radius `rho` is the
/// largest row sum of `|M|` (a bound on the spectral radius), floored at 1.
pub fn char_poly(m: &DenseMatrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::Dimension(alloc::format!(
            "characteristic polynomial of {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::new(alloc::vec![C64::new(1.0, 0.0)]));
    }
    let rho = (0..n)
        .map(|i| m.row(i).iter().map(|z| z.norm()).sum::<f64>())
        .fold(1.0, f64::max);
    let rho_n = rho.powi(n as i32);
    let mut samples = Vec::with_capacity(n);
    for j in 0..n {
        let z = C64::from_polar(rho, 2.0 * PI * j as f64 / n as f64);
        samples.push(determinant(&m.shifted_neg(z))? - rho_n);
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..n {
        let sum: C64 = samples
            .iter()
            .enumerate()
            .map(|(j, &q)| q * C64::from_polar(1.0, -2.0 * PI * ((j * k) % n) as f64 / n as f64))
            .sum();
        coeffs.push(sum / (n as f64 * rho.powi(k as i32)));
    }
    coeffs.push(C64::new(1.0, 0.0));
    Ok(Polynomial { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{flip_matrix, parse_edge_list};

    fn close(p: &Polynomial, want: &[f64]) {
        assert_eq!(p.coefficients().len(), want.len(), "{p:?}");
        for (c, w) in p.coefficients().iter().zip(want) {
            assert!((c - C64::new(*w, 0.0)).norm() < 1e-13, "{p:?}");
        }
    }

    #[test]
    fn identity_two() {
        close(&char_poly(&DenseMatrix::identity(2)).unwrap(), &[1.0, -2.0, 1.0]);
    }

    #[test]
    fn swap_and_single_edge_flip() {
        let swap = DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        close(&char_poly(&swap).unwrap(), &[-1.0, 0.0, 1.0]);
        let g = parse_edge_list("2 1\n1 2").unwrap();
        close(&char_poly(&flip_matrix(&g)).unwrap(), &[-1.0, 0.0, 1.0]);
    }

    /// Faddeev-LeVerrier recursion, used as an independent route.
    fn faddeev_leverrier(m: &DenseMatrix) -> Vec<C64> {
        let n = m.rows();
        let mut c = alloc::vec![C64::new(0.0, 0.0); n + 1];
        c[n] = C64::new(1.0, 0.0);
        let mut prev = DenseMatrix::zeros(n, n);
        for k in 1..=n {
            let mut mk = m * &prev;
            for i in 0..n {
                mk[(i, i)] += c[n - k + 1];
            }
            c[n - k] = -(m * &mk).trace() / k as f64;
            prev = mk;
        }
        c
    }

    #[test]
    fn agrees_with_faddeev_leverrier() {
        let m = DenseMatrix::from_fn(6, 6, |i, j| {
            C64::new(((3 * i + 5 * j) % 7) as f64 / 7.0 - 0.4, ((i * j) % 3) as f64 / 5.0)
        });
        let fl = faddeev_leverrier(&m);
        let p = char_poly(&m).unwrap();
        for (a, b) in p.coefficients().iter().zip(&fl) {
            assert!((a - b).norm() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn trimming_and_eval() {
        let p = Polynomial::new(alloc::vec![
            C64::new(1.0, 0.0),
            C64::new(2.0, 0.0),
            C64::new(1e-20, 0.0)
        ]);
        assert_eq!(p.degree(), 2);
        let t = p.clone().trimmed(1e-15);
        assert_eq!(t.degree(), 1);
        assert_eq!(t.eval(C64::new(3.0, 0.0)), C64::new(7.0, 0.0));
        assert_eq!(Polynomial::new(alloc::vec![C64::new(0.0, 0.0); 3]).degree(), 0);
    }

    #[test]
    fn non_square() {
        assert!(char_poly(&DenseMatrix::zeros(1, 2)).is_err());
    }
}
