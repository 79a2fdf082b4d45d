//! Two further arc walks: a coin-driven walk on cycles, and the uniform
//! walk `U = B/d` on regular graphs.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::str::FromStr;

#[allow(unused_imports)]
use num_traits::Float;

use crate::graph::{adjacency_matrix, arc_adjacency_matrix, Graph};
use crate::numerics::{determinant, snapped_sqrt, symmetric_eigenvalues};
use crate::{DenseMatrix, Error, Provenance, Result, Spectrum, C64};

/// Coin `[[a, b], [c, d]]` with `a + c = b + d = 1`, entries in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl CoinParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for (name, x) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::InvalidParameter(format!(
                    "coin entry {name} = {x} is outside [0, 1]"
                )));
            }
        }
        if (a + c - 1.0).abs() > 1e-14 || (b + d - 1.0).abs() > 1e-14 {
            return Err(Error::InvalidParameter(format!(
                "coin ({a}, {b}, {c}, {d}) needs a + c = b + d = 1"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    /// `a = b = c = d = 1/2`.
    pub fn half() -> Self {
        Self {
            a: 0.5,
            b: 0.5,
            c: 0.5,
            d: 0.5,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// `ad - bc`.
    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }
}

impl FromStr for CoinParams {
    type Err = Error;

    /// Parses `"a,b,c,d"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::InvalidParameter(format!(
                "coin needs four comma-separated values, got {s:?}"
            )));
        }
        let mut v = [0.0; 4];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| {
                Error::InvalidParameter(format!("coin entry {p:?} is not a number"))
            })?;
        }
        Self::new(v[0], v[1], v[2], v[3])
    }
}

fn require_cycle_length(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length {n} is below 3"
        )));
    }
    Ok(())
}

/// Permutation matrix of `i -> i + 1 (mod n)`, so `Q[(i + 1) % n][i] = 1`.
fn shift(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| {
        if i == (j + 1) % n {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// `U = [[d Q^-1, c I], [b I, a Q]]` on `C_n`; every column sums to 1.
pub fn second_type_matrix(n: usize, coin: CoinParams) -> Result<DenseMatrix> {
    require_cycle_length(n)?;
    let q = shift(n);
    let mut u = DenseMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            u[(i, j)] = q[(j, i)] * coin.d;
            u[(n + i, n + j)] = q[(i, j)] * coin.a;
        }
        u[(i, n + i)] = C64::new(coin.c, 0.0);
        u[(n + i, i)] = C64::new(coin.b, 0.0);
    }
    Ok(u)
}

/// Circulant `W(C_n)` with `d` on the forward diagonal `(i, i+1)` and `a` on
/// the backward diagonal `(i, i-1)`.
pub fn weight_matrix(n: usize, coin: CoinParams) -> Result<DenseMatrix> {
    require_cycle_length(n)?;
    let mut w = DenseMatrix::zeros(n, n);
    for i in 0..n {
        w[(i, (i + 1) % n)] += coin.d;
        w[(i, (i + n - 1) % n)] += coin.a;
    }
    Ok(w)
}

/// `det(lambda I - U)` and `det((lambda^2 + ad - bc) I - lambda W)`.
pub fn second_type_both_sides(n: usize, coin: CoinParams, lambda: C64) -> Result<(C64, C64)> {
    let left = determinant(&second_type_matrix(n, coin)?.shifted_neg(lambda))?;
    let inner = weight_matrix(n, coin)?
        .scale(lambda)
        .shifted_neg(lambda * lambda + coin.determinant());
    Ok((left, determinant(&inner)?))
}

/// Both roots of `x^2 - mu_j x + (ad - bc)` for every eigenvalue
/// `mu_j = d e^(i theta_j) + a e^(-i theta_j)` of `W`, `theta_j = 2 pi j / n`.
pub fn second_type_spectrum(n: usize, coin: CoinParams) -> Result<Spectrum> {
    require_cycle_length(n)?;
    let k = coin.determinant();
    let mut values = Vec::with_capacity(2 * n);
    for j in 0..n {
        let theta = 2.0 * PI * j as f64 / n as f64;
        let mu = C64::from_polar(coin.d, theta) + C64::from_polar(coin.a, -theta);
        let root = snapped_sqrt(mu * mu - 4.0 * k, mu.norm_sqr() + 4.0 * k.abs());
        values.push((mu + root) / 2.0);
        values.push((mu - root) / 2.0);
    }
    Ok(Spectrum::new(
        values,
        Provenance::ClosedForm,
        format!(
            "coin walk spectrum on C{n}, coin ({}, {}, {}, {})",
            coin.a, coin.b, coin.c, coin.d
        ),
    ))
}

/// Spectrum of the half coin on `C_n`: `cos(2 pi j / n)` for each `j`, plus
/// `n` zeros. These are the simple random walk eigenvalues of the cycle.
pub fn half_coin_spectrum(n: usize) -> Result<Spectrum> {
    require_cycle_length(n)?;
    let mut values: Vec<C64> = (0..n)
        .map(|j| C64::new((2.0 * PI * j as f64 / n as f64).cos(), 0.0))
        .collect();
    values.extend(core::iter::repeat_n(C64::new(0.0, 0.0), n));
    Ok(Spectrum::new(
        values,
        Provenance::ClosedForm,
        format!("half coin spectrum on C{n}"),
    ))
}

fn require_regular(g: &Graph) -> Result<f64> {
    match g.regular_degree() {
        Some(d) if d >= 2 => Ok(d as f64),
        Some(d) => Err(Error::InvalidParameter(format!(
            "regular degree {d} is below 2"
        ))),
        None => Err(Error::NotRegular),
    }
}

/// `U = B / d` on a `d`-regular graph; row-stochastic.
pub fn uniform_crw_matrix(g: &Graph) -> Result<DenseMatrix> {
    let d = require_regular(g)?;
    Ok(arc_adjacency_matrix(g).scale(C64::new(1.0 / d, 0.0)))
}

/// `det(lambda I - U)` and `lambda^(2m - n) det(lambda I - A/d)`.
pub fn uniform_crw_both_sides(g: &Graph, lambda: C64) -> Result<(C64, C64)> {
    let u = uniform_crw_matrix(g)?;
    let d = require_regular(g)?;
    let left = determinant(&u.shifted_neg(lambda))?;
    let inner = adjacency_matrix(g)
        .scale(C64::new(1.0 / d, 0.0))
        .shifted_neg(lambda);
    let right = lambda.powu((2 * g.m() - g.n()) as u32) * determinant(&inner)?;
    Ok((left, right))
}

/// `{lambda_A / d}` over the adjacency spectrum, plus `2m - n` zeros.
pub fn uniform_crw_spectrum(g: &Graph) -> Result<Spectrum> {
    let d = require_regular(g)?;
    let mut values: Vec<C64> = symmetric_eigenvalues(&adjacency_matrix(g))?
        .into_iter()
        .map(|x| C64::new(x / d, 0.0))
        .collect();
    values.extend(core::iter::repeat_n(C64::new(0.0, 0.0), 2 * g.m() - g.n()));
    Ok(Spectrum::new(
        values,
        Provenance::ClosedForm,
        format!("uniform walk spectrum, d = {d}"),
    ))
}
