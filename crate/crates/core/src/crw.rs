//! The correlated random walk induced by the Grover matrix.
//!
//! `P_ef = |U_ef|^2` is row-stochastic on arcs. Its determinant
//! `det(I - uP)` reduces to an `n x n` determinant on every graph, and to
//! closed-form spectra on regular and semiregular bipartite graphs.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::graph::{adjacency_matrix, Graph};
use crate::grover::grover_matrix;
use crate::numerics::{determinant, relative_deviation, snapped_sqrt, symmetric_eigenvalues};
use crate::{DenseMatrix, Error, Provenance, Result, Spectrum, C64, POLE_GUARD};

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Transition matrix of the walk: the entrywise squared modulus of the
/// Grover matrix.
pub fn crw_matrix(g: &Graph) -> DenseMatrix {
    grover_matrix(g).map(|z| real(z.norm_sqr()))
}

/// `R_ef = 4/d^2` for distinct arcs leaving the same vertex and
/// `(2/d - 1)^2` on the diagonal, `d` the common origin degree.
///
/// `R` is symmetric and `P = R J0`; equivalently `J0 R` is the transpose of `P`.
pub fn r_matrix(g: &Graph) -> DenseMatrix {
    let arcs = g.arcs();
    DenseMatrix::from_fn(arcs.len(), arcs.len(), |e, f| {
        let o = arcs[f].origin;
        if arcs[e].origin != o {
            return real(0.0);
        }
        let d = g.degree(o) as f64;
        if e == f {
            real((2.0 / d - 1.0).powi(2))
        } else {
            real(4.0 / (d * d))
        }
    })
}

/// `4/d - 1` at vertex `v`.
fn mu(g: &Graph, v: usize) -> f64 {
    4.0 / g.degree(v) as f64 - 1.0
}

/// `det(I - uP)` and its vertex-level reduction
/// `prod_j (1 - u^2 mu_o mu_t) det(I - u A_crw(u) + u^2 D_crw(u))`,
/// valid on every graph.
pub fn crw_zeta_both_sides(g: &Graph, u: C64) -> Result<(C64, C64)> {
    let left = determinant(&crw_matrix(g).identity_minus_scaled(u))?;
    let mut factors = Vec::with_capacity(g.m());
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        let f = 1.0 - u * u * (mu(g, a) * mu(g, b));
        if f.norm() <= POLE_GUARD {
            return Err(Error::NearPole(format!(
                "u = {u} on edge {} ({}-{})",
                j + 1,
                a + 1,
                b + 1
            )));
        }
        factors.push(f);
    }
    let n = g.n();
    let mut a_crw = DenseMatrix::zeros(n, n);
    let mut d_crw = DenseMatrix::zeros(n, n);
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        for (x, y) in [(a, b), (b, a)] {
            let dx = g.degree(x) as f64;
            let tau = 4.0 / (dx * dx);
            a_crw[(x, y)] = tau / factors[j];
            d_crw[(x, x)] += tau * mu(g, y) / factors[j];
        }
    }
    let mut inner = a_crw.scale(-u);
    for x in 0..n {
        inner[(x, x)] += 1.0 + u * u * d_crw[(x, x)];
    }
    let right = factors.iter().product::<C64>() * determinant(&inner)?;
    Ok((left, right))
}

fn require_regular(g: &Graph) -> Result<usize> {
    match g.regular_degree() {
        Some(d) if d >= 2 => Ok(d),
        Some(d) => Err(Error::InvalidParameter(format!(
            "regular degree {d} is below 2"
        ))),
        None => Err(Error::NotRegular),
    }
}

/// `det(I - uP)` and `(d^2 - u^2 (4-d)^2)^(m-n) / d^(2m) det(d(d + (4-d)u^2) I - 4uA)`
/// on a `d`-regular graph.
pub fn regular_crw_both_sides(g: &Graph, u: C64) -> Result<(C64, C64)> {
    let d = require_regular(g)? as f64;
    let (n, m) = (g.n(), g.m());
    let left = determinant(&crw_matrix(g).identity_minus_scaled(u))?;
    let base = d * d - u * u * (4.0 - d).powi(2);
    if m > n && base.norm() <= POLE_GUARD {
        return Err(Error::NearPole(format!(
            "u = {u}: (d^2 - u^2 (4-d)^2)^{}",
            m - n
        )));
    }
    let inner = adjacency_matrix(g)
        .scale(4.0 * u)
        .shifted_neg(d * (d + (4.0 - d) * u * u));
    let right = base.powi((m - n) as i32) / d.powi(2 * m as i32) * determinant(&inner)?;
    Ok((left, right))
}

/// Closed-form spectrum of `P` on a `d`-regular graph with `m >= n`:
/// `(2 lambda_A +- sqrt(4 lambda_A^2 - d^3 (4-d))) / d^2` for each adjacency
/// eigenvalue, plus `m - n` copies each of `(4-d)/d` and `-(4-d)/d`.
pub fn regular_crw_spectrum(g: &Graph) -> Result<Spectrum> {
    let d = require_regular(g)? as f64;
    if g.m() < g.n() {
        return Err(Error::TreeLike { m: g.m(), n: g.n() });
    }
    let mut values = Vec::with_capacity(2 * g.m());
    for la in symmetric_eigenvalues(&adjacency_matrix(g))? {
        let cube = d.powi(3) * (4.0 - d);
        let root = snapped_sqrt(real(4.0 * la * la - cube), 4.0 * la * la + cube.abs());
        values.push((2.0 * la + root) / (d * d));
        values.push((2.0 * la - root) / (d * d));
    }
    let extra = (4.0 - d) / d;
    for _ in g.n()..g.m() {
        values.push(real(extra));
        values.push(real(-extra));
    }
    Ok(Spectrum::new(
        values,
        Provenance::ClosedForm,
        format!("regular walk spectrum, d = {d}"),
    ))
}

/// Degree data of a connected semiregular bipartite graph.
///
/// `part_v` is the smaller side (ties keep the side containing vertex 0),
/// every vertex in it has degree `r`, and every vertex of `part_w` has
/// degree `s`. `lambdas` are the `|V|` largest adjacency eigenvalues, so the
/// adjacency spectrum is `{+-lambda_j} U {0^(nu - 2|V|)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteProfile {
    pub part_v: Vec<usize>,
    pub part_w: Vec<usize>,
    pub r: usize,
    pub s: usize,
    pub epsilon: usize,
    pub nu: usize,
    pub lambdas: Vec<f64>,
}

impl BipartiteProfile {
    pub fn m_part(&self) -> usize {
        self.part_v.len()
    }

    pub fn n_part(&self) -> usize {
        self.part_w.len()
    }
}

/// Tolerance on the `+-` symmetry and zero count of the adjacency spectrum.
const PROFILE_TOL: f64 = 1e-8;

pub fn bipartite_profile(g: &Graph) -> Result<BipartiteProfile> {
    let (first, second) = g.bipartition().ok_or(Error::NotBipartite)?;
    let (part_v, part_w) = if second.len() < first.len() {
        (second, first)
    } else {
        (first, second)
    };
    let common = |part: &[usize]| {
        let d = g.degree(part[0]);
        part.iter().all(|&v| g.degree(v) == d).then_some(d)
    };
    let (r, s) = match (common(&part_v), common(&part_w)) {
        (Some(r), Some(s)) => (r, s),
        _ => return Err(Error::NotSemiregular),
    };
    let spectrum = symmetric_eigenvalues(&adjacency_matrix(g))?;
    let (m_part, nu) = (part_v.len(), g.n());
    let lambdas: Vec<f64> = spectrum[..m_part].iter().map(|&x| x.max(0.0)).collect();
    for (j, &l) in lambdas.iter().enumerate() {
        let mirror = spectrum[nu - 1 - j];
        if spectrum[j] < -PROFILE_TOL || (l + mirror).abs() > PROFILE_TOL {
            return Err(Error::Internal(format!(
                "adjacency spectrum is not symmetric: {l} vs {mirror}"
            )));
        }
    }
    if let Some(x) = spectrum[m_part..nu - m_part]
        .iter()
        .find(|x| x.abs() > PROFILE_TOL)
    {
        return Err(Error::Internal(format!(
            "expected zero adjacency eigenvalue, found {x}"
        )));
    }
    Ok(BipartiteProfile {
        part_v,
        part_w,
        r,
        s,
        epsilon: g.m(),
        nu,
        lambdas,
    })
}

/// Closed-form spectrum of `P` on a semiregular bipartite graph with
/// `epsilon >= nu`.
///
/// Each `lambda_j` contributes the four roots of
/// `x^4 + (4/r + 4/s - 2 - 16 lambda_j^2 / (r s)^2) x^2 + (4/r - 1)(4/s - 1)`;
/// then `|W| - |V|` copies each of `+-i sqrt(4/r - 1)` and `epsilon - nu`
/// copies each of `+-sqrt((4/r - 1)(4/s - 1))`.
pub fn semiregular_crw_spectrum(p: &BipartiteProfile) -> Result<Spectrum> {
    if p.epsilon < p.nu {
        return Err(Error::TreeLike {
            m: p.epsilon,
            n: p.nu,
        });
    }
    let (r, s) = (p.r as f64, p.s as f64);
    let (alpha, beta) = (4.0 / r - 1.0, 4.0 / s - 1.0);
    let mut values = Vec::with_capacity(2 * p.epsilon);
    for &l in &p.lambdas {
        let b = real(4.0 / r + 4.0 / s - 2.0 - 16.0 * l * l / (r * r * s * s));
        let disc = snapped_sqrt(b * b - 4.0 * alpha * beta, b.norm_sqr() + (4.0 * alpha * beta).abs());
        for x in [(-b + disc) / 2.0, (-b - disc) / 2.0] {
            let root = x.sqrt();
            values.push(root);
            values.push(-root);
        }
    }
    let side = C64::i() * real(alpha).sqrt();
    for _ in p.m_part()..p.n_part() {
        values.push(side);
        values.push(-side);
    }
    let cross = real(alpha * beta).sqrt();
    for _ in p.nu..p.epsilon {
        values.push(cross);
        values.push(-cross);
    }
    Ok(Spectrum::new(
        values,
        Provenance::ClosedForm,
        format!("semiregular walk spectrum, (r, s) = ({}, {})", p.r, p.s),
    ))
}

/// Sign inside the `(1 +- u^2 (4/r - 1))` and `(1 +- u^2 (4/s - 1))` factors
/// of the semiregular product formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    Plus,
    Minus,
}

impl SignConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignConvention::Plus => "plus",
            SignConvention::Minus => "minus",
        }
    }

    fn sign(&self) -> f64 {
        match self {
            SignConvention::Plus => 1.0,
            SignConvention::Minus => -1.0,
        }
    }
}

/// The convention that reproduces `det(I - uP)`. Fixed once by
/// [`resolve_sign`] on `K2,3`; the minus variant disagrees there by O(1).
pub const SEMIREGULAR_SIGN: SignConvention = SignConvention::Plus;

/// `(1 - u^2 ab)^(epsilon - nu) (1 +- u^2 a)^(|W| - |V|)
/// prod_j ((1 +- u^2 b)(1 +- u^2 a) - 16 lambda_j^2 u^2 / (r s)^2)`
/// with `a = 4/r - 1`, `b = 4/s - 1`.
pub fn semiregular_product(p: &BipartiteProfile, u: C64, sign: SignConvention) -> Result<C64> {
    let (r, s) = (p.r as f64, p.s as f64);
    let (alpha, beta) = (4.0 / r - 1.0, 4.0 / s - 1.0);
    let u2 = u * u;
    let cross = 1.0 - u2 * (alpha * beta);
    if p.epsilon < p.nu && cross.norm() <= POLE_GUARD {
        return Err(Error::NearPole(format!(
            "u = {u}: (1 - u^2 (4/r-1)(4/s-1))^{}",
            p.epsilon as i64 - p.nu as i64
        )));
    }
    let sg = sign.sign();
    let fa = 1.0 + sg * u2 * alpha;
    let fb = 1.0 + sg * u2 * beta;
    let mut value = cross.powi(p.epsilon as i32 - p.nu as i32)
        * fa.powi((p.n_part() - p.m_part()) as i32);
    for &l in &p.lambdas {
        value *= fb * fa - 16.0 * l * l * u2 / (r * r * s * s);
    }
    Ok(value)
}

/// `det(I - uP)` and the product formula under [`SEMIREGULAR_SIGN`].
pub fn semiregular_crw_both_sides(
    g: &Graph,
    p: &BipartiteProfile,
    u: C64,
) -> Result<(C64, C64)> {
    let left = determinant(&crw_matrix(g).identity_minus_scaled(u))?;
    Ok((left, semiregular_product(p, u, SEMIREGULAR_SIGN)?))
}

/// Outcome of testing both sign conventions against `det(I - uP)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignResolution {
    pub plus_max_rel_dev: f64,
    pub minus_max_rel_dev: f64,
    pub tolerance: f64,
    pub resolved: SignConvention,
}

/// Compares both conventions with `det(I - uP)` at `points`. Exactly one
/// must stay within `tol`; otherwise the formula is unresolved and an error
/// is returned.
pub fn resolve_sign(g: &Graph, points: &[C64], tol: f64) -> Result<SignResolution> {
    let p = bipartite_profile(g)?;
    let p_mat = crw_matrix(g);
    let (mut plus, mut minus) = (0.0f64, 0.0f64);
    for &u in points {
        let left = determinant(&p_mat.identity_minus_scaled(u))?;
        plus = plus.max(relative_deviation(
            left,
            semiregular_product(&p, u, SignConvention::Plus)?,
        ));
        minus = minus.max(relative_deviation(
            left,
            semiregular_product(&p, u, SignConvention::Minus)?,
        ));
    }
    let resolved = match (plus <= tol, minus <= tol) {
        (true, false) => SignConvention::Plus,
        (false, true) => SignConvention::Minus,
        (a, b) => {
            return Err(Error::Internal(format!(
                "sign convention unresolved: plus {} ({plus:e}), minus {} ({minus:e})",
                if a { "passes" } else { "fails" },
                if b { "passes" } else { "fails" },
            )))
        }
    };
    Ok(SignResolution {
        plus_max_rel_dev: plus,
        minus_max_rel_dev: minus,
        tolerance: tol,
        resolved,
    })
}
