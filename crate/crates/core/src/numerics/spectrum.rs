use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result, C64};

/// Where a spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Produced by a spectral-mapping formula.
    ClosedForm,
    /// Produced by the dense eigensolver.
    NumericOracle,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::NumericOracle => "numeric_oracle",
        }
    }
}

/// Multiset of eigenvalues with a provenance tag and a free-text source.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<C64>,
    pub provenance: Provenance,
    pub source: String,
}

impl Spectrum {
    pub fn new(values: Vec<C64>, provenance: Provenance, source: impl Into<String>) -> Self {
        Self {
            values,
            provenance,
            source: source.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    /// Values sorted by real part, then imaginary part.
    pub fn sorted(&self) -> Vec<C64> {
        let mut v = self.values.clone();
        v.sort_by(cmp_lex);
        v
    }

    /// Number of values within `tol` of `z`.
    pub fn count_near(&self, z: C64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - z).norm() <= tol).count()
    }

    /// Largest modulus.
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

fn cmp_lex(a: &C64, b: &C64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Result of pairing two spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    /// `(left, right)` pairs, ordered by the left value.
    pub pairs: Vec<(C64, C64)>,
    pub max_distance: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Pairs two equal-size multisets so that the largest paired distance is as
/// small as possible (bottleneck assignment).
///
/// Both sides are sorted lexicographically by `(re, im)`. The smallest
/// feasible threshold is found by binary search over the sorted distinct
/// pairwise distances; feasibility is a perfect bipartite matching restricted
/// to pairs within the threshold, found with augmenting paths that visit
/// candidates in sorted order. The result is deterministic and optimal.
pub fn multiset_match(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<MatchReport> {
    if a.len() != b.len() {
        return Err(Error::Cardinality {
            left: a.len(),
            right: b.len(),
        });
    }
    let left = a.sorted();
    let right = b.sorted();
    let n = left.len();
    if n == 0 {
        return Ok(MatchReport {
            pairs: Vec::new(),
            max_distance: 0.0,
            tolerance: tol,
            pass: true,
        });
    }
    let dist: Vec<f64> = left
        .iter()
        .flat_map(|x| right.iter().map(move |y| (x - y).norm()))
        .collect();
    let mut candidates = dist.clone();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // Any threshold at or above the largest distance is feasible.
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    let mut best = perfect_matching(n, &dist, candidates[hi]).expect("complete graph");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match perfect_matching(n, &dist, candidates[mid]) {
            Some(m) => {
                best = m;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    if lo == candidates.len() - 1 {
        best = perfect_matching(n, &dist, candidates[lo]).expect("complete graph");
    }
    let pairs: Vec<(C64, C64)> = (0..n).map(|i| (left[i], right[best[i]])).collect();
    let max_distance = pairs
        .iter()
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    Ok(MatchReport {
        pairs,
        max_distance,
        tolerance: tol,
        pass: max_distance <= tol,
    })
}

/// Kuhn's augmenting-path matching on the threshold graph; returns the
/// right-hand partner of every left vertex.
fn perfect_matching(n: usize, dist: &[f64], threshold: f64) -> Option<Vec<usize>> {
    let mut owner = vec![usize::MAX; n];
    for i in 0..n {
        let mut visited = vec![false; n];
        if !augment(i, n, dist, threshold, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut partner = vec![0; n];
    for (j, &i) in owner.iter().enumerate() {
        partner[i] = j;
    }
    Some(partner)
}

fn augment(
    i: usize,
    n: usize,
    dist: &[f64],
    threshold: f64,
    owner: &mut [usize],
    visited: &mut [bool],
) -> bool {
    for j in 0..n {
        if visited[j] || dist[i * n + j] > threshold {
            continue;
        }
        visited[j] = true;
        if owner[j] == usize::MAX || augment(owner[j], n, dist, threshold, owner, visited) {
            owner[j] = i;
            return true;
        }
    }
    false
}
