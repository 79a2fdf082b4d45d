//! Verification suites: sample points, the standard graph family, and one
//! report per (identity, graph) pair.
//!
//! Identity reports compare two evaluations of the same determinant at
//! sample points by relative deviation. Spectrum reports pair a closed-form
//! multiset with the eigensolver output and record the paired distances.
//! Property reports carry a single measured defect.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::str::FromStr;

#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crw::{
    bipartite_profile, crw_matrix, crw_zeta_both_sides, regular_crw_both_sides,
    regular_crw_spectrum, resolve_sign, semiregular_crw_both_sides, semiregular_crw_spectrum,
    SEMIREGULAR_SIGN,
};
use crate::crw2::{
    half_coin_spectrum, second_type_both_sides, second_type_matrix, second_type_spectrum,
    uniform_crw_both_sides, uniform_crw_matrix, uniform_crw_spectrum, CoinParams,
};
use crate::graph::{srw_transition_matrix, Family};
use crate::grover::{grover_charpoly_both_sides, grover_matrix, grover_spectrum_closed, unitarity_defect};
use crate::numerics::{eigenvalues, multiset_match, relative_deviation};
use crate::zeta::{
    ihara_recip_bass, ihara_recip_edge, non_backtracking_matrix, theta_matrix,
    zeta_recip_direct, zeta_recip_reduced, ArcWeighting,
};
use crate::{DenseMatrix, Error, Graph, Provenance, Result, Spectrum, C64, TOL_IDENTITY, TOL_SPECTRUM};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;
/// Tolerance for unitarity and row-sum defects.
pub const TOL_STRUCTURE: f64 = 1e-12;
/// Number of seeded random weightings per graph in the zeta suite.
pub const RANDOM_WEIGHTINGS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub point: C64,
    pub lhs: C64,
    pub rhs: C64,
    /// Relative deviation for identities, absolute distance for spectra and
    /// the raw defect for properties.
    pub rel_dev: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReportKind {
    Identity,
    Spectrum,
    Property,
}

impl ReportKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReportKind::Identity => "identity",
            ReportKind::Spectrum => "spectrum",
            ReportKind::Property => "property",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub graph: String,
    pub kind: ReportKind,
    pub samples: Vec<Sample>,
    /// Largest sample deviation; infinite when evaluation failed.
    pub max_rel_dev: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    /// Builds a report; it passes iff there is at least one sample and every
    /// deviation is within `tolerance` (NaN fails).
    pub fn from_samples(
        identity: &str,
        graph: &str,
        kind: ReportKind,
        samples: Vec<Sample>,
        tolerance: f64,
    ) -> Self {
        let max_rel_dev = samples
            .iter()
            .map(|s| if s.rel_dev.is_nan() { f64::INFINITY } else { s.rel_dev })
            .fold(0.0, f64::max);
        let pass = !samples.is_empty() && max_rel_dev <= tolerance;
        Self {
            identity: identity.to_string(),
            graph: graph.to_string(),
            kind,
            samples,
            max_rel_dev,
            tolerance,
            pass,
            note: None,
        }
    }

    /// A failed report carrying the evaluation error.
    pub fn errored(identity: &str, graph: &str, kind: ReportKind, tolerance: f64, err: &Error) -> Self {
        Self {
            identity: identity.to_string(),
            graph: graph.to_string(),
            kind,
            samples: Vec::new(),
            max_rel_dev: f64::INFINITY,
            tolerance,
            pass: false,
            note: Some(err.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Sorts by identity, then graph label; samples keep their order.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.identity.cmp(&b.identity).then_with(|| a.graph.cmp(&b.graph)));
}

/// Mixes a base seed with a tag (FNV-1a, then a splitmix64 finaliser) so
/// every report draws from its own reproducible stream.
pub fn derive_seed(base: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ base;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// Sample points inside the disc of the given radius: up to eight evenly
/// spaced nonzero reals, then seeded complex points with modulus in
/// `[0.3, 1] * radius`.
pub fn sample_points(count: usize, radius: f64, seed: u64) -> Vec<C64> {
    let mut pts: Vec<C64> = (0..count.min(8))
        .map(|k| C64::new(radius * (-1.0 + 2.0 * (k as f64 + 0.5) / 8.0), 0.0))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while pts.len() < count {
        let r = radius * rng.gen_range(0.3..=1.0);
        let phi = rng.gen_range(0.0..2.0 * PI);
        pts.push(C64::from_polar(r, phi));
    }
    pts
}

/// At least `2 * dim + 1` points (and never fewer than 20): enough to pin a
/// polynomial of degree `dim` twice over.
pub fn sample_count(dim: usize) -> usize {
    (2 * dim + 1).max(20)
}

/// `0.9 / max(1, min(|X|_1, |X|_inf))`. Inside this disc `I - uX` is
/// invertible, so neither side of a `det(I - uX)` identity vanishes.
pub fn safe_radius(x: &DenseMatrix) -> f64 {
    let rows = x
        .row_sums_abs()
        .into_iter()
        .fold(0.0, f64::max);
    let cols = x
        .transpose()
        .row_sums_abs()
        .into_iter()
        .fold(0.0, f64::max);
    0.9 / rows.min(cols).max(1.0)
}

trait AbsRowSums {
    fn row_sums_abs(&self) -> Vec<f64>;
}

impl AbsRowSums for DenseMatrix {
    fn row_sums_abs(&self) -> Vec<f64> {
        (0..self.rows())
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum())
            .collect()
    }
}

/// A labelled graph of the standard family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyMember {
    pub label: String,
    pub graph: Graph,
}

/// Seeds for the irregular members: `(n, extra edges, first seed)`. The seed
/// is advanced until the sampled graph is irregular.
pub const IRREGULAR_SPECS: [(usize, usize, u64); 5] =
    [(6, 3, 7), (7, 4, 11), (8, 5, 13), (9, 4, 17), (10, 6, 19)];

/// `C3..C8, K4, K5, Petersen, K2,3, K3,4, K4,4` and five seeded irregular
/// graphs on at most ten vertices.
pub fn standard_family() -> Result<Vec<FamilyMember>> {
    let mut fams: Vec<Family> = (3..=8).map(Family::Cycle).collect();
    fams.extend([
        Family::Complete(4),
        Family::Complete(5),
        Family::Petersen,
        Family::CompleteBipartite(2, 3),
        Family::CompleteBipartite(3, 4),
        Family::CompleteBipartite(4, 4),
    ]);
    let mut members: Vec<FamilyMember> = fams
        .iter()
        .map(|f| {
            Ok(FamilyMember {
                label: f.label(),
                graph: f.generate()?,
            })
        })
        .collect::<Result<_>>()?;
    members.extend(irregular_members()?);
    Ok(members)
}

/// The five irregular members alone.
pub fn irregular_members() -> Result<Vec<FamilyMember>> {
    IRREGULAR_SPECS
        .iter()
        .map(|&(n, extra_edges, first)| {
            (first..first + 64)
                .map(|seed| Family::RandomConnected {
                    n,
                    extra_edges,
                    seed,
                })
                .find_map(|f| match f.generate() {
                    Ok(g) if g.regular_degree().is_none() => Some(Ok(FamilyMember {
                        label: f.label(),
                        graph: g,
                    })),
                    Ok(_) => None,
                    Err(e) => Some(Err(e)),
                })
                .unwrap_or_else(|| {
                    Err(Error::Internal(format!(
                        "no irregular sample for n = {n} within 64 seeds"
                    )))
                })
        })
        .collect()
}

/// Which suites to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Zeta,
    Grover,
    Crw,
    Crw2,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Zeta => "zeta",
            Suite::Grover => "grover",
            Suite::Crw => "crw",
            Suite::Crw2 => "crw2",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "zeta" => Ok(Suite::Zeta),
            "grover" => Ok(Suite::Grover),
            "crw" => Ok(Suite::Crw),
            "crw2" => Ok(Suite::Crw2),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite {other:?} (expected all, zeta, grover, crw or crw2)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Relative tolerance for determinant identities.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tolerance: TOL_IDENTITY,
            seed: DEFAULT_SEED,
        }
    }
}

/// Runs a suite over the standard family; reports come back sorted.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let family = standard_family()?;
    let mut reports = Vec::new();
    if matches!(suite, Suite::All | Suite::Zeta) {
        reports.extend(zeta_suite(&family, opts));
    }
    if matches!(suite, Suite::All | Suite::Grover) {
        reports.extend(grover_suite(&family, opts));
    }
    if matches!(suite, Suite::All | Suite::Crw) {
        reports.extend(crw_suite(&family, opts));
    }
    if matches!(suite, Suite::All | Suite::Crw2) {
        reports.extend(crw2_suite(&family, opts));
    }
    sort_reports(&mut reports);
    Ok(reports)
}

/// Evaluates `f` at every point; the first error fails the whole report.
pub fn identity_report(
    identity: &str,
    graph: &str,
    points: &[C64],
    tolerance: f64,
    f: impl Fn(C64) -> Result<(C64, C64)>,
) -> VerificationReport {
    let mut samples = Vec::with_capacity(points.len());
    for &point in points {
        match f(point) {
            Ok((lhs, rhs)) => samples.push(Sample {
                point,
                lhs,
                rhs,
                rel_dev: relative_deviation(lhs, rhs),
            }),
            Err(e) => return VerificationReport::errored(identity, graph, ReportKind::Identity, tolerance, &e),
        }
    }
    VerificationReport::from_samples(identity, graph, ReportKind::Identity, samples, tolerance)
}

/// Pairs `left` with `right` by optimal bottleneck matching; the sample
/// point is the pair index.
pub fn spectrum_report(
    identity: &str,
    graph: &str,
    left: Result<Spectrum>,
    right: Result<Spectrum>,
    tolerance: f64,
) -> VerificationReport {
    let matched = left.and_then(|l| right.and_then(|r| multiset_match(&l, &r, tolerance)));
    match matched {
        Ok(m) => {
            let samples = m
                .pairs
                .iter()
                .enumerate()
                .map(|(i, &(lhs, rhs))| Sample {
                    point: C64::new(i as f64, 0.0),
                    lhs,
                    rhs,
                    rel_dev: (lhs - rhs).norm(),
                })
                .collect();
            VerificationReport::from_samples(identity, graph, ReportKind::Spectrum, samples, tolerance)
        }
        Err(e) => VerificationReport::errored(identity, graph, ReportKind::Spectrum, tolerance, &e),
    }
}

/// A single measured quantity compared with its target.
pub fn property_report(
    identity: &str,
    graph: &str,
    measured: C64,
    target: C64,
    defect: f64,
    tolerance: f64,
) -> VerificationReport {
    let sample = Sample {
        point: C64::new(0.0, 0.0),
        lhs: measured,
        rhs: target,
        rel_dev: defect,
    };
    VerificationReport::from_samples(identity, graph, ReportKind::Property, vec![sample], tolerance)
}

fn oracle(m: &DenseMatrix) -> Result<Spectrum> {
    eigenvalues(m, TOL_SPECTRUM)
}

fn u_points(x: &DenseMatrix, tag: &str, opts: &VerifyOptions) -> Vec<C64> {
    sample_points(sample_count(x.rows()), safe_radius(x), derive_seed(opts.seed, tag))
}

/// `lambda = 1/u` over the same disc: every point lies outside the spectrum.
fn lambda_points(x: &DenseMatrix, tag: &str, opts: &VerifyOptions) -> Vec<C64> {
    u_points(x, tag, opts).into_iter().map(|u| u.inv()).collect()
}

pub fn zeta_suite(family: &[FamilyMember], opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for FamilyMember { label, graph: g } in family {
        let nb = non_backtracking_matrix(g);
        let pts = u_points(&nb, &format!("ihara-bass/{label}"), opts);
        out.push(identity_report("ihara-bass", label, &pts, opts.tolerance, |u| {
            Ok((ihara_recip_edge(g, u), ihara_recip_bass(g, u)?))
        }));

        let mut samples = Vec::new();
        let mut seeds = Vec::new();
        let mut failure = None;
        for k in 0..RANDOM_WEIGHTINGS {
            let seed = derive_seed(opts.seed, &format!("weighting/{label}/{k}"));
            seeds.push(seed);
            let w = ArcWeighting::random(g, seed);
            let pts = match theta_matrix(g, &w) {
                Ok(x) => u_points(&x, &format!("weighted/{label}/{k}"), opts),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            };
            let r = identity_report("weighted-reduction", label, &pts, opts.tolerance, |u| {
                Ok((zeta_recip_direct(g, &w, u)?, zeta_recip_reduced(g, &w, u)?))
            });
            if let Some(note) = &r.note {
                failure = Some(Error::Internal(note.clone()));
                break;
            }
            samples.extend(r.samples);
        }
        let report = match failure {
            Some(e) => VerificationReport::errored("weighted-reduction", label, ReportKind::Identity, opts.tolerance, &e),
            None => VerificationReport::from_samples(
                "weighted-reduction",
                label,
                ReportKind::Identity,
                samples,
                opts.tolerance,
            )
            .with_note(format!("weighting seeds {seeds:?}")),
        };
        out.push(report);
    }
    out
}

pub fn grover_suite(family: &[FamilyMember], opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for FamilyMember { label, graph: g } in family {
        let u = grover_matrix(g);
        let defect = unitarity_defect(&u);
        out.push(property_report(
            "grover-unitarity",
            label,
            C64::new(defect, 0.0),
            C64::new(0.0, 0.0),
            defect,
            TOL_STRUCTURE,
        ));
        let pts = lambda_points(&u, &format!("grover-charpoly/{label}"), opts);
        out.push(identity_report("grover-charpoly", label, &pts, opts.tolerance, |l| {
            grover_charpoly_both_sides(g, l)
        }));
        if g.m() >= g.n() {
            out.push(spectrum_report(
                "grover-spectrum",
                label,
                grover_spectrum_closed(g),
                oracle(&u),
                TOL_SPECTRUM,
            ));
        }
    }
    out
}

/// `0.9` shrunk so that `|u|^2 |mu_o mu_t| <= 0.81` on every edge, keeping the
/// edge factors `1 - u^2 mu_o mu_t` of the walk reduction away from zero.
fn crw_radius(g: &Graph) -> f64 {
    let mu = |v: usize| 4.0 / g.degree(v) as f64 - 1.0;
    let worst = g
        .edges()
        .iter()
        .map(|&(a, b)| (mu(a) * mu(b)).abs().sqrt())
        .fold(1.0, f64::max);
    0.9 / worst
}

pub fn crw_suite(family: &[FamilyMember], opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for FamilyMember { label, graph: g } in family {
        let p = crw_matrix(g);
        let row_defect = p
            .row_sums()
            .iter()
            .map(|s| (s - 1.0).norm())
            .fold(0.0, f64::max);
        let negative = p
            .as_slice()
            .iter()
            .map(|z| (-z.re).max(z.im.abs()).max(0.0))
            .fold(0.0, f64::max);
        out.push(
            property_report(
                "crw-stochastic",
                label,
                C64::new(row_defect, 0.0),
                C64::new(0.0, 0.0),
                row_defect.max(negative),
                TOL_STRUCTURE,
            )
            .with_note("max |row sum - 1| and max negative entry"),
        );
        match oracle(&p) {
            Ok(spec) => {
                let radius = spec.spectral_radius();
                out.push(property_report(
                    "crw-disk",
                    label,
                    C64::new(radius, 0.0),
                    C64::new(1.0, 0.0),
                    (radius - 1.0).max(0.0),
                    1e-9,
                ));
                let nearest = spec
                    .values
                    .iter()
                    .copied()
                    .min_by(|a, b| (a - 1.0).norm().total_cmp(&(b - 1.0).norm()))
                    .unwrap_or(C64::new(f64::NAN, 0.0));
                out.push(property_report(
                    "crw-unit-eigenvalue",
                    label,
                    nearest,
                    C64::new(1.0, 0.0),
                    (nearest - 1.0).norm(),
                    TOL_SPECTRUM,
                ));
            }
            Err(e) => {
                out.push(VerificationReport::errored("crw-disk", label, ReportKind::Property, 1e-9, &e));
                out.push(VerificationReport::errored(
                    "crw-unit-eigenvalue",
                    label,
                    ReportKind::Property,
                    TOL_SPECTRUM,
                    &e,
                ));
            }
        }

        let tag = format!("crw-reduction/{label}");
        let pts = sample_points(sample_count(p.rows()), crw_radius(g), derive_seed(opts.seed, &tag));
        out.push(identity_report("crw-reduction", label, &pts, opts.tolerance, |u| {
            crw_zeta_both_sides(g, u)
        }));

        if g.regular_degree().is_some_and(|d| d >= 2) {
            let pts = u_points(&p, &format!("crw-regular-identity/{label}"), opts);
            out.push(identity_report("crw-regular-identity", label, &pts, opts.tolerance, |u| {
                regular_crw_both_sides(g, u)
            }));
            out.push(spectrum_report(
                "crw-regular-spectrum",
                label,
                regular_crw_spectrum(g),
                oracle(&p),
                TOL_SPECTRUM,
            ));
        }

        if let Ok(profile) = bipartite_profile(g) {
            let pts = u_points(&p, &format!("crw-semiregular-identity/{label}"), opts);
            out.push(
                identity_report("crw-semiregular-identity", label, &pts, opts.tolerance, |u| {
                    semiregular_crw_both_sides(g, &profile, u)
                })
                .with_note(format!("sign convention {}", SEMIREGULAR_SIGN.as_str())),
            );
            if profile.epsilon >= profile.nu {
                out.push(spectrum_report(
                    "crw-semiregular-spectrum",
                    label,
                    semiregular_crw_spectrum(&profile),
                    oracle(&p),
                    TOL_SPECTRUM,
                ));
            }
        }
    }
    out.push(sign_resolution_report(opts));
    out
}

/// Tests both sign conventions of the semiregular product on `K2,3` at ten
/// points; passes iff exactly one matches and it is the hard-coded one.
pub fn sign_resolution_report(opts: &VerifyOptions) -> VerificationReport {
    const ID: &str = "crw-sign-resolution";
    let fam = Family::CompleteBipartite(2, 3);
    let label = fam.label();
    let g = match fam.generate() {
        Ok(g) => g,
        Err(e) => return VerificationReport::errored(ID, &label, ReportKind::Identity, opts.tolerance, &e),
    };
    let pts = sample_points(10, 0.9, derive_seed(opts.seed, ID));
    let res = match resolve_sign(&g, &pts, opts.tolerance) {
        Ok(r) => r,
        Err(e) => return VerificationReport::errored(ID, &label, ReportKind::Identity, opts.tolerance, &e),
    };
    let profile = match bipartite_profile(&g) {
        Ok(p) => p,
        Err(e) => return VerificationReport::errored(ID, &label, ReportKind::Identity, opts.tolerance, &e),
    };
    let mut report = identity_report(ID, &label, &pts, opts.tolerance, |u| {
        semiregular_crw_both_sides(&g, &profile, u)
    });
    report.pass &= res.resolved == SEMIREGULAR_SIGN;
    report.with_note(format!(
        "resolved {}; plus max_rel_dev {:e}, minus max_rel_dev {:e}",
        res.resolved.as_str(),
        res.plus_max_rel_dev,
        res.minus_max_rel_dev
    ))
}

/// Coins exercised on cycles: the half coin, a symmetric coin, an
/// asymmetric coin, and the pure rotation.
pub fn standard_coins() -> [CoinParams; 4] {
    let c = |a, b, c, d| CoinParams::new(a, b, c, d).expect("valid coin");
    [
        CoinParams::half(),
        c(0.7, 0.3, 0.3, 0.7),
        c(0.9, 0.2, 0.1, 0.8),
        c(1.0, 0.0, 0.0, 1.0),
    ]
}

/// Cycle lengths for the coin grid.
pub const COIN_CYCLES: [usize; 4] = [3, 4, 5, 8];

pub fn coin_label(n: usize, coin: &CoinParams) -> String {
    format!("C{n} coin({},{},{},{})", coin.a(), coin.b(), coin.c(), coin.d())
}

pub fn crw2_suite(family: &[FamilyMember], opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for n in COIN_CYCLES {
        for coin in standard_coins() {
            let label = coin_label(n, &coin);
            let u = match second_type_matrix(n, coin) {
                Ok(u) => u,
                Err(e) => {
                    out.push(VerificationReport::errored("coin-identity", &label, ReportKind::Identity, opts.tolerance, &e));
                    continue;
                }
            };
            let pts = lambda_points(&u, &format!("coin-identity/{label}"), opts);
            out.push(identity_report("coin-identity", &label, &pts, opts.tolerance, |l| {
                second_type_both_sides(n, coin, l)
            }));
            out.push(spectrum_report(
                "coin-spectrum",
                &label,
                second_type_spectrum(n, coin),
                oracle(&u),
                TOL_SPECTRUM,
            ));
        }
    }
    for n in 3..=8 {
        let label = format!("C{n}");
        let walk = second_type_matrix(n, CoinParams::half()).and_then(|u| oracle(&u));
        out.push(spectrum_report(
            "half-coin-spectrum",
            &label,
            half_coin_spectrum(n),
            walk.clone(),
            TOL_SPECTRUM,
        ));
        let srw = Family::Cycle(n).generate().and_then(|g| {
            let mut s = oracle(&srw_transition_matrix(&g))?;
            s.values.extend(core::iter::repeat_n(C64::new(0.0, 0.0), n));
            Ok(Spectrum::new(s.values, Provenance::NumericOracle, "random walk plus zeros"))
        });
        out.push(spectrum_report(
            "half-coin-random-walk",
            &label,
            walk,
            srw,
            TOL_SPECTRUM,
        ));
    }
    for FamilyMember { label, graph: g } in family {
        if !g.regular_degree().is_some_and(|d| d >= 2) {
            continue;
        }
        let u = match uniform_crw_matrix(g) {
            Ok(u) => u,
            Err(e) => {
                out.push(VerificationReport::errored("uniform-identity", label, ReportKind::Identity, opts.tolerance, &e));
                continue;
            }
        };
        let pts = lambda_points(&u, &format!("uniform-identity/{label}"), opts);
        out.push(identity_report("uniform-identity", label, &pts, opts.tolerance, |l| {
            uniform_crw_both_sides(g, l)
        }));
        out.push(spectrum_report(
            "uniform-spectrum",
            label,
            uniform_crw_spectrum(g),
            oracle(&u),
            TOL_SPECTRUM,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shape() {
        let fam = standard_family().unwrap();
        assert_eq!(fam.len(), 17);
        let irregular: Vec<_> = fam.iter().filter(|m| m.graph.regular_degree().is_none()).collect();
        // K2,3 and K3,4 are irregular too.
        assert_eq!(irregular.len(), 7);
        for m in &fam[12..] {
            assert!(m.graph.n() <= 10 && m.graph.regular_degree().is_none(), "{}", m.label);
        }
        let labels: Vec<&str> = fam.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(&labels[..6], &["C3", "C4", "C5", "C6", "C7", "C8"]);
    }

    #[test]
    fn sample_points_are_reproducible() {
        let a = sample_points(30, 0.5, 9);
        assert_eq!(a, sample_points(30, 0.5, 9));
        assert_ne!(a, sample_points(30, 0.5, 10));
        assert!(a.iter().all(|z| z.norm() <= 0.5 + 1e-15 && z.norm() > 0.0));
        assert_eq!(a[0], C64::new(-0.4375, 0.0));
        assert_eq!(sample_count(6), 20);
        assert_eq!(sample_count(30), 61);
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(1, "a"), derive_seed(1, "b"));
        assert_ne!(derive_seed(1, "a"), derive_seed(2, "a"));
        assert_eq!(derive_seed(5, "x"), derive_seed(5, "x"));
    }

    #[test]
    fn safe_radius_bounds() {
        assert_eq!(safe_radius(&DenseMatrix::identity(3)), 0.9);
        let g = Family::Complete(5).generate().unwrap();
        assert!((safe_radius(&non_backtracking_matrix(&g)) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn report_pass_logic() {
        let s = |d| Sample {
            point: C64::new(0.0, 0.0),
            lhs: C64::new(1.0, 0.0),
            rhs: C64::new(1.0, 0.0),
            rel_dev: d,
        };
        let ok = VerificationReport::from_samples("x", "g", ReportKind::Identity, vec![s(1e-12)], 1e-9);
        assert!(ok.pass);
        let bad = VerificationReport::from_samples("x", "g", ReportKind::Identity, vec![s(f64::NAN)], 1e-9);
        assert!(!bad.pass && bad.max_rel_dev.is_infinite());
        assert!(!VerificationReport::from_samples("x", "g", ReportKind::Identity, vec![], 1e-9).pass);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::All, Suite::Zeta, Suite::Grover, Suite::Crw, Suite::Crw2] {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn sign_resolution_passes() {
        let r = sign_resolution_report(&VerifyOptions::default());
        assert!(r.pass, "{r:?}");
        assert_eq!(r.samples.len(), 10);
        assert!(r.note.unwrap().starts_with("resolved plus"));
    }
}
