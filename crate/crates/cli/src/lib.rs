//! Command-line front end for `crw-spectra`.
//!
//! Exit codes: `0` every check passed, `1` an identity or spectrum check
//! failed, `2` the input was rejected (bad flags, unreadable or malformed
//! graph file, method not applicable to the graph).

pub mod args;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use crw_spectra::crw::{bipartite_profile, crw_matrix, regular_crw_spectrum, semiregular_crw_spectrum};
use crw_spectra::crw2::{
    second_type_matrix, second_type_spectrum, uniform_crw_matrix, uniform_crw_spectrum, CoinParams,
};
use crw_spectra::graph::{adjacency_matrix, parse_edge_list, Family};
use crw_spectra::grover::{grover_matrix, grover_spectrum_closed};
use crw_spectra::numerics::{eigenvalues, multiset_match, relative_deviation};
use crw_spectra::verify::{run_suite, Suite, VerifyOptions};
use crw_spectra::zeta::{
    ihara_recip_bass, ihara_recip_edge, zeta_recip_direct, zeta_recip_reduced, ArcWeighting,
};
use crw_spectra::{DenseMatrix, Graph, Spectrum, C64, TOL_SPECTRUM};

use args::{
    Cli, Command, FamilyKind, GenerateArgs, GraphSource, Method, Operator, SpectrumArgs, SuiteArg,
    VerifyArgs, Weighting, ZetaArgs,
};
use report::{
    pair, spectrum_csv, to_json, MatchJson, ReportJson, SpectrumJson, SpectrumReportJson,
    VerifyJson, ZetaJson, ZetaPointJson,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] crw_spectra::Error),
    #[error("{context}: {source}")]
    InFile {
        context: String,
        source: crw_spectra::Error,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub const EXIT_CODE: i32 = 2;
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;

/// Runs a parsed command, writing reports to `out` unless an output path
/// was given. Returns whether every check passed.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Zeta(a) => cmd_zeta(&a, out),
        Command::Generate(a) => cmd_generate(&a, out),
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

/// Builds the graph named by the source flags, with a display label.
pub fn load_graph(src: &GraphSource) -> Result<(String, Graph), CliError> {
    if let Some(path) = &src.file {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let g = parse_edge_list(&text).map_err(|source| CliError::InFile {
            context: path.display().to_string(),
            source,
        })?;
        let label = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        return Ok((label, g));
    }
    let family = match src.family {
        Some(FamilyKind::Cycle) => Family::Cycle(need(src.n, "n", "cycle")?),
        Some(FamilyKind::Complete) => Family::Complete(need(src.n, "n", "complete")?),
        Some(FamilyKind::Bipartite) => Family::CompleteBipartite(
            need(src.p, "p", "bipartite")?,
            need(src.q, "q", "bipartite")?,
        ),
        Some(FamilyKind::Petersen) => Family::Petersen,
        Some(FamilyKind::Random) => Family::RandomConnected {
            n: need(src.n, "n", "random")?,
            extra_edges: src.extra,
            seed: src.graph_seed,
        },
        None => return Err(CliError::Usage("either --family or --file is required".into())),
    };
    Ok((family.label(), family.generate()?))
}

/// Writes to `path` when given, otherwise to `out`.
pub fn emit(path: Option<&Path>, content: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => out.write_all(content.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn parse_coin(coin: Option<&str>) -> Result<CoinParams, CliError> {
    match coin {
        Some(s) => Ok(s.parse()?),
        None => Ok(CoinParams::half()),
    }
}

fn cycle_length(g: &Graph) -> Result<usize, CliError> {
    if g.regular_degree() == Some(2) {
        Ok(g.n())
    } else {
        Err(CliError::Usage(
            "the coin walk is defined on cycle graphs only".into(),
        ))
    }
}

fn operator_matrix(op: Operator, g: &Graph, coin: CoinParams) -> Result<DenseMatrix, CliError> {
    Ok(match op {
        Operator::Adjacency => adjacency_matrix(g),
        Operator::Grover => grover_matrix(g),
        Operator::Crw => crw_matrix(g),
        Operator::Uniform => uniform_crw_matrix(g)?,
        Operator::Coin => second_type_matrix(cycle_length(g)?, coin)?,
    })
}

/// The spectrum selected by `method` together with the matrix it describes.
pub fn method_spectrum(
    method: Method,
    op: Operator,
    g: &Graph,
    coin: CoinParams,
) -> Result<(Spectrum, DenseMatrix), CliError> {
    Ok(match method {
        Method::Oracle => {
            let m = operator_matrix(op, g, coin)?;
            (eigenvalues(&m, TOL_SPECTRUM)?, m)
        }
        Method::Grover => (grover_spectrum_closed(g)?, grover_matrix(g)),
        Method::CrwRegular => {
            if g.m() < g.n() {
                return Err(crw_spectra::Error::TreeLike { m: g.m(), n: g.n() }.into());
            }
            (regular_crw_spectrum(g)?, crw_matrix(g))
        }
        Method::CrwBipartite => (semiregular_crw_spectrum(&bipartite_profile(g)?)?, crw_matrix(g)),
        Method::Crw2Cycle => {
            let n = cycle_length(g)?;
            (second_type_spectrum(n, coin)?, second_type_matrix(n, coin)?)
        }
        Method::Crw2Uniform => (uniform_crw_spectrum(g)?, uniform_crw_matrix(g)?),
    })
}

fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let (label, g) = load_graph(&a.graph)?;
    let coin = parse_coin(a.coin.as_deref())?;
    let (spectrum, matrix) = method_spectrum(a.method, a.operator, &g, coin)?;
    let mut pass = true;
    let (mut oracle_json, mut match_json) = (None, None);
    if a.check_oracle && a.method != Method::Oracle {
        let oracle = eigenvalues(&matrix, TOL_SPECTRUM)?;
        let m = multiset_match(&spectrum, &oracle, a.tol)?;
        pass = m.pass;
        oracle_json = Some(SpectrumJson::from(&oracle));
        match_json = Some(MatchJson::from(&m));
    }
    let doc = SpectrumReportJson {
        graph: label.clone(),
        method: value_name(&a.method),
        count: spectrum.len(),
        spectrum: SpectrumJson::from(&spectrum),
        oracle: oracle_json,
        matching: match_json,
    };
    emit(a.output.as_deref(), &to_json(&doc), out)?;
    if let Some(path) = &a.csv {
        emit(Some(path), &spectrum_csv(&label, &spectrum, TOL_SPECTRUM), out)?;
    }
    Ok(pass)
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::All => Suite::All,
        SuiteArg::Zeta => Suite::Zeta,
        SuiteArg::Grover => Suite::Grover,
        SuiteArg::Crw => Suite::Crw,
        SuiteArg::Crw2 => Suite::Crw2,
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", a.tol)));
    }
    let s = suite(a.suite);
    let reports = run_suite(
        s,
        &VerifyOptions {
            tolerance: a.tol,
            seed: a.seed,
        },
    )?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    let doc = VerifyJson {
        suite: s.as_str(),
        seed: a.seed,
        tolerance: a.tol,
        report_count: reports.len(),
        failed: failed.len(),
        pass: failed.is_empty(),
        reports: reports.iter().map(ReportJson::from).collect(),
    };
    emit(a.output.as_deref(), &to_json(&doc), out)?;
    eprintln!("verify {}: {} reports, {} failed", s.as_str(), reports.len(), failed.len());
    if let Some(first) = failed.first() {
        eprint!("first failing report:\n{}", to_json(&ReportJson::from(*first)));
    }
    Ok(failed.is_empty())
}

/// Parses a comma-separated list of complex numbers.
pub fn parse_points(s: &str) -> Result<Vec<C64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<C64>()
                .map_err(|_| CliError::Usage(format!("cannot parse {t:?} as a complex number")))
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(CliError::Usage("--u needs at least one point".into()))
            } else {
                Ok(v)
            }
        })
}

fn cmd_zeta(a: &ZetaArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let (label, g) = load_graph(&a.graph)?;
    let points = parse_points(&a.u)?;
    let weighting = match a.weighting {
        Weighting::Ihara => None,
        Weighting::Random => Some(ArcWeighting::random(&g, a.seed)),
        Weighting::CrwInduced => Some(ArcWeighting::crw_induced(&g)),
    };
    let rows: Vec<ZetaPointJson> = points
        .iter()
        .map(|&u| {
            let (direct, reduced) = match &weighting {
                None => (Ok(ihara_recip_edge(&g, u)), ihara_recip_bass(&g, u)),
                Some(w) => (zeta_recip_direct(&g, w, u), zeta_recip_reduced(&g, w, u)),
            };
            let rel_dev = match (&direct, &reduced) {
                (Ok(x), Ok(y)) => Some(relative_deviation(*x, *y)),
                _ => None,
            };
            let error = [&direct, &reduced]
                .iter()
                .find_map(|r| r.as_ref().err().map(|e| e.to_string()));
            ZetaPointJson {
                u: pair(u),
                direct: direct.ok().map(pair),
                reduced: reduced.ok().map(pair),
                rel_dev,
                pass: rel_dev.is_some_and(|d| d <= a.tol),
                error,
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    for r in rows.iter().filter(|r| r.error.is_some()) {
        eprintln!("u = {:?}: {}", r.u, r.error.as_deref().unwrap_or_default());
    }
    let doc = ZetaJson {
        graph: label,
        weighting: match a.weighting {
            Weighting::Ihara => "ihara",
            Weighting::Random => "random",
            Weighting::CrwInduced => "crw-induced",
        },
        seed: (a.weighting == Weighting::Random).then_some(a.seed),
        tolerance: a.tol,
        pass,
        points: rows,
    };
    emit(a.output.as_deref(), &to_json(&doc), out)?;
    Ok(pass)
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<bool, CliError> {
    let (_, g) = load_graph(&a.graph)?;
    emit(a.output.as_deref(), &g.to_edge_list(), out)?;
    Ok(true)
}
