//! JSON and CSV shapes. Complex numbers are `[re, im]` pairs; non-finite
//! floats serialise as `null`.

use serde::Serialize;

use crw_spectra::numerics::MatchReport;
use crw_spectra::verify::{Sample, VerificationReport};
use crw_spectra::{Spectrum, C64};

pub type Pair = [f64; 2];

pub fn pair(z: C64) -> Pair {
    [z.re, z.im]
}

#[derive(Debug, Serialize)]
pub struct SampleJson {
    pub point: Pair,
    pub lhs: Pair,
    pub rhs: Pair,
    pub rel_dev: f64,
}

impl From<&Sample> for SampleJson {
    fn from(s: &Sample) -> Self {
        Self {
            point: pair(s.point),
            lhs: pair(s.lhs),
            rhs: pair(s.rhs),
            rel_dev: s.rel_dev,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub identity: String,
    pub graph: String,
    pub kind: &'static str,
    pub samples: Vec<SampleJson>,
    pub max_rel_dev: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            identity: r.identity.clone(),
            graph: r.graph.clone(),
            kind: r.kind.as_str(),
            samples: r.samples.iter().map(SampleJson::from).collect(),
            max_rel_dev: r.max_rel_dev,
            tolerance: r.tolerance,
            pass: r.pass,
            note: r.note.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub suite: &'static str,
    pub seed: u64,
    pub tolerance: f64,
    pub report_count: usize,
    pub failed: usize,
    pub pass: bool,
    pub reports: Vec<ReportJson>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumJson {
    pub values: Vec<Pair>,
    pub provenance: &'static str,
    pub source: String,
}

impl From<&Spectrum> for SpectrumJson {
    fn from(s: &Spectrum) -> Self {
        Self {
            values: s.values.iter().copied().map(pair).collect(),
            provenance: s.provenance.as_str(),
            source: s.source.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MatchJson {
    pub max_distance: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub pairs: Vec<[Pair; 2]>,
}

impl From<&MatchReport> for MatchJson {
    fn from(m: &MatchReport) -> Self {
        Self {
            max_distance: m.max_distance,
            tolerance: m.tolerance,
            pass: m.pass,
            pairs: m.pairs.iter().map(|&(a, b)| [pair(a), pair(b)]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumReportJson {
    pub graph: String,
    pub method: String,
    pub count: usize,
    pub spectrum: SpectrumJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<SpectrumJson>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchJson>,
}

#[derive(Debug, Serialize)]
pub struct ZetaPointJson {
    pub u: Pair,
    pub direct: Option<Pair>,
    pub reduced: Option<Pair>,
    pub rel_dev: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ZetaJson {
    pub graph: String,
    pub weighting: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub pass: bool,
    pub points: Vec<ZetaPointJson>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

/// One eigenvalue per row: `label,re,im,group`. Values are sorted by
/// `(re, im)` and consecutive values within `tol` of a group's first member
/// share its group id.
pub fn spectrum_csv(label: &str, spectrum: &Spectrum, tol: f64) -> String {
    let mut out = String::from("label,re,im,group\n");
    let mut group = 0usize;
    let mut anchor: Option<C64> = None;
    for z in spectrum.sorted() {
        match anchor {
            Some(a) if (z - a).norm() <= tol => {}
            Some(_) => {
                group += 1;
                anchor = Some(z);
            }
            None => anchor = Some(z),
        }
        out.push_str(&format!("{},{:e},{:e},{group}\n", csv_field(label), z.re, z.im));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
