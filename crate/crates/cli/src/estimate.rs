use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use dirac_pmf::{load_dataset, parse_pattern, Dataset, Method, PmfEstimate};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result, AGREEMENT_TOL};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    #[serde(rename = "L")]
    pub length: usize,
    #[serde(rename = "N")]
    pub samples: usize,
    pub method: String,
    pub query: String,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub mask: u64,
    pub order: u32,
    pub alpha: f64,
}

pub(crate) fn read_dataset(path: &Path) -> Result<Dataset> {
    let file = File::open(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(load_dataset(BufReader::new(file))?)
}

/// Estimates `p̂(query)`. Non-Dirac answers are cross-checked against the
/// counting estimate; a disagreement is reported as an invariant violation.
pub fn estimate_report(d: &Dataset, query: &str, method: Method) -> Result<EstimateReport> {
    let x = parse_pattern(query, Some(d.length()))?;
    let p = PmfEstimate::fit(d, method)?.probability(&x)?;
    if method != Method::Dirac {
        let reference = PmfEstimate::fit(d, Method::Dirac)?.probability(&x)?;
        if (p - reference).abs() > AGREEMENT_TOL {
            return Err(CliError::Invariant(format!(
                "{method} estimate {p} differs from counting estimate {reference} at {x}"
            )));
        }
    }
    Ok(EstimateReport {
        length: d.length(),
        samples: d.n_samples(),
        method: method.name().to_string(),
        query: x.to_string(),
        p,
    })
}

pub fn cmd_estimate(input: &Path, query: &str, method: Method) -> Result<EstimateReport> {
    let d = read_dataset(input)?;
    estimate_report(&d, query, method)
}

pub fn cmd_spectrum(input: &Path) -> Result<Vec<SpectrumEntry>> {
    let d = read_dataset(input)?;
    let s = dirac_pmf::estimate_coefficients(&d)?;
    Ok(s.entries()
        .map(|(index, alpha)| SpectrumEntry {
            mask: index.mask(),
            order: index.order(),
            alpha,
        })
        .collect())
}
