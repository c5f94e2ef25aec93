//! Probability-mass estimators on `{0,1}^L`.
//!
//! Three routes produce the same estimate:
//!
//! * **expansion**: estimate every Rademacher-Walsh coefficient from the
//!   sample, then sum `α̂_i φ_i(x)` over all `2^L` basis polynomials.
//! * **dirac**: the normalised kernel `Σ_i φ_i(x_j)φ_i(x) / 2^L` is the
//!   indicator of `x_j = x`, so `p̂(x)` is the sample frequency of `x`.
//!   One hash lookup per query, valid for any `L ≤ 64`.
//! * **fwht**: forward transform of the count vector gives the spectrum, the
//!   inverse transform gives `p̂` at every point in `O(L·2^L)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::basis::ExhaustiveCap;
use crate::bitspace::{BitPattern, Dataset};
use crate::error::{Error, Result};

pub mod kernel;
pub mod spectrum;
pub mod transform;

pub use kernel::{gram_matrix, kernel_dirac, kernel_sum, GramMatrix, KernelMethod, KernelValue};
pub use spectrum::{
    estimate_coefficients, estimate_coefficients_with_cap, estimate_expansion, Spectrum,
};
pub use transform::{fast_transform, fast_transform_in_place, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Expansion,
    Dirac,
    Fwht,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Expansion, Method::Dirac, Method::Fwht];

    pub fn name(self) -> &'static str {
        match self {
            Method::Expansion => "expansion",
            Method::Dirac => "dirac",
            Method::Fwht => "fwht",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown method {s:?}")))
    }
}

/// Pattern → multiplicity, built once per dataset.
#[derive(Debug, Clone)]
pub struct CountTable {
    length: usize,
    sample_size: usize,
    counts: HashMap<u64, usize>,
}

impl CountTable {
    pub fn new(d: &Dataset) -> Self {
        let mut counts = HashMap::with_capacity(d.n_samples());
        for p in d.patterns() {
            *counts.entry(p.word()).or_insert(0) += 1;
        }
        CountTable {
            length: d.length(),
            sample_size: d.n_samples(),
            counts,
        }
    }

    pub fn count(&self, x: &BitPattern) -> Result<usize> {
        x.ensure_length(self.length)?;
        Ok(self.counts.get(&x.word()).copied().unwrap_or(0))
    }

    pub fn probability(&self, x: &BitPattern) -> Result<f64> {
        Ok(self.count(x)? as f64 / self.sample_size as f64)
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }
}

/// Frequency of `x` in `d`: `(1/N) Σ_j [x_j = x]`. For repeated queries fit a
/// [`PmfEstimate`] once instead.
pub fn estimate_dirac(d: &Dataset, x: &BitPattern) -> Result<f64> {
    x.ensure_length(d.length())?;
    CountTable::new(d).probability(x)
}

/// Count vector → forward transform → inverse transform → entry at `x`.
pub fn estimate_fwht(d: &Dataset, x: &BitPattern) -> Result<f64> {
    x.ensure_length(d.length())?;
    let table = fwht_table(d, ExhaustiveCap::default())?;
    Ok(table[x.word() as usize])
}

fn fwht_table(d: &Dataset, cap: ExhaustiveCap) -> Result<Vec<f64>> {
    let length = d.length();
    cap.check(length)?;
    let n = d.n_samples() as f64;
    let mut freq = vec![0.0f64; 1 << length];
    for p in d.patterns() {
        freq[p.word() as usize] += 1.0;
    }
    fast_transform_in_place(&mut freq, Direction::Forward, cap)?;
    fast_transform_in_place(&mut freq, Direction::Inverse, cap)?;
    freq.iter_mut().for_each(|v| *v /= n);
    Ok(freq)
}

#[derive(Debug, Clone)]
enum Backing {
    Spectrum(Spectrum),
    Counts(CountTable),
    Table(Vec<f64>),
}

/// A fitted, queryable estimate `p̂`.
#[derive(Debug, Clone)]
pub struct PmfEstimate {
    length: usize,
    sample_size: usize,
    method: Method,
    backing: Backing,
}

impl PmfEstimate {
    pub fn fit(d: &Dataset, method: Method) -> Result<Self> {
        Self::fit_with_cap(d, method, ExhaustiveCap::default())
    }

    pub fn fit_with_cap(d: &Dataset, method: Method, cap: ExhaustiveCap) -> Result<Self> {
        let backing = match method {
            Method::Expansion => Backing::Spectrum(estimate_coefficients_with_cap(d, cap)?),
            Method::Dirac => Backing::Counts(CountTable::new(d)),
            Method::Fwht => Backing::Table(fwht_table(d, cap)?),
        };
        Ok(PmfEstimate {
            length: d.length(),
            sample_size: d.n_samples(),
            method,
            backing,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sample_size(&self) -> usize {
        self.sample_size
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// The fitted spectrum, on the expansion path only.
    pub fn spectrum(&self) -> Option<&Spectrum> {
        match &self.backing {
            Backing::Spectrum(s) => Some(s),
            _ => None,
        }
    }

    /// `p̂(x)`. Patterns absent from the sample get `0`.
    pub fn probability(&self, x: &BitPattern) -> Result<f64> {
        x.ensure_length(self.length)?;
        match &self.backing {
            Backing::Spectrum(s) => estimate_expansion(s, x),
            Backing::Counts(c) => c.probability(x),
            Backing::Table(t) => Ok(t[x.word() as usize]),
        }
    }
}
