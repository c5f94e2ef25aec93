use std::collections::HashMap;

use crate::basis::{phi, BasisIndex, ExhaustiveCap};
use crate::bitspace::{BitPattern, Dataset};
use crate::error::{Error, Result};
use crate::estimators::transform::{fast_transform_in_place, Direction};

/// Estimated Rademacher-Walsh coefficients `α̂_0..α̂_{2^L−1}`, indexed by
/// subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    length: usize,
    sample_size: usize,
    coefficients: Vec<f64>,
}

impl Spectrum {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sample_size(&self) -> usize {
        self.sample_size
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn alpha(&self, s: &BasisIndex) -> Result<f64> {
        if s.length() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: s.length(),
            });
        }
        Ok(self.coefficients[s.mask() as usize])
    }

    /// `(index, α̂)` pairs in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (BasisIndex, f64)> + '_ {
        BasisIndex::all(self.length).zip(self.coefficients.iter().copied())
    }

    /// Same coefficients computed through the fast transform of the count
    /// vector instead of the per-coefficient sample average.
    pub fn from_transform(d: &Dataset) -> Result<Self> {
        let length = d.length();
        ExhaustiveCap::default().check(length)?;
        let mut counts = vec![0.0f64; 1 << length];
        for p in d.patterns() {
            counts[p.word() as usize] += 1.0;
        }
        fast_transform_in_place(&mut counts, Direction::Forward, ExhaustiveCap::default())?;
        let denom = d.n_samples() as f64 * (1u64 << length) as f64;
        Ok(Spectrum {
            length,
            sample_size: d.n_samples(),
            coefficients: counts.into_iter().map(|t| t / denom).collect(),
        })
    }
}

/// `α̂_i = (1/N) Σ_j φ_i(x_j) / 2^L` for every `i`.
///
/// Samples are grouped by distinct pattern first; the per-coefficient sums
/// are accumulated in integers and divided once.
pub fn estimate_coefficients(d: &Dataset) -> Result<Spectrum> {
    estimate_coefficients_with_cap(d, ExhaustiveCap::default())
}

pub fn estimate_coefficients_with_cap(d: &Dataset, cap: ExhaustiveCap) -> Result<Spectrum> {
    let length = d.length();
    cap.check(length)?;
    let mut multiplicity: HashMap<u64, i64> = HashMap::new();
    for p in d.patterns() {
        *multiplicity.entry(p.word()).or_insert(0) += 1;
    }
    let mut distinct: Vec<(u64, i64)> = multiplicity.into_iter().collect();
    distinct.sort_unstable();

    let mut sums = vec![0i64; 1 << length];
    for &(word, count) in &distinct {
        for (mask, acc) in sums.iter_mut().enumerate() {
            *acc += count * phi(mask as u64, word);
        }
    }
    let denom = d.n_samples() as f64 * (1u64 << length) as f64;
    Ok(Spectrum {
        length,
        sample_size: d.n_samples(),
        coefficients: sums.into_iter().map(|s| s as f64 / denom).collect(),
    })
}

/// `p̂(x) = Σ_i α̂_i φ_i(x)`, one term per basis polynomial.
pub fn estimate_expansion(s: &Spectrum, x: &BitPattern) -> Result<f64> {
    x.ensure_length(s.length)?;
    let word = x.word();
    Ok(s.coefficients
        .iter()
        .enumerate()
        .map(|(mask, &a)| a * phi(mask as u64, word) as f64)
        .sum())
}
