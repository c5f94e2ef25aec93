//! Expansion-vs-Dirac timing harness.
//!
//! For each requested `L` a uniform dataset and query set are drawn from a
//! seeded ChaCha8 stream. Each repetition times the fit and the full query
//! loop for both methods; the first repetition is a warm-up and is dropped,
//! and the reported numbers are medians over the rest. Everything runs on
//! the calling thread.

use std::hint::black_box;
use std::time::{Duration, Instant};

use dirac_pmf::{BitPattern, Dataset, Method, PmfEstimate, MAX_LENGTH};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{CliError, Result, Verdict, AGREEMENT_TOL};

/// Largest `L` at which the expansion path is timed.
pub const EXPANSION_BENCH_CAP: usize = 20;

pub const MIN_REPETITIONS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub lengths: Vec<usize>,
    pub samples: usize,
    pub queries: usize,
    pub seed: u64,
    pub repetitions: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            lengths: vec![8, 10, 12],
            samples: 1000,
            queries: 1000,
            seed: 0,
            repetitions: MIN_REPETITIONS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodTiming {
    pub method: String,
    pub build_seconds: f64,
    pub query_seconds: f64,
    pub per_query_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    #[serde(rename = "L")]
    pub length: usize,
    #[serde(rename = "N")]
    pub samples: usize,
    pub queries: usize,
    pub timings: Vec<MethodTiming>,
    /// Expansion per-query time over Dirac per-query time.
    pub speedup: Option<f64>,
    pub agreement: bool,
    pub max_abs_diff: f64,
    pub note: Option<String>,
}

impl BenchReport {
    pub fn timing(&self, method: Method) -> Option<&MethodTiming> {
        self.timings.iter().find(|t| t.method == method.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchOutput {
    pub seed: u64,
    pub repetitions: usize,
    pub reports: Vec<BenchReport>,
}

impl Verdict for BenchOutput {
    fn holds(&self) -> bool {
        self.reports.iter().all(|r| r.agreement)
    }
}

/// Runs the harness. Disagreement between methods shows up as
/// `agreement: false` in the affected report; check [`Verdict::holds`].
pub fn cmd_bench(config: &BenchConfig) -> Result<BenchOutput> {
    if config.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if config.repetitions < MIN_REPETITIONS {
        return Err(CliError::Usage(format!(
            "need at least {MIN_REPETITIONS} timed repetitions"
        )));
    }
    if let Some(&bad) = config.lengths.iter().find(|&&l| l == 0 || l > MAX_LENGTH) {
        return Err(dirac_pmf::Error::LengthOutOfRange(bad).into());
    }
    let reports = config
        .lengths
        .iter()
        .map(|&length| bench_one(config, length))
        .collect::<Result<Vec<_>>>()?;
    Ok(BenchOutput {
        seed: config.seed,
        repetitions: config.repetitions,
        reports,
    })
}

fn stream_for(seed: u64, length: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(length as u64);
    rng
}

fn median(mut xs: Vec<Duration>) -> f64 {
    xs.sort_unstable();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid].as_secs_f64()
    } else {
        (xs[mid - 1].as_secs_f64() + xs[mid].as_secs_f64()) / 2.0
    }
}

struct Samples {
    build: Vec<Duration>,
    query: Vec<Duration>,
}

fn time_round(d: &Dataset, queries: &[BitPattern], method: Method) -> Result<(Duration, Duration)> {
    let t0 = Instant::now();
    let est = black_box(PmfEstimate::fit(d, method)?);
    let build = t0.elapsed();
    let t1 = Instant::now();
    let mut acc = 0.0;
    for x in queries {
        acc += est.probability(black_box(x))?;
    }
    black_box(acc);
    Ok((build, t1.elapsed()))
}

fn bench_one(config: &BenchConfig, length: usize) -> Result<BenchReport> {
    let mut rng = stream_for(config.seed, length);
    let d = Dataset::uniform(length, config.samples, &mut rng)?;
    let queries: Vec<BitPattern> = (0..config.queries)
        .map(|_| BitPattern::from_word(rng.random::<u64>(), length))
        .collect::<dirac_pmf::Result<_>>()?;

    let mut methods = vec![Method::Dirac];
    let mut note = None;
    if length <= EXPANSION_BENCH_CAP {
        methods.insert(0, Method::Expansion);
    } else {
        note = Some(format!(
            "expansion skipped: L = {length} exceeds {EXPANSION_BENCH_CAP}"
        ));
    }

    // agreement on every query
    let mut max_abs_diff: f64 = 0.0;
    if methods.len() == 2 {
        let slow = PmfEstimate::fit(&d, Method::Expansion)?;
        let fast = PmfEstimate::fit(&d, Method::Dirac)?;
        for x in &queries {
            let diff = (slow.probability(x)? - fast.probability(x)?).abs();
            max_abs_diff = max_abs_diff.max(diff);
        }
    }
    let agreement = max_abs_diff <= AGREEMENT_TOL;

    if queries.is_empty() {
        return Ok(BenchReport {
            length,
            samples: config.samples,
            queries: 0,
            timings: Vec::new(),
            speedup: None,
            agreement,
            max_abs_diff,
            note,
        });
    }

    let mut samples: Vec<Samples> = methods
        .iter()
        .map(|_| Samples {
            build: Vec::new(),
            query: Vec::new(),
        })
        .collect();
    for round in 0..=config.repetitions {
        for (slot, &method) in methods.iter().enumerate() {
            let (build, query) = time_round(&d, &queries, method)?;
            if round > 0 {
                samples[slot].build.push(build);
                samples[slot].query.push(query);
            }
        }
    }

    let timings: Vec<MethodTiming> = methods
        .iter()
        .zip(samples)
        .map(|(method, s)| {
            let query_seconds = median(s.query);
            MethodTiming {
                method: method.name().to_string(),
                build_seconds: median(s.build),
                query_seconds,
                per_query_seconds: query_seconds / queries.len() as f64,
            }
        })
        .collect();

    let per_query = |m: Method| {
        timings
            .iter()
            .find(|t| t.method == m.name())
            .map(|t| t.per_query_seconds)
    };
    let speedup = match (per_query(Method::Expansion), per_query(Method::Dirac)) {
        (Some(e), Some(d)) if d > 0.0 => Some(e / d),
        _ => None,
    };

    Ok(BenchReport {
        length,
        samples: config.samples,
        queries: queries.len(),
        timings,
        speedup,
        agreement,
        max_abs_diff,
        note,
    })
}
