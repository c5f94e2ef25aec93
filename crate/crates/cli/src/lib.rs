//! Command implementations behind the `dirac-pmf` binary.
//!
//! Each `cmd_*` function returns a serialisable report; the binary prints it
//! as JSON and maps [`CliError`] and failed verdicts onto exit codes.

use thiserror::Error;

pub mod basis;
pub mod bench;
pub mod estimate;
pub mod lemma;

pub use basis::{cmd_basis, BasisCheck, BasisReport, ORTHOGONALITY_CAP};
pub use bench::{
    cmd_bench, BenchConfig, BenchOutput, BenchReport, MethodTiming, EXPANSION_BENCH_CAP,
};
pub use estimate::{cmd_estimate, cmd_spectrum, estimate_report, EstimateReport, SpectrumEntry};
pub use lemma::{cmd_lemma, LemmaReport, LEMMA_EXHAUSTIVE_CAP};

/// Agreement tolerance between estimation paths.
pub const AGREEMENT_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Data(#[from] dirac_pmf::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// 1 for bad input, 2 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Reports that carry a pass/fail verdict.
pub trait Verdict {
    fn holds(&self) -> bool;
}
