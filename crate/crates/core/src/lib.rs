//! Nonparametric probability-mass estimation on binary spaces `{0,1}^L`.
//!
//! The Rademacher-Walsh expansion estimator
//!
//! ```text
//! p̂(x) = Σ_i α̂_i φ_i(x),   α̂_i = (1/N) Σ_j φ_i(x_j) / 2^L
//! ```
//!
//! is the kernel estimator `p̂(x) = (1/N) Σ_j K(x_j, x)` with
//! `K(x_j, x) = Σ_i φ_i(x_j) φ_i(x) / 2^L`, and that kernel is exactly the
//! indicator of `x_j = x`. The crate implements all three forms (explicit
//! expansion, Dirac counting, fast Walsh transform) and the combinatorial
//! facts tying them together.
//!
//! ```
//! use dirac_pmf::{load_dataset, parse_pattern, Method, PmfEstimate};
//!
//! let d = load_dataset("01\n01\n11\n".as_bytes()).unwrap();
//! let x = parse_pattern("01", Some(2)).unwrap();
//! let slow = PmfEstimate::fit(&d, Method::Expansion).unwrap();
//! let fast = PmfEstimate::fit(&d, Method::Dirac).unwrap();
//! assert_eq!(fast.probability(&x).unwrap(), 2.0 / 3.0);
//! assert!((slow.probability(&x).unwrap() - 2.0 / 3.0).abs() < 1e-12);
//! ```

#![forbid(unsafe_code)]

pub mod basis;
pub mod bitspace;
pub mod combinatorics;
pub mod error;
pub mod estimators;

pub use basis::{
    enumerate_basis, enumerate_basis_with_cap, eval_basis, orthogonality_sum, BasisIndex,
    BasisOrdering, BasisTable, ExhaustiveCap,
};
pub use bitspace::{
    load_dataset, parse_pattern, render_pattern, signed_value, BitPattern, Dataset, MAX_LENGTH,
};
pub use combinatorics::{
    binomial, check_pascal_identities, lemma1_expected, lemma1_sum, lemma1_sum_with_cap,
    signed_binomial_row_sum, RowSigns, SignAssignment,
};
pub use error::{Error, Result};
pub use estimators::{
    estimate_coefficients, estimate_coefficients_with_cap, estimate_dirac, estimate_expansion,
    estimate_fwht, fast_transform, fast_transform_in_place, gram_matrix, kernel_dirac, kernel_sum,
    CountTable, Direction, GramMatrix, KernelMethod, KernelValue, Method, PmfEstimate, Spectrum,
};
