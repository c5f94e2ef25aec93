use crate::basis::{phi, BasisIndex, ExhaustiveCap};
use crate::bitspace::{BitPattern, Dataset};
use crate::error::Result;

/// Tolerance used when snapping a kernel value to 0 or 1.
pub const KERNEL_ROUNDING: f64 = 1e-12;

/// A kernel evaluation `K(x_j, x)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct KernelValue(pub f64);

impl KernelValue {
    pub fn value(self) -> f64 {
        self.0
    }

    /// `Some(0)` or `Some(1)` when within [`KERNEL_ROUNDING`] of either.
    pub fn as_indicator(self) -> Option<u8> {
        if self.0.abs() <= KERNEL_ROUNDING {
            Some(0)
        } else if (self.0 - 1.0).abs() <= KERNEL_ROUNDING {
            Some(1)
        } else {
            None
        }
    }
}

/// `Σ_i φ_i(x_j)·φ_i(x) / 2^L`, summed term by term over every basis
/// polynomial.
pub fn kernel_sum(xj: &BitPattern, x: &BitPattern) -> Result<KernelValue> {
    x.ensure_length(xj.length())?;
    let length = xj.length();
    ExhaustiveCap::default().check(length)?;
    let total: i64 = BasisIndex::all(length)
        .map(|s| phi(s.mask(), xj.word()) * phi(s.mask(), x.word()))
        .sum();
    Ok(KernelValue(total as f64 / (1u64 << length) as f64))
}

/// Indicator of elementwise equality. Valid for any `L ≤ 64`.
pub fn kernel_dirac(xj: &BitPattern, x: &BitPattern) -> Result<KernelValue> {
    x.ensure_length(xj.length())?;
    Ok(KernelValue(if xj.word() == x.word() { 1.0 } else { 0.0 }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMethod {
    Sum,
    Dirac,
}

/// Dense `N × N` matrix of kernel values, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.entries[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[f64] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.get(a, b) == self.get(b, a)))
    }
}

pub fn gram_matrix(d: &Dataset, method: KernelMethod) -> Result<GramMatrix> {
    let patterns = d.patterns();
    let n = patterns.len();
    let kernel = match method {
        KernelMethod::Sum => {
            ExhaustiveCap::default().check(d.length())?;
            kernel_sum
        }
        KernelMethod::Dirac => kernel_dirac,
    };
    let mut entries = vec![0.0; n * n];
    for a in 0..n {
        for b in a..n {
            let v = kernel(&patterns[a], &patterns[b])?.value();
            entries[a * n + b] = v;
            entries[b * n + a] = v;
        }
    }
    Ok(GramMatrix { n, entries })
}
