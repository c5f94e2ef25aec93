//! Rademacher-Walsh polynomial basis on `{0,1}^L`.
//!
//! Basis function `φ_S(x) = ∏_{l∈S} (2x_l − 1)` for a subset `S ⊆ {1..L}`.
//! Subsets are identified with `L`-bit masks (bit `l − 1` set when variable
//! `l` participates), so the canonical basis index `i` *is* the mask. The
//! empty mask gives the constant `φ_0 ≡ 1`.
//!
//! Evaluation does not multiply factors: `φ_S(x) = (−1)^{|{l∈S : x_l = 0}|}`,
//! which is one popcount.

use std::cmp::Ordering;
use std::fmt;

use crate::bitspace::{check_length, low_mask, BitPattern};
use crate::error::{Error, Result};

/// Upper bound on `L` for anything that enumerates all `2^L` points or basis
/// functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveCap(pub usize);

impl ExhaustiveCap {
    pub const DEFAULT: ExhaustiveCap = ExhaustiveCap(24);

    pub fn check(self, length: usize) -> Result<()> {
        if length > self.0 {
            Err(Error::CapExceeded {
                length,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for ExhaustiveCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `φ_S(x)` on raw words. `mask` must already be restricted to the low `L` bits.
#[inline(always)]
pub(crate) fn phi(mask: u64, word: u64) -> i64 {
    1 - 2 * i64::from((mask & !word).count_ones() & 1)
}

/// A subset `S ⊆ {1..L}` naming one basis polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    mask: u64,
    length: u8,
}

impl BasisIndex {
    pub fn new(mask: u64, length: usize) -> Result<Self> {
        check_length(length)?;
        if mask & !low_mask(length) != 0 {
            return Err(Error::Range(format!(
                "mask {mask:#x} has bits outside the first {length} variables"
            )));
        }
        Ok(BasisIndex {
            mask,
            length: length as u8,
        })
    }

    /// Builds the subset from 1-based variable numbers.
    pub fn from_variables(variables: &[usize], length: usize) -> Result<Self> {
        check_length(length)?;
        let mut mask = 0u64;
        for &l in variables {
            if l == 0 || l > length {
                return Err(Error::IndexOutOfRange { index: l, length });
            }
            mask |= 1 << (l - 1);
        }
        Ok(BasisIndex {
            mask,
            length: length as u8,
        })
    }

    /// The constant polynomial `φ_0`.
    pub fn empty(length: usize) -> Result<Self> {
        BasisIndex::new(0, length)
    }

    /// All `2^L` subsets in canonical (mask) order.
    pub fn all(length: usize) -> impl Iterator<Item = BasisIndex> {
        debug_assert!((1..64).contains(&length));
        (0..1u64 << length).map(move |mask| BasisIndex {
            mask,
            length: length as u8,
        })
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn length(&self) -> usize {
        usize::from(self.length)
    }

    /// Number of `(2x_l − 1)` factors.
    #[inline]
    pub fn order(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Participating variables, ascending, 1-based.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.length())
            .filter(|i| (self.mask >> i) & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    fn cardinality_cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.variables().cmp(&other.variables()))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.variables().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vars.join(","))
    }
}

/// Evaluates `φ_S(x) ∈ {−1, +1}`.
pub fn eval_basis(s: &BasisIndex, x: &BitPattern) -> Result<i8> {
    x.ensure_length(s.length())?;
    Ok(phi(s.mask, x.word()) as i8)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisOrdering {
    /// Ascending mask value.
    Canonical,
    /// Order 0, then order 1, …, then order `L`; lexicographic by variable
    /// list within an order.
    ByCardinality,
}

/// The complete set of `2^L` basis indices in a chosen ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTable {
    length: usize,
    ordering: BasisOrdering,
    entries: Vec<BasisIndex>,
}

impl BasisTable {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn ordering(&self) -> BasisOrdering {
        self.ordering
    }

    pub fn entries(&self) -> &[BasisIndex] {
        &self.entries
    }

    /// `hist[ρ]` = number of entries of order `ρ`.
    pub fn order_histogram(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.length + 1];
        for e in &self.entries {
            hist[e.order() as usize] += 1;
        }
        hist
    }
}

pub fn enumerate_basis(length: usize, ordering: BasisOrdering) -> Result<BasisTable> {
    enumerate_basis_with_cap(length, ordering, ExhaustiveCap::default())
}

pub fn enumerate_basis_with_cap(
    length: usize,
    ordering: BasisOrdering,
    cap: ExhaustiveCap,
) -> Result<BasisTable> {
    check_length(length)?;
    cap.check(length)?;
    let mut entries: Vec<BasisIndex> = BasisIndex::all(length).collect();
    if ordering == BasisOrdering::ByCardinality {
        entries.sort_by(BasisIndex::cardinality_cmp);
    }
    Ok(BasisTable {
        length,
        ordering,
        entries,
    })
}

/// `Σ_{x ∈ {0,1}^L} φ_i(x)·φ_k(x)`, by enumerating every point.
pub fn orthogonality_sum(i: &BasisIndex, k: &BasisIndex) -> Result<i64> {
    let length = i.length();
    if k.length() != length {
        return Err(Error::LengthMismatch {
            expected: length,
            found: k.length(),
        });
    }
    ExhaustiveCap::default().check(length)?;
    Ok((0..1u64 << length)
        .map(|x| phi(i.mask, x) * phi(k.mask, x))
        .sum())
}
