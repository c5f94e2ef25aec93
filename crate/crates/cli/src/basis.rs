use dirac_pmf::{
    enumerate_basis, fast_transform_in_place, BasisIndex, BasisOrdering, Direction, Error,
    ExhaustiveCap,
};
use serde::{Deserialize, Serialize};

use crate::{Result, Verdict};

/// The full pairwise check touches `4^L` pairs.
pub const ORTHOGONALITY_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisCheck {
    Table(BasisOrdering),
    Orthogonality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub mask: u64,
    pub order: u32,
    pub variables: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub i: u64,
    pub k: u64,
    pub sum: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum BasisReport {
    Table {
        #[serde(rename = "L")]
        length: usize,
        ordering: String,
        order_counts: Vec<u64>,
        entries: Vec<TableEntry>,
    },
    Orthogonality {
        #[serde(rename = "L")]
        length: usize,
        pairs_checked: u64,
        pass: bool,
        first_violation: Option<Violation>,
    },
}

impl Verdict for BasisReport {
    fn holds(&self) -> bool {
        match self {
            BasisReport::Table { .. } => true,
            BasisReport::Orthogonality { pass, .. } => *pass,
        }
    }
}

pub fn cmd_basis(length: usize, check: BasisCheck) -> Result<BasisReport> {
    match check {
        BasisCheck::Table(ordering) => {
            let table = enumerate_basis(length, ordering)?;
            Ok(BasisReport::Table {
                length,
                ordering: match ordering {
                    BasisOrdering::Canonical => "canonical",
                    BasisOrdering::ByCardinality => "by_cardinality",
                }
                .to_string(),
                order_counts: table.order_histogram(),
                entries: table
                    .entries()
                    .iter()
                    .map(|e| TableEntry {
                        mask: e.mask(),
                        order: e.order(),
                        variables: e.variables(),
                    })
                    .collect(),
            })
        }
        BasisCheck::Orthogonality => orthogonality(length),
    }
}

/// Every pair `(i, k)`. For a fixed `k` the forward transform of the
/// function `x ↦ φ_k(x)` yields `Σ_x φ_k(x) φ_S(x)` for all `S` at once, so
/// the whole table costs `O(L·4^L)` rather than `O(8^L)`.
fn orthogonality(length: usize) -> Result<BasisReport> {
    if length == 0 {
        return Err(Error::LengthOutOfRange(0).into());
    }
    ExhaustiveCap(ORTHOGONALITY_CAP).check(length)?;
    let size = 1usize << length;
    let full = 1i64 << length;
    let mut first_violation = None;
    let mut column = vec![0.0f64; size];
    'outer: for k in BasisIndex::all(length) {
        for (w, v) in column.iter_mut().enumerate() {
            let x = dirac_pmf::BitPattern::from_word(w as u64, length)?;
            *v = f64::from(dirac_pmf::eval_basis(&k, &x)?);
        }
        fast_transform_in_place(
            &mut column,
            Direction::Forward,
            ExhaustiveCap(ORTHOGONALITY_CAP),
        )?;
        for (i, &t) in column.iter().enumerate() {
            let expected = if i as u64 == k.mask() { full } else { 0 };
            let sum = t as i64;
            if t != sum as f64 || sum != expected {
                first_violation = Some(Violation {
                    i: i as u64,
                    k: k.mask(),
                    sum,
                    expected,
                });
                break 'outer;
            }
        }
    }
    Ok(BasisReport::Orthogonality {
        length,
        pairs_checked: (size as u64) * (size as u64),
        pass: first_violation.is_none(),
        first_violation,
    })
}
