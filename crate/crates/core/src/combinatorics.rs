//! Sums of subset products of ±1 variables, and the binomial identities
//! behind them.
//!
//! For signs `a_1..a_L` the `2^L` subset products `z_S = ∏_{l∈S} a_l` sum to
//! `2^L` when every `a_l = +1` and to `0` otherwise. Grouping subsets by size
//! with `m` minus signs and `k` plus signs gives the closed form
//! `2^k · (1 − 1)^m`.
//!
//! Everything here is exact integer arithmetic.

use std::fmt;

use crate::basis::{BasisIndex, ExhaustiveCap};
use crate::bitspace::{check_length, low_mask, BitPattern};
use crate::error::{Error, Result};

/// Largest `n` accepted by the binomial routines.
pub const MAX_BINOMIAL_N: u64 = 60;

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // exact: acc is C(n, i) here, and C(n, i)·(n − i) is divisible by i + 1
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// `C(n, r)` extended to signed arguments: zero when `r < 0` or `r > n`.
fn binomial_signed(n: i64, r: i64) -> i128 {
    if n < 0 || r < 0 || r > n {
        0
    } else {
        binomial(n as u64, r as u64) as i128
    }
}

/// A vector of signs `a_1..a_L`, each `−1` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignAssignment {
    /// Bit `l − 1` set when `a_l = −1`.
    negatives: u64,
    length: u8,
}

impl SignAssignment {
    pub fn from_negative_mask(negatives: u64, length: usize) -> Result<Self> {
        check_length(length)?;
        if negatives & !low_mask(length) != 0 {
            return Err(Error::Range(format!(
                "sign mask {negatives:#x} exceeds {length} variables"
            )));
        }
        Ok(SignAssignment {
            negatives,
            length: length as u8,
        })
    }

    pub fn from_values(values: &[i8]) -> Result<Self> {
        check_length(values.len())?;
        let mut negatives = 0u64;
        for (i, &v) in values.iter().enumerate() {
            match v {
                1 => {}
                -1 => negatives |= 1 << i,
                _ => return Err(Error::Range(format!("sign value {v} is not ±1"))),
            }
        }
        SignAssignment::from_negative_mask(negatives, values.len())
    }

    /// Parses a string like `"+-+"`, leftmost character is `a_1`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                ch => Err(Error::IllegalCharacter { ch, position }),
            })
            .collect::<Result<Vec<i8>>>()?;
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        SignAssignment::from_values(&values)
    }

    /// `a_l = (2x_{jl} − 1)(2x_l − 1)`, negative exactly where the patterns differ.
    pub fn from_pattern_pair(xj: &BitPattern, x: &BitPattern) -> Result<Self> {
        x.ensure_length(xj.length())?;
        SignAssignment::from_negative_mask(xj.word() ^ x.word(), xj.length())
    }

    pub fn length(&self) -> usize {
        usize::from(self.length)
    }

    pub fn negative_mask(&self) -> u64 {
        self.negatives
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.length())
            .map(|i| {
                if (self.negatives >> i) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect()
    }

    /// `m`, the number of `−1` entries.
    pub fn minus_count(&self) -> u32 {
        self.negatives.count_ones()
    }

    /// `k`, the number of `+1` entries.
    pub fn plus_count(&self) -> u32 {
        self.length as u32 - self.minus_count()
    }

    pub fn is_all_plus(&self) -> bool {
        self.negatives == 0
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.values() {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// `Σ_S ∏_{l∈S} a_l` over all `2^L` subsets, enumerated through the same
/// subset iterator as the basis functions.
pub fn lemma1_sum(a: &SignAssignment) -> Result<i64> {
    lemma1_sum_with_cap(a, ExhaustiveCap::default())
}

pub fn lemma1_sum_with_cap(a: &SignAssignment, cap: ExhaustiveCap) -> Result<i64> {
    cap.check(a.length())?;
    Ok(BasisIndex::all(a.length())
        .map(|s| 1 - 2 * i64::from((s.mask() & a.negatives).count_ones() & 1))
        .sum())
}

/// What [`lemma1_sum`] must return: `2^L` for all-plus, else `0`.
pub fn lemma1_expected(a: &SignAssignment) -> i64 {
    if a.is_all_plus() {
        1i64 << a.length()
    } else {
        0
    }
}

/// Sign pattern of a row sum `Σ_ρ (signed count of ρ-subsets)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSigns {
    AllPlus,
    AllMinus,
    /// `minus` variables equal to `−1`, `plus` equal to `+1`.
    Mixed {
        minus: u32,
        plus: u32,
    },
}

/// Row sum of signed binomials for `L` variables:
///
/// * `AllPlus`: `Σ_ρ C(L,ρ) = 2^L`
/// * `AllMinus`: `Σ_ρ (−1)^ρ C(L,ρ)`
/// * `Mixed{m,k}`: `2^k · Σ_ρ (−1)^ρ C(m,ρ)`
pub fn signed_binomial_row_sum(length: u64, signs: RowSigns) -> Result<i128> {
    if length == 0 || length > MAX_BINOMIAL_N {
        return Err(Error::Range(format!(
            "L = {length} must lie in 1..={MAX_BINOMIAL_N}"
        )));
    }
    let alternating = |n: u64| -> i128 {
        (0..=n)
            .map(|r| {
                let c = binomial(n, r) as i128;
                if r % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    };
    match signs {
        RowSigns::AllPlus => Ok((0..=length).map(|r| binomial(length, r) as i128).sum()),
        RowSigns::AllMinus => Ok(alternating(length)),
        RowSigns::Mixed { minus, plus } => {
            if u64::from(minus) + u64::from(plus) != length {
                return Err(Error::Range(format!(
                    "m + k = {} + {} does not equal L = {length}",
                    minus, plus
                )));
            }
            Ok((1i128 << plus) * alternating(u64::from(minus)))
        }
    }
}

/// Checks, for the given `n` and `r`:
///
/// * I: `C(n,r) = C(n−1,r) + C(n−1,r−1)` (with `C(n−1,−1) = 0`)
/// * II: `C(n+r,n+r) = C(n+r−1,n+r−1) = 1`
/// * III: `C(n+j,0) = C(n+j−1,0) = 1`, taking `j = r`
///
/// An identity whose arguments would go negative (`n = 0` for I, `n + r = 0`
/// for II and III) holds vacuously.
pub fn check_pascal_identities(n: u64, r: u64) -> Result<bool> {
    if r > n || n > MAX_BINOMIAL_N {
        return Err(Error::Range(format!(
            "need 0 ≤ r ≤ n ≤ {MAX_BINOMIAL_N}, got n = {n}, r = {r}"
        )));
    }
    let (n, r) = (n as i64, r as i64);
    let first = n == 0
        || binomial_signed(n, r) == binomial_signed(n - 1, r) + binomial_signed(n - 1, r - 1);
    let top = n + r;
    let second = top == 0
        || (binomial_signed(top, top) == binomial_signed(top - 1, top - 1)
            && binomial_signed(top, top) == 1);
    let third = top == 0
        || (binomial_signed(top, 0) == binomial_signed(top - 1, 0) && binomial_signed(top, 0) == 1);
    Ok(first && second && third)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force subset products with literal multiplication.
    fn brute_lemma(values: &[i8]) -> i64 {
        let length = values.len();
        (0..1u64 << length)
            .map(|s| {
                (0..length)
                    .filter(|i| (s >> i) & 1 == 1)
                    .map(|i| i64::from(values[i]))
                    .product::<i64>()
            })
            .sum()
    }

    /// Scenario-3 by repeated Pascal splitting: start from the signed row
    /// `e_ρ = (−1)^ρ C(m,ρ)` of `m` minus signs, then add `+1` variables one
    /// at a time via `e'_ρ = e_ρ + e_{ρ−1}` and sum the final row.
    fn recursive_row_sum(m: u32, k: u32) -> i128 {
        let mut row: Vec<i128> = (0..=u64::from(m))
            .map(|r| {
                let c = binomial(u64::from(m), r) as i128;
                if r % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        for _ in 0..k {
            let mut next = vec![0i128; row.len() + 1];
            next[0] = row[0];
            for rho in 1..row.len() {
                next[rho] = row[rho] + row[rho - 1];
            }
            next[row.len()] = row[row.len() - 1];
            row = next;
        }
        row.iter().sum()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        for n in 1..=60u64 {
            let sum: u128 = (0..=n).map(|r| binomial(n, r)).sum();
            assert_eq!(sum, 1u128 << n);
        }
    }

    #[test]
    fn lemma_examples() {
        let a = SignAssignment::parse("+++").unwrap();
        assert_eq!(lemma1_sum(&a).unwrap(), 8);
        let a = SignAssignment::parse("--").unwrap();
        assert_eq!(lemma1_sum(&a).unwrap(), 0);
        let a = SignAssignment::from_values(&[-1, 1, 1]).unwrap();
        assert_eq!(lemma1_sum(&a).unwrap(), 0);
        assert_eq!(brute_lemma(&[-1, 1, 1]), 0);
    }

    #[test]
    fn lemma_cap() {
        let a = SignAssignment::from_negative_mask(0, 30).unwrap();
        assert!(matches!(lemma1_sum(&a), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sign_parsing() {
        assert!(matches!(SignAssignment::parse(""), Err(Error::EmptyInput)));
        assert!(matches!(
            SignAssignment::parse("+x"),
            Err(Error::IllegalCharacter {
                ch: 'x',
                position: 1
            })
        ));
        let a = SignAssignment::parse("+-+-").unwrap();
        assert_eq!(a.values(), vec![1, -1, 1, -1]);
        assert_eq!((a.minus_count(), a.plus_count()), (2, 2));
        assert_eq!(a.to_string(), "+-+-");
        assert!(SignAssignment::from_values(&[1, 0]).is_err());
    }

    #[test]
    fn lemma_exhaustive_matches_brute_force() {
        for length in 1..=10 {
            for neg in 0..1u64 << length {
                let a = SignAssignment::from_negative_mask(neg, length).unwrap();
                let got = lemma1_sum(&a).unwrap();
                assert_eq!(got, lemma1_expected(&a));
                if length <= 6 {
                    assert_eq!(got, brute_lemma(&a.values()));
                }
            }
        }
    }

    #[test]
    fn lemma_bridges_to_kernel_terms() {
        use crate::basis::eval_basis;
        for length in 1..=6 {
            for wj in 0..1u64 << length {
                for w in 0..1u64 << length {
                    let xj = BitPattern::from_word(wj, length).unwrap();
                    let x = BitPattern::from_word(w, length).unwrap();
                    let a = SignAssignment::from_pattern_pair(&xj, &x).unwrap();
                    let kernel_terms: i64 = BasisIndex::all(length)
                        .map(|s| {
                            i64::from(eval_basis(&s, &xj).unwrap())
                                * i64::from(eval_basis(&s, &x).unwrap())
                        })
                        .sum();
                    assert_eq!(lemma1_sum(&a).unwrap(), kernel_terms);
                }
            }
        }
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(signed_binomial_row_sum(4, RowSigns::AllPlus).unwrap(), 16);
        assert_eq!(signed_binomial_row_sum(5, RowSigns::AllMinus).unwrap(), 0);
        let mixed = RowSigns::Mixed { minus: 2, plus: 3 };
        assert_eq!(signed_binomial_row_sum(5, mixed).unwrap(), 0);
        // 2^3 · (C(2,0) − C(2,1) + C(2,2))
        let hand = 8 * (binomial(2, 0) as i128 - binomial(2, 1) as i128 + binomial(2, 2) as i128);
        assert_eq!(signed_binomial_row_sum(5, mixed).unwrap(), hand);
    }

    #[test]
    fn row_sum_errors() {
        assert!(signed_binomial_row_sum(0, RowSigns::AllPlus).is_err());
        assert!(signed_binomial_row_sum(61, RowSigns::AllPlus).is_err());
        assert!(signed_binomial_row_sum(4, RowSigns::Mixed { minus: 1, plus: 1 }).is_err());
    }

    #[test]
    fn row_sum_all_plus_is_power_of_two() {
        for n in 1..=60u64 {
            assert_eq!(
                signed_binomial_row_sum(n, RowSigns::AllPlus).unwrap(),
                1i128 << n
            );
            assert_eq!(signed_binomial_row_sum(n, RowSigns::AllMinus).unwrap(), 0);
        }
    }

    #[test]
    fn scenario3_closed_form_matches_recursion() {
        for total in 1..=20u32 {
            for m in 1..=total {
                let k = total - m;
                let closed = signed_binomial_row_sum(
                    u64::from(total),
                    RowSigns::Mixed { minus: m, plus: k },
                )
                .unwrap();
                assert_eq!(closed, 0);
                assert_eq!(closed, recursive_row_sum(m, k));
            }
        }
        // m = 0 degenerates to the all-plus row
        assert_eq!(recursive_row_sum(0, 5), 32);
        assert_eq!(
            signed_binomial_row_sum(5, RowSigns::Mixed { minus: 0, plus: 5 }).unwrap(),
            32
        );
    }

    #[test]
    fn pascal_examples() {
        assert!(check_pascal_identities(5, 2).unwrap());
        assert_eq!(binomial(5, 2), binomial(4, 2) + binomial(4, 1));
        assert!(check_pascal_identities(1, 0).unwrap());
        assert!(check_pascal_identities(3, 3).unwrap());
        assert!(check_pascal_identities(0, 0).unwrap());
        assert!(check_pascal_identities(2, 3).is_err());
        assert!(check_pascal_identities(61, 0).is_err());
    }

    #[test]
    fn pascal_exhaustive() {
        for n in 0..=30 {
            for r in 0..=n {
                assert!(check_pascal_identities(n, r).unwrap(), "n={n} r={r}");
            }
        }
    }

    proptest! {
        #[test]
        fn lemma_sum_is_permutation_invariant(
            values in prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..=14),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let a = SignAssignment::from_values(&values).unwrap();
            let mut shuffled = values.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let b = SignAssignment::from_values(&shuffled).unwrap();
            prop_assert_eq!(lemma1_sum(&a).unwrap(), lemma1_sum(&b).unwrap());
        }
    }
}
