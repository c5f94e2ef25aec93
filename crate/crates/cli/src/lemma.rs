use dirac_pmf::{lemma1_expected, lemma1_sum, ExhaustiveCap, SignAssignment};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result, Verdict};

/// Exhaustive mode enumerates `2^L` assignments × `2^L` subsets.
pub const LEMMA_EXHAUSTIVE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCase {
    pub signs: String,
    pub sum: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum LemmaReport {
    Single {
        #[serde(rename = "L")]
        length: usize,
        signs: String,
        sum: i64,
        expected: i64,
        pass: bool,
    },
    Exhaustive {
        #[serde(rename = "L")]
        length: usize,
        assignments: u64,
        all_plus_sum: i64,
        all_pass: bool,
        first_failure: Option<LemmaCase>,
    },
}

impl Verdict for LemmaReport {
    fn holds(&self) -> bool {
        match self {
            LemmaReport::Single { pass, .. } => *pass,
            LemmaReport::Exhaustive { all_pass, .. } => *all_pass,
        }
    }
}

/// With `signs`, checks that one assignment; otherwise checks all `2^L`.
/// `length` may be omitted when `signs` is given.
pub fn cmd_lemma(length: Option<usize>, signs: Option<&str>) -> Result<LemmaReport> {
    match signs {
        Some(text) => {
            let a = SignAssignment::parse(text)?;
            if let Some(l) = length {
                if l != a.length() {
                    return Err(CliError::Usage(format!(
                        "sign string {text:?} has {} entries but --length is {l}",
                        a.length()
                    )));
                }
            }
            let sum = lemma1_sum(&a)?;
            let expected = lemma1_expected(&a);
            Ok(LemmaReport::Single {
                length: a.length(),
                signs: a.to_string(),
                sum,
                expected,
                pass: sum == expected,
            })
        }
        None => {
            let length =
                length.ok_or_else(|| CliError::Usage("lemma needs --length or --signs".into()))?;
            if length == 0 {
                return Err(dirac_pmf::Error::LengthOutOfRange(0).into());
            }
            ExhaustiveCap(LEMMA_EXHAUSTIVE_CAP).check(length)?;
            let mut first_failure = None;
            let mut all_plus_sum = 0;
            for neg in 0..1u64 << length {
                let a = SignAssignment::from_negative_mask(neg, length)?;
                let sum = lemma1_sum(&a)?;
                let expected = lemma1_expected(&a);
                if neg == 0 {
                    all_plus_sum = sum;
                }
                if sum != expected && first_failure.is_none() {
                    first_failure = Some(LemmaCase {
                        signs: a.to_string(),
                        sum,
                        expected,
                    });
                }
            }
            Ok(LemmaReport::Exhaustive {
                length,
                assignments: 1 << length,
                all_plus_sum,
                all_pass: first_failure.is_none(),
                first_failure,
            })
        }
    }
}
