//! Binary patterns `x ∈ {0,1}^L` and datasets of prototype patterns.
//!
//! A [`BitPattern`] packs its `L ≤ 64` digits into one machine word. The
//! leftmost character of the text form is `x_1` and lives in bit 0 of the
//! word; in general `x_l` is bit `l - 1`.

use std::fmt;
use std::io::BufRead;

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported pattern length.
pub const MAX_LENGTH: usize = 64;

/// Mask with the low `length` bits set.
#[inline]
pub(crate) fn low_mask(length: usize) -> u64 {
    if length >= 64 {
        u64::MAX
    } else {
        (1u64 << length) - 1
    }
}

pub(crate) fn check_length(length: usize) -> Result<()> {
    if (1..=MAX_LENGTH).contains(&length) {
        Ok(())
    } else {
        Err(Error::LengthOutOfRange(length))
    }
}

/// An `L`-bit binary vector `(x_1, …, x_L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitPattern {
    word: u64,
    length: u8,
}

impl BitPattern {
    /// Builds a pattern from a packed word; bit `l - 1` holds `x_l`.
    /// Bits at or above `length` are cleared.
    pub fn from_word(word: u64, length: usize) -> Result<Self> {
        check_length(length)?;
        Ok(BitPattern {
            word: word & low_mask(length),
            length: length as u8,
        })
    }

    /// Builds a pattern from digits `x_1..x_L`.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        check_length(bits.len())?;
        let mut word = 0u64;
        for (position, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => word |= 1 << position,
                _ => {
                    return Err(Error::Range(format!(
                        "digit {b} at position {position} is not 0 or 1"
                    )))
                }
            }
        }
        Ok(BitPattern {
            word,
            length: bits.len() as u8,
        })
    }

    #[inline]
    pub fn word(&self) -> u64 {
        self.word
    }

    /// Number of variables `L`.
    #[inline]
    pub fn length(&self) -> usize {
        usize::from(self.length)
    }

    /// Digit `x_l` for `1 ≤ l ≤ L`.
    pub fn bit(&self, l: usize) -> Result<u8> {
        if l == 0 || l > self.length() {
            return Err(Error::IndexOutOfRange {
                index: l,
                length: self.length(),
            });
        }
        Ok(((self.word >> (l - 1)) & 1) as u8)
    }

    /// `2·x_l − 1`, the signed form of digit `l`.
    pub fn signed_value(&self, l: usize) -> Result<i8> {
        Ok(2 * self.bit(l)? as i8 - 1)
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.length())
            .map(|i| ((self.word >> i) & 1) as u8)
            .collect()
    }

    pub(crate) fn ensure_length(&self, expected: usize) -> Result<()> {
        if self.length() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                found: self.length(),
            })
        }
    }
}

impl fmt::Display for BitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.length() {
            let c = if (self.word >> i) & 1 == 1 { '1' } else { '0' };
            fmt::Write::write_char(f, c)?;
        }
        Ok(())
    }
}

/// `2·x_l − 1` for `1 ≤ l ≤ L`.
pub fn signed_value(x: &BitPattern, l: usize) -> Result<i8> {
    x.signed_value(l)
}

/// Parses a string of `'0'`/`'1'` digits, leftmost digit first. Commas are
/// accepted anywhere and ignored.
pub fn parse_pattern(text: &str, expected_length: Option<usize>) -> Result<BitPattern> {
    let mut word = 0u64;
    let mut length = 0usize;
    for (position, ch) in text.chars().enumerate() {
        match ch {
            ',' => continue,
            '0' | '1' => {
                if length < MAX_LENGTH && ch == '1' {
                    word |= 1 << length;
                }
                length += 1;
            }
            _ => return Err(Error::IllegalCharacter { ch, position }),
        }
    }
    if length == 0 {
        return Err(Error::EmptyInput);
    }
    check_length(length)?;
    if let Some(expected) = expected_length {
        if expected != length {
            return Err(Error::LengthMismatch {
                expected,
                found: length,
            });
        }
    }
    BitPattern::from_word(word, length)
}

/// Inverse of [`parse_pattern`] (without commas).
pub fn render_pattern(x: &BitPattern) -> String {
    x.to_string()
}

/// `N ≥ 1` prototype patterns sharing one length `L`. Duplicates are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    patterns: Vec<BitPattern>,
    length: usize,
}

impl Dataset {
    pub fn new(patterns: Vec<BitPattern>) -> Result<Self> {
        let first = patterns.first().ok_or(Error::EmptyDataset)?;
        let length = first.length();
        for (i, p) in patterns.iter().enumerate() {
            if p.length() != length {
                return Err(Error::RaggedLengths {
                    line: i + 1,
                    expected: length,
                    found: p.length(),
                });
            }
        }
        Ok(Dataset { patterns, length })
    }

    /// Draws `n` patterns uniformly from `{0,1}^length`.
    pub fn uniform<R: Rng + ?Sized>(length: usize, n: usize, rng: &mut R) -> Result<Self> {
        check_length(length)?;
        let mask = low_mask(length);
        let patterns = (0..n)
            .map(|_| BitPattern {
                word: rng.random::<u64>() & mask,
                length: length as u8,
            })
            .collect();
        Dataset::new(patterns)
    }

    /// Every pattern of `{0,1}^length` exactly once, in word order.
    pub fn full_cube(length: usize) -> Result<Self> {
        check_length(length)?;
        if length > 30 {
            return Err(Error::CapExceeded { length, cap: 30 });
        }
        let patterns = (0..1u64 << length)
            .map(|w| BitPattern {
                word: w,
                length: length as u8,
            })
            .collect();
        Dataset::new(patterns)
    }

    pub fn patterns(&self) -> &[BitPattern] {
        &self.patterns
    }

    /// Pattern length `L`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Sample size `N`.
    pub fn n_samples(&self) -> usize {
        self.patterns.len()
    }
}

/// Reads one pattern per nonblank line. Lines starting with `#` are comments.
pub fn load_dataset<R: BufRead>(source: R) -> Result<Dataset> {
    let mut patterns = Vec::new();
    let mut length = None;
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let p = parse_pattern(text, None).map_err(|e| Error::AtLine {
            line: line_no,
            source: Box::new(e),
        })?;
        match length {
            None => length = Some(p.length()),
            Some(expected) if expected != p.length() => {
                return Err(Error::RaggedLengths {
                    line: line_no,
                    expected,
                    found: p.length(),
                })
            }
            Some(_) => {}
        }
        patterns.push(p);
    }
    Dataset::new(patterns)
}
