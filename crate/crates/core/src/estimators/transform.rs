use crate::basis::ExhaustiveCap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `T(S) = Σ_x f(x)·φ_S(x)`
    Forward,
    /// `f(x) = 2^{−L} Σ_S T(S)·φ_S(x)`
    Inverse,
}

/// Walsh transform against the `(2x_l − 1)` basis, `O(L·2^L)`.
///
/// Entries are indexed by packed word (for `f`) or subset mask (for `T`).
pub fn fast_transform(values: &[f64], direction: Direction) -> Result<Vec<f64>> {
    let mut out = values.to_vec();
    fast_transform_in_place(&mut out, direction, ExhaustiveCap::default())?;
    Ok(out)
}

pub fn fast_transform_in_place(
    values: &mut [f64],
    direction: Direction,
    cap: ExhaustiveCap,
) -> Result<()> {
    let len = values.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let length = len.trailing_zeros() as usize;
    cap.check(length)?;

    // Per variable, with lo = f(x_l = 0) and hi = f(x_l = 1):
    //   forward: (lo, hi) -> (lo + hi, hi − lo)
    //   inverse: (lo, hi) -> (lo − hi, lo + hi), then scale by 2^{-L}
    let mut half = 1;
    while half < len {
        for block in values.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                match direction {
                    Direction::Forward => {
                        *a = u + v;
                        *b = v - u;
                    }
                    Direction::Inverse => {
                        *a = u - v;
                        *b = u + v;
                    }
                }
            }
        }
        half *= 2;
    }
    if direction == Direction::Inverse {
        let scale = 1.0 / len as f64;
        values.iter_mut().for_each(|v| *v *= scale);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::phi;
    use rand::{Rng, SeedableRng};

    /// O(4^L) double loop.
    fn naive(values: &[f64], direction: Direction) -> Vec<f64> {
        let len = values.len() as u64;
        (0..len)
            .map(|out| {
                let acc: f64 = (0..len)
                    .map(|inp| {
                        let (mask, word) = match direction {
                            Direction::Forward => (out, inp),
                            Direction::Inverse => (inp, out),
                        };
                        values[inp as usize] * phi(mask, word) as f64
                    })
                    .sum();
                match direction {
                    Direction::Forward => acc,
                    Direction::Inverse => acc / len as f64,
                }
            })
            .collect()
    }

    #[test]
    fn constant_function() {
        for length in 1..=6 {
            let t = fast_transform(&vec![1.0; 1 << length], Direction::Forward).unwrap();
            assert_eq!(t[0], (1u64 << length) as f64);
            assert!(t[1..].iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn point_mass_at_zero() {
        assert_eq!(
            fast_transform(&[1.0, 0.0], Direction::Forward).unwrap(),
            vec![1.0, -1.0]
        );
        assert_eq!(naive(&[1.0, 0.0], Direction::Forward), vec![1.0, -1.0]);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(matches!(
            fast_transform(&[1.0, 2.0, 3.0], Direction::Forward),
            Err(Error::NotPowerOfTwo(3))
        ));
        assert!(matches!(
            fast_transform(&[], Direction::Forward),
            Err(Error::NotPowerOfTwo(0))
        ));
        let mut v = vec![0.0; 1 << 5];
        assert!(matches!(
            fast_transform_in_place(&mut v, Direction::Forward, ExhaustiveCap(4)),
            Err(Error::CapExceeded { length: 5, cap: 4 })
        ));
    }

    #[test]
    fn matches_naive_and_inverts() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for length in 1..=10 {
            for _ in 0..5 {
                let f: Vec<f64> = (0..1 << length)
                    .map(|_| rng.random_range(-1.0..1.0))
                    .collect();
                let fast = fast_transform(&f, Direction::Forward).unwrap();
                let slow = naive(&f, Direction::Forward);
                for (a, b) in fast.iter().zip(&slow) {
                    assert!((a - b).abs() <= 1e-12);
                }
                let back = fast_transform(&fast, Direction::Inverse).unwrap();
                let back_naive = naive(&fast, Direction::Inverse);
                for ((a, b), c) in back.iter().zip(&f).zip(&back_naive) {
                    assert!((a - b).abs() <= 1e-12);
                    assert!((a - c).abs() <= 1e-12);
                }
            }
        }
    }
}
