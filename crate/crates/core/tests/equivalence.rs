//! Cross-path properties: expansion, Dirac counting and the transform route
//! must describe the same empirical distribution.

use dirac_pmf::{
    estimate_coefficients, estimate_dirac, estimate_expansion, kernel_dirac, kernel_sum,
    BitPattern, Dataset, Method, PmfEstimate,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn dataset_strategy(max_len: usize, max_n: usize) -> impl Strategy<Value = Dataset> {
    (1..=max_len).prop_flat_map(move |length| {
        prop::collection::vec(any::<u64>(), 1..=max_n).prop_map(move |words| {
            Dataset::new(
                words
                    .into_iter()
                    .map(|w| BitPattern::from_word(w, length).unwrap())
                    .collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn expansion_equals_dirac_random(d in dataset_strategy(16, 40), q in any::<u64>(), hit in any::<bool>()) {
        let x = if hit {
            d.patterns()[q as usize % d.n_samples()]
        } else {
            BitPattern::from_word(q, d.length()).unwrap()
        };
        let s = estimate_coefficients(&d).unwrap();
        let e = estimate_expansion(&s, &x).unwrap();
        let p = estimate_dirac(&d, &x).unwrap();
        prop_assert!((e - p).abs() <= 1e-12, "expansion {e} dirac {p}");

        let xj = d.patterns()[0];
        let ks = kernel_sum(&xj, &x).unwrap().value();
        let kd = kernel_dirac(&xj, &x).unwrap().value();
        prop_assert!((ks - kd).abs() <= 1e-12);
        prop_assert_eq!(kernel_sum(&x, &xj).unwrap().value(), ks);
    }
}

#[test]
fn normalization_exhaustive_on_every_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11);
    for length in 1..=12 {
        let n = rng.random_range(1..=64);
        let d = Dataset::uniform(length, n, &mut rng).unwrap();
        for method in Method::ALL {
            let est = PmfEstimate::fit(&d, method).unwrap();
            let mut total = 0.0;
            for w in 0..1u64 << length {
                let p = est
                    .probability(&BitPattern::from_word(w, length).unwrap())
                    .unwrap();
                match method {
                    Method::Dirac => assert!(p >= 0.0),
                    _ => assert!(p >= -1e-12, "{method} L={length} p={p}"),
                }
                assert!(p <= 1.0 + 1e-12);
                total += p;
            }
            assert!(
                (total - 1.0).abs() <= 1e-9,
                "{method} L={length} total={total}"
            );
        }
    }
}

#[test]
fn expansion_reproduces_pmf_at_full_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF011);
    for length in 1..=8 {
        // each pattern of the cube appears c(x) ≥ 1 times, so p(x) = c(x)/N
        let counts: Vec<usize> = (0..1usize << length)
            .map(|_| rng.random_range(1..=4))
            .collect();
        let n: usize = counts.iter().sum();
        let patterns = counts
            .iter()
            .enumerate()
            .flat_map(|(w, &c)| {
                std::iter::repeat_n(BitPattern::from_word(w as u64, length).unwrap(), c)
            })
            .collect();
        let d = Dataset::new(patterns).unwrap();
        let s = estimate_coefficients(&d).unwrap();
        for (w, &c) in counts.iter().enumerate() {
            let x = BitPattern::from_word(w as u64, length).unwrap();
            let target = c as f64 / n as f64;
            assert!((estimate_expansion(&s, &x).unwrap() - target).abs() <= 1e-12);
        }
    }
}

#[test]
fn estimates_are_bitwise_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let d = Dataset::uniform(10, 300, &mut rng).unwrap();
    let a = estimate_coefficients(&d).unwrap();
    let b = estimate_coefficients(&d).unwrap();
    assert_eq!(a, b);
    for method in Method::ALL {
        let e1 = PmfEstimate::fit(&d, method).unwrap();
        let e2 = PmfEstimate::fit(&d, method).unwrap();
        for w in 0..1024 {
            let x = BitPattern::from_word(w, 10).unwrap();
            assert_eq!(
                e1.probability(&x).unwrap().to_bits(),
                e2.probability(&x).unwrap().to_bits()
            );
        }
    }
}
