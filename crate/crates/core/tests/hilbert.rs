use num_bigint::BigInt;
use proptest::prelude::*;
use ssc_core::complex::{f_vector_direct, FVector};
use ssc_core::graph::build_jahangir;
use ssc_core::hilbert::{hilbert_function, hilbert_series, HilbertSeries};

/// Power-series coefficients of `numerator / (1 - t)^D` by dividing by
/// `(1 - t)` one factor at a time (each division is a running sum).
fn long_division(h: &HilbertSeries, terms: usize) -> Vec<BigInt> {
    let mut coeffs: Vec<BigInt> = (0..terms)
        .map(|k| h.numerator.get(k).cloned().unwrap_or_default())
        .collect();
    for _ in 0..h.denominator_power {
        let mut acc = BigInt::default();
        for c in coeffs.iter_mut() {
            acc += &*c;
            *c = acc.clone();
        }
    }
    coeffs
}

fn face_count_series(f: &[u64], terms: usize) -> Vec<BigInt> {
    let binom = |n: i64, k: usize| -> BigInt {
        if n < 0 || k as i64 > n {
            return BigInt::from(0);
        }
        (0..k).fold(BigInt::from(1), |acc, i| {
            acc * (n - i as i64) / (i as i64 + 1)
        })
    };
    (0..terms as i64)
        .map(|j| {
            if j == 0 {
                BigInt::from(1)
            } else {
                f.iter()
                    .enumerate()
                    .map(|(i, &fi)| BigInt::from(fi) * binom(j - 1, i))
                    .sum()
            }
        })
        .collect()
}

#[test]
fn j23_series_by_long_division() {
    let f = f_vector_direct(&build_jahangir(3).unwrap()).unwrap();
    let h = hilbert_series(&f).unwrap();
    let expected = face_count_series(&[9, 36, 84, 123, 111, 50], 13);
    assert_eq!(long_division(&h, 13), expected);
    for (j, e) in expected.iter().enumerate() {
        assert_eq!(&hilbert_function(&h, j as i64).unwrap(), e);
    }
}

proptest! {
    #[test]
    fn series_expansions_agree(f in prop::collection::vec(0u64..10_000, 1..10)) {
        let h = hilbert_series(&FVector::from_counts(f.clone())).unwrap();
        let terms = 2 * (f.len() + 1) + 1;
        let by_division = long_division(&h, terms);
        prop_assert_eq!(&by_division, &face_count_series(&f, terms));
        for (j, c) in by_division.iter().enumerate() {
            prop_assert_eq!(&hilbert_function(&h, j as i64).unwrap(), c);
        }
        prop_assert_eq!(h.denominator_power, f.len());
    }
}
