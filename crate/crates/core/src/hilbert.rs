//! Hilbert series of the face ring from an f-vector.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complex::FVector;
use crate::error::{Error, Result};
use crate::formula::binomial;

/// `numerator(t) / (1 - t)^denominator_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients in ascending powers of `t`.
    pub numerator: Vec<BigInt>,
    pub denominator_power: usize,
}

/// Coefficients of `(1 - t)^k`.
fn one_minus_t_pow(k: usize) -> Vec<BigInt> {
    (0..=k)
        .map(|j| {
            let c = BigInt::from(binomial(k as i64, j as i64));
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// `H(t) = 1 + sum_i f_i t^(i+1) / (1-t)^(i+1)`, brought over the common
/// denominator `(1-t)^(d+1)`.
pub fn hilbert_series(f: &FVector) -> Result<HilbertSeries> {
    if f.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let d = f.len() - 1;
    let big_d = d + 1;
    let mut numerator = vec![BigInt::zero(); big_d + 1];
    for (k, c) in one_minus_t_pow(big_d).into_iter().enumerate() {
        numerator[k] += c;
    }
    for (i, fi) in f.entries().iter().enumerate() {
        let fi = BigInt::from(fi.clone());
        for (k, c) in one_minus_t_pow(d - i).into_iter().enumerate() {
            numerator[i + 1 + k] += &fi * c;
        }
    }
    while numerator.len() > 1 && numerator.last().is_some_and(Zero::is_zero) {
        numerator.pop();
    }
    Ok(HilbertSeries {
        numerator,
        denominator_power: big_d,
    })
}

impl HilbertSeries {
    pub fn evaluate_numerator(&self, t: &BigInt) -> BigInt {
        self.numerator
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn numerator_strings(&self) -> Vec<String> {
        self.numerator.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => c.to_string(),
                _ => {
                    let coeff = if c.is_one() {
                        String::new()
                    } else if *c == -BigInt::one() {
                        "-".to_string()
                    } else {
                        c.to_string()
                    };
                    let power = if k == 1 {
                        "t".to_string()
                    } else {
                        format!("t^{k}")
                    };
                    format!("{coeff}{power}")
                }
            };
            terms.push(body);
        }
        let num = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        write!(f, "({num}) / (1 - t)^{}", self.denominator_power)
    }
}

/// Coefficient of `t^j` in the power series of `h`.
pub fn hilbert_function(h: &HilbertSeries, j: i64) -> Result<BigInt> {
    if j < 0 {
        return Err(Error::invalid(format!(
            "hilbert function index must be >= 0, got {j}"
        )));
    }
    // 1 / (1-t)^D = sum_n C(n + D - 1, D - 1) t^n
    let big_d = h.denominator_power as i64;
    Ok(h.numerator
        .iter()
        .enumerate()
        .filter(|&(k, _)| k as i64 <= j)
        .map(|(k, c)| {
            let n = j - k as i64;
            let tail = if big_d == 0 {
                BigInt::from((n == 0) as u8)
            } else {
                BigInt::from(binomial(n + big_d - 1, big_d - 1))
            };
            c * tail
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_series() {
        let h = hilbert_series(&FVector::from_counts([3, 3])).unwrap();
        assert_eq!(h.numerator, ints(&[1, 1, 1]));
        assert_eq!(h.denominator_power, 2);
        assert_eq!(h.to_string(), "(1 + t + t^2) / (1 - t)^2");
        assert_eq!(hilbert_function(&h, 0).unwrap(), BigInt::from(1));
        assert_eq!(hilbert_function(&h, 1).unwrap(), BigInt::from(3));
        assert_eq!(hilbert_function(&h, 2).unwrap(), BigInt::from(6));
        assert!(matches!(
            hilbert_function(&h, -1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn j23_series() {
        let f = FVector::from_counts([9, 36, 84, 123, 111, 50]);
        let h = hilbert_series(&f).unwrap();
        assert_eq!(h.denominator_power, 6);
        assert_eq!(h.evaluate_numerator(&BigInt::from(1)), BigInt::from(50));
        assert_eq!(h.numerator, ints(&[1, 3, 6, 10, 12, 12, 6]));
    }

    #[test]
    fn empty_input() {
        assert_eq!(hilbert_series(&FVector(vec![])), Err(Error::EmptyComplex));
    }

    #[test]
    fn negative_coefficients_display() {
        let h = HilbertSeries {
            numerator: ints(&[1, -1, 0, -2]),
            denominator_power: 1,
        };
        assert_eq!(h.to_string(), "(1 - t - 2t^3) / (1 - t)^1");
    }

    proptest! {
        #[test]
        fn coefficient_identity(f in prop::collection::vec(0u64..1000, 1..8)) {
            let fv = FVector::from_counts(f.clone());
            let h = hilbert_series(&fv).unwrap();
            prop_assert_eq!(h.evaluate_numerator(&BigInt::zero()), BigInt::one());
            prop_assert_eq!(h.evaluate_numerator(&BigInt::one()), BigInt::from(*f.last().unwrap()));
            let d = f.len() as i64;
            for j in 1..=2 * d {
                let direct: BigInt = f
                    .iter()
                    .enumerate()
                    .map(|(i, &fi)| BigInt::from(fi) * BigInt::from(binomial(j - 1, i as i64)))
                    .sum();
                prop_assert_eq!(hilbert_function(&h, j).unwrap(), direct);
            }
        }
    }
}
