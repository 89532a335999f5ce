//! Closed-form and inclusion–exclusion f-vectors.
//!
//! An `(i + 1)`-subset of the edges is a face exactly when it contains no
//! cycle, so
//!
//! ```text
//! f_i = sum over families T of cycles of (-1)^|T| * C(|E| - u(T), i + 1 - u(T))
//! ```
//!
//! where `u(T)` is the number of edges covered by `T`. Three engines share
//! this sum and differ only in the family of cycles and in how `u(T)` is
//! obtained:
//!
//! * [`f_vector_paper`]: the `m^2` consecutive-word catalog of J(2,m), with
//!   `u(T)` the size of the union.
//! * [`f_vector_pairwise`]: the same catalog with `u(T)` replaced by
//!   `sum of beta - sum of pairwise intersections`, the second-order
//!   truncation of the union size. Beyond pairs this is no longer a union
//!   size and the sum stops counting subsets.
//! * [`f_vector_exact_ie`]: all simple cycles of an arbitrary graph, exact
//!   unions. Agrees with [`crate::complex::f_vector_direct`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};

use crate::complex::FVector;
use crate::cycles::{oracle_cycle_catalog, paper_cycle_catalog, CycleWord, Word};
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `C(a, b)`, taken to be 0 when `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::from(1u32);
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// Signed family counts `c[u] = sum over T with u(T) = u of (-1)^|T|`,
/// the empty family included. Families covering more than `max_cover`
/// edges contribute nothing for face sizes up to `max_cover` and are cut,
/// which is sound because unions only grow.
fn union_histogram(cycles: &[EdgeSet], max_cover: usize) -> BTreeMap<i64, i64> {
    let mut hist = BTreeMap::new();
    fn walk(
        cycles: &[EdgeSet],
        from: usize,
        cover: EdgeSet,
        odd: bool,
        max: usize,
        hist: &mut BTreeMap<i64, i64>,
    ) {
        *hist.entry(cover.len() as i64).or_insert(0) += if odd { -1 } else { 1 };
        for (k, c) in cycles.iter().enumerate().skip(from) {
            let next = cover.union(*c);
            if next.len() <= max {
                walk(cycles, k + 1, next, !odd, max, hist);
            }
        }
    }
    walk(cycles, 0, EdgeSet::empty(), false, max_cover, &mut hist);
    hist
}

/// `f_i = sum_u c[u] C(n - u, i + 1 - u)` for `i` in `0..len`.
fn collapse(hist: &BTreeMap<i64, i64>, ground: usize, len: usize) -> Vec<BigInt> {
    (0..len as i64)
        .map(|i| {
            hist.iter()
                .map(|(&u, &c)| {
                    BigInt::from(c) * BigInt::from(binomial(ground as i64 - u, i + 1 - u))
                })
                .sum()
        })
        .collect()
}

fn to_f_vector(values: Vec<BigInt>) -> Result<FVector> {
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_negative() {
                Err(Error::precondition(format!(
                    "inclusion-exclusion gave f_{i} = {v} < 0"
                )))
            } else {
                Ok(v.magnitude().clone())
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(FVector)
}

/// One nonzero summand of the catalog formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditTerm {
    /// Face dimension `i`.
    pub index: usize,
    /// The family `T`; empty for the leading `C(3m, i + 1)`.
    pub words: Vec<Word>,
    /// `u(T)`.
    pub cover: usize,
    /// `(-1)^|T| C(3m - u, i + 1 - u)`.
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperFVector {
    pub m: usize,
    pub f: FVector,
    pub audit: Vec<AuditTerm>,
}

pub const PAPER_M_RANGE: std::ops::RangeInclusive<usize> = 3..=5;

/// Inclusion–exclusion over the `m^2` consecutive words of J(2,m), with an
/// audit of every nonzero term. The family includes the wrapped `k = m`
/// words and lacks the rim cycle, so the result is not the true f-vector in
/// general; [`crate::complex::f_vector_direct`] is the reference.
pub fn f_vector_paper(m: usize) -> Result<PaperFVector> {
    if !PAPER_M_RANGE.contains(&m) {
        return Err(Error::capacity(format!(
            "catalog formula is evaluated for m in {PAPER_M_RANGE:?}, got {m}"
        )));
    }
    let catalog = paper_cycle_catalog(m)?;
    let words: Vec<Word> = catalog
        .entries
        .iter()
        .map(|e| match e.word {
            CycleWord::Consecutive(w) => w,
            CycleWord::Synthetic(_) => unreachable!("catalog has only consecutive words"),
        })
        .collect();
    let sets = catalog.edge_sets();
    let ground = 3 * m;
    let dims = 2 * m;

    let mut f = vec![BigInt::zero(); dims];
    let mut audit = Vec::new();
    let mut family = Vec::new();
    let mut emit = |family: &[usize], cover: usize| {
        let sign = if family.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        for (i, slot) in f.iter_mut().enumerate() {
            let b = binomial(ground as i64 - cover as i64, i as i64 + 1 - cover as i64);
            if !b.is_zero() {
                let value =
                    BigInt::from_biguint(if sign > 0 { Sign::Plus } else { Sign::Minus }, b);
                *slot += &value;
                audit.push(AuditTerm {
                    index: i,
                    words: family.iter().map(|&k| words[k]).collect(),
                    cover,
                    value,
                });
            }
        }
    };
    fn walk(
        sets: &[EdgeSet],
        from: usize,
        cover: EdgeSet,
        max: usize,
        family: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize], usize),
    ) {
        emit(family, cover.len());
        for k in from..sets.len() {
            let next = cover.union(sets[k]);
            if next.len() <= max {
                family.push(k);
                walk(sets, k + 1, next, max, family, emit);
                family.pop();
            }
        }
    }
    walk(&sets, 0, EdgeSet::empty(), dims, &mut family, &mut emit);
    audit.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| a.words.cmp(&b.words)));
    Ok(PaperFVector {
        m,
        f: to_f_vector(f)?,
        audit,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseFVector {
    pub m: usize,
    /// May be negative: the truncated cover is not a set size.
    pub f: Vec<BigInt>,
    /// Signed family counts by truncated cover value, empty family included.
    pub histogram: BTreeMap<i64, i64>,
}

pub const PAIRWISE_M_RANGE: std::ops::RangeInclusive<usize> = 3..=4;

/// The catalog sum with `u(T) = sum_{s in T} beta_s - sum_{pairs} |C_s ∩ C_r|`
/// over all `2^(m^2)` families. This truncated cover is not monotone, so
/// nothing can be pruned.
pub fn f_vector_pairwise(m: usize) -> Result<PairwiseFVector> {
    if !PAIRWISE_M_RANGE.contains(&m) {
        return Err(Error::capacity(format!(
            "pairwise formula enumerates 2^(m^2) families; supported for m in {PAIRWISE_M_RANGE:?}, got {m}"
        )));
    }
    let catalog = paper_cycle_catalog(m)?;
    let sets = catalog.edge_sets();
    let n = sets.len();
    let beta: Vec<i64> = sets.iter().map(|s| s.len() as i64).collect();
    let meet: Vec<Vec<i64>> = sets
        .iter()
        .map(|a| {
            sets.iter()
                .map(|b| a.intersection(*b).len() as i64)
                .collect()
        })
        .collect();

    let mut histogram = BTreeMap::new();
    // overlap[x] = sum of |C_x ∩ C_y| over chosen y.
    let mut overlap = vec![0i64; n];
    fn walk(
        from: usize,
        cover: i64,
        odd: bool,
        beta: &[i64],
        meet: &[Vec<i64>],
        overlap: &mut [i64],
        hist: &mut BTreeMap<i64, i64>,
    ) {
        *hist.entry(cover).or_insert(0) += if odd { -1 } else { 1 };
        for x in from..beta.len() {
            let next = cover + beta[x] - overlap[x];
            for (y, o) in overlap.iter_mut().enumerate() {
                *o += meet[x][y];
            }
            walk(x + 1, next, !odd, beta, meet, overlap, hist);
            for (y, o) in overlap.iter_mut().enumerate() {
                *o -= meet[x][y];
            }
        }
    }
    walk(0, 0, false, &beta, &meet, &mut overlap, &mut histogram);
    Ok(PairwiseFVector {
        m,
        f: collapse(&histogram, 3 * m, 2 * m),
        histogram,
    })
}

/// Largest number of simple cycles `f_vector_exact_ie` will take.
pub const EXACT_IE_CYCLE_LIMIT: usize = 22;

/// Inclusion–exclusion over every simple cycle of `g` with exact unions.
pub fn f_vector_exact_ie(g: &Graph) -> Result<FVector> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let catalog = oracle_cycle_catalog(g);
    if catalog.len() > EXACT_IE_CYCLE_LIMIT {
        return Err(Error::capacity(format!(
            "exact inclusion-exclusion accepts at most {EXACT_IE_CYCLE_LIMIT} cycles, graph has {}",
            catalog.len()
        )));
    }
    let max_face = g.vertex_count() - 1;
    let hist = union_histogram(&catalog.edge_sets(), max_face);
    to_f_vector(collapse(&hist, g.edge_count(), max_face))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::f_vector_direct;
    use crate::graph::build_jahangir;
    use crate::graph::fixtures::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(9, 6), BigUint::from(84u32));
        assert_eq!(binomial(5, 0), BigUint::from(1u32));
        assert_eq!(binomial(1, -2), BigUint::zero());
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn catalog_j23() {
        let p = f_vector_paper(3).unwrap();
        assert_eq!(p.f, FVector::from_counts([9, 36, 84, 123, 111, 51]));
        // i = 3: C(9,4) minus the three 4-cycles each forcing C(5,0).
        let terms: Vec<_> = p.audit.iter().filter(|t| t.index == 3).collect();
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[0].value, BigInt::from(126));
        assert!(terms[1..]
            .iter()
            .all(|t| t.value == BigInt::from(-1) && t.cover == 4));
        // i = 5: 84 - 3 C(5,2) - 3 C(3,0).
        let sum: BigInt = p
            .audit
            .iter()
            .filter(|t| t.index == 5)
            .map(|t| t.value.clone())
            .sum();
        assert_eq!(sum, BigInt::from(51));
    }

    #[test]
    fn catalog_range() {
        assert!(matches!(f_vector_paper(2), Err(Error::Capacity(_))));
        assert!(matches!(f_vector_paper(6), Err(Error::Capacity(_))));
    }

    #[test]
    fn catalog_overcounts_only_the_top_dimension() {
        // The only cycle missed by the catalog is the rim, of size 2m, and the
        // wrapped words are supersets of it. So only f_{2m-1} is off, by one.
        for m in 3..=5 {
            let p = f_vector_paper(m).unwrap();
            let d = f_vector_direct(&build_jahangir(m).unwrap()).unwrap();
            let last = 2 * m - 1;
            assert_eq!(p.f.entries()[..last], d.entries()[..last]);
            assert_eq!(
                &p.f.entries()[last] - &d.entries()[last],
                BigUint::from(1u32)
            );
        }
    }

    #[test]
    fn pairwise_truncation_diverges() {
        let p = f_vector_pairwise(3).unwrap();
        assert_eq!(p.histogram.values().sum::<i64>(), 0);
        assert_eq!(
            p.f,
            big(&[-8318371281, -602708079, -28721434, -635772, 0, 0])
        );
        assert!(matches!(f_vector_pairwise(5), Err(Error::Capacity(_))));
    }

    #[test]
    fn exact_ie_matches_direct() {
        assert_eq!(
            f_vector_exact_ie(&triangle()).unwrap(),
            FVector::from_counts([3, 3])
        );
        for m in 3..=5 {
            let g = build_jahangir(m).unwrap();
            assert_eq!(f_vector_exact_ie(&g).unwrap(), f_vector_direct(&g).unwrap());
        }
        assert_eq!(
            f_vector_exact_ie(&path(4)).unwrap(),
            f_vector_direct(&path(4)).unwrap()
        );
        assert!(matches!(
            f_vector_exact_ie(&build_jahangir(6).unwrap()),
            Err(Error::Capacity(_))
        ));
    }
}
