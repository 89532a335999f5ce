use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::Graph;

/// Number of spanning trees, as the determinant of the Laplacian with the
/// row and column of vertex 0 deleted. Disconnected graphs give 0.
pub fn matrix_tree_count(g: &Graph) -> BigUint {
    let n = g.vertex_count();
    if n == 0 {
        return BigUint::zero();
    }
    let k = n - 1;
    let mut lap = vec![vec![BigInt::zero(); k]; k];
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if a > 0 {
                lap[a - 1][a - 1] += 1;
                if b > 0 {
                    lap[a - 1][b - 1] -= 1;
                }
            }
        }
    }
    let det = bareiss_determinant(lap);
    debug_assert!(!det.is_negative());
    det.magnitude().clone()
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// is exact, so no rationals appear.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for p in 0..n {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&r| !a[r][p].is_zero()) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[p][p].clone();
    }
    sign * &a[n - 1][n - 1]
}
