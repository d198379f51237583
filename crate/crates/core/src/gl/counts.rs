use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::gl::irreps::gl_order;
use crate::numeric::{binomial, is_nonneg_integer, q_from_uint, Q};

/// Number of `g ∈ GL(n,q)` whose fixed space has dimension `i`, for `i = 0..=n`:
/// `(|GL(n)|/|GL(i)|)·Σ_{j=0}^{n−i} (−1)^j q^{C(j,2)} / (q^{ij}·|GL(j)|)`.
pub fn fixed_space_counts(n: usize, q: u64) -> Result<BTreeMap<usize, BigUint>> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let qq = BigUint::from(q);
    let orders: Vec<Q> = (0..=n).map(|k| q_from_uint(&gl_order(k, q))).collect();
    let mut out = BTreeMap::new();
    for i in 0..=n {
        let mut sum = Q::zero();
        for j in 0..=n - i {
            let c2 = usize::try_from(&binomial(j, 2)).expect("small binomial");
            let num = BigInt::from(Pow::pow(&qq, c2 as u32));
            let den = q_from_uint(&Pow::pow(&qq, (i * j) as u32)) * &orders[j];
            let term = Q::from_integer(if j % 2 == 0 { num } else { -num }) / den;
            sum += term;
        }
        let count = &orders[n] / &orders[i] * sum;
        if !is_nonneg_integer(&count) {
            return Err(Error::Internal(format!(
                "fixed-space count for i={i} not integral"
            )));
        }
        out.insert(i, count.to_integer().to_biguint().expect("non-negative"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dimension of the fixed space of every invertible matrix over F_p.
    pub(crate) fn brute_fixed_counts(n: usize, p: u64) -> BTreeMap<usize, u64> {
        fn rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
            let n = m.len();
            let cols = m[0].len();
            let mut r = 0;
            for c in 0..cols {
                let Some(piv) = (r..n).find(|&i| m[i][c] != 0) else {
                    continue;
                };
                m.swap(r, piv);
                let inv = (1..p).find(|x| m[r][c] * x % p == 1).unwrap();
                for v in m[r].iter_mut() {
                    *v = *v * inv % p;
                }
                for i in 0..n {
                    if i != r && m[i][c] != 0 {
                        let f = m[i][c];
                        for k in 0..cols {
                            m[i][k] = (m[i][k] + p * p - f * m[r][k] % p) % p;
                        }
                    }
                }
                r += 1;
            }
            r
        }
        let cells = n * n;
        let mut out = BTreeMap::new();
        for code in 0..p.pow(cells as u32) {
            let mut x = code;
            let m: Vec<Vec<u64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = x % p;
                            x /= p;
                            v
                        })
                        .collect()
                })
                .collect();
            if rank(m.clone(), p) < n {
                continue;
            }
            let mut shifted = m;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = (row[i] + p - 1) % p;
            }
            *out.entry(n - rank(shifted, p)).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn small_counts() {
        let c = fixed_space_counts(2, 2).unwrap();
        let want: BTreeMap<usize, BigUint> = [(0, 2u32), (1, 3), (2, 1)]
            .into_iter()
            .map(|(k, v)| (k, v.into()))
            .collect();
        assert_eq!(c, want);
        let total: BigUint = fixed_space_counts(2, 3).unwrap().values().sum();
        assert_eq!(total, BigUint::from(48u32));
    }

    #[test]
    fn matches_matrix_enumeration() {
        for (n, p) in [(2, 2), (3, 2), (2, 3)] {
            let brute = brute_fixed_counts(n, p);
            let formula = fixed_space_counts(n, p).unwrap();
            for i in 0..=n {
                let b = brute.get(&i).copied().unwrap_or(0);
                assert_eq!(formula[&i], BigUint::from(b), "n={n} p={p} i={i}");
            }
        }
    }

    #[test]
    fn sums_and_bounds() {
        for q in 2..=5u64 {
            for n in 1..=7 {
                let c = fixed_space_counts(n, q).unwrap();
                assert_eq!(c.values().sum::<BigUint>(), gl_order(n, q));
                assert_eq!(c[&n], BigUint::from(1u32));
                for (i, v) in &c {
                    assert!(*v <= Pow::pow(&BigUint::from(q), (n * n - i * i) as u32));
                }
            }
        }
    }
}
