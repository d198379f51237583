use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

/// A cuspidal label: degree `d` and an opaque index in `[0, N_d(q))`.
/// Index 0 of degree 1 is the unit character `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CuspidalLabel {
    pub degree: usize,
    pub index: usize,
}

impl CuspidalLabel {
    pub const UNIT: CuspidalLabel = CuspidalLabel {
        degree: 1,
        index: 0,
    };

    pub fn is_unit(&self) -> bool {
        *self == Self::UNIT
    }
}

fn mobius(mut m: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `N_d(q) = (1/d)·Σ_{e|d} μ(d/e)(q^e − 1)`: monic irreducible polynomials of
/// degree `d` over the field with `q` elements, not counting `x`.
pub fn cuspidal_count(d: usize, q: u64) -> BigUint {
    assert!(d >= 1 && q >= 2, "cuspidal_count needs d ≥ 1 and q ≥ 2");
    let qq = BigInt::from(q);
    let mut total = BigInt::zero();
    for e in (1..=d).filter(|e| d % e == 0) {
        let mu = mobius(d / e);
        if mu != 0 {
            total += BigInt::from(mu) * (num_traits::pow(qq.clone(), e) - BigInt::one());
        }
    }
    let (quot, rem) = num_integer::Integer::div_rem(&total, &BigInt::from(d));
    debug_assert!(rem.is_zero());
    quot.to_biguint().expect("cuspidal count is non-negative")
}

/// `N_d(q)` as a machine integer for enumeration; `None` if it does not fit.
pub(crate) fn cuspidal_count_usize(d: usize, q: u64) -> Option<usize> {
    usize::try_from(&cuspidal_count(d, q)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monic irreducibles over a prime field by sieving out products.
    fn brute_irreducible(d: usize, p: u64) -> usize {
        fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
            let mut c = vec![0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    c[i + j] = (c[i + j] + x * y) % p;
                }
            }
            c
        }
        fn monic(deg: usize, p: u64) -> Vec<Vec<u64>> {
            let mut out = Vec::new();
            let total = p.pow(deg as u32);
            for code in 0..total {
                let mut c = Vec::with_capacity(deg + 1);
                let mut x = code;
                for _ in 0..deg {
                    c.push(x % p);
                    x /= p;
                }
                c.push(1);
                out.push(c);
            }
            out
        }
        let mut reducible = std::collections::HashSet::new();
        for k in 1..d {
            for a in monic(k, p) {
                for b in monic(d - k, p) {
                    reducible.insert(mul(&a, &b, p));
                }
            }
        }
        let all = monic(d, p);
        let irr = all.iter().filter(|f| !reducible.contains(*f)).count();
        if d == 1 {
            irr - 1
        } else {
            irr
        }
    }

    #[test]
    fn counts() {
        assert_eq!(cuspidal_count(1, 2), BigUint::from(1u32));
        assert_eq!(cuspidal_count(2, 2), BigUint::from(1u32));
        assert_eq!(cuspidal_count(3, 2), BigUint::from(2u32));
        assert_eq!(cuspidal_count(1, 4), BigUint::from(3u32));
        assert_eq!(cuspidal_count(2, 3), BigUint::from(3u32));
        assert_eq!(cuspidal_count(6, 2), BigUint::from(9u32));
    }

    #[test]
    fn against_polynomial_sieve() {
        for (d, p) in [
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 2),
            (5, 2),
            (1, 3),
            (2, 3),
            (3, 3),
            (2, 5),
        ] {
            assert_eq!(
                cuspidal_count(d, p),
                BigUint::from(brute_irreducible(d, p)),
                "d={d} p={p}"
            );
        }
    }

    #[test]
    fn product_identity() {
        // Π_d (1 − x^d)^{N_d} = (1 − qx)/(1 − x) up to x^6.
        for q in [2u64, 3, 4] {
            let m = 7;
            let mut series = vec![BigInt::zero(); m];
            series[0] = BigInt::one();
            for d in 1..m {
                let nd = usize::try_from(&cuspidal_count(d, q)).unwrap();
                for _ in 0..nd {
                    for k in (d..m).rev() {
                        let t = series[k - d].clone();
                        series[k] -= t;
                    }
                }
            }
            let qq = BigInt::from(q);
            for (k, c) in series.iter().enumerate().skip(1) {
                assert_eq!(*c, BigInt::one() - &qq, "q={q} k={k}");
            }
        }
    }
}
