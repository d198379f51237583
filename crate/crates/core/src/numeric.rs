//! Exact integer and rational helpers shared across modules.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used throughout exact mode.
pub type Q = BigRational;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_from_uint(v: &BigUint) -> Q {
    Q::from_integer(BigInt::from(v.clone()))
}

pub fn q_ratio(num: &BigUint, den: &BigUint) -> Q {
    Q::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Integer power of a rational, `x^e` with `e ≥ 0`.
pub fn q_pow(x: &Q, e: usize) -> Q {
    num_traits::pow(x.clone(), e)
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn q_render(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q`, `p`, or a finite decimal such as `0.5` into an exact rational.
pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: BigInt = a.trim().parse().ok()?;
        let den: BigInt = b.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Q::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let num: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10u32), frac.len());
        let q = Q::new(num, den);
        return Some(if neg { -q } else { q });
    }
    s.parse::<BigInt>().ok().map(Q::from_integer)
}

/// A value of the form `coefficient · sqrt(radicand)`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coefficient: Q,
    pub radicand: BigUint,
}

impl Surd {
    pub fn rational(x: Q) -> Self {
        Surd {
            coefficient: x,
            radicand: BigUint::one(),
        }
    }

    pub fn square(&self) -> Q {
        &self.coefficient * &self.coefficient * q_from_uint(&self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        q_to_f64(&self.coefficient) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", q_render(&self.coefficient))
        } else {
            write!(f, "{}*sqrt({})", q_render(&self.coefficient), self.radicand)
        }
    }
}

/// Rational lower bound on `sqrt(x)` for `x ≥ 0`, accurate to about `2^-bits` relative.
pub fn q_sqrt_lower(x: &Q, bits: u32) -> Q {
    if !x.is_positive() {
        return Q::zero();
    }
    // sqrt(a/b) = sqrt(a·b)/b; floor the integer square root after scaling.
    let scale = BigInt::one() << (2 * bits as usize);
    let prod = x.numer() * x.denom() * &scale;
    let root = prod.sqrt();
    Q::new(root, x.denom() * (BigInt::one() << bits as usize))
}

/// Exact rational test that an integer-valued rational is a non-negative integer.
pub fn is_nonneg_integer(x: &Q) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}

pub fn gcd_u(a: usize, b: usize) -> usize {
    a.gcd(&b)
}
