//! Outward-rounded dyadic intervals and lazily refined uniforms.
//!
//! An [`Iv`] at precision `p` is `[lo/2^p, hi/2^p]` with integer endpoints.
//! Every operation rounds `lo` down and `hi` up, so the true value of any
//! expression stays inside its interval.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::RngCore;

use crate::numeric::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iv {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Iv {
    pub fn exact_int(v: i64, prec: u32) -> Iv {
        let x = BigInt::from(v) << prec;
        Iv {
            lo: x.clone(),
            hi: x,
            prec,
        }
    }

    pub fn one(prec: u32) -> Iv {
        Self::exact_int(1, prec)
    }

    pub fn zero(prec: u32) -> Iv {
        Self::exact_int(0, prec)
    }

    pub fn from_q(x: &Q, prec: u32) -> Iv {
        let num = x.numer() << prec;
        Iv {
            lo: floor_div(&num, x.denom()),
            hi: ceil_div(&num, x.denom()),
            prec,
        }
    }

    /// `[lo, hi]` for rationals `lo ≤ hi`.
    pub fn from_bounds(lo: &Q, hi: &Q, prec: u32) -> Iv {
        Iv {
            lo: Self::from_q(lo, prec).lo,
            hi: Self::from_q(hi, prec).hi,
            prec,
        }
    }

    pub fn lo_q(&self) -> Q {
        Q::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi_q(&self) -> Q {
        Q::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn mid_f64(&self) -> f64 {
        crate::numeric::q_to_f64(&((self.lo_q() + self.hi_q()) / Q::from_integer(2.into())))
    }

    pub fn width(&self) -> Q {
        self.hi_q() - self.lo_q()
    }

    pub fn contains(&self, x: &Q) -> bool {
        self.lo_q() <= *x && *x <= self.hi_q()
    }

    fn same_prec(&self, o: &Iv) {
        assert_eq!(self.prec, o.prec, "interval precisions differ");
    }

    pub fn add(&self, o: &Iv) -> Iv {
        self.same_prec(o);
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Iv) -> Iv {
        self.same_prec(o);
        Iv {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
            prec: self.prec,
        }
    }

    /// Raises a negative lower endpoint to zero, for quantities known to be non-negative.
    pub fn clamp_nonneg(mut self) -> Iv {
        if self.lo.sign() == Sign::Minus {
            self.lo = BigInt::zero();
        }
        self
    }

    /// Product of two non-negative intervals.
    pub fn mul(&self, o: &Iv) -> Iv {
        self.same_prec(o);
        debug_assert!(!self.lo.is_negative() && !o.lo.is_negative());
        let scale = BigInt::one() << self.prec;
        Iv {
            lo: (&self.lo * &o.lo) >> self.prec,
            hi: ceil_div(&(&self.hi * &o.hi), &scale),
            prec: self.prec,
        }
    }

    /// Quotient of non-negative intervals with `o.lo > 0`.
    pub fn div(&self, o: &Iv) -> Iv {
        self.same_prec(o);
        assert!(o.lo.is_positive(), "division by an interval touching zero");
        Iv {
            lo: floor_div(&(&self.lo << self.prec), &o.hi),
            hi: ceil_div(&(&self.hi << self.prec), &o.lo),
            prec: self.prec,
        }
    }

    pub fn pow(&self, mut e: u64) -> Iv {
        let mut base = self.clone();
        let mut acc = Iv::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Interval product with an exact rational `c ≥ 0`.
    pub fn mul_q(&self, c: &Q) -> Iv {
        self.mul(&Iv::from_q(c, self.prec))
    }
}

/// Result of comparing a lazy uniform with an interval threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Below,
    Above,
    Undecided,
}

/// A uniform variable on `[0, 1)` whose binary expansion is drawn 64 bits at a time.
pub struct LazyUniform {
    value: BigInt,
    bits: u32,
}

impl LazyUniform {
    pub fn new<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        let mut u = LazyUniform {
            value: BigInt::zero(),
            bits: 0,
        };
        u.extend(rng);
        u.extend(rng);
        u
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn extend<R: RngCore + ?Sized>(&mut self, rng: &mut R) {
        self.value = (&self.value << 64u32) + BigInt::from(rng.next_u64());
        self.bits += 64;
    }

    /// `Below` if `U < t` for every `t` in the interval, `Above` if `U ≥ t` for all.
    fn compare(&self, t: &Iv) -> Cmp {
        let p = t.prec;
        // U ∈ [value/2^B, (value+1)/2^B).
        let u_hi = (&self.value + 1) << p;
        let u_lo = &self.value << p;
        if u_hi <= (&t.lo << self.bits) {
            Cmp::Below
        } else if u_lo >= (&t.hi << self.bits) {
            Cmp::Above
        } else {
            Cmp::Undecided
        }
    }
}

/// A non-decreasing sequence of thresholds evaluable at any precision.
pub trait Thresholds {
    fn at_precision(&self, prec: u32) -> Vec<Iv>;
}

/// Thresholds with a cached evaluation at a working precision.
pub struct CachedThresholds<T: Thresholds> {
    source: T,
    cached: Vec<Iv>,
}

impl<T: Thresholds> CachedThresholds<T> {
    pub fn new(source: T, prec: u32) -> Self {
        let cached = source.at_precision(prec);
        CachedThresholds { source, cached }
    }

    /// Uses `cached` as the working-precision evaluation of `source`.
    pub fn with_cached(source: T, cached: Vec<Iv>) -> Self {
        CachedThresholds { source, cached }
    }

    pub fn len(&self) -> usize {
        self.cached.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cached.is_empty()
    }

    pub fn cached(&self) -> &[Iv] {
        &self.cached
    }

    pub fn source(&self) -> &T {
        &self.source
    }

    /// Smallest `j` with `U < t_j`, or `len()` when `U` exceeds every threshold.
    pub fn locate<R: RngCore + ?Sized>(&self, u: &mut LazyUniform, rng: &mut R) -> usize {
        if let Some(j) = locate_in(&self.cached, u) {
            return j;
        }
        let mut prec = self.cached.first().map_or(128, |t| t.prec);
        let mut current: Option<Vec<Iv>> = None;
        loop {
            if u.bits() + 64 <= prec {
                u.extend(rng);
            } else {
                prec *= 2;
                current = Some(self.source.at_precision(prec));
            }
            let ts = current.as_deref().unwrap_or(&self.cached);
            if let Some(j) = locate_in(ts, u) {
                return j;
            }
        }
    }
}

fn locate_in(ts: &[Iv], u: &LazyUniform) -> Option<usize> {
    // Binary search for the first threshold the uniform lies below.
    let (mut lo, mut hi) = (0usize, ts.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        match u.compare(&ts[mid]) {
            Cmp::Below => hi = mid,
            Cmp::Above => lo = mid + 1,
            Cmp::Undecided => return None,
        }
    }
    Some(lo)
}

/// `Π_{k≥1} (1 − a·x^k)^k` for rationals `0 ≤ a` and `0 < x < 1` with `a·x < 1`.
/// The product is truncated once the omitted factors provably lie in
/// `[1 − T_K, 1]` with `T_K = a·x^{K+1}((K+1) − K·x)/(1 − x)² < 2^{−prec}`.
pub fn weighted_product(a: &Q, x: &Q, prec: u32) -> Iv {
    let one = Q::one();
    let target = Q::new(BigInt::one(), BigInt::one() << prec);
    let mut acc = Iv::one(prec);
    let mut xk = x.clone();
    let mut k: u64 = 1;
    loop {
        let factor = &one - a * &xk;
        acc = acc.mul(&Iv::from_q(&factor, prec).pow(k));
        let kk = Q::from_integer(BigInt::from(k));
        let xk1 = &xk * x;
        let tail = a * &xk1 * ((&kk + &one) - &kk * x) / ((&one - x) * (&one - x));
        if tail < target || a.is_zero() {
            let lower = Iv::from_q(&(&one - &tail), prec);
            return Iv {
                lo: acc.mul(&lower).lo,
                hi: acc.hi,
                prec,
            };
        }
        xk = xk1;
        k += 1;
    }
}

/// `Π_{m≥0} (1 − a·x^m)` for `0 ≤ a < 1`, `0 < x < 1`, with omitted factors in
/// `[1 − a·x^{K+1}/(1 − x), 1]`.
pub fn euler_product(a: &Q, x: &Q, prec: u32) -> Iv {
    let one = Q::one();
    let target = Q::new(BigInt::one(), BigInt::one() << prec);
    let mut acc = Iv::one(prec);
    let mut xm = one.clone();
    loop {
        acc = acc.mul(&Iv::from_q(&(&one - a * &xm), prec));
        xm *= x;
        let tail = a * &xm / (&one - x);
        if tail < target || a.is_zero() {
            let lower = Iv::from_q(&(&one - &tail), prec);
            return Iv {
                lo: acc.mul(&lower).lo,
                hi: acc.hi,
                prec,
            };
        }
    }
}
