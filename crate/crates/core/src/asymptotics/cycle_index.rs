//! The representation-theoretic cycle index of GL(n, q) summed over `n`, and
//! its factorization over cuspidal labels.
//!
//! Series are in `u` with an optional marker `t` recording `|φ(e)|`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::asymptotics::suq::suq_weight;
use crate::error::{Error, Result};
use crate::gl::cuspidal::cuspidal_count;
use crate::gl::irreps::{plancherel_gl, GL_ENUM_MAX_N, GL_ENUM_MAX_Q};
use crate::numeric::{q_int, q_render, Q};
use crate::partition::partitions_up_to;
use crate::series::q_pochhammer;

/// How the variables `x_{c,λ}` are specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Marker {
    /// Every `x_{c,λ} = 1`.
    None,
    /// `x_{e,λ} = t^{|λ|}` and every other variable is 1.
    Unipotent,
}

/// Series in `u` and `t`, truncated at `u`-order `M`; `coeffs[n][j]` multiplies `u^n t^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSeries {
    coeffs: Vec<Vec<Q>>,
}

impl MarkedSeries {
    pub fn zero(order: usize) -> Self {
        MarkedSeries {
            coeffs: vec![vec![Q::zero(); order + 1]; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0][0] = Q::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize, j: usize) -> &Q {
        &self.coeffs[n][j]
    }

    /// Adds `c·u^n t^j`; terms beyond the order are dropped.
    pub fn add_term(&mut self, n: usize, j: usize, c: &Q) {
        if n <= self.order() && j <= self.order() {
            self.coeffs[n][j] += c;
        }
    }

    pub fn mul(&self, other: &MarkedSeries) -> MarkedSeries {
        let m = self.order();
        let mut out = Self::zero(m);
        for n1 in 0..=m {
            for (j1, a) in self.coeffs[n1]
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
            {
                for n2 in 0..=m - n1 {
                    for (j2, b) in other.coeffs[n2].iter().enumerate().take(m + 1 - j1) {
                        if !b.is_zero() {
                            out.coeffs[n1 + n2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: &BigInt) -> MarkedSeries {
        let two = BigInt::from(2);
        let mut e = e.clone();
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = acc.mul(&base);
            }
            e /= &two;
            if !e.is_zero() {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Coefficient of `u^n` with `t` set to 1.
    pub fn u_coeff(&self, n: usize) -> Q {
        self.coeffs[n].iter().fold(Q::zero(), |a, b| a + b)
    }
}

impl fmt::Display for MarkedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (n, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let mut t = q_render(c);
                if n > 0 {
                    t.push_str(&format!("·u^{n}"));
                }
                if j > 0 {
                    t.push_str(&format!("·t^{j}"));
                }
                terms.push(t);
            }
        }
        f.write_str(&terms.join(" + "))
    }
}

/// `1 + Σ_{n=1}^{M} (Σ_φ π(φ)·x(φ))·u^n/(1/q)_n` from enumerated Plancherel data.
pub fn cycle_index_lhs(q: u64, order: usize, marker: Marker) -> Result<MarkedSeries> {
    if order > GL_ENUM_MAX_N {
        return Err(Error::capacity(
            "gl-asymptotics",
            "cycle index order",
            order,
            GL_ENUM_MAX_N,
        ));
    }
    if q > GL_ENUM_MAX_Q {
        return Err(Error::capacity(
            "gl-asymptotics",
            "q",
            q as usize,
            GL_ENUM_MAX_Q as usize,
        ));
    }
    let qq = q_int(q as i64);
    let mut s = MarkedSeries::one(order);
    for n in 1..=order {
        let scale = q_pochhammer(&qq, n).recip();
        for e in plancherel_gl(n, q)? {
            let j = match marker {
                Marker::None => 0,
                Marker::Unipotent => e.family.unipotent_part().size(),
            };
            s.add_term(n, j, &(&e.mass * &scale));
        }
    }
    Ok(s)
}

/// `Π_{d≤M} Π_{c of degree d} [1 + Σ_{λ≠∅} x_{c,λ}·u^{d|λ|}/(q^{dΣλ_i²}Π_b(1 − q^{−d·h(b)})²)]`
/// truncated at `u`-order `M`, with `N_d(q)` copies of each degree-`d` factor.
pub fn cycle_index_rhs(q: u64, order: usize, marker: Marker) -> Result<MarkedSeries> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let parts = partitions_up_to(order);
    let mut acc = MarkedSeries::one(order);
    for d in 1..=order {
        let qd = Q::from_integer(num_traits::pow(BigInt::from(q), d));
        let factor = |marked: bool| {
            let mut f = MarkedSeries::one(order);
            for lam in parts
                .iter()
                .filter(|l| !l.is_empty() && d * l.size() <= order)
            {
                let w = suq_weight(&Q::one(), &qd, lam);
                f.add_term(d * lam.size(), if marked { lam.size() } else { 0 }, &w);
            }
            f
        };
        let count = BigInt::from(cuspidal_count(d, q));
        if d == 1 && marker == Marker::Unipotent {
            acc = acc.mul(&factor(true)).mul(&factor(false).pow(&(count - 1)));
        } else {
            acc = acc.mul(&factor(false).pow(&count));
        }
    }
    Ok(acc)
}

/// Coefficientwise comparison of both sides through order `M`.
#[derive(Clone, Debug, Serialize)]
pub struct CycleIndexCheck {
    pub q: u64,
    pub order: usize,
    pub marker: Marker,
    pub equal: bool,
    /// `(n, j, lhs, rhs)` for every coefficient, rendered exactly.
    pub coefficients: Vec<(usize, usize, String, String)>,
}

pub fn cycle_index_check(q: u64, order: usize, marker: Marker) -> Result<CycleIndexCheck> {
    let lhs = cycle_index_lhs(q, order, marker)?;
    let rhs = cycle_index_rhs(q, order, marker)?;
    let mut coefficients = Vec::new();
    for n in 0..=order {
        for j in 0..=n {
            let (a, b) = (lhs.coeff(n, j), rhs.coeff(n, j));
            if !a.is_zero() || !b.is_zero() {
                coefficients.push((n, j, q_render(a), q_render(b)));
            }
        }
    }
    Ok(CycleIndexCheck {
        q,
        order,
        marker,
        equal: lhs == rhs,
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;
    use crate::series::euler_lhs;

    #[test]
    fn examples() {
        let l = cycle_index_lhs(2, 2, Marker::Unipotent).unwrap();
        let r = cycle_index_rhs(2, 2, Marker::Unipotent).unwrap();
        assert_eq!(*l.coeff(1, 1), q_int(2));
        assert_eq!(*r.coeff(1, 1), q_int(2));
        assert_eq!(*l.coeff(2, 0), q_frac(4, 9));
        assert_eq!(*r.coeff(2, 0), q_frac(4, 9));
    }

    #[test]
    fn unmarked_is_euler_series() {
        for q in [2u64, 3] {
            let l = cycle_index_lhs(q, 3, Marker::None).unwrap();
            let e = euler_lhs(&q_int(q as i64), 3);
            for n in 0..=3 {
                assert_eq!(l.u_coeff(n), *e.coeff(n));
            }
        }
    }

    #[test]
    fn cycle_index_matches_product_form() {
        for (q, m) in [(2u64, 4usize), (3, 3)] {
            for marker in [Marker::None, Marker::Unipotent] {
                let c = cycle_index_check(q, m, marker).unwrap();
                assert!(c.equal, "q={q} M={m} {marker:?}");
            }
        }
    }

    #[test]
    fn power_matches_repeated_product() {
        let mut s = MarkedSeries::one(3);
        s.add_term(1, 1, &q_frac(1, 2));
        s.add_term(2, 0, &q_int(3));
        let mut by_hand = MarkedSeries::one(3);
        for _ in 0..5 {
            by_hand = by_hand.mul(&s);
        }
        assert_eq!(s.pow(&BigInt::from(5)), by_hand);
    }
}
