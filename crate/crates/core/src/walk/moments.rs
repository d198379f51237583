use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::{character_table, CycleType};
use crate::error::{Error, Result};
use crate::numeric::{binomial, q_frac, q_from_uint, q_int, q_pow, Surd, Q};
use crate::walk::distribution::{evolve, Mode};
use crate::walk::kernel::kernel_downup;
use crate::walk::space::state_space;

/// Probability that the walk on S_n driven by the class `C` sits in class `T`
/// after `s` steps, for every `T` in table order:
/// `p_{s,C}(T) = (|T|/n!) Σ_ρ d_ρ² (χ^ρ(T)/d_ρ)(χ^ρ(C)/d_ρ)^s`.
pub fn class_walk_probability(n: usize, class: &CycleType, s: usize) -> Result<Vec<Q>> {
    let table = character_table(n)?;
    let c = table
        .class_index(&class.cycle_lengths)
        .ok_or(Error::SizeMismatch {
            expected: n,
            actual: class.n(),
        })?;
    let space = state_space(n);
    let order = q_from_uint(space.group_order());
    Ok(table
        .classes
        .iter()
        .enumerate()
        .map(|(t, tclass)| {
            let sum = (0..space.len())
                .map(|rho| {
                    let d = q_from_uint(space.dim(rho));
                    let ratio_c = q_int(table.value(rho, c)) / &d;
                    &d * q_int(table.value(rho, t)) * q_pow(&ratio_c, s)
                })
                .fold(Q::zero(), |a, b| a + b);
            q_from_uint(&tclass.class_size) * sum / &order
        })
        .collect())
}

fn check_s(s: usize) -> Result<()> {
    if s == 1 || s == 2 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "moment order s={s} unsupported; use 1 or 2"
        )))
    }
}

fn with_radical(class: &CycleType, s: usize, core: Q) -> Surd {
    if s == 1 {
        Surd {
            coefficient: core,
            radicand: class.class_size.clone(),
        }
    } else {
        Surd::rational(core * q_from_uint(&class.class_size))
    }
}

/// `E_{K^r}[(f_C)^s] = |C|^{s/2} Σ_T p_{s,C}(T) (fp(T)/n)^r`, walk started at `(n)`.
pub fn moment_fc(n: usize, class: &CycleType, s: usize, r: usize) -> Result<Surd> {
    check_s(s)?;
    let probs = class_walk_probability(n, class, s)?;
    let table = character_table(n)?;
    let core = table
        .classes
        .iter()
        .zip(&probs)
        .map(|(t, p)| p * q_pow(&q_frac(t.fixed_points as i64, n as i64), r))
        .fold(Q::zero(), |a, b| a + b);
    Ok(with_radical(class, s, core))
}

/// `Σ_ρ K^r((n), ρ) f_C(ρ)^s` computed from the exact r-step distribution.
pub fn moment_fc_direct(n: usize, class: &CycleType, s: usize, r: usize) -> Result<Surd> {
    check_s(s)?;
    Mode::Exact.check(n)?;
    let table = character_table(n)?;
    let c = table
        .class_index(&class.cycle_lengths)
        .ok_or(Error::SizeMismatch {
            expected: n,
            actual: class.n(),
        })?;
    let dist = evolve(&kernel_downup::<Q>(n)?, 0, r);
    let space = dist.space().clone();
    let core = dist
        .masses()
        .iter()
        .enumerate()
        .map(|(rho, m)| {
            m * q_pow(
                &(q_int(table.value(rho, c)) / q_from_uint(space.dim(rho))),
                s,
            )
        })
        .fold(Q::zero(), |a, b| a + b);
    Ok(with_radical(class, s, core))
}

/// Closed forms for the transposition class:
/// `E[f_C] = sqrt(C(n,2))·(1−2/n)^r` and
/// `E[f_C²] = 1 + C(n−2,2)(1−4/n)^r + (2n−4)(1−3/n)^r`.
pub fn moment_transposition_closed_form(n: usize, s: usize, r: usize) -> Result<Surd> {
    check_s(s)?;
    if n < 2 {
        return Err(Error::invalid("transpositions need n ≥ 2"));
    }
    let nn = n as i64;
    Ok(if s == 1 {
        Surd {
            coefficient: q_pow(&q_frac(nn - 2, nn), r),
            radicand: binomial(n, 2),
        }
    } else {
        Surd::rational(
            Q::one()
                + q_from_uint(&binomial(n - 2, 2)) * q_pow(&q_frac(nn - 4, nn), r)
                + Q::from_integer(BigInt::from(2 * nn - 4)) * q_pow(&q_frac(nn - 3, nn), r),
        )
    })
}

/// Mean and second moment of `f_C` under Plancherel measure.
pub fn plancherel_moments(n: usize, class: &CycleType) -> Result<(Surd, Surd)> {
    let table = character_table(n)?;
    let c = table
        .class_index(&class.cycle_lengths)
        .ok_or(Error::SizeMismatch {
            expected: n,
            actual: class.n(),
        })?;
    let space = state_space(n);
    let order = q_from_uint(space.group_order());
    let mut m1 = Q::zero();
    let mut m2 = Q::zero();
    for rho in 0..space.len() {
        let d = q_from_uint(space.dim(rho));
        let pi = &d * &d / &order;
        let ratio = q_int(table.value(rho, c)) / &d;
        m1 += &pi * &ratio;
        m2 += &pi * &ratio * &ratio;
    }
    Ok((with_radical(class, 1, m1), with_radical(class, 2, m2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_walk_small() {
        let t = CycleType::transpositions(3);
        let table = character_table(3).unwrap();
        let p0 = class_walk_probability(3, &t, 0).unwrap();
        assert_eq!(p0[table.identity_class()], Q::one());
        let p1 = class_walk_probability(3, &t, 1).unwrap();
        assert_eq!(p1, vec![Q::zero(), Q::one(), Q::zero()]);
        let p2 = class_walk_probability(3, &t, 2).unwrap();
        assert_eq!(p2, vec![q_frac(2, 3), Q::zero(), q_frac(1, 3)]);
    }

    #[test]
    fn moment_examples() {
        let t = CycleType::transpositions(3);
        let m = moment_fc(3, &t, 1, 0).unwrap();
        assert_eq!(
            m,
            Surd {
                coefficient: Q::one(),
                radicand: 3u32.into()
            }
        );
        let m = moment_fc(3, &t, 1, 1).unwrap();
        assert_eq!(m.coefficient, q_frac(1, 3));
        assert!((m.to_f64() - 3f64.sqrt() / 3.0).abs() < 1e-15);
        assert!(moment_fc(3, &t, 3, 1).is_err());
    }

    #[test]
    fn plancherel_mean_zero_variance_one() {
        for n in 2..=9 {
            let (m1, m2) = plancherel_moments(n, &CycleType::transpositions(n)).unwrap();
            assert!(m1.coefficient.is_zero());
            assert_eq!(m2.square().sqrt_exact(), Some(Q::one()));
        }
    }

    trait SqrtExact {
        fn sqrt_exact(&self) -> Option<Q>;
    }

    impl SqrtExact for Q {
        fn sqrt_exact(&self) -> Option<Q> {
            let n = self.numer().sqrt();
            let d = self.denom().sqrt();
            (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| Q::new(n, d))
        }
    }
}
