use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::{character_table, CycleType};
use crate::error::Result;
use crate::numeric::{q_from_uint, q_int, q_pow, q_ratio, Q};
use crate::partition::Partition;
use crate::walk::space::{state_space, Distribution, StateSpace};

/// One eigenpair of the kernel, indexed by a conjugacy class `C`.
///
/// The eigenfunction is `f_C(ρ) = |C|^{1/2} χ^ρ(C)/d_ρ`; only the rational
/// part `χ^ρ(C)/d_ρ` is stored so that exact arithmetic stays rational.
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub class: CycleType,
    /// `fp(C)/n`.
    pub eigenvalue: Q,
    /// `χ^ρ(C)/d_ρ` for each state ρ in enumeration order.
    pub char_ratio: Vec<Q>,
}

impl SpectrumEntry {
    pub fn eigenfunction(&self) -> Vec<f64> {
        let scale = q_from_uint(&self.class.class_size);
        self.char_ratio
            .iter()
            .map(|r| (crate::numeric::q_to_f64(&scale)).sqrt() * crate::numeric::q_to_f64(r))
            .collect()
    }
}

/// Eigenvalues and eigenfunctions of the walk on Irr(S_n), one per class.
pub fn spectrum_sn(n: usize) -> Result<Vec<SpectrumEntry>> {
    let table = character_table(n)?;
    let space = state_space(n);
    Ok(table
        .classes
        .iter()
        .enumerate()
        .map(|(c, class)| SpectrumEntry {
            class: class.clone(),
            eigenvalue: Q::new(BigInt::from(class.fixed_points), BigInt::from(n)),
            char_ratio: (0..space.len())
                .map(|r| {
                    Q::new(
                        BigInt::from(table.value(r, c)),
                        BigInt::from(space.dim(r).clone()),
                    )
                })
                .collect(),
        })
        .collect())
}

/// Checks `Σ_ρ f_C(ρ) f_{C'}(ρ) π(ρ) = [C = C']` exactly.
pub fn is_orthonormal(spectrum: &[SpectrumEntry], pi: &Distribution<Q>) -> bool {
    let pm = pi.masses();
    for (a, ea) in spectrum.iter().enumerate() {
        for eb in &spectrum[a..] {
            let s: Q = (0..pm.len())
                .map(|r| &ea.char_ratio[r] * &eb.char_ratio[r] * &pm[r])
                .fold(Q::zero(), |x, y| x + y);
            let same = ea.class == eb.class;
            let lhs = if same {
                s * q_from_uint(&ea.class.class_size)
            } else {
                s
            };
            if lhs != if same { Q::one() } else { Q::zero() } {
                return false;
            }
        }
    }
    true
}

/// `K^r(x, y) = Σ_C β_C^r f_C(x) f_C(y) π(y)` with the two `|C|^{1/2}` factors
/// combined into `|C|`.
pub fn spectral_transition(
    spectrum: &[SpectrumEntry],
    space: &StateSpace,
    r: usize,
    x: usize,
    y: usize,
) -> Q {
    let pi_y = q_ratio(&(space.dim(y) * space.dim(y)), space.group_order());
    spectrum
        .iter()
        .map(|e| {
            q_pow(&e.eigenvalue, r)
                * q_from_uint(&e.class.class_size)
                * &e.char_ratio[x]
                * &e.char_ratio[y]
        })
        .fold(Q::zero(), |a, b| a + b)
        * pi_y
}

/// r-step distribution from `start` computed from the spectral decomposition.
pub fn spectral_walk_distribution(
    n: usize,
    r: usize,
    start: &Partition,
) -> Result<Distribution<Q>> {
    let space = state_space(n);
    let x = space.require(start)?;
    let spectrum = spectrum_sn(n)?;
    let masses = (0..space.len())
        .map(|y| spectral_transition(&spectrum, &space, r, x, y))
        .collect();
    Ok(Distribution::from_masses(space, masses))
}

/// `m_ρ(η^r) = (1/n!) Σ_C |C| fp(C)^r χ^ρ(C)` for every ρ, from the character table.
pub fn eta_power_multiplicities_from_characters(n: usize, r: usize) -> Result<Vec<Q>> {
    let table = character_table(n)?;
    let space = state_space(n);
    let order = q_from_uint(space.group_order());
    Ok((0..space.len())
        .map(|rho| {
            table
                .classes
                .iter()
                .enumerate()
                .map(|(c, class)| {
                    q_from_uint(&class.class_size)
                        * q_pow(&q_int(class.fixed_points as i64), r)
                        * q_int(table.value(rho, c))
                })
                .fold(Q::zero(), |a, b| a + b)
                / &order
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;
    use crate::walk::kernel::kernel_downup;
    use crate::walk::space::Scalar;

    #[test]
    fn eigenvalues_small() {
        let spec = spectrum_sn(3).unwrap();
        let ev: Vec<Q> = spec.iter().map(|e| e.eigenvalue.clone()).collect();
        assert_eq!(ev, vec![Q::zero(), q_frac(1, 3), Q::one()]);
        let id = spec.iter().find(|e| e.class.is_identity()).unwrap();
        assert!(id.char_ratio.iter().all(|v| v.is_one()));
        let six = spectrum_sn(6).unwrap();
        assert!(six.iter().all(|e| e.eigenvalue != q_frac(5, 6)));
        assert_eq!(six.iter().filter(|e| e.eigenvalue.is_one()).count(), 1);
    }

    #[test]
    fn eigenfunctions_are_eigenfunctions() {
        for n in 2..=7 {
            let k = kernel_downup::<Q>(n).unwrap();
            for e in spectrum_sn(n).unwrap() {
                let kf = k.apply(&e.char_ratio);
                let expect: Vec<Q> = e.char_ratio.iter().map(|v| v * &e.eigenvalue).collect();
                assert_eq!(kf, expect);
            }
        }
    }

    #[test]
    fn orthonormal_exact_and_float() {
        for n in 1..=8 {
            let pi = Distribution::<Q>::plancherel(state_space(n));
            let spec = spectrum_sn(n).unwrap();
            assert!(is_orthonormal(&spec, &pi));
            let pf = pi.to_float();
            let fs: Vec<Vec<f64>> = spec.iter().map(SpectrumEntry::eigenfunction).collect();
            for a in &fs {
                for b in &fs {
                    let s: f64 = (0..a.len())
                        .map(|r| a[r] * b[r] * pf.masses()[r].to_f64())
                        .sum();
                    assert!(s.abs() < 1e-10 || (s - 1.0).abs() < 1e-10);
                }
            }
        }
    }
}
