use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::numeric::{q_ratio, Q};
use crate::walk::space::{state_space, Distribution, Scalar, StateSpace};

/// Transition matrix storing only nonzero entries, by row and by column.
#[derive(Clone, Debug)]
pub struct SparseKernel<S> {
    space: Arc<StateSpace>,
    rows: Vec<Vec<(usize, S)>>,
    cols: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseKernel<S> {
    fn from_rows(space: Arc<StateSpace>, rows: Vec<Vec<(usize, S)>>) -> Self {
        let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); space.len()];
        for (x, row) in rows.iter().enumerate() {
            for (y, k) in row {
                cols[*y].push((x, k.clone()));
            }
        }
        SparseKernel { space, rows, cols }
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn row(&self, x: usize) -> &[(usize, S)] {
        &self.rows[x]
    }

    pub fn entry(&self, x: usize, y: usize) -> S {
        self.rows[x]
            .iter()
            .find(|(j, _)| *j == y)
            .map(|(_, k)| k.clone())
            .unwrap_or_else(S::zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row_sums(&self) -> Vec<S> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(S::zero(), |a, (_, k)| a + k.clone()))
            .collect()
    }

    /// One step of the chain: `(pK)(y) = Σ_x p(x) K(x,y)`.
    pub fn step(&self, dist: &Distribution<S>) -> Distribution<S> {
        let p = dist.masses();
        let masses = self
            .cols
            .par_iter()
            .map(|col| {
                col.iter()
                    .fold(S::zero(), |acc, (x, k)| acc + p[*x].clone() * k.clone())
            })
            .collect();
        Distribution::from_masses(self.space.clone(), masses)
    }

    /// Operator action on functions: `(Kf)(x) = Σ_y K(x,y) f(y)`.
    pub fn apply(&self, f: &[S]) -> Vec<S> {
        self.rows
            .par_iter()
            .map(|row| {
                row.iter()
                    .fold(S::zero(), |acc, (y, k)| acc + k.clone() * f[*y].clone())
            })
            .collect()
    }

    /// Largest `|π(x)K(x,y) − π(y)K(y,x)|` over stored entries.
    pub fn reversibility_defect(&self, pi: &Distribution<S>) -> S {
        let pm = pi.masses();
        let mut worst = S::zero();
        for (x, row) in self.rows.iter().enumerate() {
            for (y, k) in row {
                let back = self.entry(*y, x);
                let d = (pm[x].clone() * k.clone() - pm[*y].clone() * back).abs_val();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// True when every nonzero transition keeps `λ` or moves a single box.
    pub fn moves_at_most_one_box(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, row)| {
            let a = self.space.partition(x);
            row.iter().all(|(y, _)| {
                let b = self.space.partition(*y);
                let len = a.len().max(b.len());
                let diff: usize = (0..len).map(|i| a.part(i).abs_diff(b.part(i))).sum();
                diff == 0 || diff == 2
            })
        })
    }
}

impl SparseKernel<Q> {
    /// Exact entrywise equality.
    pub fn same_as(&self, other: &SparseKernel<Q>) -> bool {
        self.space.n() == other.space.n()
            && (0..self.space.len()).all(|x| {
                let a: BTreeMap<usize, &Q> = self.rows[x].iter().map(|(y, k)| (*y, k)).collect();
                let b: BTreeMap<usize, &Q> = other.rows[x].iter().map(|(y, k)| (*y, k)).collect();
                a == b
            })
    }
}

/// Down-up kernel: remove a corner box with probability `d_μ/d_λ`, then add one
/// with probability `d_ρ/(n·d_μ)`.
pub fn kernel_downup<S: Scalar>(n: usize) -> Result<SparseKernel<S>> {
    if n == 0 {
        return Err(Error::invalid("kernel requires n ≥ 1"));
    }
    let space = state_space(n);
    let lower = state_space(n - 1);
    let nn = num_bigint::BigUint::from(n);
    let rows = space
        .partitions()
        .par_iter()
        .enumerate()
        .map(|(x, lambda)| {
            let d_lambda = space.dim(x);
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for mu in lambda.removable() {
                let d_mu = lower.dim(lower.index_of(&mu).expect("removable partition of n-1"));
                let down = S::from_ratio(d_mu, d_lambda);
                for rho in mu.addable() {
                    let y = space.index_of(&rho).expect("addable partition of n");
                    let up = S::from_ratio(space.dim(y), &(&nn * d_mu));
                    let e = acc.entry(y).or_insert_with(S::zero);
                    *e = e.clone() + down.clone() * up;
                }
            }
            acc.into_iter().collect()
        })
        .collect();
    Ok(SparseKernel::from_rows(space, rows))
}

/// `m_ρ(λ ⊗ η)` for η the defining representation, from the character table:
/// `(1/n!) Σ_C |C| χ^ρ(C) fp(C) χ^λ(C)`. Indexed `[λ][ρ]`.
pub fn tensor_multiplicities(n: usize) -> Result<Vec<Vec<BigInt>>> {
    let table = character_table(n)?;
    let order = BigInt::from(
        table
            .classes
            .iter()
            .map(|c| c.class_size.clone())
            .sum::<num_bigint::BigUint>(),
    );
    let weights: Vec<BigInt> = table
        .classes
        .iter()
        .map(|c| BigInt::from(c.class_size.clone()) * BigInt::from(c.fixed_points))
        .collect();
    let k = table.partitions.len();
    let mut out = vec![vec![BigInt::zero(); k]; k];
    for (l, row) in out.iter_mut().enumerate() {
        for (r, cell) in row.iter_mut().enumerate() {
            let s: BigInt = (0..table.classes.len())
                .map(|c| &weights[c] * table.values[r][c] * table.values[l][c])
                .sum();
            let (m, rem) = num_integer::Integer::div_rem(&s, &order);
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "non-integral tensor multiplicity for {} ⊗ η → {}",
                    table.partitions[l], table.partitions[r]
                )));
            }
            *cell = m;
        }
    }
    Ok(out)
}

/// Kernel from the tensor-product definition `K(λ,ρ) = d_ρ·m_ρ(λ⊗η)/(d_λ·n)`.
pub fn kernel_from_tensor(n: usize) -> Result<SparseKernel<Q>> {
    let mult = tensor_multiplicities(n)?;
    let space = state_space(n);
    let nn = num_bigint::BigUint::from(n);
    let rows = (0..space.len())
        .map(|x| {
            (0..space.len())
                .filter(|&y| !mult[x][y].is_zero())
                .map(|y| {
                    let m = mult[x][y]
                        .to_biguint()
                        .expect("multiplicity is non-negative");
                    (y, q_ratio(&(space.dim(y) * m), &(space.dim(x) * &nn)))
                })
                .collect()
        })
        .collect();
    Ok(SparseKernel::from_rows(space, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q_frac;
    use num_traits::One;

    #[test]
    fn downup_rows() {
        let k = kernel_downup::<Q>(3).unwrap();
        assert_eq!(k.row(0), &[(0, q_frac(1, 3)), (1, q_frac(2, 3))]);
        let k = kernel_downup::<Q>(2).unwrap();
        assert_eq!(k.row(0), &[(0, q_frac(1, 2)), (1, q_frac(1, 2))]);
        for n in 1..=9 {
            let k = kernel_downup::<Q>(n).unwrap();
            assert!(k.row_sums().iter().all(|s| s.is_one()), "n={n}");
            assert!(k.moves_at_most_one_box());
        }
    }

    #[test]
    fn tensor_matches_downup_small() {
        for n in 2..=4 {
            assert!(kernel_from_tensor(n)
                .unwrap()
                .same_as(&kernel_downup::<Q>(n).unwrap()));
        }
    }

    #[test]
    fn multiplicities_nonnegative() {
        for n in 2..=8 {
            let m = tensor_multiplicities(n).unwrap();
            assert!(m.iter().flatten().all(|v| *v >= BigInt::zero()));
        }
    }

    #[test]
    fn reversible_and_stationary() {
        for n in 2..=12 {
            let k = kernel_downup::<Q>(n).unwrap();
            let pi = Distribution::plancherel(k.space().clone());
            assert!(k.reversibility_defect(&pi).is_zero(), "n={n}");
            assert_eq!(k.step(&pi).masses(), pi.masses());
        }
    }

    #[test]
    fn float_kernel_rows_sum_to_one() {
        let k = kernel_downup::<f64>(25).unwrap();
        for s in k.row_sums() {
            assert!((s - 1.0).abs() < 1e-13);
        }
    }
}
