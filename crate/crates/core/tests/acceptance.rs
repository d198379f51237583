//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.
//!
//! Run with `cargo test -p irrwalk-core --test acceptance`.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use irrwalk::asymptotics::{acceptance_probability, cycle_index_check, GlSampler, Marker};
use irrwalk::characters::{enumerate_classes, CycleType};
use irrwalk::gl::{
    dimension_gl, enumerate_gl_irreps, fixed_space_counts, gl_l2_sum, gl_order, gl_upper_bound,
    plancherel_gl, unipotent_marginal, unipotent_mass_bound, unipotent_tail_bound,
};
use irrwalk::hsp::{
    hsp_bounds, induced_character_check, parse_generators, subgroup_catalogue, subgroup_closure,
};
use irrwalk::numeric::{binomial, q_to_f64, Q};
use irrwalk::rng::derive_seed;
use irrwalk::series::euler_check;
use irrwalk::walk::distribution::{evolve, tv_curve, walk_distribution, Mode};
use irrwalk::walk::kernel::{kernel_downup, kernel_from_tensor};
use irrwalk::walk::moments::{moment_fc, moment_fc_direct, moment_transposition_closed_form};
use irrwalk::walk::sample::{histogram, rsk_batch};
use irrwalk::walk::spectrum::{spectral_transition, spectrum_sn};
use irrwalk::walk::{sn_cutoff_steps, sn_l2_sum, sn_upper_bound, state_space, Distribution};
use irrwalk::Partition;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: irrwalk::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Pearson statistic against expected probabilities, pooling cells with
/// expected count below 5. Returns `(statistic, critical value at 0.999, df)`.
fn chi_square(observed: &[u64], probs: &[f64]) -> Result<(f64, f64, usize), String> {
    let total: u64 = observed.iter().sum();
    let n = total as f64;
    let mut cells: Vec<(f64, f64)> = Vec::new();
    let (mut pooled_o, mut pooled_e) = (0.0, 0.0);
    for (&o, &p) in observed.iter().zip(probs) {
        if p == 0.0 {
            ensure(o == 0, || {
                format!("{o} samples in a cell of probability zero")
            })?;
            continue;
        }
        let e = p * n;
        if e < 5.0 {
            pooled_o += o as f64;
            pooled_e += e;
        } else {
            cells.push((o as f64, e));
        }
    }
    if pooled_e > 0.0 {
        cells.push((pooled_o, pooled_e));
    }
    ensure(cells.len() >= 2, || {
        "fewer than two chi-square cells".into()
    })?;
    let stat: f64 = cells.iter().map(|(o, e)| (o - e) * (o - e) / e).sum();
    let df = cells.len() - 1;
    let crit = ChiSquared::new(df as f64)
        .map_err(|e| e.to_string())?
        .inverse_cdf(0.999);
    Ok((stat, crit, df))
}

/// Kernel from the down-up description equals the kernel from tensor multiplicities.
fn c01_kernel_equivalence() -> Check {
    for n in 2..=8 {
        let a = lib(kernel_downup::<Q>(n))?;
        let b = lib(kernel_from_tensor(n))?;
        ensure(a.same_as(&b), || format!("kernels differ at n={n}"))?;
    }
    Ok("n=2..8 identical".into())
}

/// Kernel powers equal the spectral sum for every start state.
fn c02_spectral_reconstruction() -> Check {
    let mut checked = 0usize;
    for n in 2..=8 {
        let kernel = lib(kernel_downup::<Q>(n))?;
        let spectrum = lib(spectrum_sn(n))?;
        let space = state_space(n);
        for x in 0..space.len() {
            let mut dist = Distribution::point_mass(space.clone(), x);
            for r in 1..=10 {
                dist = kernel.step(&dist);
                for (y, m) in dist.masses().iter().enumerate() {
                    ensure(
                        *m == spectral_transition(&spectrum, &space, r, x, y),
                        || {
                            format!(
                                "n={n} r={r} x={} y={}",
                                space.partition(x),
                                space.partition(y)
                            )
                        },
                    )?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} entries equal"))
}

/// TV at the cutoff time for n=30 is below e^{−2}/2 and the L² bound; exact TV
/// never exceeds the L² bound for n=8..12, r≤40.
fn c03_cutoff_upper_bound() -> Check {
    let n = 30;
    let r = sn_cutoff_steps(n, 1.0);
    ensure(r == 82, || format!("cutoff steps {r}"))?;
    let tv = lib(walk_distribution(n, r, &Partition::row(n), Mode::Float))?.tv_to_plancherel_f64();
    let ceiling = (-2.0f64).exp() / 2.0;
    let bound = sn_upper_bound(n, r);
    ensure(tv <= ceiling && tv <= bound, || {
        format!("tv={tv} ceiling={ceiling} bound={bound}")
    })?;
    for m in 8..=12 {
        let kernel = lib(kernel_downup::<Q>(m))?;
        let space = state_space(m);
        let pi = Distribution::<Q>::plancherel(space.clone());
        let mut dist = Distribution::point_mass(space, 0);
        for s in 1..=40 {
            dist = kernel.step(&dist);
            let t = dist.tv(&pi);
            // tv ≤ ½·sqrt(L) ⇔ 4·tv² ≤ L.
            ensure(
                Q::from_integer(4.into()) * &t * &t <= sn_l2_sum(m, s),
                || format!("n={m} r={s}"),
            )?;
        }
    }
    Ok(format!(
        "n=30 r={r}: tv={tv:.5} ≤ {ceiling:.5}, L² bound {bound:.5}; n=8..12 exact ok"
    ))
}

/// TV drops by at least 0.3 between ½n ln n − n and ½n ln n + n, monotonically.
fn c04_cutoff_shape() -> Check {
    let n = 30usize;
    let nf = n as f64;
    let r_low = (0.5 * nf * nf.ln() - nf).floor() as usize;
    let r_high = (0.5 * nf * nf.ln() + nf).ceil() as usize;
    let curve = lib(tv_curve(n, r_high, Mode::Float))?;
    for w in curve.windows(2) {
        ensure(w[1].tv <= w[0].tv + w[1].float_error, || {
            format!("tv increases at r={}", w[1].r)
        })?;
    }
    let at = |r: usize| curve[r - 1].tv;
    let gap = at(r_low) - at(r_high);
    ensure(gap >= 0.3, || format!("gap {gap}"))?;
    Ok(format!(
        "tv({r_low})={:.4} tv({r_high})={:.4} gap={gap:.4}",
        at(r_low),
        at(r_high)
    ))
}

/// Moments of f_C by class-walk transfer, by direct expectation and in closed form.
fn c05_moments() -> Check {
    let mut compared = 0;
    for n in 5..=8 {
        let classes = enumerate_classes(n);
        let tau = CycleType::transpositions(n);
        let kernel = lib(kernel_downup::<Q>(n))?;
        let spectrum = lib(spectrum_sn(n))?;
        let tau_ratio = &spectrum
            .iter()
            .find(|e| e.class == tau)
            .expect("class present")
            .char_ratio;
        let c2 = Q::from_integer(BigInt::from(binomial(n, 2)));
        for r in 0..=10 {
            let dist = evolve(&kernel, 0, r);
            for class in classes.iter().filter(|c| !c.is_identity()) {
                for s in [1usize, 2] {
                    let a = lib(moment_fc(n, class, s, r))?;
                    let b = lib(moment_fc_direct(n, class, s, r))?;
                    // Same sign and same square.
                    ensure(
                        a.coefficient.is_zero() == b.coefficient.is_zero()
                            && (a.coefficient < Q::zero()) == (b.coefficient < Q::zero())
                            && a.square() == b.square(),
                        || format!("n={n} r={r} C={} s={s}", class.cycle_lengths),
                    )?;
                    compared += 1;
                }
            }
            // Independent closed forms from the written formulas.
            let nn = n as i64;
            let mean_sq = &c2 * Pow::pow(q(nn - 2, nn), 2 * r as u32);
            let second = Q::one()
                + Q::from_integer(BigInt::from(binomial(n - 2, 2)))
                    * Pow::pow(q(nn - 4, nn), r as u32)
                + Q::from_integer(BigInt::from(2 * nn - 4)) * Pow::pow(q(nn - 3, nn), r as u32);
            let m1 = lib(moment_fc(n, &tau, 1, r))?;
            let m2 = lib(moment_fc(n, &tau, 2, r))?;
            let c1 = lib(moment_transposition_closed_form(n, 1, r))?;
            let cc2 = lib(moment_transposition_closed_form(n, 2, r))?;
            ensure(
                m1.square() == mean_sq && c1.square() == mean_sq && m1.coefficient >= Q::zero(),
                || format!("first moment n={n} r={r}"),
            )?;
            ensure(
                m2.square() == &second * &second && cc2.square() == &second * &second,
                || format!("second moment n={n} r={r}"),
            )?;
            // Direct sum over the distribution with f_C² = |C|·ratio², rational.
            let direct2: Q = dist
                .masses()
                .iter()
                .zip(tau_ratio)
                .map(|(m, t)| m * t * t)
                .fold(Q::zero(), |a, b| a + b)
                * &c2;
            ensure(direct2 == second, || {
                format!("direct second moment n={n} r={r}")
            })?;
            compared += 3;
        }
    }
    Ok(format!("{compared} comparisons exact"))
}

/// RSK shapes of top-to-random shuffles follow the walk distribution.
fn c06_rsk_oracle() -> Check {
    let n = 6;
    let count = 100_000;
    let mut parts = Vec::new();
    for (k, r) in [1usize, 3, 6].into_iter().enumerate() {
        let samples = rsk_batch(n, r, count, derive_seed(0xACCE_0006, k as u64));
        let observed = histogram(n, &samples);
        let probs = lib(walk_distribution(n, r, &Partition::row(n), Mode::Exact))?.masses_f64();
        let (stat, crit, df) = chi_square(&observed, &probs)?;
        ensure(stat <= crit, || {
            format!("r={r}: chi2={stat:.2} > {crit:.2} (df {df})")
        })?;
        parts.push(format!("r={r} chi2={stat:.1}/{crit:.1}"));
    }
    Ok(parts.join(", "))
}

/// Σ d_φ² = |GL(n,q)| and the GL(2,2) Plancherel masses.
fn c07_gl_dimensions() -> Check {
    for (n, qq) in [(1usize, 2u64), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let sum: BigUint = lib(enumerate_gl_irreps(n, qq))?
            .iter()
            .map(|f| dimension_gl(f).map(|d| &d * &d))
            .collect::<irrwalk::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?
            .into_iter()
            .sum();
        // Independent order: Π_{i<n} (q^n − q^i).
        let order: BigUint = (0..n)
            .map(|i| Pow::pow(BigUint::from(qq), n as u32) - Pow::pow(BigUint::from(qq), i as u32))
            .product();
        ensure(sum == order && gl_order(n, qq) == order, || {
            format!("n={n} q={qq}: {sum} vs {order}")
        })?;
    }
    let masses: Vec<Q> = lib(plancherel_gl(2, 2))?
        .into_iter()
        .map(|e| e.mass)
        .collect();
    ensure(masses == vec![q(1, 6), q(2, 3), q(1, 6)], || {
        format!("{masses:?}")
    })?;
    Ok("five group orders and GL(2,2) masses exact".into())
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] % p != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = (1..p)
            .find(|x| m[rank][c] * x % p == 1)
            .expect("prime field");
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fixed-space dimension histogram of GL(n,p) by listing every matrix.
fn brute_fixed_counts(n: usize, p: u64) -> BTreeMap<usize, BigUint> {
    let mut out = BTreeMap::new();
    let cells = n * n;
    for code in 0..p.pow(cells as u32) {
        let mut c = code;
        let m: Vec<Vec<u64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = c % p;
                        c /= p;
                        v
                    })
                    .collect()
            })
            .collect();
        if rank_mod_p(m.clone(), p) < n {
            continue;
        }
        let shifted: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (m[i][j] + p - u64::from(i == j)) % p)
                    .collect()
            })
            .collect();
        *out.entry(n - rank_mod_p(shifted, p))
            .or_insert_with(BigUint::zero) += 1u32;
    }
    out
}

/// Fixed-space counts against matrix enumeration and the bound q^{n²−i²}.
fn c08_fixed_space_counts() -> Check {
    for (n, p) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let formula: BTreeMap<usize, BigUint> = lib(fixed_space_counts(n, p))?
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        ensure(formula == brute_fixed_counts(n, p), || {
            format!("GL({n},{p}) differs")
        })?;
    }
    let mut checked = 0;
    for n in 1..=8usize {
        for qq in [2u64, 3, 4] {
            for (i, c) in lib(fixed_space_counts(n, qq))? {
                let bound: BigUint = Pow::pow(BigUint::from(qq), (n * n - i * i) as u32);
                ensure(c <= bound, || format!("n={n} q={qq} i={i}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("3 groups match enumeration; {checked} bounds hold"))
}

/// GL bound at n+c steps is below 1/(2q^c); GL(2,2) at r=3 matches the hand value.
fn c09_gl_upper_bound() -> Check {
    for n in 1..=8usize {
        for qq in [2u64, 3, 4] {
            for c in 1..=5usize {
                let b = lib(gl_upper_bound(n, qq, n + c))?;
                let ceiling = 0.5 / (qq as f64).powi(c as i32);
                ensure(b <= ceiling, || {
                    format!("n={n} q={qq} c={c}: {b} > {ceiling}")
                })?;
            }
        }
    }
    // GL(2,2): 3 involutions fix a line, 2 elements of order 3 fix only 0:
    // 3·2^{-6} + 2·2^{-12} = 97/2048, so bound² = 97/8192.
    let l2 = lib(gl_l2_sum(2, 2, 3))?;
    ensure(l2 == q(97, 2048), || format!("l2 sum {l2}"))?;
    let squared = &l2 / Q::from_integer(4.into());
    ensure(squared == q(97, 8192), || "squared bound".into())?;
    let b = lib(gl_upper_bound(2, 2, 3))?;
    ensure((b - 0.1088).abs() < 1e-3, || format!("bound {b}"))?;
    Ok(format!(
        "120 cases below ceiling; GL(2,2) r=3 bound²=97/8192 ({b:.4})"
    ))
}

/// Unipotent marginal below the per-partition bound and the tail sum.
fn c10_unipotent_bounds() -> Check {
    let mut cases = 0;
    for (n, qq) in [(2usize, 2u64), (3, 2), (2, 3)] {
        let marginal = lib(unipotent_marginal(n, qq))?;
        let total: Q = marginal
            .iter()
            .map(|(_, m)| m.clone())
            .fold(Q::zero(), |a, b| a + b);
        ensure(total.is_one(), || format!("marginal total {total}"))?;
        for (lam, m) in &marginal {
            ensure(*m <= unipotent_mass_bound(lam, qq), || {
                format!("n={n} q={qq} λ={lam}")
            })?;
            cases += 1;
        }
        for c in 1..=n {
            let tail: Q = marginal
                .iter()
                .filter(|(lam, _)| lam.size() >= c)
                .map(|(_, m)| m.clone())
                .fold(Q::zero(), |a, b| a + b);
            let bound = unipotent_tail_bound(qq, c);
            // Independent evaluation of (1−1/q)^{-6}·Σ_{m≥c} 1/(q^m − 1).
            let qf = qq as f64;
            let oracle: f64 = (c..c + 200)
                .map(|m| 1.0 / (qf.powi(m as i32) - 1.0))
                .sum::<f64>()
                / (1.0 - 1.0 / qf).powi(6);
            ensure((bound - oracle).abs() <= 1e-12 * oracle, || {
                format!("tail formula q={qq} c={c}")
            })?;
            ensure(q_to_f64(&tail) <= bound, || {
                format!("tail n={n} q={qq} c={c}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} inequalities hold"))
}

/// Cycle index identity for both marker specializations.
fn c11_cycle_index() -> Check {
    let mut coeffs = 0;
    for (qq, order) in [(2u64, 4usize), (3, 3)] {
        for marker in [Marker::None, Marker::Unipotent] {
            let c = lib(cycle_index_check(qq, order, marker))?;
            ensure(c.equal, || format!("q={qq} M={order} {marker:?}"))?;
            coeffs += c.coefficients.len();
        }
    }
    Ok(format!("{coeffs} coefficients equal"))
}

/// Partial products of Π(1 − u/q^m)^{−1} converge to Σ u^n/(1/q)_n.
fn c12_euler_identity() -> Check {
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(30u32));
    let mut parts = Vec::new();
    for qq in [2u64, 3] {
        let qv = Q::from_integer(BigInt::from(qq));
        let rep = lib(euler_check(&qv, 6, &tol))?;
        ensure(
            rep.finite_identity_exact && rep.bounded_by_lhs && rep.converged,
            || format!("q={qq}: {rep:?}"),
        )?;
        parts.push(format!(
            "q={qq}: {} factors, gap {:.1e}",
            rep.factors, rep.final_gap
        ));
    }
    Ok(parts.join("; "))
}

/// Exact GL Plancherel sampler: family masses, unipotent marginal, acceptance rate.
fn c13_gl_sampler() -> Check {
    let count = 100_000u64;
    let mut parts = Vec::new();
    for (k, (n, qq)) in [(2usize, 2u64), (3, 2)].into_iter().enumerate() {
        let sampler = lib(GlSampler::new(n, qq, None))?;
        let seed = derive_seed(0xACCE_0013, k as u64);
        let draws: Vec<(String, Partition, u64)> = (0..count)
            .into_par_iter()
            .map(|i| {
                let (phi, attempts) = sampler
                    .sample(derive_seed(seed, i))
                    .expect("sampler within cap");
                (phi.descriptor(), phi.unipotent_part(), attempts)
            })
            .collect();
        let mut freq: HashMap<&str, u64> = HashMap::new();
        let mut by_unip: HashMap<&Partition, u64> = HashMap::new();
        let mut attempts = 0u64;
        for (d, u, a) in &draws {
            *freq.entry(d.as_str()).or_default() += 1;
            *by_unip.entry(u).or_default() += 1;
            attempts += a;
        }
        let exact = lib(plancherel_gl(n, qq))?;
        ensure(freq.len() <= exact.len(), || {
            "unknown family sampled".into()
        })?;
        let nf = count as f64;
        let mut worst: f64 = 0.0;
        for e in &exact {
            let p = q_to_f64(&e.mass);
            let sigma = (p * (1.0 - p) / nf).sqrt();
            let got = *freq.get(e.family.descriptor().as_str()).unwrap_or(&0) as f64 / nf;
            let z = (got - p).abs() / sigma;
            worst = worst.max(z);
            ensure(z <= 4.0, || {
                format!("GL({n},{qq}) {}: {got} vs {p}", e.family)
            })?;
        }
        let marginal = lib(unipotent_marginal(n, qq))?;
        let observed: Vec<u64> = marginal
            .iter()
            .map(|(l, _)| *by_unip.get(l).unwrap_or(&0))
            .collect();
        let probs: Vec<f64> = marginal.iter().map(|(_, m)| q_to_f64(m)).collect();
        let (stat, crit, _) = chi_square(&observed, &probs)?;
        ensure(stat <= crit, || {
            format!("GL({n},{qq}) unipotent chi2 {stat} > {crit}")
        })?;
        let p_acc = acceptance_probability(n, qq, sampler.u()).mid_f64();
        let rate = count as f64 / attempts as f64;
        let sigma = (p_acc * (1.0 - p_acc) / attempts as f64).sqrt();
        ensure((rate - p_acc).abs() <= 4.0 * sigma, || {
            format!("GL({n},{qq}) rate {rate} vs {p_acc}")
        })?;
        parts.push(format!(
            "GL({n},{qq}) max z={worst:.2} chi2={stat:.1}/{crit:.1} rate={rate:.4}≈{p_acc:.4}"
        ));
    }
    Ok(parts.join("; "))
}

/// Hidden-subgroup bounds over the catalogue and the S_3 example.
fn c14_hsp() -> Check {
    let catalogue = lib(subgroup_catalogue())?;
    ensure(
        catalogue.iter().any(|e| e.n == 4) && catalogue.iter().any(|e| e.n == 5),
        || "catalogue".into(),
    )?;
    for entry in &catalogue {
        let h = lib(entry.build())?;
        let p = lib(irrwalk::hsp::weak_sampling_distribution(&h))?;
        ensure(p.is_nonnegative() && p.total().is_one(), || {
            format!("{} not a distribution", entry.name)
        })?;
        let b = lib(hsp_bounds(&h))?;
        ensure(b.tv_le_sharp && b.sharp_le_ks, || {
            format!("{}: {b:?}", entry.name)
        })?;
        ensure(lib(induced_character_check(&h))?, || {
            format!("{}: induced character", entry.name)
        })?;
    }
    let h = lib(parse_generators(3, "(1 2)").and_then(|g| subgroup_closure(3, &g)))?;
    let b = lib(hsp_bounds(&h))?;
    let target = 1.0 / (2.0 * 3f64.sqrt());
    ensure(
        b.tv_exact == "1/6"
            && b.sharp_squared == "1/12"
            && (b.sharp - target).abs() < 1e-15
            && (b.ks - target).abs() < 1e-15,
        || format!("S_3 example {b:?}"),
    )?;
    ensure(lib(induced_character_check(&h))?, || "S_3 induced".into())?;
    Ok(format!(
        "{} subgroups; S_3 (1/6, 1/(2√3), 1/(2√3))",
        catalogue.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 14] = [
        ("kernel equivalence", c01_kernel_equivalence),
        ("spectral reconstruction", c02_spectral_reconstruction),
        ("cutoff upper bound", c03_cutoff_upper_bound),
        ("cutoff shape", c04_cutoff_shape),
        ("moment method", c05_moments),
        ("RSK oracle", c06_rsk_oracle),
        ("GL dimensions and Plancherel", c07_gl_dimensions),
        ("fixed-space counts", c08_fixed_space_counts),
        ("GL cutoff bound", c09_gl_upper_bound),
        ("unipotent bounds", c10_unipotent_bounds),
        ("cycle index", c11_cycle_index),
        ("Euler identity", c12_euler_identity),
        ("GL Plancherel sampler", c13_gl_sampler),
        ("hidden-subgroup bounds", c14_hsp),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        total += took;
        match outcome {
            Ok(detail) => println!(
                "PASS {:>2} {name} ({:.1}s): {detail}",
                i + 1,
                took.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name} ({:.1}s): {why}",
                    i + 1,
                    took.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        total.as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
