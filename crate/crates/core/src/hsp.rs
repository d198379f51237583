//! Fourier sampling distributions for hidden subgroups of S_n and their
//! distance from Plancherel measure.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::{character_table, CycleType};
use crate::error::{Error, Result};
use crate::numeric::{q_from_uint, q_int, q_ratio, q_sqrt_lower, q_to_f64, Q};
use crate::partition::Partition;
use crate::walk::space::{state_space, Distribution};

/// Largest subgroup enumerated by closure.
pub const CLOSURE_LIMIT: usize = 1_000_000;
/// Largest `n` for the coset-action check.
pub const COSET_CHECK_MAX_N: usize = 8;

/// A permutation of `0..n`, stored as its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if !seen[s] {
                let mut len = 0;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = self.0[i] as usize;
                    len += 1;
                }
                lens.push(len);
            }
        }
        Partition::from_unsorted(lens)
    }

    /// Product of cycles such as `"(1 2 3)(4 5)"`, points numbered from 1.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Perm> {
        let mut perm = Perm::identity(n);
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let points = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(p) if (1..=n).contains(&p) => Ok(p - 1),
                    _ => Err(Error::Parse(format!("bad point {t:?} for n={n}"))),
                })
                .collect::<Result<Vec<usize>>>()?;
            let uniq: HashSet<&usize> = points.iter().collect();
            if uniq.len() != points.len() {
                return Err(Error::Parse(format!(
                    "repeated point in cycle {:?}",
                    &open[..close]
                )));
            }
            let mut cycle = Perm::identity(n);
            for (k, &p) in points.iter().enumerate() {
                cycle.0[p] = points[(k + 1) % points.len()] as u8;
            }
            // Cycles act right to left.
            perm = perm.compose(&cycle);
            rest = open[close + 1..].trim_start();
        }
        Ok(perm)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            let mut pts = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                pts.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Generators separated by commas outside parentheses, e.g. `"(1 2)(3 4),(1 3)"`.
pub fn parse_generators(n: usize, s: &str) -> Result<Vec<Perm>> {
    if n == 0 || n > u8::MAX as usize {
        return Err(Error::invalid(format!(
            "n={n} out of range for permutations"
        )));
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<char> = s.chars().collect();
    let mut pieces = Vec::new();
    for (i, c) in bytes.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(bytes[start..i].iter().collect::<String>());
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(bytes[start..].iter().collect::<String>());
    for p in pieces.iter().map(|p| p.trim()).filter(|p| !p.is_empty()) {
        out.push(Perm::parse_cycles(n, p)?);
    }
    Ok(out)
}

/// A subgroup of S_n given by generators, with its elements and class counts.
#[derive(Clone, Debug)]
pub struct SubgroupSpec {
    pub n: usize,
    pub generators: Vec<Perm>,
    pub elements: Vec<Perm>,
    /// `|C ∩ H|` for every class of S_n, in class order.
    pub class_intersections: Vec<(CycleType, u64)>,
}

impl SubgroupSpec {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }
}

/// Breadth-first closure of the generators under composition.
pub fn subgroup_closure(n: usize, generators: &[Perm]) -> Result<SubgroupSpec> {
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: g.n(),
        });
    }
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > CLOSURE_LIMIT {
                    return Err(Error::capacity(
                        "hidden-subgroup",
                        "subgroup order",
                        seen.len(),
                        CLOSURE_LIMIT,
                    ));
                }
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    let mut counts: HashMap<Partition, u64> = HashMap::new();
    for e in &elements {
        *counts.entry(e.cycle_type()).or_insert(0) += 1;
    }
    let class_intersections = crate::characters::enumerate_classes(n)
        .into_iter()
        .map(|c| {
            let k = counts.get(&c.cycle_lengths).copied().unwrap_or(0);
            (c, k)
        })
        .collect();
    Ok(SubgroupSpec {
        n,
        generators: generators.to_vec(),
        elements,
        class_intersections,
    })
}

/// `P_H(ρ) = (d_ρ/n!)·Σ_C |C ∩ H|·χ^ρ(C)`.
pub fn weak_sampling_distribution(h: &SubgroupSpec) -> Result<Distribution<Q>> {
    let table = character_table(h.n)?;
    let space = state_space(h.n);
    let order = q_from_uint(space.group_order());
    let masses = (0..space.len())
        .map(|rho| {
            let s: i64 = h
                .class_intersections
                .iter()
                .enumerate()
                .map(|(c, (_, k))| *k as i64 * table.value(rho, c))
                .sum();
            q_from_uint(space.dim(rho)) * q_int(s) / &order
        })
        .collect();
    Ok(Distribution::from_masses(space, masses))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub class: String,
    pub size: String,
    pub intersection: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct HspBounds {
    /// `‖P_H − Plancherel‖_TV`, rendered exactly.
    pub tv_exact: String,
    pub tv: f64,
    /// `¼·Σ_{C≠1} |C∩H|²/|C|`, rendered exactly.
    pub sharp_squared: String,
    pub sharp: f64,
    pub ks: f64,
    /// `tv ≤ sharp`, decided exactly by squaring.
    pub tv_le_sharp: bool,
    /// `sharp ≤ ks`, decided exactly from rational lower bounds on the cross terms.
    pub sharp_le_ks: bool,
    pub per_class: Vec<ClassRow>,
}

/// Exact TV to Plancherel with the two class-sum upper bounds.
pub fn hsp_bounds(h: &SubgroupSpec) -> Result<HspBounds> {
    let p = weak_sampling_distribution(h)?;
    let pi = Distribution::<Q>::plancherel(p.space().clone());
    let tv = p.tv(&pi);
    let nontrivial: Vec<(Q, f64)> = h
        .class_intersections
        .iter()
        .filter(|(c, k)| !c.is_identity() && *k > 0)
        .map(|(c, k)| {
            let a = BigUint::from(*k);
            // x_C² = |C∩H|²/|C|.
            (
                q_ratio(&(&a * &a), &c.class_size),
                *k as f64 / q_to_f64(&q_from_uint(&c.class_size)).sqrt(),
            )
        })
        .collect();
    let quarter = Q::new(1.into(), 4.into());
    let sum_sq: Q = nontrivial
        .iter()
        .map(|(x2, _)| x2.clone())
        .fold(Q::zero(), |a, b| a + b);
    let sharp_sq = &quarter * &sum_sq;
    let ks = 0.5 * nontrivial.iter().map(|(_, x)| x).sum::<f64>();
    // ks² = ¼(Σ x_i² + 2Σ_{i<j} x_i x_j); each cross term is bounded below by a rational.
    let mut cross_lower = Q::zero();
    for i in 0..nontrivial.len() {
        for j in i + 1..nontrivial.len() {
            cross_lower += q_sqrt_lower(&(&nontrivial[i].0 * &nontrivial[j].0), 64);
        }
    }
    let ks_sq_lower = &quarter * (&sum_sq + Q::from_integer(2.into()) * cross_lower);
    let per_class = h
        .class_intersections
        .iter()
        .map(|(c, k)| ClassRow {
            class: c.cycle_lengths.to_string(),
            size: c.class_size.to_string(),
            intersection: *k,
        })
        .collect();
    Ok(HspBounds {
        tv_exact: crate::numeric::q_render(&tv),
        tv: q_to_f64(&tv),
        sharp_squared: crate::numeric::q_render(&sharp_sq),
        sharp: q_to_f64(&sharp_sq).sqrt(),
        ks,
        tv_le_sharp: &tv * &tv <= sharp_sq,
        sharp_le_ks: sharp_sq <= ks_sq_lower,
        per_class,
    })
}

/// Checks `χ^η(C)/d_η = |C∩H|/|C|` for `η` the permutation action on left cosets,
/// counting the cosets `xH` fixed by a representative of each class.
pub fn induced_character_check(h: &SubgroupSpec) -> Result<bool> {
    if h.n > COSET_CHECK_MAX_N {
        return Err(Error::capacity(
            "hidden-subgroup",
            "coset check n",
            h.n,
            COSET_CHECK_MAX_N,
        ));
    }
    let reps = coset_representatives(h);
    let index = reps.len() as i64;
    let members: HashSet<&Perm> = h.elements.iter().collect();
    for (class, k) in &h.class_intersections {
        let g = class_representative(&class.cycle_lengths);
        // g·xH = xH exactly when x⁻¹gx ∈ H.
        let fixed = reps
            .iter()
            .filter(|x| members.contains(&x.inverse().compose(&g).compose(x)))
            .count() as i64;
        let lhs = q_int(fixed) / q_int(index);
        let rhs = q_ratio(&BigUint::from(*k), &class.class_size);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn class_representative(cycle_lengths: &Partition) -> Perm {
    let n = cycle_lengths.size();
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &len in cycle_lengths.parts() {
        for k in 0..len {
            images[start + k] = (start + (k + 1) % len) as u8;
        }
        start += len;
    }
    Perm(images)
}

/// One representative per left coset `xH`, found by sweeping S_n.
fn coset_representatives(h: &SubgroupSpec) -> Vec<Perm> {
    let mut covered: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    for x in all_permutations(h.n) {
        if covered.contains(&x) {
            continue;
        }
        for e in &h.elements {
            covered.insert(x.compose(e));
        }
        reps.push(x);
    }
    reps
}

fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    permute(&mut cur, 0, &mut out);
    out
}

fn permute(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm(cur.clone()));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// A named generator set from the bundled catalogue.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: String,
    pub n: usize,
    pub generators: String,
}

const CATALOGUE: &str = include_str!("../data/subgroups.txt");

/// Subgroups of S_4 and S_5 bundled with the crate.
pub fn subgroup_catalogue() -> Result<Vec<CatalogueEntry>> {
    CATALOGUE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("catalogue line {line:?}")));
            }
            Ok(CatalogueEntry {
                name: fields[0].to_string(),
                n: fields[1]
                    .parse()
                    .map_err(|_| Error::Parse(format!("catalogue n in {line:?}")))?,
                generators: fields[2].to_string(),
            })
        })
        .collect()
}

impl CatalogueEntry {
    pub fn build(&self) -> Result<SubgroupSpec> {
        subgroup_closure(self.n, &parse_generators(self.n, &self.generators)?)
    }
}

/// Total of `|C ∩ H|` over classes equals `|H|`.
pub fn intersections_sum_to_order(h: &SubgroupSpec) -> bool {
    h.class_intersections.iter().map(|(_, k)| *k).sum::<u64>() == h.order() as u64
}

/// `|H|` divides `n!`.
pub fn order_divides_group(h: &SubgroupSpec) -> bool {
    (crate::numeric::factorial(h.n) % BigUint::from(h.order())).is_zero()
}

/// `sharp² ≤ ks·(½·max_C |C∩H|/√|C|)`.
pub fn cauchy_schwarz_holds(h: &SubgroupSpec, b: &HspBounds) -> bool {
    let max = h
        .class_intersections
        .iter()
        .filter(|(c, _)| !c.is_identity())
        .map(|(c, k)| *k as f64 / q_to_f64(&q_from_uint(&c.class_size)).sqrt())
        .fold(0.0, f64::max);
    b.sharp * b.sharp <= b.ks * 0.5 * max * (1.0 + 1e-12) + 1e-300
}
