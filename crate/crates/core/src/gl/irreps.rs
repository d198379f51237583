use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gl::cuspidal::{cuspidal_count_usize, CuspidalLabel};
use crate::numeric::{q_ratio, Q};
use crate::partition::{enumerate_partitions, Partition};

/// Largest `n` for family enumeration.
pub const GL_ENUM_MAX_N: usize = 5;
/// Largest `q` for family enumeration.
pub const GL_ENUM_MAX_Q: u64 = 4;

/// An irreducible representation of GL(n, q) as a family of partitions over
/// cuspidal labels. Labels mapped to the empty partition are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLIrrep {
    pub n: usize,
    pub q: u64,
    pub assignment: BTreeMap<CuspidalLabel, Partition>,
}

impl GLIrrep {
    /// Validates `Σ d·|φ(c)| = n`, index ranges, and drops empty partitions.
    pub fn new(n: usize, q: u64, assignment: BTreeMap<CuspidalLabel, Partition>) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid("q must be at least 2"));
        }
        let mut degree = 0;
        let mut kept = BTreeMap::new();
        for (c, lam) in assignment {
            if c.degree == 0 {
                return Err(Error::invalid("cuspidal degree must be positive"));
            }
            let count = cuspidal_count_usize(c.degree, q).unwrap_or(usize::MAX);
            if c.index >= count {
                return Err(Error::invalid(format!(
                    "cuspidal index {} out of range for degree {} (count {count})",
                    c.index, c.degree
                )));
            }
            if !lam.is_empty() {
                degree += c.degree * lam.size();
                kept.insert(c, lam);
            }
        }
        if degree != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: degree,
            });
        }
        Ok(GLIrrep {
            n,
            q,
            assignment: kept,
        })
    }

    /// `φ(e)`, or the empty partition.
    pub fn unipotent_part(&self) -> Partition {
        self.assignment
            .get(&CuspidalLabel::UNIT)
            .cloned()
            .unwrap_or_else(Partition::empty)
    }

    pub fn partition_at(&self, c: &CuspidalLabel) -> Partition {
        self.assignment
            .get(c)
            .cloned()
            .unwrap_or_else(Partition::empty)
    }

    /// `"d.i:partition;…"` in label order.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GLIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(c, lam)| format!("{}.{}:{}", c.degree, c.index, lam))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl Serialize for GLIrrep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.descriptor())
    }
}

/// Parses a descriptor such as `"1.0:2+1;2.0:1"` into its label map.
pub fn parse_descriptor(s: &str) -> Result<BTreeMap<CuspidalLabel, Partition>> {
    let mut out = BTreeMap::new();
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (label, part) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {item:?}")))?;
        let (d, i) = label
            .split_once('.')
            .ok_or_else(|| Error::Parse(format!("label {label:?} is not d.i")))?;
        let c = CuspidalLabel {
            degree: d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {d:?}")))?,
            index: i
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index {i:?}")))?,
        };
        if out.insert(c, Partition::from_str(part.trim())?).is_some() {
            return Err(Error::Parse(format!("label {label} repeated")));
        }
    }
    Ok(out)
}

fn check_enumerable(n: usize, q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    if n > GL_ENUM_MAX_N {
        return Err(Error::capacity("gl-irreps", "n", n, GL_ENUM_MAX_N));
    }
    if q > GL_ENUM_MAX_Q {
        return Err(Error::capacity(
            "gl-irreps",
            "q",
            q as usize,
            GL_ENUM_MAX_Q as usize,
        ));
    }
    Ok(())
}

/// All families of degree `n`. Labels are visited in (degree, index) order; at
/// each label the size runs from largest to zero and partitions of a size in
/// enumeration order.
pub fn enumerate_gl_irreps(n: usize, q: u64) -> Result<Vec<GLIrrep>> {
    check_enumerable(n, q)?;
    let mut labels = Vec::new();
    for d in 1..=n {
        let count = cuspidal_count_usize(d, q).expect("small count");
        labels.extend((0..count).map(|index| CuspidalLabel { degree: d, index }));
    }
    let parts: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    families_rec(&labels, 0, n, &parts, &mut current, &mut |chosen| {
        out.push(GLIrrep {
            n,
            q,
            assignment: chosen.iter().cloned().collect(),
        })
    });
    Ok(out)
}

fn families_rec(
    labels: &[CuspidalLabel],
    from: usize,
    remaining: usize,
    parts: &[Vec<Partition>],
    current: &mut Vec<(CuspidalLabel, Partition)>,
    emit: &mut dyn FnMut(&[(CuspidalLabel, Partition)]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for (k, c) in labels.iter().enumerate().skip(from) {
        if c.degree > remaining {
            break;
        }
        for size in (1..=remaining / c.degree).rev() {
            for lam in &parts[size] {
                current.push((*c, lam.clone()));
                families_rec(
                    labels,
                    k + 1,
                    remaining - size * c.degree,
                    parts,
                    current,
                    emit,
                );
                current.pop();
            }
        }
    }
}

/// `|GL(n, q)| = Π_{i<n} (q^n − q^i)`.
pub fn gl_order(n: usize, q: u64) -> BigUint {
    let qq = BigUint::from(q);
    let qn = Pow::pow(&qq, n as u32);
    (0..n).fold(BigUint::one(), |acc, i| {
        acc * (&qn - Pow::pow(&qq, i as u32))
    })
}

/// `(q^n − 1)⋯(q − 1)·Π_c q^{d·n(φ(c))} / Π_c Π_b (q^{d·h(b)} − 1)`.
pub fn dimension_gl(phi: &GLIrrep) -> Result<BigUint> {
    let qq = BigUint::from(phi.q);
    let mut num = (1..=phi.n).fold(BigUint::one(), |acc, i| {
        acc * (Pow::pow(&qq, i as u32) - 1u32)
    });
    let mut den = BigUint::one();
    for (c, lam) in &phi.assignment {
        num *= Pow::pow(&qq, (c.degree * lam.n_stat()) as u32);
        for h in lam.hooks() {
            den *= Pow::pow(&qq, (c.degree * h) as u32) - 1u32;
        }
    }
    let (d, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("non-integral dimension for {phi}")));
    }
    Ok(d)
}

/// Family, dimension and Plancherel mass `d²/|GL(n,q)|`.
#[derive(Clone, Debug, Serialize)]
pub struct GLPlancherelEntry {
    pub family: GLIrrep,
    #[serde(serialize_with = "crate::serde_util::biguint_str")]
    pub dimension: BigUint,
    #[serde(serialize_with = "crate::serde_util::q_str")]
    pub mass: Q,
}

pub fn plancherel_gl(n: usize, q: u64) -> Result<Vec<GLPlancherelEntry>> {
    let order = gl_order(n, q);
    enumerate_gl_irreps(n, q)?
        .into_iter()
        .map(|family| {
            let dimension = dimension_gl(&family)?;
            let mass = q_ratio(&(&dimension * &dimension), &order);
            Ok(GLPlancherelEntry {
                family,
                dimension,
                mass,
            })
        })
        .collect()
}

/// Exact law of `φ(e)` under Plancherel measure, by decreasing size and then
/// enumeration order.
pub fn unipotent_marginal(n: usize, q: u64) -> Result<Vec<(Partition, Q)>> {
    let mut acc: BTreeMap<(std::cmp::Reverse<usize>, Partition), Q> = BTreeMap::new();
    for e in plancherel_gl(n, q)? {
        let lam = e.family.unipotent_part();
        *acc.entry((std::cmp::Reverse(lam.size()), lam))
            .or_insert_with(Q::zero) += e.mass;
    }
    Ok(acc.into_iter().map(|((_, p), m)| (p, m)).collect())
}
