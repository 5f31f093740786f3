//! Subgroup counts `M(m)` for the three families of surface groups.
//!
//! Free groups use Hall's recursion. Closed surface groups use the
//! character-theoretic sums built from `β_k(ν)`, with `ν = 2g - 2` for `Φ_g`
//! and `ν = p - 2` for `Λ_p`; for `Λ_p` the count is further split into
//! orientable and non-orientable subgroups.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::abelian::HomologySignature;
use crate::characters::{beta_cached, factorial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Free group `F_r`; fundamental group of a bordered surface.
    Free,
    /// `Φ_g`, closed orientable surface of genus `g`.
    Orientable,
    /// `Λ_p`, closed non-orientable surface of genus `p`.
    NonOrientable,
}

/// One of `F_r` (r ≥ 1), `Φ_g` (g ≥ 1) or `Λ_p` (p ≥ 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupKind {
    family: Family,
    param: u32,
}

impl GroupKind {
    pub fn free(rank: u32) -> Result<Self> {
        Self::new(Family::Free, rank)
    }

    pub fn orientable(genus: u32) -> Result<Self> {
        Self::new(Family::Orientable, genus)
    }

    pub fn nonorientable(genus: u32) -> Result<Self> {
        Self::new(Family::NonOrientable, genus)
    }

    pub fn new(family: Family, param: u32) -> Result<Self> {
        let min = match family {
            Family::Free | Family::Orientable => 1,
            // Λ_1 would need ν = -1.
            Family::NonOrientable => 2,
        };
        if param < min {
            return Err(Error::InvalidGroup(format!(
                "{} needs parameter >= {min}, got {param}",
                family_tag(family)
            )));
        }
        Ok(Self { family, param })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank `r`, genus `g` or genus `p`, depending on the family.
    pub fn param(&self) -> u32 {
        self.param
    }

    /// Number of generators in the standard one-relator (or free) presentation.
    pub fn generator_count(&self) -> usize {
        match self.family {
            Family::Free | Family::NonOrientable => self.param as usize,
            Family::Orientable => 2 * self.param as usize,
        }
    }

    /// Exponent `ν` of the character sum for surface groups.
    pub fn nu(&self) -> Option<i64> {
        match self.family {
            Family::Free => None,
            Family::Orientable => Some(2 * self.param as i64 - 2),
            Family::NonOrientable => Some(self.param as i64 - 2),
        }
    }

    pub fn homology(&self) -> HomologySignature {
        match self.family {
            Family::Free => HomologySignature::free(self.param as u64),
            Family::Orientable => HomologySignature::free(2 * self.param as u64),
            Family::NonOrientable => HomologySignature::new(vec![2], self.param as u64 - 1)
                .expect("2 is a valid torsion order"),
        }
    }
}

fn family_tag(family: Family) -> &'static str {
    match family {
        Family::Free => "free",
        Family::Orientable => "orient",
        Family::NonOrientable => "nonorient",
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", family_tag(self.family), self.param)
    }
}

/// Parses `free:R`, `orient:G` or `nonorient:P`.
impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(format!("cannot parse {s:?}; expected free:R, orient:G or nonorient:P"));
        let (tag, num) = s.split_once(':').ok_or_else(bad)?;
        let family = match tag {
            "free" => Family::Free,
            "orient" => Family::Orientable,
            "nonorient" => Family::NonOrientable,
            _ => return Err(bad()),
        };
        if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let param = num.parse().map_err(|_| bad())?;
        Self::new(family, param)
    }
}

/// A block of index-`m` subgroups sharing one abelianisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberClass {
    pub signature: HomologySignature,
    pub multiplicity: BigUint,
}

fn to_nonneg(v: BigInt, what: &str) -> Result<BigUint> {
    v.to_biguint()
        .ok_or_else(|| Error::Consistency(format!("{what} came out negative")))
}

/// Hall's `t_{j,r}` for `j = 1..=m_max`; entry `j - 1` holds `t_{j,r}`.
pub fn hall_t_table(m_max: u32, r: u32) -> Result<Vec<BigUint>> {
    if m_max == 0 {
        return Err(Error::Zero("m"));
    }
    if r == 0 {
        return Err(Error::InvalidGroup("free rank must be >= 1".into()));
    }
    let fact_pow: Vec<BigInt> = (0..=m_max as u64)
        .map(|k| BigInt::from(factorial(k).pow(r)))
        .collect();
    let mut t: Vec<BigInt> = vec![BigInt::one()];
    for m in 2..=m_max as usize {
        let mut acc = fact_pow[m].clone();
        // C(m-1, j-1) built incrementally over j.
        let mut binom = BigInt::one();
        for j in 1..m {
            acc -= &binom * &fact_pow[m - j] * &t[j - 1];
            binom = binom * (m - j) / j;
        }
        t.push(acc);
    }
    t.into_iter().map(|v| to_nonneg(v, "Hall t")).collect()
}

pub fn hall_t(m: u32, r: u32) -> Result<BigUint> {
    Ok(hall_t_table(m, r)?.pop().expect("nonempty"))
}

/// `R_ν(m)` by the logarithmic recursion `M(m) = m β_m - Σ_{j<m} β_{m-j} M(j)`,
/// for all `m = 1..=m_max`.
pub fn r_nu_recursive_table(m_max: u32, nu: i64) -> Result<Vec<BigUint>> {
    if m_max == 0 {
        return Err(Error::Zero("m"));
    }
    let betas: Vec<BigInt> = (1..=m_max)
        .map(|k| beta_cached(k, nu).map(BigInt::from))
        .collect::<Result<_>>()?;
    let mut counts: Vec<BigInt> = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max as usize {
        let mut acc = BigInt::from(m) * &betas[m - 1];
        for j in 1..m {
            acc -= &betas[m - j - 1] * &counts[j - 1];
        }
        counts.push(acc);
    }
    counts.into_iter().map(|v| to_nonneg(v, "R_nu")).collect()
}

pub fn r_nu_recursive(m: u32, nu: i64) -> Result<BigUint> {
    Ok(r_nu_recursive_table(m, nu)?.pop().expect("nonempty"))
}

/// `R_ν(m) = m Σ_s (-1)^{s+1}/s Σ_{i_1+…+i_s=m} β_{i_1}⋯β_{i_s}`, evaluated
/// over the rationals with every composition of `m` enumerated.
///
/// Fails if the rational result is not an integer.
pub fn r_nu_closed(m: u32, nu: i64) -> Result<BigUint> {
    let value = r_nu_closed_rational(m, nu)?;
    if !value.is_integer() {
        return Err(Error::Consistency(format!(
            "R_{nu}({m}) evaluated to non-integer {value}"
        )));
    }
    to_nonneg(value.to_integer(), "R_nu closed form")
}

/// The closed form before the integrality check.
pub fn r_nu_closed_rational(m: u32, nu: i64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::Zero("m"));
    }
    let betas: Vec<BigUint> = (1..=m)
        .map(|k| beta_cached(k, nu))
        .collect::<Result<_>>()?;

    // by_parts[s] = Σ over compositions of m into s parts of Π β_i.
    fn descend(rest: usize, parts: usize, prod: &BigUint, betas: &[BigUint], by_parts: &mut [BigUint]) {
        if rest == 0 {
            by_parts[parts] += prod;
            return;
        }
        for first in 1..=rest {
            let next = prod * &betas[first - 1];
            descend(rest - first, parts + 1, &next, betas, by_parts);
        }
    }
    let mut by_parts = vec![BigUint::zero(); m as usize + 1];
    descend(m as usize, 0, &BigUint::one(), &betas, &mut by_parts);

    let mut sum = BigRational::zero();
    for (s, total) in by_parts.into_iter().enumerate().skip(1) {
        let term = BigRational::new(BigInt::from(total), BigInt::from(s));
        if s.is_odd() {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum * BigRational::from_integer(BigInt::from(m)))
}

/// Per-index subgroup counts of one group, for `m = 1..=m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCensus {
    pub kind: GroupKind,
    /// `M(m)` at position `m - 1`.
    pub total: Vec<BigUint>,
    /// `M⁺(m)` at position `m - 1`; only for non-orientable groups.
    pub orientable: Option<Vec<BigUint>>,
}

impl SubgroupCensus {
    pub fn compute(kind: GroupKind, m_max: u32) -> Result<Self> {
        if m_max == 0 {
            return Err(Error::Zero("m"));
        }
        let total = match kind.family {
            Family::Free => {
                let t = hall_t_table(m_max, kind.param)?;
                t.into_iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let denom = factorial(i as u64);
                        let (q, r) = t.div_rem(&denom);
                        if r.is_zero() {
                            Ok(q)
                        } else {
                            Err(Error::Consistency(format!(
                                "Hall t_{{{},{}}} not divisible by {}!",
                                i + 1,
                                kind.param,
                                i
                            )))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            _ => r_nu_recursive_table(m_max, kind.nu().expect("surface group"))?,
        };
        let orientable = match kind.family {
            Family::NonOrientable => Some(orientable_counts(kind.param, m_max)?),
            _ => None,
        };
        if let Some(plus) = &orientable {
            for (m, (all, p)) in total.iter().zip(plus).enumerate() {
                if p > all {
                    return Err(Error::Consistency(format!(
                        "M+({}) = {p} exceeds M = {all} for {kind}",
                        m + 1
                    )));
                }
            }
        }
        Ok(Self { kind, total, orientable })
    }

    pub fn max_index(&self) -> u32 {
        self.total.len() as u32
    }

    pub fn total(&self, m: u32) -> &BigUint {
        &self.total[m as usize - 1]
    }

    pub fn orientable(&self, m: u32) -> Option<&BigUint> {
        self.orientable.as_ref().map(|v| &v[m as usize - 1])
    }

    pub fn nonorientable(&self, m: u32) -> Option<BigUint> {
        self.orientable(m).map(|p| self.total(m) - p)
    }

    /// Fiber classes at index `m`: each block of subgroups with a common
    /// abelianisation, zero-multiplicity blocks dropped.
    pub fn fiber(&self, m: u32) -> Vec<FiberClass> {
        let kind = self.kind;
        let m64 = m as u64;
        let param = kind.param as u64;
        let classes = match kind.family {
            Family::Free => vec![FiberClass {
                signature: HomologySignature::free((param - 1) * m64 + 1),
                multiplicity: self.total(m).clone(),
            }],
            Family::Orientable => vec![FiberClass {
                signature: HomologySignature::free(2 * ((param - 1) * m64 + 1)),
                multiplicity: self.total(m).clone(),
            }],
            Family::NonOrientable => {
                let excess = m64 * (param - 2);
                vec![
                    FiberClass {
                        signature: HomologySignature::free(excess + 2),
                        multiplicity: self.orientable(m).expect("split present").clone(),
                    },
                    FiberClass {
                        signature: HomologySignature::new(vec![2], excess + 1)
                            .expect("2 is a valid torsion order"),
                        multiplicity: self.nonorientable(m).expect("split present"),
                    },
                ]
            }
        };
        classes
            .into_iter()
            .filter(|c| !c.multiplicity.is_zero())
            .collect()
    }
}

/// `M⁺(m)` for `Λ_p`, `m = 1..=m_max`: zero for odd `m`, `R_{2ν}(m/2)` for even.
fn orientable_counts(p: u32, m_max: u32) -> Result<Vec<BigUint>> {
    let nu = p as i64 - 2;
    let half = if m_max >= 2 {
        r_nu_recursive_table(m_max / 2, 2 * nu)?
    } else {
        Vec::new()
    };
    Ok((1..=m_max)
        .map(|m| {
            if m % 2 == 1 {
                BigUint::zero()
            } else {
                half[(m / 2 - 1) as usize].clone()
            }
        })
        .collect())
}

/// `M_Γ(m)`, the number of index-`m` subgroups.
pub fn count_subgroups(kind: GroupKind, m: u32) -> Result<BigUint> {
    Ok(SubgroupCensus::compute(kind, m)?.total(m).clone())
}

fn nonorientable_kind(p: u32) -> Result<GroupKind> {
    GroupKind::nonorientable(p)
}

/// `M⁺(m)` for `Λ_p`.
pub fn count_orientable_subgroups(p: u32, m: u32) -> Result<BigUint> {
    nonorientable_kind(p)?;
    if m == 0 {
        return Err(Error::Zero("m"));
    }
    if m % 2 == 1 {
        return Ok(BigUint::zero());
    }
    r_nu_recursive(m / 2, 2 * (p as i64 - 2))
}

/// `M⁻(m) = M(m) - M⁺(m)` for `Λ_p`.
pub fn count_nonorientable_subgroups(p: u32, m: u32) -> Result<BigUint> {
    let census = SubgroupCensus::compute(nonorientable_kind(p)?, m)?;
    Ok(census.nonorientable(m).expect("split present"))
}

/// Index-`m` subgroups grouped by abelianisation.
pub fn covering_fiber(kind: GroupKind, m: u32) -> Result<Vec<FiberClass>> {
    Ok(SubgroupCensus::compute(kind, m)?.fiber(m))
}
