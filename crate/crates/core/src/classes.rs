//! Conjugacy classes of index-n subgroups, `N(n)`.
//!
//! The general counting principle: `n · N(n) = Σ_{ℓm=n} Σ_{K} |Epi(K, Z_ℓ)|`,
//! where `K` runs over the index-`m` subgroups. Since `Z_ℓ` is abelian only the
//! abelianisation of each `K` matters, so the inner sum is driven by a list of
//! [`FiberClass`]es per index.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::abelian::epi_count;
use crate::census::{FiberClass, Family, GroupKind, SubgroupCensus};
use crate::error::{Error, Result};
use crate::numtheory::{divisor_pairs, divisors, gcd, mobius};

/// `Σ_{ℓm=n} Σ_{(h,c) ∈ fiber(m)} c · |Epi(h, Z_ℓ)|`, i.e. `n · N(n)`.
pub fn class_accumulator<F>(n: u64, mut fiber_provider: F) -> Result<BigUint>
where
    F: FnMut(u64) -> Result<Vec<FiberClass>>,
{
    let mut acc = BigUint::zero();
    for pair in divisor_pairs(n)? {
        for class in fiber_provider(pair.m)? {
            acc += epi_count(&class.signature, pair.ell)? * &class.multiplicity;
        }
    }
    Ok(acc)
}

fn divide_exact(acc: BigUint, n: u64) -> Result<BigUint> {
    let (q, r) = acc.div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "class accumulator {acc} is not divisible by n = {n}"
        )));
    }
    Ok(q)
}

/// `N(n)` for any group described by its per-index fiber classes.
///
/// Fails with [`Error::Consistency`] if the accumulated sum is not divisible
/// by `n`, which means the provider does not describe a real group.
pub fn count_classes_generic<F>(n: u64, fiber_provider: F) -> Result<BigUint>
where
    F: FnMut(u64) -> Result<Vec<FiberClass>>,
{
    let acc = class_accumulator(n, fiber_provider)?;
    divide_exact(acc, n)
}

/// `n · N(n)` from the closed forms for `F_r`, `Φ_g` and `Λ_p`:
///
/// `Σ_{ℓm=n} Σ_{d|ℓ} μ(ℓ/d) Σ_{(h,c)} c · Π gcd(t_i, d) · d^{rank h}`
///
/// with the Möbius sum taken outside the class sum. The ranks and torsion come
/// from the census fiber signatures.
fn closed_form_accumulator(census: &SubgroupCensus, n: u32) -> Result<BigUint> {
    let mut acc = BigInt::zero();
    for pair in divisor_pairs(n as u64)? {
        let fiber = census.fiber(pair.m as u32);
        for d in divisors(pair.ell)? {
            let mu = mobius(pair.ell / d)?;
            if mu == 0 {
                continue;
            }
            let mut inner = BigUint::zero();
            for class in &fiber {
                let torsion: u64 = class
                    .signature
                    .torsion()
                    .iter()
                    .map(|&t| gcd(t, d))
                    .product::<Result<u64>>()?;
                let power = BigUint::from(d).pow(class.signature.rank() as u32);
                inner += power * torsion * &class.multiplicity;
            }
            if mu > 0 {
                acc += BigInt::from(inner);
            } else {
                acc -= BigInt::from(inner);
            }
        }
    }
    if acc.is_negative() {
        return Err(Error::Consistency(format!("negative class accumulator at n = {n}")));
    }
    Ok(acc.to_biguint().expect("checked nonnegative"))
}

/// `N(n)` for one of the three families via its closed form.
pub fn count_classes(kind: GroupKind, n: u32) -> Result<BigUint> {
    let census = SubgroupCensus::compute(kind, n)?;
    divide_exact(closed_form_accumulator(&census, n)?, n as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: u32,
    /// `M(n)`.
    pub subgroups: BigUint,
    /// `M⁺(n)`, non-orientable groups only.
    pub orientable: Option<BigUint>,
    /// `M⁻(n)`, non-orientable groups only.
    pub nonorientable: Option<BigUint>,
    /// `N(n)`.
    pub classes: BigUint,
    /// `n · N(n)` before division.
    pub accumulator: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub kind: GroupKind,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn has_split(&self) -> bool {
        self.kind.family() == Family::NonOrientable
    }

    /// Checks the structural identities every row must satisfy.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |n: u32, what: &str| {
            Err(Error::Consistency(format!("{} row {n}: {what}", self.kind)))
        };
        for row in &self.rows {
            let n = BigUint::from(row.n);
            if !(&row.accumulator % &n).is_zero() || row.accumulator != &row.classes * &n {
                return fail(row.n, "accumulator is not n * N");
            }
            if row.classes > row.subgroups || row.subgroups > &n * &row.classes {
                return fail(row.n, "N <= M <= n N violated");
            }
            if row.n <= 2 && row.classes != row.subgroups {
                return fail(row.n, "N != M at index <= 2");
            }
            match (&row.orientable, &row.nonorientable) {
                (Some(p), Some(q)) if p + q != row.subgroups => {
                    return fail(row.n, "M+ + M- != M");
                }
                (Some(_), Some(_)) | (None, None) => {}
                _ => return fail(row.n, "partial orientability split"),
            }
        }
        Ok(())
    }
}

/// Rows `1..=n_max` of `M`, `N` (and `M⁺`, `M⁻` for `Λ_p`). Rows are
/// evaluated in parallel; the result does not depend on scheduling.
pub fn census_table(kind: GroupKind, n_max: u32) -> Result<CensusTable> {
    let census = SubgroupCensus::compute(kind, n_max)?;
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let accumulator = closed_form_accumulator(&census, n)?;
            let classes = divide_exact(accumulator.clone(), n as u64)?;
            Ok(CensusRow {
                n,
                subgroups: census.total(n).clone(),
                orientable: census.orientable(n).cloned(),
                nonorientable: census.nonorientable(n),
                classes,
                accumulator,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let table = CensusTable { kind, rows };
    table.check_invariants()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::HomologySignature;
    use crate::census::covering_fiber;
    use crate::numtheory::sigma;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn kind(s: &str) -> GroupKind {
        s.parse().unwrap()
    }

    fn free2_provider(m: u64) -> Result<Vec<FiberClass>> {
        covering_fiber(kind("free:2"), m as u32)
    }

    #[test]
    fn generic_driver_examples() {
        assert_eq!(count_classes_generic(1, free2_provider).unwrap(), n(1));
        assert_eq!(count_classes_generic(2, free2_provider).unwrap(), n(3));
        assert_eq!(count_classes_generic(3, free2_provider).unwrap(), n(7));
        assert_eq!(class_accumulator(3, free2_provider).unwrap(), n(21));

        let provider = |m: u64| -> Result<Vec<FiberClass>> {
            Ok(vec![FiberClass { signature: HomologySignature::free(3), multiplicity: n(5 * m) }])
        };
        assert_eq!(count_classes_generic(1, provider).unwrap(), n(5));
    }

    #[test]
    fn generic_driver_rejects_bogus_fibers() {
        // Two index-2 subgroups over a base with H1 = Z^2: 2·1 + 1·3 = 5 is odd.
        let bogus = |m: u64| -> Result<Vec<FiberClass>> {
            let (rank, mult) = if m == 1 { (2, 1u64) } else { (3, 2) };
            Ok(vec![FiberClass { signature: HomologySignature::free(rank), multiplicity: n(mult) }])
        };
        assert_eq!(class_accumulator(2, bogus).unwrap(), n(5));
        assert!(matches!(count_classes_generic(2, bogus), Err(Error::Consistency(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(count_classes(kind("free:2"), 4).unwrap(), n(26));
        assert_eq!(count_classes(kind("orient:1"), 6).unwrap(), n(12));
        assert_eq!(count_classes(kind("orient:2"), 2).unwrap(), n(15));
        assert_eq!(count_classes(kind("nonorient:2"), 2).unwrap(), n(3));
        for n_ in 1..=20 {
            assert_eq!(count_classes(kind("orient:1"), n_).unwrap(), n(sigma(n_ as u64).unwrap()));
            assert_eq!(count_classes(kind("free:1"), n_).unwrap(), n(1));
        }
    }

    #[test]
    fn closed_form_matches_generic() {
        for s in ["free:1", "free:2", "free:3", "orient:1", "orient:2", "orient:3", "nonorient:2", "nonorient:3", "nonorient:4"] {
            let k = kind(s);
            let census = SubgroupCensus::compute(k, 10).unwrap();
            for n_ in 1..=10u32 {
                let generic = count_classes_generic(n_ as u64, |m| Ok(census.fiber(m as u32))).unwrap();
                assert_eq!(count_classes(k, n_).unwrap(), generic, "{s} n={n_}");
            }
        }
    }

    #[test]
    fn table_examples() {
        let t = census_table(kind("free:2"), 1).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!((t.rows[0].subgroups.clone(), t.rows[0].classes.clone()), (n(1), n(1)));

        let t = census_table(kind("free:2"), 6).unwrap();
        let m: Vec<_> = t.rows.iter().map(|r| r.subgroups.clone()).collect();
        let c: Vec<_> = t.rows.iter().map(|r| r.classes.clone()).collect();
        assert_eq!(m, [1u64, 3, 13, 71, 461, 3447].map(n));
        assert_eq!(c, [1u64, 3, 7, 26, 97, 624].map(n));
        assert!(!t.has_split());

        let t = census_table(kind("nonorient:2"), 2).unwrap();
        let rows: Vec<_> = t
            .rows
            .iter()
            .map(|r| (r.subgroups.clone(), r.orientable.clone().unwrap(), r.nonorientable.clone().unwrap(), r.classes.clone()))
            .collect();
        assert_eq!(rows, vec![(n(1), n(0), n(1), n(1)), (n(3), n(1), n(2), n(3))]);
        assert_eq!(census_table(kind("free:2"), 0), Err(Error::Zero("m")));
    }

    #[test]
    fn table_is_sequentially_consistent() {
        let k = kind("nonorient:3");
        let t = census_table(k, 12).unwrap();
        for row in &t.rows {
            assert_eq!(row.classes, count_classes(k, row.n).unwrap());
        }
    }

    #[test]
    fn invariant_check_catches_tampering() {
        let mut t = census_table(kind("orient:2"), 4).unwrap();
        t.check_invariants().unwrap();
        t.rows[2].classes += 1u32;
        assert!(t.check_invariants().is_err());
    }
}
