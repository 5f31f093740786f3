//! Integer partitions and the degrees of the irreducible characters of the
//! symmetric group they index, plus the power sums `β_k(ν)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j as usize] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Product of the hook lengths, which equals `k! / f^λ`.
    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// Degree `f^λ` of the irreducible character indexed by this partition.
    pub fn degree(&self) -> BigUint {
        let fact = factorial(self.weight() as u64);
        let hooks = self.hook_product();
        debug_assert!((&fact % &hooks).is_zero());
        fact / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All partitions of `k` in lexicographically decreasing order, e.g.
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions(k: u32) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::Zero("k"));
    }
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    Ok(out)
}

fn check_nu(nu: i64) -> Result<u32> {
    u32::try_from(nu).map_err(|_| Error::NegativeNu(nu))
}

/// `β_k(ν) = Σ_λ (k!/f^λ)^ν` over all partitions `λ` of `k`, computed fresh.
pub fn beta(k: u32, nu: i64) -> Result<BigUint> {
    let nu = check_nu(nu)?;
    Ok(partitions(k)?
        .iter()
        .map(|lambda| lambda.hook_product().pow(nu))
        .sum())
}

/// Write-once memo table for `β_k(ν)`, keyed by `(k, ν)`.
#[derive(Debug, Default)]
pub struct BetaCache {
    values: RwLock<HashMap<(u32, u32), BigUint>>,
}

impl BetaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: u32, nu: i64) -> Result<BigUint> {
        let key = (k, check_nu(nu)?);
        if let Some(v) = self.values.read().expect("beta cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        let v = beta(k, nu)?;
        self.values
            .write()
            .expect("beta cache poisoned")
            .entry(key)
            .or_insert(v.clone());
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("beta cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

static SHARED: LazyLock<BetaCache> = LazyLock::new(BetaCache::new);

/// Process-wide memoized `β_k(ν)`.
pub fn beta_cached(k: u32, nu: i64) -> Result<BigUint> {
    SHARED.get(k, nu)
}
