//! Homomorphism and epimorphism counts from a finitely generated group onto a
//! cyclic group, using only its abelianisation.
//!
//! `|Hom(Γ, Z_d)| = Π gcd(m_i, d) · d^r` for `H₁(Γ) = Z_{m_1} ⊕ … ⊕ Z_{m_s} ⊕ Z^r`,
//! and `|Epi(Γ, Z_ℓ)|` follows by Möbius inversion over the divisors of `ℓ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, mobius};

/// First homology `Z_{m_1} ⊕ … ⊕ Z_{m_s} ⊕ Z^rank`.
///
/// Torsion orders are kept sorted ascending. They need not be invariant
/// factors; any cyclic decomposition gives the same counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologySignature {
    torsion: Vec<u64>,
    rank: u64,
}

impl HomologySignature {
    pub fn new(mut torsion: Vec<u64>, rank: u64) -> Result<Self> {
        if let Some(&bad) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidTorsion(bad));
        }
        torsion.sort_unstable();
        Ok(Self { torsion, rank })
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: u64) -> Self {
        Self { torsion: Vec::new(), rank }
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }
}

impl fmt::Display for HomologySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.torsion {
            write!(f, "Z{m}+")?;
        }
        write!(f, "Z^{}", self.rank)
    }
}

/// `|Hom(H, Z_d)|`.
pub fn hom_count(h: &HomologySignature, d: u64) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::Zero("d"));
    }
    let torsion: BigUint = h
        .torsion
        .iter()
        .map(|&m| gcd(m, d).map(BigUint::from))
        .product::<Result<BigUint>>()?;
    let rank = u32::try_from(h.rank)
        .map_err(|_| Error::Resource(format!("rank {} too large", h.rank)))?;
    Ok(torsion * BigUint::from(d).pow(rank))
}

/// `|Epi(H, Z_ell)| = Σ_{d | ell} μ(ell/d) |Hom(H, Z_d)|`.
pub fn epi_count(h: &HomologySignature, ell: u64) -> Result<BigUint> {
    if ell == 0 {
        return Err(Error::Zero("ell"));
    }
    let mut total = BigInt::zero();
    for d in divisors(ell)? {
        match mobius(ell / d)? {
            0 => {}
            1 => total += BigInt::from(hom_count(h, d)?),
            _ => total -= BigInt::from(hom_count(h, d)?),
        }
    }
    if total.is_negative() {
        return Err(Error::Consistency(format!(
            "negative epimorphism count {total} for {h} onto Z_{ell}"
        )));
    }
    Ok(total.to_biguint().expect("checked nonnegative"))
}
