//! Divisors, Möbius function, Euler totient and gcd over `u64`.
//!
//! Trial division throughout; indices stay far below the range where a sieve
//! would pay off.

use crate::error::{Error, Result};

/// A factorisation `n = ell * m` of an index into a cyclic quotient order
/// `ell` and an intermediate index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorPair {
    pub ell: u64,
    pub m: u64,
}

fn positive(n: u64, what: &'static str) -> Result<u64> {
    if n == 0 {
        Err(Error::Zero(what))
    } else {
        Ok(n)
    }
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let n = positive(n, "n")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Every `(ell, m)` with `ell * m = n`, by ascending `ell`.
pub fn divisor_pairs(n: u64) -> Result<Vec<DivisorPair>> {
    Ok(divisors(n)?
        .into_iter()
        .map(|ell| DivisorPair { ell, m: n / ell })
        .collect())
}

/// Distinct prime factors with multiplicity, ascending.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i8> {
    let n = positive(n, "n")?;
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let n = positive(n, "n")?;
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(num_integer::gcd(a, b))
}

/// Sum of divisors.
pub fn sigma(n: u64) -> Result<u64> {
    Ok(divisors(n)?.into_iter().sum())
}
