//! Brute-force cross-checks by direct enumeration of permutation
//! representations `Γ → S_n`.
//!
//! Index-`n` subgroups of `Γ` correspond to transitive actions of `Γ` on
//! `{0, …, n-1}` with a marked point, so `M(n)` is the number of transitive
//! generator tuples divided by `(n-1)!`, and `N(n)` is the number of orbits of
//! transitive tuples under simultaneous conjugation by `S_n`.
//!
//! Actions are on the right: the word `u v` sends `x` to `(x·u)·v`.
//!
//! Everything here is deliberately naive. Work is bounded by
//! [`MAX_TUPLES`]; requests past the bounds fail with [`Error::Resource`]
//! rather than returning partial results.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::abelian::HomologySignature;
use crate::census::{Family, GroupKind};
use crate::characters::factorial;
use crate::error::{Error, Result};

/// Largest degree the oracle will touch.
pub const MAX_DEGREE: u32 = 10;
/// Upper bound on `|S_n|^{#generators}`, the number of tuples enumerated.
pub const MAX_TUPLES: u64 = 200_000_000;
/// Upper bound on the number of transitive tuples kept for orbit counting.
pub const MAX_STORED: usize = 1 << 25;
/// Bound on `|torsion| + rank` for [`oracle_epi_count`].
pub const MAX_EPI_GENERATORS: usize = 6;
/// Bound on the target order for [`oracle_epi_count`].
pub const MAX_EPI_ORDER: u64 = 24;

/// A permutation of `{0, …, n-1}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return Err(Error::InvalidGroup(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Self {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Images of the standard generators of a [`GroupKind`] in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationTuple {
    images: Vec<Perm>,
}

impl PermutationTuple {
    pub fn new(images: Vec<Perm>) -> Result<Self> {
        let n = images.first().map(Perm::degree).unwrap_or(0);
        if n == 0 || images.iter().any(|p| p.degree() != n) {
            return Err(Error::InvalidGroup("tuple needs nonempty permutations of one degree".into()));
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images[0].degree()
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    /// Canonical key: concatenated one-line images.
    pub fn key(&self) -> Vec<u8> {
        self.images.iter().flat_map(|p| p.0.iter().copied()).collect()
    }

    /// Action of a word on a point.
    pub fn act(&self, x: usize, word: &[Letter]) -> usize {
        word.iter().fold(x, |x, l| {
            let p = &self.images[l.generator];
            if l.inverse {
                p.0.iter().position(|&y| y as usize == x).expect("permutation")
            } else {
                p.apply(x)
            }
        })
    }

    pub fn satisfies(&self, kind: GroupKind) -> bool {
        let rel = relator(kind);
        (0..self.degree()).all(|x| self.act(x, &rel) == x)
    }

    pub fn is_transitive(&self) -> bool {
        let slices: Vec<&[u8]> = self.images.iter().map(|p| p.images()).collect();
        is_transitive(&slices, self.degree())
    }

    /// Conjugate every image by `sigma`: `x ↦ σ⁻¹ g σ`.
    pub fn conjugate(&self, sigma: &Perm) -> Self {
        let inv = sigma.inverse();
        Self {
            images: self.images.iter().map(|g| inv.then(g).then(sigma)).collect(),
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn fwd(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }
}

pub type Word = Vec<Letter>;

/// The defining relator of the standard presentation; empty for free groups.
///
/// `Φ_g`: `[a_1,b_1]⋯[a_g,b_g]` with generators ordered `a_1, b_1, a_2, …`.
/// `Λ_p`: `a_1² ⋯ a_p²`.
pub fn relator(kind: GroupKind) -> Word {
    match kind.family() {
        Family::Free => Vec::new(),
        Family::Orientable => (0..kind.param() as usize)
            .flat_map(|i| {
                let (a, b) = (Letter::fwd(2 * i), Letter::fwd(2 * i + 1));
                [a, b, a.inv(), b.inv()]
            })
            .collect(),
        Family::NonOrientable => (0..kind.param() as usize)
            .flat_map(|i| [Letter::fwd(i), Letter::fwd(i)])
            .collect(),
    }
}

fn is_transitive(images: &[&[u8]], n: usize) -> bool {
    let mut seen = [false; MAX_DEGREE as usize];
    let mut stack = [0u8; MAX_DEGREE as usize];
    seen[0] = true;
    stack[0] = 0;
    let (mut top, mut reached) = (1, 1);
    while top > 0 {
        top -= 1;
        let x = stack[top] as usize;
        for img in images {
            let y = img[x] as usize;
            if !seen[y] {
                seen[y] = true;
                stack[top] = y as u8;
                top += 1;
                reached += 1;
            }
        }
    }
    reached == n
}

/// All of `S_n` in lexicographic order, so a permutation's rank is its index.
struct SymmetricGroup {
    n: usize,
    flat: Vec<u8>,
    inverse_rank: Vec<u32>,
}

impl SymmetricGroup {
    fn new(n: usize) -> Self {
        let order = (1..=n).product::<usize>();
        let mut flat = Vec::with_capacity(order * n);
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            flat.extend_from_slice(&cur);
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let mut group = SymmetricGroup { n, flat, inverse_rank: Vec::new() };
        group.inverse_rank = (0..order as u32)
            .map(|r| {
                let inv = Perm(group.perm(r).to_vec()).inverse();
                group.rank(&inv.0)
            })
            .collect();
        group
    }

    fn order(&self) -> u32 {
        (self.flat.len() / self.n) as u32
    }

    fn perm(&self, rank: u32) -> &[u8] {
        let start = rank as usize * self.n;
        &self.flat[start..start + self.n]
    }

    /// Lehmer-code rank in lexicographic order.
    fn rank(&self, p: &[u8]) -> u32 {
        let mut rank = 0u32;
        for i in 0..self.n {
            let smaller = p[i + 1..].iter().filter(|&&q| q < p[i]).count() as u32;
            rank = rank * (self.n - i) as u32 + smaller;
        }
        rank
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Fails unless enumerating `Hom(Γ, S_n)` for this kind is within bounds.
pub fn check_feasible(kind: GroupKind, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Zero("n"));
    }
    if n > MAX_DEGREE {
        return Err(Error::Resource(format!(
            "degree {n} exceeds the oracle limit {MAX_DEGREE}"
        )));
    }
    let order = (1..=n as u64).product::<u64>();
    let gens = kind.generator_count() as u32;
    match order.checked_pow(gens) {
        Some(total) if total <= MAX_TUPLES => Ok(()),
        _ => Err(Error::Resource(format!(
            "{kind} at degree {n} needs ({n}!)^{gens} tuples, over the limit {MAX_TUPLES}"
        ))),
    }
}

/// Enumeration of `Hom(Γ, S_n)` by ranks of generator images.
///
/// Tuples are indexed in mixed radix `n!` with the first generator most
/// significant, which is also the order they are visited in.
struct HomSpace {
    group: SymmetricGroup,
    gens: usize,
    relator: Word,
}

impl HomSpace {
    fn new(kind: GroupKind, n: u32) -> Result<Self> {
        check_feasible(kind, n)?;
        Ok(Self {
            group: SymmetricGroup::new(n as usize),
            gens: kind.generator_count(),
            relator: relator(kind),
        })
    }

    fn n(&self) -> usize {
        self.group.n
    }

    fn index(&self, ranks: &[u32]) -> u32 {
        let base = self.group.order();
        ranks.iter().fold(0, |acc, &r| acc * base + r)
    }

    fn satisfies(&self, ranks: &[u32]) -> bool {
        if self.relator.is_empty() {
            return true;
        }
        (0..self.n()).all(|x| {
            let end = self.relator.iter().fold(x, |y, l| {
                let r = ranks[l.generator];
                let r = if l.inverse { self.group.inverse_rank[r as usize] } else { r };
                self.group.perm(r)[y] as usize
            });
            end == x
        })
    }

    fn tuple(&self, ranks: &[u32]) -> PermutationTuple {
        PermutationTuple {
            images: ranks.iter().map(|&r| Perm(self.group.perm(r).to_vec())).collect(),
        }
    }

    /// Calls `visit` on the ranks of every relation-satisfying tuple whose
    /// first image has rank `first`, in index order.
    fn scan_prefix(&self, first: u32, mut visit: impl FnMut(&[u32])) {
        let base = self.group.order();
        let mut ranks = vec![0u32; self.gens];
        ranks[0] = first;
        loop {
            if self.satisfies(&ranks) {
                visit(&ranks);
            }
            // Odometer over positions 1.., last position fastest.
            let mut pos = self.gens;
            loop {
                if pos == 1 {
                    return;
                }
                pos -= 1;
                ranks[pos] += 1;
                if ranks[pos] < base {
                    break;
                }
                ranks[pos] = 0;
            }
        }
    }

    fn transitive(&self, ranks: &[u32]) -> bool {
        let mut slices = [&[][..]; 32];
        for (slot, &r) in slices.iter_mut().zip(ranks) {
            *slot = self.group.perm(r);
        }
        is_transitive(&slices[..ranks.len()], self.n())
    }

    /// Parallel fold over first-generator prefixes; partial results are
    /// combined in prefix order.
    fn fold_prefixes<T, F>(&self, per_prefix: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u32) -> T + Sync + Send,
    {
        (0..self.group.order()).into_par_iter().map(&per_prefix).collect()
    }
}

/// Every generator tuple in `S_n` satisfying the defining relation, each once.
/// Transitivity is not filtered.
pub fn enumerate_relation_homs(kind: GroupKind, n: u32) -> Result<Vec<PermutationTuple>> {
    let space = HomSpace::new(kind, n)?;
    let chunks = space.fold_prefixes(|first| {
        let mut out = Vec::new();
        space.scan_prefix(first, |ranks| out.push(space.tuple(ranks)));
        out
    });
    Ok(chunks.into_iter().flatten().collect())
}

fn divide_by_factorial(count: u64, n: u32, what: &str) -> Result<BigUint> {
    let denom = factorial(n as u64 - 1);
    let (q, r) = BigUint::from(count).div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "{count} transitive {what} tuples not divisible by ({n}-1)!"
        )));
    }
    Ok(q)
}

/// `M(n)` by counting transitive tuples.
pub fn oracle_count_subgroups(kind: GroupKind, n: u32) -> Result<BigUint> {
    let space = HomSpace::new(kind, n)?;
    let count: u64 = space
        .fold_prefixes(|first| {
            let mut c = 0u64;
            space.scan_prefix(first, |ranks| c += space.transitive(ranks) as u64);
            c
        })
        .into_iter()
        .sum();
    divide_by_factorial(count, n, "")
}

struct DisjointSets {
    parent: Vec<u32>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        Self { parent: (0..len as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }

    fn roots(&mut self) -> usize {
        (0..self.parent.len() as u32).filter(|&x| self.find(x) == x).count()
    }
}

/// `N(n)`: orbits of transitive tuples under simultaneous conjugation.
///
/// Orbits are merged with union-find along conjugation by the adjacent
/// transpositions `(i i+1)`, which generate `S_n`.
pub fn oracle_count_classes(kind: GroupKind, n: u32) -> Result<BigUint> {
    let space = HomSpace::new(kind, n)?;
    let chunks = space.fold_prefixes(|first| {
        let mut out = Vec::new();
        space.scan_prefix(first, |ranks| {
            if space.transitive(ranks) {
                out.push(space.index(ranks));
            }
        });
        out
    });
    let stored: usize = chunks.iter().map(Vec::len).sum();
    if stored > MAX_STORED {
        return Err(Error::Resource(format!(
            "{kind} at degree {n} has {stored} transitive tuples, over the storage limit {MAX_STORED}"
        )));
    }
    let tuples: Vec<u32> = chunks.into_iter().flatten().collect();
    debug_assert!(tuples.windows(2).all(|w| w[0] < w[1]));

    let n_usize = n as usize;
    let order = space.group.order();
    // conj[t][r] = rank of τ g τ for τ = (t t+1) and g of rank r.
    let conj: Vec<Vec<u32>> = (0..n_usize.saturating_sub(1))
        .map(|t| {
            let mut tau = Perm::identity(n_usize);
            tau.0.swap(t, t + 1);
            (0..order)
                .map(|r| {
                    let g = Perm(space.group.perm(r).to_vec());
                    space.group.rank(&tau.then(&g).then(&tau).0)
                })
                .collect()
        })
        .collect();

    let mut sets = DisjointSets::new(tuples.len());
    let base = order;
    let mut ranks = vec![0u32; space.gens];
    for (pos, &idx) in tuples.iter().enumerate() {
        let mut rest = idx;
        for slot in ranks.iter_mut().rev() {
            *slot = rest % base;
            rest /= base;
        }
        for table in &conj {
            let image = ranks.iter().fold(0u32, |acc, &r| acc * base + table[r as usize]);
            let other = tuples
                .binary_search(&image)
                .map_err(|_| Error::Consistency("conjugate of a transitive tuple missing".into()))?;
            sets.union(pos as u32, other as u32);
        }
    }
    Ok(BigUint::from(sets.roots()))
}

/// Schreier generators of the stabilizer of point 0 in a transitive action,
/// built from a breadth-first coset-table walk. Trivial words are dropped.
pub fn schreier_generators(tuple: &PermutationTuple) -> Result<Vec<Word>> {
    let n = tuple.degree();
    let mut reps: Vec<Option<Word>> = vec![None; n];
    reps[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (g, p) in tuple.images.iter().enumerate() {
            let y = p.apply(x);
            if reps[y].is_none() {
                let mut w = reps[x].clone().expect("visited");
                w.push(Letter::fwd(g));
                reps[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let reps: Vec<Word> = reps
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidGroup("action is not transitive".into()))?;

    let mut gens = Vec::new();
    for (x, rep) in reps.iter().enumerate() {
        for (g, p) in tuple.images.iter().enumerate() {
            let mut word = rep.clone();
            word.push(Letter::fwd(g));
            word.extend(reps[p.apply(x)].iter().rev().map(|l| l.inv()));
            let word = free_reduce(word);
            if !word.is_empty() {
                gens.push(word);
            }
        }
    }
    Ok(gens)
}

fn free_reduce(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Orientation character of `Λ_p` on a word: total exponent mod 2.
pub fn orientation_character(word: &[Letter]) -> u8 {
    (word.len() % 2) as u8
}

/// Whether the stabilizer of point 0 lies in the kernel of the orientation
/// character, i.e. the corresponding covering is orientable.
pub fn stabilizer_is_orientable(tuple: &PermutationTuple) -> Result<bool> {
    Ok(schreier_generators(tuple)?
        .iter()
        .all(|w| orientation_character(w) == 0))
}

/// `(M⁺(n), M⁻(n))` for `Λ_p`, classifying each transitive tuple by the
/// orientability of its point stabilizer.
pub fn oracle_orientable_split(p: u32, n: u32) -> Result<(BigUint, BigUint)> {
    let kind = GroupKind::nonorientable(p)?;
    let space = HomSpace::new(kind, n)?;
    let partial = space.fold_prefixes(|first| {
        let (mut plus, mut minus) = (0u64, 0u64);
        let mut err = None;
        space.scan_prefix(first, |ranks| {
            if !space.transitive(ranks) {
                return;
            }
            match stabilizer_is_orientable(&space.tuple(ranks)) {
                Ok(true) => plus += 1,
                Ok(false) => minus += 1,
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok((plus, minus)),
        }
    });
    let (mut plus, mut minus) = (0u64, 0u64);
    for part in partial {
        let (a, b) = part?;
        plus += a;
        minus += b;
    }
    Ok((
        divide_by_factorial(plus, n, "orientable")?,
        divide_by_factorial(minus, n, "non-orientable")?,
    ))
}

/// `|Epi(H, Z_ℓ)|` by enumerating every admissible image of every generator.
///
/// A torsion generator of order `m` may go to any `x` with `m·x ≡ 0 (mod ℓ)`,
/// a free generator anywhere. Assignments are bucketed by the subgroup of
/// `Z_ℓ` their images generate so far (determined by `gcd(ℓ, images…)`); the
/// answer is the bucket for the whole group.
pub fn oracle_epi_count(h: &HomologySignature, ell: u64) -> Result<BigUint> {
    if ell == 0 {
        return Err(Error::Zero("ell"));
    }
    let gens = h.torsion().len() as u64 + h.rank();
    if gens > MAX_EPI_GENERATORS as u64 || ell > MAX_EPI_ORDER {
        return Err(Error::Resource(format!(
            "epimorphism oracle limited to {MAX_EPI_GENERATORS} generators and order {MAX_EPI_ORDER}"
        )));
    }
    let orders = h
        .torsion()
        .iter()
        .map(|&m| Some(m))
        .chain((0..h.rank()).map(|_| None));
    let mut buckets: BTreeMap<u64, u64> = BTreeMap::from([(ell, 1)]);
    for order in orders {
        let mut next = BTreeMap::new();
        for (&g, &count) in &buckets {
            for x in 0..ell {
                if let Some(m) = order {
                    if (m * x) % ell != 0 {
                        continue;
                    }
                }
                *next.entry(num_integer::gcd(g, x)).or_insert(0) += count;
            }
        }
        buckets = next;
    }
    Ok(BigUint::from(buckets.get(&1).copied().unwrap_or(0)))
}
