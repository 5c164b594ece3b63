//! Factorization numbers by Möbius inversion over the subgroup lattice.
//!
//! In a finite p-group only elementary abelian subgroups carry a nonzero
//! Möbius value, and in a group of rank `r` those are exactly the subgroups
//! of the socle `Ω₁(G) ≅ F_p^r`. So
//!
//! ```text
//! F2(G) = Σ_{E ≤ Ω₁(G)} |L(G/E)|² · μ(E)
//! ```
//!
//! runs over subspaces of `F_p^r`. The type of each quotient `G/E` comes out
//! of a Smith normal form computation, and `|L(G/E)|` from the closed-form
//! subgroup count.

pub mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::closedform::subgroup_count;
use crate::grouptypes::GroupType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("subspace of dimension {dim} in F_p^{ambient} does not fit in a group of rank {rank}")]
    InvalidSubspace {
        dim: usize,
        ambient: usize,
        rank: usize,
    },
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: u32, k: u32, p: u64) -> BigInt {
    assert!(k <= n, "gaussian_binomial needs k <= n");
    let q = BigInt::from(p);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= Pow::pow(&q, n - i) - 1u32;
        den *= Pow::pow(&q, k - i) - 1u32;
    }
    num / den
}

/// A subspace of `F_p^ambient`, stored by its reduced row echelon basis.
///
/// Rows are padded to three coordinates. Two equal subspaces have identical
/// representations, so derived equality is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<[u64; 3]>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[[u64; 3]] {
        &self.basis
    }

    /// Canonical checks: nonzero rows, increasing pivots equal to one, zeros
    /// above and below each pivot.
    pub fn is_reduced(&self) -> bool {
        let mut last: Option<usize> = None;
        for (i, row) in self.basis.iter().enumerate() {
            let Some(c) = row.iter().position(|&x| x != 0) else {
                return false;
            };
            if row[c] != 1 || c >= self.ambient || last.is_some_and(|l| c <= l) {
                return false;
            }
            if row[self.ambient..].iter().any(|&x| x != 0) {
                return false;
            }
            if self
                .basis
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && other[c] != 0)
            {
                return false;
            }
            last = Some(c);
        }
        true
    }
}

/// All `k`-dimensional subspaces of `F_p^r`, sorted lexicographically by
/// their row-major RREF entries.
pub fn enumerate_subspaces(r: usize, k: usize, p: u64) -> Vec<Subspace> {
    assert!(k <= r && r <= 3, "need k <= r <= 3");
    let mut out = Vec::new();
    for pivots in combinations(r, k) {
        // free slots: (row, col) right of the row's pivot, outside pivot columns
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| {
                let pivots = &pivots;
                (c + 1..r)
                    .filter(move |j| !pivots.contains(j))
                    .map(move |j| (i, j))
            })
            .collect();
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut basis = vec![[0u64; 3]; k];
            for (i, &c) in pivots.iter().enumerate() {
                basis[i][c] = 1;
            }
            for (&(i, j), &d) in free.iter().zip(&digits) {
                basis[i][j] = d;
            }
            out.push(Subspace { ambient: r, basis });
            if !odometer(&mut digits, p) {
                break;
            }
        }
    }
    out.sort();
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in combinations(n, k - 1) {
            if rest.first().is_none_or(|&x| x > first) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
    }
    out
}

fn odometer(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Hall's value `μ(1, G)` for a p-group of type `t`.
pub fn hall_mobius(t: GroupType, p: u64) -> BigInt {
    if !t.is_elementary_abelian() {
        return BigInt::zero();
    }
    let n = t.rank() as u32;
    let mag = Pow::pow(BigInt::from(p), n * n.saturating_sub(1) / 2);
    if n.is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// Type of `G / Ê`, where `Ê` lifts `E` into the socle of `G`: the socle
/// coordinate `a_j` maps to `p^{λ_j - 1} a_j` in the `j`-th cyclic factor.
pub fn quotient_type(t: GroupType, e: &Subspace, p: u64) -> Result<GroupType, QuotientError> {
    let rank = t.rank();
    let outside = e.basis.iter().any(|row| row[rank..].iter().any(|&x| x != 0));
    if e.dim() > rank || outside {
        return Err(QuotientError::InvalidSubspace {
            dim: e.dim(),
            ambient: e.ambient(),
            rank,
        });
    }
    let lambdas = t.exponents();
    let q = BigInt::from(p);
    // relation columns: p^{λ_j} e_j, then the lifted basis vectors
    let mut matrix = vec![vec![BigInt::zero(); 3 + e.dim()]; 3];
    for (j, &l) in lambdas.iter().enumerate() {
        matrix[j][j] = Pow::pow(&q, l);
    }
    for (c, row) in e.basis().iter().enumerate() {
        for j in 0..rank {
            matrix[j][3 + c] = Pow::pow(&q, lambdas[j] - 1) * row[j];
        }
    }
    let factors = snf::invariant_factors(&matrix);
    assert_eq!(factors.len(), 3, "relation matrix has full rank");
    let mut valuations = [0i64; 3];
    for (v, d) in valuations.iter_mut().zip(&factors) {
        *v = p_valuation(d, &q);
    }
    Ok(GroupType::normalize(valuations).expect("valuations are nonnegative"))
}

fn p_valuation(d: &BigInt, p: &BigInt) -> i64 {
    let mut d = d.clone();
    let mut v = 0;
    while (&d % p).is_zero() {
        d /= p;
        v += 1;
    }
    assert!(d.is_one(), "invariant factor is a power of p");
    v
}

/// Quotient types of `G` by all subgroups of order `p^k` in the socle, with
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCensus {
    pub k: usize,
    pub entries: BTreeMap<GroupType, u64>,
}

impl QuotientCensus {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

pub fn quotient_type_census(t: GroupType, k: usize, p: u64) -> QuotientCensus {
    assert!(k <= t.rank(), "census needs k <= rank");
    let mut entries = BTreeMap::new();
    for e in enumerate_subspaces(t.rank(), k, p) {
        let q = quotient_type(t, &e, p).expect("subspace fits the socle");
        *entries.entry(q).or_insert(0) += 1;
    }
    QuotientCensus { k, entries }
}

/// The classification of quotients by socle subgroups of order `p` (k = 1)
/// and `p^2` (k = 2) for a rank-3 type: `p^2`, `p` and `1` quotients of the
/// three listed types, merged after normalization.
pub fn expected_census(t: GroupType, k: usize, p: u64) -> QuotientCensus {
    assert_eq!(t.rank(), 3, "classification is stated for rank 3");
    let [a, b, c] = t.exponents().map(i64::from);
    let shapes = match k {
        1 => [[a, b, c - 1], [a, b - 1, c], [a - 1, b, c]],
        2 => [[a, b - 1, c - 1], [a - 1, b, c - 1], [a - 1, b - 1, c]],
        _ => panic!("classification covers k = 1 and k = 2 only"),
    };
    let mut entries = BTreeMap::new();
    for (shape, mult) in shapes.into_iter().zip([p * p, p, 1]) {
        let ty = GroupType::normalize(shape).expect("rank 3 keeps exponents nonnegative");
        *entries.entry(ty).or_insert(0) += mult;
    }
    QuotientCensus { k, entries }
}

/// `F2(G)` as the sum over socle subspaces of `f(G/E)^2 μ(E)`.
pub fn f2_via_mobius(t: GroupType, p: u64) -> BigInt {
    let r = t.rank();
    let mut total = BigInt::zero();
    for k in 0..=r {
        let mu = hall_mobius(elementary(k), p);
        for e in enumerate_subspaces(r, k, p) {
            let q = quotient_type(t, &e, p).expect("subspace fits the socle");
            let f = subgroup_count(q, p);
            total += &f * &f * &mu;
        }
    }
    total
}

fn elementary(k: usize) -> GroupType {
    let mut e = [0i64; 3];
    e[..k].fill(1);
    GroupType::normalize(e).expect("nonnegative")
}
