//! Brute-force ground truth on explicit groups `Z_{p^l1} x Z_{p^l2} x Z_{p^l3}`.
//!
//! Elements are enumerated and indexed, subgroups are membership bit vectors,
//! and the whole subgroup lattice is built by join closure starting from the
//! cyclic subgroups. Nothing here uses the closed forms or the socle
//! parametrization; it only counts.

pub mod bitset;

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::grouptypes::GroupType;
use crate::mobius_engine::hall_mobius;
use crate::report::VerificationReport;

pub use bitset::BitSet;

pub const DEFAULT_MAX_ORDER: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("group of order {order} exceeds the element cap {cap}")]
    TooLarge { order: BigInt, cap: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup {0} is not contained in subgroup {1}")]
    NotComparable(usize, usize),
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// An explicit abelian p-group with lexicographically indexed elements.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    p: u64,
    ty: GroupType,
    moduli: [u64; 3],
    elements: Vec<[u64; 3]>,
}

impl ConcreteGroup {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group_type(&self) -> GroupType {
        self.ty
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> [u64; 3] {
        self.elements[i]
    }

    pub fn index(&self, a: [u64; 3]) -> usize {
        let [_, m2, m3] = self.moduli;
        (a[0] * m2 * m3 + a[1] * m3 + a[2]) as usize
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        let (x, y) = (self.elements[i], self.elements[j]);
        self.index(std::array::from_fn(|c| (x[c] + y[c]) % self.moduli[c]))
    }

    pub fn neg(&self, i: usize) -> usize {
        let x = self.elements[i];
        self.index(std::array::from_fn(|c| (self.moduli[c] - x[c]) % self.moduli[c]))
    }

    /// `k * x`.
    pub fn scale(&self, k: u64, i: usize) -> usize {
        let x = self.elements[i];
        self.index(std::array::from_fn(|c| {
            ((k as u128 * x[c] as u128) % self.moduli[c] as u128) as u64
        }))
    }

    fn full_set(&self) -> BitSet {
        let mut s = BitSet::new(self.order());
        (0..self.order()).for_each(|i| s.insert(i));
        s
    }

    /// The cyclic subgroup generated by element `x`.
    pub fn cyclic(&self, x: usize) -> BitSet {
        let mut s = BitSet::new(self.order());
        let mut y = 0;
        loop {
            s.insert(y);
            y = self.add(y, x);
            if y == 0 {
                return s;
            }
        }
    }

    /// `S + <x>`, assembled coset by coset.
    fn extend(&self, s: &BitSet, x: usize) -> BitSet {
        let mut out = s.clone();
        let mut shift = x;
        while !s.contains(shift) {
            for m in s.ones() {
                out.insert(self.add(m, shift));
            }
            shift = self.add(shift, x);
        }
        out
    }

    /// Subgroup generated by the union of two subgroups, given generators of the second.
    pub fn join(&self, h: &BitSet, k_gens: &[usize]) -> BitSet {
        k_gens.iter().fold(h.clone(), |acc, &g| {
            if acc.contains(g) {
                acc
            } else {
                self.extend(&acc, g)
            }
        })
    }

    /// `log_p |{x in S : p^k x ∈ target}|` for `k = 0, 1, ...` until it stabilizes.
    fn kernel_census(&self, s: &BitSet, target: &BitSet) -> Vec<u32> {
        let mut out = Vec::new();
        let mut pk = 1u64;
        loop {
            let n = s.ones().filter(|&x| target.contains(self.scale(pk, x))).count();
            let e = log_p(n as u64, self.p);
            out.push(e);
            if n == s.count_ones() {
                return out;
            }
            pk *= self.p;
        }
    }
}

fn log_p(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 1 {
        assert_eq!(n % p, 0, "size is a power of p");
        n /= p;
        e += 1;
    }
    e
}

/// Rebuilds a partition from its conjugate given as a cumulative census:
/// `census[k] - census[k-1]` is the number of parts `>= k`.
fn type_from_census(census: &[u32]) -> GroupType {
    let conj: Vec<u32> = census.windows(2).map(|w| w[1] - w[0]).collect();
    let parts = std::array::from_fn(|i| conj.iter().filter(|&&c| c as usize > i).count() as i64);
    assert!(conj.first().is_none_or(|&c| c <= 3), "rank exceeds three");
    GroupType::normalize(parts).expect("nonnegative parts")
}

pub fn build_group(t: GroupType, p: u64, max_order: u64) -> Result<ConcreteGroup, OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    let order = t.order(p);
    if order > BigInt::from(max_order) {
        return Err(OracleError::TooLarge {
            order,
            cap: max_order,
        });
    }
    let moduli = t.exponents().map(|l| p.pow(l));
    let mut elements = Vec::with_capacity(order.to_usize().expect("capped order"));
    for a in 0..moduli[0] {
        for b in 0..moduli[1] {
            for c in 0..moduli[2] {
                elements.push([a, b, c]);
            }
        }
    }
    Ok(ConcreteGroup {
        p,
        ty: t,
        moduli,
        elements,
    })
}

#[derive(Debug, Clone)]
pub struct SubgroupSet {
    pub id: usize,
    pub members: BitSet,
    pub order: usize,
    /// A generating set, as element indices.
    pub generators: Vec<usize>,
}

/// All subgroups, sorted by order and then by member list, with the
/// containment relation precomputed.
#[derive(Debug)]
pub struct Lattice {
    subgroups: Vec<SubgroupSet>,
    /// `up[h]` marks every `k` with `h ≤ k`.
    up: Vec<BitSet>,
    /// `down[k]` lists every `h ≤ k`, ascending.
    down: Vec<Vec<usize>>,
    lookup: HashMap<BitSet, usize>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn get(&self, id: usize) -> &SubgroupSet {
        &self.subgroups[id]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn find(&self, members: &BitSet) -> Option<usize> {
        self.lookup.get(members).copied()
    }

    pub fn leq(&self, h: usize, k: usize) -> bool {
        self.up[h].contains(k)
    }

    /// Number of subgroups of `H`.
    pub fn down_size(&self, h: usize) -> usize {
        self.down[h].len()
    }

    /// Every join and meet of two members is again a member.
    pub fn is_closed(&self, g: &ConcreteGroup) -> bool {
        (0..self.len()).into_par_iter().all(|i| {
            (i..self.len()).all(|j| {
                let (h, k) = (&self.subgroups[i], &self.subgroups[j]);
                self.find(&h.members.and(&k.members)).is_some()
                    && self.find(&g.join(&h.members, &k.generators)).is_some()
            })
        })
    }

    /// `μ(h, ·)`, zero outside the upper interval of `h`.
    fn mobius_row(&self, h: usize) -> &[i64] {
        self.mobius_rows[h].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            for l in self.up[h].ones() {
                row[l] = if l == h {
                    1
                } else {
                    -self.down[l]
                        .iter()
                        .filter(|&&m| m != l && self.up[h].contains(m))
                        .map(|&m| row[m])
                        .sum::<i64>()
                };
            }
            row
        })
    }
}

/// Every subgroup: seed with the cyclic subgroups, then repeatedly join
/// each known subgroup `S` with cyclic subgroups `<x>` such that `p x ∈ S`.
/// Every nontrivial subgroup is such a join over one of its maximal
/// subgroups, so the fixpoint is the full lattice.
pub fn all_subgroups(g: &ConcreteGroup) -> Lattice {
    let mut found: Vec<(BitSet, Vec<usize>)> = Vec::new();
    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    for x in 0..g.order() {
        let c = g.cyclic(x);
        if !seen.contains_key(&c) {
            seen.insert(c.clone(), found.len());
            found.push((c, vec![x]));
        }
    }
    let mut next = 0;
    while next < found.len() {
        let (base, gens) = found[next].clone();
        next += 1;
        // distinct index-p overgroups of `base` meet only in `base`
        let mut covered = base.clone();
        for x in 0..g.order() {
            if covered.contains(x) || !base.contains(g.scale(g.p, x)) {
                continue;
            }
            let joined = g.extend(&base, x);
            covered.union_with(&joined);
            if !seen.contains_key(&joined) {
                seen.insert(joined.clone(), found.len());
                let mut more = gens.clone();
                more.push(x);
                found.push((joined, more));
            }
        }
    }

    found.sort_by(|a, b| {
        a.0.count_ones()
            .cmp(&b.0.count_ones())
            .then_with(|| a.0.cmp_members(&b.0))
    });
    let subgroups: Vec<SubgroupSet> = found
        .into_iter()
        .enumerate()
        .map(|(id, (members, generators))| SubgroupSet {
            id,
            order: members.count_ones(),
            members,
            generators,
        })
        .collect();
    let n = subgroups.len();
    let up: Vec<BitSet> = subgroups
        .par_iter()
        .map(|h| {
            let mut row = BitSet::new(n);
            for k in &subgroups {
                if k.order % h.order == 0 && h.generators.iter().all(|&x| k.members.contains(x)) {
                    row.insert(k.id);
                }
            }
            row
        })
        .collect();
    let mut down = vec![Vec::new(); n];
    for (h, row) in up.iter().enumerate() {
        for k in row.ones() {
            down[k].push(h);
        }
    }
    let lookup = subgroups.iter().map(|s| (s.members.clone(), s.id)).collect();
    Lattice {
        subgroups,
        up,
        down,
        lookup,
        mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
    }
}

/// Isomorphism type of `H`, read off from the sizes of its `p^k`-torsion.
pub fn subgroup_type(g: &ConcreteGroup, h: &SubgroupSet) -> GroupType {
    let mut zero = BitSet::new(g.order());
    zero.insert(0);
    type_from_census(&g.kernel_census(&h.members, &zero))
}

/// Isomorphism type of `G/H`: the coset `x + H` has order dividing `p^k`
/// iff `p^k x ∈ H`.
pub fn quotient_type(g: &ConcreteGroup, h: &SubgroupSet) -> GroupType {
    let census = g.kernel_census(&g.full_set(), &h.members);
    let base = log_p(h.order as u64, g.p);
    let shifted: Vec<u32> = census.iter().map(|&c| c - base).collect();
    type_from_census(&shifted)
}

/// Ordered, unordered and diagonal factorization counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorizationCount {
    pub ordered: u64,
    pub unordered: u64,
    pub self_paired: u64,
}

/// `HK = G` iff `|H||K| = |G||H ∩ K|`, since `HK` is a subgroup here.
fn factorizes(lattice: &Lattice, order: usize, i: usize, j: usize) -> bool {
    let (h, k) = (lattice.get(i), lattice.get(j));
    h.order * k.order == order * h.members.and_count(&k.members)
}

pub fn factorization_census(g: &ConcreteGroup, lattice: &Lattice) -> FactorizationCount {
    let n = lattice.len();
    let order = g.order();
    let (ordered, unordered, self_paired) = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = (0u64, 0u64, 0u64);
            for j in 0..n {
                if factorizes(lattice, order, i, j) {
                    row.0 += 1;
                    if j >= i {
                        row.1 += 1;
                    }
                    if j == i {
                        row.2 += 1;
                    }
                }
            }
            row
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    FactorizationCount {
        ordered,
        unordered,
        self_paired,
    }
}

/// Number of ordered pairs of subgroups `(H, K)` with `HK = G`.
pub fn count_factorizations(g: &ConcreteGroup, lattice: &Lattice) -> u64 {
    factorization_census(g, lattice).ordered
}

/// `|{K : H ≤ K ≤ G}|`, which is `|L(G/H)|`.
pub fn interval_size(lattice: &Lattice, h: usize) -> usize {
    lattice.up[h].count_ones()
}

pub fn mobius_interval(lattice: &Lattice, h: usize, k: usize) -> Result<i64, OracleError> {
    if !lattice.leq(h, k) {
        return Err(OracleError::NotComparable(h, k));
    }
    Ok(lattice.mobius_row(h)[k])
}

/// Checks `μ(1, H)` against Hall's value for every subgroup `H`.
pub fn verify_hall(g: &ConcreteGroup, lattice: &Lattice) -> VerificationReport {
    let mut report = VerificationReport::new(g.group_type(), g.p());
    let bottom = lattice.bottom();
    let mismatches: Vec<(usize, BigInt, i64)> = lattice
        .subgroups()
        .iter()
        .filter_map(|h| {
            let want = hall_mobius(subgroup_type(g, h), g.p());
            let got = mobius_interval(lattice, bottom, h.id).expect("bottom is below everything");
            (want != BigInt::from(got)).then_some((h.id, want, got))
        })
        .collect();
    let n = lattice.len();
    report.compare(
        "hall",
        format!("{n}/{n}"),
        format!("{}/{n}", n - mismatches.len()),
    );
    for (id, want, got) in mismatches {
        report.compare(format!("hall[{id}]"), want, got);
    }
    report
}

/// Evaluates both sides of the Möbius-inversion identity for `F2(G)` and
/// compares them with the direct count. Also checks the top-interval Möbius
/// values against Hall's formula on `G/H`, and the ordered/unordered
/// relation of the count.
pub fn verify_eq2_forms(g: &ConcreteGroup, lattice: &Lattice) -> VerificationReport {
    let mut report = VerificationReport::new(g.group_type(), g.p());
    let top = lattice.top();
    let counts = factorization_census(g, lattice);

    let mut lattice_form = BigInt::zero();
    let mut quotient_form = BigInt::zero();
    let mut duality_failures = 0usize;
    for h in lattice.subgroups() {
        let mu_top = mobius_interval(lattice, h.id, top).expect("top is above everything");
        let below = BigInt::from(lattice.down_size(h.id));
        lattice_form += &below * &below * mu_top;

        let above = BigInt::from(interval_size(lattice, h.id));
        quotient_form += &above * &above * hall_mobius(subgroup_type(g, h), g.p());

        if BigInt::from(mu_top) != hall_mobius(quotient_type(g, h), g.p()) {
            duality_failures += 1;
        }
    }
    report.compare("eq2.lattice_form", counts.ordered, lattice_form);
    report.compare("eq2.quotient_form", counts.ordered, quotient_form);
    report.compare("eq2.top_mobius_mismatches", 0, duality_failures);
    report.compare(
        "eq2.ordered_vs_unordered",
        counts.ordered,
        2 * counts.unordered - counts.self_paired,
    );
    report
}
