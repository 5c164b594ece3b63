//! Isomorphism types of abelian p-groups of rank at most three.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Pow;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("negative exponent in {0:?}")]
    NegativeExponent([i64; 3]),
    #[error("exponents must be descending, got {0:?}")]
    NotDescending([u32; 3]),
    #[error("cannot parse group type {0:?}: expected three comma-separated integers")]
    Parse(String),
}

/// `Z_{p^l1} x Z_{p^l2} x Z_{p^l3}` with `l1 >= l2 >= l3 >= 0`.
///
/// Smaller ranks are padded with trailing zeros. The derived ordering is
/// lexicographic on the exponent triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType([u32; 3]);

impl GroupType {
    pub const TRIVIAL: GroupType = GroupType([0, 0, 0]);

    /// Accepts an already descending triple.
    pub fn new(l1: u32, l2: u32, l3: u32) -> Result<Self, TypeError> {
        if l1 >= l2 && l2 >= l3 {
            Ok(Self([l1, l2, l3]))
        } else {
            Err(TypeError::NotDescending([l1, l2, l3]))
        }
    }

    /// Sorts any nonnegative triple into canonical order.
    pub fn normalize(raw: [i64; 3]) -> Result<Self, TypeError> {
        if raw.iter().any(|&x| x < 0) {
            return Err(TypeError::NegativeExponent(raw));
        }
        let mut e = raw.map(|x| u32::try_from(x).expect("exponent fits in u32"));
        e.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(e))
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn order(&self, p: u64) -> BigInt {
        BigInt::from(p).pow(self.total_exponent())
    }

    /// Every exponent at most one; includes the trivial group.
    pub fn is_elementary_abelian(&self) -> bool {
        self.0.iter().all(|&x| x <= 1)
    }

    /// All descending types with `max >= l1 >= l2 >= l3 >= 0`, in lexicographic order.
    pub fn grid(max: u32) -> Vec<GroupType> {
        let mut out = Vec::new();
        for l1 in 0..=max {
            for l2 in 0..=l1 {
                for l3 in 0..=l2 {
                    out.push(Self([l1, l2, l3]));
                }
            }
        }
        out.sort();
        out
    }
}

pub fn normalize(raw: [i64; 3]) -> Result<GroupType, TypeError> {
    GroupType::normalize(raw)
}

pub fn group_order(t: GroupType, p: u64) -> BigInt {
    t.order(p)
}

pub fn is_elementary_abelian(t: GroupType) -> bool {
    t.is_elementary_abelian()
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{a},{b},{c}")
    }
}

/// Parses `l1,l2,l3`. The triple must already be descending.
impl FromStr for GroupType {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let parsed: Option<Vec<u32>> = parts.iter().map(|x| x.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[a, b, c]) => Self::new(a, b, c),
            _ => Err(TypeError::Parse(s.to_string())),
        }
    }
}
