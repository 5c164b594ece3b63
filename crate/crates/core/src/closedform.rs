//! Closed forms for the number of subgroups `f` and the factorization number
//! `F2` of `Z_{p^l1} x Z_{p^l2} x Z_{p^l3}`.
//!
//! Each formula is written once, generically over [`Arith`], and evaluated
//! either at a concrete prime (big integers) or symbolically in `p`
//! (integer polynomials). Arguments that fall out of descending order are
//! re-sorted, and any triple with a negative entry counts zero subgroups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::exactpoly::{InexactDivision, IntPolynomial};
use crate::grouptypes::GroupType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Evaluate at this prime.
    Numeric(u64),
    /// Keep `p` as an indeterminate.
    Symbolic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The subgroup-count quotient `A / ((p^2-1)^2 (p-1))`.
    Eq3,
    /// The eight-term alternating sum of squared subgroup counts.
    Theorem3,
    /// The four-term specialization for equal exponents.
    Corollary4,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Eq3 => "eq3",
            Method::Theorem3 => "theorem3",
            Method::Corollary4 => "corollary4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaValue {
    Numeric(BigInt),
    Symbolic(IntPolynomial),
}

impl std::fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormulaValue::Numeric(n) => write!(f, "{n}"),
            FormulaValue::Symbolic(poly) => write!(f, "{poly}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: FormulaValue,
    pub method: Method,
}

impl FormulaResult {
    pub fn integer(&self) -> Option<&BigInt> {
        match &self.value {
            FormulaValue::Numeric(n) => Some(n),
            FormulaValue::Symbolic(_) => None,
        }
    }

    pub fn polynomial(&self) -> Option<&IntPolynomial> {
        match &self.value {
            FormulaValue::Symbolic(poly) => Some(poly),
            FormulaValue::Numeric(_) => None,
        }
    }
}

/// The exact ring operations the formulas need.
pub trait Arith: Clone {
    fn int(c: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn pow(&self, k: u32) -> Self;
    fn div_exact(&self, den: &Self) -> Result<Self, InexactDivision>;
}

impl Arith for BigInt {
    fn int(c: i64) -> Self {
        BigInt::from(c)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn pow(&self, k: u32) -> Self {
        Pow::pow(self, k)
    }
    fn div_exact(&self, den: &Self) -> Result<Self, InexactDivision> {
        let (q, r) = self.div_rem(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(InexactDivision {
                num: IntPolynomial::constant(self.clone()),
                den: IntPolynomial::constant(den.clone()),
            })
        }
    }
}

impl Arith for IntPolynomial {
    fn int(c: i64) -> Self {
        IntPolynomial::constant(c)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn pow(&self, k: u32) -> Self {
        IntPolynomial::pow(self, k)
    }
    fn div_exact(&self, den: &Self) -> Result<Self, InexactDivision> {
        IntPolynomial::div_exact(self, den)
    }
}

/// The numerator `A` of the subgroup-count formula.
pub fn subgroup_numerator<R: Arith>(t: GroupType, p: &R) -> R {
    let [l1, l2, l3] = t.exponents().map(i64::from);
    let [_, e2, e3] = t.exponents();
    let s = e2 + e3;
    let d = 2 * e3;
    let term = |c: i64, k: u32| R::int(c).mul(&p.pow(k));
    let terms = [
        term((l3 + 1) * (l1 - l2 + 1), s + 5),
        term(2 * (l3 + 1), s + 4),
        term(-2 * (l3 + 1) * (l1 - l2), s + 3),
        term(-2 * (l3 + 1), s + 2),
        term((l3 + 1) * (l1 - l2 - 1), s + 1),
        term(-(l1 + l2 - l3 + 3), d + 4),
        term(-2, d + 3),
        term(l1 + l2 - l3 - 1, d + 2),
        term(l1 + l2 + l3 + 5, 2),
        term(2, 1),
        term(-(l1 + l2 + l3 + 1), 0),
    ];
    terms.iter().fold(R::int(0), |acc, x| acc.add(x))
}

/// `(p^2 - 1)^2 (p - 1)`.
pub fn subgroup_denominator<R: Arith>(p: &R) -> R {
    let one = R::int(1);
    let a = p.pow(2).sub(&one);
    a.mul(&a).mul(&p.sub(&one))
}

pub fn count_generic<R: Arith>(t: GroupType, p: &R) -> Result<R, InexactDivision> {
    subgroup_numerator(t, p).div_exact(&subgroup_denominator(p))
}

pub fn f_ext_generic<R: Arith>(raw: [i64; 3], p: &R) -> Result<R, InexactDivision> {
    match GroupType::normalize(raw) {
        Ok(t) => count_generic(t, p),
        Err(_) => Ok(R::int(0)),
    }
}

fn f_squared<R: Arith>(raw: [i64; 3], p: &R) -> Result<R, InexactDivision> {
    let f = f_ext_generic(raw, p)?;
    Ok(f.mul(&f))
}

pub fn theorem3_generic<R: Arith>(t: GroupType, p: &R) -> Result<R, InexactDivision> {
    let [a, b, c] = t.exponents().map(i64::from);
    let one = R::int(1);
    let p2 = p.pow(2);
    let p3 = p.pow(3);
    // (coefficient, sign, argument)
    let terms: [(&R, bool, [i64; 3]); 8] = [
        (&p3, false, [a - 1, b - 1, c - 1]),
        (p, true, [a - 1, b - 1, c]),
        (&p2, true, [a - 1, b, c - 1]),
        (&p3, true, [a, b - 1, c - 1]),
        (&one, false, [a - 1, b, c]),
        (p, false, [a, b - 1, c]),
        (&p2, false, [a, b, c - 1]),
        (&one, true, [a, b, c]),
    ];
    let mut acc = R::int(0);
    for (coeff, positive, arg) in terms {
        let x = coeff.mul(&f_squared(arg, p)?);
        acc = if positive { acc.add(&x) } else { acc.sub(&x) };
    }
    Ok(acc)
}

pub fn corollary4_generic<R: Arith>(lambda: u32, p: &R) -> Result<R, InexactDivision> {
    let l = i64::from(lambda);
    let one = R::int(1);
    let p3 = p.pow(3);
    let q = one.add(p).add(&p.pow(2));
    let t1 = p3.mul(&f_squared([l - 1, l - 1, l - 1], p)?);
    let t2 = p.mul(&q).mul(&f_squared([l, l - 1, l - 1], p)?);
    let t3 = q.mul(&f_squared([l, l, l - 1], p)?);
    let t4 = f_squared([l, l, l], p)?;
    Ok(t2.sub(&t1).sub(&t3).add(&t4))
}

fn run(
    mode: Mode,
    method: Method,
    numeric: impl FnOnce(&BigInt) -> Result<BigInt, InexactDivision>,
    symbolic: impl FnOnce(&IntPolynomial) -> Result<IntPolynomial, InexactDivision>,
) -> Result<FormulaResult, InexactDivision> {
    let value = match mode {
        Mode::Numeric(p) => FormulaValue::Numeric(numeric(&BigInt::from(p))?),
        Mode::Symbolic => FormulaValue::Symbolic(symbolic(&IntPolynomial::p())?),
    };
    Ok(FormulaResult { value, method })
}

/// Number of subgroups of the group of type `t`.
pub fn subgroup_count_f(t: GroupType, mode: Mode) -> Result<FormulaResult, InexactDivision> {
    run(
        mode,
        Method::Eq3,
        |p| count_generic(t, p),
        |p| count_generic(t, p),
    )
}

/// Like [`subgroup_count_f`] on any triple: unsorted triples are sorted,
/// triples with a negative entry give zero.
pub fn f_ext(raw: [i64; 3], mode: Mode) -> Result<FormulaResult, InexactDivision> {
    run(
        mode,
        Method::Eq3,
        |p| f_ext_generic(raw, p),
        |p| f_ext_generic(raw, p),
    )
}

pub fn f2_theorem3(t: GroupType, mode: Mode) -> Result<FormulaResult, InexactDivision> {
    run(
        mode,
        Method::Theorem3,
        |p| theorem3_generic(t, p),
        |p| theorem3_generic(t, p),
    )
}

pub fn f2_corollary4(lambda: u32, mode: Mode) -> Result<FormulaResult, InexactDivision> {
    run(
        mode,
        Method::Corollary4,
        |p| corollary4_generic(lambda, p),
        |p| corollary4_generic(lambda, p),
    )
}

/// Numeric subgroup count at a prime.
pub fn subgroup_count(t: GroupType, p: u64) -> BigInt {
    count_generic(t, &BigInt::from(p)).expect("subgroup count divides exactly")
}

/// Numeric factorization number at a prime.
pub fn f2(t: GroupType, p: u64) -> BigInt {
    theorem3_generic(t, &BigInt::from(p)).expect("subgroup count divides exactly")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u32, b: u32, c: u32) -> GroupType {
        GroupType::new(a, b, c).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    fn symbolic(r: Result<FormulaResult, InexactDivision>) -> IntPolynomial {
        r.unwrap().polynomial().unwrap().clone()
    }

    fn numeric(r: Result<FormulaResult, InexactDivision>) -> BigInt {
        r.unwrap().integer().unwrap().clone()
    }

    /// Gaussian binomial `[n k]_q` by the product formula on plain integers.
    fn gauss(n: u32, k: u32, q: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (q.pow(n - i) - 1) / (q.pow(i + 1) - 1))
    }

    #[test]
    fn numerator_matches_hand_expansion() {
        let a = subgroup_numerator(t(1, 1, 0), &IntPolynomial::p());
        assert_eq!(a, poly(&[-3, 2, 7, -4, -5, 2, 1]));
        let a = subgroup_numerator(t(3, 2, 1), &BigInt::from(2));
        assert_eq!(a, BigInt::from(729));
    }

    #[test]
    fn count_elementary_rank3() {
        // 1 + [3 1] + [3 2] + 1 subspaces of F_p^3
        let f = symbolic(subgroup_count_f(t(1, 1, 1), Mode::Symbolic));
        assert_eq!(f, poly(&[4, 2, 2]));
        for q in [2, 3, 5, 7] {
            let subspaces = gauss(3, 0, q) + gauss(3, 1, q) + gauss(3, 2, q) + gauss(3, 3, q);
            assert_eq!(f.eval(&BigInt::from(q)), BigInt::from(subspaces));
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(numeric(subgroup_count_f(t(3, 2, 1), Mode::Numeric(2))), BigInt::from(81));
        assert_eq!(symbolic(subgroup_count_f(t(1, 1, 0), Mode::Symbolic)), poly(&[3, 1]));
        for p in [2, 3, 5, 11] {
            assert_eq!(numeric(subgroup_count_f(t(2, 0, 0), Mode::Numeric(p))), BigInt::from(3));
        }
        assert_eq!(symbolic(subgroup_count_f(t(2, 0, 0), Mode::Symbolic)), poly(&[3]));
    }

    #[test]
    fn extended_count() {
        assert!(symbolic(f_ext([1, 0, -1], Mode::Symbolic)).is_zero());
        assert_eq!(numeric(f_ext([1, 0, -1], Mode::Numeric(3))), BigInt::from(0));
        assert_eq!(symbolic(f_ext([0, 0, 0], Mode::Symbolic)), poly(&[1]));
        assert_eq!(symbolic(f_ext([0, 1, 1], Mode::Symbolic)), poly(&[3, 1]));
    }

    /// Brute-force counts: 1635 at p = 2 for (3,2,1); 4387 at p = 2 and
    /// 67969 at p = 3 for (2,2,2), which fixes the p^7 coefficient at 8.
    #[test]
    fn theorem3_golden() {
        assert_eq!(
            symbolic(f2_theorem3(t(3, 2, 1), Mode::Symbolic)),
            poly(&[13, 11, 20, 16, 21, 15, 9])
        );
        assert_eq!(
            symbolic(f2_theorem3(t(2, 2, 2), Mode::Symbolic)),
            poly(&[13, 11, 20, 16, 21, 15, 16, 8, 5])
        );
        let b = symbolic(f2_theorem3(t(2, 2, 2), Mode::Symbolic));
        assert_eq!(b.eval(&BigInt::from(2)), BigInt::from(4387));
        assert_eq!(b.eval(&BigInt::from(3)), BigInt::from(67969));
    }

    #[test]
    fn theorem3_elementary_rank3() {
        // Mobius sum over subspaces of F_p^3 with |L(G/H)| = 2p^2+2p+4, p+3, 2, 1
        // and Hall values 1, -1, p, -p^3:
        //   (2p^2+2p+4)^2 - (p^2+p+1)(p+3)^2 + p(p^2+p+1)*4 - p^3
        let pp = IntPolynomial::p();
        let lines = poly(&[1, 1, 1]);
        let expected = poly(&[4, 2, 2]).pow(2) - &lines * &poly(&[3, 1]).pow(2)
            + (&pp * &lines).scale(&BigInt::from(4))
            - pp.pow(3);
        assert_eq!(expected, poly(&[7, 5, 8, 4, 3]));
        assert_eq!(symbolic(f2_theorem3(t(1, 1, 1), Mode::Symbolic)), expected);
        assert_eq!(expected.eval(&BigInt::from(2)), BigInt::from(129));
    }

    #[test]
    fn theorem3_cyclic() {
        for l in 0..8 {
            for p in [2, 3, 5] {
                let v = numeric(f2_theorem3(t(l, 0, 0), Mode::Numeric(p)));
                assert_eq!(v, BigInt::from(2 * l + 1));
            }
        }
        assert_eq!(numeric(f2_theorem3(t(3, 0, 0), Mode::Numeric(2))), BigInt::from(7));
    }

    #[test]
    fn theorem3_rank2_elementary() {
        // Z_p x Z_p: 2(p+3) - 1 pairs involving G, plus (p+1)p ordered pairs of distinct lines
        assert_eq!(
            symbolic(f2_theorem3(t(1, 1, 0), Mode::Symbolic)),
            poly(&[5, 3, 1])
        );
    }

    #[test]
    fn corollary4_examples() {
        assert_eq!(
            symbolic(f2_corollary4(2, Mode::Symbolic)),
            poly(&[13, 11, 20, 16, 21, 15, 16, 8, 5])
        );
        assert_eq!(symbolic(f2_corollary4(1, Mode::Symbolic)), poly(&[7, 5, 8, 4, 3]));
        assert_eq!(symbolic(f2_corollary4(0, Mode::Symbolic)), poly(&[1]));
        assert_eq!(numeric(f2_corollary4(0, Mode::Numeric(5))), BigInt::from(1));
    }

    #[test]
    fn corollary4_matches_theorem3() {
        for l in 0..=4 {
            assert_eq!(
                symbolic(f2_corollary4(l, Mode::Symbolic)),
                symbolic(f2_theorem3(t(l, l, l), Mode::Symbolic)),
                "lambda = {l}"
            );
        }
    }

    #[test]
    fn symbolic_division_is_exact_on_grid() {
        for ty in GroupType::grid(4) {
            subgroup_count_f(ty, Mode::Symbolic).unwrap_or_else(|e| panic!("{ty}: {e}"));
        }
    }

    #[test]
    fn modes_agree_on_grid() {
        for ty in GroupType::grid(4) {
            let f = symbolic(subgroup_count_f(ty, Mode::Symbolic));
            let f2 = symbolic(f2_theorem3(ty, Mode::Symbolic));
            for p in [2u64, 3, 5] {
                let x = BigInt::from(p);
                assert_eq!(f.eval(&x), numeric(subgroup_count_f(ty, Mode::Numeric(p))));
                assert_eq!(f2.eval(&x), numeric(f2_theorem3(ty, Mode::Numeric(p))));
            }
        }
        for l in 0..=4 {
            let c4 = symbolic(f2_corollary4(l, Mode::Symbolic));
            for p in [2u64, 3, 5] {
                assert_eq!(c4.eval(&BigInt::from(p)), numeric(f2_corollary4(l, Mode::Numeric(p))));
            }
        }
    }

    #[test]
    fn count_grows_with_first_exponent() {
        for ty in GroupType::grid(4) {
            let [a, b, c] = ty.exponents();
            let bigger = t(a + 1, b, c);
            for p in [2, 3] {
                assert!(subgroup_count(ty, p) < subgroup_count(bigger, p), "{ty} at p={p}");
            }
        }
    }

    #[test]
    fn generic_numeric_division_reports_remainder() {
        let err = BigInt::from(7).div_exact(&BigInt::from(2)).unwrap_err();
        assert_eq!(err.num, IntPolynomial::constant(7));
    }
}
