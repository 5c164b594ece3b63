//! Dense integer polynomials in a single indeterminate `p`.
//!
//! Coefficients are arbitrary precision and stored constant term first. Every
//! value is kept normalized: the last stored coefficient is nonzero, and the
//! zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("inexact division: {num} is not divisible by {den}")]
pub struct InexactDivision {
    pub num: IntPolynomial,
    pub den: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `p` itself.
    pub fn p() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * p^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut poly = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        poly.normalize();
        poly
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Long division that succeeds only when `den` divides `self` exactly.
    ///
    /// Panics if `den` is the zero polynomial.
    pub fn div_exact(&self, den: &Self) -> Result<Self, InexactDivision> {
        let lead = den.leading_coeff().expect("division by the zero polynomial");
        let inexact = || InexactDivision {
            num: self.clone(),
            den: den.clone(),
        };
        let den_deg = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= den_deg {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(inexact()) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - den_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + den_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(quot))
    }
}

pub fn poly_add(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a + b
}

pub fn poly_sub(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a - b
}

pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a * b
}

pub fn poly_scale(a: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    a.scale(c)
}

pub fn poly_eval(a: &IntPolynomial, x: &BigInt) -> BigInt {
    a.eval(x)
}

pub fn poly_div_exact(
    num: &IntPolynomial,
    den: &IntPolynomial,
) -> Result<IntPolynomial, InexactDivision> {
    num.div_exact(den)
}

fn zip_with(
    a: &IntPolynomial,
    b: &IntPolynomial,
    f: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> IntPolynomial {
    let zero = BigInt::zero();
    let len = a.coeffs.len().max(b.coeffs.len());
    IntPolynomial::from_coeffs((0..len).map(|i| {
        f(
            a.coeffs.get(i).unwrap_or(&zero),
            b.coeffs.get(i).unwrap_or(&zero),
        )
    }))
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: Self) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl From<i64> for IntPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Descending powers, no spaces, unit coefficients elided:
/// `9p^6+15p^5-p+13`. The zero polynomial renders as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("p")?,
                _ => write!(f, "p^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(poly(&[1, 1]) + poly(&[0, 0, 1]), poly(&[1, 1, 1]));
        let x = poly(&[3, -2, 7]);
        assert_eq!(&x + &IntPolynomial::zero(), x);
        let sum = poly(&[-1, 1]) + poly(&[1, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn ring_examples() {
        assert_eq!(poly(&[-1, 1]) * poly(&[1, 1]), poly(&[-1, 0, 1]));
        assert!((poly(&[5, 4]) * IntPolynomial::zero()).is_zero());
        assert_eq!(
            poly(&[1, 0, 1]).scale(&BigInt::from(-2)),
            poly(&[-2, 0, -2])
        );
        assert_eq!(poly(&[4, 1]) - poly(&[1, 1]), poly(&[3]));
    }

    #[test]
    fn eval_examples() {
        let ex_a = poly(&[13, 11, 20, 16, 21, 15, 9]);
        // term by term: 9*64 + 15*32 + 21*16 + 16*8 + 20*4 + 11*2 + 13
        let by_terms = 9 * 64 + 15 * 32 + 21 * 16 + 16 * 8 + 20 * 4 + 11 * 2 + 13;
        assert_eq!(by_terms, 1635);
        assert_eq!(ex_a.eval(&BigInt::from(2)), BigInt::from(by_terms));
        assert_eq!(poly(&[13]).eval(&BigInt::from(97)), BigInt::from(13));
        assert_eq!(IntPolynomial::p().eval(&BigInt::from(5)), BigInt::from(5));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            poly(&[-1, 0, 1]).div_exact(&poly(&[-1, 1])).unwrap(),
            poly(&[1, 1])
        );

        // (p-1)^3 (p+1)^2 (p+3) expanded by hand-independent multiplication
        let den = poly(&[-1, 0, 1]).pow(2) * poly(&[-1, 1]);
        let a110 = poly(&[-3, 2, 7, -4, -5, 2, 1]);
        assert_eq!(&den * &poly(&[3, 1]), a110);
        assert_eq!(a110.div_exact(&den).unwrap(), poly(&[3, 1]));

        let err = poly(&[1, 0, 1]).div_exact(&poly(&[-1, 1])).unwrap_err();
        assert_eq!(err.num, poly(&[1, 0, 1]));
    }

    #[test]
    fn division_rejects_fractional_steps() {
        // 3p+3 / 2p+2 has zero remainder over Q but not over Z
        assert!(poly(&[3, 3]).div_exact(&poly(&[2, 2])).is_err());
        assert!(poly(&[1]).div_exact(&poly(&[0, 1])).is_err());
        assert!(IntPolynomial::zero().div_exact(&poly(&[0, 1])).unwrap().is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            poly(&[13, 11, 20, 16, 21, 15, 9]).to_string(),
            "9p^6+15p^5+21p^4+16p^3+20p^2+11p+13"
        );
        assert_eq!(poly(&[3, 1]).to_string(), "p+3");
        assert_eq!(poly(&[0, -1, 0, -2]).to_string(), "-2p^3-p");
        assert_eq!(poly(&[-7]).to_string(), "-7");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn coefficients_beyond_64_bits() {
        let big = IntPolynomial::constant(BigInt::from(u64::MAX)) * IntPolynomial::p();
        let sq = &big * &big;
        assert_eq!(
            sq.eval(&BigInt::from(1)),
            BigInt::from(u64::MAX) * BigInt::from(u64::MAX)
        );
        assert_eq!(sq.div_exact(&big).unwrap(), big);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| poly(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_recovers_quotient(q in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let a = &q * &b;
            prop_assert_eq!(a.div_exact(&b).unwrap(), q);
        }

        #[test]
        fn eval_is_homomorphism(a in small_poly(), b in small_poly(), x in prop::sample::select(vec![2i64, 3, 5, 7])) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
