//! Fixed-precision p-adic integers.
//!
//! A value is a little-endian vector of exactly `K` digits in base `p`.
//! Ring operations are exact mod `p^K`; the digitwise partial order, its
//! min/max, the digit successor and the norm are the order-theoretic
//! layer on top. Two values interoperate only when both `p` and `K`
//! match.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, Integer, One, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PadicError {
    #[error("precision mismatch: {0}:{1} vs {2}:{3}")]
    PrecisionMismatch(u32, usize, u32, usize),
    #[error("base must be at least 2, got {0}")]
    BadBase(u32),
    #[error("precision must be at least 1")]
    BadPrecision,
    #[error("digit {digit} out of range for base {p}")]
    DigitOutOfRange { digit: u32, p: u32 },
    #[error("denominator {0} is divisible by {1}")]
    NonInvertibleDenominator(i64, u32),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Outcome of the digitwise comparison.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PadicCmp {
    Eq,
    Le,
    Ge,
    Incomparable,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PadicInt {
    p: u32,
    digits: Vec<u32>,
}

impl PadicInt {
    pub fn new(p: u32, digits: Vec<u32>) -> Result<Self, PadicError> {
        if p < 2 {
            return Err(PadicError::BadBase(p));
        }
        if digits.is_empty() {
            return Err(PadicError::BadPrecision);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= p) {
            return Err(PadicError::DigitOutOfRange { digit, p });
        }
        Ok(PadicInt { p, digits })
    }

    pub fn zero(p: u32, k: usize) -> Self {
        PadicInt::new(p, vec![0; k]).expect("valid zero")
    }

    pub fn one(p: u32, k: usize) -> Self {
        PadicInt::from_u64(p, k, 1)
    }

    /// The order-theoretic top: every digit is `p - 1`. Equals `-1 mod p^K`.
    pub fn n_max(p: u32, k: usize) -> Self {
        PadicInt::new(p, vec![p - 1; k]).expect("valid n_max")
    }

    pub fn from_u64(p: u32, k: usize, mut v: u64) -> Self {
        let mut digits = vec![0u32; k];
        for d in digits.iter_mut() {
            *d = (v % p as u64) as u32;
            v /= p as u64;
        }
        PadicInt { p, digits }
    }

    pub fn from_i64(p: u32, k: usize, v: i64) -> Self {
        if v >= 0 {
            PadicInt::from_u64(p, k, v as u64)
        } else {
            PadicInt::zero(p, k)
                .sub(&PadicInt::from_u64(p, k, v.unsigned_abs()))
                .expect("compatible")
        }
    }

    /// The truncation of `num/den` in `Z_p`: the unique `x` with
    /// `den * x = num (mod p^K)`. Requires `gcd(den, p) = 1`.
    pub fn from_ratio(p: u32, k: usize, num: i64, den: i64) -> Result<Self, PadicError> {
        if den == 0 || den.unsigned_abs() % p as u64 == 0 {
            return Err(PadicError::NonInvertibleDenominator(den, p));
        }
        let modulus = BigInt::from(p).pow(k as u32);
        let den_big = BigInt::from(den).mod_floor(&modulus);
        let inv = modular_inverse(&den_big, &modulus)
            .ok_or(PadicError::NonInvertibleDenominator(den, p))?;
        let x = (BigInt::from(num) * inv).mod_floor(&modulus);
        Ok(PadicInt::from_biguint(
            p,
            k,
            &x.to_biguint().expect("mod_floor is nonnegative"),
        ))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    fn check_compat(&self, other: &Self) -> Result<(), PadicError> {
        if self.p != other.p || self.digits.len() != other.digits.len() {
            return Err(PadicError::PrecisionMismatch(
                self.p,
                self.digits.len(),
                other.p,
                other.digits.len(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_compat(other)?;
        let p = self.p as u64;
        let mut carry = 0u64;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| {
                let s = a as u64 + b as u64 + carry;
                carry = s / p;
                (s % p) as u32
            })
            .collect();
        Ok(PadicInt { p: self.p, digits })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_compat(other)?;
        let p = self.p as i64;
        let mut borrow = 0i64;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| {
                let mut d = a as i64 - b as i64 - borrow;
                if d < 0 {
                    d += p;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                d as u32
            })
            .collect();
        Ok(PadicInt { p: self.p, digits })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_compat(other)?;
        let k = self.digits.len();
        let p = self.p as u64;
        let mut acc = vec![0u64; k];
        for (i, &a) in self.digits.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut carry = 0u64;
            for (j, &b) in other.digits.iter().enumerate() {
                if i + j >= k {
                    break;
                }
                let cell = acc[i + j] + a as u64 * b as u64 + carry;
                acc[i + j] = cell % p;
                carry = cell / p;
            }
        }
        let digits = acc.into_iter().map(|d| d as u32).collect();
        Ok(PadicInt { p: self.p, digits })
    }

    /// Additive inverse mod `p^K`.
    pub fn neg(&self) -> Self {
        PadicInt::zero(self.p, self.digits.len())
            .sub(self)
            .expect("compatible")
    }

    /// `N_max - x`, which is digitwise `p - 1 - x_i` (no borrows occur).
    pub fn complement(&self) -> Self {
        let digits = self.digits.iter().map(|&d| self.p - 1 - d).collect();
        PadicInt { p: self.p, digits }
    }

    /// The digitwise partial order.
    pub fn cmp_digitwise(&self, other: &Self) -> Result<PadicCmp, PadicError> {
        self.check_compat(other)?;
        let mut lt = false;
        let mut gt = false;
        for (&a, &b) in self.digits.iter().zip(&other.digits) {
            if a < b {
                lt = true;
            }
            if a > b {
                gt = true;
            }
        }
        Ok(match (lt, gt) {
            (false, false) => PadicCmp::Eq,
            (true, false) => PadicCmp::Le,
            (false, true) => PadicCmp::Ge,
            (true, true) => PadicCmp::Incomparable,
        })
    }

    pub fn pmin(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_compat(other)?;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(PadicInt { p: self.p, digits })
    }

    pub fn pmax(&self, other: &Self) -> Result<Self, PadicError> {
        self.check_compat(other)?;
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(PadicInt { p: self.p, digits })
    }

    /// Adds one to every digit mod `p`, independently (no carries).
    pub fn post_succ(&self) -> Self {
        let digits = self.digits.iter().map(|&d| (d + 1) % self.p).collect();
        PadicInt { p: self.p, digits }
    }

    /// Index of the first nonzero digit, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    pub fn norm(&self) -> PadicNorm {
        match self.first_nonzero() {
            Some(l) => PadicNorm {
                value: Rational::new(BigInt::one(), BigInt::from(self.p).pow(l as u32)),
                saturated: false,
            },
            // All K digits are zero: the true norm is 0 or at most p^-K,
            // which the truncation cannot distinguish.
            None => PadicNorm {
                value: Rational::zero(),
                saturated: true,
            },
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for &d in self.digits.iter().rev() {
            acc = acc * self.p + d;
        }
        acc
    }

    pub fn from_biguint(p: u32, k: usize, v: &BigUint) -> Self {
        let mut digits = vec![0u32; k];
        let mut rest = v.clone();
        let base = BigUint::from(p);
        for d in digits.iter_mut() {
            let (q, r) = rest.div_rem(&base);
            *d = r.to_u32_digits().first().copied().unwrap_or(0);
            rest = q;
        }
        PadicInt { p, digits }
    }

    /// Multiplicative inverse mod `p^K`; `None` when `p` divides the value
    /// (equivalently, digit 0 is zero).
    pub fn inverse(&self) -> Option<Self> {
        if self.digits[0] == 0 {
            return None;
        }
        let modulus = BigInt::from(self.p).pow(self.digits.len() as u32);
        let inv = modular_inverse(&BigInt::from(self.to_biguint()), &modulus)?;
        Some(PadicInt::from_biguint(
            self.p,
            self.digits.len(),
            &inv.to_biguint().expect("nonnegative"),
        ))
    }

    /// Reads the value as an ordinary natural number when every digit above
    /// `floor(K/2)` is zero, so the truncation denotes the natural exactly.
    pub fn as_natural(&self) -> Option<u128> {
        let k = self.digits.len();
        let cutoff = k / 2;
        if self.digits.iter().skip(cutoff + 1).any(|&d| d != 0) {
            return None;
        }
        let mut acc: u128 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc.checked_mul(self.p as u128)?.checked_add(d as u128)?;
        }
        Some(acc)
    }
}

fn modular_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(modulus);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(modulus))
}

/// Norm of a truncated value: either `p^-L` for the first nonzero digit
/// index `L`, or `0` with `saturated` set when all stored digits vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct PadicNorm {
    pub value: BigRational,
    pub saturated: bool,
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:", self.p, self.digits.len())?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PadicInt({self})")
    }
}

impl FromStr for PadicInt {
    type Err = PadicError;

    /// Accepts the textual form `p:K:d0,d1,...,d{K-1}`.
    fn from_str(s: &str) -> Result<Self, PadicError> {
        let mut parts = s.splitn(3, ':');
        let (p, k, rest) = match (parts.next(), parts.next(), parts.next()) {
            (Some(p), Some(k), Some(rest)) => (p, k, rest),
            _ => return Err(PadicError::Parse(format!("expected p:K:digits, got {s:?}"))),
        };
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| PadicError::Parse(format!("bad base {p:?}")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| PadicError::Parse(format!("bad precision {k:?}")))?;
        let digits: Vec<u32> = rest
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u32>()
                    .map_err(|_| PadicError::Parse(format!("bad digit {d:?}")))
            })
            .collect::<Result<_, _>>()?;
        if digits.len() != k {
            return Err(PadicError::Parse(format!(
                "expected {k} digits, got {}",
                digits.len()
            )));
        }
        PadicInt::new(p, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn n_max_examples() {
        assert_eq!(PadicInt::n_max(2, 4).digits(), &[1, 1, 1, 1]);
        assert_eq!(PadicInt::n_max(3, 2).digits(), &[2, 2]);
        let sum = PadicInt::n_max(2, 4).add(&PadicInt::one(2, 4)).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn ring_ops_match_integer_arithmetic() {
        // 35 + 2 = 37 in base 3 with 4 digits.
        let a = PadicInt::from_u64(3, 4, 35);
        assert_eq!(a.digits(), &[2, 2, 0, 1]);
        let b = PadicInt::from_u64(3, 4, 2);
        assert_eq!(a.add(&b).unwrap().digits(), &[1, 0, 1, 1]);

        // -1 in base 2: all ones.
        let minus_one = PadicInt::zero(2, 4).sub(&PadicInt::one(2, 4)).unwrap();
        assert_eq!(minus_one, PadicInt::n_max(2, 4));

        // 3 * 3 = 9 = 1 mod 4.
        let three = PadicInt::new(2, vec![1, 1]).unwrap();
        assert_eq!(three.mul(&three).unwrap().digits(), &[1, 0]);
    }

    #[test]
    fn precision_mismatch_is_rejected() {
        let a = PadicInt::zero(2, 4);
        let b = PadicInt::zero(2, 5);
        assert!(matches!(
            a.add(&b),
            Err(PadicError::PrecisionMismatch(2, 4, 2, 5))
        ));
        let c = PadicInt::zero(3, 4);
        assert!(a.pmin(&c).is_err());
    }

    #[test]
    fn digitwise_order() {
        let one = PadicInt::new(2, vec![1, 0]).unwrap();
        let three = PadicInt::new(2, vec![1, 1]).unwrap();
        let two = PadicInt::new(2, vec![0, 1]).unwrap();
        assert_eq!(one.cmp_digitwise(&three).unwrap(), PadicCmp::Le);
        assert_eq!(three.cmp_digitwise(&one).unwrap(), PadicCmp::Ge);
        assert_eq!(one.cmp_digitwise(&two).unwrap(), PadicCmp::Incomparable);
        assert_eq!(one.cmp_digitwise(&one).unwrap(), PadicCmp::Eq);
    }

    #[test]
    fn repeating_expansions_are_incomparable() {
        for k in [6usize, 16] {
            let third = PadicInt::from_ratio(2, k, -1, 3).unwrap();
            let two_thirds = PadicInt::from_ratio(2, k, -2, 3).unwrap();
            // -1/3 = ...010101, -2/3 = ...101010 in base 2.
            assert_eq!(third.digits()[0], 1);
            assert_eq!(third.digits()[1], 0);
            assert_eq!(two_thirds.digits()[0], 0);
            assert_eq!(two_thirds.digits()[1], 1);
            assert_eq!(
                third.cmp_digitwise(&two_thirds).unwrap(),
                PadicCmp::Incomparable
            );
            assert!(third.pmin(&two_thirds).unwrap().is_zero());
            assert_eq!(third.pmax(&two_thirds).unwrap(), PadicInt::n_max(2, k));
        }
    }

    #[test]
    fn min_max_examples() {
        let one = PadicInt::new(2, vec![1, 0]).unwrap();
        let three = PadicInt::new(2, vec![1, 1]).unwrap();
        assert_eq!(one.pmin(&three).unwrap(), one);
        let a = PadicInt::new(3, vec![2, 0]).unwrap();
        let b = PadicInt::new(3, vec![1, 1]).unwrap();
        assert_eq!(a.pmax(&b).unwrap().digits(), &[2, 1]);
        let x = PadicInt::from_u64(3, 4, 50);
        let top = PadicInt::n_max(3, 4);
        assert_eq!(x.pmax(&top).unwrap(), top);
        assert_eq!(x.pmin(&top).unwrap(), x);
    }

    #[test]
    fn post_successor() {
        let x = PadicInt::new(3, vec![2, 0, 1]).unwrap();
        assert_eq!(x.post_succ().digits(), &[0, 1, 2]);
        assert!(PadicInt::n_max(2, 4).post_succ().is_zero());
        let mut y = PadicInt::from_u64(5, 6, 12345);
        for _ in 0..5 {
            y = y.post_succ();
        }
        assert_eq!(y, PadicInt::from_u64(5, 6, 12345));
    }

    #[test]
    fn norms() {
        let twelve = PadicInt::from_u64(2, 4, 12);
        assert_eq!(twelve.digits(), &[0, 0, 1, 1]);
        let n = twelve.norm();
        assert_eq!(n.value, rat(1, 4));
        assert!(!n.saturated);

        let odd = PadicInt::from_u64(2, 4, 7);
        assert_eq!(odd.norm().value, rat(1, 1));

        let zero = PadicInt::zero(2, 4);
        let n0 = zero.norm();
        assert_eq!(n0.value, rat(0, 1));
        assert!(n0.saturated);
    }

    #[test]
    fn inverse_of_units() {
        let x = PadicInt::from_u64(3, 8, 7);
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv).unwrap(), PadicInt::one(3, 8));
        assert!(PadicInt::from_u64(3, 8, 6).inverse().is_none());
    }

    #[test]
    fn natural_detection() {
        let x = PadicInt::from_u64(2, 16, 300);
        assert_eq!(x.as_natural(), Some(300));
        assert_eq!(PadicInt::n_max(2, 16).as_natural(), None);
    }

    #[test]
    fn text_round_trip() {
        let x = PadicInt::new(2, vec![1, 0, 1, 0]).unwrap();
        assert_eq!(x.to_string(), "2:4:1,0,1,0");
        assert_eq!("2:4:1,0,1,0".parse::<PadicInt>().unwrap(), x);
        assert!("2:4:1,0,1".parse::<PadicInt>().is_err());
        assert!("2:4:1,0,1,7".parse::<PadicInt>().is_err());
    }
}
