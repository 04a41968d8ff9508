//! Exact rational helpers shared across the value domains.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_zero() -> Rational {
    Rational::zero()
}

pub fn rat_one() -> Rational {
    Rational::one()
}

pub fn in_unit_interval(q: &Rational) -> bool {
    !q.is_negative() && *q <= Rational::one()
}

/// The evenly spaced grid `0, 1/den, 2/den, ..., 1`.
pub fn unit_grid(den: u32) -> Vec<Rational> {
    (0..=den).map(|k| rat(k as i64, den as i64)).collect()
}

/// Parses "3/10", "0.3", ".5" or "2" into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| format!("bad numerator {n:?}"))?;
        let den: BigInt = d.trim().parse().map_err(|_| format!("bad denominator {d:?}"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let neg = int.starts_with('-');
        let whole: BigInt = int.parse().map_err(|_| format!("bad number {s:?}"))?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().unwrap();
        let abs = whole.abs() * &scale + frac_part;
        let signed = if neg { -abs } else { abs };
        return Ok(Rational::new(signed, scale));
    }
    let whole: BigInt = s.parse().map_err(|_| format!("bad number {s:?}"))?;
    Ok(Rational::from_integer(whole))
}
