//! A finite symbolic model of the non-Archimedean unit interval.
//!
//! Values are either standard exact rationals in `[0,1]` or "windows":
//! finite tuples of rationals compared pointwise. Windows stand in for
//! the non-constant index functions of the nonstandard extension; the
//! ultrafilter quantifier "on a large set" is approximated by
//! "at every window position". A window whose entries are all equal is
//! normalized to the standard value it denotes.
//!
//! Ordering follows the partial-order structure: standard values compare
//! as rationals, every positive standard value strictly dominates every
//! window, and windows compare pointwise (and may be incomparable).
//! Arithmetic is the pointwise lift.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};
use thiserror::Error;

use crate::rational::{in_unit_interval, parse_rational, Rational};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("window size mismatch: {0} vs {1}")]
    WindowSizeMismatch(usize, usize),
    #[error("value outside [0,1]")]
    OutOfUnitInterval,
    #[error("empty window")]
    EmptyWindow,
    #[error("pointwise division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HyperCmp {
    Eq,
    Le,
    Ge,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HyperValue {
    Standard(Rational),
    Window(Vec<Rational>),
}

impl HyperValue {
    pub fn standard(q: Rational) -> Result<Self, HyperError> {
        if !in_unit_interval(&q) {
            return Err(HyperError::OutOfUnitInterval);
        }
        Ok(HyperValue::Standard(q))
    }

    /// Builds a window, normalizing a constant window to its standard value.
    pub fn window(seq: Vec<Rational>) -> Result<Self, HyperError> {
        if seq.is_empty() {
            return Err(HyperError::EmptyWindow);
        }
        if seq.iter().any(|q| !in_unit_interval(q)) {
            return Err(HyperError::OutOfUnitInterval);
        }
        if seq.iter().all(|q| *q == seq[0]) {
            return Ok(HyperValue::Standard(seq.into_iter().next().unwrap()));
        }
        Ok(HyperValue::Window(seq))
    }

    pub fn zero() -> Self {
        HyperValue::Standard(Rational::zero())
    }

    pub fn one() -> Self {
        HyperValue::Standard(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, HyperValue::Standard(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, HyperValue::Standard(q) if q.is_one())
    }

    pub fn window_size(&self) -> Option<usize> {
        match self {
            HyperValue::Standard(_) => None,
            HyperValue::Window(w) => Some(w.len()),
        }
    }

    fn common_size(&self, other: &Self) -> Result<Option<usize>, HyperError> {
        match (self.window_size(), other.window_size()) {
            (Some(a), Some(b)) if a != b => Err(HyperError::WindowSizeMismatch(a, b)),
            (a, b) => Ok(a.or(b)),
        }
    }

    fn entry(&self, i: usize) -> &Rational {
        match self {
            HyperValue::Standard(q) => q,
            HyperValue::Window(w) => &w[i],
        }
    }

    /// Symbolic comparison. Standard values are totally ordered; a positive
    /// standard value is strictly greater than every window and the zero
    /// standard value is strictly below every window; two windows compare
    /// pointwise.
    pub fn cmp_hyper(&self, other: &Self) -> Result<HyperCmp, HyperError> {
        self.common_size(other)?;
        Ok(match (self, other) {
            (HyperValue::Standard(a), HyperValue::Standard(b)) => match a.cmp(b) {
                std::cmp::Ordering::Less => HyperCmp::Le,
                std::cmp::Ordering::Equal => HyperCmp::Eq,
                std::cmp::Ordering::Greater => HyperCmp::Ge,
            },
            (HyperValue::Standard(a), HyperValue::Window(_)) => {
                if a.is_zero() {
                    HyperCmp::Le
                } else {
                    HyperCmp::Ge
                }
            }
            (HyperValue::Window(_), HyperValue::Standard(b)) => {
                if b.is_zero() {
                    HyperCmp::Ge
                } else {
                    HyperCmp::Le
                }
            }
            (HyperValue::Window(a), HyperValue::Window(b)) => {
                let mut lt = false;
                let mut gt = false;
                for (x, y) in a.iter().zip(b) {
                    if x < y {
                        lt = true;
                    }
                    if x > y {
                        gt = true;
                    }
                }
                match (lt, gt) {
                    (false, false) => HyperCmp::Eq,
                    (true, false) => HyperCmp::Le,
                    (false, true) => HyperCmp::Ge,
                    (true, true) => HyperCmp::Incomparable,
                }
            }
        })
    }

    /// Pointwise lift of a binary rational function, normalizing the result.
    pub fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Rational, &Rational) -> Result<Rational, HyperError>,
    ) -> Result<Self, HyperError> {
        match self.common_size(other)? {
            None => {
                let (HyperValue::Standard(a), HyperValue::Standard(b)) = (self, other) else {
                    unreachable!()
                };
                HyperValue::standard(f(a, b)?)
            }
            Some(n) => {
                let seq = (0..n)
                    .map(|i| f(self.entry(i), other.entry(i)))
                    .collect::<Result<Vec<_>, _>>()?;
                HyperValue::window(seq)
            }
        }
    }

    pub fn map(
        &self,
        f: impl Fn(&Rational) -> Result<Rational, HyperError>,
    ) -> Result<Self, HyperError> {
        match self {
            HyperValue::Standard(q) => HyperValue::standard(f(q)?),
            HyperValue::Window(w) => {
                HyperValue::window(w.iter().map(f).collect::<Result<Vec<_>, _>>()?)
            }
        }
    }

    pub fn hmin(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok(a.min(b).clone()))
    }

    pub fn hmax(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok(a.max(b).clone()))
    }

    /// `1 - x`.
    pub fn one_minus(&self) -> Result<Self, HyperError> {
        self.map(|q| Ok(Rational::one() - q))
    }

    /// `min(1, 1 - x + y)`.
    pub fn imp_l(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| {
            Ok((Rational::one() - a + b).min(Rational::one()))
        })
    }

    /// `max(0, x + y - 1)`.
    pub fn conj_l(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| {
            Ok((a + b - Rational::one()).max(Rational::zero()))
        })
    }

    /// `x * y`.
    pub fn mul(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok(a * b))
    }

    /// `x + y - x*y`, the algebraic sum.
    pub fn algebraic_sum(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok(a + b - a * b))
    }

    /// `min(1, x/y)` pointwise with `self` the numerator; errors when any
    /// denominator entry is zero.
    pub fn div_clipped(&self, denominator: &Self) -> Result<Self, HyperError> {
        self.zip_with(denominator, |num, den| {
            if den.is_zero() {
                return Err(HyperError::DivisionByZero);
            }
            Ok((num / den).min(Rational::one()))
        })
    }

    /// Goedel implication, pointwise: `1` where `x <= y`, else `y`.
    pub fn imp_g(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| {
            Ok(if a <= b { Rational::one() } else { b.clone() })
        })
    }

    /// Goedel negation, pointwise: `1` at `0`, else `0`.
    pub fn neg_g(&self) -> Result<Self, HyperError> {
        self.map(|q| {
            Ok(if q.is_zero() {
                Rational::one()
            } else {
                Rational::zero()
            })
        })
    }

    /// Product implication, pointwise: `1` where `x <= y`, else `y/x`.
    /// Total: the division branch implies `x > y >= 0`.
    pub fn imp_pi(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| {
            Ok(if a <= b { Rational::one() } else { b / a })
        })
    }

    /// Product negation, pointwise: `1` at `0`, else `0`.
    pub fn neg_pi(&self) -> Result<Self, HyperError> {
        self.neg_g()
    }

    /// Pointwise `1` where the entry equals `1`, else `0`.
    pub fn delta(&self) -> Result<Self, HyperError> {
        self.map(|q| {
            Ok(if q.is_one() {
                Rational::one()
            } else {
                Rational::zero()
            })
        })
    }

    /// `(1 - x) -> y` bounded sum.
    pub fn oplus(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok((a + b).min(Rational::one())))
    }

    /// `x & (1 - y)` bounded difference.
    pub fn ominus(&self, other: &Self) -> Result<Self, HyperError> {
        self.zip_with(other, |a, b| Ok((a - b).max(Rational::zero())))
    }
}

impl fmt::Display for HyperValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperValue::Standard(q) => write!(f, "std {q}"),
            HyperValue::Window(w) => {
                write!(f, "win [")?;
                for (i, q) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{q}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl FromStr for HyperValue {
    type Err = HyperError;

    /// Accepts `std 1/2` and `win [1/2,1/3,1/4]`.
    fn from_str(s: &str) -> Result<Self, HyperError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("std") {
            let q = parse_rational(rest).map_err(HyperError::Parse)?;
            return HyperValue::standard(q);
        }
        if let Some(rest) = s.strip_prefix("win") {
            let rest = rest.trim();
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| HyperError::Parse(format!("expected win [..], got {s:?}")))?;
            let seq = inner
                .split(',')
                .map(|part| parse_rational(part).map_err(HyperError::Parse))
                .collect::<Result<Vec<_>, _>>()?;
            return HyperValue::window(seq);
        }
        Err(HyperError::Parse(format!(
            "expected 'std q' or 'win [..]', got {s:?}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn win(entries: &[(i64, i64)]) -> HyperValue {
        HyperValue::window(entries.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    fn std(n: i64, d: i64) -> HyperValue {
        HyperValue::standard(rat(n, d)).unwrap()
    }

    #[test]
    fn positive_standard_dominates_windows() {
        let w = win(&[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(std(1, 2).cmp_hyper(&w).unwrap(), HyperCmp::Ge);
        assert_eq!(w.cmp_hyper(&std(1, 1000)).unwrap(), HyperCmp::Le);
        assert_eq!(std(0, 1).cmp_hyper(&w).unwrap(), HyperCmp::Le);
    }

    #[test]
    fn window_comparison_is_pointwise() {
        let a = win(&[(1, 5), (1, 2), (1, 3)]);
        let b = win(&[(1, 4), (1, 2), (1, 2)]);
        assert_eq!(a.cmp_hyper(&b).unwrap(), HyperCmp::Le);
        let c = win(&[(2, 10), (5, 10)]);
        let d = win(&[(3, 10), (4, 10)]);
        assert_eq!(c.cmp_hyper(&d).unwrap(), HyperCmp::Incomparable);
        assert_eq!(c.hmin(&d).unwrap(), win(&[(2, 10), (4, 10)]));
        assert_eq!(c.hmax(&d).unwrap(), win(&[(3, 10), (5, 10)]));
    }

    #[test]
    fn window_size_mismatch_errors() {
        let a = win(&[(1, 2), (1, 3)]);
        let b = win(&[(1, 2), (1, 3), (1, 4)]);
        assert!(matches!(
            a.cmp_hyper(&b),
            Err(HyperError::WindowSizeMismatch(2, 3))
        ));
        assert!(a.hmin(&b).is_err());
    }

    #[test]
    fn min_max_with_extremes() {
        let w = win(&[(1, 2), (1, 3)]);
        assert_eq!(HyperValue::one().hmax(&w).unwrap(), HyperValue::one());
        assert_eq!(HyperValue::zero().hmin(&w).unwrap(), HyperValue::zero());
        // Pointwise min with a dominating standard value returns the window.
        assert_eq!(
            std(1, 2).hmin(&win(&[(1, 3), (1, 4)])).unwrap(),
            win(&[(1, 3), (1, 4)])
        );
    }

    #[test]
    fn normalization_collapses_constant_windows() {
        let w = HyperValue::window(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(w, std(1, 2));
    }

    #[test]
    fn lukasiewicz_ops() {
        assert_eq!(
            win(&[(1, 2), (1, 3)]).one_minus().unwrap(),
            win(&[(1, 2), (2, 3)])
        );
        assert_eq!(std(3, 10).imp_l(&std(2, 10)).unwrap(), std(9, 10));
        assert_eq!(HyperValue::one().one_minus().unwrap(), HyperValue::zero());
        assert_eq!(std(7, 10).conj_l(&std(5, 10)).unwrap(), std(2, 10));
    }

    #[test]
    fn division_guards() {
        let w = win(&[(0, 1), (1, 2)]);
        assert!(matches!(
            std(1, 2).div_clipped(&w),
            Err(HyperError::DivisionByZero)
        ));
        // Guarded product implication never divides by zero.
        assert_eq!(w.imp_pi(&HyperValue::zero()).unwrap(), win(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn text_round_trip() {
        for text in ["std 1/2", "win [1/2,1/3,1/4]", "std 0", "std 1"] {
            let v: HyperValue = text.parse().unwrap();
            assert_eq!(v.to_string().parse::<HyperValue>().unwrap(), v);
        }
        // Constant windows normalize when parsed.
        let v: HyperValue = "win [1/2,1/2]".parse().unwrap();
        assert_eq!(v, std(1, 2));
    }
}
