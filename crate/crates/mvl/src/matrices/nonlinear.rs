//! Hyperbolic, parabolic and quasiparabolic truth functions, and their
//! convergence against the linear limits.
//!
//! The hyperbolic negation is implemented as `n(1-x)/(n+x)` rather than
//! the sometimes-seen `n(1-x)/(1+x)`: the latter escapes `[0,1]` (it
//! takes the value `n` at `x = 0`) and misses the `1-x` limit, while the
//! former matches the implication's shape `n(1-d)/(n+d)` and converges.
//! The parabolic family is kept as defined, with no convergence claim:
//! its negation `(1-x^2)/n` collapses to `0` as `n` grows.

use num::{One, Zero};

use crate::rational::{rat, unit_grid, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Hl,
    Hg,
    Parabolic,
    Quasiparabolic,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "hl" => Some(Family::Hl),
            "hg" => Some(Family::Hg),
            "pb" => Some(Family::Parabolic),
            "pq" => Some(Family::Quasiparabolic),
            _ => None,
        }
    }
}

pub fn neg(family: Family, n: u64, x: &Rational) -> Rational {
    let one = Rational::one();
    let nq = rat(n as i64, 1);
    match family {
        Family::Hl => &nq * (&one - x) / (&nq + x),
        Family::Hg => ((&one - x) / (&one + x)).pow(n as i32),
        Family::Parabolic => (&one - x * x) / &nq,
        Family::Quasiparabolic => {
            let slope = rat(n as i64, n as i64 + 1);
            (&one - x * x) / (&one + slope * x)
        }
    }
}

pub fn imp(family: Family, n: u64, x: &Rational, y: &Rational) -> Rational {
    let one = Rational::one();
    let nq = rat(n as i64, 1);
    match family {
        Family::Hl => {
            if x <= y {
                one
            } else {
                let d = x - y;
                &nq * (&one - &d) / (&nq + &d)
            }
        }
        Family::Hg => {
            if x <= y {
                one
            } else {
                rat(n as i64 + 1, 1) * y / (&nq + x)
            }
        }
        Family::Parabolic => {
            let xx = x * x;
            if xx <= *y {
                one
            } else {
                neg(family, n, x) + y
            }
        }
        Family::Quasiparabolic => (neg(family, n, x) + y).min(one),
    }
}

pub fn join(family: Family, n: u64, x: &Rational, y: &Rational) -> Rational {
    match family {
        // max by definition.
        Family::Hg => x.max(y).clone(),
        // (x -> y) -> y for the Lukasiewicz-like families.
        _ => imp(family, n, &imp(family, n, x, y), y),
    }
}

pub fn meet(family: Family, n: u64, x: &Rational, y: &Rational) -> Rational {
    match family {
        Family::Hg => x.min(y).clone(),
        _ => neg(
            family,
            n,
            &join(family, n, &neg(family, n, x), &neg(family, n, y)),
        ),
    }
}

/// Limit operations: the Lukasiewicz ops for HL/quasiparabolic, the
/// Goedel ops for HG.
fn limit_neg(family: Family, x: &Rational) -> Rational {
    match family {
        Family::Hg => {
            if x.is_zero() {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        _ => Rational::one() - x,
    }
}

fn limit_imp(family: Family, x: &Rational, y: &Rational) -> Rational {
    match family {
        Family::Hg => {
            if x <= y {
                Rational::one()
            } else {
                y.clone()
            }
        }
        _ => (Rational::one() - x + y).min(Rational::one()),
    }
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub family: Family,
    pub n: u64,
    /// Per-operation maximum absolute deviation from the limit op.
    pub deviations: Vec<(&'static str, Rational)>,
}

impl ConvergenceReport {
    pub fn max(&self) -> Rational {
        self.deviations
            .iter()
            .map(|(_, d)| d.clone())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn deviation(&self, op: &str) -> Option<&Rational> {
        self.deviations
            .iter()
            .find(|(name, _)| *name == op)
            .map(|(_, d)| d)
    }
}

fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Sup over a uniform grid of the deviation between the degree-`n` ops
/// and the limit ops. `grid_points` counts points per axis, so the grid
/// step is `1/(grid_points - 1)`.
pub fn converge_check(family: Family, n: u64, grid_points: u32) -> ConvergenceReport {
    assert!(grid_points >= 2, "need at least the endpoints");
    let grid = unit_grid(grid_points - 1);
    let mut neg_dev = Rational::zero();
    for x in &grid {
        neg_dev = neg_dev.max(abs_diff(&neg(family, n, x), &limit_neg(family, x)));
    }
    let mut imp_dev = Rational::zero();
    for x in &grid {
        for y in &grid {
            imp_dev = imp_dev.max(abs_diff(&imp(family, n, x, y), &limit_imp(family, x, y)));
        }
    }
    ConvergenceReport {
        family,
        n,
        deviations: vec![("neg", neg_dev), ("imp", imp_dev)],
    }
}
