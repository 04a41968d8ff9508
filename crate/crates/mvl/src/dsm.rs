//! Hyper-power set enumeration for small frames.
//!
//! The hyper-power set over atoms `t1..tn` is the closure of the atoms
//! and the empty set under intersection and union. Elements are
//! canonicalized as monotone boolean functions on the nonempty
//! atom-membership patterns (the free-distributive-lattice encoding), so
//! equivalent expressions such as `t1 | (t1 & t2)` collapse to one
//! element.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DsmError {
    #[error("frame size {0} outside supported range 1..=4")]
    UnsupportedFrameSize(usize),
}

/// One canonical element: bit `i` of `mask` records truth on the
/// membership pattern whose atom set is the binary expansion of `i + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DsmElement {
    n: usize,
    mask: u16,
}

impl DsmElement {
    pub fn empty(n: usize) -> Self {
        DsmElement { n, mask: 0 }
    }

    pub fn atom(n: usize, index: usize) -> Self {
        let mut mask = 0u16;
        for pattern in 1u16..(1 << n) {
            if pattern & (1 << index) != 0 {
                mask |= 1 << (pattern - 1);
            }
        }
        DsmElement { n, mask }
    }

    pub fn intersect(self, other: Self) -> Self {
        DsmElement {
            n: self.n,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(self, other: Self) -> Self {
        DsmElement {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    fn truth_on(self, pattern: u16) -> bool {
        self.mask & (1 << (pattern - 1)) != 0
    }

    /// Monotone: growing the pattern can only turn the element on.
    pub fn is_monotone(self) -> bool {
        for a in 1u16..(1 << self.n) {
            for b in 1u16..(1 << self.n) {
                if a & b == a && self.truth_on(a) && !self.truth_on(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal true patterns, i.e. the canonical union-of-intersections form.
    fn minimal_patterns(self) -> Vec<u16> {
        let mut minimal = Vec::new();
        'outer: for pattern in 1u16..(1 << self.n) {
            if !self.truth_on(pattern) {
                continue;
            }
            for sub in 1u16..pattern {
                if sub & pattern == sub && self.truth_on(sub) {
                    continue 'outer;
                }
            }
            minimal.push(pattern);
        }
        minimal
    }
}

impl fmt::Display for DsmElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let terms = self.minimal_patterns();
        for (i, pattern) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let atoms: Vec<String> = (0..self.n)
                .filter(|a| pattern & (1 << a) != 0)
                .map(|a| format!("t{}", a + 1))
                .collect();
            if atoms.len() > 1 && terms.len() > 1 {
                write!(f, "({})", atoms.join(" & "))?;
            } else {
                write!(f, "{}", atoms.join(" & "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperPowerSet {
    pub n: usize,
    pub elements: Vec<DsmElement>,
}

impl HyperPowerSet {
    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }
}

/// Closure of `{{}, t1, .., tn}` under intersection and union.
pub fn hyperpower_set(n: usize) -> Result<HyperPowerSet, DsmError> {
    if !(1..=4).contains(&n) {
        return Err(DsmError::UnsupportedFrameSize(n));
    }
    let mut seen: BTreeSet<DsmElement> = BTreeSet::new();
    seen.insert(DsmElement::empty(n));
    for i in 0..n {
        seen.insert(DsmElement::atom(n, i));
    }
    loop {
        let snapshot: Vec<DsmElement> = seen.iter().copied().collect();
        let before = seen.len();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i..] {
                seen.insert(a.intersect(b));
                seen.insert(a.union(b));
            }
        }
        if seen.len() == before {
            break;
        }
    }
    let mut elements: Vec<DsmElement> = seen.into_iter().collect();
    elements.sort_by_key(|e| (e.mask.count_ones(), e.mask));
    Ok(HyperPowerSet { n, elements })
}
