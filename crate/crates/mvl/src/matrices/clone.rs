//! Extreme-preservation tests and depth-bounded clone closure over a
//! finite value set.
//!
//! Functions of arity at most two are stored as binary tables (a unary
//! function ignores its second argument). The closure applies each
//! generator on top of already-built argument functions, level by level,
//! which enumerates exactly the composition terms of bounded depth over
//! the projections; variable identification falls out because terms in a
//! single variable are themselves reachable.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CloneError {
    #[error("domain size {0} outside supported range 2..=5")]
    UnsupportedDomain(u32),
    #[error("arity {0} unsupported (only 1 and 2)")]
    UnsupportedArity(usize),
    #[error("table length {got} does not match arity {arity} over {m} values")]
    BadTableLength { got: usize, arity: usize, m: u32 },
}

/// A function over `{0, .., m-1}` of arity 1 or 2 as a row-major table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteFn {
    pub m: u32,
    pub arity: usize,
    /// `table[x]` for unary, `table[x * m + y]` for binary.
    pub table: Vec<u32>,
}

impl FiniteFn {
    pub fn new(m: u32, arity: usize, table: Vec<u32>) -> Result<Self, CloneError> {
        if !(2..=5).contains(&m) {
            return Err(CloneError::UnsupportedDomain(m));
        }
        if !(arity == 1 || arity == 2) {
            return Err(CloneError::UnsupportedArity(arity));
        }
        let expect = (m as usize).pow(arity as u32);
        if table.len() != expect || table.iter().any(|&v| v >= m) {
            return Err(CloneError::BadTableLength {
                got: table.len(),
                arity,
                m,
            });
        }
        Ok(FiniteFn { m, arity, table })
    }

    pub fn apply1(&self, x: u32) -> u32 {
        debug_assert_eq!(self.arity, 1);
        self.table[x as usize]
    }

    pub fn apply2(&self, x: u32, y: u32) -> u32 {
        debug_assert_eq!(self.arity, 2);
        self.table[(x * self.m + y) as usize]
    }
}

/// Does the function map extreme tuples (all arguments in `{0, m-1}`)
/// back into `{0, m-1}`?
pub fn preserves_extremes(f: &FiniteFn) -> bool {
    let top = f.m - 1;
    let extreme = [0u32, top];
    match f.arity {
        1 => extreme.iter().all(|&x| {
            let v = f.apply1(x);
            v == 0 || v == top
        }),
        _ => extreme.iter().all(|&x| {
            extreme.iter().all(|&y| {
                let v = f.apply2(x, y);
                v == 0 || v == top
            })
        }),
    }
}

/// A binary table over `{0..m-1}^2`, the uniform representation inside
/// the closure; unary members appear as tables ignoring one argument.
pub type BinaryTable = Vec<u32>;

#[derive(Clone, Debug)]
pub struct CloneClosure {
    pub m: u32,
    /// All distinct binary tables reached within the depth bound,
    /// including the two projections at depth 0.
    pub tables: Vec<BinaryTable>,
    pub saturated: bool,
}

impl CloneClosure {
    /// The table as a unary function of its first argument, if the second
    /// argument is ignored.
    pub fn essentially_unary(&self, table: &BinaryTable) -> Option<Vec<u32>> {
        let m = self.m as usize;
        let mut out = Vec::with_capacity(m);
        for x in 0..m {
            let v = table[x * m];
            if (1..m).any(|y| table[x * m + y] != v) {
                return None;
            }
            out.push(v);
        }
        Some(out)
    }

    pub fn contains(&self, table: &BinaryTable) -> bool {
        self.tables.iter().any(|t| t == table)
    }
}

/// Composition terms of depth at most `depth` over the generators and
/// the two projections. Depth 0 holds just the projections; each level
/// applies one generator to argument functions of the previous levels.
pub fn clone_closure(generators: &[FiniteFn], depth: u32) -> Result<CloneClosure, CloneError> {
    let m = match generators.first() {
        Some(g) => g.m,
        None => return Err(CloneError::UnsupportedDomain(0)),
    };
    if generators.iter().any(|g| g.m != m) {
        return Err(CloneError::UnsupportedDomain(m));
    }
    let msz = m as usize;
    let proj1: BinaryTable = (0..msz)
        .flat_map(|x| std::iter::repeat_n(x as u32, msz))
        .collect();
    let proj2: BinaryTable = (0..msz).flat_map(|_| (0..msz).map(|y| y as u32)).collect();

    let mut seen: HashSet<BinaryTable> = HashSet::new();
    let mut all: Vec<BinaryTable> = Vec::new();
    for t in [proj1, proj2] {
        if seen.insert(t.clone()) {
            all.push(t);
        }
    }

    let mut frontier: Vec<BinaryTable> = all.clone();
    let mut saturated = false;
    for _ in 0..depth {
        let mut next: Vec<BinaryTable> = Vec::new();
        for g in generators {
            match g.arity {
                1 => {
                    // Apply to the frontier only: older arguments already
                    // produced their images in earlier levels.
                    for arg in &frontier {
                        let t: BinaryTable = arg.iter().map(|&v| g.apply1(v)).collect();
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
                _ => {
                    // At least one argument must be new to yield a term of
                    // exactly this depth.
                    for a in &all {
                        for b in &frontier {
                            compose2(g, a, b, &mut seen, &mut next);
                            compose2(g, b, a, &mut seen, &mut next);
                        }
                    }
                    for a in &frontier {
                        compose2(g, a, a, &mut seen, &mut next);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        if next.is_empty() {
            saturated = true;
            break;
        }
        frontier = next;
    }
    Ok(CloneClosure {
        m,
        tables: all,
        saturated,
    })
}

fn compose2(
    g: &FiniteFn,
    a: &BinaryTable,
    b: &BinaryTable,
    seen: &mut HashSet<BinaryTable>,
    next: &mut Vec<BinaryTable>,
) {
    let t: BinaryTable = a
        .iter()
        .zip(b)
        .map(|(&u, &v)| g.apply2(u, v))
        .collect();
    if seen.insert(t.clone()) {
        next.push(t);
    }
}

/// The Lukasiewicz generators over `n` values as finite tables.
pub fn luk_generators(n: u32) -> Vec<FiniteFn> {
    let top = n - 1;
    let neg = FiniteFn::new(n, 1, (0..n).map(|x| top - x).collect()).unwrap();
    let imp = FiniteFn::new(
        n,
        2,
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (top - x + y).min(top)))
            .collect(),
    )
    .unwrap();
    vec![neg, imp]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luk3_negation_preserves_extremes_post_does_not() {
        let neg_l = FiniteFn::new(3, 1, vec![2, 1, 0]).unwrap();
        assert!(preserves_extremes(&neg_l));
        let neg_p = FiniteFn::new(3, 1, vec![1, 2, 0]).unwrap();
        assert!(!preserves_extremes(&neg_p));
    }

    #[test]
    fn closure_of_luk3_generators_is_sound_for_extremes() {
        let closure = clone_closure(&luk_generators(3), 4).unwrap();
        for t in &closure.tables {
            let f = FiniteFn::new(3, 2, t.clone()).unwrap();
            assert!(preserves_extremes(&f));
        }
        assert!(closure.tables.len() > 10);
    }

    #[test]
    fn all_four_extreme_restrictions_appear_among_unary_members() {
        let closure = clone_closure(&luk_generators(3), 4).unwrap();
        let mut patterns = std::collections::BTreeSet::new();
        for t in &closure.tables {
            if let Some(u) = closure.essentially_unary(t) {
                patterns.insert((u[0], u[2]));
            }
        }
        for want in [(0, 0), (0, 2), (2, 0), (2, 2)] {
            assert!(patterns.contains(&want), "missing pattern {want:?}");
        }
    }

    #[test]
    fn depth_zero_holds_only_projections() {
        let closure = clone_closure(&luk_generators(3), 0).unwrap();
        assert_eq!(closure.tables.len(), 2);
    }
}
