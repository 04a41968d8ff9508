//! Introduction-rule generation from truth tables.
//!
//! For a connective and a place, the tuples where the connective takes
//! (or avoids) the place's value form a predicate over argument values.
//! That predicate is written as a conjunction of clauses "argument k lies
//! in R_k"; each clause becomes one premise sequent that mentions
//! argument k at exactly the places in R_k. Clause sets are minimized by
//! exact set cover over the subsumption-minimal valid clauses, and every
//! generated rule is re-validated against the defining equivalence by
//! brute force.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::matrices::{EvalError, Logic, TruthValue};
use crate::syntax::{Connective, Formula};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum RulegenError {
    #[error("connective arity {0} unsupported for rule generation")]
    UnsupportedArity(usize),
    #[error("place {place} out of range for {n} truth values")]
    PlaceOutOfRange { place: usize, n: u32 },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Whether the rule characterizes "takes the value" (p-rules) or
/// "avoids the value".
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RuleMode {
    P,
    N,
}

/// One premise pattern: `places[v]` lists the argument indexes that the
/// premise puts at place `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RulePremise {
    pub places: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedRule {
    pub values: u32,
    pub conn: Connective,
    pub place: usize,
    pub mode: RuleMode,
    pub arity: usize,
    pub premises: Vec<RulePremise>,
}

const ARG_NAMES: [&str; 2] = ["psi", "phi"];

impl fmt::Display for GeneratedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_premise = |premise: &RulePremise| -> String {
            let mut sides = Vec::new();
            for v in 0..self.values as usize {
                let mut side = format!("G{}", v + 1);
                for &k in &premise.places[v] {
                    side.push_str(", ");
                    side.push_str(ARG_NAMES[k]);
                }
                sides.push(side);
            }
            sides.join(" | ")
        };
        for premise in &self.premises {
            writeln!(f, "  {}", fmt_premise(premise))?;
        }
        writeln!(f, "  {}", "-".repeat(40))?;
        let principal = match self.arity {
            1 => Formula::unary(self.conn, Formula::var(ARG_NAMES[0])),
            _ => Formula::binary(
                self.conn,
                Formula::var(ARG_NAMES[0]),
                Formula::var(ARG_NAMES[1]),
            ),
        };
        let mut sides = Vec::new();
        for v in 0..self.values as usize {
            if v == self.place {
                sides.push(format!("G{}, {}", v + 1, principal));
            } else {
                sides.push(format!("G{}", v + 1));
            }
        }
        write!(
            f,
            "  {}   [{}: {}]",
            sides.join(" | "),
            self.conn.name(),
            self.place
        )
    }
}

/// A clause `arg_0 in per_arg[0] \/ ... \/ arg_m in per_arg[m]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Clause {
    per_arg: Vec<BTreeSet<u32>>,
}

impl Clause {
    fn satisfied_by(&self, tuple: &[u32]) -> bool {
        self.per_arg.iter().zip(tuple).any(|(r, v)| r.contains(v))
    }

    fn size(&self) -> usize {
        self.per_arg.iter().map(BTreeSet::len).sum()
    }

    fn subsumes(&self, other: &Clause) -> bool {
        // Componentwise subset: a smaller clause excludes at least as much.
        self.per_arg
            .iter()
            .zip(&other.per_arg)
            .all(|(a, b)| a.is_subset(b))
    }
}

fn all_tuples(n: u32, arity: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t2 = t.clone();
                    t2.push(v);
                    t2
                })
            })
            .collect();
    }
    out
}

fn apply_conn(logic: &Logic, conn: Connective, tuple: &[u32]) -> Result<u32, EvalError> {
    let args: Vec<TruthValue> = tuple.iter().map(|&v| TruthValue::Finite(v)).collect();
    match logic.apply(conn, &args)? {
        TruthValue::Finite(v) => Ok(v),
        _ => unreachable!("finite logic"),
    }
}

/// All subsumption-minimal clauses containing `members`.
fn minimal_valid_clauses(n: u32, arity: usize, members: &[Vec<u32>]) -> Vec<Clause> {
    let subsets: Vec<BTreeSet<u32>> = (0..(1u32 << n))
        .map(|mask| (0..n).filter(|v| mask & (1 << v) != 0).collect())
        .collect();
    let mut valid: Vec<Clause> = Vec::new();
    let mut stack: Vec<Vec<BTreeSet<u32>>> = vec![vec![]];
    // Enumerate the full clause space (tiny: 2^n per argument).
    while let Some(partial) = stack.pop() {
        if partial.len() == arity {
            let clause = Clause { per_arg: partial };
            if members.iter().all(|t| clause.satisfied_by(t)) {
                valid.push(clause);
            }
            continue;
        }
        for s in &subsets {
            let mut next = partial.clone();
            next.push(s.clone());
            stack.push(next);
        }
    }
    let mut minimal: Vec<Clause> = valid
        .iter()
        .filter(|c| !valid.iter().any(|o| *o != **c && o.subsumes(c)))
        .cloned()
        .collect();
    minimal.sort_by_key(|c| (c.size(), c.per_arg.clone()));
    minimal.dedup();
    minimal
}

/// Smallest subset of `candidates` whose conjunction excludes every
/// non-member; deterministic (iterative deepening, index order).
fn minimum_cover(candidates: &[Clause], non_members: &[Vec<u32>]) -> Option<Vec<Clause>> {
    if non_members.is_empty() {
        return Some(Vec::new());
    }
    let excludes: Vec<Vec<bool>> = candidates
        .iter()
        .map(|c| non_members.iter().map(|t| !c.satisfied_by(t)).collect())
        .collect();
    for k in 1..=candidates.len().max(1) {
        let mut chosen = Vec::new();
        if cover_search(&excludes, non_members.len(), 0, k, &mut chosen) {
            return Some(chosen.iter().map(|&i| candidates[i].clone()).collect());
        }
    }
    None
}

fn cover_search(
    excludes: &[Vec<bool>],
    universe: usize,
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return (0..universe).all(|t| chosen.iter().any(|&c| excludes[c][t]));
    }
    for i in from..excludes.len() {
        chosen.push(i);
        if cover_search(excludes, universe, i + 1, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn generate_rule(
    logic: &Logic,
    conn: Connective,
    place: usize,
    mode: RuleMode,
) -> Result<GeneratedRule, RulegenError> {
    let n = logic
        .finite_values()
        .ok_or_else(|| EvalError::NotFinite(logic.id()))?;
    if place >= n as usize {
        return Err(RulegenError::PlaceOutOfRange { place, n });
    }
    let arity = conn.arity();
    if arity > 2 {
        return Err(RulegenError::UnsupportedArity(arity));
    }
    let tuples = all_tuples(n, arity);
    let mut members = Vec::new();
    let mut non_members = Vec::new();
    for t in tuples {
        let hit = apply_conn(logic, conn, &t)? == place as u32;
        let include = match mode {
            RuleMode::P => hit,
            RuleMode::N => !hit,
        };
        if include {
            members.push(t);
        } else {
            non_members.push(t);
        }
    }
    let premises = if members.is_empty() {
        // The connective never produces this value: a single premise with
        // empty clause content, which no interpretation p-satisfies.
        vec![RulePremise {
            places: vec![Vec::new(); n as usize],
        }]
    } else {
        let candidates = minimal_valid_clauses(n, arity, &members);
        let cover = minimum_cover(&candidates, &non_members)
            .expect("falsifying-tuple clauses always cover");
        cover
            .into_iter()
            .map(|clause| {
                let mut places = vec![Vec::new(); n as usize];
                for (k, r) in clause.per_arg.iter().enumerate() {
                    for &v in r {
                        places[v as usize].push(k);
                    }
                }
                RulePremise { places }
            })
            .collect()
    };
    Ok(GeneratedRule {
        values: n,
        conn,
        place,
        mode,
        arity,
        premises,
    })
}

/// Brute-force check of the defining equivalence: for every argument
/// tuple, the connective takes (avoids) the place value exactly when all
/// premises are p-satisfied under that tuple.
pub fn validate_rule(logic: &Logic, rule: &GeneratedRule) -> Result<bool, RulegenError> {
    let n = rule.values;
    for tuple in all_tuples(n, rule.arity) {
        let hit = apply_conn(logic, rule.conn, &tuple)? == rule.place as u32;
        let target = match rule.mode {
            RuleMode::P => hit,
            RuleMode::N => !hit,
        };
        let premises_sat = rule.premises.iter().all(|premise| {
            premise
                .places
                .iter()
                .enumerate()
                .any(|(v, args)| args.iter().any(|&k| tuple[k] == v as u32))
        });
        if target != premises_sat {
            return Ok(false);
        }
    }
    Ok(true)
}
