//! Bounded cut-free backward search over generated introduction rules.
//!
//! Leaves close on axiom sequents (one shared formula at every place),
//! with explicit weakening steps reconstructing the side formulas, so a
//! returned proof re-checks node for node. Search is deterministic:
//! places, principal formulas and rule premises are explored in a fixed
//! order and the first complete proof wins.

use std::collections::HashMap;
use std::rc::Rc;

use crate::matrices::Logic;
use crate::syntax::{Connective, Formula};

use super::nseq::NSequent;
use super::rulegen::{generate_rule, GeneratedRule, RuleMode, RulegenError};

/// All p-mode introduction rules of a finite logic, one per interpreted
/// connective and place.
#[derive(Clone, Debug)]
pub struct RuleSet {
    pub logic: Logic,
    rules: HashMap<(Connective, usize), GeneratedRule>,
}

impl RuleSet {
    pub fn build(logic: &Logic) -> Result<RuleSet, RulegenError> {
        let n = logic.finite_values().expect("finite logic") as usize;
        let mut rules = HashMap::new();
        for conn in Connective::ALL {
            if !logic.interprets(conn) {
                continue;
            }
            for place in 0..n {
                rules.insert(
                    (conn, place),
                    generate_rule(logic, conn, place, RuleMode::P)?,
                );
            }
        }
        Ok(RuleSet {
            logic: logic.clone(),
            rules,
        })
    }

    pub fn get(&self, conn: Connective, place: usize) -> Option<&GeneratedRule> {
        self.rules.get(&(conn, place))
    }

    pub fn values(&self) -> usize {
        self.logic.finite_values().expect("finite logic") as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NProofStep {
    /// The axiom sequent: one occurrence of the formula at every place.
    Axiom { formula: Formula },
    /// Adds one formula at one place on top of the single child.
    Weaken { place: usize, formula: Formula },
    /// Applies the introduction rule for `(conn, place)` to a principal
    /// occurrence `conn(args)` at that place.
    Intro {
        conn: Connective,
        place: usize,
        args: Vec<Formula>,
    },
}

/// Sequents are stored in canonical (sorted-multiset) form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NProof {
    pub sequent: NSequent,
    pub step: NProofStep,
    pub children: Vec<Rc<NProof>>,
}

#[derive(Clone, Debug)]
pub enum ProveOutcome {
    Proved(Rc<NProof>),
    /// Exhausted the whole (finite) search space: no proof exists in this
    /// calculus regardless of depth.
    Fail,
    /// Some branch hit the depth bound, so the search is inconclusive.
    DepthExceeded,
}

enum Res {
    Proved(Rc<NProof>),
    FailComplete,
    FailDepth,
}

#[derive(Clone)]
enum Memo {
    Proved(Rc<NProof>),
    FailComplete,
}

pub fn prove_bounded(rules: &RuleSet, goal: &NSequent, depth: u32) -> ProveOutcome {
    let mut memo: HashMap<NSequent, Memo> = HashMap::new();
    match search(rules, goal.canonical(), depth, &mut memo) {
        Res::Proved(p) => ProveOutcome::Proved(p),
        Res::FailComplete => ProveOutcome::Fail,
        Res::FailDepth => ProveOutcome::DepthExceeded,
    }
}

fn search(
    rules: &RuleSet,
    seq: NSequent,
    depth: u32,
    memo: &mut HashMap<NSequent, Memo>,
) -> Res {
    if let Some(hit) = memo.get(&seq) {
        return match hit {
            Memo::Proved(p) => Res::Proved(p.clone()),
            Memo::FailComplete => Res::FailComplete,
        };
    }

    if let Some(proof) = try_axiom(&seq) {
        memo.insert(seq, Memo::Proved(proof.clone()));
        return Res::Proved(proof);
    }

    let mut saw_depth_cut = false;
    for place in 0..seq.places.len() {
        let mut seen_principal: Option<&Formula> = None;
        for idx in 0..seq.places[place].len() {
            let principal = &seq.places[place][idx];
            // Canonical sequents keep duplicates adjacent.
            if seen_principal == Some(principal) {
                continue;
            }
            seen_principal = Some(principal);
            let Formula::Apply(conn, args) = principal else {
                continue;
            };
            let Some(rule) = rules.get(*conn, place) else {
                continue;
            };
            if depth == 0 {
                // An applicable decomposition exists but cannot be explored.
                saw_depth_cut = true;
                continue;
            }

            let mut context = seq.clone();
            context.places[place].remove(idx);
            let mut children = Vec::with_capacity(rule.premises.len());
            let mut alternative_failed = false;
            for premise in &rule.premises {
                let mut child = context.clone();
                for (v, arg_ids) in premise.places.iter().enumerate() {
                    for &k in arg_ids {
                        child.places[v].push(args[k].clone());
                    }
                }
                match search(rules, child.canonical(), depth - 1, memo) {
                    Res::Proved(p) => children.push(p),
                    Res::FailComplete => {
                        alternative_failed = true;
                        break;
                    }
                    Res::FailDepth => {
                        saw_depth_cut = true;
                        alternative_failed = true;
                        break;
                    }
                }
            }
            if !alternative_failed {
                let proof = Rc::new(NProof {
                    sequent: seq.clone(),
                    step: NProofStep::Intro {
                        conn: *conn,
                        place,
                        args: args.clone(),
                    },
                    children,
                });
                memo.insert(seq, Memo::Proved(proof.clone()));
                return Res::Proved(proof);
            }
        }
    }

    if saw_depth_cut {
        Res::FailDepth
    } else {
        memo.insert(seq, Memo::FailComplete);
        Res::FailComplete
    }
}

/// Closes the sequent when some formula occurs at every place: the axiom
/// sequent plus a chain of weakenings for the side formulas.
fn try_axiom(seq: &NSequent) -> Option<Rc<NProof>> {
    let first = seq.places.first()?;
    let shared = first
        .iter()
        .find(|f| seq.places.iter().all(|p| p.contains(f)))?;

    let n = seq.places.len();
    let mut base = NSequent::empty(n);
    for p in 0..n {
        base.places[p].push(shared.clone());
    }
    let mut proof = Rc::new(NProof {
        sequent: base.canonical(),
        step: NProofStep::Axiom {
            formula: shared.clone(),
        },
        children: Vec::new(),
    });
    for place in 0..n {
        let mut removed_shared = false;
        for f in &seq.places[place] {
            if !removed_shared && f == shared {
                removed_shared = true;
                continue;
            }
            let mut grown = proof.sequent.clone();
            grown.places[place].push(f.clone());
            proof = Rc::new(NProof {
                sequent: grown.canonical(),
                step: NProofStep::Weaken {
                    place,
                    formula: f.clone(),
                },
                children: vec![proof],
            });
        }
    }
    debug_assert_eq!(proof.sequent, seq.canonical());
    Some(proof)
}

/// Structural re-check of a proof against the generated calculus.
pub fn check_nproof(rules: &RuleSet, proof: &NProof) -> Result<(), String> {
    match &proof.step {
        NProofStep::Axiom { formula } => {
            if !proof.children.is_empty() {
                return Err("axiom with children".into());
            }
            let n = proof.sequent.places.len();
            let mut want = NSequent::empty(n);
            for p in 0..n {
                want.places[p].push(formula.clone());
            }
            if proof.sequent != want.canonical() {
                return Err(format!("not an axiom sequent: {}", proof.sequent));
            }
            Ok(())
        }
        NProofStep::Weaken { place, formula } => {
            let [child] = proof.children.as_slice() else {
                return Err("weakening needs exactly one child".into());
            };
            let mut want = child.sequent.clone();
            if *place >= want.places.len() {
                return Err("weakening place out of range".into());
            }
            want.places[*place].push(formula.clone());
            if proof.sequent != want.canonical() {
                return Err(format!("bad weakening at {}", proof.sequent));
            }
            check_nproof(rules, child)
        }
        NProofStep::Intro { conn, place, args } => {
            let rule = rules
                .get(*conn, *place)
                .ok_or_else(|| format!("no rule for {} at place {place}", conn.name()))?;
            let principal = Formula::Apply(*conn, args.clone());
            let pos = proof.sequent.places[*place]
                .iter()
                .position(|f| *f == principal)
                .ok_or_else(|| format!("principal {principal} missing at place {place}"))?;
            let mut context = proof.sequent.clone();
            context.places[*place].remove(pos);
            if proof.children.len() != rule.premises.len() {
                return Err(format!(
                    "rule {} at {place} expects {} premises, proof has {}",
                    conn.name(),
                    rule.premises.len(),
                    proof.children.len()
                ));
            }
            for (premise, child) in rule.premises.iter().zip(&proof.children) {
                let mut want = context.clone();
                for (v, arg_ids) in premise.places.iter().enumerate() {
                    for &k in arg_ids {
                        want.places[v].push(args[k].clone());
                    }
                }
                if child.sequent != want.canonical() {
                    return Err(format!(
                        "premise mismatch under {} at {place}: want {}, have {}",
                        conn.name(),
                        want.canonical(),
                        child.sequent
                    ));
                }
                check_nproof(rules, child)?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{tautology_finite, TautologyResult};
    use crate::proofs::nseq::designated_place_sequent;
    use crate::syntax::{iterated_imp, parse};

    fn luk3_rules() -> RuleSet {
        RuleSet::build(&Logic::FiniteLuk { n: 3 }).unwrap()
    }

    #[test]
    fn axiom_sequent_closes_immediately() {
        let rules = luk3_rules();
        let p = parse("p").unwrap();
        let s = NSequent::empty(3)
            .with(0, p.clone())
            .with(1, p.clone())
            .with(2, p);
        match prove_bounded(&rules, &s, 0) {
            ProveOutcome::Proved(proof) => {
                assert!(matches!(proof.step, NProofStep::Axiom { .. }));
                check_nproof(&rules, &proof).unwrap();
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn proves_the_tuziak_tautology_sequent() {
        let rules = luk3_rules();
        let p = parse("p").unwrap();
        let q = parse("q").unwrap();
        let f = Formula::binary(
            Connective::ImpL,
            iterated_imp(Connective::ImpL, &p, &q, 3),
            iterated_imp(Connective::ImpL, &p, &q, 2),
        );
        assert_eq!(
            tautology_finite(&rules.logic, &f).unwrap(),
            TautologyResult::Tautology
        );
        let goal = designated_place_sequent(&rules.logic, &f).unwrap();
        match prove_bounded(&rules, &goal, 8) {
            ProveOutcome::Proved(proof) => check_nproof(&rules, &proof).unwrap(),
            other => panic!("expected proof, got {other:?}"),
        }
    }

    #[test]
    fn fails_on_the_excluded_middle_sequent() {
        let rules = luk3_rules();
        let f = parse("p \\/ ~L p").unwrap();
        let goal = designated_place_sequent(&rules.logic, &f).unwrap();
        assert!(matches!(
            prove_bounded(&rules, &goal, 8),
            ProveOutcome::Fail
        ));
    }

    #[test]
    fn depth_zero_on_compound_goal_is_inconclusive() {
        let rules = luk3_rules();
        let f = parse("p ->L p").unwrap();
        let goal = designated_place_sequent(&rules.logic, &f).unwrap();
        assert!(matches!(
            prove_bounded(&rules, &goal, 0),
            ProveOutcome::DepthExceeded
        ));
    }

    #[test]
    fn rejected_mutation_of_a_returned_proof() {
        let rules = luk3_rules();
        let f = parse("p ->L p").unwrap();
        let goal = designated_place_sequent(&rules.logic, &f).unwrap();
        let ProveOutcome::Proved(proof) = prove_bounded(&rules, &goal, 8) else {
            panic!("identity should be provable");
        };
        check_nproof(&rules, &proof).unwrap();
        let mut broken = (*proof).clone();
        broken.sequent.places[0].push(parse("q").unwrap());
        assert!(check_nproof(&rules, &broken).is_err());
    }
}
