//! Many-sided sequents for finite logics.
//!
//! An n-sequent has one multiset of formulas per truth value; place `i`
//! (0-based) is associated with value `i`. It is p-satisfied when some
//! formula at some place takes exactly that place's value, n-satisfied
//! when some formula avoids its place's value.

use std::fmt;

use crate::matrices::{eval, finite_valuations, EvalError, Logic, TautologyResult, TruthValue, Valuation};
use crate::syntax::{self, Formula};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NSequent {
    pub places: Vec<Vec<Formula>>,
}

impl NSequent {
    pub fn empty(n: usize) -> Self {
        NSequent {
            places: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }

    pub fn with(mut self, place: usize, formula: Formula) -> Self {
        self.places[place].push(formula);
        self
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vars = std::collections::BTreeSet::new();
        for place in &self.places {
            for f in place {
                vars.extend(f.variables());
            }
        }
        vars.into_iter().collect()
    }

    /// Multiset-canonical form: formulas sorted within each place.
    pub fn canonical(&self) -> NSequent {
        let mut places = self.places.clone();
        for p in places.iter_mut() {
            p.sort();
        }
        NSequent { places }
    }

    pub fn is_empty(&self) -> bool {
        self.places.iter().all(|p| p.is_empty())
    }

    /// Parses "f1, f2 | | f3" (places separated by '|').
    pub fn parse(text: &str, n: usize) -> Result<NSequent, String> {
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() != n {
            return Err(format!("expected {n} places, found {}", parts.len()));
        }
        let mut places = Vec::with_capacity(n);
        for part in parts {
            let mut fs = Vec::new();
            for chunk in part.split(',') {
                if chunk.trim().is_empty() {
                    continue;
                }
                fs.push(syntax::parse(chunk).map_err(|e| e.to_string())?);
            }
            places.push(fs);
        }
        Ok(NSequent { places })
    }
}

impl fmt::Display for NSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, place) in self.places.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, formula) in place.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{formula}")?;
            }
        }
        Ok(())
    }
}

/// p-satisfaction: some formula at place `i` takes the value `i`.
pub fn psat(logic: &Logic, s: &NSequent, v: &Valuation) -> Result<bool, EvalError> {
    for (i, place) in s.places.iter().enumerate() {
        for f in place {
            if eval(logic, f, v)? == TruthValue::Finite(i as u32) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// n-satisfaction: some formula at place `i` avoids the value `i`.
pub fn nsat(logic: &Logic, s: &NSequent, v: &Valuation) -> Result<bool, EvalError> {
    for (i, place) in s.places.iter().enumerate() {
        for f in place {
            if eval(logic, f, v)? != TruthValue::Finite(i as u32) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PValidity {
    Valid,
    Countermodel(Valuation),
}

/// Exhaustive p-validity over all valuations of the sequent's variables.
pub fn pvalid(logic: &Logic, s: &NSequent) -> Result<PValidity, EvalError> {
    let vars = s.variables();
    for v in finite_valuations(logic, &vars)? {
        if !psat(logic, s, &v)? {
            return Ok(PValidity::Countermodel(v));
        }
    }
    Ok(PValidity::Valid)
}

/// The sequent `[V+ : f]`: the formula placed at every designated value.
pub fn designated_place_sequent(logic: &Logic, f: &Formula) -> Result<NSequent, EvalError> {
    let n = logic
        .finite_values()
        .ok_or_else(|| EvalError::NotFinite(logic.id()))?;
    let mut s = NSequent::empty(n as usize);
    for v in 0..n {
        if logic.designated(&TruthValue::Finite(v))? {
            s.places[v as usize].push(f.clone());
        }
    }
    Ok(s)
}

/// Agreement between p-validity of `[V+ : f]` and exhaustive tautology
/// checking; used as a desk-scale cross-check.
pub fn pvalid_matches_tautology(logic: &Logic, f: &Formula) -> Result<bool, EvalError> {
    let s = designated_place_sequent(logic, f)?;
    let by_sequent = matches!(pvalid(logic, &s)?, PValidity::Valid);
    let by_search = matches!(
        crate::matrices::tautology_finite(logic, f)?,
        TautologyResult::Tautology
    );
    Ok(by_sequent == by_search)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn luk3() -> Logic {
        Logic::FiniteLuk { n: 3 }
    }

    fn val(pairs: &[(&str, u32)]) -> Valuation {
        let mut v = Valuation::new();
        for (k, x) in pairs {
            v = v.bind(*k, TruthValue::Finite(*x));
        }
        v
    }

    #[test]
    fn psat_and_nsat_basics() {
        let p = parse("p").unwrap();
        let s = NSequent::empty(3).with(1, p.clone());
        assert!(psat(&luk3(), &s, &val(&[("p", 1)])).unwrap());
        assert!(!psat(&luk3(), &s, &val(&[("p", 2)])).unwrap());

        let s0 = NSequent::empty(3).with(0, p);
        let v = val(&[("p", 1)]);
        assert!(!psat(&luk3(), &s0, &v).unwrap());
        assert!(nsat(&luk3(), &s0, &v).unwrap());
    }

    #[test]
    fn excluded_middle_is_pvalid_at_the_two_upper_places() {
        let f = parse("p \\/ ~L p").unwrap();
        let s = NSequent::empty(3).with(1, f.clone()).with(2, f);
        assert_eq!(pvalid(&luk3(), &s).unwrap(), PValidity::Valid);
    }

    #[test]
    fn singleton_place_sequents() {
        let p = parse("p").unwrap();
        let s = NSequent::empty(3).with(2, p);
        match pvalid(&luk3(), &s).unwrap() {
            PValidity::Countermodel(v) => {
                assert_eq!(v.get("p"), Some(&TruthValue::Finite(0)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn axiom_sequent_is_pvalid() {
        let p = parse("p").unwrap();
        let s = NSequent::empty(3)
            .with(0, p.clone())
            .with(1, p.clone())
            .with(2, p);
        assert_eq!(pvalid(&luk3(), &s).unwrap(), PValidity::Valid);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = NSequent::parse("p ->L q, p | | q", 3).unwrap();
        assert_eq!(s.places[0].len(), 2);
        assert_eq!(s.places[1].len(), 0);
        assert_eq!(s.places[2].len(), 1);
        let shown = s.to_string();
        assert_eq!(NSequent::parse(&shown, 3).unwrap(), s);
    }

    #[test]
    fn designated_place_matches_tautology_for_identity() {
        let f = parse("p ->L p").unwrap();
        assert!(pvalid_matches_tautology(&luk3(), &f).unwrap());
        let g = parse("p \\/ ~L p").unwrap();
        assert!(pvalid_matches_tautology(&luk3(), &g).unwrap());
    }
}
