//! Hilbert-style proof checking.
//!
//! Axioms are schemata and a line justified by an axiom must be an
//! instance of it (the substitution rule is absorbed into instance
//! checking). Modus ponens cites the minor and major lines by 1-based
//! number; the major line must be the system's implication applied to
//! the minor line and the current formula.

use crate::syntax::{match_schema, substitute, Assignment, Connective, Formula, Schema};

#[derive(Clone, Debug)]
pub struct AxiomSystem {
    pub id: String,
    /// Implication tag used by modus ponens.
    pub imp: Connective,
    pub schemata: Vec<(String, Schema)>,
}

impl AxiomSystem {
    pub fn schema(&self, name: &str) -> Option<&Schema> {
        self.schemata
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// Instance of the named schema; explicit bindings, when present, are
    /// verified against the formula.
    Axiom {
        name: String,
        bindings: Option<Assignment>,
    },
    /// 0-based index into the premise list.
    Premise(usize),
    /// `ModusPonens(minor, major)` with 1-based line numbers.
    ModusPonens(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertProof {
    pub lines: Vec<ProofLine>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HilbertVerdict {
    Accept { conclusion: Formula },
    Reject { line: usize, reason: String },
}

impl HilbertVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, HilbertVerdict::Accept { .. })
    }
}

pub fn check_hilbert(
    system: &AxiomSystem,
    premises: &[Formula],
    proof: &HilbertProof,
) -> HilbertVerdict {
    if proof.lines.is_empty() {
        return HilbertVerdict::Reject {
            line: 0,
            reason: "empty proof".into(),
        };
    }
    for (idx, line) in proof.lines.iter().enumerate() {
        let lineno = idx + 1;
        let reject = |reason: String| HilbertVerdict::Reject {
            line: lineno,
            reason,
        };
        match &line.just {
            Justification::Axiom { name, bindings } => {
                let Some(schema) = system.schema(name) else {
                    return reject(format!("unknown axiom {name:?} in system {}", system.id));
                };
                match bindings {
                    Some(b) => match substitute(schema, b) {
                        Ok(f) if f == line.formula => {}
                        Ok(f) => {
                            return reject(format!(
                                "axiom {name} under the given bindings yields {f}, not {}",
                                line.formula
                            ))
                        }
                        Err(e) => return reject(format!("axiom {name}: {e}")),
                    },
                    None => {
                        if match_schema(schema, &line.formula).is_none() {
                            return reject(format!(
                                "{} is not an instance of axiom {name}",
                                line.formula
                            ));
                        }
                    }
                }
            }
            Justification::Premise(i) => match premises.get(*i) {
                Some(p) if *p == line.formula => {}
                Some(p) => {
                    return reject(format!("premise {i} is {p}, line states {}", line.formula))
                }
                None => return reject(format!("premise index {i} out of range")),
            },
            Justification::ModusPonens(minor, major) => {
                if *minor == 0 || *major == 0 || *minor >= lineno || *major >= lineno {
                    return reject(format!(
                        "modus ponens must cite earlier lines, got ({minor}, {major})"
                    ));
                }
                let minor_f = &proof.lines[minor - 1].formula;
                let major_f = &proof.lines[major - 1].formula;
                let expected = Formula::binary(system.imp, minor_f.clone(), line.formula.clone());
                if *major_f != expected {
                    return reject(format!(
                        "major premise shape: line {major} is {major_f}, expected {expected}"
                    ));
                }
            }
        }
    }
    HilbertVerdict::Accept {
        conclusion: proof.lines.last().unwrap().formula.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofs::axioms::builtin_system;
    use crate::syntax::parse;

    fn line(formula: &str, just: Justification) -> ProofLine {
        ProofLine {
            formula: parse(formula).unwrap(),
            just,
        }
    }

    fn axiom(name: &str) -> Justification {
        Justification::Axiom {
            name: name.into(),
            bindings: None,
        }
    }

    /// The classical derivation of p -> p from the first two schemata.
    fn identity_proof() -> HilbertProof {
        HilbertProof {
            lines: vec![
                line("p ->L ((q ->L p) ->L p)", axiom("A1")),
                line(
                    "(p ->L (q ->L p)) ->L ((p ->L ((q ->L p) ->L p)) ->L (p ->L p))",
                    axiom("A2"),
                ),
                line("p ->L (q ->L p)", axiom("A1")),
                line(
                    "(p ->L ((q ->L p) ->L p)) ->L (p ->L p)",
                    Justification::ModusPonens(3, 2),
                ),
                line("p ->L p", Justification::ModusPonens(1, 4)),
            ],
        }
    }

    #[test]
    fn identity_derivation_is_accepted() {
        let sys = builtin_system("classical").unwrap();
        let verdict = check_hilbert(&sys, &[], &identity_proof());
        assert_eq!(
            verdict,
            HilbertVerdict::Accept {
                conclusion: parse("p ->L p").unwrap()
            }
        );
    }

    #[test]
    fn swapped_modus_ponens_operands_are_rejected() {
        let sys = builtin_system("classical").unwrap();
        let mut proof = identity_proof();
        proof.lines[3].just = Justification::ModusPonens(2, 3);
        match check_hilbert(&sys, &[], &proof) {
            HilbertVerdict::Reject { line, reason } => {
                assert_eq!(line, 4);
                assert!(reason.contains("major premise shape"), "{reason}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn premises_must_match() {
        let sys = builtin_system("classical").unwrap();
        let proof = HilbertProof {
            lines: vec![line("p", Justification::Premise(0))],
        };
        assert!(check_hilbert(&sys, &[parse("p").unwrap()], &proof).is_accept());
        assert!(!check_hilbert(&sys, &[parse("q").unwrap()], &proof).is_accept());
        assert!(!check_hilbert(&sys, &[], &proof).is_accept());
    }

    #[test]
    fn tuziak_axiom_instance_as_one_line_proof() {
        let sys = builtin_system("tuziak:4").unwrap();
        // (p ->L^4 q) ->L (p ->L^3 q) instantiates the contraction axiom.
        let f = "(p ->L (p ->L (p ->L (p ->L q)))) ->L (p ->L (p ->L (p ->L q)))";
        let proof = HilbertProof {
            lines: vec![line(f, axiom("T4"))],
        };
        assert!(check_hilbert(&sys, &[], &proof).is_accept());
    }

    #[test]
    fn explicit_bindings_are_verified() {
        let sys = builtin_system("classical").unwrap();
        let mut bindings = Assignment::new();
        bindings.insert("A".into(), parse("p").unwrap());
        bindings.insert("B".into(), parse("q").unwrap());
        let ok = HilbertProof {
            lines: vec![line(
                "p ->L (q ->L p)",
                Justification::Axiom {
                    name: "A1".into(),
                    bindings: Some(bindings.clone()),
                },
            )],
        };
        assert!(check_hilbert(&sys, &[], &ok).is_accept());
        let bad = HilbertProof {
            lines: vec![line(
                "q ->L (q ->L q)",
                Justification::Axiom {
                    name: "A1".into(),
                    bindings: Some(bindings),
                },
            )],
        };
        assert!(!check_hilbert(&sys, &[], &bad).is_accept());
    }
}
