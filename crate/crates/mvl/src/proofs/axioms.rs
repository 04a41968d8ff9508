//! Built-in Hilbert axiom systems.
//!
//! Metavariables are uppercase (`A`, `B`, `C`); each system fixes the
//! implication tag its modus ponens uses. The finite Lukasiewicz systems
//! are generated per value count `n`, with the iterated-implication
//! axioms expanded concretely.

use crate::syntax::{parse_schema, Connective, Schema};

use super::hilbert::AxiomSystem;

fn schemata(pairs: &[(&str, &str)]) -> Vec<(String, Schema)> {
    pairs
        .iter()
        .map(|(name, text)| {
            (
                (*name).to_owned(),
                parse_schema(text).expect("builtin schema parses"),
            )
        })
        .collect()
}

/// Classical propositional logic, read over the Lukasiewicz tags (the
/// two-valued matrix interprets them classically).
fn classical() -> AxiomSystem {
    AxiomSystem {
        id: "classical".into(),
        imp: Connective::ImpL,
        schemata: schemata(&[
            ("A1", "A ->L (B ->L A)"),
            ("A2", "(A ->L B) ->L ((A ->L (B ->L C)) ->L (A ->L C))"),
            ("A3", "(A /\\ B) ->L A"),
            ("A4", "(A /\\ B) ->L B"),
            ("A5", "(C ->L A) ->L ((C ->L B) ->L (C ->L (A /\\ B)))"),
            ("A6", "A ->L (A \\/ B)"),
            ("A7", "B ->L (A \\/ B)"),
            ("A8", "(A ->L C) ->L ((B ->L C) ->L ((A \\/ B) ->L C))"),
            ("A9", "(A ->L C) ->L ((A ->L ~L C) ->L ~L A)"),
            ("A10", "~L ~L A ->L A"),
        ]),
    }
}

/// Iterated implication `a ->^k b`.
fn iter_imp(a: &Schema, b: &Schema, k: u32) -> Schema {
    let mut out = b.clone();
    for _ in 0..k {
        out = Schema::Apply(Connective::ImpL, vec![a.clone(), out]);
    }
    out
}

/// The n-valued Lukasiewicz axiomatization, instantiated at a concrete n.
fn tuziak(n: u32) -> AxiomSystem {
    let a = Schema::MetaVar("A".into());
    let b = Schema::MetaVar("B".into());
    let mut out = schemata(&[
        ("T1", "(A ->L B) ->L ((B ->L C) ->L (A ->L C))"),
        ("T2", "A ->L (B ->L A)"),
        ("T3", "((A ->L B) ->L B) ->L ((B ->L A) ->L A)"),
    ]);
    // T4: (A ->^n B) ->L (A ->^{n-1} B).
    out.push((
        "T4".into(),
        Schema::Apply(
            Connective::ImpL,
            vec![iter_imp(&a, &b, n), iter_imp(&a, &b, n - 1)],
        ),
    ));
    out.extend(schemata(&[
        ("T5", "(A /\\ B) ->L A"),
        ("T6", "(A /\\ B) ->L B"),
        ("T7", "(A ->L B) ->L ((A ->L C) ->L (A ->L (B /\\ C)))"),
        ("T8", "A ->L (A \\/ B)"),
        ("T9", "B ->L (A \\/ B)"),
        ("T10", "(A ->L C) ->L ((B ->L C) ->L ((A \\/ B) ->L C))"),
        ("T11", "(~L A ->L ~L B) ->L (B ->L A)"),
    ]));
    // T12.s: (A <-> (A ->^{s-1} ~L A)) ->^{n-1} A, for the s with
    // 1 <= s <= n-1 not dividing n-1.
    for s in 1..n {
        if (n - 1) % s == 0 {
            continue;
        }
        let neg_a = Schema::Apply(Connective::NegL, vec![a.clone()]);
        let inner = Schema::Apply(
            Connective::Iff,
            vec![a.clone(), iter_imp(&a, &neg_a, s - 1)],
        );
        out.push((format!("T12.{s}"), iter_imp(&inner, &a, n - 1)));
    }
    AxiomSystem {
        id: format!("tuziak:{n}"),
        imp: Connective::ImpL,
        schemata: out,
    }
}

fn luk_inf() -> AxiomSystem {
    AxiomSystem {
        id: "luk-inf".into(),
        imp: Connective::ImpL,
        schemata: schemata(&[
            ("W1", "A ->L (B ->L A)"),
            ("W2", "(A ->L B) ->L ((B ->L C) ->L (A ->L C))"),
            ("W3", "((A ->L B) ->L B) ->L ((B ->L A) ->L A)"),
            ("W4", "(~L A ->L ~L B) ->L (B ->L A)"),
        ]),
    }
}

fn godel() -> AxiomSystem {
    AxiomSystem {
        id: "godel".into(),
        imp: Connective::ImpG,
        schemata: schemata(&[
            ("G1", "(A ->G B) ->G ((B ->G C) ->G (A ->G C))"),
            ("G2", "A ->G (A \\/ B)"),
            ("G3", "B ->G (A \\/ B)"),
            ("G4", "(A ->G C) ->G ((B ->G C) ->G ((A \\/ B) ->G C))"),
            ("G5", "(A /\\ B) ->G A"),
            ("G6", "(A /\\ B) ->G B"),
            ("G7", "(C ->G A) ->G ((C ->G B) ->G (C ->G (A /\\ B)))"),
            ("G8", "(A ->G (B ->G C)) ->G ((A /\\ B) ->G C)"),
            ("G9", "((A /\\ B) ->G C) ->G (A ->G (B ->G C))"),
            ("G10", "(A /\\ ~G A) ->G B"),
            ("G11", "(A ->G (A /\\ ~G A)) ->G ~G A"),
            ("G12", "(A ->G B) \\/ (B ->G A)"),
        ]),
    }
}

fn product() -> AxiomSystem {
    AxiomSystem {
        id: "product".into(),
        imp: Connective::ImpPi,
        schemata: schemata(&[
            ("P1", "(A ->P B) ->P ((B ->P C) ->P (A ->P C))"),
            ("P2", "(A &P B) ->P A"),
            ("P3", "(A &P B) ->P (B &P A)"),
            ("P4", "(A &P (A ->P B)) ->P (B &P (B ->P A))"),
            ("P5", "(A ->P (B ->P C)) ->P ((A &P B) ->P C)"),
            ("P6", "((A &P B) ->P C) ->P (A ->P (B ->P C))"),
            ("P7", "((A ->P B) ->P C) ->P (((B ->P A) ->P C) ->P C)"),
            ("P8", "bot ->P A"),
            (
                "P9",
                "~Pi ~Pi C ->P (((A &P C) ->P (B &P C)) ->P (A ->P B))",
            ),
            ("P10", "(A /\\ ~Pi A) ->P bot"),
        ]),
    }
}

/// The basic-fuzzy-logic schemata over a strong conjunction `&` and its
/// residuum `->`; three instantiations, one per t-norm. The Goedel
/// instance takes `/\` as its strong conjunction.
fn bl(conj: &str, imp: &str, id: &str, imp_tag: Connective) -> AxiomSystem {
    let s = |text: &str| {
        text.replace("&", conj)
            .replace("->", imp)
    };
    let pairs = [
        ("B1", "(A -> B) -> ((B -> C) -> (A -> C))"),
        ("B2", "(A & B) -> A"),
        ("B3", "(A & B) -> (B & A)"),
        ("B4", "(A & (A -> B)) -> (B & (B -> A))"),
        ("B5", "(A -> (B -> C)) -> ((A & B) -> C)"),
        ("B6", "((A & B) -> C) -> (A -> (B -> C))"),
        ("B7", "((A -> B) -> C) -> (((B -> A) -> C) -> C)"),
        ("B8", "bot -> A"),
    ];
    AxiomSystem {
        id: id.into(),
        imp: imp_tag,
        schemata: pairs
            .iter()
            .map(|(name, text)| {
                (
                    (*name).to_owned(),
                    parse_schema(&s(text)).expect("builtin schema parses"),
                )
            })
            .collect(),
    }
}

/// Interval neutrosophic schemata over the INL tags (Lukasiewicz-style
/// implication on triples). Two of the printed schemata, contraposition
/// (I7) and min-conjunction transitivity (I8), are not valid in the INL
/// matrix; they are kept as printed and the law checks report them.
fn inl() -> AxiomSystem {
    AxiomSystem {
        id: "inl".into(),
        imp: Connective::ImpL,
        schemata: schemata(&[
            ("I1", "A ->L (B ->L A)"),
            ("I2", "(A /\\ B) ->L B"),
            ("I3", "A ->L (A \\/ B)"),
            ("I4", "A ->L (B ->L (A /\\ B))"),
            ("I5", "(A ->L C) ->L ((B ->L C) ->L ((A \\/ B) ->L C))"),
            ("I6", "((A \\/ B) ->L C) <-> ((A ->L C) /\\ (B ->L C))"),
            ("I7", "(A ->L B) <-> (~L B ->L ~L A)"),
            ("I8", "((A ->L B) /\\ (B ->L C)) ->L (A ->L C)"),
            ("I9", "(A ->L B) <-> (A <-> (A /\\ B)) <-> (B ->L (A \\/ B))"),
        ]),
    }
}

/// Looks up a built-in system: `classical`, `tuziak:n`, `luk-inf`,
/// `godel`, `product`, `bl-luk`, `bl-godel`, `bl-product`, `inl`.
pub fn builtin_system(id: &str) -> Option<AxiomSystem> {
    if let Some(n) = id.strip_prefix("tuziak:") {
        let n: u32 = n.parse().ok()?;
        if n < 2 {
            return None;
        }
        return Some(tuziak(n));
    }
    match id {
        "classical" => Some(classical()),
        "luk-inf" => Some(luk_inf()),
        "godel" => Some(godel()),
        "product" => Some(product()),
        "bl-luk" => Some(bl("&L", "->L", "bl-luk", Connective::ImpL)),
        "bl-godel" => Some(bl("/\\", "->G", "bl-godel", Connective::ImpG)),
        "bl-product" => Some(bl("&P", "->P", "bl-product", Connective::ImpPi)),
        "inl" => Some(inl()),
        _ => None,
    }
}

pub const BUILTIN_IDS: [&str; 8] = [
    "classical",
    "luk-inf",
    "godel",
    "product",
    "bl-luk",
    "bl-godel",
    "bl-product",
    "inl",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::match_schema;

    #[test]
    fn builtin_systems_load() {
        for id in BUILTIN_IDS {
            let sys = builtin_system(id).unwrap();
            assert_eq!(sys.id, id);
            assert!(!sys.schemata.is_empty());
        }
        assert!(builtin_system("tuziak:3").is_some());
        assert!(builtin_system("tuziak:1").is_none());
        assert!(builtin_system("unknown").is_none());
    }

    #[test]
    fn schema_names_are_unique() {
        for id in BUILTIN_IDS.iter().chain(["tuziak:3", "tuziak:6"].iter()) {
            let sys = builtin_system(id).unwrap();
            let mut names: Vec<&String> = sys.schemata.iter().map(|(n, _)| n).collect();
            names.sort();
            names.dedup();
            assert_eq!(names.len(), sys.schemata.len(), "{id}");
        }
    }

    #[test]
    fn tuziak_divisibility_condition_selects_s() {
        // n = 3: n-1 = 2 is divisible by both 1 and 2, so no T12 instance.
        let t3 = builtin_system("tuziak:3").unwrap();
        assert!(t3.schemata.iter().all(|(n, _)| !n.starts_with("T12")));
        // n = 4: only s = 2 does not divide 3.
        let t4 = builtin_system("tuziak:4").unwrap();
        let t12: Vec<&String> = t4
            .schemata
            .iter()
            .map(|(n, _)| n)
            .filter(|n| n.starts_with("T12"))
            .collect();
        assert_eq!(t12, vec!["T12.2"]);
    }

    #[test]
    fn tuziak_t4_matches_its_instance() {
        let sys = builtin_system("tuziak:4").unwrap();
        let t4 = sys.schema("T4").unwrap();
        let f = crate::syntax::parse(
            "(p ->L (p ->L (p ->L (p ->L q)))) ->L (p ->L (p ->L (p ->L q)))",
        )
        .unwrap();
        let bindings = match_schema(t4, &f).unwrap();
        assert_eq!(bindings["A"], crate::syntax::parse("p").unwrap());
        assert_eq!(bindings["B"], crate::syntax::parse("q").unwrap());
    }
}
