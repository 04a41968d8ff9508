//! Propositional formulas over a shared connective alphabet.
//!
//! Every matrix logic in the crate reads the same ASCII surface syntax;
//! each logic interprets only a subset of the connective tags and
//! evaluating an uninterpreted tag is an error at evaluation time, not
//! here. The grammar (whitespace-insensitive):
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or (("->L" | "->G" | "->P") imp)?
//! or      := and (("\/" | "(+)") and)*
//! and     := unary (("/\" | "&L" | "&P" | "(-)") unary)*
//! unary   := ("~L" | "~G" | "~Pi" | "~Post" | "Delta") unary | atom
//! atom    := ident | "bot" | "top" | "#" digits | "(" formula ")"
//! ```
//!
//! `#k` is the graded truth constant of level `k`. `(+)` and `(-)` are
//! the bounded sum and difference.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    NegL,
    NegG,
    NegPi,
    NegPost,
    Delta,
    ImpL,
    ImpG,
    ImpPi,
    ConjL,
    ConjPi,
    Meet,
    Join,
    Oplus,
    Ominus,
    Iff,
}

impl Connective {
    pub const ALL: [Connective; 15] = [
        Connective::NegL,
        Connective::NegG,
        Connective::NegPi,
        Connective::NegPost,
        Connective::Delta,
        Connective::ImpL,
        Connective::ImpG,
        Connective::ImpPi,
        Connective::ConjL,
        Connective::ConjPi,
        Connective::Meet,
        Connective::Join,
        Connective::Oplus,
        Connective::Ominus,
        Connective::Iff,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::NegL
            | Connective::NegG
            | Connective::NegPi
            | Connective::NegPost
            | Connective::Delta => 1,
            _ => 2,
        }
    }

    /// Surface token of the connective.
    pub fn token(self) -> &'static str {
        match self {
            Connective::NegL => "~L",
            Connective::NegG => "~G",
            Connective::NegPi => "~Pi",
            Connective::NegPost => "~Post",
            Connective::Delta => "Delta",
            Connective::ImpL => "->L",
            Connective::ImpG => "->G",
            Connective::ImpPi => "->P",
            Connective::ConjL => "&L",
            Connective::ConjPi => "&P",
            Connective::Meet => "/\\",
            Connective::Join => "\\/",
            Connective::Oplus => "(+)",
            Connective::Ominus => "(-)",
            Connective::Iff => "<->",
        }
    }

    /// Stable name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Connective::NegL => "negL",
            Connective::NegG => "negG",
            Connective::NegPi => "negPi",
            Connective::NegPost => "negPost",
            Connective::Delta => "delta",
            Connective::ImpL => "impL",
            Connective::ImpG => "impG",
            Connective::ImpPi => "impPi",
            Connective::ConjL => "conjL",
            Connective::ConjPi => "conjPi",
            Connective::Meet => "meet",
            Connective::Join => "join",
            Connective::Oplus => "oplus",
            Connective::Ominus => "ominus",
            Connective::Iff => "iff",
        }
    }

    pub fn from_name(name: &str) -> Option<Connective> {
        Connective::ALL
            .iter()
            .copied()
            .find(|c| c.name() == name || c.token() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Falsum,
    Verum,
    GradedConst(u32),
    Apply(Connective, Vec<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn unary(conn: Connective, arg: Formula) -> Formula {
        assert_eq!(conn.arity(), 1, "{conn:?} is not unary");
        Formula::Apply(conn, vec![arg])
    }

    pub fn binary(conn: Connective, lhs: Formula, rhs: Formula) -> Formula {
        assert_eq!(conn.arity(), 2, "{conn:?} is not binary");
        Formula::Apply(conn, vec![lhs, rhs])
    }

    /// Variable names, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Apply(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
            _ => {}
        }
    }

    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Apply(_, args) => {
                1 + args.iter().map(Formula::connective_count).sum::<usize>()
            }
            _ => 0,
        }
    }
}

/// A formula pattern whose leaves may be metavariables.
///
/// By convention identifiers starting with an uppercase letter parse as
/// metavariables, everything else as object variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    MetaVar(String),
    Var(String),
    Falsum,
    Verum,
    GradedConst(u32),
    Apply(Connective, Vec<Schema>),
}

pub type Assignment = BTreeMap<String, Formula>;

impl Schema {
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<String>) {
        match self {
            Schema::MetaVar(v) => {
                out.insert(v.clone());
            }
            Schema::Apply(_, args) => {
                for a in args {
                    a.collect_metavars(out);
                }
            }
            _ => {}
        }
    }

    pub fn from_formula(f: &Formula) -> Schema {
        match f {
            Formula::Var(v) => Schema::Var(v.clone()),
            Formula::Falsum => Schema::Falsum,
            Formula::Verum => Schema::Verum,
            Formula::GradedConst(k) => Schema::GradedConst(*k),
            Formula::Apply(c, args) => {
                Schema::Apply(*c, args.iter().map(Schema::from_formula).collect())
            }
        }
    }
}

/// Matches `schema` against `formula`, returning the unique assignment if
/// one exists. Repeated metavariables must match identical subformulas.
pub fn match_schema(schema: &Schema, formula: &Formula) -> Option<Assignment> {
    let mut bindings = Assignment::new();
    if match_schema_into(schema, formula, &mut bindings) {
        Some(bindings)
    } else {
        None
    }
}

/// Matching against pre-existing bindings; extends `bindings` on success.
/// On failure `bindings` may contain additions, so callers that backtrack
/// should clone first.
pub fn match_schema_into(schema: &Schema, formula: &Formula, bindings: &mut Assignment) -> bool {
    match (schema, formula) {
        (Schema::MetaVar(m), f) => match bindings.get(m) {
            Some(bound) => bound == f,
            None => {
                bindings.insert(m.clone(), f.clone());
                true
            }
        },
        (Schema::Var(a), Formula::Var(b)) => a == b,
        (Schema::Falsum, Formula::Falsum) => true,
        (Schema::Verum, Formula::Verum) => true,
        (Schema::GradedConst(a), Formula::GradedConst(b)) => a == b,
        (Schema::Apply(c, sargs), Formula::Apply(d, fargs)) => {
            c == d
                && sargs.len() == fargs.len()
                && sargs
                    .iter()
                    .zip(fargs)
                    .all(|(s, f)| match_schema_into(s, f, bindings))
        }
        _ => false,
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SubstError {
    #[error("no binding for metavariable {0}")]
    MissingMetaVar(String),
}

/// Instantiates a schema under an assignment covering all its metavariables.
pub fn substitute(schema: &Schema, bindings: &Assignment) -> Result<Formula, SubstError> {
    match schema {
        Schema::MetaVar(m) => bindings
            .get(m)
            .cloned()
            .ok_or_else(|| SubstError::MissingMetaVar(m.clone())),
        Schema::Var(v) => Ok(Formula::Var(v.clone())),
        Schema::Falsum => Ok(Formula::Falsum),
        Schema::Verum => Ok(Formula::Verum),
        Schema::GradedConst(k) => Ok(Formula::GradedConst(*k)),
        Schema::Apply(c, args) => Ok(Formula::Apply(
            *c,
            args.iter()
                .map(|a| substitute(a, bindings))
                .collect::<Result<_, _>>()?,
        )),
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown connective name at offset {offset}: {name}")]
    UnknownConnective { offset: usize, name: String },
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let schema = parse_with_mode(text, false)?;
    Ok(schema_to_formula(&schema))
}

/// Parses a schema: uppercase-initial identifiers become metavariables.
pub fn parse_schema(text: &str) -> Result<Schema, ParseError> {
    parse_with_mode(text, true)
}

fn schema_to_formula(s: &Schema) -> Formula {
    match s {
        Schema::MetaVar(_) => unreachable!("formula mode produces no metavariables"),
        Schema::Var(v) => Formula::Var(v.clone()),
        Schema::Falsum => Formula::Falsum,
        Schema::Verum => Formula::Verum,
        Schema::GradedConst(k) => Formula::GradedConst(*k),
        Schema::Apply(c, args) => Formula::Apply(*c, args.iter().map(schema_to_formula).collect()),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Graded(u32),
    LParen,
    RParen,
    Bot,
    Top,
    Conn(Connective),
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while let Some(tok) = self.next_token()? {
            out.push(tok);
        }
        Ok(out)
    }

    fn err(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }

    fn take_alpha_run(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize)>, ParseError> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.bytes.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.bytes[self.pos];
        let tok = match b {
            b'(' => {
                if self.bytes[self.pos..].starts_with(b"(+)") {
                    self.pos += 3;
                    Tok::Conn(Connective::Oplus)
                } else if self.bytes[self.pos..].starts_with(b"(-)") {
                    self.pos += 3;
                    Tok::Conn(Connective::Ominus)
                } else {
                    self.pos += 1;
                    Tok::LParen
                }
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'~' => {
                self.pos += 1;
                let run = self.take_alpha_run();
                match run.as_str() {
                    "L" => Tok::Conn(Connective::NegL),
                    "G" => Tok::Conn(Connective::NegG),
                    "Pi" => Tok::Conn(Connective::NegPi),
                    "Post" => Tok::Conn(Connective::NegPost),
                    _ => {
                        return Err(ParseError::UnknownConnective {
                            offset: start,
                            name: format!("~{run}"),
                        })
                    }
                }
            }
            b'-' => {
                if !self.bytes[self.pos..].starts_with(b"->") {
                    return Err(self.err(start, "expected '->L', '->G' or '->P'"));
                }
                self.pos += 2;
                match self.bytes.get(self.pos) {
                    Some(b'L') => {
                        self.pos += 1;
                        Tok::Conn(Connective::ImpL)
                    }
                    Some(b'G') => {
                        self.pos += 1;
                        Tok::Conn(Connective::ImpG)
                    }
                    Some(b'P') => {
                        self.pos += 1;
                        Tok::Conn(Connective::ImpPi)
                    }
                    _ => {
                        return Err(ParseError::UnknownConnective {
                            offset: start,
                            name: "->".into(),
                        })
                    }
                }
            }
            b'<' => {
                if self.bytes[self.pos..].starts_with(b"<->") {
                    self.pos += 3;
                    Tok::Conn(Connective::Iff)
                } else {
                    return Err(self.err(start, "expected '<->'"));
                }
            }
            b'&' => {
                self.pos += 1;
                match self.bytes.get(self.pos) {
                    Some(b'L') => {
                        self.pos += 1;
                        Tok::Conn(Connective::ConjL)
                    }
                    Some(b'P') => {
                        self.pos += 1;
                        Tok::Conn(Connective::ConjPi)
                    }
                    _ => {
                        return Err(ParseError::UnknownConnective {
                            offset: start,
                            name: "&".into(),
                        })
                    }
                }
            }
            b'\\' => {
                if self.bytes[self.pos..].starts_with(b"\\/") {
                    self.pos += 2;
                    Tok::Conn(Connective::Join)
                } else {
                    return Err(self.err(start, "expected '\\/'"));
                }
            }
            b'/' => {
                if self.bytes[self.pos..].starts_with(b"/\\") {
                    self.pos += 2;
                    Tok::Conn(Connective::Meet)
                } else {
                    return Err(self.err(start, "expected '/\\'"));
                }
            }
            b'#' => {
                self.pos += 1;
                let digit_start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if digit_start == self.pos {
                    return Err(self.err(start, "expected digits after '#'"));
                }
                let text = std::str::from_utf8(&self.bytes[digit_start..self.pos]).unwrap();
                let level: u32 = text
                    .parse()
                    .map_err(|_| self.err(start, "graded constant level out of range"))?;
                Tok::Graded(level)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match word {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    "Delta" => Tok::Conn(Connective::Delta),
                    _ => Tok::Ident(word.to_owned()),
                }
            }
            other => {
                return Err(self.err(start, format!("unexpected character {:?}", other as char)))
            }
        };
        Ok(Some((tok, start)))
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    cursor: usize,
    end: usize,
    schema_mode: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|&(_, o)| o)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(t, _)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn parse_iff(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.parse_imp()?;
        while self.peek() == Some(&Tok::Conn(Connective::Iff)) {
            self.bump();
            let rhs = self.parse_imp()?;
            lhs = Schema::Apply(Connective::Iff, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn parse_imp(&mut self) -> Result<Schema, ParseError> {
        let lhs = self.parse_or()?;
        if let Some(&Tok::Conn(c @ (Connective::ImpL | Connective::ImpG | Connective::ImpPi))) =
            self.peek()
        {
            self.bump();
            let rhs = self.parse_imp()?;
            return Ok(Schema::Apply(c, vec![lhs, rhs]));
        }
        Ok(lhs)
    }

    fn parse_or(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.parse_and()?;
        while let Some(&Tok::Conn(c @ (Connective::Join | Connective::Oplus))) = self.peek() {
            self.bump();
            let rhs = self.parse_and()?;
            lhs = Schema::Apply(c, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<Schema, ParseError> {
        let mut lhs = self.parse_unary()?;
        while let Some(&Tok::Conn(
            c @ (Connective::Meet | Connective::ConjL | Connective::ConjPi | Connective::Ominus),
        )) = self.peek()
        {
            self.bump();
            let rhs = self.parse_unary()?;
            lhs = Schema::Apply(c, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Schema, ParseError> {
        if let Some(&Tok::Conn(
            c @ (Connective::NegL
            | Connective::NegG
            | Connective::NegPi
            | Connective::NegPost
            | Connective::Delta),
        )) = self.peek()
        {
            self.bump();
            let arg = self.parse_unary()?;
            return Ok(Schema::Apply(c, vec![arg]));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Schema, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.bump();
                if self.schema_mode && name.chars().next().is_some_and(|c| c.is_ascii_uppercase()) {
                    Ok(Schema::MetaVar(name))
                } else {
                    Ok(Schema::Var(name))
                }
            }
            Some(Tok::Bot) => {
                self.bump();
                Ok(Schema::Falsum)
            }
            Some(Tok::Top) => {
                self.bump();
                Ok(Schema::Verum)
            }
            Some(Tok::Graded(k)) => {
                self.bump();
                Ok(Schema::GradedConst(k))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.parse_iff()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.cursor = self.cursor.saturating_sub(1);
                        Err(self.err("expected ')'"))
                    }
                }
            }
            Some(other) => Err(self.err(format!("unexpected token {other:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_with_mode(text: &str, schema_mode: bool) -> Result<Schema, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut parser = Parser {
        toks,
        cursor: 0,
        end: text.len(),
        schema_mode,
    };
    let formula = parser.parse_iff()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input after formula"));
    }
    Ok(formula)
}

// Printing. Level 1 = iff, 2 = imp, 3 = or, 4 = and, 5 = unary, 6 = atom.
fn level(conn: Connective) -> u8 {
    match conn {
        Connective::Iff => 1,
        Connective::ImpL | Connective::ImpG | Connective::ImpPi => 2,
        Connective::Join | Connective::Oplus => 3,
        Connective::Meet | Connective::ConjL | Connective::ConjPi | Connective::Ominus => 4,
        _ => 5,
    }
}

fn fmt_schema(s: &Schema, min_level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let own = match s {
        Schema::Apply(c, _) => level(*c),
        _ => 6,
    };
    let parens = own < min_level;
    if parens {
        write!(f, "(")?;
    }
    match s {
        Schema::MetaVar(v) | Schema::Var(v) => write!(f, "{v}")?,
        Schema::Falsum => write!(f, "bot")?,
        Schema::Verum => write!(f, "top")?,
        Schema::GradedConst(k) => write!(f, "#{k}")?,
        Schema::Apply(c, args) if c.arity() == 1 => {
            write!(f, "{} ", c.token())?;
            fmt_schema(&args[0], 5, f)?;
        }
        Schema::Apply(c, args) => {
            let lv = level(*c);
            // iff / or / and chains associate left; implications right.
            let (lmin, rmin) = match c {
                Connective::ImpL | Connective::ImpG | Connective::ImpPi => (lv + 1, lv),
                _ => (lv, lv + 1),
            };
            fmt_schema(&args[0], lmin, f)?;
            write!(f, " {} ", c.token())?;
            fmt_schema(&args[1], rmin, f)?;
        }
    }
    if parens {
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_schema(self, 1, f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_schema(&Schema::from_formula(self), 1, f)
    }
}

/// `p ->L^k q` in the exponent notation: `p ->L (p ->L ... (p ->L q))`.
/// `k = 0` yields `q`.
pub fn iterated_imp(imp: Connective, antecedent: &Formula, consequent: &Formula, k: u32) -> Formula {
    let mut out = consequent.clone();
    for _ in 0..k {
        out = Formula::binary(imp, antecedent.clone(), out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }
    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn parses_implication() {
        assert_eq!(
            parse("p ->L q").unwrap(),
            Formula::binary(Connective::ImpL, p(), q())
        );
    }

    #[test]
    fn parses_nested_negation() {
        assert_eq!(
            parse("~L (p \\/ q)").unwrap(),
            Formula::unary(
                Connective::NegL,
                Formula::binary(Connective::Join, p(), q())
            )
        );
    }

    #[test]
    fn reports_offset_of_unbalanced_input() {
        match parse("p ->L (q ->L") {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 12),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn implication_is_right_associative() {
        let f = parse("p ->L q ->L r").unwrap();
        let expected = Formula::binary(
            Connective::ImpL,
            p(),
            Formula::binary(Connective::ImpL, q(), Formula::var("r")),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn bounded_ops_tokenize() {
        let f = parse("p (+) q (-) r").unwrap();
        // (-) binds like a conjunction, (+) like a disjunction.
        let expected = Formula::binary(
            Connective::Oplus,
            p(),
            Formula::binary(Connective::Ominus, q(), Formula::var("r")),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn graded_constants_and_truth_constants() {
        assert_eq!(parse("#3").unwrap(), Formula::GradedConst(3));
        assert_eq!(parse("bot").unwrap(), Formula::Falsum);
        assert_eq!(parse("top").unwrap(), Formula::Verum);
    }

    #[test]
    fn unknown_negation_is_reported() {
        match parse("~Q p") {
            Err(ParseError::UnknownConnective { name, .. }) => assert_eq!(name, "~Q"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip_examples() {
        for text in [
            "p ->L (q ->L p)",
            "~L ~G p /\\ q",
            "(p <-> q) <-> r",
            "p <-> (q <-> r)",
            "p &L q \\/ r",
            "Delta (p ->P q)",
            "p (+) (q (+) r)",
            "~Post #2",
        ] {
            let f = parse(text).unwrap();
            let printed = f.to_string();
            assert_eq!(parse(&printed).unwrap(), f, "round trip of {text}");
        }
    }

    #[test]
    fn schema_matching_binds_consistently() {
        let s = parse_schema("A ->L (B ->L A)").unwrap();
        let f = parse("p ->L (q ->L p)").unwrap();
        let bindings = match_schema(&s, &f).unwrap();
        assert_eq!(bindings["A"], p());
        assert_eq!(bindings["B"], q());

        let bad = parse("p ->L (q ->L r)").unwrap();
        assert!(match_schema(&s, &bad).is_none());
    }

    #[test]
    fn iterated_imp_matches_structurally() {
        // (A ->L^3 B) ->L (A ->L^2 B) matched against its p/q instance.
        let meta_a = Schema::MetaVar("A".into());
        let meta_b = Schema::MetaVar("B".into());
        let schema = Schema::Apply(
            Connective::ImpL,
            vec![
                iterated_schema(&meta_a, &meta_b, 3),
                iterated_schema(&meta_a, &meta_b, 2),
            ],
        );
        let instance = Formula::binary(
            Connective::ImpL,
            iterated_imp(Connective::ImpL, &p(), &q(), 3),
            iterated_imp(Connective::ImpL, &p(), &q(), 2),
        );
        let bindings = match_schema(&schema, &instance).unwrap();
        assert_eq!(bindings["A"], p());
        assert_eq!(bindings["B"], q());
    }

    fn iterated_schema(a: &Schema, b: &Schema, k: u32) -> Schema {
        let mut out = b.clone();
        for _ in 0..k {
            out = Schema::Apply(Connective::ImpL, vec![a.clone(), out]);
        }
        out
    }

    #[test]
    fn substitute_requires_all_bindings() {
        let s = parse_schema("A ->L B").unwrap();
        let mut bindings = Assignment::new();
        bindings.insert("A".into(), p());
        assert_eq!(
            substitute(&s, &bindings),
            Err(SubstError::MissingMetaVar("B".into()))
        );
        bindings.insert("B".into(), Formula::Falsum);
        assert_eq!(
            substitute(&s, &bindings).unwrap(),
            Formula::binary(Connective::ImpL, p(), Formula::Falsum)
        );
    }

    #[test]
    fn substitute_then_match_recovers_bindings() {
        let s = parse_schema("A ->L (A /\\ B)").unwrap();
        let mut bindings = Assignment::new();
        bindings.insert("A".into(), parse("p /\\ q").unwrap());
        bindings.insert("B".into(), Formula::Falsum);
        let f = substitute(&s, &bindings).unwrap();
        assert_eq!(match_schema(&s, &f).unwrap(), bindings);
    }
}
