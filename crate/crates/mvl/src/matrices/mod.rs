//! Matrix logics over all value domains, and formula evaluation.
//!
//! A logic pairs a value domain with interpretations for a subset of the
//! connective tags and a designated-value predicate. Evaluating a tag the
//! logic does not interpret is an error, as is mixing values from the
//! wrong domain.

pub mod clone;
pub mod enumerate;
pub mod laws;
pub mod nonlinear;
pub mod padic_ops;

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use thiserror::Error;

use crate::hyper::{HyperError, HyperValue};
use crate::neutro::{self, InlTriple, NeutroError};
use crate::padic::{PadicError, PadicInt};
use crate::rational::{in_unit_interval, rat_one, rat_zero, Rational};
use crate::syntax::{Connective, Formula};
use padic_ops::PadicOpError;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum EvalError {
    #[error("logic {logic} does not interpret {conn}")]
    Uninterpreted { logic: String, conn: &'static str },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("value outside the domain of {0}")]
    DomainMismatch(String),
    #[error("graded constant #{level} outside the levels of {logic}")]
    GradedConstOutOfRange { level: u32, logic: String },
    #[error("graded constants are only defined in finite logics")]
    GradedConstUnsupported,
    #[error("logic {0} does not have a finite value domain")]
    NotFinite(String),
    #[error("{0} variables exceed the enumeration bound of {1}")]
    TooManyVariables(usize, usize),
    #[error("unknown logic id {0:?}")]
    UnknownLogic(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    PadicOp(#[from] PadicOpError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Neutro(#[from] NeutroError),
}

/// A truth value in one of the supported domains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    Finite(u32),
    Rational(Rational),
    Padic(PadicInt),
    Hyper(HyperValue),
    InlHyper(Box<InlTriple<HyperValue>>),
    InlPadic(Box<InlTriple<PadicInt>>),
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Finite(v) => write!(f, "{v}"),
            TruthValue::Rational(q) => write!(f, "{q}"),
            TruthValue::Padic(x) => write!(f, "{x}"),
            TruthValue::Hyper(h) => write!(f, "{h}"),
            TruthValue::InlHyper(t) => write!(f, "<{}, {}, {}>", t.t, t.i, t.f),
            TruthValue::InlPadic(t) => write!(f, "<{}, {}, {}>", t.t, t.i, t.f),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(pub BTreeMap<String, TruthValue>);

impl Valuation {
    pub fn new() -> Self {
        Valuation(BTreeMap::new())
    }

    pub fn bind(mut self, name: impl Into<String>, value: TruthValue) -> Self {
        self.0.insert(name.into(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&TruthValue> {
        self.0.get(name)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// The registered matrix logics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Logic {
    /// n-valued Lukasiewicz logic on levels `0..n`, designated `n-1`.
    FiniteLuk { n: u32 },
    /// m-valued Post logic on levels `0..m` with the cyclic negation.
    Post { m: u32 },
    /// Lukasiewicz logic on exact rationals in `[0,1]`.
    LukInf,
    Godel,
    Product,
    /// Hyperbolic approximants of the Lukasiewicz ops.
    Hl { n: u64 },
    /// Hyperbolic approximants of the Goedel ops.
    Hg { n: u64 },
    /// Parabolic matrix, kept as printed (no convergence claim).
    Parabolic { n: u64 },
    /// Quasiparabolic approximants of the Lukasiewicz ops.
    Quasiparabolic { n: u64 },
    PadicLuk { p: u32, k: usize },
    PadicGodel { p: u32, k: usize },
    PadicPost { p: u32, k: usize },
    HyperLuk { w: usize },
    HyperGodel { w: usize },
    HyperProduct { w: usize },
    InlHyper { w: usize },
    InlPadic { p: u32, k: usize },
}

impl Logic {
    pub fn parse_id(id: &str) -> Result<Logic, EvalError> {
        let unknown = || EvalError::UnknownLogic(id.to_owned());
        let parts: Vec<&str> = id.split(':').collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| unknown());
        let num64 = |s: &str| s.parse::<u64>().map_err(|_| unknown());
        let size = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match parts.as_slice() {
            ["luk3"] => Ok(Logic::FiniteLuk { n: 3 }),
            ["luk", n] => {
                let n = num(n)?;
                if n < 2 {
                    return Err(unknown());
                }
                Ok(Logic::FiniteLuk { n })
            }
            ["post", m] => {
                let m = num(m)?;
                if m < 2 {
                    return Err(unknown());
                }
                Ok(Logic::Post { m })
            }
            ["luk-inf"] => Ok(Logic::LukInf),
            ["godel"] => Ok(Logic::Godel),
            ["product"] => Ok(Logic::Product),
            ["hl", n] => Ok(Logic::Hl { n: num64(n)? }),
            ["hg", n] => Ok(Logic::Hg { n: num64(n)? }),
            ["pb", n] => Ok(Logic::Parabolic { n: num64(n)? }),
            ["pq", n] => Ok(Logic::Quasiparabolic { n: num64(n)? }),
            ["padic-luk", p, k] => Ok(Logic::PadicLuk {
                p: num(p)?,
                k: size(k)?,
            }),
            ["padic-godel", p, k] => Ok(Logic::PadicGodel {
                p: num(p)?,
                k: size(k)?,
            }),
            ["padic-post", p, k] => Ok(Logic::PadicPost {
                p: num(p)?,
                k: size(k)?,
            }),
            ["hyper-luk", w] => Ok(Logic::HyperLuk { w: size(w)? }),
            ["hyper-godel", w] => Ok(Logic::HyperGodel { w: size(w)? }),
            ["hyper-product", w] => Ok(Logic::HyperProduct { w: size(w)? }),
            ["inl-hyper", w] => Ok(Logic::InlHyper { w: size(w)? }),
            ["inl-padic", p, k] => Ok(Logic::InlPadic {
                p: num(p)?,
                k: size(k)?,
            }),
            _ => Err(unknown()),
        }
    }

    pub fn id(&self) -> String {
        match self {
            Logic::FiniteLuk { n } => format!("luk:{n}"),
            Logic::Post { m } => format!("post:{m}"),
            Logic::LukInf => "luk-inf".into(),
            Logic::Godel => "godel".into(),
            Logic::Product => "product".into(),
            Logic::Hl { n } => format!("hl:{n}"),
            Logic::Hg { n } => format!("hg:{n}"),
            Logic::Parabolic { n } => format!("pb:{n}"),
            Logic::Quasiparabolic { n } => format!("pq:{n}"),
            Logic::PadicLuk { p, k } => format!("padic-luk:{p}:{k}"),
            Logic::PadicGodel { p, k } => format!("padic-godel:{p}:{k}"),
            Logic::PadicPost { p, k } => format!("padic-post:{p}:{k}"),
            Logic::HyperLuk { w } => format!("hyper-luk:{w}"),
            Logic::HyperGodel { w } => format!("hyper-godel:{w}"),
            Logic::HyperProduct { w } => format!("hyper-product:{w}"),
            Logic::InlHyper { w } => format!("inl-hyper:{w}"),
            Logic::InlPadic { p, k } => format!("inl-padic:{p}:{k}"),
        }
    }

    /// Number of truth values for finite-domain logics.
    pub fn finite_values(&self) -> Option<u32> {
        match self {
            Logic::FiniteLuk { n } => Some(*n),
            Logic::Post { m } => Some(*m),
            _ => None,
        }
    }

    pub fn interprets(&self, conn: Connective) -> bool {
        use Connective as C;
        let tags: &[C] = match self {
            Logic::FiniteLuk { .. } => &[C::NegL, C::ImpL, C::Meet, C::Join, C::Iff],
            Logic::Post { .. } => &[C::NegPost, C::Join],
            Logic::LukInf => &[
                C::NegL,
                C::ImpL,
                C::ConjL,
                C::Meet,
                C::Join,
                C::Oplus,
                C::Ominus,
                C::Iff,
                C::Delta,
            ],
            Logic::Godel => &[C::NegG, C::ImpG, C::Meet, C::Join, C::Iff],
            Logic::Product => &[C::NegPi, C::ImpPi, C::ConjPi, C::Meet, C::Join, C::Iff],
            Logic::Hl { .. } | Logic::Parabolic { .. } | Logic::Quasiparabolic { .. } => {
                &[C::NegL, C::ImpL, C::Meet, C::Join]
            }
            Logic::Hg { .. } => &[C::NegG, C::ImpG, C::Meet, C::Join],
            Logic::PadicLuk { .. } => &[
                C::NegL,
                C::ImpL,
                C::ConjL,
                C::Meet,
                C::Join,
                C::Oplus,
                C::Ominus,
                C::Delta,
                C::NegPi,
                C::ImpPi,
            ],
            Logic::PadicGodel { .. } => &[C::NegG, C::ImpG, C::Meet, C::Join],
            Logic::PadicPost { .. } => &[C::NegPost, C::Join],
            Logic::HyperLuk { .. } => &[
                C::NegL,
                C::ImpL,
                C::ConjL,
                C::Meet,
                C::Join,
                C::Oplus,
                C::Ominus,
                C::Delta,
            ],
            Logic::HyperGodel { .. } => &[C::NegG, C::ImpG, C::Meet, C::Join],
            Logic::HyperProduct { .. } => &[C::NegPi, C::ImpPi, C::ConjPi, C::Meet, C::Join],
            Logic::InlHyper { .. } | Logic::InlPadic { .. } => {
                &[C::NegL, C::ImpL, C::Meet, C::Join, C::Iff]
            }
        };
        tags.contains(&conn)
    }

    pub fn falsum(&self) -> TruthValue {
        match self {
            Logic::FiniteLuk { .. } | Logic::Post { .. } => TruthValue::Finite(0),
            Logic::LukInf
            | Logic::Godel
            | Logic::Product
            | Logic::Hl { .. }
            | Logic::Hg { .. }
            | Logic::Parabolic { .. }
            | Logic::Quasiparabolic { .. } => TruthValue::Rational(rat_zero()),
            Logic::PadicLuk { p, k } | Logic::PadicGodel { p, k } | Logic::PadicPost { p, k } => {
                TruthValue::Padic(PadicInt::zero(*p, *k))
            }
            Logic::HyperLuk { .. } | Logic::HyperGodel { .. } | Logic::HyperProduct { .. } => {
                TruthValue::Hyper(HyperValue::zero())
            }
            Logic::InlHyper { .. } => TruthValue::InlHyper(Box::new(InlTriple::new(
                HyperValue::zero(),
                HyperValue::one(),
                HyperValue::one(),
            ))),
            Logic::InlPadic { p, k } => TruthValue::InlPadic(Box::new(InlTriple::new(
                PadicInt::zero(*p, *k),
                PadicInt::n_max(*p, *k),
                PadicInt::n_max(*p, *k),
            ))),
        }
    }

    pub fn verum(&self) -> TruthValue {
        match self {
            Logic::FiniteLuk { n } => TruthValue::Finite(n - 1),
            Logic::Post { m } => TruthValue::Finite(m - 1),
            Logic::LukInf
            | Logic::Godel
            | Logic::Product
            | Logic::Hl { .. }
            | Logic::Hg { .. }
            | Logic::Parabolic { .. }
            | Logic::Quasiparabolic { .. } => TruthValue::Rational(rat_one()),
            Logic::PadicLuk { p, k } | Logic::PadicGodel { p, k } | Logic::PadicPost { p, k } => {
                TruthValue::Padic(PadicInt::n_max(*p, *k))
            }
            Logic::HyperLuk { .. } | Logic::HyperGodel { .. } | Logic::HyperProduct { .. } => {
                TruthValue::Hyper(HyperValue::one())
            }
            Logic::InlHyper { .. } => TruthValue::InlHyper(Box::new(InlTriple::new(
                HyperValue::one(),
                HyperValue::zero(),
                HyperValue::zero(),
            ))),
            Logic::InlPadic { p, k } => TruthValue::InlPadic(Box::new(InlTriple::new(
                PadicInt::n_max(*p, *k),
                PadicInt::zero(*p, *k),
                PadicInt::zero(*p, *k),
            ))),
        }
    }

    pub fn designated(&self, value: &TruthValue) -> Result<bool, EvalError> {
        match self {
            Logic::FiniteLuk { n } => Ok(*value == TruthValue::Finite(n - 1)),
            Logic::Post { m } => Ok(*value == TruthValue::Finite(m - 1)),
            Logic::LukInf
            | Logic::Godel
            | Logic::Product
            | Logic::Hl { .. }
            | Logic::Hg { .. }
            | Logic::Parabolic { .. }
            | Logic::Quasiparabolic { .. } => match value {
                TruthValue::Rational(q) => Ok(q.is_one()),
                _ => Err(EvalError::DomainMismatch(self.id())),
            },
            Logic::PadicLuk { p, k } | Logic::PadicGodel { p, k } | Logic::PadicPost { p, k } => {
                match value {
                    TruthValue::Padic(x) => Ok(*x == PadicInt::n_max(*p, *k)),
                    _ => Err(EvalError::DomainMismatch(self.id())),
                }
            }
            Logic::HyperLuk { .. } | Logic::HyperGodel { .. } | Logic::HyperProduct { .. } => {
                match value {
                    TruthValue::Hyper(h) => Ok(h.is_one()),
                    _ => Err(EvalError::DomainMismatch(self.id())),
                }
            }
            Logic::InlHyper { .. } => match value {
                TruthValue::InlHyper(t) => Ok(neutro::inl_hyper_designated(t)),
                _ => Err(EvalError::DomainMismatch(self.id())),
            },
            Logic::InlPadic { .. } => match value {
                TruthValue::InlPadic(t) => Ok(neutro::inl_padic_designated(t)),
                _ => Err(EvalError::DomainMismatch(self.id())),
            },
        }
    }

    /// Checks that `value` belongs to this logic's domain.
    pub fn admits(&self, value: &TruthValue) -> bool {
        match (self, value) {
            (Logic::FiniteLuk { n }, TruthValue::Finite(v)) => v < n,
            (Logic::Post { m }, TruthValue::Finite(v)) => v < m,
            (
                Logic::LukInf
                | Logic::Godel
                | Logic::Product
                | Logic::Hl { .. }
                | Logic::Hg { .. }
                | Logic::Parabolic { .. }
                | Logic::Quasiparabolic { .. },
                TruthValue::Rational(q),
            ) => in_unit_interval(q),
            (
                Logic::PadicLuk { p, k } | Logic::PadicGodel { p, k } | Logic::PadicPost { p, k },
                TruthValue::Padic(x),
            ) => x.p() == *p && x.precision() == *k,
            (
                Logic::HyperLuk { w } | Logic::HyperGodel { w } | Logic::HyperProduct { w },
                TruthValue::Hyper(h),
            ) => h.window_size().is_none_or(|s| s == *w),
            (Logic::InlHyper { w }, TruthValue::InlHyper(t)) => [&t.t, &t.i, &t.f]
                .iter()
                .all(|h| h.window_size().is_none_or(|s| s == *w)),
            (Logic::InlPadic { p, k }, TruthValue::InlPadic(t)) => [&t.t, &t.i, &t.f]
                .iter()
                .all(|x| x.p() == *p && x.precision() == *k),
            _ => false,
        }
    }

    pub fn apply(&self, conn: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
        if !self.interprets(conn) {
            return Err(EvalError::Uninterpreted {
                logic: self.id(),
                conn: conn.name(),
            });
        }
        for a in args {
            if !self.admits(a) {
                return Err(EvalError::DomainMismatch(self.id()));
            }
        }
        match self {
            Logic::FiniteLuk { n } => self.apply_finite_luk(*n, conn, args),
            Logic::Post { m } => self.apply_post(*m, conn, args),
            Logic::LukInf | Logic::Godel | Logic::Product => self.apply_unit(conn, args),
            Logic::Hl { n } => self.apply_nonlinear(nonlinear::Family::Hl, *n, conn, args),
            Logic::Hg { n } => self.apply_nonlinear(nonlinear::Family::Hg, *n, conn, args),
            Logic::Parabolic { n } => {
                self.apply_nonlinear(nonlinear::Family::Parabolic, *n, conn, args)
            }
            Logic::Quasiparabolic { n } => {
                self.apply_nonlinear(nonlinear::Family::Quasiparabolic, *n, conn, args)
            }
            Logic::PadicLuk { .. } | Logic::PadicGodel { .. } | Logic::PadicPost { .. } => {
                self.apply_padic(conn, args)
            }
            Logic::HyperLuk { .. } | Logic::HyperGodel { .. } | Logic::HyperProduct { .. } => {
                self.apply_hyper(conn, args)
            }
            Logic::InlHyper { .. } => self.apply_inl_hyper(conn, args),
            Logic::InlPadic { .. } => self.apply_inl_padic(conn, args),
        }
    }

    fn apply_finite_luk(
        &self,
        n: u32,
        conn: Connective,
        args: &[TruthValue],
    ) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> u32 {
            match args[i] {
                TruthValue::Finite(v) => v,
                _ => unreachable!("admits checked"),
            }
        };
        let top = n - 1;
        let v = match conn {
            Connective::NegL => top - arg(0),
            Connective::ImpL => (top - arg(0) + arg(1)).min(top),
            Connective::Meet => arg(0).min(arg(1)),
            Connective::Join => arg(0).max(arg(1)),
            Connective::Iff => {
                let fwd = (top - arg(0) + arg(1)).min(top);
                let bwd = (top - arg(1) + arg(0)).min(top);
                fwd.min(bwd)
            }
            _ => unreachable!("interprets checked"),
        };
        Ok(TruthValue::Finite(v))
    }

    fn apply_post(
        &self,
        m: u32,
        conn: Connective,
        args: &[TruthValue],
    ) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> u32 {
            match args[i] {
                TruthValue::Finite(v) => v,
                _ => unreachable!(),
            }
        };
        let v = match conn {
            Connective::NegPost => (arg(0) + 1) % m,
            Connective::Join => arg(0).max(arg(1)),
            _ => unreachable!(),
        };
        Ok(TruthValue::Finite(v))
    }

    fn apply_unit(&self, conn: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &Rational {
            match &args[i] {
                TruthValue::Rational(q) => q,
                _ => unreachable!(),
            }
        };
        let one = rat_one();
        let zero = rat_zero();
        let q = match (self, conn) {
            (Logic::LukInf, Connective::NegL) => &one - arg(0),
            (Logic::LukInf, Connective::ImpL) => (&one - arg(0) + arg(1)).min(one.clone()),
            (Logic::LukInf, Connective::ConjL) => (arg(0) + arg(1) - &one).max(zero.clone()),
            (Logic::LukInf, Connective::Oplus) => (arg(0) + arg(1)).min(one.clone()),
            (Logic::LukInf, Connective::Ominus) => (arg(0) - arg(1)).max(zero.clone()),
            (Logic::LukInf, Connective::Iff) => {
                let diff = if arg(0) >= arg(1) {
                    arg(0) - arg(1)
                } else {
                    arg(1) - arg(0)
                };
                &one - diff
            }
            (Logic::LukInf, Connective::Delta) => {
                if arg(0).is_one() {
                    one.clone()
                } else {
                    zero.clone()
                }
            }
            (Logic::Godel, Connective::NegG) => {
                if arg(0).is_zero() {
                    one.clone()
                } else {
                    zero.clone()
                }
            }
            (Logic::Godel, Connective::ImpG) => {
                if arg(0) <= arg(1) {
                    one.clone()
                } else {
                    arg(1).clone()
                }
            }
            (Logic::Godel, Connective::Iff) => {
                // (x => y) & (y => x) with & = min.
                let fwd = if arg(0) <= arg(1) {
                    one.clone()
                } else {
                    arg(1).clone()
                };
                let bwd = if arg(1) <= arg(0) {
                    one.clone()
                } else {
                    arg(0).clone()
                };
                fwd.min(bwd)
            }
            (Logic::Product, Connective::NegPi) => {
                if arg(0).is_zero() {
                    one.clone()
                } else {
                    zero.clone()
                }
            }
            (Logic::Product, Connective::ImpPi) => {
                if arg(0) <= arg(1) {
                    one.clone()
                } else {
                    arg(1) / arg(0)
                }
            }
            (Logic::Product, Connective::ConjPi) => arg(0) * arg(1),
            (Logic::Product, Connective::Iff) => {
                let fwd = if arg(0) <= arg(1) {
                    one.clone()
                } else {
                    arg(1) / arg(0)
                };
                let bwd = if arg(1) <= arg(0) {
                    one.clone()
                } else {
                    arg(0) / arg(1)
                };
                fwd * bwd
            }
            (_, Connective::Meet) => arg(0).min(arg(1)).clone(),
            (_, Connective::Join) => arg(0).max(arg(1)).clone(),
            _ => unreachable!(),
        };
        Ok(TruthValue::Rational(q))
    }

    fn apply_nonlinear(
        &self,
        family: nonlinear::Family,
        n: u64,
        conn: Connective,
        args: &[TruthValue],
    ) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &Rational {
            match &args[i] {
                TruthValue::Rational(q) => q,
                _ => unreachable!(),
            }
        };
        let q = match conn {
            Connective::NegL | Connective::NegG => nonlinear::neg(family, n, arg(0)),
            Connective::ImpL | Connective::ImpG => nonlinear::imp(family, n, arg(0), arg(1)),
            Connective::Join => nonlinear::join(family, n, arg(0), arg(1)),
            Connective::Meet => nonlinear::meet(family, n, arg(0), arg(1)),
            _ => unreachable!(),
        };
        Ok(TruthValue::Rational(q))
    }

    fn apply_padic(&self, conn: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &PadicInt {
            match &args[i] {
                TruthValue::Padic(x) => x,
                _ => unreachable!(),
            }
        };
        let v = match conn {
            Connective::NegL => padic_ops::luk_neg(arg(0)),
            Connective::ImpL => padic_ops::luk_imp(arg(0), arg(1))?,
            Connective::ConjL => padic_ops::luk_conj(arg(0), arg(1))?,
            Connective::Meet => arg(0).pmin(arg(1))?,
            Connective::Join => arg(0).pmax(arg(1))?,
            Connective::Oplus => padic_ops::oplus(arg(0), arg(1))?,
            Connective::Ominus => padic_ops::ominus(arg(0), arg(1))?,
            Connective::Delta => padic_ops::delta(arg(0)),
            Connective::NegPi => padic_ops::product_neg(arg(0)),
            Connective::ImpPi => padic_ops::product_imp(arg(0), arg(1))?,
            Connective::NegG => padic_ops::godel_neg(arg(0))?,
            Connective::ImpG => padic_ops::godel_imp(arg(0), arg(1))?,
            Connective::NegPost => arg(0).post_succ(),
            _ => unreachable!(),
        };
        Ok(TruthValue::Padic(v))
    }

    fn apply_hyper(&self, conn: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &HyperValue {
            match &args[i] {
                TruthValue::Hyper(h) => h,
                _ => unreachable!(),
            }
        };
        let v = match conn {
            Connective::NegL => arg(0).one_minus()?,
            Connective::ImpL => arg(0).imp_l(arg(1))?,
            Connective::ConjL => arg(0).conj_l(arg(1))?,
            Connective::Meet => arg(0).hmin(arg(1))?,
            Connective::Join => arg(0).hmax(arg(1))?,
            Connective::Oplus => arg(0).oplus(arg(1))?,
            Connective::Ominus => arg(0).ominus(arg(1))?,
            Connective::Delta => arg(0).delta()?,
            Connective::NegG => arg(0).neg_g()?,
            Connective::ImpG => arg(0).imp_g(arg(1))?,
            Connective::NegPi => arg(0).neg_pi()?,
            Connective::ImpPi => arg(0).imp_pi(arg(1))?,
            Connective::ConjPi => arg(0).mul(arg(1))?,
            _ => unreachable!(),
        };
        Ok(TruthValue::Hyper(v))
    }

    fn apply_inl_hyper(
        &self,
        conn: Connective,
        args: &[TruthValue],
    ) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &InlTriple<HyperValue> {
            match &args[i] {
                TruthValue::InlHyper(t) => t,
                _ => unreachable!(),
            }
        };
        let v = match conn {
            Connective::NegL => neutro::inl_hyper_neg(arg(0))?,
            Connective::ImpL => neutro::inl_hyper_imp(arg(0), arg(1))?,
            Connective::Meet => neutro::inl_hyper_and(arg(0), arg(1))?,
            Connective::Join => neutro::inl_hyper_or(arg(0), arg(1))?,
            Connective::Iff => {
                let fwd = neutro::inl_hyper_imp(arg(0), arg(1))?;
                let bwd = neutro::inl_hyper_imp(arg(1), arg(0))?;
                neutro::inl_hyper_and(&fwd, &bwd)?
            }
            _ => unreachable!(),
        };
        Ok(TruthValue::InlHyper(Box::new(v)))
    }

    fn apply_inl_padic(
        &self,
        conn: Connective,
        args: &[TruthValue],
    ) -> Result<TruthValue, EvalError> {
        let arg = |i: usize| -> &InlTriple<PadicInt> {
            match &args[i] {
                TruthValue::InlPadic(t) => t,
                _ => unreachable!(),
            }
        };
        let v = match conn {
            Connective::NegL => neutro::inl_padic_neg(arg(0)),
            Connective::ImpL => neutro::inl_padic_imp(arg(0), arg(1))?,
            Connective::Meet => neutro::inl_padic_and(arg(0), arg(1))?,
            Connective::Join => neutro::inl_padic_or(arg(0), arg(1))?,
            Connective::Iff => {
                let fwd = neutro::inl_padic_imp(arg(0), arg(1))?;
                let bwd = neutro::inl_padic_imp(arg(1), arg(0))?;
                neutro::inl_padic_and(&fwd, &bwd)?
            }
            _ => unreachable!(),
        };
        Ok(TruthValue::InlPadic(Box::new(v)))
    }
}

/// Bottom-up evaluation of a formula under a total valuation.
pub fn eval(logic: &Logic, formula: &Formula, valuation: &Valuation) -> Result<TruthValue, EvalError> {
    match formula {
        Formula::Var(v) => {
            let value = valuation
                .get(v)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?;
            if !logic.admits(value) {
                return Err(EvalError::DomainMismatch(logic.id()));
            }
            Ok(value.clone())
        }
        Formula::Falsum => Ok(logic.falsum()),
        Formula::Verum => Ok(logic.verum()),
        Formula::GradedConst(level) => match logic.finite_values() {
            Some(n) if *level < n => Ok(TruthValue::Finite(*level)),
            Some(_) => Err(EvalError::GradedConstOutOfRange {
                level: *level,
                logic: logic.id(),
            }),
            None => Err(EvalError::GradedConstUnsupported),
        },
        Formula::Apply(conn, args) => {
            let values = args
                .iter()
                .map(|a| eval(logic, a, valuation))
                .collect::<Result<Vec<_>, _>>()?;
            logic.apply(*conn, &values)
        }
    }
}

/// An exhaustive table of a connective over a finite logic, with values
/// listed in descending order as conventionally printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    pub conn: Connective,
    pub values_desc: Vec<u32>,
    /// `rows[i][j] = conn(values_desc[i], values_desc[j])`; unary
    /// connectives produce single-entry rows.
    pub rows: Vec<Vec<u32>>,
}

pub fn truth_table(logic: &Logic, conn: Connective) -> Result<TruthTable, EvalError> {
    let n = logic
        .finite_values()
        .ok_or_else(|| EvalError::NotFinite(logic.id()))?;
    let values_desc: Vec<u32> = (0..n).rev().collect();
    let fin = |v: &TruthValue| match v {
        TruthValue::Finite(x) => *x,
        _ => unreachable!(),
    };
    let mut rows = Vec::new();
    for &a in &values_desc {
        let mut row = Vec::new();
        if conn.arity() == 1 {
            row.push(fin(&logic.apply(conn, &[TruthValue::Finite(a)])?));
        } else {
            for &b in &values_desc {
                row.push(fin(&logic.apply(
                    conn,
                    &[TruthValue::Finite(a), TruthValue::Finite(b)],
                )?));
            }
        }
        rows.push(row);
    }
    Ok(TruthTable {
        conn,
        values_desc,
        rows,
    })
}

pub const VARIABLE_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TautologyResult {
    Tautology,
    Counterexample { valuation: Valuation, value: TruthValue },
}

/// Exhaustive tautology check over a finite logic; the counterexample is
/// the lexicographically first failing valuation (variables in name
/// order, values ascending).
pub fn tautology_finite(logic: &Logic, formula: &Formula) -> Result<TautologyResult, EvalError> {
    let n = logic
        .finite_values()
        .ok_or_else(|| EvalError::NotFinite(logic.id()))?;
    let vars: Vec<String> = formula.variables().into_iter().collect();
    if vars.len() > VARIABLE_BOUND {
        return Err(EvalError::TooManyVariables(vars.len(), VARIABLE_BOUND));
    }
    let mut counters = vec![0u32; vars.len()];
    loop {
        let valuation = Valuation(
            vars.iter()
                .cloned()
                .zip(counters.iter().map(|&v| TruthValue::Finite(v)))
                .collect(),
        );
        let value = eval(logic, formula, &valuation)?;
        if !logic.designated(&value)? {
            return Ok(TautologyResult::Counterexample { valuation, value });
        }
        // Advance the most significant variable last so that valuations
        // enumerate in lexicographic order of the sorted variable names.
        let mut pos = counters.len();
        loop {
            if pos == 0 {
                return Ok(TautologyResult::Tautology);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < n {
                break;
            }
            counters[pos] = 0;
        }
    }
}

/// All valuations of `vars` over the finite logic, lexicographic.
pub fn finite_valuations(logic: &Logic, vars: &[String]) -> Result<Vec<Valuation>, EvalError> {
    let n = logic
        .finite_values()
        .ok_or_else(|| EvalError::NotFinite(logic.id()))?;
    if vars.len() > VARIABLE_BOUND {
        return Err(EvalError::TooManyVariables(vars.len(), VARIABLE_BOUND));
    }
    let mut out = Vec::new();
    let mut counters = vec![0u32; vars.len()];
    loop {
        out.push(Valuation(
            vars.iter()
                .cloned()
                .zip(counters.iter().map(|&v| TruthValue::Finite(v)))
                .collect(),
        ));
        let mut pos = counters.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < n {
                break;
            }
            counters[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::syntax::{iterated_imp, parse};

    fn luk3() -> Logic {
        Logic::FiniteLuk { n: 3 }
    }

    fn rv(n: i64, d: i64) -> TruthValue {
        TruthValue::Rational(rat(n, d))
    }

    #[test]
    fn logic_ids_round_trip() {
        for id in [
            "luk:3",
            "post:4",
            "luk-inf",
            "godel",
            "product",
            "hl:10",
            "hg:7",
            "pb:3",
            "pq:5",
            "padic-luk:2:8",
            "padic-godel:3:4",
            "padic-post:5:6",
            "hyper-luk:3",
            "hyper-godel:2",
            "hyper-product:4",
            "inl-hyper:3",
            "inl-padic:2:8",
        ] {
            let logic = Logic::parse_id(id).unwrap();
            assert_eq!(logic.id(), id);
        }
        assert_eq!(Logic::parse_id("luk3").unwrap(), luk3());
        assert!(Logic::parse_id("luk:1").is_err());
        assert!(Logic::parse_id("nope").is_err());
    }

    #[test]
    fn luk3_negation_values() {
        let l = luk3();
        let neg = |v: u32| {
            l.apply(Connective::NegL, &[TruthValue::Finite(v)])
                .unwrap()
        };
        assert_eq!(neg(2), TruthValue::Finite(0));
        assert_eq!(neg(1), TruthValue::Finite(1));
        assert_eq!(neg(0), TruthValue::Finite(2));
    }

    #[test]
    fn luk3_tables_match_the_printed_ones() {
        let l = luk3();
        let t = truth_table(&l, Connective::NegL).unwrap();
        assert_eq!(t.values_desc, vec![2, 1, 0]);
        assert_eq!(t.rows, vec![vec![0], vec![1], vec![2]]);

        let imp = truth_table(&l, Connective::ImpL).unwrap();
        assert_eq!(
            imp.rows,
            vec![vec![2, 1, 0], vec![2, 2, 1], vec![2, 2, 2]]
        );

        let join = truth_table(&l, Connective::Join).unwrap();
        assert_eq!(
            join.rows,
            vec![vec![2, 2, 2], vec![2, 1, 1], vec![2, 1, 0]]
        );

        let meet = truth_table(&l, Connective::Meet).unwrap();
        assert_eq!(
            meet.rows,
            vec![vec![2, 1, 0], vec![1, 1, 0], vec![0, 0, 0]]
        );
    }

    #[test]
    fn tuziak_counterexample_and_tautology() {
        let l = luk3();
        let p = Formula::var("p");
        let q = Formula::var("q");
        let k2 = Formula::binary(
            Connective::ImpL,
            iterated_imp(Connective::ImpL, &p, &q, 2),
            iterated_imp(Connective::ImpL, &p, &q, 1),
        );
        match tautology_finite(&l, &k2).unwrap() {
            TautologyResult::Counterexample { valuation, value } => {
                assert_eq!(valuation.get("p"), Some(&TruthValue::Finite(1)));
                assert_eq!(valuation.get("q"), Some(&TruthValue::Finite(0)));
                assert_eq!(value, TruthValue::Finite(1));
            }
            other => panic!("expected counterexample, got {other:?}"),
        }
        let k3 = Formula::binary(
            Connective::ImpL,
            iterated_imp(Connective::ImpL, &p, &q, 3),
            iterated_imp(Connective::ImpL, &p, &q, 2),
        );
        assert_eq!(tautology_finite(&l, &k3).unwrap(), TautologyResult::Tautology);
    }

    #[test]
    fn identity_is_a_tautology_in_every_finite_luk() {
        let f = parse("p ->L p").unwrap();
        for n in 2..=6 {
            let l = Logic::FiniteLuk { n };
            assert_eq!(tautology_finite(&l, &f).unwrap(), TautologyResult::Tautology);
        }
    }

    #[test]
    fn excluded_middle_fails_at_the_neutral_value() {
        let f = parse("p \\/ ~L p").unwrap();
        match tautology_finite(&luk3(), &f).unwrap() {
            TautologyResult::Counterexample { valuation, value } => {
                assert_eq!(valuation.get("p"), Some(&TruthValue::Finite(1)));
                assert_eq!(value, TruthValue::Finite(1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unit_logics_match_hand_computations() {
        let v = Valuation::new()
            .bind("x", rv(3, 10))
            .bind("y", rv(2, 10));
        let f = parse("x ->L y").unwrap();
        assert_eq!(eval(&Logic::LukInf, &f, &v).unwrap(), rv(9, 10));

        let v2 = Valuation::new()
            .bind("x", rv(7, 10))
            .bind("y", rv(5, 10));
        assert_eq!(
            eval(&Logic::Godel, &parse("x ->G y").unwrap(), &v2).unwrap(),
            rv(5, 10)
        );
        assert_eq!(
            eval(&Logic::Godel, &parse("y ->G x").unwrap(), &v2).unwrap(),
            rv(1, 1)
        );
        assert_eq!(
            eval(&Logic::Product, &parse("x ->P y").unwrap(), &v2).unwrap(),
            rv(5, 7)
        );
    }

    #[test]
    fn uninterpreted_tags_are_errors() {
        let v = Valuation::new().bind("p", TruthValue::Finite(1));
        let err = eval(&luk3(), &parse("~Post p").unwrap(), &v).unwrap_err();
        assert!(matches!(err, EvalError::Uninterpreted { .. }));
        // Post logic in turn rejects the Lukasiewicz negation.
        let post = Logic::Post { m: 3 };
        assert!(matches!(
            eval(&post, &parse("~L p").unwrap(), &v),
            Err(EvalError::Uninterpreted { .. })
        ));
    }

    #[test]
    fn padic_logics_evaluate() {
        let l = Logic::PadicLuk { p: 2, k: 3 };
        let v = Valuation::new()
            .bind("x", TruthValue::Padic(PadicInt::from_u64(2, 3, 3)))
            .bind("y", TruthValue::Padic(PadicInt::from_u64(2, 3, 5)));
        assert_eq!(
            eval(&l, &parse("x ->L y").unwrap(), &v).unwrap(),
            TruthValue::Padic(PadicInt::from_u64(2, 3, 5))
        );

        let post = Logic::PadicPost { p: 3, k: 3 };
        let v = Valuation::new()
            .bind("x", TruthValue::Padic(PadicInt::new(3, vec![2, 0, 1]).unwrap()));
        assert_eq!(
            eval(&post, &parse("~Post x").unwrap(), &v).unwrap(),
            TruthValue::Padic(PadicInt::new(3, vec![0, 1, 2]).unwrap())
        );
    }

    #[test]
    fn graded_constants_only_in_finite_logics() {
        let f = parse("#2").unwrap();
        assert_eq!(
            eval(&luk3(), &f, &Valuation::new()).unwrap(),
            TruthValue::Finite(2)
        );
        assert!(matches!(
            eval(&luk3(), &parse("#3").unwrap(), &Valuation::new()),
            Err(EvalError::GradedConstOutOfRange { .. })
        ));
        assert!(matches!(
            eval(&Logic::LukInf, &f, &Valuation::new()),
            Err(EvalError::GradedConstUnsupported)
        ));
    }

    #[test]
    fn derived_lattice_identities_hold_in_finite_luk() {
        // x v y = (x -> y) -> y and x ^ y = neg(neg x v neg y).
        for n in 2..=7u32 {
            let l = Logic::FiniteLuk { n };
            for a in 0..n {
                for b in 0..n {
                    let x = TruthValue::Finite(a);
                    let y = TruthValue::Finite(b);
                    let join = l.apply(Connective::Join, &[x.clone(), y.clone()]).unwrap();
                    let imp = l.apply(Connective::ImpL, &[x.clone(), y.clone()]).unwrap();
                    let derived = l.apply(Connective::ImpL, &[imp, y.clone()]).unwrap();
                    assert_eq!(join, derived);

                    let meet = l.apply(Connective::Meet, &[x.clone(), y.clone()]).unwrap();
                    let nx = l.apply(Connective::NegL, &[x]).unwrap();
                    let ny = l.apply(Connective::NegL, &[y]).unwrap();
                    let nj = l.apply(Connective::Join, &[nx, ny]).unwrap();
                    let derived_meet = l.apply(Connective::NegL, &[nj]).unwrap();
                    assert_eq!(meet, derived_meet);
                }
            }
        }
    }

    #[test]
    fn too_many_variables_is_reported() {
        let f = parse("a \\/ b \\/ c \\/ d \\/ e \\/ f \\/ g").unwrap();
        assert!(matches!(
            tautology_finite(&luk3(), &f),
            Err(EvalError::TooManyVariables(7, 6))
        ));
    }
}
