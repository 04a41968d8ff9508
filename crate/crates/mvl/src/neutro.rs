//! Vague sets, interval neutrosophic sets and their combinators, the
//! special-case classification, and the interval neutrosophic matrix
//! operations on truth/indeterminacy/falsity triples.
//!
//! Interval combinators are image hulls: every scalar truth function used
//! here is monotone (or antitone) in each argument, so the hull of the
//! image over a box of inputs is attained at corners and the computation
//! stays exact.

use std::fmt;
use std::str::FromStr;

use num::rational::Ratio;
use num::{One, Zero};
use thiserror::Error;

use crate::hyper::{HyperError, HyperValue};
use crate::matrices::padic_ops::{self, PadicOpError};
use crate::padic::{PadicError, PadicInt};
use crate::rational::{in_unit_interval, parse_rational, rat_one, rat_zero, Rational};
use crate::syntax::Schema;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum NeutroError {
    #[error("vague value needs t + f <= 1 with both in [0,1]")]
    BadVagueValue,
    #[error("interval bounds out of order")]
    BadInterval,
    #[error("component interval not contained in [0,1]")]
    ComponentOutOfRange,
    #[error("Product implication over an antecedent interval containing 0")]
    PiDenominatorContainsZero,
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    PadicOp(#[from] PadicOpError),
    #[error("parse error: {0}")]
    Parse(String),
}

// ---------------------------------------------------------------------------
// Vague sets

/// A vague value `(t, f)` with `t + f <= 1`, rendered as `[t, 1 - f]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VagueValue {
    t: Rational,
    f: Rational,
}

impl VagueValue {
    pub fn new(t: Rational, f: Rational) -> Result<Self, NeutroError> {
        if !in_unit_interval(&t) || !in_unit_interval(&f) || &t + &f > rat_one() {
            return Err(NeutroError::BadVagueValue);
        }
        Ok(VagueValue { t, f })
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn f(&self) -> &Rational {
        &self.f
    }

    /// The membership interval `[t, 1 - f]`.
    pub fn interval(&self) -> (Rational, Rational) {
        (self.t.clone(), rat_one() - &self.f)
    }

    /// Complement `(f, t)`: the involution swapping evidence for and
    /// against, sending `[t, 1-f]` to `[f, 1-t]`.
    pub fn neg(&self) -> VagueValue {
        VagueValue {
            t: self.f.clone(),
            f: self.t.clone(),
        }
    }

    pub fn and(&self, other: &VagueValue) -> VagueValue {
        VagueValue {
            t: self.t.clone().min(other.t.clone()),
            f: self.f.clone().max(other.f.clone()),
        }
    }

    pub fn or(&self, other: &VagueValue) -> VagueValue {
        VagueValue {
            t: self.t.clone().max(other.t.clone()),
            f: self.f.clone().min(other.f.clone()),
        }
    }
}

// ---------------------------------------------------------------------------
// Rational intervals

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NeutroError> {
        if lo > hi {
            return Err(NeutroError::BadInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(q: Rational) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn in_unit(&self) -> bool {
        in_unit_interval(&self.lo) && in_unit_interval(&self.hi)
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let corners = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        Interval {
            lo: corners.iter().min().unwrap().clone(),
            hi: corners.iter().max().unwrap().clone(),
        }
    }

    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }

    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn scalar_add(&self, q: &Rational) -> Interval {
        Interval {
            lo: q + &self.lo,
            hi: q + &self.hi,
        }
    }

    /// `1 - [a, b] = [1 - b, 1 - a]`.
    pub fn one_minus(&self) -> Interval {
        Interval {
            lo: rat_one() - &self.hi,
            hi: rat_one() - &self.lo,
        }
    }
}

// ---------------------------------------------------------------------------
// Interval neutrosophic sets

/// `t`/`i`/`f` component intervals in `[0,1]`; the indeterminacy may be
/// literally empty, which the classification inspects before any
/// arithmetic coerces it to `[0,0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutroInterval {
    pub t: Interval,
    pub i: Option<Interval>,
    pub f: Interval,
}

impl NeutroInterval {
    pub fn new(t: Interval, i: Option<Interval>, f: Interval) -> Result<Self, NeutroError> {
        if !t.in_unit() || !f.in_unit() || i.as_ref().is_some_and(|iv| !iv.in_unit()) {
            return Err(NeutroError::ComponentOutOfRange);
        }
        Ok(NeutroInterval { t, i, f })
    }

    fn i_coerced(&self) -> Interval {
        self.i
            .clone()
            .unwrap_or_else(|| Interval::point(rat_zero()))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Flavor {
    Luk,
    Godel,
    Product,
}

impl Flavor {
    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "luk" | "lukasiewicz" | "L" => Some(Flavor::Luk),
            "godel" | "goedel" | "G" => Some(Flavor::Godel),
            "product" | "pi" | "P" => Some(Flavor::Product),
            _ => None,
        }
    }
}

fn scalar_luk_imp(x: &Rational, y: &Rational) -> Rational {
    (rat_one() - x + y).min(rat_one())
}

fn scalar_godel_imp(x: &Rational, y: &Rational) -> Rational {
    if x <= y {
        rat_one()
    } else {
        y.clone()
    }
}

fn scalar_godel_neg(x: &Rational) -> Rational {
    if x.is_zero() {
        rat_one()
    } else {
        rat_zero()
    }
}

fn scalar_pi_imp(x: &Rational, y: &Rational) -> Rational {
    if x <= y {
        rat_one()
    } else {
        y / x
    }
}

fn scalar_luk_conj(x: &Rational, y: &Rational) -> Rational {
    (x + y - rat_one()).max(rat_zero())
}

fn complement_component(flavor: Flavor, c: &Interval) -> Interval {
    match flavor {
        Flavor::Luk => c.one_minus(),
        // Antitone step function: hull at swapped corners.
        Flavor::Godel | Flavor::Product => Interval {
            lo: scalar_godel_neg(&c.hi),
            hi: scalar_godel_neg(&c.lo),
        },
    }
}

fn implication_component(
    flavor: Flavor,
    a: &Interval,
    b: &Interval,
) -> Result<Interval, NeutroError> {
    Ok(match flavor {
        Flavor::Luk => Interval {
            lo: scalar_luk_imp(&a.hi, &b.lo),
            hi: scalar_luk_imp(&a.lo, &b.hi),
        },
        Flavor::Godel => Interval {
            lo: scalar_godel_imp(&a.hi, &b.lo),
            hi: scalar_godel_imp(&a.lo, &b.hi),
        },
        Flavor::Product => {
            if a.hi > b.lo && a.lo.is_zero() {
                // Some operand pair reaches the division branch while the
                // antecedent is not bounded away from 0.
                return Err(NeutroError::PiDenominatorContainsZero);
            }
            Interval {
                lo: scalar_pi_imp(&a.hi, &b.lo),
                hi: scalar_pi_imp(&a.lo, &b.hi),
            }
        }
    })
}

fn intersection_component(flavor: Flavor, a: &Interval, b: &Interval) -> Interval {
    match flavor {
        Flavor::Luk => Interval {
            lo: scalar_luk_conj(&a.lo, &b.lo),
            hi: scalar_luk_conj(&a.hi, &b.hi),
        },
        Flavor::Godel => a.min(b),
        Flavor::Product => a.mul(b),
    }
}

pub fn neutro_complement(flavor: Flavor, a: &NeutroInterval) -> NeutroInterval {
    NeutroInterval {
        t: complement_component(flavor, &a.t),
        i: Some(complement_component(flavor, &a.i_coerced())),
        f: complement_component(flavor, &a.f),
    }
}

pub fn neutro_implication(
    flavor: Flavor,
    a: &NeutroInterval,
    b: &NeutroInterval,
) -> Result<NeutroInterval, NeutroError> {
    Ok(NeutroInterval {
        t: implication_component(flavor, &a.t, &b.t)?,
        i: Some(implication_component(
            flavor,
            &a.i_coerced(),
            &b.i_coerced(),
        )?),
        f: implication_component(flavor, &a.f, &b.f)?,
    })
}

pub fn neutro_intersection(flavor: Flavor, a: &NeutroInterval, b: &NeutroInterval) -> NeutroInterval {
    NeutroInterval {
        t: intersection_component(flavor, &a.t, &b.t),
        i: Some(intersection_component(
            flavor,
            &a.i_coerced(),
            &b.i_coerced(),
        )),
        f: intersection_component(flavor, &a.f, &b.f),
    }
}

// ---------------------------------------------------------------------------
// Classification

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NeutroClass {
    Classical,
    Fuzzy,
    IntervalFuzzy,
    Intuitionistic,
    IntervalIntuitionistic,
    Paraconsistent,
    IntervalParaconsistent,
    General,
}

impl NeutroClass {
    pub fn label(self) -> &'static str {
        match self {
            NeutroClass::Classical => "classical",
            NeutroClass::Fuzzy => "fuzzy",
            NeutroClass::IntervalFuzzy => "interval-fuzzy",
            NeutroClass::Intuitionistic => "intuitionistic",
            NeutroClass::IntervalIntuitionistic => "interval-intuitionistic",
            NeutroClass::Paraconsistent => "paraconsistent",
            NeutroClass::IntervalParaconsistent => "interval-paraconsistent",
            NeutroClass::General => "general",
        }
    }
}

impl fmt::Display for NeutroClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// First matching special case, in the order of the defining list.
pub fn classify(a: &NeutroInterval) -> NeutroClass {
    if a.i.is_some() {
        return NeutroClass::General;
    }
    let crisp = |iv: &Interval| iv.is_point() && (iv.lo.is_zero() || iv.lo.is_one());
    let degenerate = a.t.is_point() && a.f.is_point();
    let max_sum = a.t.hi() + a.f.hi();
    let cross_hi = a.t.hi() + a.f.lo();
    let cross_lo = a.t.lo() + a.f.hi();
    let one = rat_one();

    if crisp(&a.t) && crisp(&a.f) && max_sum == one {
        NeutroClass::Classical
    } else if degenerate && max_sum == one {
        NeutroClass::Fuzzy
    } else if cross_hi == one && cross_lo == one {
        NeutroClass::IntervalFuzzy
    } else if degenerate && max_sum <= one {
        NeutroClass::Intuitionistic
    } else if cross_hi <= one {
        NeutroClass::IntervalIntuitionistic
    } else if degenerate && max_sum > one {
        NeutroClass::Paraconsistent
    } else if cross_hi > one {
        NeutroClass::IntervalParaconsistent
    } else {
        NeutroClass::General
    }
}

impl fmt::Display for NeutroInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |iv: &Interval| format!("{},{}", iv.lo, iv.hi);
        let i = match &self.i {
            Some(iv) => comp(iv),
            None => "empty".into(),
        };
        write!(f, "<{}|{}|{}>", comp(&self.t), i, comp(&self.f))
    }
}

impl FromStr for NeutroInterval {
    type Err = NeutroError;

    /// Accepts `<t_lo,t_hi | i_lo,i_hi | f_lo,f_hi>` with `empty` (or a
    /// literal `∅`) allowed for the indeterminacy component.
    fn from_str(s: &str) -> Result<Self, NeutroError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| NeutroError::Parse(format!("expected <..|..|..>, got {s:?}")))?;
        let parts: Vec<&str> = inner.split('|').collect();
        if parts.len() != 3 {
            return Err(NeutroError::Parse("expected three components".into()));
        }
        let interval = |part: &str| -> Result<Interval, NeutroError> {
            let pieces: Vec<&str> = part.split(',').collect();
            let (lo, hi) = match pieces.as_slice() {
                [single] => {
                    let q = parse_rational(single).map_err(NeutroError::Parse)?;
                    (q.clone(), q)
                }
                [lo, hi] => (
                    parse_rational(lo).map_err(NeutroError::Parse)?,
                    parse_rational(hi).map_err(NeutroError::Parse)?,
                ),
                _ => return Err(NeutroError::Parse(format!("bad interval {part:?}"))),
            };
            Interval::new(lo, hi)
        };
        let t = interval(parts[0])?;
        let i_part = parts[1].trim();
        let i = if i_part == "empty" || i_part == "∅" {
            None
        } else {
            Some(interval(parts[1])?)
        };
        let f = interval(parts[2])?;
        NeutroInterval::new(t, i, f)
    }
}

// ---------------------------------------------------------------------------
// Interval neutrosophic matrix logic on value triples

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InlTriple<V> {
    pub t: V,
    pub i: V,
    pub f: V,
}

impl<V> InlTriple<V> {
    pub fn new(t: V, i: V, f: V) -> Self {
        InlTriple { t, i, f }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum InlConn {
    Neg,
    Imp,
    And,
    Or,
}

pub fn inl_hyper_neg(a: &InlTriple<HyperValue>) -> Result<InlTriple<HyperValue>, NeutroError> {
    Ok(InlTriple::new(a.f.clone(), a.i.one_minus()?, a.t.clone()))
}

pub fn inl_hyper_imp(
    a: &InlTriple<HyperValue>,
    b: &InlTriple<HyperValue>,
) -> Result<InlTriple<HyperValue>, NeutroError> {
    Ok(InlTriple::new(
        a.t.imp_l(&b.t)?,
        b.i.ominus(&a.i)?,
        b.f.ominus(&a.f)?,
    ))
}

pub fn inl_hyper_and(
    a: &InlTriple<HyperValue>,
    b: &InlTriple<HyperValue>,
) -> Result<InlTriple<HyperValue>, NeutroError> {
    Ok(InlTriple::new(
        a.t.hmin(&b.t)?,
        a.i.hmax(&b.i)?,
        a.f.hmax(&b.f)?,
    ))
}

pub fn inl_hyper_or(
    a: &InlTriple<HyperValue>,
    b: &InlTriple<HyperValue>,
) -> Result<InlTriple<HyperValue>, NeutroError> {
    Ok(InlTriple::new(
        a.t.hmax(&b.t)?,
        a.i.hmin(&b.i)?,
        a.f.hmin(&b.f)?,
    ))
}

pub fn inl_hyper_designated(a: &InlTriple<HyperValue>) -> bool {
    a.t.is_one() && a.i.is_zero() && a.f.is_zero()
}

pub fn inl_padic_neg(a: &InlTriple<PadicInt>) -> InlTriple<PadicInt> {
    InlTriple::new(a.f.clone(), a.i.complement(), a.t.clone())
}

pub fn inl_padic_imp(
    a: &InlTriple<PadicInt>,
    b: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    let zero = PadicInt::zero(a.t.p(), a.t.precision());
    Ok(InlTriple::new(
        padic_ops::luk_imp(&a.t, &b.t)?,
        zero.pmax(&b.i.sub(&a.i)?)?,
        zero.pmax(&b.f.sub(&a.f)?)?,
    ))
}

pub fn inl_padic_and(
    a: &InlTriple<PadicInt>,
    b: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    Ok(InlTriple::new(
        a.t.pmin(&b.t)?,
        a.i.pmax(&b.i)?,
        a.f.pmax(&b.f)?,
    ))
}

pub fn inl_padic_or(
    a: &InlTriple<PadicInt>,
    b: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    Ok(InlTriple::new(
        a.t.pmax(&b.t)?,
        a.i.pmin(&b.i)?,
        a.f.pmin(&b.f)?,
    ))
}

pub fn inl_padic_designated(a: &InlTriple<PadicInt>) -> bool {
    a.t == PadicInt::n_max(a.t.p(), a.t.precision()) && a.i.is_zero() && a.f.is_zero()
}

// ---------------------------------------------------------------------------
// p-adic neutrosophic set combinators (scalar triples)

pub fn neutro_padic_complement(
    flavor: Flavor,
    a: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    let apply = |x: &PadicInt| -> Result<PadicInt, NeutroError> {
        Ok(match flavor {
            Flavor::Luk => padic_ops::luk_neg(x),
            Flavor::Godel => padic_ops::godel_neg(x)?,
            Flavor::Product => padic_ops::product_neg(x),
        })
    };
    Ok(InlTriple::new(apply(&a.t)?, apply(&a.i)?, apply(&a.f)?))
}

pub fn neutro_padic_implication(
    flavor: Flavor,
    a: &InlTriple<PadicInt>,
    b: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    let apply = |x: &PadicInt, y: &PadicInt| -> Result<PadicInt, NeutroError> {
        Ok(match flavor {
            Flavor::Luk => padic_ops::luk_imp(x, y)?,
            Flavor::Godel => padic_ops::godel_imp(x, y)?,
            Flavor::Product => padic_ops::product_imp(x, y)?,
        })
    };
    Ok(InlTriple::new(
        apply(&a.t, &b.t)?,
        apply(&a.i, &b.i)?,
        apply(&a.f, &b.f)?,
    ))
}

pub fn neutro_padic_intersection(
    flavor: Flavor,
    a: &InlTriple<PadicInt>,
    b: &InlTriple<PadicInt>,
) -> Result<InlTriple<PadicInt>, NeutroError> {
    let apply = |x: &PadicInt, y: &PadicInt| -> Result<PadicInt, NeutroError> {
        Ok(match flavor {
            Flavor::Luk => padic_ops::luk_conj(x, y)?,
            Flavor::Godel => x.pmin(y)?,
            Flavor::Product => x.mul(y)?,
        })
    };
    Ok(InlTriple::new(
        apply(&a.t, &b.t)?,
        apply(&a.i, &b.i)?,
        apply(&a.f, &b.f)?,
    ))
}

// ---------------------------------------------------------------------------
// Grid checking of INL axiom schemata

type Rat64 = Ratio<i64>;

/// The connectives act componentwise on the `(t, f)` pair and on `i`
/// alone, so a schema is designated on the full triple grid exactly when
/// its `(t, f)` projection is `(1, 0)` on the pair grid and its `i`
/// projection is `0` on the line grid. This cuts an infeasible product of
/// triple grids down to two small sweeps.
fn eval_pair(
    schema: &Schema,
    env: &dyn Fn(&str) -> (Rat64, Rat64),
) -> Result<(Rat64, Rat64), NeutroError> {
    use crate::syntax::Connective as C;
    let one = Rat64::one;
    let zero = Rat64::zero;
    match schema {
        Schema::MetaVar(v) | Schema::Var(v) => Ok(env(v)),
        Schema::Apply(C::NegL, args) => {
            let (t, f) = eval_pair(&args[0], env)?;
            Ok((f, t))
        }
        Schema::Apply(C::ImpL, args) => {
            let (t1, f1) = eval_pair(&args[0], env)?;
            let (t2, f2) = eval_pair(&args[1], env)?;
            Ok(((one() - t1 + t2).min(one()), (f2 - f1).max(zero())))
        }
        Schema::Apply(C::Meet, args) => {
            let (t1, f1) = eval_pair(&args[0], env)?;
            let (t2, f2) = eval_pair(&args[1], env)?;
            Ok((t1.min(t2), f1.max(f2)))
        }
        Schema::Apply(C::Join, args) => {
            let (t1, f1) = eval_pair(&args[0], env)?;
            let (t2, f2) = eval_pair(&args[1], env)?;
            Ok((t1.max(t2), f1.min(f2)))
        }
        Schema::Apply(C::Iff, args) => {
            let a = &args[0];
            let b = &args[1];
            let fwd = eval_pair(&Schema::Apply(C::ImpL, vec![a.clone(), b.clone()]), env)?;
            let bwd = eval_pair(&Schema::Apply(C::ImpL, vec![b.clone(), a.clone()]), env)?;
            Ok((fwd.0.min(bwd.0), fwd.1.max(bwd.1)))
        }
        _ => Err(NeutroError::Parse(format!(
            "connective not interpreted by the INL matrix: {schema}"
        ))),
    }
}

fn eval_indet(schema: &Schema, env: &dyn Fn(&str) -> Rat64) -> Result<Rat64, NeutroError> {
    use crate::syntax::Connective as C;
    match schema {
        Schema::MetaVar(v) | Schema::Var(v) => Ok(env(v)),
        Schema::Apply(C::NegL, args) => Ok(Rat64::one() - eval_indet(&args[0], env)?),
        Schema::Apply(C::ImpL, args) => {
            let a = eval_indet(&args[0], env)?;
            let b = eval_indet(&args[1], env)?;
            Ok((b - a).max(Rat64::zero()))
        }
        Schema::Apply(C::Meet, args) => {
            Ok(eval_indet(&args[0], env)?.max(eval_indet(&args[1], env)?))
        }
        Schema::Apply(C::Join, args) => {
            Ok(eval_indet(&args[0], env)?.min(eval_indet(&args[1], env)?))
        }
        Schema::Apply(C::Iff, args) => {
            let a = eval_indet(&args[0], env)?;
            let b = eval_indet(&args[1], env)?;
            Ok((b - a).max(Rat64::zero()).max((a - b).max(Rat64::zero())))
        }
        _ => Err(NeutroError::Parse(format!(
            "connective not interpreted by the INL matrix: {schema}"
        ))),
    }
}

/// A grid point falsifying designation of an INL schema.
#[derive(Clone, Debug, PartialEq)]
pub struct InlGridWitness {
    pub description: String,
}

/// Checks that `schema` evaluates to the designated triple `<1, 0, 0>` on
/// the grid `{0, 1/steps, ..., 1}` applied independently per component.
pub fn inl_axiom_designated_on_grid(
    schema: &Schema,
    steps: i64,
) -> Result<Result<(), InlGridWitness>, NeutroError> {
    let vars: Vec<String> = schema.metavars().into_iter().collect();
    let grid: Vec<Rat64> = (0..=steps).map(|k| Rat64::new(k, steps)).collect();

    // (t, f) plane sweep.
    let pairs: Vec<(Rat64, Rat64)> = grid
        .iter()
        .flat_map(|t| grid.iter().map(move |f| (*t, *f)))
        .collect();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let env = |name: &str| -> (Rat64, Rat64) {
            let pos = vars.iter().position(|v| v == name).expect("known metavar");
            pairs[idx[pos]]
        };
        let (t, f) = eval_pair(schema, &env)?;
        if !(t.is_one() && f.is_zero()) {
            let assign: Vec<String> = vars
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let (tv, fv) = pairs[idx[k]];
                    format!("{v}=(t {tv}, f {fv})")
                })
                .collect();
            return Ok(Err(InlGridWitness {
                description: format!(
                    "(t,f) projection gives (t {t}, f {f}) at {}",
                    assign.join(", ")
                ),
            }));
        }
        if !advance(&mut idx, pairs.len()) {
            break;
        }
    }

    // Indeterminacy line sweep.
    let mut idx = vec![0usize; vars.len()];
    loop {
        let env = |name: &str| -> Rat64 {
            let pos = vars.iter().position(|v| v == name).expect("known metavar");
            grid[idx[pos]]
        };
        let i = eval_indet(schema, &env)?;
        if !i.is_zero() {
            let assign: Vec<String> = vars
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{v}=(i {})", grid[idx[k]]))
                .collect();
            return Ok(Err(InlGridWitness {
                description: format!("i projection gives {i} at {}", assign.join(", ")),
            }));
        }
        if !advance(&mut idx, grid.len()) {
            break;
        }
    }
    Ok(Ok(()))
}

fn advance(idx: &mut [usize], radix: usize) -> bool {
    for slot in idx.iter_mut() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> Interval {
        Interval::new(rat(lo.0, lo.1), rat(hi.0, hi.1)).unwrap()
    }

    fn point(n: i64, d: i64) -> Interval {
        Interval::point(rat(n, d))
    }

    #[test]
    fn vague_complement_is_involution() {
        let x = VagueValue::new(rat(2, 5), rat(3, 10)).unwrap();
        let n = x.neg();
        assert_eq!(n.t(), &rat(3, 10));
        assert_eq!(n.f(), &rat(2, 5));
        assert_eq!(n.interval(), (rat(3, 10), rat(3, 5)));
        assert_eq!(n.neg(), x);
    }

    #[test]
    fn vague_lattice_ops() {
        let truthy = VagueValue::new(rat(1, 1), rat(0, 1)).unwrap();
        let falsy = VagueValue::new(rat(0, 1), rat(1, 1)).unwrap();
        assert_eq!(truthy.and(&falsy), falsy);
        let x = VagueValue::new(rat(2, 5), rat(3, 10)).unwrap();
        assert_eq!(x.or(&x), x);
    }

    #[test]
    fn interval_arithmetic_examples() {
        assert_eq!(
            iv((1, 4), (1, 2)).add(&point(1, 4)),
            iv((1, 2), (3, 4))
        );
        assert_eq!(iv((1, 4), (1, 2)).one_minus(), iv((1, 2), (3, 4)));
        assert_eq!(
            iv((1, 4), (1, 2)).min(&iv((1, 3), (2, 5))),
            iv((1, 4), (2, 5))
        );
    }

    #[test]
    fn luk_complement_componentwise() {
        let a = NeutroInterval::new(point(6, 10), Some(point(2, 10)), point(3, 10)).unwrap();
        let c = neutro_complement(Flavor::Luk, &a);
        assert_eq!(c.t, point(4, 10));
        assert_eq!(c.i, Some(point(8, 10)));
        assert_eq!(c.f, point(7, 10));
    }

    #[test]
    fn godel_intersection_is_min() {
        let a = NeutroInterval::new(point(1, 2), None, point(1, 4)).unwrap();
        let b = NeutroInterval::new(point(1, 3), None, point(1, 2)).unwrap();
        let c = neutro_intersection(Flavor::Godel, &a, &b);
        assert_eq!(c.t, point(1, 3));
        assert_eq!(c.f, point(1, 4));
    }

    #[test]
    fn product_self_intersection_squares() {
        let a = NeutroInterval::new(point(1, 2), Some(point(1, 2)), point(1, 2)).unwrap();
        let c = neutro_intersection(Flavor::Product, &a, &a);
        assert_eq!(c.t, point(1, 4));
    }

    #[test]
    fn luk_implication_hull_stays_in_unit_interval() {
        let a = NeutroInterval::new(point(0, 1), None, point(0, 1)).unwrap();
        let b = NeutroInterval::new(iv((0, 1), (1, 1)), None, point(0, 1)).unwrap();
        let c = neutro_implication(Flavor::Luk, &a, &b).unwrap();
        assert_eq!(c.t, point(1, 1));
        assert!(c.t.in_unit());
    }

    #[test]
    fn pi_implication_zero_denominator_errors() {
        let a = NeutroInterval::new(iv((0, 1), (1, 2)), None, point(1, 2)).unwrap();
        let b = NeutroInterval::new(point(1, 5), None, point(1, 2)).unwrap();
        assert!(matches!(
            neutro_implication(Flavor::Product, &a, &b),
            Err(NeutroError::PiDenominatorContainsZero)
        ));
    }

    #[test]
    fn classification_fixtures() {
        let mk = |t: Interval, i: Option<Interval>, f: Interval| {
            NeutroInterval::new(t, i, f).unwrap()
        };
        assert_eq!(
            classify(&mk(point(3, 10), None, point(8, 10))),
            NeutroClass::Paraconsistent
        );
        assert_eq!(
            classify(&mk(point(1, 1), None, point(0, 1))),
            NeutroClass::Classical
        );
        assert_eq!(
            classify(&mk(point(6, 10), None, point(4, 10))),
            NeutroClass::Fuzzy
        );
        assert_eq!(
            classify(&mk(iv((2, 10), (3, 10)), None, iv((7, 10), (8, 10)))),
            NeutroClass::IntervalFuzzy
        );
        assert_eq!(
            classify(&mk(point(3, 10), None, point(4, 10))),
            NeutroClass::Intuitionistic
        );
        assert_eq!(
            classify(&mk(iv((2, 10), (3, 10)), None, iv((5, 10), (8, 10)))),
            NeutroClass::IntervalIntuitionistic
        );
        assert_eq!(
            classify(&mk(iv((6, 10), (9, 10)), None, iv((5, 10), (8, 10)))),
            NeutroClass::IntervalParaconsistent
        );
        assert_eq!(
            classify(&mk(point(1, 2), Some(point(1, 2)), point(1, 2))),
            NeutroClass::General
        );
    }

    #[test]
    fn triple_text_round_trip() {
        let a: NeutroInterval = "<0.3,0.3|empty|0.8,0.8>".parse().unwrap();
        assert_eq!(a.i, None);
        let shown = a.to_string();
        assert_eq!(shown.parse::<NeutroInterval>().unwrap(), a);
        let b: NeutroInterval = "<1/2,3/4|0,0.1|0.2,0.2>".parse().unwrap();
        assert_eq!(b.to_string().parse::<NeutroInterval>().unwrap(), b);
    }

    fn hyper_std(n: i64, d: i64) -> HyperValue {
        HyperValue::standard(rat(n, d)).unwrap()
    }

    fn hyper_triple(t: (i64, i64), i: (i64, i64), f: (i64, i64)) -> InlTriple<HyperValue> {
        InlTriple::new(
            hyper_std(t.0, t.1),
            hyper_std(i.0, i.1),
            hyper_std(f.0, f.1),
        )
    }

    #[test]
    fn inl_negation_and_implication() {
        let a = hyper_triple((6, 10), (2, 10), (3, 10));
        let n = inl_hyper_neg(&a).unwrap();
        assert_eq!(n, hyper_triple((3, 10), (8, 10), (6, 10)));
        assert_eq!(inl_hyper_neg(&n).unwrap(), a);

        let b = hyper_triple((8, 10), (1, 10), (5, 10));
        let imp = inl_hyper_imp(&a, &b).unwrap();
        assert_eq!(imp, hyper_triple((1, 1), (0, 1), (2, 10)));

        let top = hyper_triple((1, 1), (0, 1), (0, 1));
        assert!(inl_hyper_designated(&inl_hyper_imp(&top, &top).unwrap()));
    }

    #[test]
    fn inl_padic_modus_ponens_shape() {
        let p = 3;
        let k = 6;
        let top = InlTriple::new(
            PadicInt::n_max(p, k),
            PadicInt::zero(p, k),
            PadicInt::zero(p, k),
        );
        let b = InlTriple::new(
            PadicInt::from_u64(p, k, 7),
            PadicInt::from_u64(p, k, 2),
            PadicInt::from_u64(p, k, 5),
        );
        let imp = inl_padic_imp(&top, &b).unwrap();
        // If top -> b is designated then b must be designated; here it isn't.
        assert!(!inl_padic_designated(&imp));
    }

    #[test]
    fn factored_grid_check_matches_direct_evaluation() {
        // Spot check the component factorization against full triples.
        use crate::syntax::parse_schema;
        let schema = parse_schema("(A ->L B) <-> (~L B ->L ~L A)").unwrap();
        let pts = [(0i64, 1i64), (1, 2), (1, 1)];
        for &(tn, td) in &pts {
            for &(fnum, fden) in &pts {
                for &(t2n, t2d) in &pts {
                    for &(f2n, f2d) in &pts {
                        let a = hyper_triple((tn, td), (0, 1), (fnum, fden));
                        let b = hyper_triple((t2n, t2d), (0, 1), (f2n, f2d));
                        let imp = inl_hyper_imp(&a, &b).unwrap();
                        let na = inl_hyper_neg(&a).unwrap();
                        let nb = inl_hyper_neg(&b).unwrap();
                        let contra = inl_hyper_imp(&nb, &na).unwrap();
                        let fwd = inl_hyper_imp(&imp, &contra).unwrap();
                        let bwd = inl_hyper_imp(&contra, &imp).unwrap();
                        let full = inl_hyper_and(&fwd, &bwd).unwrap();

                        let env = |name: &str| -> (Rat64, Rat64) {
                            match name {
                                "A" => (Rat64::new(tn, td), Rat64::new(fnum, fden)),
                                "B" => (Rat64::new(t2n, t2d), Rat64::new(f2n, f2d)),
                                _ => unreachable!(),
                            }
                        };
                        let (pt, pf) = eval_pair(&schema, &env).unwrap();
                        let want_t = hyper_std(*pt.numer(), *pt.denom());
                        let want_f = hyper_std(*pf.numer(), *pf.denom());
                        assert_eq!(full.t, want_t);
                        assert_eq!(full.f, want_f);
                    }
                }
            }
        }
    }
}
