//! Algebraic law checks on exact rational grids: t-norm axioms,
//! residuation, the BL identities, the shift homomorphism onto the
//! `[-1,0]` presentation, and designation of axiom schemata.
//!
//! These checks run on `Ratio<i64>` closures rather than through the
//! generic evaluator, which keeps them fast and independent of the
//! evaluation path they corroborate. Grid verdicts are soundness
//! evidence, never validity decisions.

use num::rational::Ratio;
use num::{One, Zero};

use crate::syntax::{Connective, Schema};

pub type Rat64 = Ratio<i64>;

pub fn grid64(den: i64) -> Vec<Rat64> {
    (0..=den).map(|k| Rat64::new(k, den)).collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TnormLogic {
    Luk,
    Godel,
    Product,
}

impl TnormLogic {
    pub fn parse(s: &str) -> Option<TnormLogic> {
        match s {
            "luk-inf" | "luk" => Some(TnormLogic::Luk),
            "godel" => Some(TnormLogic::Godel),
            "product" => Some(TnormLogic::Product),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TnormLogic::Luk => "luk-inf",
            TnormLogic::Godel => "godel",
            TnormLogic::Product => "product",
        }
    }
}

pub fn tnorm(logic: TnormLogic, x: Rat64, y: Rat64) -> Rat64 {
    match logic {
        TnormLogic::Luk => (x + y - Rat64::one()).max(Rat64::zero()),
        TnormLogic::Godel => x.min(y),
        TnormLogic::Product => x * y,
    }
}

pub fn residuum(logic: TnormLogic, x: Rat64, y: Rat64) -> Rat64 {
    if x <= y {
        return Rat64::one();
    }
    match logic {
        TnormLogic::Luk => Rat64::one() - x + y,
        TnormLogic::Godel => y,
        TnormLogic::Product => y / x,
    }
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub grid_den: i64,
    pub checked_triples: usize,
    /// `(law, witness)` for every law falsified on the grid.
    pub failures: Vec<(String, String)>,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the t-norm axioms, the residuation equivalence, and the BL
/// identities on all grid triples.
pub fn tnorm_laws(logic: TnormLogic, den: i64) -> LawReport {
    let grid = grid64(den);
    let mut report = LawReport {
        grid_den: den,
        ..LawReport::default()
    };
    let mut fail = |law: &str, witness: String| {
        report.failures.push((law.to_owned(), witness));
    };

    for &x in &grid {
        if tnorm(logic, Rat64::one(), x) != x {
            fail("unit", format!("1 * {x}"));
        }
        if !tnorm(logic, Rat64::zero(), x).is_zero() {
            fail("zero", format!("0 * {x}"));
        }
        for &y in &grid {
            if tnorm(logic, x, y) != tnorm(logic, y, x) {
                fail("commutativity", format!("x={x} y={y}"));
            }
            // BL: x ^ y = x * (x => y).
            if x.min(y) != tnorm(logic, x, residuum(logic, x, y)) {
                fail("divisibility", format!("x={x} y={y}"));
            }
            // Prelinearity: (x => y) v (y => x) = 1.
            if residuum(logic, x, y).max(residuum(logic, y, x)) != Rat64::one() {
                fail("prelinearity", format!("x={x} y={y}"));
            }
            for &z in &grid {
                report.checked_triples += 1;
                if tnorm(logic, tnorm(logic, x, y), z) != tnorm(logic, x, tnorm(logic, y, z)) {
                    fail("associativity", format!("x={x} y={y} z={z}"));
                }
                if x <= y && tnorm(logic, x, z) > tnorm(logic, y, z) {
                    fail("monotonicity", format!("x={x} y={y} z={z}"));
                }
                // Residuation: z <= (x => y) iff x * z <= y.
                let lhs = z <= residuum(logic, x, y);
                let rhs = tnorm(logic, x, z) <= y;
                if lhs != rhs {
                    fail("residuation", format!("x={x} y={y} z={z}"));
                }
            }
        }
    }
    report
}

/// Scalar evaluation of a schema over `[0,1]` with every connective tag
/// given its unit-interval reading. Metavariables and object variables
/// are both looked up in `env`.
pub fn scalar_eval(schema: &Schema, env: &dyn Fn(&str) -> Rat64) -> Result<Rat64, String> {
    use Connective as C;
    let one = Rat64::one;
    let zero = Rat64::zero;
    Ok(match schema {
        Schema::MetaVar(v) | Schema::Var(v) => env(v),
        Schema::Falsum => zero(),
        Schema::Verum => one(),
        Schema::GradedConst(_) => {
            return Err("graded constants have no unit-interval reading".into())
        }
        Schema::Apply(conn, args) => {
            let a = scalar_eval(&args[0], env)?;
            let b = if args.len() > 1 {
                scalar_eval(&args[1], env)?
            } else {
                zero()
            };
            match conn {
                C::NegL => one() - a,
                C::ImpL => (one() - a + b).min(one()),
                C::ConjL => (a + b - one()).max(zero()),
                C::Oplus => (a + b).min(one()),
                C::Ominus => (a - b).max(zero()),
                C::Delta => {
                    if a.is_one() {
                        one()
                    } else {
                        zero()
                    }
                }
                C::NegG | C::NegPi => {
                    if a.is_zero() {
                        one()
                    } else {
                        zero()
                    }
                }
                C::ImpG => {
                    if a <= b {
                        one()
                    } else {
                        b
                    }
                }
                C::ImpPi => {
                    if a <= b {
                        one()
                    } else {
                        b / a
                    }
                }
                C::ConjPi => a * b,
                C::Meet => a.min(b),
                C::Join => a.max(b),
                C::Iff => return Err("iff has no fixed unit-interval reading here".into()),
                C::NegPost => return Err("Post negation has no unit-interval reading".into()),
            }
        }
    })
}

/// Evaluates a schema on all grid valuations of its metavariables and
/// returns the first non-designated point, if any.
pub fn axiom_designated_on_grid(schema: &Schema, den: i64) -> Result<Option<String>, String> {
    let vars: Vec<String> = schema.metavars().into_iter().collect();
    let grid = grid64(den);
    let mut idx = vec![0usize; vars.len()];
    loop {
        let env = |name: &str| -> Rat64 {
            match vars.iter().position(|v| v == name) {
                Some(k) => grid[idx[k]],
                None => Rat64::zero(),
            }
        };
        let value = scalar_eval(schema, &env)?;
        if !value.is_one() {
            let assign: Vec<String> = vars
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{v}={}", grid[idx[k]]))
                .collect();
            return Ok(Some(format!(
                "value {value} at {}",
                assign.join(", ")
            )));
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < grid.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// The shift `s(t) = t - 1` intertwines the `[0,1]` Lukasiewicz ops with
/// their `[-1,0]` forms `min(0, y - x)` and `max(-1, x + y)`. Returns the
/// first grid pair where it fails (expected: none).
pub fn shift_homomorphism_witness(den: i64) -> Option<String> {
    let grid = grid64(den);
    let one = Rat64::one();
    let shift = |t: Rat64| t - one;
    for &x in &grid {
        for &y in &grid {
            let imp = (one - x + y).min(one);
            let shifted_imp = (shift(y) - shift(x)).min(Rat64::zero());
            if shift(imp) != shifted_imp {
                return Some(format!("imp at x={x} y={y}"));
            }
            let conj = (x + y - one).max(Rat64::zero());
            let shifted_conj = (shift(x) + shift(y)).max(-one);
            if shift(conj) != shifted_conj {
                return Some(format!("conj at x={x} y={y}"));
            }
        }
    }
    // The designated value 1 must shift onto the designated value 0.
    if !shift(one).is_zero() {
        return Some("designated value does not map to 0".into());
    }
    None
}
