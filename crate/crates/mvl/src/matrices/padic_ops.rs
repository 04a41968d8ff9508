//! Scalar truth functions on `Z_p` truncations.
//!
//! The top truth value is `N_max = -1` (all digits `p - 1`); max and min
//! are digitwise. The Goedel implication is undefined on incomparable
//! pairs, and the Product implication is restricted to operands that
//! denote ordinary naturals, since a general p-adic integer has no
//! integral part.

use thiserror::Error;

use crate::padic::{PadicCmp, PadicError, PadicInt};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PadicOpError {
    #[error(transparent)]
    Arith(#[from] PadicError),
    #[error("Goedel implication undefined on digitwise-incomparable operands")]
    GodelIncomparable,
    #[error("Product implication needs operands denoting ordinary naturals")]
    ProductNotNatural,
}

/// `N_max - x`, the digitwise complement.
pub fn luk_neg(x: &PadicInt) -> PadicInt {
    x.complement()
}

/// `N_max - max(x, y) + y`.
pub fn luk_imp(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    let top = PadicInt::n_max(x.p(), x.precision());
    Ok(top.sub(&x.pmax(y)?)?.add(y)?)
}

/// `max(x, N_max - y) + y - N_max`, i.e. `neg(x -> neg y)`.
pub fn luk_conj(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    let top = PadicInt::n_max(x.p(), x.precision());
    Ok(x.pmax(&y.complement())?.add(y)?.sub(&top)?)
}

/// `neg x -> y`.
pub fn oplus(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    luk_imp(&luk_neg(x), y)
}

/// `x & neg y`.
pub fn ominus(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    luk_conj(x, &luk_neg(y))
}

/// `N_max` where `x <= y` digitwise, `y` where `x > y`; an error on
/// incomparable operands, whose case the defining dichotomy does not
/// cover.
pub fn godel_imp(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    match x.cmp_digitwise(y)? {
        PadicCmp::Le | PadicCmp::Eq => Ok(PadicInt::n_max(x.p(), x.precision())),
        PadicCmp::Ge => Ok(y.clone()),
        PadicCmp::Incomparable => Err(PadicOpError::GodelIncomparable),
    }
}

pub fn godel_neg(x: &PadicInt) -> Result<PadicInt, PadicOpError> {
    godel_imp(x, &PadicInt::zero(x.p(), x.precision()))
}

/// `N_max` where `x <= y`, otherwise the integral part of `y/x`. Both
/// operands must denote ordinary naturals for the division branch.
pub fn product_imp(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    match x.cmp_digitwise(y)? {
        PadicCmp::Le | PadicCmp::Eq => Ok(PadicInt::n_max(x.p(), x.precision())),
        _ => {
            let xv = x.as_natural().ok_or(PadicOpError::ProductNotNatural)?;
            let yv = y.as_natural().ok_or(PadicOpError::ProductNotNatural)?;
            if xv == 0 {
                // x > y >= 0 is impossible for naturals; incomparable pairs
                // with a zero digit elsewhere can still reach this branch.
                return Err(PadicOpError::ProductNotNatural);
            }
            Ok(PadicInt::from_u64(
                x.p(),
                x.precision(),
                (yv / xv) as u64,
            ))
        }
    }
}

/// `N_max` at `0`, else `0`.
pub fn product_neg(x: &PadicInt) -> PadicInt {
    if x.is_zero() {
        PadicInt::n_max(x.p(), x.precision())
    } else {
        PadicInt::zero(x.p(), x.precision())
    }
}

/// `N_max` at `N_max`, else `0`.
pub fn delta(x: &PadicInt) -> PadicInt {
    let top = PadicInt::n_max(x.p(), x.precision());
    if *x == top {
        top
    } else {
        PadicInt::zero(x.p(), x.precision())
    }
}

/// `x & y = x * y`.
pub fn product_conj(x: &PadicInt, y: &PadicInt) -> Result<PadicInt, PadicOpError> {
    Ok(x.mul(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luk_implication_example() {
        // p = 2, K = 3: 3 -> 5 = N_max - max(3,5) + 5 = 5.
        let x = PadicInt::from_u64(2, 3, 3);
        let y = PadicInt::from_u64(2, 3, 5);
        assert_eq!(x.pmax(&y).unwrap(), PadicInt::n_max(2, 3));
        assert_eq!(luk_imp(&x, &y).unwrap(), y);
    }

    #[test]
    fn luk_negation_is_complement() {
        let x = PadicInt::from_u64(2, 4, 5);
        assert_eq!(luk_neg(&x), PadicInt::from_u64(2, 4, 10));
        assert_eq!(luk_neg(&luk_neg(&x)), x);
    }

    #[test]
    fn godel_cases() {
        let x = PadicInt::from_u64(2, 4, 1);
        let y = PadicInt::from_u64(2, 4, 3);
        assert_eq!(godel_imp(&x, &y).unwrap(), PadicInt::n_max(2, 4));
        assert_eq!(godel_imp(&y, &x).unwrap(), x);
        let two = PadicInt::from_u64(2, 4, 2);
        assert!(matches!(
            godel_imp(&x, &two),
            Err(PadicOpError::GodelIncomparable)
        ));
        assert_eq!(godel_neg(&x).unwrap(), PadicInt::zero(2, 4));
        assert_eq!(
            godel_neg(&PadicInt::zero(2, 4)).unwrap(),
            PadicInt::n_max(2, 4)
        );
    }

    #[test]
    fn product_floor_division() {
        let x = PadicInt::from_u64(3, 8, 7);
        let y = PadicInt::from_u64(3, 8, 3);
        // 7 > 3 digitwise? 7 = [1,2,0..], 3 = [0,1,0..] -> Ge.
        assert_eq!(product_imp(&x, &y).unwrap(), PadicInt::zero(3, 8));
        let top = PadicInt::n_max(3, 8);
        assert!(matches!(
            product_imp(&top, &y),
            Err(PadicOpError::ProductNotNatural)
        ));
    }

    #[test]
    fn delta_is_crisp() {
        assert_eq!(
            delta(&PadicInt::n_max(5, 3)),
            PadicInt::n_max(5, 3)
        );
        assert_eq!(delta(&PadicInt::one(5, 3)), PadicInt::zero(5, 3));
    }
}
