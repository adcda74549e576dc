use num_traits::{One, Zero};

use super::ExprError;
use crate::arith::Rational;

/// Expression over the rationals closed under field operations, `k`-th roots
/// with an explicit branch, and roots of unity.
///
/// `Root { radicand, index, branch }` denotes the principal `index`-th root of
/// `radicand` times `e^(2 pi i branch / index)`; `RootOfUnity { order, power }`
/// denotes `e^(2 pi i power / order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RadicalExpr {
    Const(Rational),
    RootOfUnity {
        order: u32,
        power: u32,
    },
    Add(Vec<RadicalExpr>),
    Mul(Vec<RadicalExpr>),
    Neg(Box<RadicalExpr>),
    Inv(Box<RadicalExpr>),
    Root {
        radicand: Box<RadicalExpr>,
        index: u32,
        branch: u32,
    },
}

use RadicalExpr::*;

impl RadicalExpr {
    pub fn constant(r: Rational) -> Self {
        Const(r)
    }

    pub fn int(n: i64) -> Self {
        Const(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Const(Rational::zero())
    }

    pub fn one() -> Self {
        Const(Rational::one())
    }

    /// `e^(2 pi i power / order)` with `power` reduced modulo `order`.
    pub fn root_of_unity(order: u32, power: i64) -> Result<Self, ExprError> {
        if order == 0 {
            return Err(ExprError::ZeroOrder);
        }
        Ok(RootOfUnity {
            order,
            power: power.rem_euclid(order as i64) as u32,
        })
    }

    pub fn root(radicand: RadicalExpr, index: u32, branch: u32) -> Result<Self, ExprError> {
        if index < 2 {
            return Err(ExprError::BadIndex(index));
        }
        if branch >= index {
            return Err(ExprError::BadBranch { index, branch });
        }
        Ok(Root {
            radicand: Box::new(radicand),
            index,
            branch,
        })
    }

    /// Principal square root.
    pub fn sqrt(radicand: RadicalExpr) -> Self {
        Root {
            radicand: Box::new(radicand),
            index: 2,
            branch: 0,
        }
    }

    /// Principal `index`-th root; panics if `index < 2`.
    pub fn principal_root(radicand: RadicalExpr, index: u32) -> Self {
        Self::root(radicand, index, 0).expect("root index must be at least 2")
    }

    pub fn inv(e: RadicalExpr) -> Result<Self, ExprError> {
        if matches!(&e, Const(r) if r.is_zero()) {
            return Err(ExprError::DivisionByZero);
        }
        Ok(Inv(Box::new(e)))
    }

    pub fn add(terms: Vec<RadicalExpr>) -> Self {
        Add(terms)
    }

    pub fn mul(factors: Vec<RadicalExpr>) -> Self {
        Mul(factors)
    }

    pub fn neg(e: RadicalExpr) -> Self {
        Neg(Box::new(e))
    }

    pub fn sub(a: RadicalExpr, b: RadicalExpr) -> Self {
        Add(vec![a, Self::neg(b)])
    }

    pub fn div(a: RadicalExpr, b: RadicalExpr) -> Result<Self, ExprError> {
        Ok(Mul(vec![a, Self::inv(b)?]))
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match self {
            Const(r) => Some(r),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        1 + match self {
            Const(_) | RootOfUnity { .. } => 0,
            Add(v) | Mul(v) => v.iter().map(Self::depth).max().unwrap_or(0),
            Neg(x) | Inv(x) => x.depth(),
            Root { radicand, .. } => radicand.depth(),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + match self {
            Const(_) | RootOfUnity { .. } => 0,
            Add(v) | Mul(v) => v.iter().map(Self::node_count).sum(),
            Neg(x) | Inv(x) => x.node_count(),
            Root { radicand, .. } => radicand.node_count(),
        }
    }

    /// Checks the node invariants that the public constructors enforce.
    pub fn validate(&self) -> Result<(), ExprError> {
        match self {
            Const(_) => Ok(()),
            RootOfUnity { order, power } => {
                if *order == 0 {
                    Err(ExprError::ZeroOrder)
                } else if power >= order {
                    Err(ExprError::BadBranch {
                        index: *order,
                        branch: *power,
                    })
                } else {
                    Ok(())
                }
            }
            Add(v) | Mul(v) => v.iter().try_for_each(Self::validate),
            Neg(x) => x.validate(),
            Inv(x) => {
                if matches!(&**x, Const(r) if r.is_zero()) {
                    return Err(ExprError::DivisionByZero);
                }
                x.validate()
            }
            Root {
                radicand,
                index,
                branch,
            } => {
                if *index < 2 {
                    return Err(ExprError::BadIndex(*index));
                }
                if branch >= index {
                    return Err(ExprError::BadBranch {
                        index: *index,
                        branch: *branch,
                    });
                }
                radicand.validate()
            }
        }
    }
}

impl From<Rational> for RadicalExpr {
    fn from(r: Rational) -> Self {
        Const(r)
    }
}
