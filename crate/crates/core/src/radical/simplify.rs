use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RadicalExpr::{self, *};
use crate::arith::Rational;

const MAX_PASSES: usize = 32;

/// Rational-exact cleanup, applied bottom-up until nothing changes.
///
/// Folds constant arithmetic, extracts exact roots of nonnegative rational
/// constants, flattens nested sums and products, drops neutral elements,
/// cancels double negation and inversion, and merges roots of unity. No
/// denesting is attempted.
pub fn simplify(e: &RadicalExpr) -> RadicalExpr {
    let mut cur = pass(e);
    for _ in 0..MAX_PASSES {
        let next = pass(&cur);
        if next == cur {
            break;
        }
        cur = next;
    }
    cur
}

fn pass(e: &RadicalExpr) -> RadicalExpr {
    match e {
        Const(_) => e.clone(),
        RootOfUnity { order, power } => unity(*order as u64, *power as u64),
        Neg(x) => negate(pass(x)),
        Inv(x) => invert(pass(x)),
        Add(items) => add(items.iter().map(pass).collect()),
        Mul(items) => mul(items.iter().map(pass).collect()),
        Root {
            radicand,
            index,
            branch,
        } => root(pass(radicand), *index, *branch),
    }
}

/// Canonical `e^(2 pi i j / k)`: lowest terms, with `1` and `-1` as constants.
fn unity(k: u64, j: u64) -> RadicalExpr {
    let j = j % k;
    if j == 0 {
        return RadicalExpr::one();
    }
    let g = j.gcd(&k);
    let (k, j) = (k / g, j / g);
    if k == 2 {
        return RadicalExpr::int(-1);
    }
    RootOfUnity {
        order: k as u32,
        power: j as u32,
    }
}

fn negate(x: RadicalExpr) -> RadicalExpr {
    match x {
        Const(r) => Const(-r),
        Neg(y) => *y,
        Mul(mut items) => {
            if let Some(Const(c)) = items.first_mut() {
                *c = -c.clone();
                if c.is_one() {
                    items.remove(0);
                }
                return mul_from_parts(items);
            }
            items.insert(0, RadicalExpr::int(-1));
            Mul(items)
        }
        other => Neg(Box::new(other)),
    }
}

fn invert(x: RadicalExpr) -> RadicalExpr {
    match x {
        Const(r) if !r.is_zero() => Const(r.recip()),
        Inv(y) => *y,
        RootOfUnity { order, power } => unity(order as u64, (order - power) as u64),
        other => Inv(Box::new(other)),
    }
}

fn mul_from_parts(mut items: Vec<RadicalExpr>) -> RadicalExpr {
    match items.len() {
        0 => RadicalExpr::one(),
        1 => items.pop().unwrap(),
        _ => Mul(items),
    }
}

fn add(items: Vec<RadicalExpr>) -> RadicalExpr {
    let mut constant = Rational::zero();
    let mut terms = Vec::new();
    let mut stack: Vec<RadicalExpr> = items.into_iter().rev().collect();
    while let Some(t) = stack.pop() {
        match t {
            Const(r) => constant += r,
            Add(inner) => stack.extend(inner.into_iter().rev()),
            other => terms.push(other),
        }
    }
    if !constant.is_zero() {
        terms.push(Const(constant));
    }
    match terms.len() {
        0 => RadicalExpr::zero(),
        1 => terms.pop().unwrap(),
        _ => Add(terms),
    }
}

fn mul(items: Vec<RadicalExpr>) -> RadicalExpr {
    let mut constant = Rational::one();
    // Accumulated root of unity as (order, power).
    let mut unit: (u64, u64) = (1, 0);
    let mut factors = Vec::new();
    let mut stack: Vec<RadicalExpr> = items.into_iter().rev().collect();
    while let Some(f) = stack.pop() {
        match f {
            Const(r) => constant *= r,
            Mul(inner) => stack.extend(inner.into_iter().rev()),
            Neg(inner) => {
                constant = -constant;
                stack.push(*inner);
            }
            RootOfUnity { order, power } => {
                let (k1, j1) = unit;
                let k2 = order as u64;
                let l = k1.lcm(&k2);
                unit = (l, (j1 * (l / k1) + power as u64 * (l / k2)) % l);
            }
            other => factors.push(other),
        }
    }
    if constant.is_zero() {
        return RadicalExpr::zero();
    }
    let mut out = Vec::new();
    match unity(unit.0, unit.1) {
        Const(c) => constant *= c,
        u => out.push(u),
    }
    out.extend(factors);
    if out.len() == 1 && constant == -Rational::one() {
        return Neg(Box::new(out.pop().unwrap()));
    }
    if !constant.is_one() {
        out.insert(0, Const(constant));
    }
    mul_from_parts(out)
}

fn root(x: RadicalExpr, index: u32, branch: u32) -> RadicalExpr {
    if let Const(r) = &x {
        if r.is_zero() {
            return RadicalExpr::zero();
        }
        if r.is_positive() {
            if let Some(s) = exact_root(r, index) {
                return mul(vec![
                    Const(s),
                    RootOfUnity {
                        order: index,
                        power: branch,
                    },
                ]);
            }
        }
    }
    Root {
        radicand: Box::new(x),
        index,
        branch,
    }
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// `s >= 0` with `s^k = r`, when one exists among the rationals.
pub(crate) fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = exact_int_root(r.numer(), k)?;
    let den = exact_int_root(r.denom(), k)?;
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c(n: i64) -> RadicalExpr {
        RadicalExpr::int(n)
    }

    #[test]
    fn perfect_cube() {
        let e = RadicalExpr::principal_root(c(8), 3);
        assert_eq!(simplify(&e), c(2));
        let e = RadicalExpr::sqrt(Const(rat(9, 4)));
        assert_eq!(simplify(&e), Const(rat(3, 2)));
    }

    #[test]
    fn additive_identity() {
        let x = RadicalExpr::sqrt(c(2));
        assert_eq!(simplify(&Add(vec![c(0), x.clone()])), x);
    }

    #[test]
    fn conjugate_cube_roots_of_unity_multiply_to_one() {
        let e = Mul(vec![
            RootOfUnity { order: 3, power: 1 },
            RootOfUnity { order: 3, power: 2 },
        ]);
        assert_eq!(simplify(&e), c(1));
    }

    #[test]
    fn negative_radicands_keep_their_principal_branch() {
        let e = RadicalExpr::principal_root(c(-8), 3);
        assert_eq!(simplify(&e), e);
        let e = RadicalExpr::sqrt(c(-1));
        assert_eq!(simplify(&e), e);
    }

    #[test]
    fn branch_of_a_perfect_power() {
        let e = RadicalExpr::root(c(8), 3, 1).unwrap();
        assert_eq!(
            simplify(&e),
            Mul(vec![c(2), RootOfUnity { order: 3, power: 1 }])
        );
        // -1 is the second square root of 1
        assert_eq!(simplify(&RadicalExpr::root(c(4), 2, 1).unwrap()), c(-2));
    }

    #[test]
    fn folding_and_flattening() {
        let x = RadicalExpr::sqrt(c(3));
        let e = Add(vec![
            c(1),
            Add(vec![x.clone(), c(2)]),
            Neg(Box::new(Neg(Box::new(c(3))))),
        ]);
        assert_eq!(simplify(&e), Add(vec![x.clone(), c(6)]));
        let e = Mul(vec![c(2), Mul(vec![Inv(Box::new(c(4))), x.clone()]), c(1)]);
        assert_eq!(simplify(&e), Mul(vec![Const(rat(1, 2)), x.clone()]));
        assert_eq!(simplify(&Mul(vec![c(0), x.clone()])), c(0));
        assert_eq!(simplify(&Neg(Box::new(Mul(vec![c(-1), x.clone()])))), x);
        assert_eq!(
            simplify(&Mul(vec![c(-1), x.clone()])),
            Neg(Box::new(x.clone()))
        );
        assert_eq!(
            simplify(&RootOfUnity { order: 6, power: 2 }),
            RootOfUnity { order: 3, power: 1 }
        );
        assert_eq!(simplify(&RootOfUnity { order: 4, power: 2 }), c(-1));
        assert_eq!(simplify(&Inv(Box::new(Inv(Box::new(x.clone()))))), x);
    }

    #[test]
    fn exact_roots() {
        assert_eq!(exact_root(&rat(27, 8), 3), Some(rat(3, 2)));
        assert_eq!(exact_root(&rat(2, 1), 2), None);
        assert_eq!(exact_root(&rat(-8, 1), 3), None);
    }
}
