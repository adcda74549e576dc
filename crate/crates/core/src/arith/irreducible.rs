use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::usable_reductions;
use super::roots::{divisors, is_squarefree, rational_roots};
use super::{ArithError, Polynomial, Rational};

/// Number of usable primes whose factor patterns are consulted before
/// falling back to the exact quadratic-factor search.
const PATTERN_PRIMES: usize = 24;

/// Irreducibility over the rationals for degrees 1 through 5.
///
/// Without a rational root, a reducible quartic or quintic must have an
/// irreducible quadratic factor. A prime whose factor pattern cannot be split
/// into a part of degree 2 and the rest rules that out; otherwise the
/// quadratic factors are searched exactly.
pub fn is_irreducible_q(f: &Polynomial) -> Result<bool, ArithError> {
    let n = match f.degree() {
        Some(n @ 1..=5) => n,
        other => return Err(ArithError::UnsupportedDegree(other)),
    };
    if n == 1 {
        return Ok(true);
    }
    if !is_squarefree(f) {
        return Ok(false);
    }
    if !rational_roots(f).is_empty() {
        return Ok(false);
    }
    if n <= 3 {
        return Ok(true);
    }
    for (_, pattern) in usable_reductions(f).take(PATTERN_PRIMES) {
        if pattern.parts() == [n] || !has_subsum(pattern.parts(), 2) {
            return Ok(true);
        }
    }
    Ok(find_quadratic_factor(f).is_none())
}

fn has_subsum(parts: &[usize], target: usize) -> bool {
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for &p in parts {
        for s in (p..=target).rev() {
            if reachable[s - p] {
                reachable[s] = true;
            }
        }
    }
    reachable[target]
}

/// A primitive integer quadratic `c x^2 + d x + e` dividing `f`, if any.
///
/// Candidates come from `c | lc(f)`, `e | f(0)` and `g(1) | f(1)` (Gauss's
/// lemma), filtered by `g(-1) | f(-1)` and the coefficient bound
/// `2^deg(f) * (1 + max |coeff|)`. Requires `f(0)`, `f(1)`, `f(-1)` nonzero,
/// which holds whenever `f` has no rational roots.
pub fn find_quadratic_factor(f: &Polynomial) -> Option<Polynomial> {
    let ints = f.to_primitive_integers();
    let n = ints.len() - 1;
    let eval = |x: i64| -> BigInt { ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c) };
    let (f0, f1, fm1) = (ints[0].clone(), eval(1), eval(-1));
    if f0.is_zero() || f1.is_zero() || fm1.is_zero() {
        return None;
    }
    let max = ints.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << n) * (BigInt::one() + max);
    let target = Polynomial::new(
        ints.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    );
    let lead = divisors(&ints[n]);
    let consts = divisors(&f0);
    let ones = divisors(&f1);
    for c in &lead {
        for e_abs in &consts {
            for e in [e_abs.clone(), -e_abs] {
                for t_abs in &ones {
                    for t in [t_abs.clone(), -t_abs] {
                        let d = &t - c - &e;
                        if d.abs() > bound {
                            continue;
                        }
                        let g_at_m1 = c - &d + &e;
                        if g_at_m1.is_zero() || !fm1.is_multiple_of(&g_at_m1) {
                            continue;
                        }
                        let g = Polynomial::new(vec![
                            Rational::from_integer(e.clone()),
                            Rational::from_integer(d),
                            Rational::from_integer(c.clone()),
                        ]);
                        if target.div_exact(&g).is_ok() {
                            return Some(g);
                        }
                    }
                }
            }
        }
    }
    None
}
