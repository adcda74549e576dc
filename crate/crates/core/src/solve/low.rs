use num_traits::Zero;

use super::{plus_minus, Method, SolutionSet, SolveError};
use crate::arith::Rational;
use crate::radical::RadicalExpr;

/// Root of `a x + b`.
pub fn solve_linear(a: &Rational, b: &Rational) -> Result<SolutionSet, SolveError> {
    if a.is_zero() {
        return Err(SolveError::ZeroLeadingCoefficient);
    }
    Ok(SolutionSet::new(
        vec![RadicalExpr::constant(-b / a)],
        Method::Linear,
    ))
}

/// Roots of `a x^2 + b x + c` as `-b/(2a) + sqrt(D)` then `-b/(2a) - sqrt(D)`,
/// with `D = (b^2 - 4ac) / (4a^2)` kept under the radical unless it is the
/// square of a rational.
pub fn solve_quadratic(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<SolutionSet, SolveError> {
    if a.is_zero() {
        return Err(SolveError::ZeroLeadingCoefficient);
    }
    let two_a = a + a;
    let h = -b / &two_a;
    let disc = (b * b - a * c * Rational::from_integer(4.into())) / (&two_a * &two_a);
    let roots = plus_minus(RadicalExpr::constant(h), RadicalExpr::constant(disc));
    Ok(SolutionSet::new(roots.to_vec(), Method::Quadratic))
}
