//! Closed-form radical solutions for degrees one through four.
//!
//! Every solver returns roots of the polynomial in its original variable.
//! Solvers taking a depressed form undo the shift stored in it.

mod cubic;
mod low;
mod quartic;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{depress_quartic, squarefree_part, ArithError, Polynomial, Rational};
use crate::radical::{eval_numeric, simplify, EvalError, RadicalExpr};

pub use cubic::{cardano_depressed, cubic_casus_flag, solve_cubic};
pub use low::{solve_linear, solve_quadratic};
pub use quartic::{
    classify_quartic, euler_resolvent, ferrari_resolvent, ferrari_resolvent_from_square,
    solve_biquadratic, solve_quartic_euler, solve_quartic_ferrari,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Linear,
    Quadratic,
    Cardano,
    Ferrari,
    Euler,
    Biquadratic,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Linear => "linear",
            Method::Quadratic => "quadratic",
            Method::Cardano => "cardano",
            Method::Ferrari => "ferrari",
            Method::Euler => "euler",
            Method::Biquadratic => "biquadratic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Reality pattern of the roots of a real quartic without repeated roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootClass {
    FourReal,
    TwoRealTwoComplex,
    TwoConjugatePairs,
}

impl RootClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RootClass::FourReal => "four_real",
            RootClass::TwoRealTwoComplex => "two_real_two_complex",
            RootClass::TwoConjugatePairs => "two_conjugate_pairs",
        }
    }

    pub fn real_roots(self) -> usize {
        match self {
            RootClass::FourReal => 4,
            RootClass::TwoRealTwoComplex => 2,
            RootClass::TwoConjugatePairs => 0,
        }
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    /// One entry per root, repeated according to multiplicity.
    pub roots: Vec<RadicalExpr>,
    pub method: Method,
    /// Set only by the cubic formula when the radicals pass through complex values.
    pub casus_irreducibilis: bool,
    pub classification: Option<RootClass>,
}

impl SolutionSet {
    fn new(roots: Vec<RadicalExpr>, method: Method) -> Self {
        SolutionSet {
            roots,
            method,
            casus_irreducibilis: false,
            classification: None,
        }
    }
}

/// Which quartic procedure [`solve_any`] should use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodPreference {
    Ferrari,
    Euler,
    /// Euler when the depressed quartic has a linear term, biquadratic otherwise.
    #[default]
    Auto,
}

impl FromStr for MethodPreference {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ferrari" => Ok(MethodPreference::Ferrari),
            "euler" => Ok(MethodPreference::Euler),
            "auto" => Ok(MethodPreference::Auto),
            other => Err(format!(
                "unknown method '{other}' (expected ferrari, euler or auto)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("degree {} is outside the supported range 1 to 4", fmt_degree(.0))]
    UnsupportedDegree(Option<usize>),
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("expected a monic quartic without cubic term")]
    NotDepressedQuartic,
    #[error("the depressed quartic has no linear term; solve it as a biquadratic")]
    ZeroLinearTerm,
    #[error("the depressed quartic has a linear term and is not biquadratic")]
    NotBiquadratic,
    #[error("the polynomial has repeated roots")]
    MultipleRoots,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

fn fmt_degree(d: &Option<usize>) -> String {
    match d {
        Some(n) => n.to_string(),
        None => "-inf".to_string(),
    }
}

/// Solves `f` of degree 1 to 4 by radicals.
///
/// Repeated roots are split off first: the squarefree part is solved by the
/// formula for its degree and the repeated factor recursively, and the two
/// root lists are concatenated. Method and flags describe the squarefree part.
pub fn solve_any(f: &Polynomial, preference: MethodPreference) -> Result<SolutionSet, SolveError> {
    match f.degree() {
        Some(1..=4) => {}
        d => return Err(SolveError::UnsupportedDegree(d)),
    }
    let (sqf, repeated) = squarefree_part(f)?;
    let mut set = solve_squarefree(&sqf, preference)?;
    if repeated.degree().is_some_and(|d| d > 0) {
        set.roots.extend(solve_any(&repeated, preference)?.roots);
    }
    Ok(set)
}

fn solve_squarefree(
    f: &Polynomial,
    preference: MethodPreference,
) -> Result<SolutionSet, SolveError> {
    let f = f.monic();
    match f.degree() {
        Some(1) => solve_linear(&f.coeff(1), &f.coeff(0)),
        Some(2) => solve_quadratic(&f.coeff(2), &f.coeff(1), &f.coeff(0)),
        Some(3) => solve_cubic(&f),
        Some(4) => {
            let d = depress_quartic(&f)?;
            match preference {
                MethodPreference::Ferrari => solve_quartic_ferrari(&f),
                _ if d.q.is_zero() => solve_biquadratic(&d),
                _ => solve_quartic_euler(&d),
            }
        }
        d => Err(SolveError::UnsupportedDegree(d)),
    }
}

/// `y - shift`, simplified.
fn unshift(y: RadicalExpr, shift: &Rational) -> RadicalExpr {
    simplify(&RadicalExpr::add(vec![
        y,
        RadicalExpr::constant(-shift.clone()),
    ]))
}

/// The two roots `h + sqrt(disc)` and `h - sqrt(disc)`, in that order.
fn plus_minus(h: RadicalExpr, disc: RadicalExpr) -> [RadicalExpr; 2] {
    let s = RadicalExpr::sqrt(disc);
    [
        simplify(&RadicalExpr::add(vec![h.clone(), s.clone()])),
        simplify(&RadicalExpr::add(vec![h, RadicalExpr::neg(s)])),
    ]
}

/// Low-precision value used only for choosing among algebraically valid options.
fn approx(e: &RadicalExpr) -> Result<(f64, f64), SolveError> {
    Ok(eval_numeric(e, 64)?.to_f64())
}
