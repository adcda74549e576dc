//! Independent numeric ground truth for the radical solvers.
//!
//! Roots are found by simultaneous iteration directly on the polynomial and
//! never through radical expressions; the two sides meet only in the
//! verifier, which matches evaluated radicals against oracle roots.

mod durand_kerner;
mod verify;

use thiserror::Error;

use crate::arith::{ArithError, Polynomial};
use crate::numeric::{BigComplex, BigFloat};
use crate::radical::{ComplexApprox, EvalError};

pub use durand_kerner::{durand_kerner, MAX_ITERATIONS};
pub use verify::{match_roots, oracle_roots, verify_solution_set, RootPairing, VerificationReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("the oracle needs a polynomial of degree at least 1, got {0:?}")]
    Degree(Option<usize>),
    #[error("the polynomial has repeated roots")]
    NotSquarefree,
    #[error("root iteration did not converge within the iteration cap")]
    NoConvergence { best: Vec<ComplexApprox> },
    #[error("{roots} candidate roots for a polynomial of degree {degree}")]
    LengthMismatch { roots: usize, degree: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Horner evaluation with coefficients listed from the constant term up.
pub(crate) fn poly_eval_complex(coeffs: &[BigComplex], z: &BigComplex) -> BigComplex {
    coeffs
        .iter()
        .rev()
        .fold(BigComplex::zero(z.prec()), |acc, c| acc.mul(z).add(c))
}

/// `|f(z)|` at the precision of `z`.
pub fn residual(f: &Polynomial, z: &BigComplex) -> BigFloat {
    let prec = z.prec();
    let coeffs: Vec<BigComplex> = f
        .coeffs()
        .iter()
        .map(|c| BigComplex::from_rational(c, prec))
        .collect();
    poly_eval_complex(&coeffs, z).abs()
}
