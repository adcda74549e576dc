//! Exact arithmetic over the rationals and over prime fields.

mod depress;
mod fp;
mod irreducible;
mod poly;
mod roots;

use num_bigint::BigInt;
use thiserror::Error;

pub use depress::{
    depress, depress_cubic, depress_quartic, Depressed, DepressedCubic, DepressedQuartic,
};
pub use fp::{
    factor_degree_pattern, first_primes, is_prime, reduce_mod_p, usable_reductions, CycleType,
    FpPoly, PRIME_SEARCH_LIMIT,
};
pub use irreducible::{find_quadratic_factor, is_irreducible_q};
pub use poly::Polynomial;
pub use roots::{is_squarefree, rational_roots, squarefree_decomposition, squarefree_part};

/// Arbitrary-precision fraction, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("the zero polynomial has no such property")]
    ZeroPolynomial,
    #[error("unsupported degree {0:?}")]
    UnsupportedDegree(Option<usize>),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("{0} is not a usable prime modulus")]
    NotPrime(u64),
    #[error("prime {0} divides a denominator or the leading coefficient")]
    BadPrime(u64),
    #[error("reduction modulo {0} is not squarefree")]
    NotSquarefree(u64),
}
