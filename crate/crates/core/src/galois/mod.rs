//! Permutation groups, solvability, and a solvability-by-radicals verdict
//! for quintics based on the factorization patterns of `f mod p`.
//!
//! By Frobenius (and Chebotarev), the degrees of the irreducible factors of
//! `f mod p` at a prime not dividing the discriminant are the cycle lengths
//! of some element of the Galois group acting on the roots.

mod perm;

use std::fmt;

use thiserror::Error;

use crate::arith::{
    is_irreducible_q, is_squarefree, usable_reductions, ArithError, CycleType, Polynomial,
};

pub use perm::{
    derived_series, derived_subgroup, group_closure, is_solvable, PermGroup, Permutation,
    MAX_DEGREE,
};

pub const DEFAULT_MAX_PRIMES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("group closure needs at least one generator")]
    NoGenerators,
    #[error("generators act on {0} and {1} points")]
    MixedDegrees(usize, usize),
    #[error("permutations on {0} points exceed the supported maximum of 8")]
    DegreeTooLarge(usize),
    #[error("{0:?} is not a permutation")]
    NotABijection(Vec<usize>),
    #[error("expected a polynomial of degree 5, got degree {0:?}")]
    NotQuintic(Option<usize>),
    #[error("the polynomial has repeated roots")]
    NotSquarefree,
    #[error("the polynomial is reducible over the rationals")]
    Reducible,
    #[error("no usable prime among the first 200 primes")]
    NoUsablePrime,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolvabilityVerdict {
    SolvableByRadicals {
        reason: String,
    },
    /// `f mod prime` factors with a pattern no solvable quintic group contains.
    NotSolvableByRadicals {
        prime: u64,
        cycle_type: CycleType,
    },
    /// Every sampled pattern was compatible with a solvable group.
    Undetermined {
        primes_tested: usize,
    },
}

impl fmt::Display for SolvabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvabilityVerdict::SolvableByRadicals { reason } => {
                write!(f, "SOLVABLE BY RADICALS ({reason})")
            }
            SolvabilityVerdict::NotSolvableByRadicals { prime, cycle_type } => write!(
                f,
                "NOT SOLVABLE BY RADICALS (witness: p = {prime}, factor degrees {cycle_type})"
            ),
            SolvabilityVerdict::Undetermined { primes_tested } => write!(
                f,
                "UNDETERMINED after {primes_tested} primes (heuristically solvable)"
            ),
        }
    }
}

/// Cycle types occurring in the solvable transitive groups of degree 5.
///
/// Those are C5, D5 and F20 with C5 < D5 < F20, so it is enough to list the
/// classes of F20 = <x -> x + 1, x -> 2x> acting on Z/5: the identity,
/// translations (one 5-cycle), multiplication by 4 = -1 (two 2-cycles and a
/// fixed point), and multiplication by 2 or 3 (a 4-cycle and a fixed point).
const SOLVABLE_QUINTIC_TYPES: [&[usize]; 4] = [&[1, 1, 1, 1, 1], &[5], &[2, 2, 1], &[4, 1]];

pub fn is_solvable_quintic_type(t: &CycleType) -> bool {
    SOLVABLE_QUINTIC_TYPES.contains(&t.parts())
}

/// Factor-degree patterns of an irreducible quintic at the first
/// `max_primes` usable primes, in increasing prime order.
pub fn frobenius_sample(
    f: &Polynomial,
    max_primes: usize,
) -> Result<Vec<(u64, CycleType)>, GaloisError> {
    if f.degree() != Some(5) {
        return Err(GaloisError::NotQuintic(f.degree()));
    }
    if !is_irreducible_q(f)? {
        return Err(GaloisError::Reducible);
    }
    let sample: Vec<(u64, CycleType)> = usable_reductions(f).take(max_primes).collect();
    if sample.is_empty() {
        return Err(GaloisError::NoUsablePrime);
    }
    Ok(sample)
}

/// Decides solvability by radicals of a squarefree quintic where the
/// evidence allows it.
///
/// A reducible quintic splits into factors of degree at most four, each
/// solvable by the closed-form methods. For an irreducible one, a factor
/// pattern outside the solvable table shows that the Galois group contains
/// an element no solvable transitive subgroup of S5 has, so the group is A5
/// or S5. If no sampled prime gives such a pattern the answer stays open.
pub fn quintic_verdict(
    f: &Polynomial,
    max_primes: usize,
) -> Result<SolvabilityVerdict, GaloisError> {
    if f.degree() != Some(5) {
        return Err(GaloisError::NotQuintic(f.degree()));
    }
    if !is_squarefree(f) {
        return Err(GaloisError::NotSquarefree);
    }
    if !is_irreducible_q(f)? {
        return Ok(SolvabilityVerdict::SolvableByRadicals {
            reason: "factors have degree ≤ 4".to_string(),
        });
    }
    let sample = frobenius_sample(f, max_primes)?;
    if let Some((prime, cycle_type)) = sample.iter().find(|(_, t)| !is_solvable_quintic_type(t)) {
        return Ok(SolvabilityVerdict::NotSolvableByRadicals {
            prime: *prime,
            cycle_type: cycle_type.clone(),
        });
    }
    Ok(SolvabilityVerdict::Undetermined {
        primes_tested: sample.len(),
    })
}
