use super::{durand_kerner, residual, OracleError};
use crate::arith::{squarefree_decomposition, Polynomial};
use crate::numeric::BigFloat;
use crate::radical::{eval_numeric, ComplexApprox, RadicalExpr};

/// One edge of the matching between candidate roots and oracle roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootPairing {
    pub radical: usize,
    pub oracle: usize,
    pub distance: BigFloat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// Largest `|f(rho)|` over the evaluated candidate roots.
    pub max_residual: BigFloat,
    pub pairing: Vec<RootPairing>,
    /// Every pair lies within the tolerance plus both error radii.
    pub all_matched: bool,
    pub precision_bits: u32,
}

/// Oracle roots of any nonzero `f`, each repeated by its multiplicity.
///
/// The polynomial is split into squarefree factors first so the iteration
/// only ever sees simple roots.
pub fn oracle_roots(
    f: &Polynomial,
    precision_bits: u32,
) -> Result<Vec<ComplexApprox>, OracleError> {
    let mut out = Vec::new();
    for (i, factor) in squarefree_decomposition(f)?.iter().enumerate() {
        if factor.degree().is_some_and(|d| d > 0) {
            let roots = durand_kerner(factor, precision_bits)?;
            for _ in 0..=i {
                out.extend(roots.iter().cloned());
            }
        }
    }
    Ok(out)
}

/// Greedy minimum-distance perfect matching between two equally long lists:
/// repeatedly pairs the closest remaining `(a, b)`.
///
/// The flag is true when every pair is within `tolerance` plus the two
/// error radii. Pairings are returned ordered by index into `a`.
pub fn match_roots(
    a: &[ComplexApprox],
    b: &[ComplexApprox],
    tolerance: &BigFloat,
) -> (Vec<RootPairing>, bool) {
    let mut edges: Vec<(BigFloat, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            edges.push((x.distance(&y.value()).with_prec(64), i, j));
        }
    }
    edges.sort_by(|e1, e2| {
        e1.0.partial_cmp(&e2.0)
            .unwrap()
            .then(e1.1.cmp(&e2.1))
            .then(e1.2.cmp(&e2.2))
    });
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut pairing = Vec::new();
    for (d, i, j) in edges {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            pairing.push(RootPairing {
                radical: i,
                oracle: j,
                distance: d,
            });
        }
    }
    pairing.sort_by_key(|p| p.radical);
    let all = a.len() == b.len()
        && pairing.iter().all(|p| {
            let slack = tolerance
                .add(&a[p.radical].error_radius)
                .add(&b[p.oracle].error_radius);
            p.distance <= slack
        });
    (pairing, all)
}

/// Evaluates every candidate root, measures its residual in `f`, and
/// matches the values against the oracle roots of `f`.
pub fn verify_solution_set(
    roots: &[RadicalExpr],
    f: &Polynomial,
    precision_bits: u32,
    tolerance: &BigFloat,
) -> Result<VerificationReport, OracleError> {
    let degree = match f.degree() {
        Some(d) if d >= 1 => d,
        d => return Err(OracleError::Degree(d)),
    };
    if roots.len() != degree {
        return Err(OracleError::LengthMismatch {
            roots: roots.len(),
            degree,
        });
    }
    let values = roots
        .iter()
        .map(|r| eval_numeric(r, precision_bits))
        .collect::<Result<Vec<_>, _>>()?;
    let max_residual = values
        .iter()
        .map(|v| residual(f, &v.value()).with_prec(64))
        .fold(BigFloat::zero(64), |m, r| if r > m { r } else { m });
    let reference = oracle_roots(f, precision_bits)?;
    let (pairing, all_matched) = match_roots(&values, &reference, tolerance);
    Ok(VerificationReport {
        max_residual,
        pairing,
        all_matched,
        precision_bits,
    })
}
