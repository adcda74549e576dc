use num_traits::{Signed, ToPrimitive};

use super::{poly_eval_complex, OracleError};
use crate::arith::{is_squarefree, Polynomial, Rational};
use crate::numeric::{BigComplex, BigFloat};
use crate::radical::ComplexApprox;

pub const MAX_ITERATIONS: usize = 10_000;

const ANGLE_OFFSET: f64 = 0.4;
const SAFETY: i64 = 3; // error radius = 2^3 * final correction
const COARSE_PREC: u32 = 64;
const COARSE_TARGET: i64 = 40;

/// All complex roots of a squarefree `f` by Weierstrass (Durand-Kerner)
/// iteration.
///
/// The iteration starts on the circle of radius `1 + max |c_i / c_n|` at
/// angles `2 pi k / n + 0.4`, first at 64 bits until corrections fall below
/// `2^-40`, then at `2 * precision_bits + 16` bits until every correction is
/// below `2^-precision_bits` relative to its root. Each root carries eight
/// times its last correction as error radius.
pub fn durand_kerner(
    f: &Polynomial,
    precision_bits: u32,
) -> Result<Vec<ComplexApprox>, OracleError> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        d => return Err(OracleError::Degree(d)),
    };
    if !is_squarefree(f) {
        return Err(OracleError::NotSquarefree);
    }
    let f = f.monic();
    let work = 2 * precision_bits + 16;
    if n == 1 {
        let z = BigComplex::from_rational(&-f.coeff(0), work);
        return Ok(vec![approx(z, floor_radius(None, work))]);
    }

    let mut z = initial_points(&f, n, COARSE_PREC);
    let mut iterations = 0;
    let coarse = iterate(&f, &mut z, COARSE_PREC, COARSE_TARGET, &mut iterations);
    z = z.iter().map(|w| w.with_prec(work)).collect();
    let fine = iterate(&f, &mut z, work, precision_bits as i64, &mut iterations);
    let corrections = match (coarse, fine) {
        (Some(_), Some(c)) => c,
        _ => {
            let best = z
                .into_iter()
                .map(|w| approx(w, BigFloat::from_f64(f64::INFINITY, 64)))
                .collect();
            return Err(OracleError::NoConvergence { best });
        }
    };
    Ok(z.into_iter()
        .zip(corrections)
        .map(|(w, c)| {
            let floor = floor_radius(w.top(), work);
            let radius = c.mul_pow2(SAFETY).add(&floor).with_prec(64);
            approx(w, radius)
        })
        .collect())
}

fn approx(z: BigComplex, error_radius: BigFloat) -> ComplexApprox {
    ComplexApprox {
        re: z.re,
        im: z.im,
        error_radius,
    }
}

/// Rounding floor for a value of magnitude below `2^top` at `prec` bits.
fn floor_radius(top: Option<i64>, prec: u32) -> BigFloat {
    BigFloat::one(64).mul_pow2(top.unwrap_or(0).max(0) - prec as i64 + 8)
}

fn initial_points(f: &Polynomial, n: usize, prec: u32) -> Vec<BigComplex> {
    let bound = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(|| Rational::from_integer(0.into()));
    let radius = 1.0 + bound.to_f64().unwrap_or(f64::MAX).min(1e300);
    (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + ANGLE_OFFSET;
            BigComplex::from_f64(radius * angle.cos(), radius * angle.sin(), prec)
        })
        .collect()
}

/// Runs sweeps until every correction is below `2^-target` relative to
/// `max(1, |z|)`; returns the last corrections, or `None` at the iteration cap.
fn iterate(
    f: &Polynomial,
    z: &mut [BigComplex],
    prec: u32,
    target: i64,
    iterations: &mut usize,
) -> Option<Vec<BigFloat>> {
    let coeffs: Vec<BigComplex> = f
        .coeffs()
        .iter()
        .map(|c| BigComplex::from_rational(c, prec))
        .collect();
    while *iterations < MAX_ITERATIONS {
        *iterations += 1;
        let mut corrections = Vec::with_capacity(z.len());
        let mut done = true;
        for k in 0..z.len() {
            let num = poly_eval_complex(&coeffs, &z[k]);
            let mut den = BigComplex::one(prec);
            for j in 0..z.len() {
                if j != k {
                    den = den.mul(&z[k].sub(&z[j]));
                }
            }
            if den.is_zero() {
                // Coincident iterates: nudge apart and keep going.
                z[k] = z[k].add(&BigComplex::from_f64(1e-3, 1e-3, prec));
                corrections.push(BigFloat::one(64));
                done = false;
                continue;
            }
            let delta = num.div(&den);
            z[k] = z[k].sub(&delta);
            let scale = z[k].top().unwrap_or(0).max(0);
            if delta.top().is_some_and(|d| d > scale - target) {
                done = false;
            }
            corrections.push(delta.abs().with_prec(64));
        }
        if done {
            return Some(corrections);
        }
    }
    None
}
