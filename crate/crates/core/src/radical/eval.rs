use std::fmt;

use super::{ExprError, RadicalExpr};
use crate::numeric::{BigComplex, BigFloat};

/// Numeric enclosure of a complex value: the true value lies within
/// `error_radius` of `re + i im`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexApprox {
    pub re: BigFloat,
    pub im: BigFloat,
    pub error_radius: BigFloat,
}

impl ComplexApprox {
    pub fn value(&self) -> BigComplex {
        BigComplex::new(self.re.clone(), self.im.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// True when the imaginary part cannot be told apart from zero.
    pub fn is_real(&self) -> bool {
        self.im.abs() <= self.error_radius
    }

    /// Significant decimal digits warranted by the error radius.
    pub fn significant_digits(&self) -> u32 {
        digits_for(&self.error_radius, &self.value())
    }

    /// `|self - other|`, rounded.
    pub fn distance(&self, other: &BigComplex) -> BigFloat {
        self.value().sub(other).abs()
    }
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.significant_digits();
        let re = self.re.to_decimal(digits);
        if self.is_real() {
            return f.write_str(&re);
        }
        let im = self.im.abs().to_decimal(digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        if self.re.abs() <= self.error_radius {
            let sign = if sign == '-' { "-" } else { "" };
            return write!(f, "{sign}{im}i");
        }
        write!(f, "{re} {sign} {im}i")
    }
}

/// Significant digits warranted by an error radius relative to a magnitude.
fn digits_for(radius: &BigFloat, value: &BigComplex) -> u32 {
    let mag = value.top().unwrap_or(0) as f64;
    let err = if radius.is_zero() {
        mag - value.prec() as f64
    } else {
        radius.log2_abs()
    };
    (((mag - err) * std::f64::consts::LOG10_2).floor() as i64).clamp(1, 60) as u32
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("precision must be at least 32 bits, got {0}")]
    PrecisionTooLow(u32),
    #[error("cannot certify a divisor as nonzero")]
    DivisionNearZero,
    #[error("evaluation did not stabilise to {0} bits after repeated precision doubling")]
    NoAgreement(u32),
    #[error("malformed expression: {0}")]
    Invalid(#[from] ExprError),
}

const DOUBLINGS: usize = 4;

/// Evaluates `e` to about `precision_bits` correct bits.
///
/// The tree is evaluated at `4 * precision_bits` and at twice that; the
/// result is accepted once two successive evaluations agree to the
/// requested precision, doubling up to four times.
pub fn eval_numeric(e: &RadicalExpr, precision_bits: u32) -> Result<ComplexApprox, EvalError> {
    if precision_bits < 32 {
        return Err(EvalError::PrecisionTooLow(precision_bits));
    }
    e.validate()?;
    let mut work = 4 * precision_bits;
    let mut prev = eval_at(e, work);
    for _ in 0..DOUBLINGS {
        work *= 2;
        let cur = eval_at(e, work);
        if let (Ok(a), Ok(b)) = (&prev, &cur) {
            let diff = a.sub(b).abs();
            let scale = b.abs().top().unwrap_or(0).max(0);
            let tol = BigFloat::one(64).mul_pow2(scale - precision_bits as i64);
            if diff <= tol {
                let floor = BigFloat::one(64).mul_pow2(scale - work as i64 + 8);
                return Ok(ComplexApprox {
                    re: b.re.clone(),
                    im: b.im.clone(),
                    error_radius: diff.mul_pow2(1).add(&floor).with_prec(64),
                });
            }
        }
        prev = cur;
    }
    match prev {
        Err(err) => Err(err),
        Ok(_) => Err(EvalError::NoAgreement(precision_bits)),
    }
}

/// One evaluation at a fixed working precision.
pub(crate) fn eval_at(e: &RadicalExpr, prec: u32) -> Result<BigComplex, EvalError> {
    use RadicalExpr::*;
    Ok(match e {
        Const(r) => BigComplex::from_rational(r, prec),
        RootOfUnity { order, power } => BigComplex::root_of_unity(*order, *power as i64, prec),
        Add(items) => items.iter().try_fold(BigComplex::zero(prec), |acc, t| {
            Ok::<_, EvalError>(acc.add(&eval_at(t, prec)?))
        })?,
        Mul(items) => items.iter().try_fold(BigComplex::one(prec), |acc, t| {
            Ok::<_, EvalError>(acc.mul(&eval_at(t, prec)?))
        })?,
        Neg(x) => eval_at(x, prec)?.neg(),
        Inv(x) => {
            let v = eval_at(x, prec)?;
            // Anything below half the working precision is indistinguishable
            // from accumulated rounding of a zero.
            match v.top() {
                Some(t) if t > -(prec as i64) / 2 => v.inv(),
                _ => return Err(EvalError::DivisionNearZero),
            }
        }
        Root {
            radicand,
            index,
            branch,
        } => {
            let z = snap_to_real_axis(eval_at(radicand, prec)?);
            let principal = z.principal_root(*index);
            if *branch == 0 {
                principal
            } else {
                principal.mul(&BigComplex::root_of_unity(*index, *branch as i64, prec))
            }
        }
    })
}

/// Drops an imaginary part at rounding-noise level so that radicands which
/// are mathematically real pick the same branch at every precision.
fn snap_to_real_axis(z: BigComplex) -> BigComplex {
    if z.im.is_zero() {
        return z;
    }
    let prec = z.prec() as i64;
    match (z.re.top(), z.im.top()) {
        (Some(re), Some(im)) if im < re - prec + 32 => BigComplex::real(z.re),
        _ => z,
    }
}
