use num_traits::{One, Zero};

use super::{ArithError, Polynomial, Rational};

/// `y^3 + p y + q` with `x = y - shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedCubic {
    pub p: Rational,
    pub q: Rational,
    pub shift: Rational,
}

/// `y^4 + p y^2 + q y + r` with `x = y - shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedQuartic {
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub shift: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Depressed {
    Cubic(DepressedCubic),
    Quartic(DepressedQuartic),
}

impl DepressedCubic {
    pub fn new(p: Rational, q: Rational) -> Self {
        DepressedCubic {
            p,
            q,
            shift: Rational::zero(),
        }
    }

    /// The polynomial in `y`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            self.q.clone(),
            self.p.clone(),
            Rational::zero(),
            Rational::one(),
        ])
    }

    /// The original monic cubic in `x`.
    pub fn expand(&self) -> Polynomial {
        self.to_polynomial().shift(&self.shift)
    }
}

impl DepressedQuartic {
    pub fn new(p: Rational, q: Rational, r: Rational) -> Self {
        DepressedQuartic {
            p,
            q,
            r,
            shift: Rational::zero(),
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            Rational::zero(),
            Rational::one(),
        ])
    }

    pub fn expand(&self) -> Polynomial {
        self.to_polynomial().shift(&self.shift)
    }
}

impl Depressed {
    pub fn expand(&self) -> Polynomial {
        match self {
            Depressed::Cubic(c) => c.expand(),
            Depressed::Quartic(q) => q.expand(),
        }
    }
}

/// Removes the `x^(n-1)` term of a monic cubic or quartic with `x = y - a/n`.
///
/// For the cubic this gives `p = b - a^2/3` and `q = c - ab/3 + 2a^3/27`.
pub fn depress(f: &Polynomial) -> Result<Depressed, ArithError> {
    let n = match f.degree() {
        Some(n @ (3 | 4)) => n,
        other => return Err(ArithError::UnsupportedDegree(other)),
    };
    if !f.is_monic() {
        return Err(ArithError::NotMonic);
    }
    let shift = f.coeff(n - 1) / Rational::from_integer((n as i64).into());
    let g = f.shift(&-shift.clone());
    debug_assert!(g.coeff(n - 1).is_zero());
    Ok(match n {
        3 => Depressed::Cubic(DepressedCubic {
            p: g.coeff(1),
            q: g.coeff(0),
            shift,
        }),
        _ => Depressed::Quartic(DepressedQuartic {
            p: g.coeff(2),
            q: g.coeff(1),
            r: g.coeff(0),
            shift,
        }),
    })
}

pub fn depress_cubic(f: &Polynomial) -> Result<DepressedCubic, ArithError> {
    match depress(f)? {
        Depressed::Cubic(c) => Ok(c),
        Depressed::Quartic(_) => Err(ArithError::UnsupportedDegree(Some(4))),
    }
}

pub fn depress_quartic(f: &Polynomial) -> Result<DepressedQuartic, ArithError> {
    match depress(f)? {
        Depressed::Quartic(q) => Ok(q),
        Depressed::Cubic(_) => Err(ArithError::UnsupportedDegree(Some(3))),
    }
}
