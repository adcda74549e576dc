use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ArithError, Polynomial, Rational};

/// `(f / gcd(f, f'), gcd(f, f'))`, both monic.
pub fn squarefree_part(f: &Polynomial) -> Result<(Polynomial, Polynomial), ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let g = f.gcd(&f.derivative());
    let g = if g.is_zero() { Polynomial::one() } else { g };
    let sqf = f.div_exact(&g)?.monic();
    Ok((sqf, g))
}

/// Yun's algorithm: monic squarefree `a_1, a_2, ...` with `f = lc * prod a_i^i`.
///
/// Entry `i - 1` holds `a_i`; trailing trivial factors are dropped.
pub fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<Polynomial>, ArithError> {
    if f.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let f = f.monic();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    if a.is_zero() {
        a = Polynomial::one();
    }
    let mut b = f.div_exact(&a)?;
    let mut c = df.div_exact(&a)?;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    while b.degree().is_some_and(|n| n > 0) {
        let ai = b.gcd(&d);
        b = b.div_exact(&ai)?;
        c = d.div_exact(&ai)?;
        d = c.sub(&b.derivative());
        out.push(ai);
    }
    while out.last().is_some_and(|p| p.degree() == Some(0)) {
        out.pop();
    }
    Ok(out)
}

pub fn is_squarefree(f: &Polynomial) -> bool {
    !f.is_zero() && f.gcd(&f.derivative()).degree().is_none_or(|d| d == 0)
}

/// Positive divisors of `n != 0`, ascending, by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    if let Some(small) = n.to_u64() {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                lo.push(BigInt::from(d));
                if d * d != small {
                    hi.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        lo.extend(hi.into_iter().rev());
        return lo;
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        let (q, r) = n.div_rem(&d);
        if r.is_zero() {
            if q != d {
                hi.push(q);
            }
            lo.push(d.clone());
        }
        d += 1;
    }
    lo.extend(hi.into_iter().rev());
    lo
}

/// Distinct rational roots in ascending order, via the rational root theorem.
pub fn rational_roots(f: &Polynomial) -> Vec<Rational> {
    if f.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let ints = f.to_primitive_integers();
    let mut found = BTreeSet::new();
    // Strip factors of x so the constant term is nonzero.
    let first = ints.iter().position(|c| !c.is_zero()).unwrap();
    if first > 0 {
        found.insert(Rational::zero());
    }
    let ints = &ints[first..];
    if ints.len() > 1 {
        let g = Polynomial::new(
            ints.iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let lead = divisors(ints.last().unwrap());
        let constant = divisors(&ints[0]);
        for den in &lead {
            for num in &constant {
                if !num.gcd(den).is_one() {
                    continue;
                }
                for cand in [
                    Rational::new(num.clone(), den.clone()),
                    Rational::new(-num, den.clone()),
                ] {
                    if g.eval(&cand).is_zero() {
                        found.insert(cand);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn squarefree_examples() {
        let f = Polynomial::from_ints(&[2, -3, 0, 1]); // (x-1)^2 (x+2)
        let (s, r) = squarefree_part(&f).unwrap();
        assert_eq!(s, Polynomial::from_ints(&[-2, 1, 1]));
        assert_eq!(r, Polynomial::from_ints(&[-1, 1]));

        let g = Polynomial::from_ints(&[6, -5, 1]).scale(&rat(3, 1));
        let (s, r) = squarefree_part(&g).unwrap();
        assert_eq!(s, g.monic());
        assert_eq!(r, Polynomial::one());

        let h = Polynomial::from_ints(&[1, 0, 2, 0, 1]); // (x^2+1)^2
        let (s, r) = squarefree_part(&h).unwrap();
        assert_eq!(s, Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(r, Polynomial::from_ints(&[1, 0, 1]));

        assert_eq!(
            squarefree_part(&Polynomial::zero()),
            Err(ArithError::ZeroPolynomial)
        );
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = Polynomial::from_ints(&[-1, 1])
            .pow(3)
            .mul(&Polynomial::from_ints(&[2, 1]).pow(2))
            .mul(&Polynomial::from_ints(&[1, 0, 1]));
        let parts = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            parts,
            vec![
                Polynomial::from_ints(&[1, 0, 1]),
                Polynomial::from_ints(&[2, 1]),
                Polynomial::from_ints(&[-1, 1]),
            ]
        );
    }

    #[test]
    fn rational_root_examples() {
        assert!(
            rational_roots(&Polynomial::from_ints(&[-9999, -400, -2, 0, 1])).contains(&rat(11, 1))
        );
        assert!(rational_roots(&Polynomial::from_ints(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&Polynomial::from_ints(&[2, -4, 0, 0, 0, 1])).is_empty());
        assert_eq!(
            rational_roots(
                &Polynomial::from_ints(&[0, 1, -5, 6]).mul(&Polynomial::from_ints(&[1, 2]))
            ),
            vec![rat(-1, 2), rat(0, 1), rat(1, 3), rat(1, 2)]
        );
    }

    #[test]
    fn divisor_lists() {
        let ds: Vec<i64> = divisors(&BigInt::from(-36))
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }
}
