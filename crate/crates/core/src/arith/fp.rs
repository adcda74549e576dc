use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{ArithError, Polynomial};

/// Cap on the number of primes tried when looking for usable reductions.
pub const PRIME_SEARCH_LIMIT: usize = 200;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&n| is_prime(n)).take(count).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = num_integer::Integer::extended_gcd(&(a as i64), &(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

/// Polynomial over the prime field with `prime` elements, ascending coefficients.
///
/// Trailing zeros are trimmed; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    prime: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(prime: u64, coeffs: Vec<u64>) -> Result<Self, ArithError> {
        if !is_prime(prime) || prime >= 1 << 31 {
            return Err(ArithError::NotPrime(prime));
        }
        Ok(Self::raw(
            prime,
            coeffs.into_iter().map(|c| c % prime).collect(),
        ))
    }

    fn raw(prime: u64, coeffs: Vec<u64>) -> Self {
        let mut p = FpPoly { prime, coeffs };
        while p.coeffs.last() == Some(&0) {
            p.coeffs.pop();
        }
        p
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn x(prime: u64) -> Self {
        Self::raw(prime, vec![0, 1])
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.prime);
                Self::raw(
                    self.prime,
                    self.coeffs.iter().map(|c| c * inv % self.prime).collect(),
                )
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.prime;
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Self::raw(
            p,
            (0..n)
                .map(|i| (get(&self.coeffs, i) + p - get(&other.coeffs, i)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::raw(self.prime, Vec::new());
        }
        let p = self.prime;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::raw(p, out)
    }

    pub fn derivative(&self) -> Self {
        let p = self.prime;
        Self::raw(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| (i as u64 % p) * c % p)
                .collect(),
        )
    }

    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.prime;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = inv_mod(*divisor.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::raw(p, Vec::new()), self.clone());
        };
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = rem[k + dd] * inv % p;
            if q == 0 {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - q * d % p) % p;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::raw(p, quot), Self::raw(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus` by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::raw(self.prime, vec![1]).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 (mod {})", self.prime)
        } else {
            write!(f, "{} (mod {})", terms.join(" + "), self.prime)
        }
    }
}

/// Multiset of factor degrees (or cycle lengths), sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Coefficientwise reduction of a rational polynomial.
pub fn reduce_mod_p(f: &Polynomial, prime: u64) -> Result<FpPoly, ArithError> {
    if !is_prime(prime) {
        return Err(ArithError::NotPrime(prime));
    }
    let pb = BigInt::from(prime);
    let lc = f.leading().ok_or(ArithError::ZeroPolynomial)?;
    if lc.numer().is_multiple_of(&pb) {
        return Err(ArithError::BadPrime(prime));
    }
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        if c.denom().is_multiple_of(&pb) {
            return Err(ArithError::BadPrime(prime));
        }
        let num = c.numer().mod_floor(&pb).to_u64().unwrap();
        let den = c.denom().mod_floor(&pb).to_u64().unwrap();
        coeffs.push(num * inv_mod(den, prime) % prime);
    }
    FpPoly::new(prime, coeffs)
}

/// Degrees of the irreducible factors of a squarefree polynomial over F_p,
/// by distinct-degree factorization.
pub fn factor_degree_pattern(g: &FpPoly) -> Result<CycleType, ArithError> {
    if g.degree().is_none_or(|d| d == 0) {
        return Ok(CycleType::new(Vec::new()));
    }
    if !g.is_squarefree() {
        return Err(ArithError::NotSquarefree(g.prime));
    }
    let p = g.prime;
    let mut rest = g.monic();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut parts = Vec::new();
    let mut d = 1usize;
    while rest.degree().unwrap() >= 2 * d {
        // h = x^(p^d) mod rest
        h = h.pow_mod(p, &rest);
        let block = rest.gcd(&h.sub(&x));
        let bd = block.degree().unwrap();
        if bd > 0 {
            parts.extend(std::iter::repeat_n(d, bd / d));
            rest = rest.div_rem(&block).0;
            h = h.rem(&rest);
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        parts.push(n);
    }
    debug_assert!(rest.is_one() || rest.degree().unwrap() > 0);
    Ok(CycleType::new(parts))
}

/// Primes among the first [`PRIME_SEARCH_LIMIT`] at which `f` reduces with
/// its degree intact and stays squarefree, with their factor patterns.
pub fn usable_reductions(f: &Polynomial) -> impl Iterator<Item = (u64, CycleType)> + '_ {
    first_primes(PRIME_SEARCH_LIMIT)
        .into_iter()
        .filter_map(move |p| {
            let g = reduce_mod_p(f, p).ok()?;
            let pattern = factor_degree_pattern(&g).ok()?;
            Some((p, pattern))
        })
}
