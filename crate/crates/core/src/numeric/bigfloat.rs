//! Binary floating point with an arbitrary-size mantissa.
//!
//! A value is `mant * 2^exp` with `|mant| < 2^prec`. Every operation truncates
//! toward zero at the larger precision of its operands, so a single operation
//! is off by at most one unit in the last place.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn truncate(mant: BigInt, exp: i64, prec: u32) -> BigFloat {
    if mant.is_zero() {
        return BigFloat::zero(prec);
    }
    let bits = mant.bits();
    if bits <= prec as u64 {
        return BigFloat { mant, exp, prec };
    }
    let shift = bits - prec as u64;
    let (sign, mag) = mant.into_parts();
    BigFloat {
        mant: BigInt::from_biguint(sign, mag >> shift),
        exp: exp + shift as i64,
        prec,
    }
}

fn pow10(k: u32) -> BigUint {
    num_traits::pow(BigUint::from(10u32), k as usize)
}

/// `x * 2^e` without intermediate overflow.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(e as i32)
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_bigint(BigInt::one(), prec)
    }

    pub fn from_bigint(n: BigInt, prec: u32) -> Self {
        truncate(n, 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_bigint(BigInt::from(n), prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let num = Self::from_bigint(r.numer().clone(), prec);
        if r.denom().is_one() {
            return num;
        }
        let den = Self::from_bigint(r.denom().clone(), prec);
        num.div(&den)
    }

    /// Exact conversion of a finite `f64`, then truncated to `prec`.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero(prec);
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        truncate(BigInt::from(m) * sign, e, prec)
    }

    /// `self * 2^k`, exact.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            mant: self.mant.clone(),
            exp: self.exp + k,
            prec: self.prec,
        }
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        truncate(self.mant.clone(), self.exp, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Smallest `t` with `|self| < 2^t`; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mant.bits() as i64 + self.exp)
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        if other.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return other.with_prec(prec);
        }
        let (ta, tb) = (self.top().unwrap(), other.top().unwrap());
        let guard = prec as i64 + 4;
        if ta - tb > guard {
            return self.with_prec(prec);
        }
        if tb - ta > guard {
            return other.with_prec(prec);
        }
        let exp = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - exp) as usize;
        let b = &other.mant << (other.exp - exp) as usize;
        truncate(a + b, exp, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        truncate(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    /// Panics on division by zero; callers check first.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let want = prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64;
        let shift = want.max(0);
        let q = (&self.mant << shift as usize) / &other.mant;
        truncate(q, self.exp - shift - other.exp, prec)
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self) -> Self {
        self.nth_root(2)
    }

    /// Real `k`-th root of a nonnegative value, truncated.
    pub fn nth_root(&self, k: u32) -> Self {
        assert!(!self.is_negative(), "real root of a negative BigFloat");
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let prec = self.prec;
        let want = (k as i64) * (prec as i64 + 2);
        let mut shift = (want - self.mant.bits() as i64).max(0);
        shift += (self.exp - shift).rem_euclid(k as i64);
        let m = &self.mant << shift as usize;
        let r = m.nth_root(k);
        truncate(r, (self.exp - shift) / k as i64, prec)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 60 {
            let (sign, mag) = self.mant.clone().into_parts();
            let shift = bits - 60;
            (
                BigInt::from_biguint(sign, mag >> shift),
                self.exp + shift as i64,
            )
        } else {
            (self.mant.clone(), self.exp)
        };
        ldexp(m.to_f64().unwrap_or(0.0), e)
    }

    /// Approximate `log2 |self|`; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits();
        let shift = bits.saturating_sub(60);
        let top = (self.mant.abs() >> shift).to_f64().unwrap_or(1.0);
        top.log2() + (self.exp + shift as i64) as f64
    }

    /// Exact value as a rational number.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Decimal rendering with at most `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let mag = self.mant.magnitude().clone();
        let mut e10 = (self.log2_abs() * std::f64::consts::LOG10_2).floor() as i64;
        let scaled = |e10: i64| -> BigUint {
            let k = digits as i64 - 1 - e10;
            let mut num = mag.clone();
            let mut den = BigUint::one();
            if k >= 0 {
                num *= pow10(k as u32);
            } else {
                den *= pow10((-k) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as usize;
            } else {
                den <<= (-self.exp) as usize;
            }
            (num * 2u32 + &den) / (den * 2u32)
        };
        let mut n = scaled(e10);
        if n >= pow10(digits) {
            e10 += 1;
            n = scaled(e10);
        } else if n < pow10(digits - 1) {
            e10 -= 1;
            n = scaled(e10);
        }
        if n >= pow10(digits) {
            // 9.99..95 rounded up to a power of ten
            e10 += 1;
            n = pow10(digits - 1);
        }
        let s = n.to_str_radix(10);
        let sign = if self.is_negative() { "-" } else { "" };
        let body = if (-7..21).contains(&e10) {
            if e10 >= 0 {
                let int_len = e10 as usize + 1;
                if int_len >= s.len() {
                    format!("{}{}", s, "0".repeat(int_len - s.len()))
                } else {
                    let frac = s[int_len..].trim_end_matches('0');
                    if frac.is_empty() {
                        s[..int_len].to_string()
                    } else {
                        format!("{}.{}", &s[..int_len], frac)
                    }
                }
            } else {
                let frac = s.trim_end_matches('0');
                format!("0.{}{}", "0".repeat((-e10 - 1) as usize), frac)
            }
        } else {
            let frac = s[1..].trim_end_matches('0');
            if frac.is_empty() {
                format!("{}e{}", &s[..1], e10)
            } else {
                format!("{}.{}e{}", &s[..1], frac, e10)
            }
        };
        format!("{sign}{body}")
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.top().unwrap(), other.top().unwrap());
        if ta != tb {
            let by_mag = ta.cmp(&tb);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        let exp = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - exp) as usize;
        let b = &other.mant << (other.exp - exp) as usize;
        a.cmp(&b)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2)
            .floor()
            .max(1.0) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}
